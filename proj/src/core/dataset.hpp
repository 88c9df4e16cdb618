#pragma once

#include <cstdint>
#include <string>

namespace graphbench {

enum class DatasetVariant { Std, Dense, Diam };

// Size-scale naming: scale = log10(n + m) rounded to the nearest 0.5,
// rendered as e.g. "S8-Std" or "S9.5-Diam".
struct DatasetName {
    double scale = 0.0;
    DatasetVariant variant = DatasetVariant::Std;

    std::string str() const;
};

DatasetName dataset_name(uint64_t n, uint64_t m, DatasetVariant variant = DatasetVariant::Std);

const char* variant_str(DatasetVariant v);
DatasetVariant variant_from_str(const std::string& s); // throws invalid_input_error

} // namespace graphbench
