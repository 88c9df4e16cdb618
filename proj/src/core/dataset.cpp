#include "core/dataset.hpp"

#include "core/error.hpp"

#include <cmath>
#include <cstdio>

namespace graphbench {

const char* variant_str(DatasetVariant v) {
    switch (v) {
    case DatasetVariant::Std: return "Std";
    case DatasetVariant::Dense: return "Dense";
    case DatasetVariant::Diam: return "Diam";
    }
    return "Std";
}

DatasetVariant variant_from_str(const std::string& s) {
    if (s == "Std" || s == "std") return DatasetVariant::Std;
    if (s == "Dense" || s == "dense") return DatasetVariant::Dense;
    if (s == "Diam" || s == "diam") return DatasetVariant::Diam;
    throw invalid_input_error("unknown dataset variant: " + s);
}

DatasetName dataset_name(uint64_t n, uint64_t m, DatasetVariant variant) {
    if (n < 1) throw invalid_input_error("dataset_name requires n >= 1");
    double scale = std::floor(std::log10(static_cast<double>(n + m)) * 2.0 + 0.5) / 2.0;
    return DatasetName{scale, variant};
}

std::string DatasetName::str() const {
    char buf[32];
    if (scale == std::floor(scale))
        std::snprintf(buf, sizeof buf, "S%d", static_cast<int>(scale));
    else
        std::snprintf(buf, sizeof buf, "S%.1f", scale);
    return std::string(buf) + "-" + variant_str(variant);
}

} // namespace graphbench
