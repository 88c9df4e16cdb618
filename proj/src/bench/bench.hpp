#pragma once

#include "core/dataset.hpp"
#include "core/graph.hpp"
#include "core/io.hpp"
#include "gen/generator.hpp"
#include "kernels/kernels.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace graphbench {

struct BenchReport {
    std::string kernel;
    std::string dataset;
    int threads = 1;
    int repeats = 1;
    double upload_time_s = 0.0;  // read + CSR build
    double running_time_s = 0.0; // kernel only, median over repeats
    double write_time_s = 0.0;   // result serialization
    double makespan_s = 0.0;     // end to end, including all repeats and the result write
    double throughput_eps = 0.0; // m / running_time_s, 0 for empty graphs
    uint64_t n = 0;
    uint64_t m = 0;
    std::optional<uint64_t> scalar; // TC/KC count
    std::string error;              // nonempty = failed run; timings best-effort

    std::string to_json() const;
};

struct RunOptions {
    int threads = 1;
    int repeats = 3;
    KernelParams params;
    FileFormat format = FileFormat::Text;
    std::string dataset_label; // default: derived S<scale>-Std from n + m
    std::string result_path;   // default: temp file, removed afterwards
};

// Failures surface in report.error, never as an exception.
BenchReport run_once(const std::string& kernel, const std::string& graph_path,
                     const RunOptions& options);

// Same pipeline for a graph already in memory (upload_time_s = 0).
BenchReport run_on_graph(const std::string& kernel, const CsrGraph& g, const RunOptions& options);

struct SpeedupTable {
    std::string kernel;
    std::string dataset;
    std::vector<int> thread_counts;
    std::vector<double> times;   // median kernel seconds per count
    std::vector<double> factors; // times[0] / times[i]
    std::vector<std::string> warnings;

    std::string to_json() const;
};

// Thread-scaling sweep over one loaded graph. A defaulted count list is
// truncated to the hardware's logical cores; an explicit list runs as given
// (a warning notes oversubscription either way).
SpeedupTable speedup_suite(const std::string& kernel, const CsrGraph& g, const KernelParams& params,
                           std::vector<int> thread_counts = {1, 2, 4, 8, 16, 32},
                           bool explicit_counts = false, int repeats = 3,
                           const std::string& dataset_label = "");

struct StressRung {
    std::string label;         // used when the rung fails before its size is known
    std::string file;          // load this path when nonempty ...
    FileFormat format = FileFormat::Text;
    std::optional<GeneratorConfig> gen; // ... otherwise generate
};

struct StressRow {
    std::string dataset;
    std::string outcome; // pass | fail | not-attempted
    std::string reason;  // oom | timeout | killed:<sig> | error:<what>
    uint64_t peak_memory_bytes = 0;
    double running_time_s = 0.0;

    std::string to_json() const;
};

// Each rung runs in a forked child under an optional RLIMIT_AS cap, so an OOM
// kill never takes down the harness. Stops at the first failure; later rungs
// are reported as not-attempted. cap_bytes = 0 reads GRAPHBENCH_MEM_CAP (also
// bytes; unset means unlimited).
std::vector<StressRow> stress_ladder(const std::string& kernel, const KernelParams& params,
                                     const std::vector<StressRung>& rungs, int threads,
                                     uint64_t cap_bytes = 0, double timeout_s = 300.0);

// Ladder file: one rung per line, `#` comments. Either `file=PATH
// [format=text|binary]` or generator keys `n=N alpha=A [seed=S]
// [target-diameter=D] [group-diameter=G] [degree-dist=SPEC]`.
std::vector<StressRung> parse_stress_ladder(const std::string& path);

struct ImpactMatrix {
    std::vector<std::string> kernels;
    std::vector<std::string> datasets;
    std::vector<std::vector<BenchReport>> cells; // [kernel][dataset]

    std::string to_json() const;
    std::string to_csv() const;
};

// Full kernel x dataset grid; per-cell failures are recorded and the grid
// completes.
ImpactMatrix impact_matrix(const std::vector<std::string>& kernels,
                           const std::vector<std::pair<std::string, std::string>>& graphs,
                           const KernelParams& params, int threads, int repeats = 3);

} // namespace graphbench
