#include "bench/bench.hpp"

#include "core/error.hpp"
#include "core/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

namespace graphbench {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string temp_path(const std::string& tag) {
    static std::atomic<uint64_t> counter{0};
    auto dir = std::filesystem::temp_directory_path();
    return (dir / ("graphbench-" + tag + "-" + std::to_string(getpid()) + "-" +
                   std::to_string(counter.fetch_add(1))))
        .string();
}

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    return xs[xs.size() / 2];
}

BenchReport run_pipeline(const std::string& kernel, const CsrGraph& g, const RunOptions& options,
                         double upload_time, Clock::time_point t0) {
    BenchReport report;
    report.kernel = kernel;
    report.threads = options.threads;
    report.repeats = options.repeats;
    report.upload_time_s = upload_time;
    report.n = g.num_vertices();
    report.m = g.num_edges();
    report.dataset = options.dataset_label.empty() && report.n > 0
                         ? dataset_name(report.n, report.m).str()
                         : options.dataset_label;

    try {
        KernelResult result;
        std::vector<double> times;
        times.reserve(static_cast<size_t>(std::max(options.repeats, 1)));
        for (int r = 0; r < std::max(options.repeats, 1); ++r) {
            auto tr = Clock::now();
            result = run_kernel(kernel, g, options.params, options.threads);
            times.push_back(seconds_since(tr));
        }
        report.running_time_s = median(times);
        report.scalar = result.scalar;

        bool temp_result = options.result_path.empty();
        std::string path = temp_result ? temp_path("result") : options.result_path;
        auto tw = Clock::now();
        result.write(path);
        report.write_time_s = seconds_since(tw);
        if (temp_result) std::filesystem::remove(path);

        report.makespan_s = seconds_since(t0);
        report.throughput_eps =
            report.m > 0 ? static_cast<double>(report.m) / report.running_time_s : 0.0;
    } catch (const std::exception& e) {
        report.error = e.what();
        report.makespan_s = seconds_since(t0);
    }
    return report;
}

} // namespace

std::string BenchReport::to_json() const {
    nlohmann::json j;
    j["kernel"] = kernel;
    j["dataset"] = dataset;
    j["threads"] = threads;
    j["repeats"] = repeats;
    j["upload_time_s"] = upload_time_s;
    j["running_time_s"] = running_time_s;
    j["write_time_s"] = write_time_s;
    j["makespan_s"] = makespan_s;
    j["throughput_eps"] = throughput_eps;
    j["n"] = n;
    j["m"] = m;
    if (scalar) j["scalar"] = *scalar;
    if (!error.empty()) j["error"] = error;
    return j.dump();
}

BenchReport run_once(const std::string& kernel, const std::string& graph_path,
                     const RunOptions& options) {
    auto t0 = Clock::now();
    CsrGraph g;
    try {
        EdgeList el = read_edge_list(graph_path, options.format);
        g = build_csr(el);
    } catch (const std::exception& e) {
        BenchReport report;
        report.kernel = kernel;
        report.threads = options.threads;
        report.dataset = options.dataset_label;
        report.error = e.what();
        report.makespan_s = seconds_since(t0);
        return report;
    }
    double upload = seconds_since(t0);
    return run_pipeline(kernel, g, options, upload, t0);
}

BenchReport run_on_graph(const std::string& kernel, const CsrGraph& g, const RunOptions& options) {
    return run_pipeline(kernel, g, options, 0.0, Clock::now());
}

std::string SpeedupTable::to_json() const {
    nlohmann::json j;
    j["kernel"] = kernel;
    j["dataset"] = dataset;
    j["thread_counts"] = thread_counts;
    j["times"] = times;
    j["factors"] = factors;
    j["warnings"] = warnings;
    return j.dump();
}

SpeedupTable speedup_suite(const std::string& kernel, const CsrGraph& g, const KernelParams& params,
                           std::vector<int> thread_counts, bool explicit_counts, int repeats,
                           const std::string& dataset_label) {
    if (thread_counts.empty()) throw invalid_input_error("speedup_suite needs thread counts");
    SpeedupTable table;
    table.kernel = kernel;
    table.dataset = dataset_label.empty() && g.num_vertices() > 0
                        ? dataset_name(g.num_vertices(), g.num_edges()).str()
                        : dataset_label;

    int cores = hardware_threads();
    int max_requested = *std::max_element(thread_counts.begin(), thread_counts.end());
    if (max_requested > cores) {
        if (explicit_counts) {
            table.warnings.push_back("thread counts exceed " + std::to_string(cores) +
                                     " logical cores; running oversubscribed");
        } else {
            table.warnings.push_back("truncating default thread counts to " + std::to_string(cores) +
                                     " logical cores");
            std::erase_if(thread_counts, [cores](int t) { return t > cores; });
            if (thread_counts.empty()) thread_counts.push_back(cores);
        }
    }

    for (int t : thread_counts) {
        std::vector<double> times;
        for (int r = 0; r < std::max(repeats, 1); ++r) {
            auto tr = Clock::now();
            run_kernel(kernel, g, params, t);
            times.push_back(seconds_since(tr));
        }
        table.thread_counts.push_back(t);
        table.times.push_back(median(times));
    }
    for (double t : table.times) table.factors.push_back(table.times.front() / t);
    return table;
}

std::string StressRow::to_json() const {
    nlohmann::json j;
    j["dataset"] = dataset;
    j["outcome"] = outcome;
    if (!reason.empty()) j["reason"] = reason;
    if (peak_memory_bytes > 0) j["peak_memory_bytes"] = peak_memory_bytes;
    if (running_time_s > 0) j["running_time_s"] = running_time_s;
    return j.dump();
}

namespace {

// Child side of one stress rung: build the graph, run the kernel once, leave
// a result file for the parent. Exit codes: 0 ok, 3 oom, 4 other error.
[[noreturn]] void stress_child(const std::string& kernel, const KernelParams& params,
                               const StressRung& rung, int threads, uint64_t cap_bytes,
                               const std::string& result_file) {
    if (cap_bytes > 0) {
        struct rlimit rl{cap_bytes, cap_bytes};
        setrlimit(RLIMIT_AS, &rl);
    }
    try {
        CsrGraph g;
        if (!rung.file.empty()) {
            g = build_csr(read_edge_list(rung.file, rung.format));
        } else if (rung.gen) {
            g = build_csr(generate(*rung.gen).edges);
        } else {
            throw invalid_input_error("stress rung has neither file nor generator config");
        }
        auto t0 = Clock::now();
        run_kernel(kernel, g, params, threads);
        double secs = seconds_since(t0);

        struct rusage ru{};
        getrusage(RUSAGE_SELF, &ru);
        nlohmann::json j;
        j["dataset"] = dataset_name(g.num_vertices(), g.num_edges()).str();
        j["running_time_s"] = secs;
        j["peak_memory_bytes"] = static_cast<uint64_t>(ru.ru_maxrss) * 1024;
        std::ofstream out(result_file);
        out << j.dump();
        out.close();
        _exit(0);
    } catch (const std::bad_alloc&) {
        _exit(3);
    } catch (const std::exception& e) {
        std::ofstream out(result_file);
        out << nlohmann::json{{"error", e.what()}}.dump();
        out.close();
        _exit(4);
    }
}

} // namespace

std::vector<StressRow> stress_ladder(const std::string& kernel, const KernelParams& params,
                                     const std::vector<StressRung>& rungs, int threads,
                                     uint64_t cap_bytes, double timeout_s) {
    if (cap_bytes == 0) {
        if (const char* env = std::getenv("GRAPHBENCH_MEM_CAP"))
            cap_bytes = std::strtoull(env, nullptr, 10);
    }

    std::vector<StressRow> rows;
    bool failed = false;
    for (const StressRung& rung : rungs) {
        StressRow row;
        row.dataset = rung.label;
        if (failed) {
            row.outcome = "not-attempted";
            rows.push_back(row);
            continue;
        }

        std::string result_file = temp_path("stress");
        pid_t pid = fork();
        if (pid < 0) throw io_error("fork failed for stress rung");
        if (pid == 0) stress_child(kernel, params, rung, threads, cap_bytes, result_file);

        auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                           std::chrono::duration<double>(timeout_s));
        int status = 0;
        bool done = false, timed_out = false;
        while (!done) {
            pid_t r = waitpid(pid, &status, WNOHANG);
            if (r == pid) {
                done = true;
            } else if (Clock::now() >= deadline) {
                kill(pid, SIGKILL);
                waitpid(pid, &status, 0);
                done = true;
                timed_out = true;
            } else {
                usleep(20000);
            }
        }

        if (timed_out) {
            row.outcome = "fail";
            row.reason = "timeout";
        } else if (WIFEXITED(status) && WEXITSTATUS(status) == 0) {
            row.outcome = "pass";
            std::ifstream in(result_file);
            if (in) {
                nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
                if (!j.is_discarded()) {
                    row.dataset = j.value("dataset", row.dataset);
                    row.running_time_s = j.value("running_time_s", 0.0);
                    row.peak_memory_bytes = j.value("peak_memory_bytes", uint64_t{0});
                }
            }
        } else if (WIFEXITED(status) && WEXITSTATUS(status) == 3) {
            row.outcome = "fail";
            row.reason = "oom";
        } else if (WIFEXITED(status)) {
            row.outcome = "fail";
            row.reason = "error";
            std::ifstream in(result_file);
            if (in) {
                nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
                if (!j.is_discarded() && j.contains("error"))
                    row.reason = "error:" + j["error"].get<std::string>();
            }
        } else if (WIFSIGNALED(status)) {
            row.outcome = "fail";
            // RLIMIT_AS usually surfaces as bad_alloc, but the OOM killer sends
            // SIGKILL; treat either as an out-of-memory outcome.
            row.reason = WTERMSIG(status) == SIGKILL ? "oom"
                                                     : "killed:" + std::to_string(WTERMSIG(status));
        } else {
            row.outcome = "fail";
            row.reason = "unknown";
        }
        std::filesystem::remove(result_file);
        if (row.outcome != "pass") failed = true;
        rows.push_back(row);
    }
    return rows;
}

std::vector<StressRung> parse_stress_ladder(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open ladder file: " + path);
    std::vector<StressRung> rungs;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        StressRung rung;
        rung.label = line.substr(first);
        GeneratorConfig gen;
        bool has_gen_keys = false;

        size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
            size_t end = pos;
            while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
            if (end == pos) break;
            std::string token = line.substr(pos, end - pos);
            pos = end;
            size_t eq = token.find('=');
            if (eq == std::string::npos)
                throw parse_error(path + ":" + std::to_string(lineno) + ": expected key=value, got \"" +
                                      token + "\"",
                                  lineno);
            std::string key = token.substr(0, eq), value = token.substr(eq + 1);
            if (key == "file")
                rung.file = value;
            else if (key == "format")
                rung.format = format_from_str(value);
            else if (key == "n") {
                gen.n = std::strtoull(value.c_str(), nullptr, 10);
                has_gen_keys = true;
            } else if (key == "alpha") {
                gen.alpha = std::strtod(value.c_str(), nullptr);
                has_gen_keys = true;
            } else if (key == "seed") {
                gen.seed = std::strtoull(value.c_str(), nullptr, 10);
                has_gen_keys = true;
            } else if (key == "target-diameter") {
                gen.target_diameter = std::strtoull(value.c_str(), nullptr, 10);
                has_gen_keys = true;
            } else if (key == "group-diameter") {
                gen.group_diameter_const = static_cast<int>(std::strtol(value.c_str(), nullptr, 10));
                has_gen_keys = true;
            } else if (key == "degree-dist") {
                gen.degree_limits = DegreeLimitSpec::parse(value);
                has_gen_keys = true;
            } else {
                throw parse_error(path + ":" + std::to_string(lineno) + ": unknown ladder key \"" +
                                      key + "\"",
                                  lineno);
            }
        }
        if (rung.file.empty()) {
            if (!has_gen_keys)
                throw parse_error(path + ":" + std::to_string(lineno) + ": rung needs file= or n=/alpha=",
                                  lineno);
            gen.validate();
            rung.gen = gen;
        }
        rungs.push_back(std::move(rung));
    }
    return rungs;
}

std::string ImpactMatrix::to_json() const {
    nlohmann::json j;
    j["kernels"] = kernels;
    j["datasets"] = datasets;
    auto rows = nlohmann::json::array();
    for (const auto& row : cells) {
        auto cols = nlohmann::json::array();
        for (const auto& cell : row) cols.push_back(nlohmann::json::parse(cell.to_json()));
        rows.push_back(cols);
    }
    j["cells"] = rows;
    return j.dump();
}

std::string ImpactMatrix::to_csv() const {
    std::string out = "kernel,dataset,threads,upload_time_s,running_time_s,makespan_s,throughput_eps,error\n";
    char buf[512];
    for (const auto& row : cells) {
        for (const auto& c : row) {
            std::snprintf(buf, sizeof buf, "%s,%s,%d,%.9g,%.9g,%.9g,%.9g,%s\n", c.kernel.c_str(),
                          c.dataset.c_str(), c.threads, c.upload_time_s, c.running_time_s,
                          c.makespan_s, c.throughput_eps, c.error.c_str());
            out += buf;
        }
    }
    return out;
}

ImpactMatrix impact_matrix(const std::vector<std::string>& kernels,
                           const std::vector<std::pair<std::string, std::string>>& graphs,
                           const KernelParams& params, int threads, int repeats) {
    ImpactMatrix matrix;
    matrix.kernels = kernels;
    for (const auto& [label, path] : graphs) matrix.datasets.push_back(label);
    for (const std::string& kernel : kernels) {
        std::vector<BenchReport> row;
        for (const auto& [label, path] : graphs) {
            RunOptions options;
            options.threads = threads;
            options.repeats = repeats;
            options.params = params;
            options.format = sniff_format(path);
            options.dataset_label = label;
            row.push_back(run_once(kernel, path, options));
        }
        matrix.cells.push_back(std::move(row));
    }
    return matrix;
}

} // namespace graphbench
