// graphbench CLI: generate / stats / bench / compare / rerun, all driven
// through the public C API. Exit codes: 0 success, 1 runtime or data error,
// 2 usage error.

#include <graphbench.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <cstring>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace {

using Options = std::map<std::string, std::string>;

struct cli_error : std::runtime_error {
    int code;
    cli_error(int code, const std::string& what) : std::runtime_error(what), code(code) {}
};

void check(gb_status status) {
    if (status != GB_OK) throw cli_error(1, gb_last_error());
}

std::string utc_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

uint64_t to_u64(const Options& opts, const std::string& key) {
    return std::strtoull(opts.at(key).c_str(), nullptr, 10);
}

double to_double(const Options& opts, const std::string& key) {
    return std::strtod(opts.at(key).c_str(), nullptr);
}

bool to_bool(const Options& opts, const std::string& key) { return opts.at(key) == "1"; }

gb_format parse_format(const std::string& s) {
    if (s == "text") return GB_FORMAT_TEXT;
    if (s == "binary") return GB_FORMAT_BINARY;
    throw cli_error(2, "unknown format \"" + s + "\" (expected text|binary)");
}

// "constant:K" or "powerlaw:EXP,MIN,MAX" (max 0 = n/100).
void apply_degree_dist(const std::string& text, int32_t& kind, uint64_t& constant,
                       double& exponent, uint64_t& min_deg, uint64_t& max_deg) {
    unsigned long long a = 0, b = 0, c = 0;
    double e = 0.0;
    char tail[2];
    if (std::sscanf(text.c_str(), "constant:%llu %1s", &a, tail) == 1) {
        kind = GB_DEGREE_CONSTANT;
        constant = a;
        return;
    }
    if (std::sscanf(text.c_str(), "powerlaw:%lf,%llu,%llu %1s", &e, &b, &c, tail) == 3) {
        kind = GB_DEGREE_POWER_LAW;
        exponent = e;
        min_deg = b;
        max_deg = c;
        return;
    }
    throw cli_error(2, "bad --degree-dist \"" + text + "\" (expected constant:K or powerlaw:EXP,MIN,MAX)");
}

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { gb_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw cli_error(1, "cannot write " + path);
    out << content;
}

void write_manifest(const std::string& command, const Options& opts,
                    const std::map<std::string, std::string>& outputs, const std::string& started) {
    auto it = opts.find("out");
    if (it == opts.end() || it->second.empty()) return;
    nlohmann::json j;
    j["command"] = command;
    j["version"] = gb_version();
    j["started_utc"] = started;
    j["finished_utc"] = utc_now();
    Options resolved = opts;
    resolved.erase("config"); // manifests carry resolved values, not the file
    j["config"] = resolved;
    j["outputs"] = outputs;
    write_file(it->second + ".manifest.json", j.dump(2) + "\n");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text << "\n";
    else
        write_file(out_path, text + "\n");
}

// Flat key=value config file; values fill in whatever the command line left
// at its default.
void apply_config_file(CLI::App* sub, Options& opts) {
    const std::string& path = opts.at("config");
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw cli_error(1, "cannot read config file " + path);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        size_t eq = line.find('=', first);
        if (eq == std::string::npos)
            throw cli_error(2, path + ":" + std::to_string(lineno) + ": expected key=value");
        std::string key = line.substr(first, eq - first);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        std::string value = line.substr(eq + 1);
        size_t vstart = value.find_first_not_of(" \t");
        value = vstart == std::string::npos ? "" : value.substr(vstart);
        while (!value.empty() && (value.back() == ' ' || value.back() == '\t' || value.back() == '\r'))
            value.pop_back();
        if (!opts.count(key))
            throw cli_error(2, path + ":" + std::to_string(lineno) + ": unknown key \"" + key + "\"");
        const CLI::Option* flag = sub->get_option_no_throw("--" + key);
        if (flag && flag->count() > 0) continue; // explicit flags win
        opts[key] = value;
    }
}

std::vector<int32_t> parse_thread_list(const std::string& text) {
    std::vector<int32_t> counts;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        counts.push_back(static_cast<int32_t>(std::strtol(text.substr(pos, comma - pos).c_str(),
                                                          nullptr, 10)));
        pos = comma + 1;
    }
    if (counts.empty()) throw cli_error(2, "empty --threads list");
    for (int32_t t : counts)
        if (t < 1) throw cli_error(2, "thread counts must be >= 1");
    return counts;
}

// ---------------------------------------------------------------- generate

int cmd_generate(const Options& opts) {
    std::string started = utc_now();
    bool ldbc = to_bool(opts, "ldbc-reference");
    if (ldbc && to_u64(opts, "target-diameter") > 0)
        throw cli_error(2, "--target-diameter conflicts with --ldbc-reference");
    if (ldbc && to_bool(opts, "weighted"))
        throw cli_error(2, "--weighted conflicts with --ldbc-reference");

    gb_edgelist* edges = nullptr;
    OwnedString report;
    if (ldbc) {
        gb_ldbc_config config;
        gb_ldbc_config_init(&config);
        config.n = to_u64(opts, "n");
        config.p = to_double(opts, "p");
        config.p_limit = to_double(opts, "p-limit");
        config.seed = to_u64(opts, "seed");
        apply_degree_dist(opts.at("degree-dist"), config.degree_kind, config.degree_constant,
                          config.degree_exponent, config.degree_min, config.degree_max);
        check(gb_generate_ldbc(&config, &edges, &report.ptr));
    } else {
        gb_gen_config config;
        gb_gen_config_init(&config);
        config.n = to_u64(opts, "n");
        config.alpha = to_double(opts, "alpha");
        config.target_diameter = to_u64(opts, "target-diameter");
        config.group_diameter_const = static_cast<int32_t>(to_u64(opts, "group-diameter"));
        config.seed = to_u64(opts, "seed");
        config.random_weights = to_bool(opts, "weighted") ? 1 : 0;
        config.threads = to_bool(opts, "deterministic")
                             ? 1
                             : static_cast<int32_t>(to_u64(opts, "gen-threads"));
        apply_degree_dist(opts.at("degree-dist"), config.degree_kind, config.degree_constant,
                          config.degree_exponent, config.degree_min, config.degree_max);
        check(gb_generate(&config, &edges, &report.ptr));
    }
    auto edges_guard = std::unique_ptr<gb_edgelist, void (*)(gb_edgelist*)>(edges, &gb_edgelist_free);

    const std::string& out = opts.at("out");
    if (out.empty()) throw cli_error(2, "--out is required");
    check(gb_edgelist_write(edges, out.c_str(), parse_format(opts.at("format"))));
    write_file(out + ".report.json", report.str() + "\n");

    const char* variant = to_u64(opts, "target-diameter") > 0 ? "Diam"
                          : to_double(opts, "alpha") >= 1000.0 ? "Dense"
                                                               : "Std";
    char name[64];
    check(gb_dataset_name(gb_edgelist_num_vertices(edges), gb_edgelist_num_edges(edges), variant,
                          name, sizeof name));
    write_manifest("generate", opts,
                   {{"edge_list", out}, {"report", out + ".report.json"}}, started);
    std::printf("%s n=%" PRIu64 " m=%" PRIu64 "\n", name, gb_edgelist_num_vertices(edges),
                gb_edgelist_num_edges(edges));
    return 0;
}

// ---------------------------------------------------------------- stats

int cmd_stats(const Options& opts) {
    std::string started = utc_now();
    gb_edgelist* edges = nullptr;
    check(gb_edgelist_read(opts.at("in").c_str(), parse_format(opts.at("format")), &edges));
    auto edges_guard = std::unique_ptr<gb_edgelist, void (*)(gb_edgelist*)>(edges, &gb_edgelist_free);
    gb_graph* graph = nullptr;
    check(gb_graph_build(edges, &graph));
    auto graph_guard = std::unique_ptr<gb_graph, void (*)(gb_graph*)>(graph, &gb_graph_free);

    OwnedString stats_json;
    check(gb_graph_stats(graph, &stats_json.ptr));
    nlohmann::json combined = nlohmann::json::parse(stats_json.str());

    const std::string& communities = opts.at("communities");
    if (!communities.empty()) {
        uint64_t n = gb_graph_num_vertices(graph);
        std::vector<uint64_t> assignment(n);
        if (communities == "groups") {
            uint64_t group_size = to_u64(opts, "group-size");
            if (group_size == 0)
                throw cli_error(2, "--communities groups requires --group-size");
            for (uint64_t v = 0; v < n; ++v) assignment[v] = v / group_size;
        } else if (communities == "lpa") {
            gb_kernel_params params;
            gb_kernel_params_init(&params);
            gb_result* labels = nullptr;
            check(gb_run_kernel(graph, "lpa", &params, 0, &labels));
            auto guard = std::unique_ptr<gb_result, void (*)(gb_result*)>(labels, &gb_result_free);
            const double* values = gb_result_values(labels);
            for (uint64_t v = 0; v < n; ++v) assignment[v] = static_cast<uint64_t>(values[v]);
        } else {
            throw cli_error(2, "--communities must be lpa or groups");
        }
        OwnedString comm_json;
        check(gb_community_stats(graph, assignment.data(), n, opts.at("bridge-def").c_str(), 0,
                                 &comm_json.ptr));
        combined["communities"] = nlohmann::json::parse(comm_json.str())["communities"];
        if (!opts.at("csv").empty()) {
            OwnedString csv;
            check(gb_community_stats(graph, assignment.data(), n, opts.at("bridge-def").c_str(), 1,
                                     &csv.ptr));
            write_file(opts.at("csv"), csv.str());
        }
    }
    emit(combined.dump(), opts.at("out"));
    if (!opts.at("out").empty())
        write_manifest("stats", opts, {{"stats", opts.at("out")}}, started);
    return 0;
}

// ---------------------------------------------------------------- bench

int cmd_bench(const Options& opts) {
    std::string started = utc_now();
    gb_kernel_params params;
    gb_kernel_params_init(&params);
    params.max_iters = static_cast<int32_t>(to_u64(opts, "iters"));
    params.source = to_u64(opts, "source");
    params.k = static_cast<int32_t>(to_u64(opts, "k"));
    params.damping = to_double(opts, "damping");
    int32_t repeats = static_cast<int32_t>(to_u64(opts, "repeat"));
    gb_format format = parse_format(opts.at("format"));

    static const std::vector<std::string> all_kernels = {"pr",  "lpa", "sssp", "wcc",
                                                         "bc",  "cd",  "tc",   "kc"};
    const std::string& kernel = opts.at("kernel");
    std::vector<std::string> kernels;
    if (kernel == "all")
        kernels = all_kernels;
    else if (std::find(all_kernels.begin(), all_kernels.end(), kernel) != all_kernels.end())
        kernels = {kernel};
    else
        throw cli_error(2, "unknown kernel \"" + kernel + "\" (expected pr|lpa|sssp|wcc|bc|cd|tc|kc|all)");

    std::map<std::string, std::string> outputs;
    std::string lines;

    if (to_bool(opts, "stress")) {
        if (opts.at("ladder").empty()) throw cli_error(2, "--stress requires --ladder FILE");
        if (kernels.size() != 1) throw cli_error(2, "--stress takes a single kernel");
        OwnedString rows;
        check(gb_bench_stress(kernels[0].c_str(), &params, opts.at("ladder").c_str(),
                              static_cast<int32_t>(to_u64(opts, "stress-threads")),
                              to_u64(opts, "mem-cap"), to_double(opts, "timeout"), &rows.ptr));
        lines = rows.str();
        std::fputs(lines.c_str(), stdout);
    } else if (to_bool(opts, "speedup")) {
        if (kernels.size() != 1) throw cli_error(2, "--speedup takes a single kernel");
        bool explicit_counts = !opts.at("threads").empty();
        std::vector<int32_t> counts =
            explicit_counts ? parse_thread_list(opts.at("threads"))
                            : std::vector<int32_t>{1, 2, 4, 8, 16, 32};
        OwnedString table;
        check(gb_bench_speedup(opts.at("in").c_str(), format, kernels[0].c_str(), &params,
                               counts.data(), counts.size(), explicit_counts ? 1 : 0, repeats,
                               &table.ptr));
        lines = table.str() + "\n";
        std::fputs(lines.c_str(), stdout);
    } else if (!opts.at("impact").empty()) {
        // label=path trio (or any list) for the kernel x dataset grid.
        std::vector<std::string> labels, paths;
        std::string spec = opts.at("impact");
        size_t pos = 0;
        while (pos < spec.size()) {
            size_t comma = spec.find(',', pos);
            if (comma == std::string::npos) comma = spec.size();
            std::string part = spec.substr(pos, comma - pos);
            size_t eq = part.find('=');
            if (eq == std::string::npos)
                throw cli_error(2, "--impact expects LABEL=PATH[,LABEL=PATH...]");
            labels.push_back(part.substr(0, eq));
            paths.push_back(part.substr(eq + 1));
            pos = comma + 1;
        }
        std::vector<const char*> kernel_ptrs, label_ptrs, path_ptrs;
        for (const auto& k : kernels) kernel_ptrs.push_back(k.c_str());
        for (const auto& l : labels) label_ptrs.push_back(l.c_str());
        for (const auto& p : paths) path_ptrs.push_back(p.c_str());
        int32_t threads = opts.at("threads").empty() ? 1 : parse_thread_list(opts.at("threads"))[0];
        OwnedString matrix;
        check(gb_bench_impact(kernel_ptrs.data(), kernel_ptrs.size(), label_ptrs.data(),
                              path_ptrs.data(), paths.size(), &params, threads, repeats,
                              opts.at("csv").empty() ? 0 : 1, &matrix.ptr));
        if (!opts.at("csv").empty()) {
            write_file(opts.at("csv"), matrix.str());
            outputs["csv"] = opts.at("csv");
        } else {
            lines = matrix.str() + "\n";
            std::fputs(lines.c_str(), stdout);
        }
    } else {
        if (opts.at("in").empty()) throw cli_error(2, "--in is required");
        std::vector<int32_t> counts = opts.at("threads").empty()
                                          ? std::vector<int32_t>{1}
                                          : parse_thread_list(opts.at("threads"));
        for (const std::string& k : kernels) {
            for (int32_t threads : counts) {
                std::string result_path = opts.at("result-out");
                if (!result_path.empty() && (kernels.size() > 1 || counts.size() > 1))
                    result_path += "-" + k + "-t" + std::to_string(threads);
                OwnedString report;
                check(gb_bench_run(opts.at("in").c_str(), format, k.c_str(), &params, threads,
                                   repeats, opts.at("dataset-label").c_str(),
                                   result_path.empty() ? nullptr : result_path.c_str(),
                                   &report.ptr));
                lines += report.str() + "\n";
                std::printf("%s\n", report.str().c_str());
            }
        }
    }

    if (!opts.at("out").empty()) {
        write_file(opts.at("out"), lines);
        outputs["report"] = opts.at("out");
        write_manifest("bench", opts, outputs, started);
    }
    return 0;
}

// ---------------------------------------------------------------- compare

int cmd_compare(const Options& opts) {
    std::string started = utc_now();
    auto load = [&](const std::string& path, const std::string& format) {
        gb_edgelist* edges = nullptr;
        check(gb_edgelist_read(path.c_str(), parse_format(format), &edges));
        auto guard = std::unique_ptr<gb_edgelist, void (*)(gb_edgelist*)>(edges, &gb_edgelist_free);
        gb_graph* graph = nullptr;
        check(gb_graph_build(edges, &graph));
        return graph;
    };
    auto a = std::unique_ptr<gb_graph, void (*)(gb_graph*)>(
        load(opts.at("a"), opts.at("format-a")), &gb_graph_free);
    auto b = std::unique_ptr<gb_graph, void (*)(gb_graph*)>(
        load(opts.at("b"), opts.at("format-b")), &gb_graph_free);
    OwnedString report;
    check(gb_similarity_report(a.get(), b.get(), opts.at("method").c_str(), &report.ptr));
    emit(report.str(), opts.at("out"));
    if (!opts.at("out").empty())
        write_manifest("compare", opts, {{"report", opts.at("out")}}, started);
    return 0;
}

// ---------------------------------------------------------------- rerun

int dispatch(const std::string& command, const Options& opts);

int cmd_rerun(const Options& rerun_opts) {
    std::ifstream in(rerun_opts.at("manifest"));
    if (!in) throw cli_error(1, "cannot read manifest " + rerun_opts.at("manifest"));
    nlohmann::json manifest = nlohmann::json::parse(in, nullptr, false);
    if (manifest.is_discarded() || !manifest.contains("command") || !manifest.contains("config"))
        throw cli_error(1, "malformed manifest " + rerun_opts.at("manifest"));
    Options opts;
    for (auto& [key, value] : manifest["config"].items()) opts[key] = value.get<std::string>();
    if (!rerun_opts.at("out").empty()) opts["out"] = rerun_opts.at("out");
    return dispatch(manifest["command"].get<std::string>(), opts);
}

int dispatch(const std::string& command, const Options& opts) {
    if (command == "generate") return cmd_generate(opts);
    if (command == "stats") return cmd_stats(opts);
    if (command == "bench") return cmd_bench(opts);
    if (command == "compare") return cmd_compare(opts);
    throw cli_error(1, "manifest names unknown command \"" + command + "\"");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graphbench: synthetic graph generation and kernel benchmarking"};
    app.require_subcommand(1);

    Options gen{{"n", "0"},           {"alpha", "10"},       {"target-diameter", "0"},
                {"group-diameter", "6"}, {"degree-dist", ""},   {"seed", "1"},
                {"out", ""},          {"format", "text"},    {"ldbc-reference", "0"},
                {"p", "0.95"},        {"p-limit", "0.2"},    {"weighted", "0"},
                {"gen-threads", "1"}, {"deterministic", "1"}};
    gen["config"] = "";
    auto* sub_gen = app.add_subcommand("generate", "Generate a synthetic graph");
    sub_gen->add_option("--config", gen["config"], "flat key=value config file");
    sub_gen->add_option("--n", gen["n"], "vertex count");
    sub_gen->add_option("--alpha", gen["alpha"], "density factor (>= 1)");
    sub_gen->add_option("--target-diameter", gen["target-diameter"],
                        "group the vertices to hit this pseudo-diameter (0 = off)");
    sub_gen->add_option("--group-diameter", gen["group-diameter"],
                        "assumed per-group diameter for the grouping arithmetic");
    sub_gen->add_option("--degree-dist", gen["degree-dist"],
                        "constant:K or powerlaw:EXP,MIN,MAX (default powerlaw:2.2,2,0; max 0 = n/100)");
    sub_gen->add_option("--seed", gen["seed"], "RNG seed");
    sub_gen->add_option("--out", gen["out"], "output edge list path");
    sub_gen->add_option("--format", gen["format"], "text|binary");
    sub_gen->add_flag("--ldbc-reference{1}", gen["ldbc-reference"],
                      "use the sequential-trial reference sampler");
    sub_gen->add_option("--p", gen["p"], "reference sampler base probability");
    sub_gen->add_option("--p-limit", gen["p-limit"], "reference sampler probability floor");
    sub_gen->add_flag("--weighted{1}", gen["weighted"], "uniform (0,1] edge weights");
    sub_gen->add_option("--gen-threads", gen["gen-threads"], "generation workers (needs --no-deterministic)");
    sub_gen->add_flag("--deterministic{1},--no-deterministic{0}", gen["deterministic"],
                      "single-threaded reference mode (default on)");

    Options stats{{"in", ""},          {"format", "text"}, {"communities", ""},
                  {"group-size", "0"}, {"bridge-def", "bridges"}, {"csv", ""},
                  {"out", ""}};
    stats["config"] = "";
    auto* sub_stats = app.add_subcommand("stats", "Dataset characteristics");
    sub_stats->add_option("--config", stats["config"], "flat key=value config file");
    sub_stats->add_option("--in", stats["in"], "input edge list");
    sub_stats->add_option("--format", stats["format"], "text|binary");
    sub_stats->add_option("--communities", stats["communities"],
                          "add per-community stats: lpa or groups");
    sub_stats->add_option("--group-size", stats["group-size"],
                          "group size for --communities groups");
    sub_stats->add_option("--bridge-def", stats["bridge-def"], "bridges|cutfraction");
    sub_stats->add_option("--csv", stats["csv"], "also write per-community CSV here");
    sub_stats->add_option("--out", stats["out"], "write JSON here instead of stdout");

    Options bench{{"in", ""},        {"format", "text"},  {"kernel", "pr"},
                  {"threads", ""},   {"repeat", "3"},     {"iters", "10"},
                  {"source", "0"},   {"k", "5"},          {"damping", "0.85"},
                  {"speedup", "0"},  {"stress", "0"},     {"ladder", ""},
                  {"mem-cap", "0"},  {"timeout", "300"},  {"stress-threads", "1"},
                  {"impact", ""},    {"csv", ""},         {"dataset-label", ""},
                  {"result-out", ""}, {"out", ""}};
    bench["config"] = "";
    auto* sub_bench = app.add_subcommand("bench", "Run benchmark kernels");
    sub_bench->add_option("--config", bench["config"], "flat key=value config file");
    sub_bench->add_option("--in", bench["in"], "input edge list");
    sub_bench->add_option("--format", bench["format"], "text|binary");
    sub_bench->add_option("--kernel", bench["kernel"], "pr|lpa|sssp|wcc|bc|cd|tc|kc|all");
    sub_bench->add_option("--threads", bench["threads"], "comma-separated worker counts");
    sub_bench->add_option("--repeat", bench["repeat"], "kernel repetitions per cell (median)");
    sub_bench->add_option("--iters", bench["iters"], "PR/LPA iterations");
    sub_bench->add_option("--source", bench["source"], "SSSP/BC source vertex");
    sub_bench->add_option("--k", bench["k"], "clique size for kc");
    sub_bench->add_option("--damping", bench["damping"], "PR damping");
    sub_bench->add_flag("--speedup{1}", bench["speedup"], "thread-scaling table");
    sub_bench->add_flag("--stress{1}", bench["stress"], "stress ladder mode");
    sub_bench->add_option("--ladder", bench["ladder"], "stress ladder file");
    sub_bench->add_option("--mem-cap", bench["mem-cap"],
                          "stress memory cap in bytes (0 = GRAPHBENCH_MEM_CAP)");
    sub_bench->add_option("--timeout", bench["timeout"], "stress timeout seconds");
    sub_bench->add_option("--stress-threads", bench["stress-threads"], "worker threads per rung");
    sub_bench->add_option("--impact", bench["impact"],
                          "kernel x dataset grid over LABEL=PATH[,LABEL=PATH...]");
    sub_bench->add_option("--csv", bench["csv"], "CSV output path (impact mode)");
    sub_bench->add_option("--dataset-label", bench["dataset-label"], "label for reports");
    sub_bench->add_option("--result-out", bench["result-out"], "keep kernel output here");
    sub_bench->add_option("--out", bench["out"], "write JSON lines here as well");

    Options compare{{"a", ""},        {"format-a", "text"}, {"b", ""},
                    {"format-b", "text"}, {"method", "lpa"},    {"out", ""}};
    compare["config"] = "";
    auto* sub_compare = app.add_subcommand("compare", "Similarity report between two graphs");
    sub_compare->add_option("--config", compare["config"], "flat key=value config file");
    sub_compare->add_option("--a", compare["a"], "first edge list");
    sub_compare->add_option("--b", compare["b"], "second edge list");
    sub_compare->add_option("--format-a", compare["format-a"], "text|binary");
    sub_compare->add_option("--format-b", compare["format-b"], "text|binary");
    sub_compare->add_option("--method", compare["method"], "community method: lpa|wcc");
    sub_compare->add_option("--out", compare["out"], "write JSON here instead of stdout");

    Options rerun{{"manifest", ""}, {"out", ""}};
    auto* sub_rerun = app.add_subcommand("rerun", "Re-execute a run from its manifest");
    sub_rerun->add_option("--manifest", rerun["manifest"], "manifest path")->required();
    sub_rerun->add_option("--out", rerun["out"], "override the output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sub_gen->parsed()) {
            apply_config_file(sub_gen, gen);
            if (to_u64(gen, "n") == 0) throw cli_error(2, "--n is required");
            if (gen["degree-dist"].empty()) gen["degree-dist"] = "powerlaw:2.2,2,0";
            return cmd_generate(gen);
        }
        if (sub_stats->parsed()) {
            apply_config_file(sub_stats, stats);
            if (stats["in"].empty()) throw cli_error(2, "--in is required");
            return cmd_stats(stats);
        }
        if (sub_bench->parsed()) {
            apply_config_file(sub_bench, bench);
            return cmd_bench(bench);
        }
        if (sub_compare->parsed()) {
            apply_config_file(sub_compare, compare);
            if (compare["a"].empty() || compare["b"].empty())
                throw cli_error(2, "--a and --b are required");
            return cmd_compare(compare);
        }
        if (sub_rerun->parsed()) return cmd_rerun(rerun);
    } catch (const cli_error& e) {
        std::fprintf(stderr, "graphbench: %s\n", e.what());
        return e.code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "graphbench: %s\n", e.what());
        return 1;
    }
    return 2;
}
