#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bench/bench.hpp"
#include "core/error.hpp"
#include "core/io.hpp"
#include "core/parallel.hpp"
#include "gen/generator.hpp"
#include "oracles.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>

using namespace graphbench;

namespace {

std::string temp_file(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("gbtest-bench-" + name)).string();
}

std::string write_generated(uint64_t n, double alpha, uint64_t seed, const std::string& name) {
    GeneratorConfig cfg;
    cfg.n = n;
    cfg.alpha = alpha;
    cfg.seed = seed;
    cfg.degree_limits = DegreeLimitSpec::make_power_law(2.0, 8, 500);
    std::string path = temp_file(name);
    write_edge_list(generate(cfg).edges, path, FileFormat::Text);
    return path;
}

} // namespace

TEST_CASE("run_once reports consistent fields") {
    std::string path = write_generated(20000, 10, 7, "run1.txt");
    RunOptions options;
    options.threads = 2;
    options.repeats = 3;
    BenchReport report = run_once("pr", path, options);
    CHECK(report.error.empty());
    CHECK(report.n == 20000);
    CHECK(report.m > 0);
    CHECK(report.upload_time_s > 0.0);
    CHECK(report.running_time_s > 0.0);
    CHECK(report.makespan_s > 0.0);
    CHECK(report.throughput_eps ==
          doctest::Approx(static_cast<double>(report.m) / report.running_time_s).epsilon(1e-12));
    CHECK(report.makespan_s >= report.upload_time_s + report.running_time_s - 1e-4);
    CHECK(report.dataset.substr(0, 1) == "S");
    std::filesystem::remove(path);
}

TEST_CASE("timing sections are exhaustive with a single repeat") {
    std::string path = write_generated(20000, 10, 8, "run2.txt");
    RunOptions options;
    options.repeats = 1;
    BenchReport report = run_once("tc", path, options);
    double parts = report.upload_time_s + report.running_time_s + report.write_time_s;
    CHECK(parts <= report.makespan_s + 1e-4);
    CHECK(report.makespan_s <= parts * 1.05 + 0.01);
    std::filesystem::remove(path);
}

TEST_CASE("run_once on an empty graph has zero throughput") {
    EdgeList el;
    el.n = 2;
    std::string path = temp_file("empty.txt");
    write_edge_list(el, path, FileFormat::Text);
    BenchReport report = run_once("pr", path, RunOptions{});
    CHECK(report.error.empty());
    CHECK(report.m == 0);
    CHECK(report.throughput_eps == 0.0);
    CHECK(report.running_time_s >= 0.0);
    std::filesystem::remove(path);
}

TEST_CASE("run_once captures failures instead of throwing") {
    BenchReport missing = run_once("pr", "/nonexistent/graph.txt", RunOptions{});
    CHECK_FALSE(missing.error.empty());

    std::string path = write_generated(100, 10, 9, "badkernel.txt");
    BenchReport bad = run_once("not-a-kernel", path, RunOptions{});
    CHECK_FALSE(bad.error.empty());
    std::filesystem::remove(path);
}

TEST_CASE("run_once golden report structure") {
    EdgeList el;
    el.n = 4;
    el.add(0, 1);
    el.add(1, 2);
    el.add(2, 3);
    std::string path = temp_file("golden-in.txt");
    write_edge_list(el, path, FileFormat::Text);
    RunOptions options;
    options.repeats = 1;
    BenchReport report = run_once("pr", path, options);
    nlohmann::json j = nlohmann::json::parse(report.to_json());
    for (const char* timing : {"upload_time_s", "running_time_s", "write_time_s", "makespan_s",
                               "throughput_eps"})
        j[timing] = 0.0; // masked: structure and stable values only

    std::ifstream golden_in(std::string(GRAPHBENCH_TEST_DATA) + "/run_once_golden.json");
    REQUIRE(golden_in);
    nlohmann::json golden = nlohmann::json::parse(golden_in);
    CHECK(j == golden);
    std::filesystem::remove(path);
}

TEST_CASE("speedup table basics") {
    CsrGraph g = build_csr(oracle::random_graph(400, 0.05, 4));
    KernelParams params;
    SpeedupTable single = speedup_suite("pr", g, params, {1}, true, 1);
    CHECK(single.factors == std::vector<double>{1.0});

    SpeedupTable table = speedup_suite("tc", g, params, {1, 2, 4, 8}, true, 1);
    CHECK(table.thread_counts == std::vector<int>{1, 2, 4, 8});
    CHECK(table.times.size() == 4);
    CHECK(table.factors[0] == 1.0);
    if (hardware_threads() < 8) CHECK_FALSE(table.warnings.empty());
}

TEST_CASE("default thread list truncates to the hardware") {
    CsrGraph g = build_csr(oracle::random_graph(200, 0.05, 5));
    KernelParams params;
    SpeedupTable table = speedup_suite("pr", g, params, {1, 2, 4, 8, 16, 32}, false, 1);
    int cores = hardware_threads();
    for (int t : table.thread_counts) CHECK(t <= cores);
    if (cores < 32) CHECK_FALSE(table.warnings.empty());
}

TEST_CASE("tc gains from parallelism on a desk-scale graph") {
    GeneratorConfig cfg;
    cfg.n = 30000;
    cfg.alpha = 100;
    cfg.seed = 7;
    cfg.degree_limits = DegreeLimitSpec::make_power_law(1.9, 16, 2000);
    CsrGraph g = build_csr(generate(cfg).edges);
    KernelParams params;
    int probe = std::min(8, hardware_threads());
    SpeedupTable table = speedup_suite("tc", g, params, {1, probe}, true, 3);
    double factor = table.factors.back();
    if (hardware_threads() >= 8)
        CHECK(factor >= 3.0); // embarrassingly parallel intersection workload
    else
        CHECK(factor >= 1.2); // best this host can show
}

TEST_CASE("stress ladder passes a tiny rung") {
    std::string ladder = temp_file("ladder1.txt");
    {
        std::ofstream out(ladder);
        out << "# tiny\nn=500 alpha=10 seed=3\n";
    }
    auto rows = stress_ladder("pr", KernelParams{}, parse_stress_ladder(ladder), 1, 0, 60.0);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].outcome == "pass");
    CHECK(rows[0].peak_memory_bytes > 0);
    std::filesystem::remove(ladder);
}

TEST_CASE("stress ladder records oom and stops the ladder") {
    std::string ladder = temp_file("ladder2.txt");
    {
        std::ofstream out(ladder);
        out << "n=200000 alpha=100 seed=3 degree-dist=powerlaw:1.9,16,16000\n";
        out << "n=500 alpha=10 seed=3\n";
    }
    // 48 MB cap: the first rung cannot even hold its edge list.
    auto rows = stress_ladder("pr", KernelParams{}, parse_stress_ladder(ladder), 1,
                              48ull * 1024 * 1024, 120.0);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].outcome == "fail");
    CHECK(rows[0].reason == "oom");
    CHECK(rows[1].outcome == "not-attempted");

    // pass/fail boundary reproduces on a rerun
    auto again = stress_ladder("pr", KernelParams{}, parse_stress_ladder(ladder), 1,
                               48ull * 1024 * 1024, 120.0);
    REQUIRE(again.size() == 2);
    CHECK(again[0].outcome == rows[0].outcome);
    CHECK(again[1].outcome == rows[1].outcome);
    std::filesystem::remove(ladder);
}

TEST_CASE("stress ladder accepts file rungs") {
    std::string graph = write_generated(300, 10, 6, "rung.txt");
    std::string ladder = temp_file("ladder3.txt");
    {
        std::ofstream out(ladder);
        out << "file=" << graph << " format=text\n";
    }
    auto rows = stress_ladder("tc", KernelParams{}, parse_stress_ladder(ladder), 1, 0, 60.0);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].outcome == "pass");
    std::filesystem::remove(graph);
    std::filesystem::remove(ladder);
}

TEST_CASE("ladder parsing rejects junk") {
    std::string ladder = temp_file("ladder4.txt");
    {
        std::ofstream out(ladder);
        out << "wat=1\n";
    }
    CHECK_THROWS_AS(parse_stress_ladder(ladder), parse_error);
    {
        std::ofstream out(ladder);
        out << "no equals here\n";
    }
    CHECK_THROWS_AS(parse_stress_ladder(ladder), parse_error);
    CHECK_THROWS_AS(parse_stress_ladder("/nonexistent/ladder"), io_error);
    std::filesystem::remove(ladder);
}

TEST_CASE("impact matrix completes around per-cell failures") {
    std::string good = write_generated(500, 10, 10, "impact.txt");
    ImpactMatrix matrix = impact_matrix({"pr", "tc"}, {{"Std", good}, {"Broken", "/nonexistent"}},
                                        KernelParams{}, 1, 1);
    REQUIRE(matrix.cells.size() == 2);
    REQUIRE(matrix.cells[0].size() == 2);
    CHECK(matrix.cells[0][0].error.empty());
    CHECK_FALSE(matrix.cells[0][1].error.empty());
    CHECK(matrix.cells[1][0].error.empty());
    std::string csv = matrix.to_csv();
    CHECK(csv.rfind("kernel,dataset,threads,", 0) == 0);
    CHECK(csv.find("\ntc,") != std::string::npos);
    std::filesystem::remove(good);
}
