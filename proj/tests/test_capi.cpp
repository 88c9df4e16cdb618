// Exercises the shared-library surface exactly as an external client would:
// only graphbench.h, no internal headers.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <graphbench.h>

#include <json.hpp>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace {

std::string temp_file(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("gbtest-capi-" + name)).string();
}

struct Str {
    char* ptr = nullptr;
    ~Str() { gb_string_free(ptr); }
};

} // namespace

TEST_CASE("version and error strings exist") {
    CHECK(gb_version() != nullptr);
    CHECK(gb_last_error() != nullptr);
}

TEST_CASE("generate, write, read, build, run through the C surface") {
    gb_gen_config config;
    gb_gen_config_init(&config);
    config.n = 5000;
    config.alpha = 10;
    config.seed = 7;

    gb_edgelist* edges = nullptr;
    Str report;
    REQUIRE(gb_generate(&config, &edges, &report.ptr) == GB_OK);
    REQUIRE(edges != nullptr);
    CHECK(gb_edgelist_num_vertices(edges) == 5000);
    CHECK(gb_edgelist_num_edges(edges) > 0);

    nlohmann::json rep = nlohmann::json::parse(report.ptr);
    CHECK(rep["edges"] == gb_edgelist_num_edges(edges));
    CHECK(rep["trials"].get<uint64_t>() >= rep["edges"].get<uint64_t>());
    CHECK(rep.contains("trials_per_edge"));
    CHECK(rep.contains("wall_time_s"));

    std::string text_path = temp_file("g.txt"), bin_path = temp_file("g.bin");
    REQUIRE(gb_edgelist_write(edges, text_path.c_str(), GB_FORMAT_TEXT) == GB_OK);
    REQUIRE(gb_edgelist_write(edges, bin_path.c_str(), GB_FORMAT_BINARY) == GB_OK);

    gb_edgelist* text_back = nullptr;
    gb_edgelist* bin_back = nullptr;
    REQUIRE(gb_edgelist_read(text_path.c_str(), GB_FORMAT_TEXT, &text_back) == GB_OK);
    REQUIRE(gb_edgelist_read(bin_path.c_str(), GB_FORMAT_BINARY, &bin_back) == GB_OK);
    CHECK(gb_edgelist_num_edges(text_back) == gb_edgelist_num_edges(edges));
    CHECK(gb_edgelist_num_edges(bin_back) == gb_edgelist_num_edges(edges));

    gb_graph* graph = nullptr;
    REQUIRE(gb_graph_build(text_back, &graph) == GB_OK);
    CHECK(gb_graph_num_vertices(graph) == 5000);

    gb_kernel_params params;
    gb_kernel_params_init(&params);
    CHECK(params.max_iters == 10);
    CHECK(params.damping == 0.85);

    gb_result* pr = nullptr;
    REQUIRE(gb_run_kernel(graph, "pr", &params, 2, &pr) == GB_OK);
    CHECK(gb_result_has_scalar(pr) == 0);
    REQUIRE(gb_result_size(pr) == 5000);
    double sum = 0.0;
    for (uint64_t v = 0; v < 5000; ++v) sum += gb_result_values(pr)[v];
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));

    gb_result* tc = nullptr;
    REQUIRE(gb_run_kernel(graph, "tc", &params, 2, &tc) == GB_OK);
    CHECK(gb_result_has_scalar(tc) == 1);
    CHECK(gb_result_scalar(tc) > 0);

    std::string result_path = temp_file("pr.txt");
    REQUIRE(gb_result_write(pr, result_path.c_str()) == GB_OK);
    std::ifstream in(result_path);
    std::string line;
    size_t lines = 0;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 5000);

    Str stats;
    REQUIRE(gb_graph_stats(graph, &stats.ptr) == GB_OK);
    nlohmann::json sj = nlohmann::json::parse(stats.ptr);
    CHECK(sj["n"] == 5000);
    CHECK(sj["density"].get<double>() > 0.0);

    std::vector<uint64_t> assignment(5000);
    for (uint64_t v = 0; v < 5000; ++v) assignment[v] = v / 1000;
    Str comm;
    REQUIRE(gb_community_stats(graph, assignment.data(), assignment.size(), nullptr, 0,
                               &comm.ptr) == GB_OK);
    CHECK(nlohmann::json::parse(comm.ptr)["communities"].size() == 5);
    Str csv;
    REQUIRE(gb_community_stats(graph, assignment.data(), assignment.size(), "cutfraction", 1,
                               &csv.ptr) == GB_OK);
    CHECK(std::string(csv.ptr).rfind("community,", 0) == 0);

    gb_result_free(pr);
    gb_result_free(tc);
    gb_graph_free(graph);
    gb_edgelist_free(text_back);
    gb_edgelist_free(bin_back);
    gb_edgelist_free(edges);
    std::filesystem::remove(text_path);
    std::filesystem::remove(bin_path);
    std::filesystem::remove(result_path);
}

TEST_CASE("ldbc reference sampler via the C surface") {
    gb_ldbc_config config;
    gb_ldbc_config_init(&config);
    config.n = 2000;
    config.seed = 5;
    gb_edgelist* edges = nullptr;
    Str report;
    REQUIRE(gb_generate_ldbc(&config, &edges, &report.ptr) == GB_OK);
    nlohmann::json rep = nlohmann::json::parse(report.ptr);
    CHECK(rep["trials"].get<uint64_t>() > rep["edges"].get<uint64_t>());
    gb_edgelist_free(edges);
}

TEST_CASE("dataset name rendering and buffer guard") {
    char buffer[32];
    REQUIRE(gb_dataset_name(3600000, 153000000, "Std", buffer, sizeof buffer) == GB_OK);
    CHECK(std::string(buffer) == "S8-Std");
    REQUIRE(gb_dataset_name(10, 90, "Dense", buffer, sizeof buffer) == GB_OK);
    CHECK(std::string(buffer) == "S2-Dense");
    char tiny[3];
    CHECK(gb_dataset_name(10, 90, "Dense", tiny, sizeof tiny) == GB_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("status codes and last error") {
    gb_edgelist* edges = nullptr;
    CHECK(gb_edgelist_read("/nonexistent/file", GB_FORMAT_TEXT, &edges) == GB_ERROR_IO);
    CHECK(std::strlen(gb_last_error()) > 0);

    std::string bad = temp_file("bad.txt");
    {
        std::ofstream out(bad);
        out << "this is not an edge\n";
    }
    CHECK(gb_edgelist_read(bad.c_str(), GB_FORMAT_TEXT, &edges) == GB_ERROR_PARSE);
    std::filesystem::remove(bad);

    gb_gen_config config;
    gb_gen_config_init(&config);
    config.n = 1; // below minimum
    CHECK(gb_generate(&config, &edges, nullptr) == GB_ERROR_INVALID_ARGUMENT);
    CHECK(gb_generate(nullptr, &edges, nullptr) == GB_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("unknown kernel through the C surface") {
    gb_gen_config config;
    gb_gen_config_init(&config);
    config.n = 100;
    gb_edgelist* edges = nullptr;
    REQUIRE(gb_generate(&config, &edges, nullptr) == GB_OK);
    gb_graph* graph = nullptr;
    REQUIRE(gb_graph_build(edges, &graph) == GB_OK);
    gb_result* result = nullptr;
    CHECK(gb_run_kernel(graph, "dijkstra", nullptr, 1, &result) == GB_ERROR_INVALID_ARGUMENT);
    CHECK(std::string(gb_last_error()).find("dijkstra") != std::string::npos);
    gb_graph_free(graph);
    gb_edgelist_free(edges);
}

TEST_CASE("similarity and bench entry points") {
    gb_gen_config config;
    gb_gen_config_init(&config);
    config.n = 3000;
    config.alpha = 10;
    config.seed = 9;
    gb_edgelist* edges = nullptr;
    REQUIRE(gb_generate(&config, &edges, nullptr) == GB_OK);
    gb_graph* graph = nullptr;
    REQUIRE(gb_graph_build(edges, &graph) == GB_OK);

    Str sim;
    REQUIRE(gb_similarity_report(graph, graph, nullptr, &sim.ptr) == GB_OK);
    nlohmann::json sj = nlohmann::json::parse(sim.ptr);
    for (const char* key : {"CC", "TPR", "BR", "Diam", "Cond", "Size"})
        CHECK(sj["metrics"][key] == 0.0);

    std::string path = temp_file("bench.txt");
    REQUIRE(gb_edgelist_write(edges, path.c_str(), GB_FORMAT_TEXT) == GB_OK);
    Str bench;
    REQUIRE(gb_bench_run(path.c_str(), GB_FORMAT_TEXT, "wcc", nullptr, 1, 1, nullptr, nullptr,
                         &bench.ptr) == GB_OK);
    nlohmann::json bj = nlohmann::json::parse(bench.ptr);
    CHECK(bj["kernel"] == "wcc");
    CHECK(bj["m"] == gb_graph_num_edges(graph));

    int32_t counts[2] = {1, 2};
    Str speedup;
    REQUIRE(gb_bench_speedup(path.c_str(), GB_FORMAT_TEXT, "pr", nullptr, counts, 2, 1, 1,
                             &speedup.ptr) == GB_OK);
    CHECK(nlohmann::json::parse(speedup.ptr)["factors"][0] == 1.0);

    const char* kernels[] = {"pr"};
    const char* labels[] = {"Tiny"};
    const char* paths[] = {path.c_str()};
    Str impact;
    REQUIRE(gb_bench_impact(kernels, 1, labels, paths, 1, nullptr, 1, 1, 1, &impact.ptr) == GB_OK);
    CHECK(std::string(impact.ptr).rfind("kernel,", 0) == 0);

    std::string ladder = temp_file("ladder.txt");
    {
        std::ofstream out(ladder);
        out << "n=200 alpha=10 seed=1\n";
    }
    Str stress;
    REQUIRE(gb_bench_stress("pr", nullptr, ladder.c_str(), 1, 0, 60.0, &stress.ptr) == GB_OK);
    CHECK(std::string(stress.ptr).find("\"pass\"") != std::string::npos);

    gb_graph_free(graph);
    gb_edgelist_free(edges);
    std::filesystem::remove(path);
    std::filesystem::remove(ladder);
}
