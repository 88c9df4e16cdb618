#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/error.hpp"
#include "core/graph.hpp"
#include "core/io.hpp"
#include "gen/generator.hpp"
#include "gen/rng.hpp"
#include "kernels/kernels.hpp"
#include "oracles.hpp"

#include <cmath>
#include <filesystem>
#include <set>

using namespace graphbench;

TEST_CASE("first_edge_probability base cases") {
    CHECK(first_edge_probability(0.0, 1) == 1.0);
    CHECK(first_edge_probability(0.0, 5) == 0.0);
    CHECK(first_edge_probability(2.0, 1) == doctest::Approx(1.0 / 3.0));
    CHECK(first_edge_probability(2.0, 2) == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("telescoping normalization to 1e-12") {
    const uint64_t D = 1000000;
    for (double c : {0.5, 1.0, 3.0, 17.0}) {
        // Kahan-compensated sum in the test keeps the check about the formula,
        // not the accumulator.
        double sum = 0.0, comp = 0.0;
        for (uint64_t d = 1; d <= D; ++d) {
            double y = first_edge_probability(c, d) - comp;
            double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        double expected = 1.0 - c / (c + static_cast<double>(D));
        CHECK(std::abs(sum - expected) < 1e-12);
    }
}

TEST_CASE("sample_next_offset arithmetic") {
    CHECK(sample_next_offset(0.0, 1.0, 0.37) == 1);
    CHECK(sample_next_offset(4.0, 1.0, 0.5) == 5);
    CHECK(sample_next_offset(4.0, 1.0, 1.0) == 1);
    CHECK(sample_next_offset(10.0, 4.0, 0.5) == 3); // (1/0.5 - 1) * 10/4 = 2.5
    CHECK_THROWS_AS(sample_next_offset(4.0, 1.0, 0.0), invalid_input_error);
    CHECK_THROWS_AS(sample_next_offset(4.0, 1.0, 1.5), invalid_input_error);
}

TEST_CASE("sample_next_offset saturates for tiny draws") {
    uint64_t offset = sample_next_offset(1e6, 1.0, 1e-300);
    CHECK(offset >= (uint64_t{1} << 62));
}

TEST_CASE("offset draws land in the analytic cells") {
    // P(offset = d) is the mass of f in (c/(c+d), c/(c+d-1)]; cell interiors
    // must map to d (boundaries wobble by one ulp in floating point).
    double c = 3.0;
    for (uint64_t d : {1ull, 2ull, 7ull, 40ull}) {
        double hi = c / (c + static_cast<double>(d) - 1.0);
        double lo = c / (c + static_cast<double>(d));
        double mid = 0.5 * (lo + hi);
        CHECK(sample_next_offset(c, 1.0, mid) == d);
        CHECK(sample_next_offset(c, 1.0, lo + (hi - lo) * 0.05) == d);
        CHECK(sample_next_offset(c, 1.0, lo + (hi - lo) * 0.95) == d);
    }
}

TEST_CASE("empirical offset distribution stays near the law") {
    // Smoke-scale version of the acceptance check.
    double c = 3.0;
    const uint64_t draws = 200000;
    SplitMix64 rng(99, 0);
    std::map<uint64_t, uint64_t> histogram;
    for (uint64_t i = 0; i < draws; ++i) histogram[sample_next_offset(c, 1.0, rng.next_unit_open_closed())]++;
    double tv = 0.0;
    uint64_t cutoff = 30000;
    double tail_mass = c / (c + static_cast<double>(cutoff));
    double tail_emp = 0.0;
    for (auto [d, count] : histogram)
        if (d > cutoff) tail_emp += static_cast<double>(count) / static_cast<double>(draws);
    for (uint64_t d = 1; d <= cutoff; ++d) {
        double emp = 0.0;
        if (auto it = histogram.find(d); it != histogram.end())
            emp = static_cast<double>(it->second) / static_cast<double>(draws);
        tv += std::abs(emp - first_edge_probability(c, d));
    }
    tv = (tv + std::abs(tail_emp - tail_mass)) / 2.0;
    CHECK(tv < 0.03);
}

TEST_CASE("density_boundary") {
    CHECK(density_boundary(10.0, 4.0) == doctest::Approx(5.0));
    CHECK(density_boundary(0.0, 7.0) == 0.0);
    CHECK(density_boundary(10.0, 1.0) == doctest::Approx(10.0));
}

TEST_CASE("degree limit assignment") {
    auto constant = assign_degree_limits(3, DegreeLimitSpec::make_constant(5), 1);
    CHECK(constant == std::vector<uint64_t>{5, 5, 5});

    auto spec = DegreeLimitSpec::make_power_law(2.2, 2, 1000);
    auto a = assign_degree_limits(100000, spec, 42);
    auto b = assign_degree_limits(100000, spec, 42);
    CHECK(a == b);

    // analytic mean of the truncated law, summed here independently
    double num = 0.0, den = 0.0;
    for (uint64_t d = 2; d <= 1000; ++d) {
        num += std::pow(static_cast<double>(d), -1.2);
        den += std::pow(static_cast<double>(d), -2.2);
    }
    double analytic = num / den;
    double mean = 0.0;
    for (uint64_t limit : a) mean += static_cast<double>(limit);
    mean /= static_cast<double>(a.size());
    CHECK(mean == doctest::Approx(analytic).epsilon(0.10));
    CHECK(degree_limit_mean(spec, 100000) == doctest::Approx(analytic).epsilon(1e-9));

    CHECK_THROWS_AS(assign_degree_limits(10, DegreeLimitSpec::make_power_law(2.0, 50, 10), 1),
                    invalid_input_error);
}

TEST_CASE("degree-dist spec parsing round trip") {
    auto c = DegreeLimitSpec::parse("constant:7");
    CHECK(c.kind == DegreeLimitSpec::Kind::Constant);
    CHECK(c.constant == 7);
    auto p = DegreeLimitSpec::parse("powerlaw:1.9,16,16000");
    CHECK(p.kind == DegreeLimitSpec::Kind::PowerLaw);
    CHECK(p.exponent == doctest::Approx(1.9));
    CHECK(p.min_deg == 16);
    CHECK(p.max_deg == 16000);
    CHECK_THROWS_AS(DegreeLimitSpec::parse("zipf:1,2"), invalid_input_error);
}

TEST_CASE("two vertices with unit degree limit") {
    GeneratorConfig cfg;
    cfg.n = 2;
    cfg.degree_limits = DegreeLimitSpec::make_constant(1);
    cfg.seed = 5;
    auto result = generate(cfg);
    REQUIRE(result.edges.size() == 1);
    CHECK(result.edges.edges[0].src == 0);
    CHECK(result.edges.edges[0].dst == 1);
    CHECK(result.report.trials == 1);
}

TEST_CASE("generation is deterministic per seed and emits src < dst") {
    GeneratorConfig cfg;
    cfg.n = 5000;
    cfg.alpha = 10;
    cfg.seed = 11;
    cfg.degree_limits = DegreeLimitSpec::make_power_law(2.0, 4, 100);
    auto a = generate(cfg);
    auto b = generate(cfg);
    REQUIRE(a.edges.size() == b.edges.size());
    CHECK(a.edges.edges == b.edges.edges);
    CHECK(a.report.trials == b.report.trials);
    for (const Edge& e : a.edges.edges) CHECK(e.src < e.dst);
    cfg.seed = 12;
    CHECK(generate(cfg).edges.edges != a.edges.edges);
}

TEST_CASE("parallel generation matches serial when limits never bind") {
    GeneratorConfig cfg;
    cfg.n = 20000;
    cfg.alpha = 10;
    cfg.seed = 3;
    cfg.degree_limits = DegreeLimitSpec::make_constant(1u << 20);
    auto serial = generate(cfg);
    cfg.threads = 4;
    auto parallel = generate(cfg);
    CHECK(serial.edges.edges == parallel.edges.edges);
    CHECK(serial.report.trials == parallel.report.trials);
}

TEST_CASE("random weights are deterministic and in (0, 1]") {
    GeneratorConfig cfg;
    cfg.n = 2000;
    cfg.alpha = 10;
    cfg.seed = 21;
    cfg.random_weights = true;
    cfg.degree_limits = DegreeLimitSpec::make_power_law(2.0, 4, 100);
    auto a = generate(cfg);
    auto b = generate(cfg);
    CHECK(a.edges.weighted);
    CHECK(a.edges.edges == b.edges.edges);
    for (const Edge& e : a.edges.edges) {
        CHECK(e.weight > 0.0);
        CHECK(e.weight <= 1.0);
    }
}

TEST_CASE("trials account for emissions, rejections and overshoots") {
    GeneratorConfig cfg;
    cfg.n = 30000;
    cfg.alpha = 1;
    cfg.seed = 8;
    cfg.degree_limits = DegreeLimitSpec::make_constant(1u << 20); // unbounded in practice
    auto result = generate(cfg);
    // With no degree rejections, waste is at most one overshoot per vertex.
    CHECK(result.report.trials >= result.report.edges_emitted);
    CHECK(result.report.trials <= result.report.edges_emitted + cfg.n);
    CHECK(result.report.trials_per_edge() ==
          doctest::Approx(static_cast<double>(result.report.trials) /
                          static_cast<double>(result.report.edges_emitted)));
}

TEST_CASE("edge count is non-decreasing in alpha") {
    GeneratorConfig cfg;
    cfg.n = 20000;
    cfg.seed = 4;
    cfg.degree_limits = DegreeLimitSpec::make_power_law(1.9, 16, 2000);
    uint64_t prev = 0;
    for (double alpha : {1.0, 10.0, 100.0, 1000.0}) {
        cfg.alpha = alpha;
        uint64_t edges = generate(cfg).report.edges_emitted;
        CHECK(edges >= prev);
        prev = edges;
    }
}

TEST_CASE("isolated vertices surface as a warning, not an error") {
    GeneratorConfig cfg;
    cfg.n = 50;
    cfg.degree_limits = DegreeLimitSpec::make_constant(0);
    cfg.seed = 2;
    auto result = generate(cfg);
    CHECK(result.edges.size() == 0);
    REQUIRE(result.report.warnings.size() == 1);
    CHECK(result.report.warnings[0].find("isolated") != std::string::npos);
}

TEST_CASE("group arithmetic follows the rounding rule") {
    CHECK(group_count(70, 6) == 10);
    CHECK(group_count(24, 6) == 3);
    CHECK(group_count(48, 6) == 7);
    CHECK(group_count(24, 4) == 5);
    CHECK(group_count(7, 6) == 1);
}

TEST_CASE("grouped generation: backbone, boundaries, one component") {
    GeneratorConfig cfg;
    cfg.n = 5000;
    cfg.alpha = 10;
    cfg.seed = 13;
    cfg.target_diameter = 35;
    cfg.group_diameter_const = 6;
    cfg.degree_limits = DegreeLimitSpec::make_power_law(2.0, 4, 200);
    auto result = generate(cfg);
    uint64_t groups = group_count(35, 6);
    uint64_t group_size = (cfg.n + groups - 1) / groups;
    CHECK(result.group_size == group_size);

    std::set<std::pair<uint64_t, uint64_t>> edges;
    for (const Edge& e : result.edges.edges) edges.insert({e.src, e.dst});
    for (uint64_t i = 0; i + 1 < cfg.n; ++i) CHECK(edges.count({i, i + 1}) == 1);
    for (const Edge& e : result.edges.edges) {
        if (e.dst == e.src + 1) continue; // backbone may cross groups
        CHECK(e.src / group_size == e.dst / group_size);
    }

    CsrGraph g = build_csr(result.edges);
    auto labels = wcc(g);
    for (VertexId label : labels) CHECK(label == 0);
}

TEST_CASE("grouped generation validates its config") {
    GeneratorConfig cfg;
    cfg.n = 100;
    cfg.target_diameter = 3; // below group_diameter_const + 1
    CHECK_THROWS_AS(cfg.validate(), invalid_input_error);
    cfg.target_diameter = 7;
    CHECK_NOTHROW(cfg.validate());
    cfg.alpha = 0.5;
    CHECK_THROWS_AS(cfg.validate(), invalid_input_error);
}

TEST_CASE("ldbc reference sampler honors the probability law empirically") {
    // Unbounded limits expose the raw Bernoulli walk: acceptance at distance 1
    // is p, deep acceptance sits at the p_limit floor.
    LdbcRefConfig cfg;
    cfg.n = 400;
    cfg.seed = 31;
    cfg.degree_limits = DegreeLimitSpec::make_constant(1u << 20);
    auto result = generate_ldbc_reference(cfg);
    std::set<std::pair<uint64_t, uint64_t>> edges;
    for (const Edge& e : result.edges.edges) edges.insert({e.src, e.dst});

    uint64_t near_hits = 0, near_total = 0, deep_hits = 0, deep_total = 0;
    for (uint64_t i = 0; i + 1 < cfg.n; ++i) {
        ++near_total;
        near_hits += edges.count({i, i + 1});
    }
    for (uint64_t i = 0; i < cfg.n; ++i)
        for (uint64_t d = 60; d <= 90; ++d) {
            if (i + d >= cfg.n) break;
            ++deep_total;
            deep_hits += edges.count({i, i + d});
        }
    double near_rate = static_cast<double>(near_hits) / static_cast<double>(near_total);
    double deep_rate = static_cast<double>(deep_hits) / static_cast<double>(deep_total);
    CHECK(near_rate == doctest::Approx(0.95).epsilon(0.05));
    CHECK(deep_rate == doctest::Approx(0.20).epsilon(0.25));

    CHECK(result.report.trials >= result.report.edges_emitted);
    CHECK(generate_ldbc_reference(cfg).edges.edges == result.edges.edges);
}

TEST_CASE("ldbc config validation") {
    LdbcRefConfig cfg;
    cfg.n = 10;
    cfg.p_limit = 0.0;
    CHECK_THROWS_AS(cfg.validate(), invalid_input_error);
    cfg.p_limit = 0.3;
    cfg.p = 0.2; // p_limit > p
    CHECK_THROWS_AS(cfg.validate(), invalid_input_error);
}

TEST_CASE("generation report serializes the contract keys") {
    GenerationReport report;
    report.trials = 10;
    report.edges_emitted = 8;
    report.wall_time_s = 0.5;
    std::string json = report.to_json();
    for (const char* key : {"\"trials\"", "\"edges\"", "\"wall_time_s\"", "\"trials_per_edge\""})
        CHECK(json.find(key) != std::string::npos);
}
