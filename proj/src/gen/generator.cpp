#include "gen/generator.hpp"

#include "core/error.hpp"
#include "core/parallel.hpp"
#include "gen/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>

namespace graphbench {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

uint64_t effective_max_deg(const DegreeLimitSpec& spec, uint64_t n) {
    uint64_t max_deg = spec.max_deg != 0 ? spec.max_deg : std::max<uint64_t>(n / 100, spec.min_deg);
    return std::max<uint64_t>(max_deg, 1);
}

void count_isolated(const std::vector<std::atomic<uint64_t>>& degree, GenerationReport& report) {
    uint64_t isolated = 0;
    for (const auto& d : degree)
        if (d.load(std::memory_order_relaxed) == 0) ++isolated;
    if (isolated > 0)
        report.warnings.push_back(std::to_string(isolated) +
                                  " isolated vertices (degree limits too tight for full coverage)");
}

void sort_canonical(EdgeList& el) {
    std::sort(el.edges.begin(), el.edges.end(), [](const Edge& a, const Edge& b) {
        if (a.src != b.src) return a.src < b.src;
        return a.dst < b.dst;
    });
}

} // namespace

DegreeLimitSpec DegreeLimitSpec::parse(const std::string& text) {
    unsigned long long a = 0, b = 0, c = 0;
    double exponent = 0.0;
    char tail[2];
    if (std::sscanf(text.c_str(), "constant:%llu %1s", &a, tail) == 1)
        return make_constant(a);
    if (std::sscanf(text.c_str(), "powerlaw:%lf,%llu,%llu %1s", &exponent, &b, &c, tail) == 3)
        return make_power_law(exponent, b, c);
    throw invalid_input_error("bad degree-dist \"" + text +
                              "\" (expected constant:K or powerlaw:EXP,MIN,MAX)");
}

std::string DegreeLimitSpec::str() const {
    char buf[96];
    if (kind == Kind::Constant)
        std::snprintf(buf, sizeof buf, "constant:%llu", static_cast<unsigned long long>(constant));
    else
        std::snprintf(buf, sizeof buf, "powerlaw:%g,%llu,%llu", exponent,
                      static_cast<unsigned long long>(min_deg),
                      static_cast<unsigned long long>(max_deg));
    return buf;
}

void GeneratorConfig::validate() const {
    if (n < 2) throw invalid_input_error("generator requires n >= 2");
    if (alpha < 1.0) throw invalid_input_error("density factor alpha must be >= 1");
    if (group_diameter_const < 1) throw invalid_input_error("group diameter constant must be >= 1");
    if (target_diameter) {
        if (*target_diameter < static_cast<uint64_t>(group_diameter_const) + 1)
            throw invalid_input_error("target diameter must be >= group_diameter_const + 1");
        if (group_count(*target_diameter, group_diameter_const) < 1)
            throw invalid_input_error("target diameter yields zero groups");
    }
    if (degree_limits.kind == DegreeLimitSpec::Kind::PowerLaw) {
        uint64_t max_deg = effective_max_deg(degree_limits, n);
        if (degree_limits.min_deg < 1 || degree_limits.min_deg > max_deg)
            throw invalid_input_error("degree limit bounds invalid: min " +
                                      std::to_string(degree_limits.min_deg) + " max " +
                                      std::to_string(max_deg));
        if (degree_limits.exponent <= 0.0)
            throw invalid_input_error("power-law exponent must be positive");
    }
    if (threads < 1) throw invalid_input_error("threads must be >= 1");
}

void LdbcRefConfig::validate() const {
    if (n < 2) throw invalid_input_error("generator requires n >= 2");
    if (!(p_limit > 0.0 && p_limit <= p && p < 1.0))
        throw invalid_input_error("require 0 < p_limit <= p < 1");
}

std::string GenerationReport::to_json() const {
    nlohmann::json j;
    j["trials"] = trials;
    j["edges"] = edges_emitted;
    j["wall_time_s"] = wall_time_s;
    j["trials_per_edge"] = trials_per_edge();
    j["warnings"] = warnings;
    return j.dump();
}

double first_edge_probability(double c, uint64_t d) {
    if (c < 0.0) throw invalid_input_error("first_edge_probability requires c >= 0");
    if (d < 1) throw invalid_input_error("first_edge_probability requires d >= 1");
    if (c == 0.0) return d == 1 ? 1.0 : 0.0;
    double dd = static_cast<double>(d);
    return c / (c + dd - 1.0) - c / (c + dd);
}

uint64_t sample_next_offset(double c, double alpha, double f) {
    if (!(f > 0.0 && f <= 1.0)) throw invalid_input_error("uniform draw must lie in (0, 1]");
    if (c < 0.0) throw invalid_input_error("sampler parameter c must be >= 0");
    double jump = (1.0 / f - 1.0) * (c / alpha);
    // Saturate far past any vertex range rather than overflow the cast.
    if (jump >= 0x1p62) return uint64_t{1} << 62;
    return static_cast<uint64_t>(jump) + 1;
}

double density_boundary(double c, double alpha) {
    if (c < 0.0 || alpha < 1.0) throw invalid_input_error("density_boundary requires c >= 0, alpha >= 1");
    return std::sqrt(c * c / alpha);
}

uint64_t group_count(uint64_t target_diameter, int group_diameter_const) {
    double ratio = static_cast<double>(target_diameter) / (group_diameter_const + 1);
    return static_cast<uint64_t>(std::floor(ratio + 0.5));
}

std::vector<uint64_t> assign_degree_limits(uint64_t n, const DegreeLimitSpec& spec, uint64_t seed) {
    std::vector<uint64_t> limits(n);
    if (spec.kind == DegreeLimitSpec::Kind::Constant) {
        std::fill(limits.begin(), limits.end(), spec.constant);
        return limits;
    }
    uint64_t min_deg = spec.min_deg;
    uint64_t max_deg = effective_max_deg(spec, n);
    if (min_deg < 1 || min_deg > max_deg)
        throw invalid_input_error("degree limit bounds invalid: min " + std::to_string(min_deg) +
                                  " max " + std::to_string(max_deg));
    // Inverse-CDF table over the truncated support.
    size_t support = static_cast<size_t>(max_deg - min_deg + 1);
    std::vector<double> cdf(support);
    double acc = 0.0;
    for (size_t i = 0; i < support; ++i) {
        acc += std::pow(static_cast<double>(min_deg + i), -spec.exponent);
        cdf[i] = acc;
    }
    for (double& v : cdf) v /= acc;
    SplitMix64 rng(seed, 0xD1B54A32D192ED03ull); // dedicated stream, separate from edge sampling
    for (uint64_t i = 0; i < n; ++i) {
        double u = rng.next_unit();
        size_t idx = std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
        if (idx >= support) idx = support - 1;
        limits[i] = min_deg + idx;
    }
    return limits;
}

double degree_limit_mean(const DegreeLimitSpec& spec, uint64_t n) {
    if (spec.kind == DegreeLimitSpec::Kind::Constant) return static_cast<double>(spec.constant);
    uint64_t max_deg = effective_max_deg(spec, n);
    double num = 0.0, den = 0.0;
    for (uint64_t d = spec.min_deg; d <= max_deg; ++d) {
        double mass = std::pow(static_cast<double>(d), -spec.exponent);
        num += mass * static_cast<double>(d);
        den += mass;
    }
    return num / den;
}

namespace {

struct GenShared {
    uint64_t n;
    double alpha;
    uint64_t seed;
    bool random_weights;
    const std::vector<uint64_t>& limits;
    std::vector<std::atomic<uint64_t>>& degree;
    uint64_t group_size; // 0 = ungrouped
};

// Algorithm loop for one source vertex. Degree updates go through atomics so
// the parallel path shares the code; in serial mode they are plain increments.
// start_c/start_j let grouped mode resume after the backbone edge.
uint64_t run_vertex(const GenShared& s, uint64_t i, double start_c, uint64_t start_j,
                    std::vector<Edge>& out, uint64_t& trials) {
    SplitMix64 rng(s.seed, i);
    // Weights come from a disjoint stream so an emission race in parallel mode
    // cannot shift the offset sequence away from the serial reference.
    SplitMix64 wrng(s.seed, i + (uint64_t{1} << 62));
    double c = start_c;
    uint64_t j = start_j;
    uint64_t emitted = 0;
    uint64_t group = s.group_size ? i / s.group_size : 0;
    while (s.degree[i].load(std::memory_order_relaxed) < s.limits[i]) {
        double f = rng.next_unit_open_closed();
        uint64_t offset = sample_next_offset(c, s.alpha, f);
        ++trials;
        if (offset >= s.n - j) break; // k would leave the vertex range
        uint64_t k = j + offset;
        if (s.group_size && k / s.group_size != group) break;
        if (s.degree[k].load(std::memory_order_relaxed) < s.limits[k]) {
            double w = s.random_weights ? wrng.next_unit_open_closed() : 1.0;
            out.push_back({i, k, w});
            s.degree[i].fetch_add(1, std::memory_order_relaxed);
            s.degree[k].fetch_add(1, std::memory_order_relaxed);
            ++emitted;
        }
        c += static_cast<double>(offset);
        j = k;
    }
    return emitted;
}

} // namespace

GenerationResult generate(const GeneratorConfig& config) {
    config.validate();
    auto t0 = Clock::now();

    GenerationResult result;
    result.edges.n = config.n;
    result.edges.weighted = config.random_weights;

    std::vector<uint64_t> limits = assign_degree_limits(config.n, config.degree_limits, config.seed);
    std::vector<std::atomic<uint64_t>> degree(config.n);
    for (auto& d : degree) d.store(0, std::memory_order_relaxed);

    uint64_t group_size = 0;
    if (config.target_diameter) {
        uint64_t groups = group_count(*config.target_diameter, config.group_diameter_const);
        group_size = (config.n + groups - 1) / groups;
        // Backbone first: adjacent edges guarantee one connected component and
        // chain the groups together. They bypass degree limits.
        result.edges.edges.reserve(config.n - 1);
        SplitMix64 wrng(config.seed, 0x8BB84B93962EACC9ull);
        for (uint64_t i = 0; i + 1 < config.n; ++i) {
            double w = config.random_weights ? wrng.next_unit_open_closed() : 1.0;
            result.edges.add(i, i + 1, w);
            degree[i].fetch_add(1, std::memory_order_relaxed);
            degree[i + 1].fetch_add(1, std::memory_order_relaxed);
        }
    }

    GenShared shared{config.n,       config.alpha, config.seed, config.random_weights,
                     limits,         degree,       group_size};
    // Grouped mode resumes each vertex past its (already emitted) adjacent
    // edge: the c = 0 draw lands on i + 1 with probability 1, so the resumed
    // state is c = 1, j = i + 1.
    double start_c = group_size ? 1.0 : 0.0;

    uint64_t total_trials = 0;
    if (config.threads <= 1) {
        for (uint64_t i = 0; i < config.n; ++i)
            run_vertex(shared, i, start_c, group_size ? i + 1 : i, result.edges.edges, total_trials);
    } else {
        int workers = config.threads;
        std::vector<std::vector<Edge>> buffers(workers);
        std::vector<uint64_t> worker_trials(workers, 0);
        parallel_for_dynamic(0, config.n, workers, 1024, [&](int w, uint64_t i) {
            run_vertex(shared, i, start_c, group_size ? i + 1 : i, buffers[w], worker_trials[w]);
        });
        for (int w = 0; w < workers; ++w) {
            result.edges.edges.insert(result.edges.edges.end(), buffers[w].begin(), buffers[w].end());
            total_trials += worker_trials[w];
        }
    }

    sort_canonical(result.edges);
    result.report.trials = total_trials;
    result.report.edges_emitted = result.edges.size();
    count_isolated(degree, result.report);
    result.report.wall_time_s = seconds_since(t0);
    result.group_size = group_size;
    return result;
}

GenerationResult generate_ldbc_reference(const LdbcRefConfig& config) {
    config.validate();
    auto t0 = Clock::now();

    GenerationResult result;
    result.edges.n = config.n;

    std::vector<uint64_t> limits = assign_degree_limits(config.n, config.degree_limits, config.seed);
    std::vector<uint64_t> degree(config.n, 0);

    uint64_t trials = 0;
    for (uint64_t i = 0; i < config.n; ++i) {
        SplitMix64 rng(config.seed, i);
        double step_p = config.p;
        for (uint64_t j = i + 1; j < config.n && degree[i] < limits[i]; ++j) {
            double prob = std::max(step_p, config.p_limit);
            ++trials;
            if (rng.next_unit() < prob) {
                if (degree[j] < limits[j]) {
                    result.edges.add(i, j);
                    ++degree[i];
                    ++degree[j];
                }
            }
            step_p *= config.p;
        }
    }

    result.report.trials = trials;
    result.report.edges_emitted = result.edges.size();
    uint64_t isolated = 0;
    for (uint64_t d : degree)
        if (d == 0) ++isolated;
    if (isolated > 0)
        result.report.warnings.push_back(std::to_string(isolated) +
                                         " isolated vertices (degree limits too tight for full coverage)");
    result.report.wall_time_s = seconds_since(t0);
    return result;
}

} // namespace graphbench
