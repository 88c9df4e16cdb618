#pragma once

#include "core/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace graphbench {

// Per-vertex degree cap distribution. The edge sampler never grows a vertex
// past its limit; the limit law shapes the degree distribution of the output.
struct DegreeLimitSpec {
    enum class Kind { Constant, PowerLaw } kind = Kind::PowerLaw;
    uint64_t constant = 16;
    // Truncated discrete power law P(d) proportional to d^-exponent on
    // [min_deg, max_deg].
    double exponent = 2.2;
    uint64_t min_deg = 2;
    uint64_t max_deg = 0; // 0 = default n / 100 (at least min_deg)

    static DegreeLimitSpec make_constant(uint64_t k) {
        DegreeLimitSpec s;
        s.kind = Kind::Constant;
        s.constant = k;
        return s;
    }
    static DegreeLimitSpec make_power_law(double exponent, uint64_t min_deg, uint64_t max_deg) {
        DegreeLimitSpec s;
        s.kind = Kind::PowerLaw;
        s.exponent = exponent;
        s.min_deg = min_deg;
        s.max_deg = max_deg;
        return s;
    }
    // "constant:K" or "powerlaw:EXPONENT,MIN,MAX"; inverse of str().
    static DegreeLimitSpec parse(const std::string& text);
    std::string str() const;
};

struct GeneratorConfig {
    uint64_t n = 0;
    double alpha = 1.0; // >= 1; larger concentrates probability on near vertices
    std::optional<uint64_t> target_diameter;
    int group_diameter_const = 6;
    DegreeLimitSpec degree_limits;
    uint64_t seed = 1;
    bool random_weights = false; // uniform (0,1] edge weights instead of unit
    int threads = 1;             // 1 = deterministic reference mode

    void validate() const; // throws invalid_input_error
};

// Sequential-trial reference sampler: Bernoulli per step with probability
// max(p^distance, p_limit).
struct LdbcRefConfig {
    uint64_t n = 0;
    double p = 0.95;
    double p_limit = 0.2;
    DegreeLimitSpec degree_limits;
    uint64_t seed = 1;

    void validate() const;
};

struct GenerationReport {
    uint64_t trials = 0;
    uint64_t edges_emitted = 0;
    double wall_time_s = 0.0;
    std::vector<std::string> warnings;

    double trials_per_edge() const {
        return static_cast<double>(trials) / static_cast<double>(edges_emitted > 0 ? edges_emitted : 1);
    }
    std::string to_json() const;
};

// Probability that the first existing edge of a vertex lies exactly d
// positions ahead, given accumulated parameter c:
//   c/(c+d-1) - c/(c+d);  for c = 0 this is 1 at d = 1 and 0 elsewhere.
double first_edge_probability(double c, uint64_t d);

// Inverse-CDF draw of the next edge offset: floor((1/f - 1) * c/alpha) + 1
// for f in (0,1]. Saturates instead of overflowing for tiny f; callers break
// once the offset leaves the vertex range. Throws invalid_input_error on f
// outside (0,1].
uint64_t sample_next_offset(double c, double alpha, double f);

// Quick density-boundary diagnostic: sqrt(c^2 / alpha). Distances beyond it
// lose probability when c shrinks to c/alpha.
double density_boundary(double c, double alpha);

// Per-vertex degree caps, deterministic per seed.
std::vector<uint64_t> assign_degree_limits(uint64_t n, const DegreeLimitSpec& spec, uint64_t seed);

// Exact mean of the truncated power law; exposed for calibration and tests.
double degree_limit_mean(const DegreeLimitSpec& spec, uint64_t n);

// Failure-free trial generation. Every sampling draw counts as one trial;
// candidates rejected by the target's degree limit still advance the sampler
// state. With config.target_diameter set, vertices are partitioned into
// groups of group_size = ceil(n / group_number) with
// group_number = round(target_diameter / (group_diameter_const + 1)); a
// backbone edge (i, i+1) joins all neighbors first and sampling for a vertex
// stops at its group boundary.
struct GenerationResult {
    EdgeList edges;
    GenerationReport report;
    uint64_t group_size = 0; // 0 unless diameter grouping was used
};
GenerationResult generate(const GeneratorConfig& config);

GenerationResult generate_ldbc_reference(const LdbcRefConfig& config);

// Grouping arithmetic, exposed for tests.
uint64_t group_count(uint64_t target_diameter, int group_diameter_const);

} // namespace graphbench
