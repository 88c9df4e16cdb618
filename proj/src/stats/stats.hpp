#pragma once

#include "core/graph.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace graphbench {

struct GraphStats {
    uint64_t n = 0;
    uint64_t m = 0;
    double density = 0.0; // 2m / (n (n-1))
    uint64_t pseudo_diameter = 0;
    double global_clustering = 0.0; // 3 * triangles / wedges
    std::vector<std::pair<uint64_t, uint64_t>> degree_histogram; // (degree, count), ascending

    std::string to_json() const;
};

// Density and clustering are exact; the diameter column is a BFS double-sweep
// lower bound, measured on the largest component.
GraphStats graph_stats(const CsrGraph& g);

// Double-sweep pseudo-diameter of the largest connected component.
uint64_t pseudo_diameter(const CsrGraph& g);

enum class BridgeDef {
    Bridges,     // cut edges that are bridges of g / cut edges
    CutFraction, // cut edges / all edges incident to the community
};

struct CommunityRecord {
    uint64_t id = 0;
    uint64_t size = 0;
    double clustering_coefficient = 0.0;
    double triangle_participation_ratio = 0.0;
    double bridge_ratio = 0.0;
    uint64_t diameter = 0;
    double conductance = 0.0;
};

struct CommunityStats {
    std::vector<CommunityRecord> communities;

    std::string to_json() const;
    std::string to_csv() const;
};

// Per-community structure over a total assignment (one community id per
// vertex; ids need not be dense). Throws invalid_input_error when the
// assignment length differs from the vertex count.
CommunityStats community_stats(const CsrGraph& g, const std::vector<uint64_t>& assignment,
                               BridgeDef bridge_def = BridgeDef::Bridges);

// Binned probability distribution; masses sum to 1 for nonempty samples.
struct Distribution {
    std::vector<double> edges;  // size bins + 1, strictly increasing
    std::vector<double> masses; // size bins
};

std::vector<double> linear_bin_edges(double lo, double hi, size_t bins);
std::vector<double> log_bin_edges(double lo, double hi, size_t bins);
Distribution bin_samples(const std::vector<double>& samples, const std::vector<double>& edges);

// Jensen-Shannon divergence, base 2: 0 iff p = q, 1 iff disjoint supports.
// Requires identical binning.
double js_divergence(const Distribution& p, const Distribution& q);

struct SimilarityReport {
    std::map<std::string, double> metrics; // CC, TPR, BR, Diam, Cond, Size
    uint64_t communities_a = 0;
    uint64_t communities_b = 0;
    std::vector<std::string> warnings;

    std::string to_json() const;
};

// Community-statistic divergence between two graphs: detect communities with
// the chosen kernel ("lpa" or "wcc"), bin each of the six per-community
// statistics over shared edges, and report one JSD per statistic.
SimilarityReport similarity_report(const CsrGraph& a, const CsrGraph& b,
                                   const std::string& community_method = "lpa",
                                   BridgeDef bridge_def = BridgeDef::Bridges);

} // namespace graphbench
