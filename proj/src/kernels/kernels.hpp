#pragma once

#include "core/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace graphbench {

struct KernelParams {
    int max_iters = 10;   // PR, LPA
    VertexId source = 0;  // SSSP, BC
    int k = 5;            // KC
    double damping = 0.85;

    void validate(uint64_t n) const; // throws invalid_input_error
};

// Either a scalar count (TC, KC) or a per-vertex array, never both.
struct KernelResult {
    std::optional<uint64_t> scalar;
    std::vector<double> per_vertex;

    // One value per line in vertex order; scalar results as a single line.
    void write(const std::string& path) const;
};

// Synchronous power iteration r' = (1-damping)/n + damping * A D^{-1} r from
// uniform initialization, run for exactly max_iters rounds. Dangling mass is
// redistributed uniformly, so scores always sum to 1.
std::vector<double> pagerank(const CsrGraph& g, const KernelParams& params, int threads = 1);

// Exact distances from params.source; unreachable vertices get +infinity.
// Frontier-based label correcting, exact on termination for weights >= 0.
std::vector<double> sssp(const CsrGraph& g, const KernelParams& params, int threads = 1);

// Component ids are the minimum vertex id of each component (HashMin).
std::vector<VertexId> wcc(const CsrGraph& g, int threads = 1);

// Synchronous label propagation, labels initialized to own id. A vertex's own
// current label votes alongside its neighbors'; ties break to the minimum
// label. Stops after max_iters rounds or when no label changes.
std::vector<VertexId> lpa(const CsrGraph& g, const KernelParams& params, int threads = 1);

// Single-source Brandes dependency scores from params.source on unit
// distances. The source's own score is 0 by convention.
std::vector<double> bc(const CsrGraph& g, const KernelParams& params, int threads = 1);

// Peeling: for k = 1, 2, ... repeatedly delete vertices of residual degree
// < k; coreness(v) is the largest k at which v survives.
std::vector<uint64_t> core_decomposition(const CsrGraph& g, int threads = 1);

// Exact triangle count; each triangle counted once.
uint64_t triangle_count(const CsrGraph& g, int threads = 1);

// Exact k-clique count over the degeneracy-ordered DAG. k > n yields 0.
uint64_t kclique_count(const CsrGraph& g, const KernelParams& params, int threads = 1);

// Name-dispatched entry point for the bench harness and the C API.
// Names: pr, lpa, sssp, wcc, bc, cd, tc, kc.
KernelResult run_kernel(const std::string& name, const CsrGraph& g, const KernelParams& params,
                        int threads = 1);

const std::vector<std::string>& kernel_names();

} // namespace graphbench
