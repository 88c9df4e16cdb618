#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace graphbench {

using VertexId = uint64_t;

struct Edge {
    VertexId src;
    VertexId dst;
    double weight = 1.0;

    friend bool operator==(const Edge& a, const Edge& b) {
        return a.src == b.src && a.dst == b.dst && a.weight == b.weight;
    }
};

// Endpoint pairs plus the vertex-count they are valid against. May hold
// duplicates and both orientations until build_csr() normalizes them.
struct EdgeList {
    uint64_t n = 0;
    bool weighted = false;
    std::vector<Edge> edges;

    void add(VertexId src, VertexId dst, double w = 1.0) { edges.push_back({src, dst, w}); }
    uint64_t size() const { return edges.size(); }
};

// Immutable symmetric CSR. Neighbors within each vertex slice are strictly
// increasing; every undirected edge is stored in both directions, so
// offsets[n] == 2 * m. Safe for concurrent reads.
class CsrGraph {
public:
    CsrGraph() = default;
    CsrGraph(uint64_t n, uint64_t m, std::vector<uint64_t> offsets, std::vector<VertexId> neighbors,
             std::vector<double> weights)
        : n_(n), m_(m), offsets_(std::move(offsets)), neighbors_(std::move(neighbors)),
          weights_(std::move(weights)) {}

    uint64_t num_vertices() const { return n_; }
    uint64_t num_edges() const { return m_; }
    bool weighted() const { return !weights_.empty(); }

    uint64_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }
    // Unit weights when the graph is unweighted.
    std::span<const double> weights(VertexId v) const {
        if (weights_.empty()) return {};
        return {weights_.data() + offsets_[v], weights_.data() + offsets_[v + 1]};
    }

    const std::vector<uint64_t>& offsets() const { return offsets_; }
    const std::vector<VertexId>& adjacency() const { return neighbors_; }

    bool has_edge(VertexId u, VertexId v) const;

private:
    uint64_t n_ = 0;
    uint64_t m_ = 0;
    std::vector<uint64_t> offsets_{0};
    std::vector<VertexId> neighbors_;
    std::vector<double> weights_;
};

// Symmetrize, drop self-loops, merge duplicates keeping the minimum weight.
// Throws invalid_input_error on endpoints >= edges.n.
CsrGraph build_csr(const EdgeList& edges);

// Canonical (src < dst, sorted) edge list of a CSR graph; inverse of build_csr
// up to normalization.
EdgeList to_edge_list(const CsrGraph& g);

} // namespace graphbench
