#include "core/graph.hpp"

#include "core/error.hpp"

#include <algorithm>

namespace graphbench {

bool CsrGraph::has_edge(VertexId u, VertexId v) const {
    auto adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

CsrGraph build_csr(const EdgeList& input) {
    const uint64_t n = input.n;
    struct Arc {
        VertexId src, dst;
        double weight;
    };
    std::vector<Arc> arcs;
    arcs.reserve(input.edges.size() * 2);
    for (const Edge& e : input.edges) {
        if (e.src >= n || e.dst >= n)
            throw invalid_input_error("edge endpoint out of range: (" + std::to_string(e.src) +
                                      ", " + std::to_string(e.dst) + ") with n = " + std::to_string(n));
        if (e.src == e.dst) continue; // self-loops dropped
        arcs.push_back({e.src, e.dst, e.weight});
        arcs.push_back({e.dst, e.src, e.weight});
    }
    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
        if (a.src != b.src) return a.src < b.src;
        if (a.dst != b.dst) return a.dst < b.dst;
        return a.weight < b.weight;
    });
    // Duplicates collapse to the minimum weight; the sort above puts it first.
    size_t kept = 0;
    for (size_t i = 0; i < arcs.size(); ++i) {
        if (kept > 0 && arcs[kept - 1].src == arcs[i].src && arcs[kept - 1].dst == arcs[i].dst)
            continue;
        arcs[kept++] = arcs[i];
    }
    arcs.resize(kept);

    std::vector<uint64_t> offsets(n + 1, 0);
    for (const Arc& a : arcs) offsets[a.src + 1]++;
    for (uint64_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];

    std::vector<VertexId> neighbors(arcs.size());
    std::vector<double> weights;
    if (input.weighted) weights.resize(arcs.size());
    for (size_t i = 0; i < arcs.size(); ++i) {
        neighbors[i] = arcs[i].dst;
        if (input.weighted) weights[i] = arcs[i].weight;
    }
    return CsrGraph(n, kept / 2, std::move(offsets), std::move(neighbors), std::move(weights));
}

EdgeList to_edge_list(const CsrGraph& g) {
    EdgeList out;
    out.n = g.num_vertices();
    out.weighted = g.weighted();
    out.edges.reserve(g.num_edges());
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        auto adj = g.neighbors(u);
        auto w = g.weights(u);
        for (size_t i = 0; i < adj.size(); ++i) {
            if (adj[i] > u) out.add(u, adj[i], w.empty() ? 1.0 : w[i]);
        }
    }
    return out;
}

} // namespace graphbench
