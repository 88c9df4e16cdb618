#include "stats/stats.hpp"

#include "core/error.hpp"
#include "core/parallel.hpp"
#include "kernels/kernels.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <map>
#include <numeric>

namespace graphbench {

namespace {

// BFS over any adjacency callable; returns (farthest vertex, eccentricity).
template <typename AdjFn>
std::pair<uint64_t, uint64_t> bfs_farthest(uint64_t n, uint64_t start, AdjFn&& adj,
                                           std::vector<int64_t>& dist) {
    dist.assign(n, -1);
    std::deque<uint64_t> queue{start};
    dist[start] = 0;
    uint64_t far = start, far_d = 0;
    while (!queue.empty()) {
        uint64_t u = queue.front();
        queue.pop_front();
        for (uint64_t v : adj(u)) {
            if (dist[v] != -1) continue;
            dist[v] = dist[u] + 1;
            if (static_cast<uint64_t>(dist[v]) > far_d ||
                (static_cast<uint64_t>(dist[v]) == far_d && v < far)) {
                far_d = static_cast<uint64_t>(dist[v]);
                far = v;
            }
            queue.push_back(v);
        }
    }
    return {far, far_d};
}

// Iterated double sweep: keep re-sweeping from the farthest endpoint while
// the eccentricity improves. Still a lower bound on the true diameter.
template <typename AdjFn>
uint64_t double_sweep(uint64_t n, uint64_t start, AdjFn&& adj) {
    std::vector<int64_t> dist;
    auto [far, best] = bfs_farthest(n, start, adj, dist);
    for (int sweep = 0; sweep < 8; ++sweep) {
        auto [next_far, ecc] = bfs_farthest(n, far, adj, dist);
        if (ecc <= best && sweep > 0) break;
        best = std::max(best, ecc);
        if (next_far == far) break;
        far = next_far;
    }
    return best;
}

// Members of the largest component, highest-degree vertex first.
template <typename AdjFn, typename DegFn>
std::vector<uint64_t> largest_component_members(uint64_t n, AdjFn&& adj, DegFn&& deg) {
    std::vector<int64_t> dist(n, -1);
    std::vector<uint64_t> best, members;
    std::deque<uint64_t> queue;
    for (uint64_t s = 0; s < n; ++s) {
        if (dist[s] != -1) continue;
        dist[s] = 0;
        queue.push_back(s);
        members.clear();
        uint64_t heavy = s;
        while (!queue.empty()) {
            uint64_t u = queue.front();
            queue.pop_front();
            members.push_back(u);
            if (deg(u) > deg(heavy)) heavy = u;
            for (uint64_t v : adj(u))
                if (dist[v] == -1) {
                    dist[v] = 1;
                    queue.push_back(v);
                }
        }
        if (members.size() > best.size()) {
            best = members;
            std::swap(best.front(), best[std::find(best.begin(), best.end(), heavy) - best.begin()]);
        }
    }
    return best;
}

// Iterated double sweeps from a handful of spread-out starts; the maximum
// eccentricity seen is still a lower bound on the true diameter.
template <typename AdjFn, typename DegFn>
uint64_t multi_sweep(uint64_t n, AdjFn&& adj, DegFn&& deg) {
    std::vector<uint64_t> members = largest_component_members(n, adj, deg);
    if (members.empty()) return 0;
    uint64_t best = 0;
    size_t starts = std::min<size_t>(members.size(), 8);
    for (size_t i = 0; i < starts; ++i) {
        uint64_t start = members[i * members.size() / starts];
        best = std::max(best, double_sweep(n, start, adj));
    }
    return best;
}

// Sorted-adjacency triangle count plus per-vertex participation marking.
uint64_t count_triangles_marking(const std::vector<std::vector<uint64_t>>& adj,
                                 std::vector<uint8_t>* in_triangle) {
    uint64_t count = 0;
    for (uint64_t u = 0; u < adj.size(); ++u) {
        const auto& nu = adj[u];
        auto u_hi = std::upper_bound(nu.begin(), nu.end(), u);
        for (auto vi = u_hi; vi != nu.end(); ++vi) {
            uint64_t v = *vi;
            const auto& nv = adj[v];
            auto a = std::upper_bound(nu.begin(), nu.end(), v);
            auto b = std::upper_bound(nv.begin(), nv.end(), v);
            while (a != nu.end() && b != nv.end()) {
                if (*a < *b)
                    ++a;
                else if (*a > *b)
                    ++b;
                else {
                    ++count;
                    if (in_triangle) {
                        (*in_triangle)[u] = 1;
                        (*in_triangle)[v] = 1;
                        (*in_triangle)[*a] = 1;
                    }
                    ++a;
                    ++b;
                }
            }
        }
    }
    return count;
}

double clustering_from(uint64_t triangles, const std::vector<std::vector<uint64_t>>& adj) {
    double wedges = 0.0;
    for (const auto& nu : adj) {
        double d = static_cast<double>(nu.size());
        wedges += d * (d - 1.0) / 2.0;
    }
    return wedges > 0.0 ? 3.0 * static_cast<double>(triangles) / wedges : 0.0;
}

// Bridge flags per CSR arc (iterative lowpoint DFS; simple graph, parent
// vertex skipped once per tree edge).
std::vector<uint8_t> bridge_arcs(const CsrGraph& g) {
    uint64_t n = g.num_vertices();
    const auto& offsets = g.offsets();
    std::vector<uint8_t> is_bridge(g.adjacency().size(), 0);
    std::vector<int64_t> disc(n, -1), low(n, 0);
    std::vector<uint64_t> parent(n, UINT64_MAX);

    struct Frame {
        uint64_t v;
        uint64_t edge_idx;
    };
    std::vector<Frame> stack;
    int64_t timer = 0;
    auto arc_index = [&](uint64_t u, uint64_t v) {
        auto adjacent = g.neighbors(u);
        return offsets[u] + (std::lower_bound(adjacent.begin(), adjacent.end(), v) - adjacent.begin());
    };

    for (uint64_t root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        stack.push_back({root, offsets[root]});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.edge_idx < offsets[f.v + 1]) {
                uint64_t w = g.adjacency()[f.edge_idx++];
                if (w == parent[f.v]) continue;
                if (disc[w] == -1) {
                    parent[w] = f.v;
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, offsets[w]});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                uint64_t v = f.v;
                stack.pop_back();
                if (!stack.empty()) {
                    uint64_t p = stack.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] > disc[p]) {
                        is_bridge[arc_index(p, v)] = 1;
                        is_bridge[arc_index(v, p)] = 1;
                    }
                }
            }
        }
    }
    return is_bridge;
}

} // namespace

uint64_t pseudo_diameter(const CsrGraph& g) {
    uint64_t n = g.num_vertices();
    if (n == 0) return 0;
    auto adj = [&](uint64_t u) { return g.neighbors(u); };
    auto deg = [&](uint64_t u) { return g.degree(u); };
    return multi_sweep(n, adj, deg);
}

GraphStats graph_stats(const CsrGraph& g) {
    uint64_t n = g.num_vertices();
    if (n < 2) throw invalid_input_error("graph_stats requires n >= 2");
    GraphStats s;
    s.n = n;
    s.m = g.num_edges();
    s.density = 2.0 * static_cast<double>(s.m) /
                (static_cast<double>(n) * (static_cast<double>(n) - 1.0));
    s.pseudo_diameter = pseudo_diameter(g);

    // Own triangle pass (not kernels::triangle_count) so the two routes stay
    // independently checkable.
    std::vector<std::vector<uint64_t>> adj(n);
    for (uint64_t v = 0; v < n; ++v) {
        auto span = g.neighbors(v);
        adj[v].assign(span.begin(), span.end());
    }
    uint64_t triangles = count_triangles_marking(adj, nullptr);
    s.global_clustering = clustering_from(triangles, adj);

    std::map<uint64_t, uint64_t> hist;
    for (uint64_t v = 0; v < n; ++v) hist[g.degree(v)]++;
    s.degree_histogram.assign(hist.begin(), hist.end());
    return s;
}

std::string GraphStats::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["m"] = m;
    j["density"] = density;
    j["pseudo_diameter"] = pseudo_diameter;
    j["global_clustering"] = global_clustering;
    auto hist = nlohmann::json::array();
    for (auto [d, c] : degree_histogram) hist.push_back({d, c});
    j["degree_histogram"] = hist;
    return j.dump();
}

CommunityStats community_stats(const CsrGraph& g, const std::vector<uint64_t>& assignment,
                               BridgeDef bridge_def) {
    uint64_t n = g.num_vertices();
    if (assignment.size() != n)
        throw invalid_input_error("assignment must cover every vertex exactly once");
    if (n == 0) throw invalid_input_error("community_stats requires a nonempty graph");

    // Dense community indices in ascending id order.
    std::vector<uint64_t> ids = assignment;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::map<uint64_t, uint64_t> to_dense;
    for (uint64_t i = 0; i < ids.size(); ++i) to_dense[ids[i]] = i;
    uint64_t ncomm = ids.size();

    std::vector<uint64_t> comm(n);
    std::vector<std::vector<uint64_t>> members(ncomm);
    for (uint64_t v = 0; v < n; ++v) {
        comm[v] = to_dense[assignment[v]];
        members[comm[v]].push_back(v);
    }

    std::vector<uint8_t> arc_bridges;
    if (bridge_def == BridgeDef::Bridges) arc_bridges = bridge_arcs(g);

    std::vector<uint64_t> cut(ncomm, 0), vol(ncomm, 0), cut_bridges(ncomm, 0);
    const auto& offsets = g.offsets();
    for (uint64_t v = 0; v < n; ++v) {
        vol[comm[v]] += g.degree(v);
        for (uint64_t e = offsets[v]; e < offsets[v + 1]; ++e) {
            uint64_t u = g.adjacency()[e];
            if (comm[u] != comm[v]) {
                cut[comm[v]]++;
                if (!arc_bridges.empty() && arc_bridges[e]) cut_bridges[comm[v]]++;
            }
        }
    }

    double total_vol = 2.0 * static_cast<double>(g.num_edges());
    CommunityStats out;
    out.communities.reserve(ncomm);
    for (uint64_t ci = 0; ci < ncomm; ++ci) {
        CommunityRecord rec;
        rec.id = ids[ci];
        rec.size = members[ci].size();

        // Induced adjacency in local indices.
        std::map<uint64_t, uint64_t> local;
        for (uint64_t i = 0; i < members[ci].size(); ++i) local[members[ci][i]] = i;
        std::vector<std::vector<uint64_t>> adj(members[ci].size());
        for (uint64_t i = 0; i < members[ci].size(); ++i) {
            for (uint64_t u : g.neighbors(members[ci][i]))
                if (comm[u] == ci) adj[i].push_back(local[u]);
            std::sort(adj[i].begin(), adj[i].end());
        }

        std::vector<uint8_t> in_tri(members[ci].size(), 0);
        uint64_t tris = count_triangles_marking(adj, &in_tri);
        rec.clustering_coefficient = clustering_from(tris, adj);
        uint64_t participating = std::accumulate(in_tri.begin(), in_tri.end(), uint64_t{0});
        rec.triangle_participation_ratio =
            static_cast<double>(participating) / static_cast<double>(rec.size);

        auto local_adj = [&](uint64_t u) -> const std::vector<uint64_t>& { return adj[u]; };
        auto local_deg = [&](uint64_t u) { return adj[u].size(); };
        rec.diameter = multi_sweep(rec.size, local_adj, local_deg);

        double denom = std::min(static_cast<double>(vol[ci]), total_vol - static_cast<double>(vol[ci]));
        rec.conductance = denom > 0.0 ? static_cast<double>(cut[ci]) / denom : 0.0;

        if (bridge_def == BridgeDef::Bridges)
            rec.bridge_ratio = cut[ci] > 0 ? static_cast<double>(cut_bridges[ci]) /
                                                 static_cast<double>(cut[ci])
                                           : 0.0;
        else
            rec.bridge_ratio = vol[ci] > 0 ? static_cast<double>(cut[ci]) /
                                                 static_cast<double>(vol[ci])
                                           : 0.0;
        out.communities.push_back(rec);
    }
    return out;
}

std::string CommunityStats::to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto& c : communities) {
        nlohmann::json j;
        j["id"] = c.id;
        j["size"] = c.size;
        j["cc"] = c.clustering_coefficient;
        j["tpr"] = c.triangle_participation_ratio;
        j["br"] = c.bridge_ratio;
        j["diam"] = c.diameter;
        j["cond"] = c.conductance;
        arr.push_back(j);
    }
    return nlohmann::json{{"communities", arr}}.dump();
}

std::string CommunityStats::to_csv() const {
    std::string out = "community,size,cc,tpr,br,diam,cond\n";
    char buf[256];
    for (const auto& c : communities) {
        std::snprintf(buf, sizeof buf, "%llu,%llu,%.9g,%.9g,%.9g,%llu,%.9g\n",
                      static_cast<unsigned long long>(c.id),
                      static_cast<unsigned long long>(c.size), c.clustering_coefficient,
                      c.triangle_participation_ratio, c.bridge_ratio,
                      static_cast<unsigned long long>(c.diameter), c.conductance);
        out += buf;
    }
    return out;
}

std::vector<double> linear_bin_edges(double lo, double hi, size_t bins) {
    if (!(hi > lo) || bins == 0) throw invalid_input_error("bad linear binning range");
    std::vector<double> edges(bins + 1);
    for (size_t i = 0; i <= bins; ++i)
        edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
    return edges;
}

std::vector<double> log_bin_edges(double lo, double hi, size_t bins) {
    if (!(lo > 0.0) || !(hi > lo) || bins == 0) throw invalid_input_error("bad log binning range");
    std::vector<double> edges(bins + 1);
    double llo = std::log(lo), lhi = std::log(hi);
    for (size_t i = 0; i <= bins; ++i)
        edges[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) / static_cast<double>(bins));
    edges.front() = lo;
    edges.back() = hi;
    return edges;
}

Distribution bin_samples(const std::vector<double>& samples, const std::vector<double>& edges) {
    if (edges.size() < 2) throw invalid_input_error("binning requires at least one bin");
    Distribution d;
    d.edges = edges;
    d.masses.assign(edges.size() - 1, 0.0);
    for (double x : samples) {
        // Clamp into the closed range, then locate the half-open bin.
        if (x <= edges.front()) {
            d.masses.front() += 1.0;
            continue;
        }
        if (x >= edges.back()) {
            d.masses.back() += 1.0;
            continue;
        }
        size_t idx = std::upper_bound(edges.begin(), edges.end(), x) - edges.begin() - 1;
        d.masses[idx] += 1.0;
    }
    if (!samples.empty())
        for (double& mass : d.masses) mass /= static_cast<double>(samples.size());
    return d;
}

double js_divergence(const Distribution& p, const Distribution& q) {
    if (p.masses.size() != q.masses.size() || p.edges != q.edges)
        throw invalid_input_error("js_divergence requires identical binning");
    double jsd = 0.0;
    for (size_t i = 0; i < p.masses.size(); ++i) {
        double pi = p.masses[i], qi = q.masses[i];
        double mi = 0.5 * (pi + qi);
        if (pi > 0.0) jsd += 0.5 * pi * std::log2(pi / mi);
        if (qi > 0.0) jsd += 0.5 * qi * std::log2(qi / mi);
    }
    return jsd;
}

namespace {

std::vector<uint64_t> detect_communities(const CsrGraph& g, const std::string& method) {
    if (method == "lpa") {
        KernelParams params;
        auto labels = lpa(g, params, hardware_threads());
        return {labels.begin(), labels.end()};
    }
    if (method == "wcc") {
        auto labels = wcc(g, hardware_threads());
        return {labels.begin(), labels.end()};
    }
    throw invalid_input_error("unknown community method: " + method + " (expected lpa|wcc)");
}

} // namespace

SimilarityReport similarity_report(const CsrGraph& a, const CsrGraph& b,
                                   const std::string& community_method, BridgeDef bridge_def) {
    CommunityStats sa = community_stats(a, detect_communities(a, community_method), bridge_def);
    CommunityStats sb = community_stats(b, detect_communities(b, community_method), bridge_def);

    SimilarityReport report;
    report.communities_a = sa.communities.size();
    report.communities_b = sb.communities.size();
    if (report.communities_a <= 1)
        report.warnings.push_back("degenerate single-community assignment on graph a");
    if (report.communities_b <= 1)
        report.warnings.push_back("degenerate single-community assignment on graph b");

    auto collect = [](const CommunityStats& s, auto&& get) {
        std::vector<double> vals;
        vals.reserve(s.communities.size());
        for (const auto& c : s.communities) vals.push_back(get(c));
        return vals;
    };
    auto ratio_jsd = [&](auto&& get) {
        auto edges = linear_bin_edges(0.0, 1.0, 32);
        return js_divergence(bin_samples(collect(sa, get), edges),
                             bin_samples(collect(sb, get), edges));
    };
    auto log_jsd = [&](auto&& get) {
        auto va = collect(sa, get);
        auto vb = collect(sb, get);
        double hi = 1.0;
        for (double v : va) hi = std::max(hi, v);
        for (double v : vb) hi = std::max(hi, v);
        auto edges = log_bin_edges(1.0, hi + 1.0, 32);
        // Zeros (singleton diameters) clamp into the first bin.
        return js_divergence(bin_samples(va, edges), bin_samples(vb, edges));
    };

    report.metrics["CC"] = ratio_jsd([](const CommunityRecord& c) { return c.clustering_coefficient; });
    report.metrics["TPR"] =
        ratio_jsd([](const CommunityRecord& c) { return c.triangle_participation_ratio; });
    report.metrics["BR"] = ratio_jsd([](const CommunityRecord& c) { return c.bridge_ratio; });
    report.metrics["Cond"] = ratio_jsd([](const CommunityRecord& c) { return c.conductance; });
    report.metrics["Diam"] =
        log_jsd([](const CommunityRecord& c) { return static_cast<double>(c.diameter); });
    report.metrics["Size"] =
        log_jsd([](const CommunityRecord& c) { return static_cast<double>(c.size); });
    return report;
}

std::string SimilarityReport::to_json() const {
    nlohmann::json j;
    j["metrics"] = metrics;
    j["communities_a"] = communities_a;
    j["communities_b"] = communities_b;
    j["warnings"] = warnings;
    return j.dump();
}

} // namespace graphbench
