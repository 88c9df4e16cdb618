#include "kernels/kernels.hpp"

#include "core/error.hpp"
#include "core/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <limits>
#include <memory>

namespace graphbench {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void KernelParams::validate(uint64_t n) const {
    if (max_iters < 1) throw invalid_input_error("max_iters must be >= 1");
    if (n > 0 && source >= n)
        throw invalid_input_error("source vertex " + std::to_string(source) + " >= n = " + std::to_string(n));
    if (k < 3) throw invalid_input_error("clique size k must be >= 3");
    if (!(damping > 0.0 && damping < 1.0)) throw invalid_input_error("damping must lie in (0, 1)");
}

void KernelResult::write(const std::string& path) const {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw io_error("cannot open for writing: " + path);
    auto closer = std::unique_ptr<std::FILE, int (*)(std::FILE*)>(f, &std::fclose);
    if (scalar) {
        std::fprintf(f, "%" PRIu64 "\n", *scalar);
    } else {
        for (double v : per_vertex) {
            if (std::isinf(v))
                std::fprintf(f, "inf\n");
            else
                std::fprintf(f, "%.17g\n", v);
        }
    }
    if (std::ferror(f)) throw io_error("write failed: " + path);
}

std::vector<double> pagerank(const CsrGraph& g, const KernelParams& params, int threads) {
    uint64_t n = g.num_vertices();
    params.validate(n);
    if (n == 0) return {};
    const double d = params.damping;
    std::vector<double> rank(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n, 0.0);
    for (int iter = 0; iter < params.max_iters; ++iter) {
        double dangling = parallel_sum<double>(0, n, threads, [&](uint64_t v) {
            return g.degree(v) == 0 ? rank[v] : 0.0;
        });
        double base = (1.0 - d) / static_cast<double>(n) + d * dangling / static_cast<double>(n);
        parallel_for(0, n, threads, [&](uint64_t v) {
            double acc = 0.0;
            for (VertexId u : g.neighbors(v)) acc += rank[u] / static_cast<double>(g.degree(u));
            next[v] = base + d * acc;
        });
        rank.swap(next);
    }
    return rank;
}

namespace {

// Non-negative doubles order the same as their bit patterns, so a CAS loop on
// the raw bits gives an atomic min.
bool atomic_min_double(std::atomic<uint64_t>& slot, double value) {
    uint64_t bits;
    std::memcpy(&bits, &value, 8);
    uint64_t cur = slot.load(std::memory_order_relaxed);
    while (bits < cur) {
        if (slot.compare_exchange_weak(cur, bits, std::memory_order_relaxed)) return true;
    }
    return false;
}

double load_double(const std::atomic<uint64_t>& slot) {
    uint64_t bits = slot.load(std::memory_order_relaxed);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

} // namespace

std::vector<double> sssp(const CsrGraph& g, const KernelParams& params, int threads) {
    uint64_t n = g.num_vertices();
    params.validate(n);
    if (n == 0) return {};
    if (g.weighted()) {
        for (VertexId v = 0; v < n; ++v)
            for (double w : g.weights(v))
                if (w < 0.0) throw invalid_input_error("sssp requires non-negative weights");
    }

    std::vector<std::atomic<uint64_t>> dist_bits(n);
    uint64_t inf_bits;
    std::memcpy(&inf_bits, &kInf, 8);
    for (auto& s : dist_bits) s.store(inf_bits, std::memory_order_relaxed);
    atomic_min_double(dist_bits[params.source], 0.0);

    std::vector<VertexId> frontier{params.source};
    std::vector<std::atomic<uint8_t>> queued(n);
    for (auto& q : queued) q.store(0, std::memory_order_relaxed);

    int workers = std::max(threads, 1);
    std::vector<std::vector<VertexId>> next(workers);
    while (!frontier.empty()) {
        // One data-parallel superstep per round, barrier included: every round
        // pays the dispatch cost regardless of frontier size, which is the
        // BSP behavior the benchmark measures.
        parallel_for_dynamic(0, frontier.size(), workers, 64, [&](int w, uint64_t idx) {
            VertexId u = frontier[idx];
            queued[u].store(0, std::memory_order_relaxed);
            double du = load_double(dist_bits[u]);
            auto adj = g.neighbors(u);
            auto wts = g.weights(u);
            for (size_t e = 0; e < adj.size(); ++e) {
                VertexId v = adj[e];
                double cand = du + (wts.empty() ? 1.0 : wts[e]);
                if (atomic_min_double(dist_bits[v], cand)) {
                    if (queued[v].exchange(1, std::memory_order_relaxed) == 0) next[w].push_back(v);
                }
            }
        });
        frontier.clear();
        for (auto& buf : next) {
            frontier.insert(frontier.end(), buf.begin(), buf.end());
            buf.clear();
        }
    }

    std::vector<double> dist(n);
    for (uint64_t v = 0; v < n; ++v) dist[v] = load_double(dist_bits[v]);
    return dist;
}

std::vector<VertexId> wcc(const CsrGraph& g, int threads) {
    uint64_t n = g.num_vertices();
    std::vector<VertexId> label(n), next(n);
    for (uint64_t v = 0; v < n; ++v) label[v] = v;
    std::atomic<bool> changed{true};
    while (changed.load(std::memory_order_relaxed)) {
        changed.store(false, std::memory_order_relaxed);
        parallel_for(0, n, threads, [&](uint64_t v) {
            VertexId best = label[v];
            for (VertexId u : g.neighbors(v)) best = std::min(best, label[u]);
            next[v] = best;
            if (best != label[v]) changed.store(true, std::memory_order_relaxed);
        });
        label.swap(next);
    }
    return label;
}

std::vector<VertexId> lpa(const CsrGraph& g, const KernelParams& params, int threads) {
    uint64_t n = g.num_vertices();
    params.validate(n);
    std::vector<VertexId> label(n), next(n);
    for (uint64_t v = 0; v < n; ++v) label[v] = v;
    int workers = std::max(threads, 1);
    std::vector<std::vector<VertexId>> scratch(workers);
    for (int iter = 0; iter < params.max_iters; ++iter) {
        std::atomic<bool> changed{false};
        parallel_for_dynamic(0, n, workers, 256, [&](int w, uint64_t v) {
            auto& votes = scratch[w];
            votes.clear();
            votes.push_back(label[v]); // own label participates in the vote
            for (VertexId u : g.neighbors(v)) votes.push_back(label[u]);
            std::sort(votes.begin(), votes.end());
            VertexId best = votes[0];
            size_t best_count = 0, run = 0;
            for (size_t i = 0; i < votes.size(); ++i) {
                run = (i > 0 && votes[i] == votes[i - 1]) ? run + 1 : 1;
                if (run > best_count) { // ascending order makes ties resolve to the minimum
                    best_count = run;
                    best = votes[i];
                }
            }
            next[v] = best;
            if (best != label[v]) changed.store(true, std::memory_order_relaxed);
        });
        label.swap(next);
        if (!changed.load(std::memory_order_relaxed)) break;
    }
    return label;
}

std::vector<double> bc(const CsrGraph& g, const KernelParams& params, int threads) {
    uint64_t n = g.num_vertices();
    params.validate(n);
    if (n == 0) return {};
    const VertexId source = params.source;

    std::vector<int64_t> level(n, -1);
    std::vector<double> sigma(n, 0.0);
    std::vector<std::vector<VertexId>> levels;
    level[source] = 0;
    sigma[source] = 1.0;
    levels.push_back({source});

    // Forward sweep: shortest-path counts, level by level.
    while (true) {
        const auto& cur = levels.back();
        int64_t depth = static_cast<int64_t>(levels.size()) - 1;
        std::vector<VertexId> nxt;
        for (VertexId u : cur) {
            for (VertexId v : g.neighbors(u)) {
                if (level[v] == -1) {
                    level[v] = depth + 1;
                    nxt.push_back(v);
                }
            }
        }
        if (nxt.empty()) break;
        std::sort(nxt.begin(), nxt.end());
        nxt.erase(std::unique(nxt.begin(), nxt.end()), nxt.end());
        parallel_for(0, nxt.size(), threads, [&](uint64_t i) {
            VertexId v = nxt[i];
            double acc = 0.0;
            for (VertexId u : g.neighbors(v))
                if (level[u] == depth) acc += sigma[u];
            sigma[v] = acc;
        });
        levels.push_back(std::move(nxt));
    }

    // Backward sweep: pull dependency from successors one level down.
    std::vector<double> delta(n, 0.0);
    for (size_t li = levels.size(); li-- > 1;) {
        const auto& cur = levels[li - 1];
        int64_t depth = static_cast<int64_t>(li) - 1;
        parallel_for(0, cur.size(), threads, [&](uint64_t i) {
            VertexId v = cur[i];
            double acc = 0.0;
            for (VertexId w : g.neighbors(v))
                if (level[w] == depth + 1) acc += sigma[v] / sigma[w] * (1.0 + delta[w]);
            delta[v] = acc;
        });
    }
    delta[source] = 0.0;
    return delta;
}

std::vector<uint64_t> core_decomposition(const CsrGraph& g, int threads) {
    uint64_t n = g.num_vertices();
    std::vector<std::atomic<uint64_t>> rdeg(n);
    for (uint64_t v = 0; v < n; ++v) rdeg[v].store(g.degree(v), std::memory_order_relaxed);
    std::vector<uint64_t> coreness(n, 0);
    std::vector<uint8_t> alive(n, 1);
    uint64_t remaining = n;
    uint64_t k = 0;
    int workers = std::max(threads, 1);

    while (remaining > 0) {
        // Skip straight to the next k that removes something.
        uint64_t min_rdeg = UINT64_MAX;
        for (uint64_t v = 0; v < n; ++v)
            if (alive[v]) min_rdeg = std::min(min_rdeg, rdeg[v].load(std::memory_order_relaxed));
        k = std::max(k + 1, min_rdeg + 1);

        std::vector<VertexId> frontier;
        for (uint64_t v = 0; v < n; ++v)
            if (alive[v] && rdeg[v].load(std::memory_order_relaxed) < k) frontier.push_back(v);
        while (!frontier.empty()) {
            for (VertexId v : frontier) {
                alive[v] = 0;
                coreness[v] = k - 1;
            }
            remaining -= frontier.size();
            std::vector<std::vector<VertexId>> next(workers);
            parallel_for_dynamic(0, frontier.size(), workers, 64, [&](int w, uint64_t i) {
                for (VertexId u : g.neighbors(frontier[i])) {
                    if (!alive[u]) continue;
                    if (rdeg[u].fetch_sub(1, std::memory_order_relaxed) == k) next[w].push_back(u);
                }
            });
            frontier.clear();
            for (auto& buf : next)
                for (VertexId v : buf)
                    if (alive[v]) frontier.push_back(v);
            std::sort(frontier.begin(), frontier.end());
            frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
        }
    }
    return coreness;
}

namespace {

std::span<const VertexId> suffix_after(const CsrGraph& g, VertexId u, VertexId floor) {
    auto adj = g.neighbors(u);
    auto it = std::upper_bound(adj.begin(), adj.end(), floor);
    return {it, adj.end()};
}

uint64_t intersect_count(std::span<const VertexId> a, std::span<const VertexId> b) {
    uint64_t count = 0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (a[i] > b[j])
            ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

} // namespace

uint64_t triangle_count(const CsrGraph& g, int threads) {
    uint64_t n = g.num_vertices();
    int workers = std::max(threads, 1);
    std::vector<uint64_t> partial(workers, 0);
    // Small blocks: hub vertices dominate the intersection work, so coarse
    // blocks starve the other workers.
    parallel_for_dynamic(0, n, workers, 16, [&](int w, uint64_t u) {
        auto ahead_u = suffix_after(g, u, u);
        for (VertexId v : ahead_u)
            partial[w] += intersect_count(suffix_after(g, u, v), suffix_after(g, v, v));
    });
    uint64_t total = 0;
    for (uint64_t p : partial) total += p;
    return total;
}

namespace {

// Degeneracy (min-degree peeling) order; classic bucket implementation.
std::vector<VertexId> degeneracy_order(const CsrGraph& g) {
    uint64_t n = g.num_vertices();
    uint64_t max_deg = 0;
    for (uint64_t v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
    std::vector<uint64_t> deg(n), pos(n);
    std::vector<VertexId> vert(n);
    std::vector<uint64_t> bin(max_deg + 1, 0);
    for (uint64_t v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        bin[deg[v]]++;
    }
    uint64_t start = 0;
    for (uint64_t d = 0; d <= max_deg; ++d) {
        uint64_t count = bin[d];
        bin[d] = start;
        start += count;
    }
    for (uint64_t v = 0; v < n; ++v) {
        pos[v] = bin[deg[v]]++;
        vert[pos[v]] = v;
    }
    for (uint64_t d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
    bin[0] = 0;
    for (uint64_t i = 0; i < n; ++i) {
        VertexId v = vert[i];
        for (VertexId u : g.neighbors(v)) {
            if (deg[u] > deg[v]) {
                uint64_t du = deg[u], pu = pos[u];
                uint64_t pw = bin[du];
                VertexId w = vert[pw];
                if (u != w) {
                    vert[pu] = w;
                    vert[pw] = u;
                    pos[u] = pw;
                    pos[w] = pu;
                }
                bin[du]++;
                deg[u]--;
            }
        }
    }
    return vert;
}

uint64_t count_cliques_rec(const std::vector<std::vector<uint32_t>>& dag, std::vector<uint32_t>& cand,
                           int depth, int k) {
    if (depth == k - 1) return cand.size();
    uint64_t total = 0;
    std::vector<uint32_t> next;
    for (size_t i = 0; i < cand.size(); ++i) {
        const auto& out = dag[cand[i]];
        next.clear();
        // cand and out are both sorted.
        std::set_intersection(cand.begin() + i + 1, cand.end(), out.begin(), out.end(),
                              std::back_inserter(next));
        if (!next.empty()) total += count_cliques_rec(dag, next, depth + 1, k);
    }
    return total;
}

} // namespace

uint64_t kclique_count(const CsrGraph& g, const KernelParams& params, int threads) {
    uint64_t n = g.num_vertices();
    params.validate(n);
    uint64_t k = static_cast<uint64_t>(params.k);
    if (k > n) return 0;
    if (n > UINT32_MAX) throw invalid_input_error("kclique_count supports at most 2^32 vertices");

    std::vector<VertexId> order = degeneracy_order(g);
    std::vector<uint32_t> rank(n);
    for (uint64_t i = 0; i < n; ++i) rank[order[i]] = static_cast<uint32_t>(i);
    // DAG in rank space: edges point from earlier to later peel rank.
    std::vector<std::vector<uint32_t>> dag(n);
    for (uint64_t v = 0; v < n; ++v) {
        for (VertexId u : g.neighbors(v))
            if (rank[u] > rank[v]) dag[rank[v]].push_back(rank[u]);
        std::sort(dag[rank[v]].begin(), dag[rank[v]].end());
    }

    int workers = std::max(threads, 1);
    std::vector<uint64_t> partial(workers, 0);
    parallel_for_dynamic(0, n, workers, 64, [&](int w, uint64_t r) {
        std::vector<uint32_t> cand = dag[r];
        if (cand.size() + 1 >= k) partial[w] += count_cliques_rec(dag, cand, 1, static_cast<int>(k));
    });
    uint64_t total = 0;
    for (uint64_t p : partial) total += p;
    return total;
}

const std::vector<std::string>& kernel_names() {
    static const std::vector<std::string> names = {"pr", "lpa", "sssp", "wcc",
                                                   "bc", "cd",  "tc",   "kc"};
    return names;
}

KernelResult run_kernel(const std::string& name, const CsrGraph& g, const KernelParams& params,
                        int threads) {
    KernelResult result;
    auto to_doubles = [](const auto& xs) {
        std::vector<double> out(xs.size());
        for (size_t i = 0; i < xs.size(); ++i) out[i] = static_cast<double>(xs[i]);
        return out;
    };
    if (name == "pr")
        result.per_vertex = pagerank(g, params, threads);
    else if (name == "lpa")
        result.per_vertex = to_doubles(lpa(g, params, threads));
    else if (name == "sssp")
        result.per_vertex = sssp(g, params, threads);
    else if (name == "wcc")
        result.per_vertex = to_doubles(wcc(g, threads));
    else if (name == "bc")
        result.per_vertex = bc(g, params, threads);
    else if (name == "cd")
        result.per_vertex = to_doubles(core_decomposition(g, threads));
    else if (name == "tc")
        result.scalar = triangle_count(g, threads);
    else if (name == "kc")
        result.scalar = kclique_count(g, params, threads);
    else
        throw invalid_input_error("unknown kernel: " + name +
                                  " (expected pr|lpa|sssp|wcc|bc|cd|tc|kc)");
    return result;
}

} // namespace graphbench
