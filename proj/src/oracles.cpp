#include "dagchain/oracles.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <queue>
#include <string>

namespace dagchain {

std::uint64_t ReachMatrix::row_count(VertexId s) const {
    std::uint64_t c = 0;
    const std::uint64_t* r = row_data(s);
    for (std::size_t w = 0; w < words_; ++w) c += std::popcount(r[w]);
    return c;
}

void ReachMatrix::write(std::ostream& out) const {
    std::uint64_t n64 = n_;
    out.write(reinterpret_cast<const char*>(&n64), sizeof n64);
    out.write(reinterpret_cast<const char*>(bits_.data()),
              static_cast<std::streamsize>(bits_.size() * sizeof(std::uint64_t)));
}

ReachMatrix transitive_closure(const Dag& g, std::uint32_t matrix_cap) {
    VertexId n = g.num_vertices();
    if (n > matrix_cap)
        throw MemoryBudgetError("closure matrix for n=" + std::to_string(n) +
                                " exceeds cap " + std::to_string(matrix_cap) +
                                " (needs n^2/8 = " + std::to_string((std::uint64_t)n * n / 8) +
                                " bytes)");
    ReachMatrix r(n);
    TopoOrder t = topo_sort(g);
    for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
        VertexId v = *it;
        r.set(v, v);
        std::uint64_t* row = r.row_data(v);
        for (VertexId s : g.successors(v)) {
            const std::uint64_t* srow = r.row_data(s);
            for (std::size_t w = 0; w < r.words_per_row(); ++w) row[w] |= srow[w];
        }
    }
    return r;
}

EdgeList EdgePartition::reduction_edges(const Dag& g) const {
    EdgeList out;
    out.reserve(e_red);
    g.for_each_edge([&](VertexId u, VertexId v, std::uint64_t e) {
        if (!is_transitive[e]) out.emplace_back(u, v);
    });
    return out;
}

EdgeList EdgePartition::transitive_edges(const Dag& g) const {
    EdgeList out;
    out.reserve(e_tr);
    g.for_each_edge([&](VertexId u, VertexId v, std::uint64_t e) {
        if (is_transitive[e]) out.emplace_back(u, v);
    });
    return out;
}

EdgePartition transitive_reduction(const Dag& g, const ReachMatrix& closure) {
    EdgePartition p;
    p.is_transitive.assign(g.num_edges(), 0);
    g.for_each_edge([&](VertexId u, VertexId v, std::uint64_t e) {
        for (VertexId w : g.successors(u)) {
            if (w != v && closure.get(w, v)) {
                p.is_transitive[e] = 1;
                break;
            }
        }
    });
    for (std::uint8_t f : p.is_transitive) p.e_tr += f;
    p.e_red = g.num_edges() - p.e_tr;
    return p;
}

namespace {

// Hopcroft-Karp over an implicit bipartite graph given as CSR from left
// vertices to right vertices. Returns match_left (right partner of each
// left vertex or kUnmatched).
constexpr VertexId kUnmatched = 0xFFFFFFFFu;

std::vector<VertexId> hopcroft_karp(VertexId n, const std::vector<std::uint64_t>& off,
                                    const std::vector<VertexId>& to) {
    std::vector<VertexId> match_l(n, kUnmatched), match_r(n, kUnmatched);
    std::vector<std::uint32_t> dist(n);
    constexpr std::uint32_t kInf = 0xFFFFFFFFu;
    std::vector<VertexId> queue(n);

    auto bfs = [&]() -> bool {
        std::size_t head = 0, tail = 0;
        for (VertexId u = 0; u < n; ++u) {
            if (match_l[u] == kUnmatched) {
                dist[u] = 0;
                queue[tail++] = u;
            } else {
                dist[u] = kInf;
            }
        }
        bool found = false;
        while (head < tail) {
            VertexId u = queue[head++];
            for (std::uint64_t e = off[u]; e < off[u + 1]; ++e) {
                VertexId w = match_r[to[e]];
                if (w == kUnmatched) {
                    found = true;
                } else if (dist[w] == kInf) {
                    dist[w] = dist[u] + 1;
                    queue[tail++] = w;
                }
            }
        }
        return found;
    };

    // Iterative DFS along the BFS layering.
    std::vector<std::uint64_t> it_pos(n);
    std::vector<VertexId> stack;
    auto dfs = [&](VertexId root) -> bool {
        stack.clear();
        stack.push_back(root);
        it_pos[root] = off[root];
        while (!stack.empty()) {
            VertexId u = stack.back();
            bool advanced = false;
            while (it_pos[u] < off[u + 1]) {
                VertexId v = to[it_pos[u]++];
                VertexId w = match_r[v];
                if (w == kUnmatched) {
                    // Augment along the stack.
                    for (std::size_t i = stack.size(); i-- > 0;) {
                        VertexId lu = stack[i];
                        VertexId pv = v;
                        v = match_l[lu];
                        match_l[lu] = pv;
                        match_r[pv] = lu;
                    }
                    return true;
                }
                if (dist[w] == dist[u] + 1) {
                    dist[w] = kInf;  // claimed by this phase
                    it_pos[w] = off[w];
                    stack.push_back(w);
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                dist[u] = kInf;
                stack.pop_back();
            }
        }
        return false;
    };

    while (bfs()) {
        for (VertexId u = 0; u < n; ++u)
            if (match_l[u] == kUnmatched) dfs(u);
    }
    return match_l;
}

}  // namespace

WidthResult width_fulkerson(const Dag& g, std::uint32_t matrix_cap) {
    VertexId n = g.num_vertices();
    ReachMatrix closure = transitive_closure(g, matrix_cap);

    // Bipartite edges (x_i, y_j) for every strict closure pair i -> j.
    std::vector<std::uint64_t> off(n + 1, 0);
    for (VertexId i = 0; i < n; ++i) off[i + 1] = off[i] + closure.row_count(i) - 1;
    std::vector<VertexId> to(off[n]);
    for (VertexId i = 0; i < n; ++i) {
        std::uint64_t pos = off[i];
        const std::uint64_t* row = closure.row_data(i);
        for (std::size_t w = 0; w < closure.words_per_row(); ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                unsigned b = std::countr_zero(bits);
                bits &= bits - 1;
                VertexId j = static_cast<VertexId>(w * 64 + b);
                if (j != i) to[pos++] = j;
            }
        }
    }

    std::vector<VertexId> match = hopcroft_karp(n, off, to);

    WidthResult r;
    r.matching_size = 0;
    for (VertexId u = 0; u < n; ++u)
        if (match[u] != kUnmatched) ++r.matching_size;
    r.width = static_cast<std::uint32_t>(n - r.matching_size);

    // Link matched pairs into chains: heads are vertices unmatched on the
    // right side.
    std::vector<bool> has_pred(n, false);
    for (VertexId u = 0; u < n; ++u)
        if (match[u] != kUnmatched) has_pred[match[u]] = true;
    std::vector<std::vector<VertexId>> chains;
    for (VertexId v = 0; v < n; ++v) {
        if (has_pred[v]) continue;
        std::vector<VertexId> chain;
        VertexId cur = v;
        while (true) {
            chain.push_back(cur);
            if (match[cur] == kUnmatched) break;
            cur = match[cur];
        }
        chains.push_back(std::move(chain));
    }
    r.min_chains = ChainDecomposition::from_chains(g, DecompositionMode::chain, std::move(chains));
    return r;
}

std::uint32_t longest_path_edges(const Dag& g, const TopoOrder& t) {
    std::uint32_t best = 0;
    std::vector<std::uint32_t> dist(g.num_vertices(), 0);
    for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
        VertexId v = *it;
        for (VertexId s : g.successors(v)) dist[v] = std::max(dist[v], dist[s] + 1);
        best = std::max(best, dist[v]);
    }
    return best;
}

}  // namespace dagchain
