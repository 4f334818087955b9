#include "dagchain/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <unordered_set>

namespace dagchain {

namespace {

// Kahn with a min-heap on vertex id. Returns the emitted order; callers
// detect cycles by comparing its length to n.
std::vector<VertexId> kahn_order(VertexId n, const std::vector<std::uint64_t>& out_off,
                                 const std::vector<VertexId>& out,
                                 std::vector<std::uint32_t> in_deg) {
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
    for (VertexId v = 0; v < n; ++v)
        if (in_deg[v] == 0) ready.push(v);

    std::vector<VertexId> order;
    order.reserve(n);
    while (!ready.empty()) {
        VertexId v = ready.top();
        ready.pop();
        order.push_back(v);
        for (std::uint64_t e = out_off[v]; e < out_off[v + 1]; ++e) {
            VertexId s = out[e];
            if (--in_deg[s] == 0) ready.push(s);
        }
    }
    return order;
}

// Walks out-edges among the leftover (cyclic) vertices until a vertex
// repeats, then extracts the closed walk as a witness.
std::vector<VertexId> find_cycle_witness(VertexId n, const std::vector<std::uint64_t>& out_off,
                                         const std::vector<VertexId>& out,
                                         const std::vector<bool>& leftover) {
    VertexId start = 0;
    while (start < n && !leftover[start]) ++start;
    std::vector<VertexId> walk;
    std::vector<std::int64_t> at(n, -1);
    VertexId v = start;
    while (at[v] < 0) {
        at[v] = static_cast<std::int64_t>(walk.size());
        walk.push_back(v);
        VertexId next = v;
        for (std::uint64_t e = out_off[v]; e < out_off[v + 1]; ++e) {
            if (leftover[out[e]]) {
                next = out[e];
                break;
            }
        }
        v = next;  // every leftover vertex has a leftover successor
    }
    std::vector<VertexId> cycle(walk.begin() + at[v], walk.end());
    cycle.push_back(v);
    return cycle;
}

std::string cycle_to_string(const std::vector<VertexId>& cycle) {
    std::ostringstream os;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) os << " -> ";
        os << cycle[i];
    }
    return os.str();
}

}  // namespace

Dag Dag::from_edges(VertexId n, const EdgeList& edges) {
    std::vector<std::pair<VertexId, VertexId>> unique;
    unique.reserve(edges.size());
    {
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(edges.size() * 2);
        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw RangeError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") out of range for n=" + std::to_string(n));
            if (u == v)
                throw CycleError("self-loop at vertex " + std::to_string(u), {u, u});
            std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | v;
            if (seen.insert(key).second) unique.emplace_back(u, v);
        }
    }

    Dag g;
    g.n_ = n;
    g.m_ = unique.size();
    g.dups_ = edges.size() - unique.size();

    g.out_off_.assign(n + 1, 0);
    g.in_off_.assign(n + 1, 0);
    for (auto [u, v] : unique) {
        ++g.out_off_[u + 1];
        ++g.in_off_[v + 1];
    }
    for (VertexId v = 0; v < n; ++v) {
        g.out_off_[v + 1] += g.out_off_[v];
        g.in_off_[v + 1] += g.in_off_[v];
    }
    g.out_.resize(g.m_);
    g.in_.resize(g.m_);
    {
        std::vector<std::uint64_t> ocur(g.out_off_.begin(), g.out_off_.end() - 1);
        std::vector<std::uint64_t> icur(g.in_off_.begin(), g.in_off_.end() - 1);
        for (auto [u, v] : unique) {
            g.out_[ocur[u]++] = v;
            g.in_[icur[v]++] = u;
        }
    }

    std::vector<std::uint32_t> in_deg(n);
    for (VertexId v = 0; v < n; ++v) in_deg[v] = g.in_degree(v);
    auto order = kahn_order(n, g.out_off_, g.out_, std::move(in_deg));
    if (order.size() != n) {
        std::vector<bool> leftover(n, true);
        for (VertexId v : order) leftover[v] = false;
        auto cycle = find_cycle_witness(n, g.out_off_, g.out_, leftover);
        throw CycleError("input graph is not acyclic; cycle: " + cycle_to_string(cycle), cycle);
    }
    return g;
}

EdgeList Dag::edges() const {
    EdgeList es;
    es.reserve(m_);
    for_each_edge([&](VertexId u, VertexId v, std::uint64_t) { es.emplace_back(u, v); });
    return es;
}

TopoOrder topo_sort(const Dag& g) {
    VertexId n = g.num_vertices();
    std::vector<std::uint32_t> in_deg(n);
    for (VertexId v = 0; v < n; ++v) in_deg[v] = g.in_degree(v);

    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
    for (VertexId v = 0; v < n; ++v)
        if (in_deg[v] == 0) ready.push(v);

    TopoOrder t;
    t.order.reserve(n);
    t.rank.assign(n, 0);
    while (!ready.empty()) {
        VertexId v = ready.top();
        ready.pop();
        t.rank[v] = static_cast<VertexId>(t.order.size());
        t.order.push_back(v);
        for (VertexId s : g.successors(v))
            if (--in_deg[s] == 0) ready.push(s);
    }
    return t;
}

Digraph Digraph::from_edges(VertexId n, const EdgeList& edges) {
    Digraph g;
    g.n = n;
    g.adj.assign(n, {});
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw RangeError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") out of range for n=" + std::to_string(n));
        g.adj[u].push_back(v);
    }
    return g;
}

SccCondensation scc_condense(const Digraph& g) {
    VertexId n = g.n;
    constexpr VertexId kUnset = 0xFFFFFFFFu;

    std::vector<VertexId> index(n, kUnset), lowlink(n, kUnset), comp(n, kUnset);
    std::vector<bool> on_stack(n, false);
    std::vector<VertexId> stack;
    std::uint32_t next_index = 0;
    std::uint32_t comp_count = 0;

    // Iterative Tarjan: frame = (vertex, next child position).
    std::vector<std::pair<VertexId, std::size_t>> frames;
    for (VertexId root = 0; root < n; ++root) {
        if (index[root] != kUnset) continue;
        frames.emplace_back(root, 0);
        while (!frames.empty()) {
            auto& [v, child] = frames.back();
            if (child == 0) {
                index[v] = lowlink[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            bool descended = false;
            while (child < g.adj[v].size()) {
                VertexId w = g.adj[v][child++];
                if (index[w] == kUnset) {
                    frames.emplace_back(w, 0);
                    descended = true;
                    break;
                }
                if (on_stack[w]) lowlink[v] = std::min(lowlink[v], index[w]);
            }
            if (descended) continue;
            if (lowlink[v] == index[v]) {
                while (true) {
                    VertexId w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = comp_count;
                    if (w == v) break;
                }
                ++comp_count;
            }
            VertexId done = v;
            frames.pop_back();
            if (!frames.empty()) {
                VertexId parent = frames.back().first;
                lowlink[parent] = std::min(lowlink[parent], lowlink[done]);
            }
        }
    }

    // Tarjan emits components in reverse topological order; flip the ids so
    // the condensation's edges run from lower to higher component id.
    SccCondensation out;
    out.component_of.resize(n);
    for (VertexId v = 0; v < n; ++v) out.component_of[v] = comp_count - 1 - comp[v];

    out.component_members.assign(comp_count, {});
    for (VertexId v = 0; v < n; ++v) out.component_members[out.component_of[v]].push_back(v);

    EdgeList cross;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v : g.adj[u]) {
            VertexId a = out.component_of[u], b = out.component_of[v];
            if (a != b) cross.emplace_back(a, b);
        }
    }
    out.condensed = Dag::from_edges(comp_count, cross);  // dedups crossing edges
    return out;
}

SortedAdjacency SortedAdjacency::build(const Dag& g, const TopoOrder& t) {
    SortedAdjacency s;
    s.stacks_.assign(g.num_vertices(), {});
    for (VertexId v = 0; v < g.num_vertices(); ++v) s.stacks_[v].reserve(g.out_degree(v));
    for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
        VertexId v = *it;
        for (VertexId p : g.predecessors(v)) s.stacks_[p].push_back(v);
    }
    return s;
}

LoadResult load_dag(std::istream& in) {
    std::string line;
    auto next_line = [&](std::string& out_line) -> bool {
        while (std::getline(in, out_line)) {
            if (!out_line.empty() && out_line.back() == '\r') out_line.pop_back();
            if (out_line.empty()) continue;
            if (out_line[0] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_line(line)) throw ParseError("empty document: missing '<n> <m>' header");

    auto parse_two = [](const std::string& s, std::uint64_t& a, std::uint64_t& b) -> bool {
        std::istringstream is(s);
        std::string extra;
        if (!(is >> a >> b)) return false;
        if (is >> extra) return false;
        return true;
    };

    std::uint64_t n = 0, m = 0;
    if (!parse_two(line, n, m)) throw ParseError("malformed header line: '" + line + "'");
    if (n > 0xFFFFFFFFull) throw ParseError("vertex count too large");

    EdgeList edges;
    edges.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        if (!next_line(line))
            throw ParseError("expected " + std::to_string(m) + " edge lines, got " +
                             std::to_string(i));
        std::uint64_t u = 0, v = 0;
        if (!parse_two(line, u, v)) throw ParseError("malformed edge line: '" + line + "'");
        if (u >= n || v >= n)
            throw RangeError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") out of range for n=" + std::to_string(n));
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    if (next_line(line)) throw ParseError("trailing content after " + std::to_string(m) + " edges");

    LoadResult r;
    r.dag = Dag::from_edges(static_cast<VertexId>(n), edges);
    r.duplicate_warnings = r.dag.duplicates_dropped();
    return r;
}

LoadResult load_dag_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return load_dag(in);
}

LoadResult load_dag_string(const std::string& text) {
    std::istringstream in(text);
    return load_dag(in);
}

void save_dag(const Dag& g, std::ostream& out) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    g.for_each_edge([&](VertexId u, VertexId v, std::uint64_t) { out << u << ' ' << v << '\n'; });
}

void save_dag_file(const Dag& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    save_dag(g, out);
}

}  // namespace dagchain
