#include "dagchain/decompose.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace dagchain {

std::string to_string(DecompositionMode m) {
    return m == DecompositionMode::path ? "path" : "chain";
}

ChainDecomposition ChainDecomposition::from_chains(const Dag& g, DecompositionMode mode,
                                                   std::vector<std::vector<VertexId>> chains) {
    VertexId n = g.num_vertices();
    ChainDecomposition d;
    d.mode = mode;
    d.chain_of.assign(n, 0xFFFFFFFFu);
    d.pos_of.assign(n, 0);

    std::uint64_t covered = 0;
    for (std::size_t c = 0; c < chains.size(); ++c) {
        if (chains[c].empty()) throw InvalidDecomposition("empty chain " + std::to_string(c));
        for (std::size_t i = 0; i < chains[c].size(); ++i) {
            VertexId v = chains[c][i];
            if (v >= n) throw InvalidDecomposition("vertex " + std::to_string(v) + " out of range");
            if (d.chain_of[v] != 0xFFFFFFFFu)
                throw InvalidDecomposition("vertex " + std::to_string(v) + " appears twice");
            d.chain_of[v] = static_cast<VertexId>(c);
            d.pos_of[v] = static_cast<std::uint32_t>(i + 1);
            ++covered;
        }
        if (mode == DecompositionMode::path) {
            for (std::size_t i = 0; i + 1 < chains[c].size(); ++i) {
                VertexId u = chains[c][i], v = chains[c][i + 1];
                auto succ = g.successors(u);
                if (std::find(succ.begin(), succ.end(), v) == succ.end())
                    throw InvalidDecomposition("path mode but (" + std::to_string(u) + "," +
                                               std::to_string(v) + ") is not an edge");
            }
        }
    }
    if (covered != n)
        throw InvalidDecomposition("chains cover " + std::to_string(covered) + " of " +
                                   std::to_string(n) + " vertices");
    d.chains = std::move(chains);
    return d;
}

ChainDecomposition decompose_co(const Dag& g, const TopoOrder& t) {
    VertexId n = g.num_vertices();
    std::vector<bool> used(n, false);
    std::vector<std::vector<VertexId>> chains;
    for (VertexId v : t.order) {
        if (used[v]) continue;
        std::vector<VertexId> path;
        VertexId cur = v;
        used[cur] = true;
        path.push_back(cur);
        while (true) {
            VertexId best = 0xFFFFFFFFu;
            for (VertexId s : g.successors(cur))
                if (!used[s] && (best == 0xFFFFFFFFu || t.rank[s] < t.rank[best])) best = s;
            if (best == 0xFFFFFFFFu) break;
            used[best] = true;
            path.push_back(best);
            cur = best;
        }
        chains.push_back(std::move(path));
    }
    return ChainDecomposition::from_chains(g, DecompositionMode::path, std::move(chains));
}

ChainDecomposition decompose_no(const Dag& g, const TopoOrder& t) {
    VertexId n = g.num_vertices();
    constexpr VertexId kNone = 0xFFFFFFFFu;
    std::vector<VertexId> tail_chain(n, kNone);  // chain id if v is a path tail
    std::vector<std::vector<VertexId>> chains;
    for (VertexId v : t.order) {
        VertexId best = kNone;
        for (VertexId p : g.predecessors(v))
            if (tail_chain[p] != kNone && (best == kNone || t.rank[p] < t.rank[best])) best = p;
        if (best != kNone) {
            VertexId c = tail_chain[best];
            tail_chain[best] = kNone;
            chains[c].push_back(v);
            tail_chain[v] = c;
        } else {
            tail_chain[v] = static_cast<VertexId>(chains.size());
            chains.push_back({v});
        }
    }
    return ChainDecomposition::from_chains(g, DecompositionMode::path, std::move(chains));
}

ChainDecomposition decompose_h3(const Dag& g, const TopoOrder& t) {
    VertexId n = g.num_vertices();
    constexpr VertexId kNone = 0xFFFFFFFFu;
    std::vector<VertexId> tail_chain(n, kNone);
    std::vector<VertexId> chain_of(n, kNone);
    std::vector<std::vector<VertexId>> chains;

    auto open_chain = [&](VertexId v) {
        chain_of[v] = static_cast<VertexId>(chains.size());
        tail_chain[v] = chain_of[v];
        chains.push_back({v});
    };
    auto append = [&](VertexId tail, VertexId v) {
        VertexId c = tail_chain[tail];
        tail_chain[tail] = kNone;
        chains[c].push_back(v);
        chain_of[v] = c;
        tail_chain[v] = c;
    };

    for (VertexId v : t.order) {
        if (chain_of[v] == kNone) {
            // Tail choice: lowest out-degree, ties by smallest rank.
            VertexId best = kNone;
            for (VertexId p : g.predecessors(v)) {
                if (tail_chain[p] == kNone) continue;
                if (best == kNone || g.out_degree(p) < g.out_degree(best) ||
                    (g.out_degree(p) == g.out_degree(best) && t.rank[p] < t.rank[best]))
                    best = p;
            }
            if (best != kNone)
                append(best, v);
            else
                open_chain(v);
        }
        // Look-ahead: claim an unassigned in-degree-1 successor right away.
        VertexId grab = kNone;
        for (VertexId s : g.successors(v))
            if (g.in_degree(s) == 1 && chain_of[s] == kNone &&
                (grab == kNone || t.rank[s] < t.rank[grab]))
                grab = s;
        if (grab != kNone) append(v, grab);
    }
    return ChainDecomposition::from_chains(g, DecompositionMode::path, std::move(chains));
}

std::string format_decomposition(const ChainDecomposition& d) {
    std::ostringstream os;
    os << "k " << d.k() << " mode " << to_string(d.mode) << '\n';
    for (const auto& chain : d.chains) {
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (i) os << ' ';
            os << chain[i];
        }
        os << '\n';
    }
    return os.str();
}

ChainDecomposition parse_decomposition(const Dag& g, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto next_line = [&](std::string& out_line) -> bool {
        while (std::getline(in, out_line)) {
            if (!out_line.empty() && out_line.back() == '\r') out_line.pop_back();
            if (out_line.empty() || out_line[0] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_line(line)) throw ParseError("empty chains document");
    std::istringstream hs(line);
    std::string kw, modew, modev;
    std::uint64_t k = 0;
    if (!(hs >> kw >> k >> modew >> modev) || kw != "k" || modew != "mode")
        throw ParseError("malformed chains header: '" + line + "'");
    DecompositionMode mode;
    if (modev == "path")
        mode = DecompositionMode::path;
    else if (modev == "chain")
        mode = DecompositionMode::chain;
    else
        throw ParseError("unknown mode '" + modev + "'");

    std::vector<std::vector<VertexId>> chains;
    chains.reserve(k);
    for (std::uint64_t c = 0; c < k; ++c) {
        if (!next_line(line))
            throw ParseError("expected " + std::to_string(k) + " chains, got " +
                             std::to_string(c));
        std::istringstream ls(line);
        std::vector<VertexId> chain;
        std::uint64_t v;
        while (ls >> v) {
            if (v >= g.num_vertices())
                throw RangeError("chain vertex " + std::to_string(v) + " out of range");
            chain.push_back(static_cast<VertexId>(v));
        }
        if (!ls.eof()) throw ParseError("malformed chain line: '" + line + "'");
        chains.push_back(std::move(chain));
    }
    return ChainDecomposition::from_chains(g, mode, std::move(chains));
}

ChainDecomposition load_decomposition_file(const Dag& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_decomposition(g, ss.str());
}

}  // namespace dagchain
