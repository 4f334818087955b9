#ifndef DAGCHAIN_GRAPH_HPP
#define DAGCHAIN_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dagchain/errors.hpp"

namespace dagchain {

using VertexId = std::uint32_t;
using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

/// Immutable DAG over vertices 0..n-1 with forward and reverse adjacency
/// stored in CSR form. Construction validates acyclicity and rejects
/// self-loops; duplicate edges are dropped (the count is kept).
class Dag {
public:
    Dag() = default;

    /// Throws RangeError, CycleError. Duplicates are deduplicated.
    static Dag from_edges(VertexId n, const EdgeList& edges);

    VertexId num_vertices() const { return n_; }
    std::uint64_t num_edges() const { return m_; }
    std::uint64_t duplicates_dropped() const { return dups_; }

    std::span<const VertexId> successors(VertexId v) const {
        return {out_.data() + out_off_[v], out_.data() + out_off_[v + 1]};
    }
    std::span<const VertexId> predecessors(VertexId v) const {
        return {in_.data() + in_off_[v], in_.data() + in_off_[v + 1]};
    }
    std::uint32_t out_degree(VertexId v) const {
        return static_cast<std::uint32_t>(out_off_[v + 1] - out_off_[v]);
    }
    std::uint32_t in_degree(VertexId v) const {
        return static_cast<std::uint32_t>(in_off_[v + 1] - in_off_[v]);
    }

    /// Stable id of the i-th out-edge of u, 0 <= i < out_degree(u).
    std::uint64_t edge_id(VertexId u, std::uint32_t i) const { return out_off_[u] + i; }

    /// Visits every edge as f(u, v, edge_id), grouped by source.
    template <typename F>
    void for_each_edge(F&& f) const {
        for (VertexId u = 0; u < n_; ++u) {
            for (std::uint64_t e = out_off_[u]; e < out_off_[u + 1]; ++e) f(u, out_[e], e);
        }
    }

    EdgeList edges() const;

private:
    VertexId n_ = 0;
    std::uint64_t m_ = 0;
    std::uint64_t dups_ = 0;
    std::vector<std::uint64_t> out_off_{0}, in_off_{0};
    std::vector<VertexId> out_, in_;
};

/// A topological order and its inverse permutation.
struct TopoOrder {
    std::vector<VertexId> order;  // order[i] = i-th vertex
    std::vector<VertexId> rank;   // rank[v]  = position of v
};

/// Kahn's algorithm; among simultaneously available vertices the smallest
/// vertex id is emitted first, so the order is deterministic.
TopoOrder topo_sort(const Dag& g);

/// Arbitrary directed graph (cycles allowed); the entry point for SCC
/// condensation only.
struct Digraph {
    VertexId n = 0;
    std::vector<std::vector<VertexId>> adj;

    static Digraph from_edges(VertexId n, const EdgeList& edges);
};

struct SccCondensation {
    std::vector<VertexId> component_of;               // per original vertex
    Dag condensed;                                    // over component ids
    std::vector<std::vector<VertexId>> component_members;
};

/// Tarjan SCC + dedup of crossing edges. Component ids are assigned in
/// topological order of the condensation.
SccCondensation scc_condense(const Digraph& g);

/// Per-vertex successor stacks sorted so that repeated pops yield the
/// immediate successors in strictly ascending topological rank. Built by
/// the two-loop push scheme: walk vertices in reverse topological order
/// and push each onto all of its predecessors' stacks; O(n+m).
class SortedAdjacency {
public:
    static SortedAdjacency build(const Dag& g, const TopoOrder& t);

    /// Successors of v in pop order (ascending rank): iterate back to front.
    std::span<const VertexId> raw(VertexId v) const { return stacks_[v]; }

    bool empty(VertexId v) const { return stacks_[v].empty(); }
    /// Destructive pop, ascending rank. Mainly for tests; the index
    /// builder iterates raw() in reverse without mutation.
    VertexId pop(VertexId v) {
        VertexId s = stacks_[v].back();
        stacks_[v].pop_back();
        return s;
    }

private:
    std::vector<std::vector<VertexId>> stacks_;
};

struct LoadResult {
    Dag dag;
    std::uint64_t duplicate_warnings = 0;
};

/// Edge-list text format: line 1 = "<n> <m>", then m lines "<u> <v>"
/// (0-based decimal); lines starting with '#' are ignored.
LoadResult load_dag(std::istream& in);
LoadResult load_dag_file(const std::string& path);
LoadResult load_dag_string(const std::string& text);

void save_dag(const Dag& g, std::ostream& out);
void save_dag_file(const Dag& g, const std::string& path);

}  // namespace dagchain

#endif
