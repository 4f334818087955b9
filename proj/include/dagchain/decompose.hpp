#ifndef DAGCHAIN_DECOMPOSE_HPP
#define DAGCHAIN_DECOMPOSE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dagchain/graph.hpp"

namespace dagchain {

enum class DecompositionMode { path, chain };

std::string to_string(DecompositionMode m);

/// Vertex-disjoint chains covering all vertices. Within a chain, vertices
/// appear in ascending topological rank; in path mode every consecutive
/// pair is an edge of the graph, in chain mode a directed path.
struct ChainDecomposition {
    DecompositionMode mode = DecompositionMode::path;
    std::vector<std::vector<VertexId>> chains;
    std::vector<VertexId> chain_of;      // per vertex
    std::vector<std::uint32_t> pos_of;   // per vertex, 1-based

    std::uint32_t k() const { return static_cast<std::uint32_t>(chains.size()); }

    /// Validates cover/disjointness (and edge-linkage in path mode),
    /// then derives chain_of/pos_of. Throws InvalidDecomposition.
    static ChainDecomposition from_chains(const Dag& g, DecompositionMode mode,
                                          std::vector<std::vector<VertexId>> chains);
};

/// Chain-order heuristic: grow one path at a time, always extending the
/// current endpoint with its unused successor of smallest rank.
ChainDecomposition decompose_co(const Dag& g, const TopoOrder& t);

/// Node-order heuristic: assign each vertex (ascending rank) to the path
/// whose tail is its smallest-rank immediate predecessor, else open a path.
ChainDecomposition decompose_no(const Dag& g, const TopoOrder& t);

/// Node-order variant: tail selection prefers the predecessor with the
/// lowest out-degree (ties by rank), and after placing a vertex its
/// smallest-rank unassigned in-degree-1 successor is appended immediately.
ChainDecomposition decompose_h3(const Dag& g, const TopoOrder& t);

/// Chains file: first line "k <count> mode <path|chain>", then one chain
/// per line (space-separated vertex ids); '#' lines ignored.
std::string format_decomposition(const ChainDecomposition& d);
ChainDecomposition parse_decomposition(const Dag& g, const std::string& text);
ChainDecomposition load_decomposition_file(const Dag& g, const std::string& path);

}  // namespace dagchain

#endif
