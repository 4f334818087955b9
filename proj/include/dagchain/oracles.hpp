#ifndef DAGCHAIN_ORACLES_HPP
#define DAGCHAIN_ORACLES_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "dagchain/decompose.hpp"
#include "dagchain/graph.hpp"

namespace dagchain {

/// Default cap on exact-matrix oracles; an n x n bit matrix costs n^2/8
/// bytes (50 MB at the default).
inline constexpr std::uint32_t kDefaultMatrixCap = 20000;

/// Exact n x n reachability bit matrix, reflexive diagonal included.
class ReachMatrix {
public:
    ReachMatrix() = default;
    explicit ReachMatrix(VertexId n)
        : n_(n), words_(
              (static_cast<std::size_t>(n) + 63) / 64),
          bits_(static_cast<std::size_t>(n) * words_, 0) {}

    VertexId size() const { return n_; }
    std::size_t words_per_row() const { return words_; }

    bool get(VertexId s, VertexId t) const {
        return (bits_[row(s) + t / 64] >> (t % 64)) & 1u;
    }
    void set(VertexId s, VertexId t) { bits_[row(s) + t / 64] |= 1ull << (t % 64); }

    const std::uint64_t* row_data(VertexId s) const { return bits_.data() + row(s); }
    std::uint64_t* row_data(VertexId s) { return bits_.data() + row(s); }

    /// Number of reachable targets from s (diagonal included).
    std::uint64_t row_count(VertexId s) const;

    /// Raw dump: u64 n (little-endian), then n rows of words_per_row u64
    /// words, bit t of row s = word[t/64] bit (t%64).
    void write(std::ostream& out) const;

private:
    std::size_t row(VertexId s) const { return static_cast<std::size_t>(s) * words_; }

    VertexId n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Per-source closure; bit-parallel rows, equivalent to n DFS runs.
/// Throws MemoryBudgetError when n exceeds the cap.
ReachMatrix transitive_closure(const Dag& g, std::uint32_t matrix_cap = kDefaultMatrixCap);

/// Exact edge partition into non-transitive (reduction) and transitive
/// edges; is_transitive is indexed by Dag edge id.
struct EdgePartition {
    std::vector<std::uint8_t> is_transitive;
    std::uint64_t e_tr = 0;
    std::uint64_t e_red = 0;

    EdgeList reduction_edges(const Dag& g) const;
    EdgeList transitive_edges(const Dag& g) const;
};

/// The matrix must be transitive_closure(g). Unique for DAGs.
EdgePartition transitive_reduction(const Dag& g, const ReachMatrix& closure);

struct WidthResult {
    std::uint32_t width = 0;
    std::uint64_t matching_size = 0;
    ChainDecomposition min_chains;
};

/// Fulkerson's reduction: maximum bipartite matching (Hopcroft-Karp) on the
/// closure-derived bipartite graph; width = n - |M|, and the matched pairs
/// are linked into a minimum chain decomposition.
WidthResult width_fulkerson(const Dag& g, std::uint32_t matrix_cap = kDefaultMatrixCap);

/// Length of a longest path, counted in edges.
std::uint32_t longest_path_edges(const Dag& g, const TopoOrder& t);

}  // namespace dagchain

#endif
