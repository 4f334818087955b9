#ifndef DAGCHAIN_ERRORS_HPP
#define DAGCHAIN_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dagchain {

/// Malformed input document (bad header, bad edge line, wrong edge count).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input graph contains a directed cycle; carries one witness cycle
/// (closed walk, first vertex repeated at the end).
struct CycleError : std::runtime_error {
    std::vector<std::uint32_t> witness;
    CycleError(const std::string& msg, std::vector<std::uint32_t> cycle)
        : std::runtime_error(msg), witness(std::move(cycle)) {}
};

/// Vertex id outside [0, n).
struct RangeError : std::runtime_error {
    explicit RangeError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Generator parameter outside its documented domain.
struct ParamError : std::runtime_error {
    explicit ParamError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Exact-oracle request exceeds the configured matrix cap.
struct MemoryBudgetError : std::runtime_error {
    explicit MemoryBudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Chain decomposition violates its structural invariants.
struct InvalidDecomposition : std::runtime_error {
    explicit InvalidDecomposition(const std::string& msg) : std::runtime_error(msg) {}
};

/// Decomposition arrays disagree with each other or with the graph.
struct InconsistentInput : std::runtime_error {
    explicit InconsistentInput(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dagchain

#endif
