#pragma once

#include "netlab/budget.hpp"
#include "netlab/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

namespace netlab {

struct CliqueStats {
    std::uint64_t maximal_clique_count = 0;
    std::uint32_t clique_number = 0; ///< omega
    double count_relative_to_m = 0.0;
    bool timed_out = false;
};

/// Called once per maximal clique; vertices in no particular order.
using CliqueVisitor = std::function<void(std::span<const Vertex>)>;

/// Maximal clique enumeration: degeneracy order outside, Tomita-style
/// pivoting (maximize |P ∩ N(pivot)|, smallest id on ties) inside.
/// Isolated vertices count as cliques of size 1.
CliqueStats enumerate_maximal_cliques(const Graph &g, const Deadline &deadline = {},
                                      const CliqueVisitor &visitor = {});

/// 1 + max common-neighbor count over non-adjacent pairs (1 if there is none).
std::uint32_t closure(const Graph &g);

/// Smallest c such that repeatedly deleting c-good vertices empties the
/// graph. Pairs with fewer than `initial_guess` common neighbors are left
/// out of the per-vertex queues; if the answer comes out below the guess,
/// the guess is lowered by one and the run repeated.
std::uint32_t weak_closure(const Graph &g, std::uint32_t initial_guess = 30);

struct ClosureStats {
    std::uint32_t degeneracy = 0;
    std::uint32_t closure = 0;
    std::uint32_t weak_closure = 0;
};

struct StructuralReport {
    ClosureStats closure;
    CliqueStats cliques;
    double heterogeneity = 0.0;
    std::optional<double> locality; ///< empty when undefined (tree, dense, ...)
    Vertex n = 0;
    std::uint64_t m = 0;
};

struct StructuralOptions {
    Deadline clique_deadline;
    bool with_locality = true;
    std::uint64_t seed = 0;
};

StructuralReport structural_report(const Graph &g, const StructuralOptions &options = {});

} // namespace netlab
