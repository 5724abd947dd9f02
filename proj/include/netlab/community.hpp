#pragma once

#include "netlab/budget.hpp"
#include "netlab/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace netlab {

struct Clustering {
    std::vector<Vertex> cluster_of; ///< cluster id per vertex
    std::vector<std::uint64_t> total_degree;   ///< a_i, indexed by cluster id
    std::vector<std::uint64_t> internal_edges; ///< indexed by cluster id

    /// Bookkeeping recomputed from scratch for the given assignment.
    static Clustering from_assignment(const Graph &g, std::vector<Vertex> cluster_of);
    static Clustering singletons(const Graph &g);
};

/// Q = sum over clusters of internal/m - (a_i / 2m)^2.
double modularity(const Graph &g, const Clustering &clustering);
double modularity(const Graph &g, const std::vector<Vertex> &cluster_of);

struct LocalSearchResult {
    std::uint64_t iterations = 0; ///< full passes, including the final pass without moves
    double modularity = 0.0;
    Clustering clustering;
    bool timed_out = false;
};

struct LouvainOptions {
    /// Shuffle the sweep order each pass with this seed; ascending ids otherwise.
    std::optional<std::uint64_t> seed;
    std::uint64_t max_passes = 1'000'000;
    Deadline deadline;
    /// Test hook: called after every pass with the current clustering and
    /// the incrementally tracked modularity.
    std::function<void(const Clustering &, double)> after_pass;
};

/// First local-moving phase of Louvain, starting from singletons. Each
/// vertex moves to the neighboring cluster with the largest modularity gain
/// if that gain strictly beats staying; ties go to the smaller cluster id.
/// Throws when max_passes is exceeded.
LocalSearchResult louvain_first_phase(const Graph &g, const LouvainOptions &options = {});

} // namespace netlab
