#pragma once

#include "netlab/graph.hpp"

#include <cstdint>
#include <limits>

namespace netlab {

/// Heterogeneity of a regular graph (sigma = 0).
inline constexpr double kRegularHeterogeneity = -std::numeric_limits<double>::infinity();

/// log10(sigma / mu) of the degree distribution with population variance;
/// kRegularHeterogeneity when sigma = 0.
double heterogeneity(const Graph &g);

/// |N(u) ∩ N(v)| / (min(deg u, deg v) - 1). Throws if e is not an edge or
/// is a bridge.
double degree_locality_edge(const Graph &g, const BridgeSet &bridges, EdgeRef e);

/// Mean edge degree locality over non-bridge edges. Throws
/// "locality undefined for trees" when every edge is a bridge.
double degree_locality(const Graph &g);
double degree_locality(const Graph &g, const BridgeSet &bridges);

/// Mean shortest u-v distance in G - {u,v} over non-bridge edges.
double avg_detour_distance(const Graph &g, const BridgeSet &bridges);

/// Average non-edge distance from the all-pairs average:
/// all + (m / non_edges) * (all - 1). Throws "no non-edges" for non_edges = 0.
double avg_nonedge_distance(double avg_all_pairs, std::uint64_t m, std::uint64_t non_edges);

struct DistanceLocality {
    double capped = 0.0;
    double uncapped = 0.0;
};

/// 1 - (dist_plus - 2) / (dist_nonedge - 2), capped below at 0. Both values
/// are 0 when dist_nonedge does not exceed 2 by more than 1e-9.
DistanceLocality distance_locality(double avg_detour, double avg_nonedge);

struct LocalityReport {
    double heterogeneity = 0.0;
    double degree_locality = 0.0;
    double distance_locality = 0.0;
    double locality = 0.0;
    double avg_detour_distance = 0.0;
    double avg_all_pairs_distance = 0.0;
    double avg_nonedge_distance = 0.0;
    double uncapped_distance_locality = 0.0;
    double clustering_coefficient = 0.0;
    bool all_pairs_exact = true;
};

struct LocalityOptions {
    /// Largest n for which the all-pairs average is computed exactly.
    Vertex exact_threshold = 5000;
    /// Sample scale of the weighted estimator used above the threshold.
    std::uint32_t estimator_k = 400;
    std::uint64_t seed = 0;
};

/// Full report. Requires a connected graph that is not a tree and has at
/// least one non-edge. The corpus density rule is applied at ingestion.
LocalityReport locality(const Graph &g, const LocalityOptions &options = {});

/// Mean local clustering coefficient over vertices of degree >= 2.
double clustering_coefficient(const Graph &g);

/// Size of the intersection of two sorted ranges.
std::uint32_t common_count(std::span<const Vertex> a, std::span<const Vertex> b);

} // namespace netlab
