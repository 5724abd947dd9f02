#pragma once

#include "netlab/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace netlab {

enum class SamplingMode { weighted, uniform_pairs };

struct SamplingPlan {
    std::uint32_t k = 400;
    std::vector<double> probabilities; ///< inclusion probability per vertex, all in (0, 1]
    double expected_sample_size = 0.0; ///< sum of probabilities
    SamplingMode mode = SamplingMode::weighted;
};

/// Inclusion probability strategy for the weighted estimator.
using PlanStrategy = std::function<SamplingPlan(const Graph &, std::uint32_t k)>;

/// p_v = min(1, k/n).
SamplingPlan uniform_inclusion_plan(const Graph &g, std::uint32_t k);
/// p_v proportional to deg(v), scaled to sum k, capped at 1.
SamplingPlan degree_proportional_plan(const Graph &g, std::uint32_t k);

struct DistanceEstimate {
    double estimate = 0.0;
    std::size_t realized_sample_size = 0; ///< |S| for weighted, k for uniform pairs
    std::optional<double> relative_error;
};

/// Exact average distance over ordered pairs of distinct vertices (one BFS
/// per vertex). Requires a connected graph.
double exact_average_distance(const Graph &g);

/// Horvitz-Thompson estimate of the average distance from full BFS runs
/// out of a Poisson sample S. With `conditioned`, each source is weighted by
/// 1 / (p_u |S| / E|S|) instead of 1 / p_u. An empty sample is redrawn from
/// the next child stream of `seed`.
DistanceEstimate weighted_avg_distance(const Graph &g, std::uint32_t k, std::uint64_t seed, bool conditioned,
                                       const PlanStrategy &plan = uniform_inclusion_plan);

/// Same estimator for an explicit plan.
DistanceEstimate weighted_avg_distance(const Graph &g, const SamplingPlan &plan, std::uint64_t seed,
                                       bool conditioned);

/// Mean bidirectional-BFS distance over k uniform distinct vertex pairs.
DistanceEstimate uniform_pair_avg_distance(const Graph &g, std::uint32_t k, std::uint64_t seed);

enum class EstimatorKind { weighted_conditioned, weighted_unconditioned, uniform_pairs };
std::string to_string(EstimatorKind kind);

struct EstimatorRow {
    EstimatorKind kind = EstimatorKind::weighted_conditioned;
    std::uint32_t k = 0;
    double median_relative_error = 0.0;
    double mean_sample_size = 0.0;
    double median_wall_time_s = 0.0;
};

/// Median relative error and wall time per (estimator, k) over `runs`
/// seeded repetitions. Run r of every configuration uses seed derive(seed, r).
std::vector<EstimatorRow> estimator_comparison(const Graph &g, std::span<const std::uint32_t> k_values,
                                               std::uint32_t runs, std::uint64_t seed,
                                               std::optional<double> exact = std::nullopt);

} // namespace netlab
