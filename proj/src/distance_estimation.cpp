#include "netlab/distance_estimation.hpp"

#include "netlab/budget.hpp"
#include "netlab/error.hpp"
#include "netlab/rng.hpp"
#include "netlab/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace netlab {

namespace {

double median(std::vector<double> values) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

void require_searchable(const Graph &g) {
    if (g.n() < 2) throw Error("average distance needs at least two vertices");
}

} // namespace

SamplingPlan uniform_inclusion_plan(const Graph &g, std::uint32_t k) {
    if (k == 0) throw Error("k must be positive");
    SamplingPlan plan;
    plan.k = k;
    const double p = std::min(1.0, static_cast<double>(k) / g.n());
    plan.probabilities.assign(g.n(), p);
    plan.expected_sample_size = p * g.n();
    return plan;
}

SamplingPlan degree_proportional_plan(const Graph &g, std::uint32_t k) {
    if (k == 0) throw Error("k must be positive");
    SamplingPlan plan;
    plan.k = k;
    plan.probabilities.resize(g.n());
    const double scale = static_cast<double>(k) / (2.0 * static_cast<double>(g.m()));
    for (Vertex v = 0; v < g.n(); ++v) {
        const double p = std::min(1.0, scale * g.degree(v));
        if (!(p > 0.0)) throw Error("degree-proportional plan needs positive degrees");
        plan.probabilities[v] = p;
    }
    plan.expected_sample_size = std::accumulate(plan.probabilities.begin(), plan.probabilities.end(), 0.0);
    return plan;
}

double exact_average_distance(const Graph &g) {
    require_searchable(g);
    BfsWorkspace ws(g);
    double total = 0.0;
    for (Vertex s = 0; s < g.n(); ++s) {
        ws.run(s);
        if (ws.order().size() != g.n()) throw Error("average distance requires a connected graph");
        total += static_cast<double>(ws.distance_sum());
    }
    return total / (static_cast<double>(g.n()) * (g.n() - 1.0));
}

DistanceEstimate weighted_avg_distance(const Graph &g, const SamplingPlan &plan, std::uint64_t seed,
                                       bool conditioned) {
    require_searchable(g);
    if (plan.probabilities.size() != g.n()) throw Error("sampling plan does not match graph");

    std::vector<Vertex> sample;
    for (std::uint64_t attempt = 0; sample.empty(); ++attempt) {
        if (attempt == 1000) throw Error("sampling plan keeps producing empty samples");
        Rng rng = Rng(seed).split(attempt);
        for (Vertex v = 0; v < g.n(); ++v)
            if (rng.uniform01() < plan.probabilities[v]) sample.push_back(v);
    }

    const double size_ratio = static_cast<double>(sample.size()) / plan.expected_sample_size;
    BfsWorkspace ws(g);
    double total = 0.0;
    for (Vertex u : sample) {
        ws.run(u);
        if (ws.order().size() != g.n()) throw Error("average distance requires a connected graph");
        const double q = conditioned ? plan.probabilities[u] * size_ratio : plan.probabilities[u];
        total += static_cast<double>(ws.distance_sum()) / q;
    }

    DistanceEstimate result;
    result.estimate = total / (static_cast<double>(g.n()) * (g.n() - 1.0));
    result.realized_sample_size = sample.size();
    return result;
}

DistanceEstimate weighted_avg_distance(const Graph &g, std::uint32_t k, std::uint64_t seed, bool conditioned,
                                       const PlanStrategy &plan) {
    return weighted_avg_distance(g, plan(g, k), seed, conditioned);
}

DistanceEstimate uniform_pair_avg_distance(const Graph &g, std::uint32_t k, std::uint64_t seed) {
    require_searchable(g);
    if (k == 0) throw Error("k must be positive");
    if (!is_connected(g)) throw Error("average distance requires a connected graph");

    Rng rng(seed);
    BidirectionalSearch search(g);
    double total = 0.0;
    for (std::uint32_t i = 0; i < k; ++i) {
        const auto s = static_cast<Vertex>(rng.below(g.n()));
        auto t = static_cast<Vertex>(rng.below(g.n() - 1));
        if (t >= s) ++t;
        total += search.run(s, t).distance;
    }
    DistanceEstimate result;
    result.estimate = total / k;
    result.realized_sample_size = k;
    return result;
}

std::string to_string(EstimatorKind kind) {
    switch (kind) {
    case EstimatorKind::weighted_conditioned: return "weighted_conditioned";
    case EstimatorKind::weighted_unconditioned: return "weighted_unconditioned";
    case EstimatorKind::uniform_pairs: return "uniform_pairs";
    }
    return "unknown";
}

std::vector<EstimatorRow> estimator_comparison(const Graph &g, std::span<const std::uint32_t> k_values,
                                               std::uint32_t runs, std::uint64_t seed, std::optional<double> exact) {
    const double truth = exact ? *exact : exact_average_distance(g);
    std::vector<EstimatorRow> rows;
    for (EstimatorKind kind : {EstimatorKind::weighted_conditioned, EstimatorKind::weighted_unconditioned,
                               EstimatorKind::uniform_pairs}) {
        for (std::uint32_t k : k_values) {
            std::vector<double> errors, times;
            double sizes = 0.0;
            const SamplingPlan plan = uniform_inclusion_plan(g, k);
            for (std::uint32_t r = 0; r < runs; ++r) {
                const std::uint64_t run_seed = Rng::derive_seed(seed, r);
                Stopwatch clock;
                const DistanceEstimate est = kind == EstimatorKind::uniform_pairs
                    ? uniform_pair_avg_distance(g, k, run_seed)
                    : weighted_avg_distance(g, plan, run_seed, kind == EstimatorKind::weighted_conditioned);
                times.push_back(clock.seconds());
                errors.push_back(std::abs(est.estimate - truth) / truth);
                sizes += static_cast<double>(est.realized_sample_size);
            }
            rows.push_back({kind, k, median(errors), runs ? sizes / runs : 0.0, median(times)});
        }
    }
    return rows;
}

} // namespace netlab
