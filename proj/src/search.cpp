#include "netlab/search.hpp"

#include "netlab/error.hpp"
#include "netlab/rng.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace netlab {

BidirectionalSearch::BidirectionalSearch(const Graph &g)
    : g_(&g), dist_fwd_(g.n(), unreached(g)), dist_bwd_(g.n(), unreached(g)) {}

BidirCost BidirectionalSearch::run(Vertex s, Vertex t, std::optional<EdgeRef> masked_edge) {
    const Graph &g = *g_;
    const std::uint32_t none = unreached(g);
    if (s >= g.n() || t >= g.n()) throw Error("search endpoint out of range");

    for (Vertex v : touched_fwd_) dist_fwd_[v] = none;
    for (Vertex v : touched_bwd_) dist_bwd_[v] = none;
    touched_fwd_.clear();
    touched_bwd_.clear();

    BidirCost cost;
    if (s == t) return cost;

    const bool masked = masked_edge.has_value();
    const EdgeRef mask = masked ? *masked_edge : EdgeRef{};

    dist_fwd_[s] = 0;
    dist_bwd_[t] = 0;
    touched_fwd_.push_back(s);
    touched_bwd_.push_back(t);
    layer_fwd_.assign(1, s);
    layer_bwd_.assign(1, t);
    std::uint64_t volume_fwd = g.degree(s);
    std::uint64_t volume_bwd = g.degree(t);

    while (!layer_fwd_.empty() && !layer_bwd_.empty()) {
        const bool forward = volume_fwd <= volume_bwd;
        auto &own = forward ? dist_fwd_ : dist_bwd_;
        auto &other = forward ? dist_bwd_ : dist_fwd_;
        auto &touched = forward ? touched_fwd_ : touched_bwd_;
        auto &layer = forward ? layer_fwd_ : layer_bwd_;
        auto &volume = forward ? volume_fwd : volume_bwd;

        next_.clear();
        std::uint64_t next_volume = 0;
        for (Vertex x : layer) {
            const std::uint32_t dx = own[x];
            for (Vertex y : g.neighbors(x)) {
                if (masked && EdgeRef(x, y) == mask) continue;
                ++cost.edge_explorations;
                if (own[y] != none) continue;
                if (other[y] != none) {
                    assert(cost.edge_explorations <= 2 * g.m());
                    cost.distance = dx + 1 + other[y];
                    return cost;
                }
                own[y] = dx + 1;
                touched.push_back(y);
                next_.push_back(y);
                next_volume += g.degree(y);
            }
        }
        assert(cost.edge_explorations <= 2 * g.m());
        layer.swap(next_);
        volume = next_volume;
    }
    cost.distance = none;
    return cost;
}

BidirCost bidirectional_bfs(const Graph &g, Vertex s, Vertex t, std::optional<EdgeRef> masked_edge) {
    BidirectionalSearch search(g);
    return search.run(s, t, masked_edge);
}

double cost_exponent(double cost, double base) {
    if (!(base > 1.0)) return 0.0;
    return std::log(std::max(cost, 1.0)) / std::log(base);
}

BidirExperiment bidir_cost_experiment(const Graph &g, std::uint32_t pairs, std::uint64_t seed,
                                      const Deadline &deadline) {
    if (g.n() < 2) throw Error("need at least two vertices");
    Rng rng(seed);
    BidirectionalSearch search(g);
    BidirExperiment result;
    double total = 0.0;
    for (std::uint32_t i = 0; i < pairs; ++i) {
        if (deadline.expired()) {
            result.timed_out = true;
            break;
        }
        const auto s = static_cast<Vertex>(rng.below(g.n()));
        auto t = static_cast<Vertex>(rng.below(g.n() - 1));
        if (t >= s) ++t;
        total += static_cast<double>(search.run(s, t).edge_explorations);
        ++result.pairs_done;
    }
    result.mean_cost = result.pairs_done ? total / result.pairs_done : 0.0;
    result.exponent = cost_exponent(result.mean_cost, static_cast<double>(g.m()));
    return result;
}

Vertex max_degree_vertex(const Graph &g) {
    if (g.n() == 0) throw Error("empty graph");
    Vertex best = 0;
    for (Vertex v = 1; v < g.n(); ++v)
        if (g.degree(v) > g.degree(best)) best = v;
    return best;
}

namespace {

// Smallest-id vertex at maximum finite distance in the last run.
Vertex farthest(const BfsWorkspace &ws) {
    const auto dist = ws.distances();
    Vertex best = ws.order().front();
    for (Vertex v : ws.order())
        if (dist[v] > dist[best] || (dist[v] == dist[best] && v < best)) best = v;
    return best;
}

} // namespace

SweepResult double_sweep(const Graph &g, Vertex start) {
    if (start >= g.n()) throw Error("sweep start out of range");
    BfsWorkspace ws(g);
    ws.run(start);
    SweepResult result;
    result.far_vertex = farthest(ws);

    const std::uint32_t ecc = ws.run(result.far_vertex);
    result.lower_bound = ecc;
    const auto dist = ws.distances();

    Vertex x = farthest(ws);
    while (dist[x] > ecc / 2) {
        for (Vertex y : g.neighbors(x)) {
            if (dist[y] + 1 == dist[x]) {
                x = y;
                break;
            }
        }
    }
    result.middle = x;
    return result;
}

FourSweepResult four_sweep(const Graph &g) {
    const SweepResult first = double_sweep(g, max_degree_vertex(g));
    const SweepResult second = double_sweep(g, first.middle);
    FourSweepResult result;
    result.root = second.middle;
    result.lower_bound = std::max(first.lower_bound, second.lower_bound);
    return result;
}

DiameterResult ifub(const Graph &g, Vertex root, std::uint32_t initial_lower_bound, const IfubBudget &budget) {
    if (root >= g.n()) throw Error("iFUB root out of range");
    BfsWorkspace ws(g);
    const std::uint32_t root_ecc = ws.run(root);
    if (ws.order().size() != g.n()) throw Error("iFUB requires a connected graph");

    DiameterResult result;
    result.root = root;
    result.bfs_count = 1;
    std::uint32_t lower = std::max(initial_lower_bound, root_ecc);

    // Vertices grouped by depth, ascending id inside a layer.
    std::vector<Vertex> by_depth(ws.order().begin(), ws.order().end());
    const auto root_dist = std::vector<std::uint32_t>(ws.distances().begin(), ws.distances().end());
    std::sort(by_depth.begin(), by_depth.end(), [&](Vertex a, Vertex b) {
        return root_dist[a] != root_dist[b] ? root_dist[a] < root_dist[b] : a < b;
    });

    std::uint32_t upper = 2 * root_ecc;
    auto layer_end = by_depth.end();
    for (std::uint32_t depth = root_ecc; depth > 0; --depth) {
        if (2 * depth <= lower) break;
        auto layer_begin = std::lower_bound(by_depth.begin(), layer_end, depth,
                                            [&](Vertex v, std::uint32_t d) { return root_dist[v] < d; });
        for (auto it = layer_begin; it != layer_end; ++it) {
            if (budget.deadline.expired() || result.bfs_count >= budget.max_bfs) {
                result.timed_out = true;
                break;
            }
            lower = std::max(lower, ws.run(*it));
            ++result.bfs_count;
        }
        if (result.timed_out) {
            upper = std::max(lower, 2 * depth);
            break;
        }
        upper = std::max(lower, 2 * (depth - 1));
        layer_end = layer_begin;
    }

    result.diameter = lower;
    result.upper_bound = result.timed_out ? upper : lower;
    result.exponent = cost_exponent(static_cast<double>(result.bfs_count), g.n());
    return result;
}

DiameterResult ifub_hd(const Graph &g, const IfubBudget &budget) {
    return ifub(g, max_degree_vertex(g), 0, budget);
}

DiameterResult ifub_foursweep_hd(const Graph &g, const IfubBudget &budget) {
    const FourSweepResult sweep = four_sweep(g);
    IfubBudget inner = budget;
    if (inner.max_bfs != UINT64_MAX) inner.max_bfs = inner.max_bfs > sweep.bfs_count ? inner.max_bfs - sweep.bfs_count : 0;
    DiameterResult result = ifub(g, sweep.root, sweep.lower_bound, inner);
    result.bfs_count += sweep.bfs_count;
    result.four_sweep_lower_bound = sweep.lower_bound;
    result.exponent = cost_exponent(static_cast<double>(result.bfs_count), g.n());
    return result;
}

} // namespace netlab
