#pragma once

#include "netlab/budget.hpp"
#include "netlab/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace netlab {

struct BidirCost {
    std::uint64_t edge_explorations = 0;
    std::uint32_t distance = 0; ///< unreached(g) if t is not reachable
};

/// Balanced bidirectional BFS with reusable buffers.
///
/// Each step expands the whole current layer of the side whose layer has
/// the smaller degree sum (forward on ties). The search stops as soon as an
/// expansion touches a vertex already reached by the other side; the first
/// such hit is a shortest path because the two explored balls were disjoint
/// before the step. Every adjacency entry scanned counts as one exploration,
/// except scans of the masked edge.
class BidirectionalSearch {
public:
    explicit BidirectionalSearch(const Graph &g);

    BidirCost run(Vertex s, Vertex t, std::optional<EdgeRef> masked_edge = std::nullopt);

private:
    const Graph *g_;
    std::vector<std::uint32_t> dist_fwd_, dist_bwd_;
    std::vector<Vertex> touched_fwd_, touched_bwd_;
    std::vector<Vertex> layer_fwd_, layer_bwd_, next_;
};

BidirCost bidirectional_bfs(const Graph &g, Vertex s, Vertex t, std::optional<EdgeRef> masked_edge = std::nullopt);

struct BidirExperiment {
    double mean_cost = 0.0;
    double exponent = 0.0; ///< ln(max(c,1)) / ln(m)
    bool timed_out = false;
    std::uint32_t pairs_done = 0;
};

/// Mean exploration cost over uniformly drawn distinct st-pairs.
BidirExperiment bidir_cost_experiment(const Graph &g, std::uint32_t pairs, std::uint64_t seed,
                                      const Deadline &deadline = {});

/// ln(max(c, 1)) / ln(base); zero when base <= 1.
double cost_exponent(double cost, double base);

struct SweepResult {
    Vertex far_vertex = 0;   ///< v, farthest from the start
    Vertex middle = 0;       ///< w, middle of a longest shortest path from v
    std::uint32_t lower_bound = 0;
};

/// Double sweep from `start` (2 BFS runs). Ties go to the smallest id,
/// including the parent chosen while walking back from the far end.
SweepResult double_sweep(const Graph &g, Vertex start);

struct FourSweepResult {
    Vertex root = 0;
    std::uint32_t lower_bound = 0;
    std::uint32_t bfs_count = 4;
};

/// Two chained double sweeps starting at a maximum-degree vertex.
FourSweepResult four_sweep(const Graph &g);

/// Smallest-id vertex of maximum degree.
Vertex max_degree_vertex(const Graph &g);

struct DiameterResult {
    std::uint32_t diameter = 0; ///< exact unless timed_out; then the best lower bound
    std::uint32_t upper_bound = 0;
    std::uint64_t bfs_count = 0;
    Vertex root = 0;
    std::optional<std::uint32_t> four_sweep_lower_bound;
    bool timed_out = false;
    double exponent = 0.0; ///< ln(max(bfs_count,1)) / ln(n)
};

struct IfubBudget {
    Deadline deadline;
    std::uint64_t max_bfs = UINT64_MAX;
};

/// iFUB from `root`. Fringe vertices are processed by decreasing depth
/// (ascending id within a layer), one eccentricity BFS each; the run stops
/// before layer i once 2*i <= best lower bound. bfs_count includes the
/// root BFS. Requires a connected graph.
DiameterResult ifub(const Graph &g, Vertex root, std::uint32_t initial_lower_bound, const IfubBudget &budget = {});

/// Root = maximum-degree vertex.
DiameterResult ifub_hd(const Graph &g, const IfubBudget &budget = {});

/// Root and initial bound from four_sweep(); its 4 BFS runs are counted.
DiameterResult ifub_foursweep_hd(const Graph &g, const IfubBudget &budget = {});

} // namespace netlab
