#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace netlab {

using Vertex = std::uint32_t;

/// Undirected edge with u < v.
struct EdgeRef {
    Vertex u = 0;
    Vertex v = 0;

    EdgeRef() = default;
    EdgeRef(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const EdgeRef &, const EdgeRef &) = default;
    friend auto operator<=>(const EdgeRef &, const EdgeRef &) = default;
};

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Vertex ids are dense in [0, n). Every neighbor list is sorted ascending
/// and free of duplicates and self-loops, and adjacency is symmetric. The
/// object is safe to share read-only between threads.
class Graph {
public:
    Graph() = default;

    /// Builds from edges over dense ids [0, n). Duplicates (in either
    /// orientation) are merged; self-loops and out-of-range ids throw.
    static Graph from_edges(Vertex n, std::span<const EdgeRef> edges);

    Vertex n() const { return n_; }
    std::size_t m() const { return adjacency_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::uint32_t degree(Vertex v) const { return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]); }
    std::uint32_t max_degree() const;

    bool has_edge(Vertex u, Vertex v) const;

    /// All edges with u < v, ordered lexicographically.
    std::vector<EdgeRef> edges() const;

    /// 2m / (n(n-1)); zero for n < 2.
    double density() const;

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    Vertex n_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> adjacency_;
};

/// Distance value for vertices a BFS did not reach (equals n).
inline std::uint32_t unreached(const Graph &g) { return g.n(); }

/// Builds a graph from raw integer pairs with arbitrary ids. Ids are
/// remapped to 0..n-1 in order of first appearance; self-loops and
/// multi-edges are dropped. Throws Error("empty graph") on empty input.
Graph build_graph(std::span<const std::pair<std::int64_t, std::int64_t>> edge_list);

/// Subgraph induced by `vertices`, renumbered in ascending order of the old ids.
Graph induced_subgraph(const Graph &g, std::span<const Vertex> vertices);

/// Component label per vertex. Labels are 0, 1, ... in ascending order of
/// each component's smallest member.
std::vector<Vertex> component_labels(const Graph &g, Vertex *component_count = nullptr);

bool is_connected(const Graph &g);

/// Largest connected component, ties broken toward the component containing
/// the smallest vertex id. Ids are re-densified preserving relative order.
Graph largest_component(const Graph &g);

/// Hop distances from `source`; unreached vertices get unreached(g).
std::vector<std::uint32_t> bfs(const Graph &g, Vertex source);

/// Reusable BFS buffers for running many searches over the same graph.
class BfsWorkspace {
public:
    explicit BfsWorkspace(const Graph &g);

    /// Runs a BFS from `source`; returns the eccentricity within its component.
    std::uint32_t run(Vertex source);

    std::span<const std::uint32_t> distances() const { return dist_; }
    /// Visit order of the last run (reached vertices only, by layer).
    std::span<const Vertex> order() const { return queue_; }
    /// Sum of distances to reached vertices in the last run.
    std::uint64_t distance_sum() const { return distance_sum_; }

private:
    const Graph *g_;
    std::vector<std::uint32_t> dist_;
    std::vector<Vertex> queue_;
    std::uint64_t distance_sum_ = 0;
};

struct BridgeSet {
    std::vector<EdgeRef> bridges; ///< sorted
    std::size_t non_bridge_count = 0;

    bool contains(EdgeRef e) const;
};

/// Exact bridge set by an iterative low-link traversal.
BridgeSet find_bridges(const Graph &g);

struct Peeling {
    std::uint32_t degeneracy = 0;
    std::vector<Vertex> order; ///< removal sequence
};

/// Repeatedly removes a vertex of minimum residual degree (smallest id on
/// ties). The degeneracy is the largest residual degree seen at removal.
Peeling peel_by_degree(const Graph &g);

} // namespace netlab
