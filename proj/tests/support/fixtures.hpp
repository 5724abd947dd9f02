#pragma once

#include "netlab/graph.hpp"
#include "netlab/rng.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace netlab::testing {

Graph path_graph(Vertex n);
Graph cycle_graph(Vertex n);
Graph complete_graph(Vertex n);
Graph star_graph(Vertex leaves);
Graph petersen_graph();
/// Triangles {0,1,2} and {3,4,5} joined by the edge 2-3.
Graph two_triangles_bridged();
Graph from_pairs(Vertex n, const std::vector<std::pair<Vertex, Vertex>> &pairs);

/// G(n, p).
Graph random_gnp(Vertex n, double p, Rng &rng);
/// Random spanning tree plus `extra` random edges (connected).
Graph random_connected(Vertex n, std::uint32_t extra, Rng &rng);
/// Points in the unit square joined when closer than `radius`, plus a
/// few long-range edges; connected by adding a path through components.
Graph random_geometric(Vertex n, double radius, std::uint32_t shortcuts, Rng &rng);
/// One of the above families picked at random; always connected, n >= 2.
Graph random_mixed_connected(Vertex max_n, Rng &rng);

/// Plain queue BFS.
std::vector<std::uint32_t> oracle_bfs(const Graph &g, Vertex s);
/// Floyd-Warshall distances; unreachable = UINT32_MAX.
std::vector<std::vector<std::uint32_t>> oracle_apsp(const Graph &g);
std::uint32_t oracle_diameter(const Graph &g);

/// Edges whose deletion increases the number of components.
std::vector<EdgeRef> oracle_bridges(const Graph &g);

/// Maximal cliques as sorted vertex sets by subset enumeration; n <= 20.
std::set<std::vector<Vertex>> oracle_maximal_cliques(const Graph &g);

/// Smallest k with a proper k-coloring; n <= 14.
std::uint32_t oracle_chromatic_number(const Graph &g);

/// Minimum vertex cover by subset enumeration; n <= 20.
std::uint32_t oracle_min_vertex_cover(const Graph &g);

/// Common-neighbor count of a pair by adjacency lookup.
std::uint32_t oracle_common(const Graph &g, Vertex u, Vertex v);

/// Weak closure by repeated full recomputation: find all vertices whose
/// worst non-adjacent pair count is smallest, remove one, repeat.
std::uint32_t oracle_weak_closure(const Graph &g);

/// max over non-adjacent pairs of common neighbors, plus one.
std::uint32_t oracle_closure(const Graph &g);

/// Modularity recomputed from the definition with double sums over pairs.
double oracle_modularity(const Graph &g, const std::vector<Vertex> &cluster_of);

/// Exhaustive degeneracy over all vertex subsets; n <= 14.
std::uint32_t oracle_degeneracy(const Graph &g);

/// Mean detour distance over non-bridge edges via BFS on G - e.
double oracle_avg_detour(const Graph &g);
/// Mean distance over non-adjacent unordered pairs from the APSP matrix.
double oracle_avg_nonedge_distance(const Graph &g);
/// Mean distance over all unordered pairs of distinct vertices.
double oracle_avg_distance(const Graph &g);

} // namespace netlab::testing
