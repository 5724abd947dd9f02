#include "fixtures.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace netlab::testing {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph &g) {
    if (g.n() > 32) throw std::logic_error("mask oracle needs n <= 32");
    std::vector<Mask> adj(g.n(), 0);
    for (Vertex v = 0; v < g.n(); ++v)
        for (Vertex w : g.neighbors(v)) adj[v] |= Mask{1} << w;
    return adj;
}

// Dense bit rows for oracles on graphs beyond 32 vertices.
struct BitMatrix {
    std::size_t words;
    std::vector<std::uint64_t> bits;

    explicit BitMatrix(const Graph &g) : words((g.n() + 63) / 64), bits(g.n() * words, 0) {
        for (Vertex v = 0; v < g.n(); ++v)
            for (Vertex w : g.neighbors(v)) bits[v * words + w / 64] |= std::uint64_t{1} << (w % 64);
    }
    bool test(Vertex v, Vertex w) const { return bits[v * words + w / 64] >> (w % 64) & 1; }
    std::uint32_t common(Vertex v, Vertex w, const std::vector<std::uint64_t> &alive) const {
        std::uint32_t c = 0;
        for (std::size_t i = 0; i < words; ++i)
            c += std::popcount(bits[v * words + i] & bits[w * words + i] & alive[i]);
        return c;
    }
};

std::uint32_t components(Vertex n, const std::vector<EdgeRef> &edges) {
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    std::function<Vertex(Vertex)> find = [&](Vertex x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    std::uint32_t count = n;
    for (const EdgeRef &e : edges) {
        const Vertex a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[a] = b;
            --count;
        }
    }
    return count;
}

} // namespace

Graph from_pairs(Vertex n, const std::vector<std::pair<Vertex, Vertex>> &pairs) {
    std::vector<EdgeRef> edges;
    for (auto [u, v] : pairs) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph path_graph(Vertex n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v = 0; v + 1 < n; ++v) pairs.emplace_back(v, v + 1);
    return from_pairs(n, pairs);
}

Graph cycle_graph(Vertex n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v = 0; v < n; ++v) pairs.emplace_back(v, (v + 1) % n);
    return from_pairs(n, pairs);
}

Graph complete_graph(Vertex n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return from_pairs(n, pairs);
}

Graph star_graph(Vertex leaves) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v = 1; v <= leaves; ++v) pairs.emplace_back(0, v);
    return from_pairs(leaves + 1, pairs);
}

Graph petersen_graph() {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < 5; ++i) {
        pairs.emplace_back(i, (i + 1) % 5);
        pairs.emplace_back(i, i + 5);
        pairs.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return from_pairs(10, pairs);
}

Graph two_triangles_bridged() {
    return from_pairs(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

Graph random_gnp(Vertex n, double p, Rng &rng) {
    std::vector<EdgeRef> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.uniform01() < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph random_connected(Vertex n, std::uint32_t extra, Rng &rng) {
    std::vector<EdgeRef> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(rng.below(v)), v);
    for (std::uint32_t i = 0; i < extra && n > 1; ++i) {
        const auto u = static_cast<Vertex>(rng.below(n));
        const auto v = static_cast<Vertex>(rng.below(n));
        if (u != v) edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

Graph random_geometric(Vertex n, double radius, std::uint32_t shortcuts, Rng &rng) {
    std::vector<double> x(n), y(n);
    for (Vertex v = 0; v < n; ++v) {
        x[v] = rng.uniform01();
        y[v] = rng.uniform01();
    }
    std::vector<EdgeRef> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (std::hypot(x[u] - x[v], y[u] - y[v]) < radius) edges.emplace_back(u, v);
    for (std::uint32_t i = 0; i < shortcuts && n > 1; ++i) {
        const auto u = static_cast<Vertex>(rng.below(n));
        const auto v = static_cast<Vertex>(rng.below(n));
        if (u != v) edges.emplace_back(u, v);
    }
    // Chain the components together through their smallest members.
    Graph g = Graph::from_edges(n, edges);
    const auto label = component_labels(g);
    Vertex previous = 0;
    std::vector<char> seen(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        if (seen[label[v]]) continue;
        seen[label[v]] = 1;
        if (v != 0) edges.emplace_back(previous, v);
        previous = v;
    }
    return Graph::from_edges(n, edges);
}

Graph random_mixed_connected(Vertex max_n, Rng &rng) {
    const auto n = static_cast<Vertex>(2 + rng.below(max_n - 1));
    switch (rng.below(4)) {
    case 0: return random_connected(n, static_cast<std::uint32_t>(rng.below(n + 1)), rng);
    case 1: return random_connected(n, static_cast<std::uint32_t>(rng.below(3 * n + 1)), rng);
    case 2: return random_geometric(n, 0.1 + 0.3 * rng.uniform01(), static_cast<std::uint32_t>(rng.below(4)), rng);
    default: {
        Graph g = random_gnp(n, 0.05 + 0.5 * rng.uniform01(), rng);
        std::vector<EdgeRef> edges = g.edges();
        for (Vertex v = 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(rng.below(v)), v);
        if (rng.below(2)) return Graph::from_edges(n, edges);
        Graph core = largest_component(g);
        return core.n() >= 2 ? core : Graph::from_edges(n, edges);
    }
    }
}

std::vector<std::uint32_t> oracle_bfs(const Graph &g, Vertex s) {
    std::vector<std::uint32_t> dist(g.n(), g.n());
    std::deque<Vertex> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(v)) {
            if (dist[w] == g.n()) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<std::vector<std::uint32_t>> oracle_apsp(const Graph &g) {
    constexpr std::uint32_t inf = UINT32_MAX;
    std::vector<std::vector<std::uint32_t>> d(g.n(), std::vector<std::uint32_t>(g.n(), inf));
    for (Vertex v = 0; v < g.n(); ++v) {
        d[v][v] = 0;
        for (Vertex w : g.neighbors(v)) d[v][w] = 1;
    }
    for (Vertex k = 0; k < g.n(); ++k)
        for (Vertex i = 0; i < g.n(); ++i) {
            if (d[i][k] == inf) continue;
            for (Vertex j = 0; j < g.n(); ++j)
                if (d[k][j] != inf && d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
        }
    return d;
}

std::uint32_t oracle_diameter(const Graph &g) {
    std::uint32_t best = 0;
    for (Vertex v = 0; v < g.n(); ++v)
        for (std::uint32_t d : oracle_bfs(g, v))
            if (d != g.n()) best = std::max(best, d);
    return best;
}

std::vector<EdgeRef> oracle_bridges(const Graph &g) {
    const std::vector<EdgeRef> all = g.edges();
    const std::uint32_t base = components(g.n(), all);
    std::vector<EdgeRef> bridges;
    for (std::size_t i = 0; i < all.size(); ++i) {
        std::vector<EdgeRef> rest = all;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        if (components(g.n(), rest) > base) bridges.push_back(all[i]);
    }
    return bridges;
}

std::set<std::vector<Vertex>> oracle_maximal_cliques(const Graph &g) {
    const auto adj = adjacency_masks(g);
    const Mask everyone = g.n() == 32 ? ~Mask{0} : (Mask{1} << g.n()) - 1;
    std::set<std::vector<Vertex>> out;
    // Grow every clique by increasing ids; keep those nobody can extend.
    std::function<void(Mask, Mask, Vertex)> grow = [&](Mask clique, Mask common, Vertex from) {
        if (clique != 0 && common == 0) {
            std::vector<Vertex> members;
            for (Vertex v = 0; v < g.n(); ++v)
                if (clique >> v & 1) members.push_back(v);
            out.insert(members);
        }
        for (Vertex v = from; v < g.n(); ++v)
            if (common >> v & 1) grow(clique | Mask{1} << v, common & adj[v], v + 1);
    };
    grow(0, everyone, 0);
    return out;
}

std::uint32_t oracle_chromatic_number(const Graph &g) {
    if (g.n() == 0) return 0;
    std::vector<int> color(g.n(), -1);
    std::function<bool(Vertex, std::uint32_t)> paint = [&](Vertex v, std::uint32_t k) {
        if (v == g.n()) return true;
        for (std::uint32_t c = 0; c < k; ++c) {
            bool clash = false;
            for (Vertex w : g.neighbors(v))
                if (color[w] == static_cast<int>(c)) clash = true;
            if (clash) continue;
            color[v] = static_cast<int>(c);
            if (paint(v + 1, k)) return true;
            color[v] = -1;
        }
        return false;
    };
    for (std::uint32_t k = 1;; ++k) {
        std::fill(color.begin(), color.end(), -1);
        if (paint(0, k)) return k;
    }
}

std::uint32_t oracle_min_vertex_cover(const Graph &g) {
    const auto adj = adjacency_masks(g);
    std::uint32_t best = g.n();
    for (Mask s = 0; s < (Mask{1} << g.n()); ++s) {
        bool cover = true;
        for (Vertex v = 0; v < g.n() && cover; ++v)
            if (!(s >> v & 1) && (adj[v] & ~s)) cover = false;
        if (cover) best = std::min<std::uint32_t>(best, std::popcount(s));
    }
    return best;
}

std::uint32_t oracle_common(const Graph &g, Vertex u, Vertex v) {
    std::uint32_t c = 0;
    for (Vertex w = 0; w < g.n(); ++w)
        if (g.has_edge(u, w) && g.has_edge(v, w)) ++c;
    return c;
}

std::uint32_t oracle_closure(const Graph &g) {
    std::uint32_t worst = 0;
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) worst = std::max(worst, oracle_common(g, u, v));
    return worst + 1;
}

std::uint32_t oracle_weak_closure(const Graph &g) {
    const BitMatrix adj(g);
    // c works iff removing c-good vertices in any order empties the graph;
    // counts only drop as vertices leave, so greedy removal decides it.
    auto empties = [&](std::uint32_t c) {
        std::vector<std::uint64_t> alive(adj.words, 0);
        for (Vertex v = 0; v < g.n(); ++v) alive[v / 64] |= std::uint64_t{1} << (v % 64);
        std::vector<char> gone(g.n(), 0);
        Vertex left = g.n();
        bool progress = true;
        while (left > 0 && progress) {
            progress = false;
            for (Vertex v = 0; v < g.n(); ++v) {
                if (gone[v]) continue;
                bool good = true;
                for (Vertex w = 0; w < g.n() && good; ++w)
                    if (w != v && !gone[w] && !adj.test(v, w) && adj.common(v, w, alive) >= c) good = false;
                if (good) {
                    gone[v] = 1;
                    alive[v / 64] &= ~(std::uint64_t{1} << (v % 64));
                    --left;
                    progress = true;
                }
            }
        }
        return left == 0;
    };
    std::uint32_t c = 1;
    while (!empties(c)) ++c;
    return c;
}

double oracle_modularity(const Graph &g, const std::vector<Vertex> &cluster_of) {
    // Q = 1/(2m) sum_{u,v} [A_uv - k_u k_v / 2m] delta(c_u, c_v)
    const double two_m = 2.0 * static_cast<double>(g.m());
    double q = 0.0;
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = 0; v < g.n(); ++v)
            if (cluster_of[u] == cluster_of[v])
                q += (g.has_edge(u, v) ? 1.0 : 0.0) - g.degree(u) * static_cast<double>(g.degree(v)) / two_m;
    return q / two_m;
}

std::uint32_t oracle_degeneracy(const Graph &g) {
    const auto adj = adjacency_masks(g);
    std::uint32_t best = 0;
    for (Mask s = 1; s < (Mask{1} << g.n()); ++s) {
        std::uint32_t low = UINT32_MAX;
        for (Vertex v = 0; v < g.n(); ++v)
            if (s >> v & 1) low = std::min<std::uint32_t>(low, std::popcount(adj[v] & s));
        best = std::max(best, low);
    }
    return best;
}

double oracle_avg_detour(const Graph &g) {
    const auto all = g.edges();
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        std::vector<EdgeRef> rest = all;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        const Graph h = Graph::from_edges(g.n(), rest);
        const std::uint32_t d = oracle_bfs(h, all[i].u)[all[i].v];
        if (d == h.n()) continue;
        sum += d;
        ++count;
    }
    return sum / static_cast<double>(count);
}

double oracle_avg_nonedge_distance(const Graph &g) {
    const auto d = oracle_apsp(g);
    double sum = 0.0;
    std::size_t count = 0;
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) {
                sum += d[u][v];
                ++count;
            }
    return sum / static_cast<double>(count);
}

double oracle_avg_distance(const Graph &g) {
    const auto d = oracle_apsp(g);
    double sum = 0.0;
    std::size_t count = 0;
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v) {
            sum += d[u][v];
            ++count;
        }
    return sum / static_cast<double>(count);
}

} // namespace netlab::testing
