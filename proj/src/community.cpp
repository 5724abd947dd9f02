#include "netlab/community.hpp"

#include "netlab/error.hpp"
#include "netlab/rng.hpp"

#include <algorithm>
#include <numeric>

namespace netlab {

Clustering Clustering::from_assignment(const Graph &g, std::vector<Vertex> cluster_of) {
    if (cluster_of.size() != g.n()) throw Error("clustering size does not match graph");
    Clustering c;
    const Vertex ids = cluster_of.empty() ? 0 : *std::max_element(cluster_of.begin(), cluster_of.end()) + 1;
    c.total_degree.assign(ids, 0);
    c.internal_edges.assign(ids, 0);
    for (Vertex v = 0; v < g.n(); ++v) {
        c.total_degree[cluster_of[v]] += g.degree(v);
        for (Vertex w : g.neighbors(v))
            if (v < w && cluster_of[v] == cluster_of[w]) ++c.internal_edges[cluster_of[v]];
    }
    c.cluster_of = std::move(cluster_of);
    return c;
}

Clustering Clustering::singletons(const Graph &g) {
    std::vector<Vertex> ids(g.n());
    std::iota(ids.begin(), ids.end(), Vertex{0});
    return from_assignment(g, std::move(ids));
}

double modularity(const Graph &g, const Clustering &clustering) {
    if (g.m() == 0) return 0.0;
    const double m = static_cast<double>(g.m());
    double q = 0.0;
    for (std::size_t i = 0; i < clustering.total_degree.size(); ++i) {
        const double share = static_cast<double>(clustering.total_degree[i]) / (2.0 * m);
        q += static_cast<double>(clustering.internal_edges[i]) / m - share * share;
    }
    return q;
}

double modularity(const Graph &g, const std::vector<Vertex> &cluster_of) {
    return modularity(g, Clustering::from_assignment(g, cluster_of));
}

LocalSearchResult louvain_first_phase(const Graph &g, const LouvainOptions &options) {
    if (g.m() == 0) throw Error("local search needs at least one edge");

    LocalSearchResult result;
    Clustering &c = result.clustering;
    c = Clustering::singletons(g);

    const auto two_m = static_cast<std::int64_t>(2 * g.m());
    // Q * m = internal_sum - tot_square_sum / (4m); both kept exactly.
    std::int64_t internal_sum = 0;
    std::int64_t tot_square_sum = 0;
    for (Vertex v = 0; v < g.n(); ++v) tot_square_sum += static_cast<std::int64_t>(g.degree(v)) * g.degree(v);
    auto current_q = [&] {
        const double m = static_cast<double>(g.m());
        return static_cast<double>(internal_sum) / m - static_cast<double>(tot_square_sum) / (4.0 * m * m);
    };

    std::vector<Vertex> order(g.n());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::optional<Rng> rng;
    if (options.seed) rng.emplace(*options.seed);

    std::vector<std::int64_t> link(g.n(), 0); // edges from v into each cluster
    std::vector<Vertex> touched;

    while (true) {
        if (result.iterations >= options.max_passes) throw Error("local search exceeded the pass limit");
        if (options.deadline.expired()) {
            result.timed_out = true;
            break;
        }
        if (rng) {
            for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng->below(i)]);
        }

        std::uint64_t moves = 0;
        for (Vertex v : order) {
            const Vertex home = c.cluster_of[v];
            const auto k = static_cast<std::int64_t>(g.degree(v));
            for (Vertex w : g.neighbors(v)) {
                const Vertex cw = c.cluster_of[w];
                if (link[cw]++ == 0) touched.push_back(cw);
            }

            // Take v out of its cluster.
            auto tot_home = static_cast<std::int64_t>(c.total_degree[home]);
            tot_square_sum -= tot_home * tot_home;
            tot_home -= k;
            tot_square_sum += tot_home * tot_home;
            c.total_degree[home] = static_cast<std::uint64_t>(tot_home);
            c.internal_edges[home] -= static_cast<std::uint64_t>(link[home]);
            internal_sum -= link[home];

            // Gain of joining cluster C, scaled by 2m^2: 2m*k_vC - tot_C*k.
            auto score = [&](Vertex cluster) {
                return two_m * link[cluster] - static_cast<std::int64_t>(c.total_degree[cluster]) * k;
            };
            const std::int64_t stay = score(home);
            Vertex best = home;
            std::int64_t best_score = 0;
            bool have_other = false;
            for (Vertex cluster : touched) {
                if (cluster == home) continue;
                const std::int64_t s = score(cluster);
                if (!have_other || s > best_score || (s == best_score && cluster < best)) {
                    best = cluster;
                    best_score = s;
                    have_other = true;
                }
            }
            const Vertex target = have_other && best_score > stay ? best : home;
            if (target != home) ++moves;

            auto tot_target = static_cast<std::int64_t>(c.total_degree[target]);
            tot_square_sum -= tot_target * tot_target;
            tot_target += k;
            tot_square_sum += tot_target * tot_target;
            c.total_degree[target] = static_cast<std::uint64_t>(tot_target);
            c.internal_edges[target] += static_cast<std::uint64_t>(link[target]);
            internal_sum += link[target];
            c.cluster_of[v] = target;

            for (Vertex cluster : touched) link[cluster] = 0;
            touched.clear();
        }
        ++result.iterations;
        if (options.after_pass) options.after_pass(c, current_q());
        if (moves == 0) break;
    }
    result.modularity = current_q();
    return result;
}

} // namespace netlab
