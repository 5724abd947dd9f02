#include "netlab/locality.hpp"

#include "netlab/distance_estimation.hpp"
#include "netlab/error.hpp"
#include "netlab/search.hpp"

#include <cmath>

namespace netlab {

std::uint32_t common_count(std::span<const Vertex> a, std::span<const Vertex> b) {
    std::uint32_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

double heterogeneity(const Graph &g) {
    if (g.n() == 0) throw Error("heterogeneity of an empty graph");
    const double n = g.n();
    const double mean = 2.0 * static_cast<double>(g.m()) / n;
    double var = 0.0;
    for (Vertex v = 0; v < g.n(); ++v) {
        const double diff = g.degree(v) - mean;
        var += diff * diff;
    }
    var /= n;
    if (var <= 0.0 || mean <= 0.0) return kRegularHeterogeneity;
    return std::log10(std::sqrt(var) / mean);
}

double degree_locality_edge(const Graph &g, const BridgeSet &bridges, EdgeRef e) {
    if (!g.has_edge(e.u, e.v)) throw Error("not an edge");
    if (bridges.contains(e)) throw Error("degree locality is undefined for bridges");
    const double common = common_count(g.neighbors(e.u), g.neighbors(e.v));
    return common / (std::min(g.degree(e.u), g.degree(e.v)) - 1.0);
}

double degree_locality(const Graph &g, const BridgeSet &bridges) {
    if (bridges.non_bridge_count == 0) throw Error("locality undefined for trees");
    double total = 0.0;
    for (Vertex u = 0; u < g.n(); ++u) {
        for (Vertex v : g.neighbors(u)) {
            if (v < u || bridges.contains({u, v})) continue;
            const double common = common_count(g.neighbors(u), g.neighbors(v));
            total += common / (std::min(g.degree(u), g.degree(v)) - 1.0);
        }
    }
    return total / static_cast<double>(bridges.non_bridge_count);
}

double degree_locality(const Graph &g) { return degree_locality(g, find_bridges(g)); }

double avg_detour_distance(const Graph &g, const BridgeSet &bridges) {
    if (bridges.non_bridge_count == 0) throw Error("locality undefined for trees");
    BidirectionalSearch search(g);
    double total = 0.0;
    for (Vertex u = 0; u < g.n(); ++u) {
        for (Vertex v : g.neighbors(u)) {
            if (v < u) continue;
            const EdgeRef e(u, v);
            if (bridges.contains(e)) continue;
            total += search.run(u, v, e).distance;
        }
    }
    return total / static_cast<double>(bridges.non_bridge_count);
}

double avg_nonedge_distance(double avg_all_pairs, std::uint64_t m, std::uint64_t non_edges) {
    if (non_edges == 0) throw Error("no non-edges");
    return avg_all_pairs + static_cast<double>(m) / static_cast<double>(non_edges) * (avg_all_pairs - 1.0);
}

DistanceLocality distance_locality(double avg_detour, double avg_nonedge) {
    if (avg_nonedge - 2.0 <= 1e-9) return {};
    DistanceLocality out;
    out.uncapped = 1.0 - (avg_detour - 2.0) / (avg_nonedge - 2.0);
    out.capped = std::max(out.uncapped, 0.0);
    return out;
}

double clustering_coefficient(const Graph &g) {
    double total = 0.0;
    std::uint64_t eligible = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
        const auto nb = g.neighbors(v);
        if (nb.size() < 2) continue;
        std::uint64_t links = 0;
        for (Vertex x : nb) links += common_count(nb, g.neighbors(x));
        links /= 2;
        const double pairs = static_cast<double>(nb.size()) * (nb.size() - 1.0) / 2.0;
        total += static_cast<double>(links) / pairs;
        ++eligible;
    }
    if (eligible == 0) throw Error("no vertex of degree at least 2");
    return total / static_cast<double>(eligible);
}

LocalityReport locality(const Graph &g, const LocalityOptions &options) {
    if (!is_connected(g)) throw Error("locality requires a connected graph");

    const BridgeSet bridges = find_bridges(g);
    if (bridges.non_bridge_count == 0) throw Error("locality undefined for trees");

    LocalityReport report;
    report.heterogeneity = heterogeneity(g);
    report.degree_locality = degree_locality(g, bridges);
    report.avg_detour_distance = avg_detour_distance(g, bridges);

    if (g.n() <= options.exact_threshold) {
        report.avg_all_pairs_distance = exact_average_distance(g);
    } else {
        report.avg_all_pairs_distance =
            weighted_avg_distance(g, options.estimator_k, options.seed, true).estimate;
        report.all_pairs_exact = false;
    }

    const std::uint64_t pairs = static_cast<std::uint64_t>(g.n()) * (g.n() - 1) / 2;
    report.avg_nonedge_distance = avg_nonedge_distance(report.avg_all_pairs_distance, g.m(), pairs - g.m());

    const auto dl = distance_locality(report.avg_detour_distance, report.avg_nonedge_distance);
    report.distance_locality = dl.capped;
    report.uncapped_distance_locality = dl.uncapped;
    report.locality = 0.5 * (report.degree_locality + report.distance_locality);
    report.clustering_coefficient = clustering_coefficient(g);
    return report;
}

} // namespace netlab
