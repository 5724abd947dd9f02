#include "netlab/kernelization.hpp"

#include "netlab/error.hpp"
#include "netlab/search.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace netlab {

namespace {

using Adjacency = std::vector<std::vector<Vertex>>;

Adjacency mutable_copy(const Graph &g) {
    Adjacency adj(g.n());
    for (Vertex v = 0; v < g.n(); ++v) adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    return adj;
}

Graph freeze(const Adjacency &adj) {
    std::vector<EdgeRef> edges;
    for (Vertex u = 0; u < adj.size(); ++u)
        for (Vertex v : adj[u])
            if (u < v) edges.emplace_back(u, v);
    return Graph::from_edges(static_cast<Vertex>(adj.size()), edges);
}

// N[v] ⊆ N[u] for adjacent u, v; both lists sorted.
bool closed_contained(const std::vector<Vertex> &nv, const std::vector<Vertex> &nu, Vertex u) {
    auto j = nu.begin();
    for (Vertex x : nv) {
        if (x == u) continue;
        j = std::lower_bound(j, nu.end(), x);
        if (j == nu.end() || *j != x) return false;
    }
    return true;
}

void finish(KernelResult &result, Vertex n, std::uint32_t size) {
    result.kernel_size = size;
    result.relative_size = n ? static_cast<double>(size) / n : 0.0;
    result.exponent = cost_exponent(size, n);
}

} // namespace

KernelResult vc_dominance_kernel(const Graph &g) {
    Adjacency adj = mutable_copy(g);
    std::vector<char> deleted(g.n(), 0);
    std::set<Vertex> pending;
    for (Vertex v = 0; v < g.n(); ++v) pending.insert(pending.end(), v);

    KernelResult result;
    while (!pending.empty()) {
        const Vertex v = *pending.begin();
        pending.erase(pending.begin());
        if (deleted[v]) continue;

        for (Vertex u : adj[v]) {
            if (adj[u].size() < adj[v].size() || !closed_contained(adj[v], adj[u], u)) continue;
            result.forced_vertices.push_back(u);
            deleted[u] = 1;
            for (Vertex w : adj[u]) {
                auto &list = adj[w];
                list.erase(std::lower_bound(list.begin(), list.end(), u));
                pending.insert(w);
            }
            adj[u].clear();
            break;
        }
    }

    result.residual = freeze(adj);

    // Largest component among the non-isolated survivors.
    Vertex count = 0;
    const auto label = component_labels(result.residual, &count);
    std::vector<std::uint32_t> size(count, 0);
    for (Vertex v = 0; v < g.n(); ++v)
        if (result.residual.degree(v) > 0) ++size[label[v]];
    finish(result, g.n(), size.empty() ? 0 : *std::max_element(size.begin(), size.end()));
    return result;
}

namespace {

// Maximum independent set within `candidates` by branching on a vertex.
std::uint32_t max_independent(const std::vector<std::uint32_t> &nbr_mask, std::uint32_t candidates) {
    if (candidates == 0) return 0;
    const int v = std::countr_zero(candidates);
    const std::uint32_t bit = 1u << v;
    const std::uint32_t rest = candidates & ~bit;
    if ((nbr_mask[v] & rest) == 0) return 1 + max_independent(nbr_mask, rest);
    const std::uint32_t take = 1 + max_independent(nbr_mask, rest & ~nbr_mask[v]);
    const std::uint32_t skip = max_independent(nbr_mask, rest);
    return std::max(take, skip);
}

} // namespace

std::uint32_t minimum_vertex_cover_size(const Graph &g) {
    if (g.n() > 24) throw Error("exhaustive vertex cover limited to 24 vertices");
    std::vector<std::uint32_t> nbr_mask(g.n(), 0);
    for (Vertex v = 0; v < g.n(); ++v)
        for (Vertex w : g.neighbors(v)) nbr_mask[v] |= 1u << w;
    const std::uint32_t all = g.n() == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << g.n()) - 1);
    return g.n() - max_independent(nbr_mask, all);
}

bool vc_kernel_soundness_check(const Graph &g) {
    if (g.n() > 18) throw Error("soundness check limited to 18 vertices");
    const KernelResult kernel = vc_dominance_kernel(g);
    const auto forced = static_cast<std::uint32_t>(kernel.forced_vertices.size());
    return minimum_vertex_cover_size(g) == forced + minimum_vertex_cover_size(kernel.residual);
}

KernelResult omega_core_kernel(const Graph &g, std::uint32_t omega) {
    std::vector<std::uint32_t> degree(g.n());
    std::vector<char> removed(g.n(), 0);
    std::vector<Vertex> stack;
    for (Vertex v = 0; v < g.n(); ++v) {
        degree[v] = g.degree(v);
        if (degree[v] < omega) {
            removed[v] = 1;
            stack.push_back(v);
        }
    }
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v)) {
            if (removed[w]) continue;
            if (--degree[w] < omega) {
                removed[w] = 1;
                stack.push_back(w);
            }
        }
    }

    KernelResult result;
    std::vector<EdgeRef> edges;
    std::uint32_t survivors = 0;
    for (Vertex u = 0; u < g.n(); ++u) {
        if (removed[u]) continue;
        ++survivors;
        for (Vertex v : g.neighbors(u))
            if (u < v && !removed[v]) edges.emplace_back(u, v);
    }
    result.residual = Graph::from_edges(g.n(), edges);
    finish(result, g.n(), survivors);
    return result;
}

} // namespace netlab
