#include "netlab/graph.hpp"

#include "netlab/error.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace netlab {

Graph Graph::from_edges(Vertex n, std::span<const EdgeRef> edges) {
    std::vector<std::size_t> degree(n, 0);
    for (const auto &e : edges) {
        if (e.u == e.v) throw Error("self-loop in edge list");
        if (e.u >= n || e.v >= n) throw Error("vertex id out of range");
        ++degree[e.u];
        ++degree[e.v];
    }

    Graph g;
    g.n_ = n;
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];

    std::vector<Vertex> raw(g.offsets_[n]);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto &e : edges) {
        raw[fill[e.u]++] = e.v;
        raw[fill[e.v]++] = e.u;
    }

    // Sort each list and drop duplicates, compacting as we go.
    std::vector<std::size_t> offsets(static_cast<std::size_t>(n) + 1, 0);
    std::size_t out = 0;
    for (Vertex v = 0; v < n; ++v) {
        auto first = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        auto last = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        std::sort(first, last);
        last = std::unique(first, last);
        for (auto it = first; it != last; ++it) raw[out++] = *it;
        offsets[v + 1] = out;
    }
    raw.resize(out);
    g.offsets_ = std::move(offsets);
    g.adjacency_ = std::move(raw);
    return g;
}

std::uint32_t Graph::max_degree() const {
    std::uint32_t best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<EdgeRef> Graph::edges() const {
    std::vector<EdgeRef> out;
    out.reserve(m());
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

double Graph::density() const {
    if (n_ < 2) return 0.0;
    return 2.0 * static_cast<double>(m()) / (static_cast<double>(n_) * (n_ - 1.0));
}

Graph build_graph(std::span<const std::pair<std::int64_t, std::int64_t>> edge_list) {
    if (edge_list.empty()) throw Error("empty graph");

    std::unordered_map<std::int64_t, Vertex> ids;
    auto id_of = [&](std::int64_t raw) {
        auto [it, inserted] = ids.try_emplace(raw, static_cast<Vertex>(ids.size()));
        return it->second;
    };

    std::vector<EdgeRef> edges;
    edges.reserve(edge_list.size());
    for (const auto &[a, b] : edge_list) {
        const Vertex u = id_of(a);
        const Vertex v = id_of(b);
        if (u != v) edges.emplace_back(u, v);
    }
    return Graph::from_edges(static_cast<Vertex>(ids.size()), edges);
}

Graph induced_subgraph(const Graph &g, std::span<const Vertex> vertices) {
    std::vector<Vertex> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    const Vertex none = g.n();
    std::vector<Vertex> new_id(g.n(), none);
    for (std::size_t i = 0; i < sorted.size(); ++i) new_id[sorted[i]] = static_cast<Vertex>(i);

    std::vector<EdgeRef> edges;
    for (Vertex u : sorted)
        for (Vertex v : g.neighbors(u))
            if (u < v && new_id[v] != none) edges.emplace_back(new_id[u], new_id[v]);
    return Graph::from_edges(static_cast<Vertex>(sorted.size()), edges);
}

std::vector<Vertex> component_labels(const Graph &g, Vertex *component_count) {
    const Vertex none = g.n();
    std::vector<Vertex> label(g.n(), none);
    std::vector<Vertex> stack;
    Vertex count = 0;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (label[s] != none) continue;
        label[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g.neighbors(x)) {
                if (label[y] == none) {
                    label[y] = count;
                    stack.push_back(y);
                }
            }
        }
        ++count;
    }
    if (component_count) *component_count = count;
    return label;
}

bool is_connected(const Graph &g) {
    Vertex count = 0;
    component_labels(g, &count);
    return count <= 1;
}

Graph largest_component(const Graph &g) {
    Vertex count = 0;
    const auto label = component_labels(g, &count);
    if (count <= 1) return g;

    std::vector<Vertex> size(count, 0);
    for (Vertex l : label) ++size[l];
    // Labels follow smallest member id, so the first maximum wins the tie.
    const auto best = static_cast<Vertex>(std::max_element(size.begin(), size.end()) - size.begin());

    std::vector<Vertex> members;
    members.reserve(size[best]);
    for (Vertex v = 0; v < g.n(); ++v)
        if (label[v] == best) members.push_back(v);
    return induced_subgraph(g, members);
}

BfsWorkspace::BfsWorkspace(const Graph &g) : g_(&g), dist_(g.n(), unreached(g)) {
    queue_.reserve(g.n());
}

std::uint32_t BfsWorkspace::run(Vertex source) {
    const std::uint32_t none = unreached(*g_);
    for (Vertex v : queue_) dist_[v] = none;
    queue_.clear();
    distance_sum_ = 0;

    dist_[source] = 0;
    queue_.push_back(source);
    std::uint32_t ecc = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        const Vertex x = queue_[head];
        const std::uint32_t dx = dist_[x];
        ecc = dx;
        distance_sum_ += dx;
        for (Vertex y : g_->neighbors(x)) {
            if (dist_[y] == none) {
                dist_[y] = dx + 1;
                queue_.push_back(y);
            }
        }
    }
    return ecc;
}

std::vector<std::uint32_t> bfs(const Graph &g, Vertex source) {
    if (source >= g.n()) throw Error("bfs source out of range");
    BfsWorkspace ws(g);
    ws.run(source);
    return {ws.distances().begin(), ws.distances().end()};
}

bool BridgeSet::contains(EdgeRef e) const { return std::binary_search(bridges.begin(), bridges.end(), e); }

BridgeSet find_bridges(const Graph &g) {
    const Vertex n = g.n();
    const std::uint32_t unvisited = 0;
    std::vector<std::uint32_t> disc(n, unvisited), low(n, 0);
    std::vector<Vertex> parent(n, n);

    struct Frame {
        Vertex v;
        std::uint32_t next; // index into neighbor list
    };
    std::vector<Frame> stack;

    BridgeSet result;
    std::uint32_t time = 0;
    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != unvisited) continue;
        disc[root] = low[root] = ++time;
        stack.push_back({root, 0});
        while (!stack.empty()) {
            Frame &top = stack.back();
            const Vertex v = top.v;
            auto nb = g.neighbors(v);
            if (top.next < nb.size()) {
                const Vertex w = nb[top.next++];
                if (disc[w] == unvisited) {
                    parent[w] = v;
                    disc[w] = low[w] = ++time;
                    stack.push_back({w, 0});
                } else if (w != parent[v]) {
                    low[v] = std::min(low[v], disc[w]);
                }
                continue;
            }
            stack.pop_back();
            if (parent[v] != n) {
                const Vertex p = parent[v];
                low[p] = std::min(low[p], low[v]);
                if (low[v] > disc[p]) result.bridges.emplace_back(p, v);
            }
        }
    }
    std::sort(result.bridges.begin(), result.bridges.end());
    result.non_bridge_count = g.m() - result.bridges.size();
    return result;
}

Peeling peel_by_degree(const Graph &g) {
    const Vertex n = g.n();
    std::vector<std::uint32_t> degree(n);
    std::set<std::pair<std::uint32_t, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        queue.emplace(degree[v], v);
    }

    std::vector<char> removed(n, 0);
    Peeling result;
    result.order.reserve(n);
    while (!queue.empty()) {
        const auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = 1;
        result.order.push_back(v);
        result.degeneracy = std::max(result.degeneracy, d);
        for (Vertex w : g.neighbors(v)) {
            if (removed[w]) continue;
            queue.erase({degree[w], w});
            --degree[w];
            queue.emplace(degree[w], w);
        }
    }
    return result;
}

} // namespace netlab
