#include "netlab/cliques.hpp"

#include "netlab/error.hpp"
#include "netlab/locality.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <vector>

namespace netlab {

namespace {

std::vector<Vertex> intersect(std::span<const Vertex> a, std::span<const Vertex> b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

class CliqueEnumerator {
public:
    CliqueEnumerator(const Graph &g, const Deadline &deadline, const CliqueVisitor &visitor)
        : g_(g), deadline_(deadline), visitor_(visitor) {}

    CliqueStats run() {
        const Peeling peeling = peel_by_degree(g_);
        std::vector<std::uint32_t> position(g_.n());
        for (std::uint32_t i = 0; i < peeling.order.size(); ++i) position[peeling.order[i]] = i;

        for (Vertex v : peeling.order) {
            if (stats_.timed_out) break;
            std::vector<Vertex> later, earlier;
            for (Vertex w : g_.neighbors(v)) (position[w] > position[v] ? later : earlier).push_back(w);
            clique_.assign(1, v);
            expand(later, earlier);
        }
        if (g_.m() > 0)
            stats_.count_relative_to_m = static_cast<double>(stats_.maximal_clique_count) / static_cast<double>(g_.m());
        return stats_;
    }

private:
    void expand(std::vector<Vertex> candidates, std::vector<Vertex> excluded) {
        if ((++calls_ & 0x3ff) == 0 && deadline_.expired()) stats_.timed_out = true;
        if (stats_.timed_out) return;

        if (candidates.empty()) {
            if (excluded.empty()) report();
            return;
        }

        // Pivot maximizing |P ∩ N(u)| over P ∪ X; smallest id wins ties.
        Vertex pivot = 0;
        std::int64_t best = -1;
        auto consider = [&](Vertex u) {
            const auto hits = static_cast<std::int64_t>(count_common(candidates, g_.neighbors(u)));
            if (hits > best || (hits == best && u < pivot)) {
                best = hits;
                pivot = u;
            }
        };
        for (Vertex u : candidates) consider(u);
        for (Vertex u : excluded) consider(u);

        std::vector<Vertex> branch;
        const auto pivot_nb = g_.neighbors(pivot);
        std::set_difference(candidates.begin(), candidates.end(), pivot_nb.begin(), pivot_nb.end(),
                            std::back_inserter(branch));

        for (Vertex v : branch) {
            const auto nb = g_.neighbors(v);
            clique_.push_back(v);
            expand(intersect(candidates, nb), intersect(excluded, nb));
            clique_.pop_back();
            if (stats_.timed_out) return;
            candidates.erase(std::lower_bound(candidates.begin(), candidates.end(), v));
            excluded.insert(std::lower_bound(excluded.begin(), excluded.end(), v), v);
        }
    }

    static std::size_t count_common(const std::vector<Vertex> &a, std::span<const Vertex> b) {
        std::size_t count = 0;
        auto i = a.begin();
        auto j = b.begin();
        while (i != a.end() && j != b.end()) {
            if (*i < *j) ++i;
            else if (*j < *i) ++j;
            else { ++count; ++i; ++j; }
        }
        return count;
    }

    void report() {
        ++stats_.maximal_clique_count;
        stats_.clique_number = std::max(stats_.clique_number, static_cast<std::uint32_t>(clique_.size()));
        if (visitor_) visitor_(clique_);
    }

    const Graph &g_;
    const Deadline &deadline_;
    const CliqueVisitor &visitor_;
    CliqueStats stats_;
    std::vector<Vertex> clique_;
    std::uint64_t calls_ = 0;
};

} // namespace

CliqueStats enumerate_maximal_cliques(const Graph &g, const Deadline &deadline, const CliqueVisitor &visitor) {
    return CliqueEnumerator(g, deadline, visitor).run();
}

std::uint32_t closure(const Graph &g) {
    std::vector<std::uint32_t> count(g.n(), 0);
    std::vector<char> adjacent(g.n(), 0);
    std::vector<Vertex> touched;
    std::uint32_t worst = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
        for (Vertex x : g.neighbors(v)) adjacent[x] = 1;
        for (Vertex x : g.neighbors(v)) {
            for (Vertex w : g.neighbors(x)) {
                if (w == v) continue;
                if (count[w]++ == 0) touched.push_back(w);
            }
        }
        for (Vertex w : touched) {
            if (!adjacent[w]) worst = std::max(worst, count[w]);
            count[w] = 0;
        }
        touched.clear();
        for (Vertex x : g.neighbors(v)) adjacent[x] = 0;
    }
    return worst + 1;
}

namespace {

// One elimination run that only tracks pairs with >= guess common neighbors.
class WeakClosureRun {
public:
    WeakClosureRun(const Graph &g, std::uint32_t guess) : g_(g), tracked_(g.n()), buckets_(g.n()), top_(g.n(), 0) {
        std::vector<std::uint32_t> count(g.n(), 0);
        std::vector<char> adjacent(g.n(), 0);
        std::vector<Vertex> touched;
        for (Vertex v = 0; v < g.n(); ++v) {
            for (Vertex x : g.neighbors(v)) adjacent[x] = 1;
            for (Vertex x : g.neighbors(v))
                for (Vertex w : g.neighbors(x))
                    if (w != v && count[w]++ == 0) touched.push_back(w);
            for (Vertex w : touched) {
                if (!adjacent[w] && count[w] >= guess && count[w] > 0) track(v, w, count[w]);
                count[w] = 0;
            }
            touched.clear();
            for (Vertex x : g.neighbors(v)) adjacent[x] = 0;
        }
        for (Vertex v = 0; v < g.n(); ++v) queue_.emplace(top_[v], v);
    }

    std::uint32_t eliminate() {
        std::vector<char> removed(g_.n(), 0);
        std::vector<char> in_nbhd(g_.n(), 0);
        std::uint32_t result = 0;
        while (!queue_.empty()) {
            const auto [worst, v] = *queue_.begin();
            queue_.erase(queue_.begin());
            removed[v] = 1;
            result = std::max(result, worst + 1);

            // v leaves every bad pair it was part of.
            for (const auto &entry : tracked_[v]) {
                const Vertex w = entry.first;
                if (removed[w]) continue;
                auto it = tracked_[w].find(v);
                const std::uint32_t c = it->second;
                tracked_[w].erase(it);
                if (c > 0) lower(w, c, 0);
            }
            tracked_[v].clear();

            // Remaining neighbor pairs of v lose v as a common neighbor.
            for (Vertex x : g_.neighbors(v)) in_nbhd[x] = 1;
            for (Vertex x : g_.neighbors(v)) {
                if (removed[x]) continue;
                for (auto &[y, c] : tracked_[x]) {
                    if (!in_nbhd[y] || removed[y] || c == 0) continue;
                    lower(x, c, c - 1);
                    --c;
                }
            }
            for (Vertex x : g_.neighbors(v)) in_nbhd[x] = 0;
        }
        return result;
    }

private:
    void track(Vertex v, Vertex w, std::uint32_t c) {
        tracked_[v].emplace(w, c);
        auto &b = buckets_[v];
        if (b.size() <= c) b.resize(c + 1, 0);
        ++b[c];
        top_[v] = std::max(top_[v], c);
    }

    // Moves one tracked pair of v from count `from` to `to` (to = 0 drops it)
    // and repositions v in the global queue when its maximum changes.
    void lower(Vertex v, std::uint32_t from, std::uint32_t to) {
        auto &b = buckets_[v];
        --b[from];
        if (to > 0) ++b[to];
        std::uint32_t top = top_[v];
        while (top > 0 && b[top] == 0) --top;
        if (top != top_[v]) {
            queue_.erase({top_[v], v});
            top_[v] = top;
            queue_.emplace(top, v);
        }
    }

    const Graph &g_;
    std::vector<std::unordered_map<Vertex, std::uint32_t>> tracked_;
    std::vector<std::vector<std::uint32_t>> buckets_; ///< histogram of tracked counts per vertex
    std::vector<std::uint32_t> top_;                  ///< c_v: largest tracked count
    std::set<std::pair<std::uint32_t, Vertex>> queue_;
};

} // namespace

std::uint32_t weak_closure(const Graph &g, std::uint32_t initial_guess) {
    std::uint32_t guess = std::max<std::uint32_t>(initial_guess, 1);
    while (true) {
        const std::uint32_t result = WeakClosureRun(g, guess).eliminate();
        if (result >= guess || guess == 1) return result;
        --guess;
    }
}

StructuralReport structural_report(const Graph &g, const StructuralOptions &options) {
    StructuralReport report;
    report.n = g.n();
    report.m = g.m();
    report.closure.degeneracy = peel_by_degree(g).degeneracy;
    report.closure.closure = closure(g);
    report.closure.weak_closure = weak_closure(g);
    report.cliques = enumerate_maximal_cliques(g, options.clique_deadline);
    report.heterogeneity = heterogeneity(g);
    if (options.with_locality) {
        try {
            LocalityOptions lo;
            lo.seed = options.seed;
            report.locality = locality(g, lo).locality;
        } catch (const Error &) {
            report.locality.reset();
        }
    }
    return report;
}

} // namespace netlab
