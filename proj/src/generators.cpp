#include "netlab/generators.hpp"

#include "netlab/error.hpp"
#include "netlab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace netlab {

namespace {

// Stream ids split off the generator seed.
constexpr std::uint64_t kPositionStream = 1;
constexpr std::uint64_t kEdgeStream = 2;

double log_add_exp(double a, double b) {
    if (a == -INFINITY) return b;
    if (b == -INFINITY) return a;
    const double hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// Largest index k in [first, n) with w[k] >= bound, or first - 1 if none.
// Weights are non-increasing.
std::ptrdiff_t last_at_least(const std::vector<double> &w, std::size_t first, double bound) {
    auto it = std::partition_point(w.begin() + static_cast<std::ptrdiff_t>(first), w.end(),
                                   [bound](double x) { return x >= bound; });
    return (it - w.begin()) - 1;
}

} // namespace

std::string to_string(Model model) {
    switch (model) {
    case Model::er: return "er";
    case Model::chung_lu: return "chung_lu";
    case Model::girg: return "girg";
    }
    return "unknown";
}

std::string to_string(GroundSpace space) { return space == GroundSpace::torus ? "torus" : "square"; }

Model parse_model(const std::string &name) {
    if (name == "er") return Model::er;
    if (name == "chung_lu") return Model::chung_lu;
    if (name == "girg") return Model::girg;
    throw Error("unknown model '" + name + "'");
}

Beta::Beta(double value) {
    if (std::isinf(value) && value > 0) {
        uniform_ = true;
        return;
    }
    if (!(value > 2.0)) throw Error("power-law exponent must be > 2");
    value_ = value;
}

double Beta::value() const {
    if (uniform_) throw Error("uniform weights have no finite exponent");
    return value_;
}

void GeneratorParams::validate() const {
    if (n < 2) throw Error("n must be at least 2");
    if (!(target_avg_degree > 0.0) || !(target_avg_degree < n - 1.0))
        throw Error("target average degree must lie in (0, n-1)");
    if (model == Model::girg) {
        if (!(temperature >= 0.0 && temperature < 1.0)) throw Error("temperature must lie in [0, 1)");
        if (dimension < 1) throw Error("dimension must be positive");
    }
}

double torus_distance(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) throw Error("dimension mismatch");
    double dist = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double delta = std::abs(p[i] - q[i]);
        dist = std::max(dist, std::min(delta, 1.0 - delta));
    }
    return dist;
}

WeightVector power_law_weights(Vertex n, Beta beta, double c) {
    if (!(c > 0.0)) throw Error("weight constant must be positive");
    WeightVector out;
    out.w.resize(n);
    if (beta.is_uniform()) {
        std::fill(out.w.begin(), out.w.end(), c);
    } else {
        const double exponent = -1.0 / (beta.value() - 1.0);
        for (Vertex v = 0; v < n; ++v) out.w[v] = c * std::pow(static_cast<double>(v) + 1.0, exponent);
    }
    out.total = std::accumulate(out.w.begin(), out.w.end(), 0.0);
    return out;
}

double expected_average_degree(Vertex n, Beta beta, double c, Model model, double temperature,
                               unsigned dimension) {
    const auto weights = power_law_weights(n, beta, c);
    const auto &w = weights.w;
    const double W = weights.total;

    std::vector<double> prefix(n + 1, 0.0);
    for (Vertex v = 0; v < n; ++v) prefix[v + 1] = prefix[v] + w[v];

    if (model == Model::chung_lu) {
        // Pair (u, v) saturates iff w_v >= W / w_u; those v form a prefix.
        double sum = 0.0;
        for (Vertex u = 0; u + 1 < n; ++u) {
            const std::ptrdiff_t k = last_at_least(w, u + 1, W / w[u]);
            const auto saturated = static_cast<double>(std::max<std::ptrdiff_t>(0, k - u));
            const std::size_t rest = static_cast<std::size_t>(std::max<std::ptrdiff_t>(k + 1, u + 1));
            sum += saturated + w[u] / W * (prefix[n] - prefix[rest]);
        }
        return 2.0 * sum / n;
    }
    if (model != Model::girg) throw Error("expected degree is defined for Chung-Lu and GIRG only");

    // With uniform torus positions, s = dist^d is uniform on [0, 2^-d]. For
    // ratio r = 2^d w_u w_v / W the mean connection probability is 1 if
    // r >= 1, r at T = 0, and (alpha r - r^alpha) / (alpha - 1) otherwise,
    // where alpha = 1/T.
    const double scale = std::ldexp(1.0, static_cast<int>(dimension)) / W;
    const bool threshold = temperature == 0.0;
    const double alpha = threshold ? 0.0 : 1.0 / temperature;

    std::vector<double> suffix_log_pow; // log sum_{v >= k} w_v^alpha
    if (!threshold) {
        suffix_log_pow.assign(n + 1, -INFINITY);
        for (Vertex v = n; v-- > 0;) suffix_log_pow[v] = log_add_exp(alpha * std::log(w[v]), suffix_log_pow[v + 1]);
    }

    double sum = 0.0;
    for (Vertex u = 0; u + 1 < n; ++u) {
        const std::ptrdiff_t k = last_at_least(w, u + 1, 1.0 / (scale * w[u]));
        sum += static_cast<double>(std::max<std::ptrdiff_t>(0, k - u));
        const std::size_t rest = static_cast<std::size_t>(std::max<std::ptrdiff_t>(k + 1, u + 1));
        if (rest >= n) continue;
        const double linear = scale * w[u] * (prefix[n] - prefix[rest]);
        if (threshold) {
            sum += linear;
        } else {
            const double powered = std::exp(alpha * std::log(scale * w[u]) + suffix_log_pow[rest]);
            sum += (alpha * linear - powered) / (alpha - 1.0);
        }
    }
    return 2.0 * sum / n;
}

double calibrate_weight_constant(Vertex n, Beta beta, double target_avg_degree, Model model,
                                 double temperature, unsigned dimension) {
    if (model == Model::er) throw Error("weight calibration applies to Chung-Lu and GIRG only");
    if (!(target_avg_degree > 0.0) || !(target_avg_degree < n - 1.0))
        throw Error("target average degree must lie in (0, n-1)");

    auto degree_at = [&](double c) {
        return expected_average_degree(n, beta, c, model, temperature, dimension);
    };

    double lo = 0.0;
    double hi = std::max(1.0, target_avg_degree);
    for (int i = 0; degree_at(hi) < target_avg_degree; ++i) {
        if (i == 200) throw Error("weight calibration did not bracket the target");
        lo = hi;
        hi *= 2.0;
    }

    double c = hi;
    for (int step = 0; step < 60; ++step) {
        c = 0.5 * (lo + hi);
        const double deg = degree_at(c);
        if (std::abs(deg - target_avg_degree) <= 1e-9 * target_avg_degree) break;
        (deg < target_avg_degree ? lo : hi) = c;
    }
    if (std::abs(degree_at(c) - target_avg_degree) > 0.01 * target_avg_degree)
        throw Error("weight calibration did not converge");
    return c;
}

Graph generate_er(Vertex n, std::uint64_t m, std::uint64_t seed) {
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
    if (m > pairs) throw Error("too many edges for n vertices");

    Rng rng(seed);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(m * 2);
    std::vector<EdgeRef> edges;
    edges.reserve(m);
    while (edges.size() < m) {
        const auto u = static_cast<Vertex>(rng.below(n));
        const auto v = static_cast<Vertex>(rng.below(n));
        if (u == v) continue;
        const EdgeRef e(u, v);
        if (seen.insert(static_cast<std::uint64_t>(e.u) * n + e.v).second) edges.push_back(e);
    }
    return Graph::from_edges(n, edges);
}

Graph generate_chung_lu(std::span<const double> weights, std::uint64_t seed) {
    const auto n = static_cast<Vertex>(weights.size());
    const double W = std::accumulate(weights.begin(), weights.end(), 0.0);
    Rng rng(seed);
    std::vector<EdgeRef> edges;
    for (Vertex u = 0; u < n; ++u) {
        const double factor = weights[u] / W;
        for (Vertex v = u + 1; v < n; ++v) {
            if (rng.uniform01() < factor * weights[v]) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph generate_chung_lu(const GeneratorParams &params) {
    params.validate();
    const double c = calibrate_weight_constant(params.n, params.beta, params.target_avg_degree, Model::chung_lu);
    const auto weights = power_law_weights(params.n, params.beta, c);
    return generate_chung_lu(weights.w, Rng(params.seed).split(kEdgeStream).seed());
}

std::vector<double> sample_positions(Vertex n, unsigned dimension, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> pos(static_cast<std::size_t>(n) * dimension);
    for (double &x : pos) x = rng.uniform01();
    return pos;
}

Graph generate_girg(std::span<const double> weights, std::span<const double> positions, unsigned dimension,
                    double temperature, std::uint64_t seed) {
    const auto n = static_cast<Vertex>(weights.size());
    if (positions.size() != static_cast<std::size_t>(n) * dimension) throw Error("position count mismatch");
    if (!(temperature >= 0.0 && temperature < 1.0)) throw Error("temperature must lie in [0, 1)");

    const double W = std::accumulate(weights.begin(), weights.end(), 0.0);
    const bool threshold = temperature == 0.0;
    const double alpha = threshold ? 0.0 : 1.0 / temperature;
    const int d = static_cast<int>(dimension);

    Rng rng(seed);
    std::vector<EdgeRef> edges;
    for (Vertex u = 0; u < n; ++u) {
        const double factor = weights[u] / W;
        const double *pu = positions.data() + static_cast<std::size_t>(u) * dimension;
        for (Vertex v = u + 1; v < n; ++v) {
            const double *pv = positions.data() + static_cast<std::size_t>(v) * dimension;
            double dist = 0.0;
            for (unsigned i = 0; i < dimension; ++i) {
                const double delta = std::abs(pu[i] - pv[i]);
                dist = std::max(dist, std::min(delta, 1.0 - delta));
            }
            const double volume = d == 2 ? dist * dist : std::pow(dist, d);
            const double affinity = factor * weights[v];
            if (threshold) {
                if (volume <= affinity) edges.emplace_back(u, v);
                continue;
            }
            const double draw = rng.uniform01();
            if (volume <= affinity) {
                edges.emplace_back(u, v);
                continue;
            }
            // p = r^alpha <= r for r < 1, so most pairs are rejected without pow.
            const double r = affinity / volume;
            if (draw < r && draw < std::pow(r, alpha)) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

namespace {

Graph generate_girg_with(const GeneratorParams &params, double c, bool square) {
    auto weights = power_law_weights(params.n, params.beta, c);
    const Rng base(params.seed);
    auto positions = sample_positions(params.n, params.dimension, base.split(kPositionStream).seed());
    if (square) {
        const double weight_scale = std::pow(0.5, params.dimension);
        for (double &x : positions) x *= 0.5;
        for (double &w : weights.w) w *= weight_scale;
    }
    return generate_girg(weights.w, positions, params.dimension, params.temperature,
                         base.split(kEdgeStream).seed());
}

double calibrate_for(const GeneratorParams &params) {
    return calibrate_weight_constant(params.n, params.beta, params.target_avg_degree, params.model,
                                     params.temperature, params.dimension);
}

} // namespace

Graph generate_girg(const GeneratorParams &params) {
    params.validate();
    if (params.ground_space != GroundSpace::torus) throw Error("generate_girg expects a torus ground space");
    return generate_girg_with(params, calibrate_for(params), false);
}

Graph generate_girg_square(const GeneratorParams &params) {
    params.validate();
    if (params.ground_space != GroundSpace::square) throw Error("generate_girg_square expects a square ground space");
    return generate_girg_with(params, calibrate_for(params), true);
}

Graph generate(const GeneratorParams &params, double weight_constant) {
    params.validate();
    switch (params.model) {
    case Model::er:
        return generate_er(params.n, static_cast<std::uint64_t>(std::llround(params.n * params.target_avg_degree / 2.0)),
                           params.seed);
    case Model::chung_lu: {
        const auto weights = power_law_weights(params.n, params.beta, weight_constant);
        return generate_chung_lu(weights.w, Rng(params.seed).split(kEdgeStream).seed());
    }
    case Model::girg:
        return generate_girg_with(params, weight_constant, params.ground_space == GroundSpace::square);
    }
    throw Error("unknown model");
}

Graph generate(const GeneratorParams &params) {
    params.validate();
    if (params.model == Model::er) return generate(params, 0.0);
    return generate(params, calibrate_for(params));
}

} // namespace netlab
