#pragma once

#include "netlab/graph.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace netlab {

enum class Model { er, chung_lu, girg };
enum class GroundSpace { torus, square };

std::string to_string(Model model);
std::string to_string(GroundSpace space);
Model parse_model(const std::string &name);

/// Power-law exponent. `uniform()` marks the beta -> infinity limit, where
/// every vertex gets the same weight; it is never fed into the power formula.
class Beta {
public:
    constexpr Beta() = default;
    /// Throws unless value > 2.
    explicit Beta(double value);

    static constexpr Beta uniform() { return Beta(Uniform{}); }

    bool is_uniform() const { return uniform_; }
    /// Finite exponent; throws for the uniform marker.
    double value() const;
    /// Finite exponent or +infinity, for reporting.
    double as_double() const { return uniform_ ? std::numeric_limits<double>::infinity() : value_; }

    friend bool operator==(const Beta &, const Beta &) = default;

private:
    struct Uniform {};
    constexpr explicit Beta(Uniform) : uniform_(true) {}

    double value_ = 3.0;
    bool uniform_ = false;
};

struct GeneratorParams {
    Model model = Model::girg;
    Vertex n = 10000;
    double target_avg_degree = 10.0;
    Beta beta = Beta::uniform();
    double temperature = 0.0;      ///< GIRG only, in [0, 1)
    unsigned dimension = 2;        ///< GIRG only
    GroundSpace ground_space = GroundSpace::torus;
    std::uint64_t seed = 0;

    /// Throws Error describing the first violated invariant.
    void validate() const;
};

struct WeightVector {
    std::vector<double> w; ///< w[i] is the weight of vertex i (1-indexed rank i+1)
    double total = 0.0;
};

/// Max-norm distance on the unit torus.
double torus_distance(std::span<const double> p, std::span<const double> q);

/// w_v = c * v^(-1/(beta-1)) for v = 1..n; all equal to c for the uniform marker.
WeightVector power_law_weights(Vertex n, Beta beta, double c);

/// Expected average degree of the model for weight constant c. Exact
/// closed forms: Chung-Lu sums min(w_u w_v / W, 1) over pairs; GIRG also
/// integrates the connection probability over uniform torus positions.
double expected_average_degree(Vertex n, Beta beta, double c, Model model,
                               double temperature = 0.0, unsigned dimension = 2);

/// Bisection on c until the expected average degree is within 1% of the
/// target. Throws for infeasible targets or non-convergence within 60 steps.
double calibrate_weight_constant(Vertex n, Beta beta, double target_avg_degree, Model model,
                                 double temperature = 0.0, unsigned dimension = 2);

/// Uniform graph with exactly m edges (rejection sampling of distinct pairs).
Graph generate_er(Vertex n, std::uint64_t m, std::uint64_t seed);

/// Chung-Lu graph from explicit weights; one uniform draw per pair, u-major.
Graph generate_chung_lu(std::span<const double> weights, std::uint64_t seed);
Graph generate_chung_lu(const GeneratorParams &params);

/// GIRG from explicit weights and positions (n*d coordinates, vertex-major).
/// T = 0 is the threshold variant and consumes no randomness; otherwise one
/// uniform draw per pair, u-major.
Graph generate_girg(std::span<const double> weights, std::span<const double> positions,
                    unsigned dimension, double temperature, std::uint64_t seed);
Graph generate_girg(const GeneratorParams &params);

/// Square ground space: positions and weights are scaled by 0.5 and 0.5^d
/// before the torus generator runs.
Graph generate_girg_square(const GeneratorParams &params);

/// Uniform positions in [0,1]^d drawn from `seed` (vertex-major).
std::vector<double> sample_positions(Vertex n, unsigned dimension, std::uint64_t seed);

/// Dispatch on params.model / ground_space, calibrating c where needed.
/// ER uses m = round(n * target_avg_degree / 2).
Graph generate(const GeneratorParams &params);

/// Same as generate(), reusing a previously calibrated weight constant.
Graph generate(const GeneratorParams &params, double weight_constant);

} // namespace netlab
