#pragma once

#include <cstdint>
#include <vector>

#include "gelfand/linmap.hpp"
#include "gelfand/rng.hpp"
#include "gelfand/states.hpp"

namespace gelfand {

// A finite probability distribution: dense nonnegative weights summing to 1.
// Construction clamps entries within kDistClampTol of [0,1]; values noisier
// than that are rejected.
class Dist {
  public:
    explicit Dist(std::vector<double> weights, double clamp_window = kDistClampTol);

    static Dist point(std::size_t x, std::size_t n);
    static Dist uniform(std::size_t n);

    std::size_t size() const { return weights_.size(); }
    double operator[](std::size_t i) const { return weights_[i]; }
    const std::vector<double>& weights() const { return weights_; }

    double linf_distance(const Dist& other) const;

  private:
    std::vector<double> weights_;
};

// Monad unit: the point mass at x.
Dist dist_unit(std::size_t x, std::size_t n);

// Monad multiplication: flattens a distribution over distributions,
// mu(Phi)(x) = sum_phi Phi(phi) phi(x).
Dist dist_mult(const Dist& outer, const std::vector<Dist>& inner);

// A Kleisli map n -> D(m): a row-stochastic n x m matrix.
class KleisliMap {
  public:
    KleisliMap(std::size_t dom_size, std::size_t cod_size, std::vector<double> entries,
               double clamp_window = kDistClampTol);

    static KleisliMap identity(std::size_t n);

    std::size_t dom_size() const { return dom_; }
    std::size_t cod_size() const { return cod_; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * cod_ + j]; }
    const std::vector<double>& entries() const { return entries_; }

    Dist row(std::size_t i) const;

    // Forward evolution d . M of a distribution on the domain.
    Dist push_forward(const Dist& d) const;

    double max_abs_distance(const KleisliMap& other) const;

  private:
    std::size_t dom_;
    std::size_t cod_;
    std::vector<double> entries_;
};

// Kleisli composition g after f; concretely the matrix product f . g.
KleisliMap kleisli_compose(const KleisliMap& g, const KleisliMap& f);

// A function between finite sets, as a lookup table.
class FunctionMap {
  public:
    FunctionMap(std::size_t dom_size, std::size_t cod_size, std::vector<std::size_t> table);

    static FunctionMap identity(std::size_t n);

    std::size_t dom_size() const { return dom_; }
    std::size_t cod_size() const { return cod_; }
    std::size_t operator()(std::size_t i) const { return table_[i]; }
    const std::vector<std::size_t>& table() const { return table_; }

    bool operator==(const FunctionMap& other) const {
        return dom_ == other.dom_ && cod_ == other.cod_ && table_ == other.table_;
    }

  private:
    std::size_t dom_;
    std::size_t cod_;
    std::vector<std::size_t> table_;
};

// The contravariant equivalence: a Kleisli map n -> D(m) becomes the
// positive unital map C^m -> C^n given by (v_j) |-> (sum_j f(i)(j) v_j)_i.
LinMap to_pu(const KleisliMap& f);

// Inverse direction: extracts the stochastic matrix of a positive unital
// map C^m -> C^n from its action on the coordinate projections. Rows are
// validated within kExtractionTol and renormalised exactly.
KleisliMap from_pu(const LinMap& h);

// Precomposition with a function: C^m -> C^n, v |-> v o f. Always MIU.
LinMap function_to_miu(const FunctionMap& f);

// Extracts the function from an MIU map via its Boolean coefficient matrix.
FunctionMap miu_to_function(const LinMap& h);

// The isomorphism Stat(C^n) = D(n) and its inverse.
State dist_to_state(const Dist& phi);
Dist state_to_dist(const State& sigma);

Dist random_dist(std::size_t n, Rng& rng);
KleisliMap random_kleisli_map(std::size_t n, std::size_t m, Rng& rng);

// Counts the MIU functionals C^n -> C by classifying all 2^n Boolean
// candidate rows; multiplicativity forces the coefficients into {0,1}, so
// this enumeration is exhaustive. The count is n: one per coordinate.
std::size_t count_miu_states(std::size_t n);

}  // namespace gelfand
