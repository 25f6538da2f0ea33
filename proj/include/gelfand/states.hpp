#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gelfand/algebra.hpp"

namespace gelfand {

// A state as block density matrices: each rho_i PSD, traces summing to 1.
// The induced positive unital functional is a |-> sum_i tr(rho_i a_i).
class State {
  public:
    State(AlgebraSignature signature, std::vector<ComplexMatrix> densities);

    const AlgebraSignature& signature() const { return signature_; }
    const ComplexMatrix& density(std::size_t b) const { return densities_[b]; }
    std::size_t block_count() const { return densities_.size(); }

  private:
    AlgebraSignature signature_;
    std::vector<ComplexMatrix> densities_;
};

Complex state_eval(const State& sigma, const Element& x);

State dirac_state(std::size_t i, std::size_t n);

// Extreme points of the state space: point masses in the commutative case,
// single-block rank-one densities over matrix blocks.
bool is_extreme(const State& sigma);

// Max-abs density difference between states on the same algebra.
double state_distance(const State& a, const State& b);

// A finitely supported probability measure on the state space.
class FinMeasure {
  public:
    explicit FinMeasure(std::vector<std::pair<double, State>> atoms);

    const std::vector<std::pair<double, State>>& atoms() const { return atoms_; }

  private:
    std::vector<std::pair<double, State>> atoms_;
};

// The unique state at which every affine observable equals its average
// against the measure; concretely the weighted average of densities.
State barycentre(const FinMeasure& mu);

// A map from the effects [0,1]_A into [0,1], given as a closure.
using EModMap = std::function<double(const Element&)>;

struct EModCheckReport {
    std::size_t trials = 0;
    double unit_residual = 0.0;
    double max_additivity_residual = 0.0;
    double max_scalar_residual = 0.0;
    std::vector<std::string> violations;

    bool passed() const { return violations.empty(); }
};

// Seeded spot check of the effect-module homomorphism axioms: additivity on
// summable pairs, unit preservation, [0,1]-scalar homogeneity.
EModCheckReport emod_check(const EModMap& emap, const AlgebraSignature& algebra,
                           std::size_t trials, std::uint64_t seed);

// Extends an effect-module map to the unique positive unital functional and
// returns it as a represented state. Throws NotEModHom when the extension
// fails to produce a valid density.
State emod_to_state(const EModMap& emap, const AlgebraSignature& algebra);

// Assembles the state whose functional agrees with phi on every matrix-unit
// basis element. Shared by emod_to_state and the state-functor machinery.
State state_from_functional(const AlgebraSignature& algebra,
                            const std::function<Complex(const Element&)>& phi,
                            ErrorKind failure_kind = ErrorKind::InvalidArgument);

// A family of dim(A) states whose evaluation functionals are linearly
// independent: per block the diagonal rank-one densities plus, for i < j,
// the real and imaginary superposition densities.
std::vector<State> spanning_states(const AlgebraSignature& algebra);

// The Kadison pairing: xi(a) is the affine observable phi |-> phi(a).
Complex xi_eval(const Element& a, const State& sigma);

// Inverts xi from the values of an affine observable on the canonical
// spanning family, by solving the evaluation linear system.
Element xi_inverse(const AlgebraSignature& algebra, const std::vector<Complex>& values);

}  // namespace gelfand
