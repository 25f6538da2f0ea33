#pragma once

#include <cstdint>
#include <functional>

#include "gelfand/algebra.hpp"

namespace gelfand {

enum class Positivity { Yes, No, SampledYes };
enum class CompletePositivity { Yes, No, NotComputed };

const char* positivity_name(Positivity p);
const char* complete_positivity_name(CompletePositivity p);

struct MapClass {
    bool unital = false;
    bool involutive = false;
    bool multiplicative = false;
    Positivity positive = Positivity::No;
    CompletePositivity completely_positive = CompletePositivity::NotComputed;

    bool is_miu() const { return unital && involutive && multiplicative; }
    // PU in the operational sense: unital and not known non-positive.
    bool is_pu() const { return unital && positive != Positivity::No; }
};

// A linear map between two algebras, stored as its coefficient matrix over
// the matrix-unit coordinate bases (shape dim(cod) x dim(dom)).
class LinMap {
  public:
    LinMap(AlgebraSignature dom, AlgebraSignature cod, ComplexMatrix coeffs);

    static LinMap identity(const AlgebraSignature& signature);
    // Samples the action on every basis element to build the coefficients.
    static LinMap from_action(const AlgebraSignature& dom, const AlgebraSignature& cod,
                              const std::function<Element(const Element&)>& action);

    const AlgebraSignature& dom() const { return dom_; }
    const AlgebraSignature& cod() const { return cod_; }
    const ComplexMatrix& coeffs() const { return coeffs_; }

  private:
    AlgebraSignature dom_;
    AlgebraSignature cod_;
    ComplexMatrix coeffs_;
};

Element apply_map(const LinMap& f, const Element& x);

// Category composition: (g o f)(x) = g(f(x)).
LinMap compose_maps(const LinMap& g, const LinMap& f);

// Max-abs coefficient difference between two maps with equal signatures.
double coeff_distance(const LinMap& f, const LinMap& g);

// Classify against the algebraic map axioms. Positivity is decided exactly
// for commutative domains (the cone is generated by the coordinate
// projections) and for maps already found MIU; otherwise it is certified by
// seeded sampling of rank-one projections and reported as SampledYes.
MapClass classify_map(const LinMap& f, std::size_t samples = 1000, std::uint64_t seed = 0);

// For dom a single matrix block M_n: the matrix sum_ij E_ij (x) f(E_ij),
// assembled per codomain block and returned as their direct sum. The map is
// completely positive iff this matrix is PSD.
ComplexMatrix choi_matrix(const LinMap& f);

// The map M_n -> M_n sending x to its transpose. Self-inverse; positive but
// not completely positive for n >= 2.
LinMap transpose_map(std::size_t n);

struct NormBoundReport {
    std::size_t trials = 0;
    double max_ratio = 0.0;
    // The proved PU bound ||f(x)|| <= 4 ||x||.
    bool within_four = true;
    // The sharper contractivity bound; informational, never gates.
    bool within_one = true;
};

NormBoundReport pu_norm_bound_check(const LinMap& f, std::size_t trials, std::uint64_t seed);

}  // namespace gelfand
