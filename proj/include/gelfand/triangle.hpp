#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gelfand/linmap.hpp"
#include "gelfand/states.hpp"

namespace gelfand {

struct TriangleCheck {
    std::string name;
    double residual = 0.0;
    double tolerance = kTriangleTol;
    bool pass = false;
};

struct TriangleReport {
    AlgebraSignature algebra;
    std::vector<TriangleCheck> checks;

    bool all_pass() const;
};

// The predicate functor on a PU map: its restriction to effects.
class EffectTransformer {
  public:
    explicit EffectTransformer(LinMap map);

    // Applies the underlying map; rejects inputs outside [0,1]_A.
    Element operator()(const Element& effect) const;

    const LinMap& map() const { return map_; }

  private:
    LinMap map_;
};

EffectTransformer pred_of_map(const LinMap& f);

// The state functor on a PU map f : A -> B, sending a state sigma on B to
// the represented state sigma o f on A.
class StateTransformer {
  public:
    explicit StateTransformer(LinMap map);

    State operator()(const State& sigma) const;

    const LinMap& map() const { return map_; }

  private:
    LinMap map_;
};

StateTransformer stat_of_map(const LinMap& f);

// The fullness construction made executable: rebuilds a PU map f : A -> B
// from nothing but its state-space action, by sampling each basis
// observable on the image of the spanning states of B and inverting the
// Kadison map.
LinMap reconstruct_from_state_action(const LinMap& f);

// Runs the state-and-effect commutation checks on one algebra: both
// directions of EMod([0,1]_A,[0,1]) = Stat(A), the Kadison round trip on
// effects, and for commutative algebras the distribution correspondence.
TriangleReport verify_triangle(const AlgebraSignature& algebra, std::size_t trials,
                               std::uint64_t seed);

struct StatFunctorReport {
    StatFunctorReport(AlgebraSignature dom_sig, AlgebraSignature cod_sig)
        : dom(std::move(dom_sig)), cod(std::move(cod_sig)) {}

    AlgebraSignature dom;
    AlgebraSignature cod;
    std::size_t trials = 0;
    // Faithfulness: distinct PU maps must stay separated on spanning states.
    double min_separation = 0.0;
    double separation_threshold = kClassifyTol;
    // Fullness: residual of reconstructing f from its state-space action.
    double max_reconstruction_residual = 0.0;
    double reconstruction_tolerance = kTriangleTol;
    bool faithful_pass = false;
    bool full_pass = false;

    bool pass() const { return faithful_pass && full_pass; }
};

StatFunctorReport verify_stat_full_faithful(const AlgebraSignature& dom,
                                            const AlgebraSignature& cod, std::size_t trials,
                                            std::uint64_t seed);

}  // namespace gelfand
