#pragma once

#include <utility>

#include "gelfand/linmap.hpp"
#include "gelfand/rng.hpp"
#include "gelfand/states.hpp"

namespace gelfand {

// Deterministic generators for domain objects. Every randomized check in
// the library routes through these with an explicit Rng, so reports are
// reproducible from their seed.

// Entries uniform in the complex square [-1,1] x [-1,1]i.
Element random_element(const AlgebraSignature& signature, Rng& rng);

Element random_self_adjoint(const AlgebraSignature& signature, Rng& rng);

// y* y for a random y.
Element random_positive(const AlgebraSignature& signature, Rng& rng);

// A positive element rescaled under the unit.
Element random_effect(const AlgebraSignature& signature, Rng& rng);

// A pair of effects with e1 + e2 <= 1.
std::pair<Element, Element> random_summable_effect_pair(const AlgebraSignature& signature,
                                                        Rng& rng);

// Generically full-rank density blocks with random block weights.
State random_state(const AlgebraSignature& signature, Rng& rng);

// Rank-one density in one random block.
State random_pure_state(const AlgebraSignature& signature, Rng& rng);

// A random positive unital map built from states on the domain paired with
// a random resolution of the codomain unit; when the signatures coincide a
// random unitary conjugation is mixed in.
LinMap random_pu_map(const AlgebraSignature& dom, const AlgebraSignature& cod, Rng& rng);

}  // namespace gelfand
