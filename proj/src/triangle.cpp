#include "gelfand/triangle.hpp"

#include <cmath>
#include <limits>

#include "gelfand/prob.hpp"
#include "gelfand/random.hpp"

namespace gelfand {

bool TriangleReport::all_pass() const {
    for (const TriangleCheck& check : checks) {
        if (!check.pass) {
            return false;
        }
    }
    return true;
}

namespace {

LinMap require_pu(LinMap map) {
    const MapClass cls = classify_map(map);
    if (!cls.is_pu()) {
        throw Error(ErrorKind::NotPu, "map does not classify as positive and unital");
    }
    return map;
}

}  // namespace

EffectTransformer::EffectTransformer(LinMap map) : map_(require_pu(std::move(map))) {}

Element EffectTransformer::operator()(const Element& effect) const {
    if (!is_effect(effect)) {
        throw Error(ErrorKind::NotEffect, "predicate transformer input is not an effect");
    }
    return apply_map(map_, effect);
}

EffectTransformer pred_of_map(const LinMap& f) {
    return EffectTransformer(f);
}

StateTransformer::StateTransformer(LinMap map) : map_(require_pu(std::move(map))) {}

State StateTransformer::operator()(const State& sigma) const {
    if (sigma.signature() != map_.cod()) {
        throw Error(ErrorKind::SignatureMismatch, "state does not live on the map's codomain");
    }
    return state_from_functional(
        map_.dom(), [&](const Element& e) { return state_eval(sigma, apply_map(map_, e)); },
        ErrorKind::NotPu);
}

StateTransformer stat_of_map(const LinMap& f) {
    return StateTransformer(f);
}

LinMap reconstruct_from_state_action(const LinMap& f) {
    const AlgebraSignature& dom = f.dom();
    const AlgebraSignature& cod = f.cod();
    const StateTransformer stat_f = stat_of_map(f);
    std::vector<State> mapped;
    const std::vector<State> cod_family = spanning_states(cod);
    mapped.reserve(cod_family.size());
    for (const State& sigma : cod_family) {
        mapped.push_back(stat_f(sigma));
    }
    ComplexMatrix rebuilt(cod.dimension(), dom.dimension());
    for (std::size_t k = 0; k < dom.dimension(); ++k) {
        const Element basis = Element::basis(dom, k);
        std::vector<Complex> values;
        values.reserve(mapped.size());
        for (const State& sigma : mapped) {
            values.push_back(xi_eval(basis, sigma));
        }
        const std::vector<Complex> column = xi_inverse(cod, values).coordinates();
        for (std::size_t r = 0; r < column.size(); ++r) {
            rebuilt(r, k) = column[r];
        }
    }
    return LinMap(dom, cod, std::move(rebuilt));
}

TriangleReport verify_triangle(const AlgebraSignature& algebra, std::size_t trials,
                               std::uint64_t seed) {
    if (algebra.dimension() > 64) {
        throw Error(ErrorKind::DimensionTooLarge, "triangle verification caps dimension at 64");
    }
    Rng rng(seed);
    TriangleReport report{algebra, {}};

    const auto restriction = [](const State& sigma) {
        return [&sigma](const Element& e) { return state_eval(sigma, e).real(); };
    };

    // EMod([0,1]_A, [0,1]) = Stat(A), one direction: a state survives the
    // trip through its effect restriction.
    {
        TriangleCheck check{"emod_to_state_after_restrict", 0.0, kTriangleTol, false};
        for (std::size_t t = 0; t < trials; ++t) {
            const State sigma = random_state(algebra, rng);
            const State back = emod_to_state(restriction(sigma), algebra);
            check.residual = std::max(check.residual, state_distance(sigma, back));
        }
        check.pass = check.residual <= check.tolerance;
        report.checks.push_back(check);
    }

    // The other direction: an effect-module map built from a state agrees
    // with the restriction of its extension on fresh effects.
    {
        TriangleCheck check{"restrict_after_emod_to_state", 0.0, kTriangleTol, false};
        for (std::size_t t = 0; t < trials; ++t) {
            const State sigma = random_state(algebra, rng);
            const auto emap = restriction(sigma);
            const State extended = emod_to_state(emap, algebra);
            const Element e = random_effect(algebra, rng);
            const double diff = std::abs(emap(e) - state_eval(extended, e).real());
            check.residual = std::max(check.residual, diff);
        }
        check.pass = check.residual <= check.tolerance;
        report.checks.push_back(check);
    }

    // Kadison: an effect comes back from its affine data on the spanning family.
    {
        TriangleCheck check{"xi_roundtrip_on_effects", 0.0, kTriangleTol, false};
        const std::vector<State> family = spanning_states(algebra);
        for (std::size_t t = 0; t < trials; ++t) {
            const Element e = random_effect(algebra, rng);
            std::vector<Complex> values;
            values.reserve(family.size());
            for (const State& sigma : family) {
                values.push_back(xi_eval(e, sigma));
            }
            const Element back = xi_inverse(algebra, values);
            check.residual = std::max(check.residual, cstar_norm(e - back));
        }
        check.pass = check.residual <= check.tolerance;
        report.checks.push_back(check);
    }

    if (algebra.is_commutative()) {
        // EMod([0,1]^n, [0,1]) = D(n) along the distribution route.
        TriangleCheck check{"emod_dist_correspondence", 0.0, kTriangleTol, false};
        const std::size_t n = algebra.block_count();
        for (std::size_t t = 0; t < trials; ++t) {
            const Dist d = random_dist(n, rng);
            const State sigma = dist_to_state(d);
            const State back = emod_to_state(restriction(sigma), algebra);
            check.residual = std::max(check.residual, d.linf_distance(state_to_dist(back)));
        }
        check.pass = check.residual <= check.tolerance;
        report.checks.push_back(check);
    }

    return report;
}

StatFunctorReport verify_stat_full_faithful(const AlgebraSignature& dom,
                                            const AlgebraSignature& cod, std::size_t trials,
                                            std::uint64_t seed) {
    if (dom.dimension() > 16 || cod.dimension() > 16) {
        throw Error(ErrorKind::DimensionTooLarge,
                    "state-functor verification caps each dimension at 16");
    }
    Rng rng(seed);
    StatFunctorReport report(dom, cod);
    report.trials = trials;
    report.min_separation = std::numeric_limits<double>::infinity();

    const std::vector<State> cod_family = spanning_states(cod);
    // A unital map out of C is unique, so faithfulness is vacuous there.
    const bool faithfulness_applies = dom.dimension() > 1;

    for (std::size_t t = 0; t < trials; ++t) {
        const LinMap f = random_pu_map(dom, cod, rng);
        if (faithfulness_applies) {
            // Faithfulness: distinct maps induce distinct state transformers.
            LinMap g = random_pu_map(dom, cod, rng);
            int attempts = 0;
            while (coeff_distance(f, g) <= 1e-6) {
                if (++attempts > 50) {
                    throw Error(ErrorKind::NoConvergence, "could not sample distinct PU maps");
                }
                g = random_pu_map(dom, cod, rng);
            }
            const StateTransformer stat_f = stat_of_map(f);
            const StateTransformer stat_g = stat_of_map(g);
            double separation = 0.0;
            for (const State& sigma : cod_family) {
                separation = std::max(separation, state_distance(stat_f(sigma), stat_g(sigma)));
            }
            report.min_separation = std::min(report.min_separation, separation);
        }

        // Fullness: rebuild f from its state-space action through the
        // Kadison isomorphisms.
        report.max_reconstruction_residual =
            std::max(report.max_reconstruction_residual,
                     coeff_distance(reconstruct_from_state_action(f), f));
    }

    report.faithful_pass =
        !faithfulness_applies || report.min_separation > report.separation_threshold;
    report.full_pass = report.max_reconstruction_residual <= report.reconstruction_tolerance;
    return report;
}

}  // namespace gelfand
