#include "gelfand/triangle.hpp"

#include "doctest.h"

#include "gelfand/prob.hpp"
#include "gelfand/random.hpp"

using namespace gelfand;

namespace {

LinMap diagonal_readout_m2_to_c2() {
    // M_2 -> C^2, x |-> (x_00, x_11): the measurement-in-the-basis map.
    return LinMap::from_action(AlgebraSignature({2}), AlgebraSignature::commutative(2),
                               [](const Element& x) {
                                   return Element::from_diagonal(
                                       {x.block(0)(0, 0), x.block(0)(1, 1)});
                               });
}

}  // namespace

TEST_SUITE_BEGIN("triangle");

TEST_CASE("pred_of_map restricts a PU map to effects") {
    const AlgebraSignature c2 = AlgebraSignature::commutative(2);
    const EffectTransformer id_pred = pred_of_map(LinMap::identity(c2));
    const Element e = Element::from_diagonal({0.25, 1.0});
    CHECK(cstar_norm(id_pred(e) - e) == doctest::Approx(0.0));

    const KleisliMap kernel(2, 2, {0.5, 0.5, 0.0, 1.0});
    const EffectTransformer wp = pred_of_map(to_pu(kernel));
    const Element image = wp(Element::from_diagonal({1.0, 0.0}));
    CHECK(image.block(0)(0, 0) == Complex(0.5, 0.0));
    CHECK(image.block(1)(0, 0) == Complex(0.0, 0.0));

    // Complements are preserved through unitality.
    Rng rng(191);
    const Element effect = random_effect(c2, rng);
    const Element unit = Element::unit(c2);
    CHECK(cstar_norm(wp(unit - effect) - (unit - wp(effect))) <= 1e-12);

    try {
        wp(Element::from_diagonal({2.0, 0.0}));
        FAIL("expected NotEffect");
    } catch (const Error& e2) {
        CHECK(e2.kind() == ErrorKind::NotEffect);
    }
}

TEST_CASE("pred_of_map and stat_of_map reject non-PU maps") {
    ComplexMatrix negated = ComplexMatrix::identity(2);
    negated *= Complex(-1.0, 0.0);
    const LinMap bad(AlgebraSignature::commutative(2), AlgebraSignature::commutative(2),
                     std::move(negated));
    CHECK_THROWS_AS(pred_of_map(bad), Error);
    CHECK_THROWS_AS(stat_of_map(bad), Error);
}

TEST_CASE("stat_of_map is precomposition, concretely Markov evolution") {
    const AlgebraSignature c3 = AlgebraSignature::commutative(3);
    Rng rng(193);
    const StateTransformer id_stat = stat_of_map(LinMap::identity(c3));
    const State sigma = random_state(c3, rng);
    CHECK(state_distance(id_stat(sigma), sigma) <= 1e-12);

    for (int trial = 0; trial < 20; ++trial) {
        const KleisliMap kernel = random_kleisli_map(3, 4, rng);
        const Dist d = random_dist(3, rng);
        const StateTransformer forward = stat_of_map(to_pu(kernel));
        const Dist evolved = state_to_dist(forward(dist_to_state(d)));
        CHECK(evolved.linf_distance(kernel.push_forward(d)) <= 1e-12);
    }
}

TEST_CASE("stat_of_map agrees with the defining adjoint property") {
    Rng rng(197);
    const AlgebraSignature dom({1, 2});
    const AlgebraSignature cod({2});
    for (int outer = 0; outer < 5; ++outer) {
        const LinMap f = random_pu_map(dom, cod, rng);
        const StateTransformer stat_f = stat_of_map(f);
        for (int trial = 0; trial < 10; ++trial) {
            const State sigma = random_state(cod, rng);
            const Element a = random_element(dom, rng);
            CHECK(std::abs(state_eval(stat_f(sigma), a) -
                           state_eval(sigma, apply_map(f, a))) <= 1e-9);
        }
    }
}

TEST_CASE("stat_of_map is affine") {
    Rng rng(199);
    const AlgebraSignature m2({2});
    const LinMap f = random_pu_map(m2, m2, rng);
    const StateTransformer stat_f = stat_of_map(f);
    for (int trial = 0; trial < 15; ++trial) {
        const State s1 = random_state(m2, rng);
        const State s2 = random_state(m2, rng);
        const double alpha = rng.uniform();
        const State mixed = barycentre(FinMeasure({{alpha, s1}, {1.0 - alpha, s2}}));
        const State lhs = stat_f(mixed);
        const State rhs = barycentre(FinMeasure({{alpha, stat_f(s1)}, {1.0 - alpha, stat_f(s2)}}));
        CHECK(state_distance(lhs, rhs) <= 1e-10);
    }
}

TEST_CASE("both functors are functorial") {
    Rng rng(211);
    const AlgebraSignature a = AlgebraSignature::commutative(2);
    const AlgebraSignature b({2});
    const AlgebraSignature c({1, 2});
    for (int trial = 0; trial < 5; ++trial) {
        const LinMap g = random_pu_map(a, b, rng);  // g : A -> B
        const LinMap f = random_pu_map(b, c, rng);  // f : B -> C
        const LinMap fg = compose_maps(f, g);       // A -> C

        const StateTransformer stat_fg = stat_of_map(fg);
        const StateTransformer stat_f = stat_of_map(f);
        const StateTransformer stat_g = stat_of_map(g);
        for (int probe = 0; probe < 5; ++probe) {
            const State sigma = random_state(c, rng);
            CHECK(state_distance(stat_fg(sigma), stat_g(stat_f(sigma))) <= 1e-9);
        }

        const EffectTransformer pred_fg = pred_of_map(fg);
        const EffectTransformer pred_f = pred_of_map(f);
        const EffectTransformer pred_g = pred_of_map(g);
        for (int probe = 0; probe < 5; ++probe) {
            const Element e = random_effect(a, rng);
            CHECK(cstar_norm(pred_fg(e) - pred_f(pred_g(e))) <= 1e-9);
        }
    }
}

TEST_CASE("states and predicates pair like Schroedinger and Heisenberg") {
    Rng rng(223);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 1 + rng.index(5);
        const std::size_t m = 1 + rng.index(5);
        const KleisliMap kernel = random_kleisli_map(n, m, rng);
        const Dist d = random_dist(n, rng);
        const Element e = random_effect(AlgebraSignature::commutative(m), rng);

        const Dist pushed = kernel.push_forward(d);
        double forward = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            forward += pushed[j] * e.block(j)(0, 0).real();
        }
        const Element pulled = apply_map(to_pu(kernel), e);
        double backward = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            backward += d[i] * pulled.block(i)(0, 0).real();
        }
        CHECK(std::abs(forward - backward) <= 1e-10);
    }
}

TEST_CASE("the transpose induces an involutive state-space isomorphism") {
    Rng rng(227);
    const StateTransformer flip = stat_of_map(transpose_map(2));
    for (int trial = 0; trial < 20; ++trial) {
        const State sigma = random_state(AlgebraSignature({2}), rng);
        CHECK(state_distance(flip(flip(sigma)), sigma) <= 1e-10);
    }
}

TEST_CASE("verify_triangle on the one-point space is exact") {
    const TriangleReport report = verify_triangle(AlgebraSignature::commutative(1), 10, 0);
    CHECK(report.all_pass());
    for (const TriangleCheck& check : report.checks) {
        CHECK(check.residual <= 1e-12);
    }
}

TEST_CASE("verify_triangle passes on C^3 and M_2") {
    const TriangleReport c3 = verify_triangle(AlgebraSignature::commutative(3), 50, 7);
    CHECK(c3.all_pass());
    CHECK(c3.checks.size() == 4);  // includes the distribution route
    for (const TriangleCheck& check : c3.checks) {
        CHECK(check.residual <= 1e-8);
    }

    const TriangleReport m2 = verify_triangle(AlgebraSignature({2}), 50, 7);
    CHECK(m2.all_pass());
    CHECK(m2.checks.size() == 3);
    for (const TriangleCheck& check : m2.checks) {
        CHECK(check.residual <= 1e-7);
    }
}

TEST_CASE("verify_triangle rejects oversized algebras") {
    try {
        verify_triangle(AlgebraSignature({9}), 1, 0);
        FAIL("expected DimensionTooLarge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DimensionTooLarge);
    }
}

TEST_CASE("fullness reconstruction on pinned examples") {
    const AlgebraSignature c2 = AlgebraSignature::commutative(2);
    const LinMap id = LinMap::identity(c2);
    CHECK(coeff_distance(reconstruct_from_state_action(id), id) <= 1e-12);

    const LinMap f = to_pu(KleisliMap(2, 2, {0.9, 0.1, 0.4, 0.6}));
    CHECK(coeff_distance(reconstruct_from_state_action(f), f) <= 1e-9);

    const LinMap readout = diagonal_readout_m2_to_c2();
    CHECK(coeff_distance(reconstruct_from_state_action(readout), readout) <= 1e-7);
}

TEST_CASE("verify_stat_full_faithful across signature pairs") {
    const AlgebraSignature sigs[] = {AlgebraSignature::commutative(2), AlgebraSignature({2}),
                                     AlgebraSignature({1, 2})};
    for (const AlgebraSignature& dom : sigs) {
        for (const AlgebraSignature& cod : sigs) {
            const StatFunctorReport report = verify_stat_full_faithful(dom, cod, 5, 23);
            CHECK(report.faithful_pass);
            CHECK(report.full_pass);
            CHECK(report.max_reconstruction_residual <= 1e-7);
        }
    }
    CHECK_THROWS_AS(verify_stat_full_faithful(AlgebraSignature({5}), AlgebraSignature({2}), 1, 0),
                    Error);
}

TEST_SUITE_END();
