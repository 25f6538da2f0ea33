#include "gelfand/linmap.hpp"

#include "doctest.h"

#include "gelfand/prob.hpp"
#include "gelfand/random.hpp"
#include "test_helpers.hpp"

using namespace gelfand;

namespace {

LinMap projection_first_coordinate() {
    // C^2 -> C^1, v |-> v_0.
    ComplexMatrix coeffs(1, 2);
    coeffs(0, 0) = 1.0;
    return LinMap(AlgebraSignature::commutative(2), AlgebraSignature::commutative(1),
                  std::move(coeffs));
}

Element m2_element(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return Element(AlgebraSignature({2}), {std::move(m)});
}

}  // namespace

TEST_SUITE_BEGIN("cstar_maps");

TEST_CASE("apply_map on identity, projection and transpose") {
    const AlgebraSignature c3 = AlgebraSignature::commutative(3);
    const Element x = Element::from_diagonal({1.0, 2.0, 3.0});
    CHECK(cstar_norm(apply_map(LinMap::identity(c3), x) - x) == doctest::Approx(0.0));

    const Element projected = apply_map(projection_first_coordinate(),
                                        Element::from_diagonal({5.0, 7.0}));
    CHECK(projected.block(0)(0, 0) == Complex(5.0, 0.0));

    const Element flipped = apply_map(transpose_map(2), m2_element(1.0, 2.0, 3.0, 4.0));
    CHECK(cstar_norm(flipped - m2_element(1.0, 3.0, 2.0, 4.0)) == doctest::Approx(0.0));

    CHECK_THROWS_AS(apply_map(projection_first_coordinate(),
                              Element::from_diagonal({1.0, 2.0, 3.0})),
                    Error);
}

TEST_CASE("composition matches sequential application") {
    Rng rng(61);
    const AlgebraSignature c3 = AlgebraSignature::commutative(3);
    const LinMap f = to_pu(random_kleisli_map(3, 3, rng));
    const LinMap g = to_pu(random_kleisli_map(3, 3, rng));

    CHECK(coeff_distance(compose_maps(g, LinMap::identity(c3)), g) == doctest::Approx(0.0));
    CHECK(coeff_distance(compose_maps(LinMap::identity(c3), f), f) == doctest::Approx(0.0));

    const LinMap gf = compose_maps(g, f);
    for (int trial = 0; trial < 20; ++trial) {
        const Element x = random_element(c3, rng);
        CHECK(cstar_norm(apply_map(gf, x) - apply_map(g, apply_map(f, x))) <= 1e-10);
    }
}

TEST_CASE("composition needs matching signatures") {
    const LinMap p = projection_first_coordinate();
    CHECK_THROWS_AS(compose_maps(p, p), Error);
}

TEST_CASE("classify: every function map is MIU, hence exactly positive") {
    for (const FunctionMap& f : testing::all_functions(3, 3)) {
        const MapClass cls = classify_map(function_to_miu(f));
        CHECK(cls.unital);
        CHECK(cls.involutive);
        CHECK(cls.multiplicative);
        CHECK(cls.positive == Positivity::Yes);
    }
}

TEST_CASE("classify: a proper stochastic map is PU but not MIU") {
    const KleisliMap kernel(2, 2, {0.5, 0.5, 0.0, 1.0});
    const MapClass cls = classify_map(to_pu(kernel));
    CHECK(cls.unital);
    CHECK(cls.involutive);
    CHECK(cls.positive == Positivity::Yes);
    CHECK_FALSE(cls.multiplicative);  // f(e0 e0) != f(e0) f(e0)
}

TEST_CASE("classify: the transpose map is sampled positive but not CP") {
    const MapClass cls = classify_map(transpose_map(2), 1000, 0);
    CHECK(cls.unital);
    CHECK(cls.involutive);
    CHECK(cls.positive == Positivity::SampledYes);
    CHECK(cls.completely_positive == CompletePositivity::No);
}

TEST_CASE("classify is deterministic given samples and seed") {
    Rng rng(67);
    const LinMap f = random_pu_map(AlgebraSignature({2}), AlgebraSignature({2}), rng);
    const MapClass a = classify_map(f, 200, 42);
    const MapClass b = classify_map(f, 200, 42);
    CHECK(a.unital == b.unital);
    CHECK(a.involutive == b.involutive);
    CHECK(a.multiplicative == b.multiplicative);
    CHECK(a.positive == b.positive);
    CHECK(a.completely_positive == b.completely_positive);
}

TEST_CASE("classify: a negative map is found non-positive") {
    // x |-> -x on C^2 is linear and involutive but flips the cone.
    ComplexMatrix coeffs = ComplexMatrix::identity(2);
    coeffs *= Complex(-1.0, 0.0);
    const LinMap f(AlgebraSignature::commutative(2), AlgebraSignature::commutative(2),
                   std::move(coeffs));
    CHECK(classify_map(f).positive == Positivity::No);
}

TEST_CASE("Choi matrix of the identity is the maximally entangled projection") {
    const ComplexMatrix choi = choi_matrix(LinMap::identity(AlgebraSignature({2})));
    // Entry ((a,c),(b,d)) = [a==c][b==d], i.e. 2 |Omega><Omega|.
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t c = 0; c < 2; ++c) {
            for (std::size_t b = 0; b < 2; ++b) {
                for (std::size_t d = 0; d < 2; ++d) {
                    const Complex expected = (a == c && b == d) ? 1.0 : 0.0;
                    CHECK(std::abs(choi(a * 2 + c, b * 2 + d) - expected) < 1e-12);
                }
            }
        }
    }
    const EigenDecomposition eig = herm_eig(choi);
    CHECK(eig.eigenvalues.front() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(eig.eigenvalues.back() == doctest::Approx(2.0));
}

TEST_CASE("Choi matrix of the transpose is the swap with spectrum {-1,1,1,1}") {
    const ComplexMatrix choi = choi_matrix(transpose_map(2));
    const EigenDecomposition eig = herm_eig(choi);
    CHECK(eig.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(eig.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eig.eigenvalues[2] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eig.eigenvalues[3] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Choi matrix of the depolarising-to-identity map is I/2") {
    const AlgebraSignature m2({2});
    const LinMap f = LinMap::from_action(m2, m2, [&](const Element& x) {
        Element image = Element::unit(m2);
        image *= x.block(0).trace() * 0.5;
        return image;
    });
    const ComplexMatrix choi = choi_matrix(f);
    CHECK((choi - 0.5 * ComplexMatrix::identity(4)).max_abs() < 1e-12);
    CHECK(classify_map(f).completely_positive == CompletePositivity::Yes);
}

TEST_CASE("Choi needs a single-block domain; multi-block codomain works blockwise") {
    try {
        choi_matrix(LinMap::identity(AlgebraSignature({1, 2})));
        FAIL("expected DomainNotSingleBlock");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DomainNotSingleBlock);
    }

    // M_2 -> C^1 + M_2 via (diagonal readout, identity): CP, per-block Choi PSD.
    const AlgebraSignature m2({2});
    const AlgebraSignature mixed({1, 2});
    const LinMap f = LinMap::from_action(m2, mixed, [&](const Element& x) {
        Element image = Element::zero(mixed);
        image.block(0)(0, 0) = x.block(0)(0, 0);
        image.block(1) = x.block(0);
        return image;
    });
    CHECK(is_psd(choi_matrix(f), 1e-9));
    CHECK(classify_map(f).completely_positive == CompletePositivity::Yes);
}

TEST_CASE("single Kraus conjugation is completely positive") {
    Rng rng(71);
    const AlgebraSignature m2({2});
    ComplexMatrix v(2, 2);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            v(i, j) = rng.complex_in_square();
        }
    }
    const LinMap f = LinMap::from_action(m2, m2, [&](const Element& x) {
        return Element(m2, {v.adjoint() * x.block(0) * v});
    });
    CHECK(classify_map(f).completely_positive == CompletePositivity::Yes);
}

TEST_CASE("transpose map is self-inverse and fixes symmetric matrices") {
    for (std::size_t n : {2ul, 3ul}) {
        const LinMap t = transpose_map(n);
        CHECK(coeff_distance(compose_maps(t, t), LinMap::identity(AlgebraSignature({n}))) <=
              1e-12);
    }
    const Element symmetric = m2_element(1.0, 2.0, 2.0, -3.0);
    CHECK(cstar_norm(apply_map(transpose_map(2), symmetric) - symmetric) == doctest::Approx(0.0));

    // n = 1 is allowed but degenerate: the transpose is the identity.
    CHECK(coeff_distance(transpose_map(1), LinMap::identity(AlgebraSignature({1}))) == 0.0);
    CHECK_THROWS_AS(transpose_map(0), Error);

    const EigenDecomposition eig = herm_eig(choi_matrix(transpose_map(3)));
    CHECK(eig.eigenvalues.front() == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("norm bound: identity and stochastic maps are contractive") {
    const NormBoundReport id_report =
        pu_norm_bound_check(LinMap::identity(AlgebraSignature::commutative(3)), 50, 1);
    CHECK(id_report.within_four);
    CHECK(id_report.within_one);
    CHECK(id_report.max_ratio == doctest::Approx(1.0));

    Rng rng(73);
    const NormBoundReport stoch_report =
        pu_norm_bound_check(to_pu(random_kleisli_map(4, 4, rng)), 100, 2);
    CHECK(stoch_report.within_four);
    CHECK(stoch_report.within_one);

    // A state used as a map C^3 -> C^1.
    ComplexMatrix coeffs(1, 3);
    coeffs(0, 0) = 0.2;
    coeffs(0, 1) = 0.3;
    coeffs(0, 2) = 0.5;
    const LinMap state_map(AlgebraSignature::commutative(3), AlgebraSignature::commutative(1),
                           std::move(coeffs));
    const NormBoundReport state_report = pu_norm_bound_check(state_map, 100, 3);
    CHECK(state_report.within_four);
    CHECK(state_report.max_ratio <= 1.0 + 1e-8);
}

TEST_CASE("norm bound rejects non-PU maps") {
    ComplexMatrix coeffs = ComplexMatrix::identity(2);
    coeffs *= Complex(-1.0, 0.0);
    const LinMap f(AlgebraSignature::commutative(2), AlgebraSignature::commutative(2),
                   std::move(coeffs));
    try {
        pu_norm_bound_check(f, 10, 0);
        FAIL("expected NotPU");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotPu);
    }
}

TEST_CASE("PU maps preserve involution and order") {
    Rng rng(79);
    const AlgebraSignature dom({2, 1});
    const AlgebraSignature cod({2});
    for (int outer = 0; outer < 5; ++outer) {
        const LinMap f = random_pu_map(dom, cod, rng);
        for (int trial = 0; trial < 20; ++trial) {
            const Element x = random_element(dom, rng);
            CHECK(cstar_norm(apply_map(f, star(x)) - star(apply_map(f, x))) <= 1e-8);
        }
    }
    // Order preservation, checked exactly on a commutative domain.
    const AlgebraSignature c3 = AlgebraSignature::commutative(3);
    for (int outer = 0; outer < 5; ++outer) {
        const LinMap f = to_pu(random_kleisli_map(3, 3, rng));
        for (int trial = 0; trial < 20; ++trial) {
            const Element x = random_self_adjoint(c3, rng);
            const Element y = x + random_positive(c3, rng);
            REQUIRE(leq(x, y));
            CHECK(leq(apply_map(f, x), apply_map(f, y), 1e-8));
        }
    }
}

TEST_SUITE_END();
