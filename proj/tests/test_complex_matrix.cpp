#include "gelfand/complex_matrix.hpp"

#include "doctest.h"

#include "gelfand/rng.hpp"

using namespace gelfand;

namespace {

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            h(i, j) = rng.complex_in_square();
        }
    }
    ComplexMatrix sym = h;
    sym += h.adjoint();
    sym *= 0.5;
    return sym;
}

double reconstruction_residual(const ComplexMatrix& h, const EigenDecomposition& eig) {
    std::vector<Complex> lambdas(eig.eigenvalues.begin(), eig.eigenvalues.end());
    const ComplexMatrix rebuilt =
        eig.eigenvectors * ComplexMatrix::diagonal(lambdas) * eig.eigenvectors.adjoint();
    return (rebuilt - h).frobenius_norm();
}

double unitarity_residual(const EigenDecomposition& eig) {
    const ComplexMatrix& v = eig.eigenvectors;
    return (v.adjoint() * v - ComplexMatrix::identity(v.rows())).frobenius_norm();
}

}  // namespace

TEST_SUITE_BEGIN("core_linalg");

TEST_CASE("herm_eig on a diagonal matrix sorts and permutes") {
    const ComplexMatrix h = ComplexMatrix::diagonal({{2.0, 0.0}, {-1.0, 0.0}});
    const EigenDecomposition eig = herm_eig(h);
    CHECK(eig.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(eig.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-12));
    // Eigenvectors are the swapped identity columns.
    CHECK(std::abs(eig.eigenvectors(1, 0) - Complex(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(eig.eigenvectors(0, 1) - Complex(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(eig.eigenvectors(0, 0)) < 1e-12);
}

TEST_CASE("herm_eig on the 2x2 flip matrix") {
    // Characteristic polynomial x^2 - 1, so the spectrum is exactly {-1, 1}.
    ComplexMatrix h(2, 2);
    h(0, 1) = 1.0;
    h(1, 0) = 1.0;
    const EigenDecomposition eig = herm_eig(h);
    CHECK(eig.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(eig.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(reconstruction_residual(h, eig) < 1e-12);
}

TEST_CASE("herm_eig on a scalar") {
    ComplexMatrix h(1, 1);
    h(0, 0) = 5.0;
    const EigenDecomposition eig = herm_eig(h);
    CHECK(eig.eigenvalues[0] == doctest::Approx(5.0));
    CHECK(std::abs(eig.eigenvectors(0, 0) - Complex(1.0, 0.0)) < 1e-15);
}

TEST_CASE("herm_eig rejects bad inputs") {
    CHECK_THROWS_WITH_AS(herm_eig(ComplexMatrix(2, 3)), doctest::Contains("square"),
                         Error);
    ComplexMatrix skew(2, 2);
    skew(0, 1) = 1.0;
    skew(1, 0) = -1.0;
    try {
        herm_eig(skew);
        FAIL("expected NotHermitian");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotHermitian);
    }
}

TEST_CASE("herm_eig random reconstruction and unitarity") {
    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng.index(8);
        const ComplexMatrix h = random_hermitian(n, rng);
        const EigenDecomposition eig = herm_eig(h);
        const double scale = 1.0 + h.frobenius_norm();
        CHECK(reconstruction_residual(h, eig) <= 1e-9 * scale);
        CHECK(unitarity_residual(eig) <= 1e-9);
        for (std::size_t k = 1; k < n; ++k) {
            CHECK(eig.eigenvalues[k - 1] <= eig.eigenvalues[k]);
        }
    }
}

TEST_CASE("herm_eig is deterministic about degenerate spectra") {
    // Repeated eigenvalues still give a canonical decomposition.
    const ComplexMatrix h = ComplexMatrix::identity(3);
    const EigenDecomposition eig = herm_eig(h);
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(eig.eigenvalues[k] == doctest::Approx(1.0));
        CHECK(eig.eigenvectors(k, k).real() > 0.0);
    }
}

TEST_CASE("is_psd on diagonal and rank-one inputs") {
    CHECK(is_psd(ComplexMatrix::diagonal({{1.0, 0.0}, {0.5, 0.0}})));
    CHECK_FALSE(is_psd(ComplexMatrix::diagonal({{1.0, 0.0}, {-0.5, 0.0}})));
    // [[1,1],[1,1]] has spectrum {0, 2}.
    ComplexMatrix ones(2, 2);
    ones(0, 0) = ones(0, 1) = ones(1, 0) = ones(1, 1) = 1.0;
    CHECK(is_psd(ones));
}

TEST_CASE("is_psd is invariant under conjugation by its own eigenvectors") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + rng.index(5);
        const ComplexMatrix h = random_hermitian(n, rng);
        const EigenDecomposition eig = herm_eig(h);
        const ComplexMatrix& v = eig.eigenvectors;
        ComplexMatrix conjugated = v.adjoint() * h * v;
        conjugated += conjugated.adjoint();
        conjugated *= 0.5;
        CHECK(is_psd(h, 1e-9) == is_psd(conjugated, 1e-9));
    }
}

TEST_CASE("psd_sqrt on diagonal, identity and projection inputs") {
    const ComplexMatrix r = psd_sqrt(ComplexMatrix::diagonal({{4.0, 0.0}, {9.0, 0.0}}));
    CHECK(std::abs(r(0, 0) - Complex(2.0, 0.0)) < 1e-12);
    CHECK(std::abs(r(1, 1) - Complex(3.0, 0.0)) < 1e-12);
    CHECK(std::abs(r(0, 1)) < 1e-12);

    const ComplexMatrix id = ComplexMatrix::identity(3);
    CHECK((psd_sqrt(id) - id).frobenius_norm() < 1e-12);

    // A projection is its own square root.
    ComplexMatrix proj(2, 2);
    proj(0, 0) = proj(0, 1) = proj(1, 0) = proj(1, 1) = 0.5;
    CHECK((psd_sqrt(proj) - proj).frobenius_norm() < 1e-10);
    CHECK((psd_sqrt(proj) * psd_sqrt(proj) - proj).frobenius_norm() < 1e-10);
}

TEST_CASE("psd_sqrt rejects indefinite matrices and clamps noise") {
    try {
        psd_sqrt(ComplexMatrix::diagonal({{1.0, 0.0}, {-0.5, 0.0}}));
        FAIL("expected NotPSD");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotPsd);
    }
    // A borderline negative eigenvalue inside tolerance clamps to zero.
    const ComplexMatrix r = psd_sqrt(ComplexMatrix::diagonal({{-5e-10, 0.0}, {1.0, 0.0}}));
    CHECK(std::abs(r(0, 0)) < 1e-4);
    CHECK(std::abs(r(1, 1) - Complex(1.0, 0.0)) < 1e-12);
}

TEST_CASE("psd_sqrt squares back on random PSD matrices") {
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng.index(6);
        const ComplexMatrix g = random_hermitian(n, rng);
        const ComplexMatrix h = g * g.adjoint();
        const ComplexMatrix r = psd_sqrt(h);
        CHECK(is_psd(r, 1e-9));
        CHECK((r * r - h).frobenius_norm() <= 1e-8 * (1.0 + h.frobenius_norm()));
    }
}

TEST_CASE("operator_norm basics") {
    CHECK(operator_norm(ComplexMatrix::diagonal({{0.0, 3.0}, {4.0, 0.0}})) ==
          doctest::Approx(4.0));
    CHECK(operator_norm(ComplexMatrix(3, 3)) == doctest::Approx(0.0));
    ComplexMatrix nilpotent(2, 2);
    nilpotent(0, 1) = 2.0;  // M*M = diag(0, 4)
    CHECK(operator_norm(nilpotent) == doctest::Approx(2.0));
}

TEST_CASE("operator_norm satisfies the C*-identity") {
    Rng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng.index(6);
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = rng.complex_in_square();
            }
        }
        const double norm = operator_norm(m);
        const double gram_norm = operator_norm(m.adjoint() * m);
        CHECK(std::abs(gram_norm - norm * norm) <= 1e-8 * (1.0 + norm * norm));
    }
}

TEST_CASE("solve_linear inverts well-conditioned systems") {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + rng.index(8);
        ComplexMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = rng.complex_in_square();
            }
            a(i, i) += Complex(static_cast<double>(n), 0.0);  // diagonally dominant
        }
        std::vector<Complex> x_expected(n);
        for (Complex& z : x_expected) {
            z = rng.complex_in_square();
        }
        std::vector<Complex> rhs(n, Complex(0.0, 0.0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                rhs[i] += a(i, j) * x_expected[j];
            }
        }
        const std::vector<Complex> x = solve_linear(a, rhs);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(x[i] - x_expected[i]) < 1e-10);
        }
    }
}

TEST_CASE("solve_linear rejects singular systems") {
    ComplexMatrix a(2, 2);
    a(0, 0) = 1.0;
    a(0, 1) = 2.0;
    a(1, 0) = 2.0;
    a(1, 1) = 4.0;
    try {
        solve_linear(a, {Complex(1.0, 0.0), Complex(0.0, 0.0)});
        FAIL("expected SingularSystem");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SingularSystem);
    }
}

TEST_SUITE_END();
