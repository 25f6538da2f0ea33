#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "gelfand/errors.hpp"
#include "gelfand/tolerances.hpp"

namespace gelfand {

using Complex = std::complex<double>;

// Dense row-major complex matrix. All entries are required finite; the
// constructors reject NaN and infinity so downstream checks can trust the
// arithmetic.
class ComplexMatrix {
  public:
    ComplexMatrix() : rows_(0), cols_(0) {}
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(const std::vector<Complex>& diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<Complex>& entries() const { return entries_; }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    Complex trace() const;
    double frobenius_norm() const;
    double max_abs() const;

    bool same_shape(const ComplexMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product, row-major blocks of b scaled by entries of a.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // unitary; column k pairs with eigenvalues[k]
};

// Cyclic Jacobi diagonalisation of a Hermitian matrix. Eigenvalues come out
// ascending; equal eigenvalues keep their sweep order, and each eigenvector
// is normalised so its first nonzero component is positive real.
EigenDecomposition herm_eig(const ComplexMatrix& h);

bool is_psd(const ComplexMatrix& h, double tol = kConstructionTol);

// Unique PSD square root. Eigenvalues in [-kConstructionTol, 0) clamp to 0.
ComplexMatrix psd_sqrt(const ComplexMatrix& h);

// Spectral norm sqrt(lambda_max(M* M)); 0 for the zero or empty matrix.
double operator_norm(const ComplexMatrix& m);

// Gaussian elimination with partial pivoting; throws SingularSystem.
std::vector<Complex> solve_linear(const ComplexMatrix& a, const std::vector<Complex>& rhs);

}  // namespace gelfand
