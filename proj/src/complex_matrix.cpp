#include "gelfand/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace gelfand {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotSquare: return "NotSquare";
        case ErrorKind::NotHermitian: return "NotHermitian";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::NotPsd: return "NotPSD";
        case ErrorKind::NotSelfAdjoint: return "NotSelfAdjoint";
        case ErrorKind::SignatureMismatch: return "SignatureMismatch";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::InvalidDimension: return "InvalidDimension";
        case ErrorKind::DomainNotSingleBlock: return "DomainNotSingleBlock";
        case ErrorKind::NotStochastic: return "NotStochastic";
        case ErrorKind::NotCommutative: return "NotCommutative";
        case ErrorKind::NotPu: return "NotPU";
        case ErrorKind::NotMiu: return "NotMIU";
        case ErrorKind::NotFunctional: return "NotFunctional";
        case ErrorKind::NotEffect: return "NotEffect";
        case ErrorKind::NotEModHom: return "NotEModHom";
        case ErrorKind::InconsistentAffineData: return "InconsistentAffineData";
        case ErrorKind::SingularSystem: return "SingularSystem";
        case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "UnknownError";
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw Error(ErrorKind::SizeMismatch,
                    "matrix entry count " + std::to_string(entries_.size()) + " does not equal " +
                        std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    for (const Complex& z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorKind::InvalidArgument, "matrix entries must be finite");
        }
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (!same_shape(other)) {
        throw Error(ErrorKind::SizeMismatch, "matrix addition shape mismatch");
    }
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (!same_shape(other)) {
        throw Error(ErrorKind::SizeMismatch, "matrix subtraction shape mismatch");
    }
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (Complex& z : entries_) {
        z *= scalar;
    }
    return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix result(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            result(c, r) = std::conj((*this)(r, c));
        }
    }
    return result;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix result(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            result(c, r) = (*this)(r, c);
        }
    }
    return result;
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) {
        throw Error(ErrorKind::NotSquare, "trace requires a square matrix");
    }
    Complex sum = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        sum += (*this)(i, i);
    }
    return sum;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const Complex& z : entries_) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

double ComplexMatrix::max_abs() const {
    double best = 0.0;
    for (const Complex& z : entries_) {
        best = std::max(best, std::abs(z));
    }
    return best;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(Complex scalar, ComplexMatrix m) {
    m *= scalar;
    return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::SizeMismatch, "matrix product inner dimension mismatch");
    }
    ComplexMatrix result(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex(0.0, 0.0)) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols(); ++c) {
                result(r, c) += ark * b(k, c);
            }
        }
    }
    return result;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix result(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Complex scale = a(ar, ac);
            if (scale == Complex(0.0, 0.0)) {
                continue;
            }
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    result(ar * b.rows() + br, ac * b.cols() + bc) = scale * b(br, bc);
                }
            }
        }
    }
    return result;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& m) {
    double sum = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (r != c) {
                sum += std::norm(m(r, c));
            }
        }
    }
    return std::sqrt(sum);
}

// One complex Jacobi rotation zeroing the (p, q) entry: the 2x2 pivot block
// is phase-reduced to a real symmetric matrix and rotated classically.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double absb = std::abs(apq);
    if (absb < 1e-300) {
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        return;
    }
    const Complex phase = apq / absb;  // e^{i beta}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * absb);
    double t;
    if (tau >= 0.0) {
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    } else {
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // U is the identity outside rows/cols p,q with
    //   U(p,p) = c        U(p,q) = s
    //   U(q,p) = -s/phase U(q,q) = c/phase
    const Complex upp = c;
    const Complex upq = s;
    const Complex uqp = -s * std::conj(phase);
    const Complex uqq = c * std::conj(phase);

    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {  // A <- A U
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * upp + akq * uqp;
        a(k, q) = akp * upq + akq * uqq;
    }
    for (std::size_t k = 0; k < n; ++k) {  // A <- U* A
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
        a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = Complex(a(p, p).real(), 0.0);
    a(q, q) = Complex(a(q, q).real(), 0.0);

    for (std::size_t k = 0; k < n; ++k) {  // V <- V U
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = vkp * upp + vkq * uqp;
        v(k, q) = vkp * upq + vkq * uqq;
    }
}

}  // namespace

EigenDecomposition herm_eig(const ComplexMatrix& h) {
    if (!h.is_square()) {
        throw Error(ErrorKind::NotSquare, "eigendecomposition requires a square matrix");
    }
    const std::size_t n = h.rows();
    const double hnorm = h.frobenius_norm();
    const double asym = (h - h.adjoint()).frobenius_norm();
    if (asym > kConstructionTol * (1.0 + hnorm)) {
        throw Error(ErrorKind::NotHermitian,
                    "asymmetry " + std::to_string(asym) + " exceeds tolerance");
    }

    ComplexMatrix a = h;
    a += h.adjoint();
    a *= 0.5;
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double stop = kJacobiTol * (1.0 + hnorm);
    bool converged = off_diagonal_norm(a) <= stop;
    for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                jacobi_rotate(a, v, p, q);
            }
        }
        converged = off_diagonal_norm(a) <= stop;
    }
    if (!converged) {
        throw Error(ErrorKind::NoConvergence, "Jacobi sweeps exhausted");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    EigenDecomposition result;
    result.eigenvalues.resize(n);
    result.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t src = order[col];
        result.eigenvalues[col] = a(src, src).real();
        // Canonicalise the column phase: first nonzero component positive real.
        Complex lead = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (std::abs(v(k, src)) > 1e-9) {
                lead = v(k, src);
                break;
            }
        }
        const Complex rescale = (lead == Complex(0.0, 0.0)) ? Complex(1.0, 0.0)
                                                            : std::conj(lead) / std::abs(lead);
        for (std::size_t k = 0; k < n; ++k) {
            result.eigenvectors(k, col) = v(k, src) * rescale;
        }
    }
    return result;
}

bool is_psd(const ComplexMatrix& h, double tol) {
    const EigenDecomposition eig = herm_eig(h);
    return eig.eigenvalues.empty() || eig.eigenvalues.front() >= -tol;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& h) {
    const EigenDecomposition eig = herm_eig(h);
    std::vector<Complex> roots(eig.eigenvalues.size());
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
        double lambda = eig.eigenvalues[k];
        if (lambda < -kConstructionTol) {
            throw Error(ErrorKind::NotPsd,
                        "eigenvalue " + std::to_string(lambda) + " below -1e-9");
        }
        roots[k] = std::sqrt(std::max(lambda, 0.0));
    }
    const ComplexMatrix& v = eig.eigenvectors;
    return v * ComplexMatrix::diagonal(roots) * v.adjoint();
}

double operator_norm(const ComplexMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) {
        return 0.0;
    }
    ComplexMatrix gram = m.adjoint() * m;
    // Symmetrise away rounding before the eigensolver's hermiticity check.
    gram += gram.adjoint();
    gram *= 0.5;
    const EigenDecomposition eig = herm_eig(gram);
    const double lambda_max = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.back();
    return std::sqrt(std::max(lambda_max, 0.0));
}

std::vector<Complex> solve_linear(const ComplexMatrix& a, const std::vector<Complex>& rhs) {
    if (!a.is_square()) {
        throw Error(ErrorKind::NotSquare, "linear solve requires a square matrix");
    }
    const std::size_t n = a.rows();
    if (rhs.size() != n) {
        throw Error(ErrorKind::SizeMismatch, "right-hand side length mismatch");
    }
    ComplexMatrix work = a;
    std::vector<Complex> b = rhs;
    const double scale = a.max_abs();
    const double pivot_floor = 1e-13 * (1.0 + scale);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(work(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double mag = std::abs(work(r, col));
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best <= pivot_floor) {
            throw Error(ErrorKind::SingularSystem, "pivot below threshold in linear solve");
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(work(col, c), work(pivot, c));
            }
            std::swap(b[col], b[pivot]);
        }
        const Complex inv = 1.0 / work(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex factor = work(r, col) * inv;
            if (factor == Complex(0.0, 0.0)) {
                continue;
            }
            work(r, col) = 0.0;
            for (std::size_t c = col + 1; c < n; ++c) {
                work(r, c) -= factor * work(col, c);
            }
            b[r] -= factor * b[col];
        }
    }

    std::vector<Complex> x(n);
    for (std::size_t ri = n; ri-- > 0;) {
        Complex sum = b[ri];
        for (std::size_t c = ri + 1; c < n; ++c) {
            sum -= work(ri, c) * x[c];
        }
        x[ri] = sum / work(ri, ri);
    }
    return x;
}

}  // namespace gelfand
