#include "gelfand/algebra.hpp"

#include <cmath>

namespace gelfand {

AlgebraSignature::AlgebraSignature(std::vector<std::size_t> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) {
        throw Error(ErrorKind::InvalidArgument, "signature needs at least one block");
    }
    for (std::size_t n : blocks_) {
        if (n == 0) {
            throw Error(ErrorKind::InvalidDimension, "signature block dimension must be >= 1");
        }
    }
}

AlgebraSignature AlgebraSignature::commutative(std::size_t n) {
    if (n == 0) {
        throw Error(ErrorKind::InvalidDimension, "commutative algebra needs n >= 1");
    }
    return AlgebraSignature(std::vector<std::size_t>(n, 1));
}

bool AlgebraSignature::is_commutative() const {
    for (std::size_t n : blocks_) {
        if (n != 1) {
            return false;
        }
    }
    return true;
}

std::size_t AlgebraSignature::dimension() const {
    std::size_t dim = 0;
    for (std::size_t n : blocks_) {
        dim += n * n;
    }
    return dim;
}

std::size_t AlgebraSignature::block_offset(std::size_t b) const {
    std::size_t offset = 0;
    for (std::size_t i = 0; i < b; ++i) {
        offset += blocks_[i] * blocks_[i];
    }
    return offset;
}

std::string AlgebraSignature::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(blocks_[i]);
    }
    out += ")";
    return out;
}

Element::Element(AlgebraSignature signature, std::vector<ComplexMatrix> blocks)
    : signature_(std::move(signature)), blocks_(std::move(blocks)) {
    if (blocks_.size() != signature_.block_count()) {
        throw Error(ErrorKind::SignatureMismatch, "element block count does not match signature");
    }
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        const std::size_t n = signature_.block_dim(b);
        if (blocks_[b].rows() != n || blocks_[b].cols() != n) {
            throw Error(ErrorKind::SignatureMismatch,
                        "block " + std::to_string(b) + " is not " + std::to_string(n) + "x" +
                            std::to_string(n));
        }
    }
}

Element Element::zero(const AlgebraSignature& signature) {
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(signature.block_count());
    for (std::size_t n : signature.blocks()) {
        blocks.emplace_back(n, n);
    }
    return Element(signature, std::move(blocks));
}

Element Element::unit(const AlgebraSignature& signature) {
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(signature.block_count());
    for (std::size_t n : signature.blocks()) {
        blocks.push_back(ComplexMatrix::identity(n));
    }
    return Element(signature, std::move(blocks));
}

Element Element::from_diagonal(const std::vector<Complex>& coords) {
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(coords.size());
    for (const Complex& z : coords) {
        ComplexMatrix m(1, 1);
        m(0, 0) = z;
        blocks.push_back(std::move(m));
    }
    return Element(AlgebraSignature::commutative(coords.size()), std::move(blocks));
}

Element Element::basis(const AlgebraSignature& signature, std::size_t k) {
    if (k >= signature.dimension()) {
        throw Error(ErrorKind::IndexOutOfRange, "basis index beyond algebra dimension");
    }
    Element e = Element::zero(signature);
    for (std::size_t b = 0; b < signature.block_count(); ++b) {
        const std::size_t n = signature.block_dim(b);
        if (k < n * n) {
            e.block(b)(k / n, k % n) = 1.0;
            break;
        }
        k -= n * n;
    }
    return e;
}

std::vector<Complex> Element::coordinates() const {
    std::vector<Complex> coords;
    coords.reserve(signature_.dimension());
    for (const ComplexMatrix& m : blocks_) {
        coords.insert(coords.end(), m.entries().begin(), m.entries().end());
    }
    return coords;
}

Element Element::from_coordinates(const AlgebraSignature& signature,
                                  const std::vector<Complex>& coords) {
    if (coords.size() != signature.dimension()) {
        throw Error(ErrorKind::SizeMismatch, "coordinate count does not match algebra dimension");
    }
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(signature.block_count());
    std::size_t pos = 0;
    for (std::size_t n : signature.blocks()) {
        std::vector<Complex> entries(coords.begin() + pos, coords.begin() + pos + n * n);
        blocks.emplace_back(n, n, std::move(entries));
        pos += n * n;
    }
    return Element(signature, std::move(blocks));
}

namespace {

void require_same_signature(const Element& a, const Element& b) {
    if (a.signature() != b.signature()) {
        throw Error(ErrorKind::SignatureMismatch,
                    "elements live in different algebras " + a.signature().to_string() + " vs " +
                        b.signature().to_string());
    }
}

}  // namespace

Element& Element::operator+=(const Element& other) {
    require_same_signature(*this, other);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        blocks_[b] += other.blocks_[b];
    }
    return *this;
}

Element& Element::operator-=(const Element& other) {
    require_same_signature(*this, other);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        blocks_[b] -= other.blocks_[b];
    }
    return *this;
}

Element& Element::operator*=(Complex scalar) {
    for (ComplexMatrix& m : blocks_) {
        m *= scalar;
    }
    return *this;
}

Element operator+(Element a, const Element& b) {
    a += b;
    return a;
}

Element operator-(Element a, const Element& b) {
    a -= b;
    return a;
}

Element operator*(Complex scalar, Element x) {
    x *= scalar;
    return x;
}

Element operator*(const Element& a, const Element& b) {
    require_same_signature(a, b);
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(a.block_count());
    for (std::size_t i = 0; i < a.block_count(); ++i) {
        blocks.push_back(a.block(i) * b.block(i));
    }
    return Element(a.signature(), std::move(blocks));
}

Element star(const Element& x) {
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(x.block_count());
    for (std::size_t i = 0; i < x.block_count(); ++i) {
        blocks.push_back(x.block(i).adjoint());
    }
    return Element(x.signature(), std::move(blocks));
}

bool is_self_adjoint(const Element& x, double tol) {
    const double scale = 1.0 + cstar_norm(x);
    return cstar_norm(x - star(x)) <= tol * scale;
}

bool is_positive(const Element& x, double tol) {
    if (!is_self_adjoint(x, tol)) {
        return false;
    }
    for (std::size_t b = 0; b < x.block_count(); ++b) {
        ComplexMatrix h = x.block(b);
        h += h.adjoint();
        h *= 0.5;
        if (!is_psd(h, tol)) {
            return false;
        }
    }
    return true;
}

bool leq(const Element& x, const Element& y, double tol) {
    require_same_signature(x, y);
    return is_positive(y - x, tol);
}

double cstar_norm(const Element& x) {
    double best = 0.0;
    for (std::size_t b = 0; b < x.block_count(); ++b) {
        best = std::max(best, operator_norm(x.block(b)));
    }
    return best;
}

std::pair<Element, Element> decompose_self_adjoint(const Element& x) {
    if (!is_self_adjoint(x)) {
        throw Error(ErrorKind::NotSelfAdjoint, "spectral split needs a self-adjoint element");
    }
    Element pos = Element::zero(x.signature());
    Element neg = Element::zero(x.signature());
    for (std::size_t b = 0; b < x.block_count(); ++b) {
        ComplexMatrix h = x.block(b);
        h += h.adjoint();
        h *= 0.5;
        const EigenDecomposition eig = herm_eig(h);
        const std::size_t n = h.rows();
        std::vector<Complex> lam_pos(n), lam_neg(n);
        for (std::size_t k = 0; k < n; ++k) {
            lam_pos[k] = std::max(eig.eigenvalues[k], 0.0);
            lam_neg[k] = std::max(-eig.eigenvalues[k], 0.0);
        }
        const ComplexMatrix& v = eig.eigenvectors;
        pos.block(b) = v * ComplexMatrix::diagonal(lam_pos) * v.adjoint();
        neg.block(b) = v * ComplexMatrix::diagonal(lam_neg) * v.adjoint();
    }
    return {std::move(pos), std::move(neg)};
}

std::pair<Element, Element> real_imag_parts(const Element& y) {
    const Element ys = star(y);
    Element real = y + ys;
    real *= 0.5;
    Element imag = y - ys;
    imag *= Complex(0.0, -0.5);  // 1/(2i)
    return {std::move(real), std::move(imag)};
}

bool is_effect(const Element& x, double tol) {
    return is_positive(x, tol) && leq(x, Element::unit(x.signature()), tol);
}

Effect::Effect(Element element) : element_(std::move(element)) {
    if (!is_effect(element_)) {
        throw Error(ErrorKind::NotEffect, "element is not between 0 and 1 in the cone order");
    }
}

Effect Effect::complement() const {
    return Effect(Element::unit(element_.signature()) - element_);
}

}  // namespace gelfand
