#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gelfand/complex_matrix.hpp"

namespace gelfand {

// A finite-dimensional C*-algebra as an ordered direct sum of full matrix
// blocks M_{n_1} + ... + M_{n_k}. All block dimensions 1 means the algebra
// is the commutative C^k.
class AlgebraSignature {
  public:
    explicit AlgebraSignature(std::vector<std::size_t> blocks);

    static AlgebraSignature commutative(std::size_t n);

    const std::vector<std::size_t>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }
    std::size_t block_dim(std::size_t b) const { return blocks_[b]; }

    bool is_commutative() const;
    bool is_single_block() const { return blocks_.size() == 1; }

    // Vector-space dimension: sum of n_i^2. This is the length of the
    // matrix-unit coordinate vector of any element.
    std::size_t dimension() const;

    // Coordinate offset of block b in the matrix-unit basis.
    std::size_t block_offset(std::size_t b) const;

    bool operator==(const AlgebraSignature& other) const { return blocks_ == other.blocks_; }
    bool operator!=(const AlgebraSignature& other) const { return !(*this == other); }

    std::string to_string() const;

  private:
    std::vector<std::size_t> blocks_;
};

// A block-diagonal tuple of complex matrices in a given algebra.
class Element {
  public:
    Element(AlgebraSignature signature, std::vector<ComplexMatrix> blocks);

    static Element zero(const AlgebraSignature& signature);
    static Element unit(const AlgebraSignature& signature);
    // Commutative convenience: the element of C^n with the given coordinates.
    static Element from_diagonal(const std::vector<Complex>& coords);
    // The matrix-unit basis element with flat coordinate index k.
    static Element basis(const AlgebraSignature& signature, std::size_t k);

    const AlgebraSignature& signature() const { return signature_; }
    const ComplexMatrix& block(std::size_t b) const { return blocks_[b]; }
    ComplexMatrix& block(std::size_t b) { return blocks_[b]; }
    std::size_t block_count() const { return blocks_.size(); }

    // Flat coordinates over the matrix-unit basis: blocks in signature
    // order, row-major within a block. This layout is the file-format and
    // LinMap coefficient convention throughout.
    std::vector<Complex> coordinates() const;
    static Element from_coordinates(const AlgebraSignature& signature,
                                    const std::vector<Complex>& coords);

    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    Element& operator*=(Complex scalar);

  private:
    AlgebraSignature signature_;
    std::vector<ComplexMatrix> blocks_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator*(Complex scalar, Element x);
// Blockwise matrix product.
Element operator*(const Element& a, const Element& b);

// Blockwise conjugate transpose.
Element star(const Element& x);

bool is_self_adjoint(const Element& x, double tol = kConstructionTol);

// True iff x is self-adjoint and every block is PSD at the given tolerance.
// Non-self-adjoint inputs return false rather than throwing.
bool is_positive(const Element& x, double tol = kConstructionTol);

// The cone order: x <= y iff y - x is positive.
bool leq(const Element& x, const Element& y, double tol = kConstructionTol);

// Max over blocks of the spectral norm.
double cstar_norm(const Element& x);

// Spectral split of a self-adjoint element into positive parts with
// x = x_p - x_n and x_p x_n = 0.
std::pair<Element, Element> decompose_self_adjoint(const Element& x);

// y_r = (y + y*)/2 and y_i = (y - y*)/(2i), so y = y_r + i y_i exactly.
std::pair<Element, Element> real_imag_parts(const Element& y);

bool is_effect(const Element& x, double tol = kConstructionTol);

// An element checked to satisfy 0 <= e <= 1 at construction.
class Effect {
  public:
    explicit Effect(Element element);

    const Element& element() const { return element_; }
    Effect complement() const;

  private:
    Element element_;
};

}  // namespace gelfand
