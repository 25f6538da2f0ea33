#include "gelfand/linmap.hpp"

#include <cmath>

#include "gelfand/rng.hpp"

namespace gelfand {

const char* positivity_name(Positivity p) {
    switch (p) {
        case Positivity::Yes: return "yes";
        case Positivity::No: return "no";
        case Positivity::SampledYes: return "sampled-yes";
    }
    return "?";
}

const char* complete_positivity_name(CompletePositivity p) {
    switch (p) {
        case CompletePositivity::Yes: return "yes";
        case CompletePositivity::No: return "no";
        case CompletePositivity::NotComputed: return "not-computed";
    }
    return "?";
}

LinMap::LinMap(AlgebraSignature dom, AlgebraSignature cod, ComplexMatrix coeffs)
    : dom_(std::move(dom)), cod_(std::move(cod)), coeffs_(std::move(coeffs)) {
    if (coeffs_.rows() != cod_.dimension() || coeffs_.cols() != dom_.dimension()) {
        throw Error(ErrorKind::SizeMismatch,
                    "coefficient matrix must be dim(cod) x dim(dom) = " +
                        std::to_string(cod_.dimension()) + "x" + std::to_string(dom_.dimension()));
    }
}

LinMap LinMap::identity(const AlgebraSignature& signature) {
    return LinMap(signature, signature, ComplexMatrix::identity(signature.dimension()));
}

LinMap LinMap::from_action(const AlgebraSignature& dom, const AlgebraSignature& cod,
                           const std::function<Element(const Element&)>& action) {
    ComplexMatrix coeffs(cod.dimension(), dom.dimension());
    for (std::size_t k = 0; k < dom.dimension(); ++k) {
        const Element image = action(Element::basis(dom, k));
        if (image.signature() != cod) {
            throw Error(ErrorKind::SignatureMismatch, "action image is not in the codomain");
        }
        const std::vector<Complex> col = image.coordinates();
        for (std::size_t r = 0; r < col.size(); ++r) {
            coeffs(r, k) = col[r];
        }
    }
    return LinMap(dom, cod, std::move(coeffs));
}

Element apply_map(const LinMap& f, const Element& x) {
    if (x.signature() != f.dom()) {
        throw Error(ErrorKind::SignatureMismatch, "element is not in the map's domain");
    }
    const std::vector<Complex> in = x.coordinates();
    std::vector<Complex> out(f.cod().dimension(), Complex(0.0, 0.0));
    const ComplexMatrix& c = f.coeffs();
    for (std::size_t col = 0; col < in.size(); ++col) {
        const Complex v = in[col];
        if (v == Complex(0.0, 0.0)) {
            continue;
        }
        for (std::size_t r = 0; r < out.size(); ++r) {
            out[r] += c(r, col) * v;
        }
    }
    return Element::from_coordinates(f.cod(), out);
}

LinMap compose_maps(const LinMap& g, const LinMap& f) {
    if (f.cod() != g.dom()) {
        throw Error(ErrorKind::SignatureMismatch,
                    "cannot compose: codomain " + f.cod().to_string() + " differs from domain " +
                        g.dom().to_string());
    }
    return LinMap(f.dom(), g.cod(), g.coeffs() * f.coeffs());
}

double coeff_distance(const LinMap& f, const LinMap& g) {
    if (f.dom() != g.dom() || f.cod() != g.cod()) {
        throw Error(ErrorKind::SignatureMismatch, "maps have different signatures");
    }
    return (f.coeffs() - g.coeffs()).max_abs();
}

namespace {

// A random rank-one projection uu* planted in one block, zero elsewhere.
Element random_block_projection(const AlgebraSignature& sig, std::size_t b, Rng& rng) {
    const std::size_t n = sig.block_dim(b);
    std::vector<Complex> u(n);
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (Complex& z : u) {
            z = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
            norm2 += std::norm(z);
        }
    } while (norm2 < 1e-12);
    const double inv = 1.0 / std::sqrt(norm2);
    Element e = Element::zero(sig);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            e.block(b)(i, j) = u[i] * std::conj(u[j]) * inv * inv;
        }
    }
    return e;
}

CompletePositivity check_complete_positivity(const LinMap& f) {
    if (!f.dom().is_single_block()) {
        return CompletePositivity::NotComputed;
    }
    const ComplexMatrix choi = choi_matrix(f);
    return is_psd(choi, kConstructionTol) ? CompletePositivity::Yes : CompletePositivity::No;
}

}  // namespace

MapClass classify_map(const LinMap& f, std::size_t samples, std::uint64_t seed) {
    MapClass result;
    const AlgebraSignature& dom = f.dom();
    const std::size_t dim = dom.dimension();

    const Element unit_dom = Element::unit(dom);
    const Element unit_cod = Element::unit(f.cod());
    result.unital = cstar_norm(apply_map(f, unit_dom) - unit_cod) <= kClassifyTol;

    std::vector<Element> basis_images;
    basis_images.reserve(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        basis_images.push_back(apply_map(f, Element::basis(dom, k)));
    }

    result.involutive = true;
    for (std::size_t k = 0; k < dim && result.involutive; ++k) {
        const Element e = Element::basis(dom, k);
        if (cstar_norm(apply_map(f, star(e)) - star(basis_images[k])) > kClassifyTol) {
            result.involutive = false;
        }
    }

    result.multiplicative = true;
    for (std::size_t k = 0; k < dim && result.multiplicative; ++k) {
        const Element ek = Element::basis(dom, k);
        for (std::size_t l = 0; l < dim && result.multiplicative; ++l) {
            const Element el = Element::basis(dom, l);
            const Element image = apply_map(f, ek * el);
            if (cstar_norm(image - basis_images[k] * basis_images[l]) > kClassifyTol) {
                result.multiplicative = false;
            }
        }
    }

    if (result.is_miu()) {
        // Every MIU map is PU; no sampling needed.
        result.positive = Positivity::Yes;
    } else if (dom.is_commutative()) {
        // The cone of C^n is generated by the coordinate projections.
        result.positive = Positivity::Yes;
        for (std::size_t k = 0; k < dim; ++k) {
            if (!is_positive(basis_images[k], kClassifyTol)) {
                result.positive = Positivity::No;
                break;
            }
        }
    } else {
        Rng rng(seed);
        result.positive = Positivity::SampledYes;
        for (std::size_t b = 0; b < dom.block_count() && result.positive != Positivity::No; ++b) {
            for (std::size_t trial = 0; trial < samples; ++trial) {
                const Element proj = random_block_projection(dom, b, rng);
                if (!is_positive(apply_map(f, proj), kClassifyTol)) {
                    result.positive = Positivity::No;
                    break;
                }
            }
        }
    }

    result.completely_positive = check_complete_positivity(f);
    return result;
}

ComplexMatrix choi_matrix(const LinMap& f) {
    if (!f.dom().is_single_block()) {
        throw Error(ErrorKind::DomainNotSingleBlock,
                    "Choi matrix needs a single-matrix-block domain");
    }
    const std::size_t n = f.dom().block_dim(0);
    const AlgebraSignature& cod = f.cod();

    std::size_t total = 0;
    for (std::size_t m : cod.blocks()) {
        total += n * m;
    }
    ComplexMatrix choi(total, total);

    std::size_t base = 0;
    for (std::size_t b = 0; b < cod.block_count(); ++b) {
        const std::size_t m = cod.block_dim(b);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Element unit_ij = Element::zero(f.dom());
                unit_ij.block(0)(i, j) = 1.0;
                const ComplexMatrix image = apply_map(f, unit_ij).block(b);
                for (std::size_t r = 0; r < m; ++r) {
                    for (std::size_t c = 0; c < m; ++c) {
                        choi(base + i * m + r, base + j * m + c) += image(r, c);
                    }
                }
            }
        }
        base += n * m;
    }
    return choi;
}

LinMap transpose_map(std::size_t n) {
    if (n == 0) {
        throw Error(ErrorKind::InvalidDimension, "transpose map needs n >= 1");
    }
    const AlgebraSignature sig({n});
    ComplexMatrix coeffs(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            coeffs(j * n + i, i * n + j) = 1.0;
        }
    }
    return LinMap(sig, sig, std::move(coeffs));
}

NormBoundReport pu_norm_bound_check(const LinMap& f, std::size_t trials, std::uint64_t seed) {
    const MapClass cls = classify_map(f);
    if (!cls.is_pu()) {
        throw Error(ErrorKind::NotPu, "norm bound check needs a positive unital map");
    }
    Rng rng(seed);
    NormBoundReport report;
    report.trials = trials;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        Element x = Element::zero(f.dom());
        for (std::size_t b = 0; b < x.block_count(); ++b) {
            const std::size_t nb = f.dom().block_dim(b);
            for (std::size_t i = 0; i < nb; ++i) {
                for (std::size_t j = 0; j < nb; ++j) {
                    x.block(b)(i, j) = rng.complex_in_square();
                }
            }
        }
        const double nx = cstar_norm(x);
        const double nfx = cstar_norm(apply_map(f, x));
        if (nfx > 4.0 * nx + kClassifyTol) {
            report.within_four = false;
        }
        if (nfx > nx + kClassifyTol) {
            report.within_one = false;
        }
        if (nx > 1e-12) {
            report.max_ratio = std::max(report.max_ratio, nfx / nx);
        }
    }
    return report;
}

}  // namespace gelfand
