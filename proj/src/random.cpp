#include "gelfand/random.hpp"

#include <cmath>

namespace gelfand {

Element random_element(const AlgebraSignature& signature, Rng& rng) {
    Element x = Element::zero(signature);
    for (std::size_t b = 0; b < x.block_count(); ++b) {
        const std::size_t n = signature.block_dim(b);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                x.block(b)(i, j) = rng.complex_in_square();
            }
        }
    }
    return x;
}

Element random_self_adjoint(const AlgebraSignature& signature, Rng& rng) {
    const Element y = random_element(signature, rng);
    Element x = y + star(y);
    x *= 0.5;
    return x;
}

Element random_positive(const AlgebraSignature& signature, Rng& rng) {
    const Element y = random_element(signature, rng);
    return star(y) * y;
}

Element random_effect(const AlgebraSignature& signature, Rng& rng) {
    const Element p = random_positive(signature, rng);
    const double norm = cstar_norm(p);
    if (norm <= 1e-12) {
        return Element::zero(signature);
    }
    return Complex(rng.uniform() / norm, 0.0) * p;
}

std::pair<Element, Element> random_summable_effect_pair(const AlgebraSignature& signature,
                                                        Rng& rng) {
    Element e1 = random_effect(signature, rng);
    Element e2 = random_effect(signature, rng);
    const double sum_norm = cstar_norm(e1 + e2);
    if (sum_norm > 1.0) {
        const double shrink = rng.uniform() / sum_norm;
        e1 *= shrink;
        e2 *= shrink;
    }
    return {std::move(e1), std::move(e2)};
}

State random_state(const AlgebraSignature& signature, Rng& rng) {
    std::vector<ComplexMatrix> densities;
    densities.reserve(signature.block_count());
    double total = 0.0;
    for (std::size_t b = 0; b < signature.block_count(); ++b) {
        const std::size_t n = signature.block_dim(b);
        ComplexMatrix g(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                g(i, j) = rng.complex_in_square();
            }
        }
        ComplexMatrix rho = g * g.adjoint();
        rho *= Complex(rng.uniform(0.05, 1.0), 0.0);
        total += rho.trace().real();
        densities.push_back(std::move(rho));
    }
    for (ComplexMatrix& rho : densities) {
        rho *= Complex(1.0 / total, 0.0);
    }
    return State(signature, std::move(densities));
}

State random_pure_state(const AlgebraSignature& signature, Rng& rng) {
    const std::size_t b = rng.index(signature.block_count());
    const std::size_t n = signature.block_dim(b);
    std::vector<Complex> u(n);
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (Complex& z : u) {
            z = rng.complex_in_square();
            norm2 += std::norm(z);
        }
    } while (norm2 < 1e-12);

    std::vector<ComplexMatrix> densities;
    for (std::size_t nb : signature.blocks()) {
        densities.emplace_back(nb, nb);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            densities[b](i, j) = u[i] * std::conj(u[j]) / norm2;
        }
    }
    return State(signature, std::move(densities));
}

namespace {

Element inverse_sqrt(const Element& p) {
    Element result = Element::zero(p.signature());
    for (std::size_t b = 0; b < p.block_count(); ++b) {
        const EigenDecomposition eig = herm_eig(p.block(b));
        std::vector<Complex> inv_roots(eig.eigenvalues.size());
        for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
            if (eig.eigenvalues[k] <= 1e-12) {
                throw Error(ErrorKind::SingularSystem, "inverse square root of singular element");
            }
            inv_roots[k] = 1.0 / std::sqrt(eig.eigenvalues[k]);
        }
        const ComplexMatrix& v = eig.eigenvectors;
        result.block(b) = v * ComplexMatrix::diagonal(inv_roots) * v.adjoint();
    }
    return result;
}

Element random_unitary(const AlgebraSignature& signature, Rng& rng) {
    Element u = Element::zero(signature);
    for (std::size_t b = 0; b < signature.block_count(); ++b) {
        const std::size_t n = signature.block_dim(b);
        ComplexMatrix h(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                h(i, j) = rng.complex_in_square();
            }
        }
        h += h.adjoint();
        h *= 0.5;
        u.block(b) = herm_eig(h).eigenvectors;
    }
    return u;
}

}  // namespace

LinMap random_pu_map(const AlgebraSignature& dom, const AlgebraSignature& cod, Rng& rng) {
    // Measure-and-prepare core: x |-> sum_s phi_s(x) P_s with sum_s P_s = 1.
    const std::size_t parts = dom.dimension() + 1;
    std::vector<State> measurements;
    std::vector<Element> preparations;
    measurements.reserve(parts);
    preparations.reserve(parts);

    Element total = Element::zero(cod);
    std::vector<Element> raw;
    for (std::size_t s = 0; s < parts; ++s) {
        measurements.push_back(random_state(dom, rng));
        Element q = random_positive(cod, rng);
        // Keep the resolvent comfortably invertible.
        q += Complex(0.05, 0.0) * Element::unit(cod);
        total += q;
        raw.push_back(std::move(q));
    }
    const Element whitener = inverse_sqrt(total);
    for (const Element& q : raw) {
        preparations.push_back(whitener * q * whitener);
    }

    LinMap mp = LinMap::from_action(dom, cod, [&](const Element& x) {
        Element image = Element::zero(cod);
        for (std::size_t s = 0; s < parts; ++s) {
            image += state_eval(measurements[s], x) * preparations[s];
        }
        return image;
    });

    if (dom != cod) {
        return mp;
    }
    // Blend in a random *-automorphism so same-signature samples are not all
    // entanglement breaking.
    const Element u = random_unitary(dom, rng);
    const Element u_star = star(u);
    const LinMap conj = LinMap::from_action(dom, cod, [&](const Element& x) {
        return u_star * x * u;
    });
    const double weight = rng.uniform();
    ComplexMatrix mixed = mp.coeffs();
    mixed *= Complex(1.0 - weight, 0.0);
    ComplexMatrix unitary_part = conj.coeffs();
    unitary_part *= Complex(weight, 0.0);
    mixed += unitary_part;
    return LinMap(dom, cod, std::move(mixed));
}

}  // namespace gelfand
