#include "gelfand/states.hpp"

#include <cmath>

#include "gelfand/random.hpp"

namespace gelfand {

State::State(AlgebraSignature signature, std::vector<ComplexMatrix> densities)
    : signature_(std::move(signature)), densities_(std::move(densities)) {
    if (densities_.size() != signature_.block_count()) {
        throw Error(ErrorKind::SignatureMismatch, "density block count does not match signature");
    }
    double trace_sum = 0.0;
    for (std::size_t b = 0; b < densities_.size(); ++b) {
        const std::size_t n = signature_.block_dim(b);
        if (densities_[b].rows() != n || densities_[b].cols() != n) {
            throw Error(ErrorKind::SignatureMismatch,
                        "density block " + std::to_string(b) + " has the wrong shape");
        }
        if (!is_psd(densities_[b], kConstructionTol)) {
            throw Error(ErrorKind::NotPsd, "density block " + std::to_string(b) + " is not PSD");
        }
        trace_sum += densities_[b].trace().real();
    }
    if (std::abs(trace_sum - 1.0) > kConstructionTol) {
        throw Error(ErrorKind::InvalidArgument,
                    "density traces sum to " + std::to_string(trace_sum) + ", not 1");
    }
}

Complex state_eval(const State& sigma, const Element& x) {
    if (sigma.signature() != x.signature()) {
        throw Error(ErrorKind::SignatureMismatch, "state and element signatures differ");
    }
    Complex total = 0.0;
    for (std::size_t b = 0; b < sigma.block_count(); ++b) {
        total += (sigma.density(b) * x.block(b)).trace();
    }
    return total;
}

State dirac_state(std::size_t i, std::size_t n) {
    if (i >= n) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "point " + std::to_string(i) + " outside a " + std::to_string(n) +
                        "-point space");
    }
    const AlgebraSignature sig = AlgebraSignature::commutative(n);
    std::vector<ComplexMatrix> densities;
    densities.reserve(n);
    for (std::size_t b = 0; b < n; ++b) {
        ComplexMatrix d(1, 1);
        d(0, 0) = (b == i) ? 1.0 : 0.0;
        densities.push_back(std::move(d));
    }
    return State(sig, std::move(densities));
}

bool is_extreme(const State& sigma) {
    if (sigma.signature().is_commutative()) {
        for (std::size_t b = 0; b < sigma.block_count(); ++b) {
            if (sigma.density(b)(0, 0).real() > 1.0 - kClassifyTol) {
                return true;
            }
        }
        return false;
    }
    // Exactly one block carries the mass and its density is rank one.
    std::size_t carrier = sigma.block_count();
    for (std::size_t b = 0; b < sigma.block_count(); ++b) {
        if (sigma.density(b).trace().real() > kClassifyTol) {
            if (carrier != sigma.block_count()) {
                return false;
            }
            carrier = b;
        }
    }
    if (carrier == sigma.block_count()) {
        return false;
    }
    const EigenDecomposition eig = herm_eig(sigma.density(carrier));
    const std::size_t n = eig.eigenvalues.size();
    return n == 1 || eig.eigenvalues[n - 2] <= kClassifyTol;
}

double state_distance(const State& a, const State& b) {
    if (a.signature() != b.signature()) {
        throw Error(ErrorKind::SignatureMismatch, "states live on different algebras");
    }
    double best = 0.0;
    for (std::size_t blk = 0; blk < a.block_count(); ++blk) {
        best = std::max(best, (a.density(blk) - b.density(blk)).max_abs());
    }
    return best;
}

FinMeasure::FinMeasure(std::vector<std::pair<double, State>> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) {
        throw Error(ErrorKind::InvalidArgument, "a finite measure needs at least one atom");
    }
    const AlgebraSignature& sig = atoms_.front().second.signature();
    double total = 0.0;
    for (const auto& [weight, state] : atoms_) {
        if (weight < -kDistClampTol || weight > 1.0 + kDistClampTol) {
            throw Error(ErrorKind::InvalidArgument, "measure weight outside [0,1]");
        }
        if (state.signature() != sig) {
            throw Error(ErrorKind::SignatureMismatch, "measure atoms on different algebras");
        }
        total += weight;
    }
    if (std::abs(total - 1.0) > kConstructionTol) {
        throw Error(ErrorKind::InvalidArgument,
                    "measure weights sum to " + std::to_string(total) + ", not 1");
    }
}

State barycentre(const FinMeasure& mu) {
    const AlgebraSignature& sig = mu.atoms().front().second.signature();
    std::vector<ComplexMatrix> densities;
    densities.reserve(sig.block_count());
    for (std::size_t n : sig.blocks()) {
        densities.emplace_back(n, n);
    }
    for (const auto& [weight, state] : mu.atoms()) {
        for (std::size_t b = 0; b < densities.size(); ++b) {
            ComplexMatrix scaled = state.density(b);
            scaled *= Complex(weight, 0.0);
            densities[b] += scaled;
        }
    }
    return State(sig, std::move(densities));
}

EModCheckReport emod_check(const EModMap& emap, const AlgebraSignature& algebra,
                           std::size_t trials, std::uint64_t seed) {
    Rng rng(seed);
    EModCheckReport report;
    report.trials = trials;

    report.unit_residual = std::abs(emap(Element::unit(algebra)) - 1.0);
    if (report.unit_residual > kConstructionTol) {
        report.violations.push_back("unit: |E(1) - 1| = " + std::to_string(report.unit_residual));
    }

    for (std::size_t trial = 0; trial < trials; ++trial) {
        const auto [e1, e2] = random_summable_effect_pair(algebra, rng);
        const double additivity = std::abs(emap(e1 + e2) - (emap(e1) + emap(e2)));
        report.max_additivity_residual = std::max(report.max_additivity_residual, additivity);
        if (additivity > kClassifyTol) {
            report.violations.push_back("additivity residual " + std::to_string(additivity) +
                                        " at trial " + std::to_string(trial));
        }

        const Element e = random_effect(algebra, rng);
        const double r = rng.uniform();
        const double scalar = std::abs(emap(Complex(r, 0.0) * e) - r * emap(e));
        report.max_scalar_residual = std::max(report.max_scalar_residual, scalar);
        if (scalar > kClassifyTol) {
            report.violations.push_back("scalar residual " + std::to_string(scalar) +
                                        " at trial " + std::to_string(trial));
        }
    }
    return report;
}

namespace {

// The positive-part extension f(p) = ||p|| E(p / ||p||) from the proof that
// effect restrictions determine PU maps.
double extend_to_positive(const EModMap& emap, const Element& p) {
    const double norm = cstar_norm(p);
    if (norm <= 1e-12) {
        return 0.0;
    }
    return norm * emap(Complex(1.0 / norm, 0.0) * p);
}

double extend_to_self_adjoint(const EModMap& emap, const Element& x) {
    const auto [pos, neg] = decompose_self_adjoint(x);
    return extend_to_positive(emap, pos) - extend_to_positive(emap, neg);
}

}  // namespace

State state_from_functional(const AlgebraSignature& algebra,
                            const std::function<Complex(const Element&)>& phi,
                            ErrorKind failure_kind) {
    std::vector<ComplexMatrix> densities;
    densities.reserve(algebra.block_count());
    for (std::size_t b = 0; b < algebra.block_count(); ++b) {
        const std::size_t n = algebra.block_dim(b);
        ComplexMatrix rho(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Element unit_ij = Element::zero(algebra);
                unit_ij.block(b)(i, j) = 1.0;
                // tr(rho E_ij) = rho(j, i)
                rho(j, i) = phi(unit_ij);
            }
        }
        densities.push_back(std::move(rho));
    }
    try {
        return State(algebra, std::move(densities));
    } catch (const Error& e) {
        throw Error(failure_kind, std::string("functional is not a state: ") + e.what());
    }
}

State emod_to_state(const EModMap& emap, const AlgebraSignature& algebra) {
    return state_from_functional(
        algebra,
        [&](const Element& basis) {
            const auto [re, im] = real_imag_parts(basis);
            return Complex(extend_to_self_adjoint(emap, re), extend_to_self_adjoint(emap, im));
        },
        ErrorKind::NotEModHom);
}

std::vector<State> spanning_states(const AlgebraSignature& algebra) {
    std::vector<State> family;
    family.reserve(algebra.dimension());
    const auto push_density = [&](std::size_t b, const ComplexMatrix& rho) {
        std::vector<ComplexMatrix> densities;
        for (std::size_t n : algebra.blocks()) {
            densities.emplace_back(n, n);
        }
        densities[b] = rho;
        family.emplace_back(algebra, std::move(densities));
    };

    for (std::size_t b = 0; b < algebra.block_count(); ++b) {
        const std::size_t n = algebra.block_dim(b);
        for (std::size_t i = 0; i < n; ++i) {
            ComplexMatrix rho(n, n);
            rho(i, i) = 1.0;
            push_density(b, rho);
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                ComplexMatrix real_mix(n, n);
                real_mix(i, i) = 0.5;
                real_mix(j, j) = 0.5;
                real_mix(i, j) = 0.5;
                real_mix(j, i) = 0.5;
                push_density(b, real_mix);

                ComplexMatrix imag_mix(n, n);
                imag_mix(i, i) = 0.5;
                imag_mix(j, j) = 0.5;
                imag_mix(i, j) = Complex(0.0, -0.5);
                imag_mix(j, i) = Complex(0.0, 0.5);
                push_density(b, imag_mix);
            }
        }
    }
    return family;
}

Complex xi_eval(const Element& a, const State& sigma) {
    return state_eval(sigma, a);
}

Element xi_inverse(const AlgebraSignature& algebra, const std::vector<Complex>& values) {
    const std::size_t dim = algebra.dimension();
    if (values.size() != dim) {
        throw Error(ErrorKind::SizeMismatch,
                    "affine data needs one value per spanning state (" + std::to_string(dim) +
                        ")");
    }
    const std::vector<State> family = spanning_states(algebra);
    ComplexMatrix gram(dim, dim);
    for (std::size_t s = 0; s < dim; ++s) {
        for (std::size_t k = 0; k < dim; ++k) {
            gram(s, k) = state_eval(family[s], Element::basis(algebra, k));
        }
    }
    const std::vector<Complex> coords = solve_linear(gram, values);
    const Element result = Element::from_coordinates(algebra, coords);

    double residual = 0.0;
    for (std::size_t s = 0; s < dim; ++s) {
        residual = std::max(residual, std::abs(state_eval(family[s], result) - values[s]));
    }
    if (residual > kTriangleTol) {
        throw Error(ErrorKind::InconsistentAffineData,
                    "affine data residual " + std::to_string(residual));
    }
    return result;
}

}  // namespace gelfand
