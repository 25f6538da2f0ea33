#include "gelfand/prob.hpp"

#include <cmath>

namespace gelfand {

Dist::Dist(std::vector<double> weights, double clamp_window) : weights_(std::move(weights)) {
    if (weights_.empty()) {
        throw Error(ErrorKind::InvalidArgument, "distribution needs at least one outcome");
    }
    double sum = 0.0;
    for (double& w : weights_) {
        if (!std::isfinite(w) || w < -clamp_window || w > 1.0 + clamp_window) {
            throw Error(ErrorKind::NotStochastic,
                        "weight " + std::to_string(w) + " outside [0,1]");
        }
        w = std::min(std::max(w, 0.0), 1.0);
        sum += w;
    }
    if (std::abs(sum - 1.0) > kConstructionTol) {
        if (std::abs(sum - 1.0) > kExtractionTol || sum <= 0.0) {
            throw Error(ErrorKind::NotStochastic,
                        "weights sum to " + std::to_string(sum) + ", not 1");
        }
        for (double& w : weights_) {
            w /= sum;
        }
    }
}

Dist Dist::point(std::size_t x, std::size_t n) {
    if (x >= n) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "point " + std::to_string(x) + " outside a " + std::to_string(n) +
                        "-point space");
    }
    std::vector<double> w(n, 0.0);
    w[x] = 1.0;
    return Dist(std::move(w));
}

Dist Dist::uniform(std::size_t n) {
    if (n == 0) {
        throw Error(ErrorKind::InvalidDimension, "uniform distribution needs n >= 1");
    }
    return Dist(std::vector<double>(n, 1.0 / static_cast<double>(n)), kExtractionTol);
}

double Dist::linf_distance(const Dist& other) const {
    if (size() != other.size()) {
        throw Error(ErrorKind::SizeMismatch, "distributions have different sizes");
    }
    double best = 0.0;
    for (std::size_t i = 0; i < size(); ++i) {
        best = std::max(best, std::abs(weights_[i] - other.weights_[i]));
    }
    return best;
}

Dist dist_unit(std::size_t x, std::size_t n) {
    return Dist::point(x, n);
}

Dist dist_mult(const Dist& outer, const std::vector<Dist>& inner) {
    if (inner.size() != outer.size()) {
        throw Error(ErrorKind::SizeMismatch, "outer weights and inner distributions disagree");
    }
    if (inner.empty()) {
        throw Error(ErrorKind::InvalidArgument, "nothing to flatten");
    }
    const std::size_t n = inner.front().size();
    for (const Dist& phi : inner) {
        if (phi.size() != n) {
            throw Error(ErrorKind::SizeMismatch, "inner distributions have different sizes");
        }
    }
    std::vector<double> flat(n, 0.0);
    for (std::size_t k = 0; k < inner.size(); ++k) {
        for (std::size_t x = 0; x < n; ++x) {
            flat[x] += outer[k] * inner[k][x];
        }
    }
    return Dist(std::move(flat), kExtractionTol);
}

KleisliMap::KleisliMap(std::size_t dom_size, std::size_t cod_size, std::vector<double> entries,
                       double clamp_window)
    : dom_(dom_size), cod_(cod_size), entries_(std::move(entries)) {
    if (dom_ == 0 || cod_ == 0) {
        throw Error(ErrorKind::InvalidDimension, "Kleisli map needs nonempty dom and cod");
    }
    if (entries_.size() != dom_ * cod_) {
        throw Error(ErrorKind::SizeMismatch, "entry count does not match matrix shape");
    }
    for (std::size_t i = 0; i < dom_; ++i) {
        const Dist row(std::vector<double>(entries_.begin() + i * cod_,
                                           entries_.begin() + (i + 1) * cod_),
                       clamp_window);
        for (std::size_t j = 0; j < cod_; ++j) {
            entries_[i * cod_ + j] = row[j];
        }
    }
}

KleisliMap KleisliMap::identity(std::size_t n) {
    std::vector<double> entries(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        entries[i * n + i] = 1.0;
    }
    return KleisliMap(n, n, std::move(entries));
}

Dist KleisliMap::row(std::size_t i) const {
    if (i >= dom_) {
        throw Error(ErrorKind::IndexOutOfRange, "row index beyond domain");
    }
    return Dist(std::vector<double>(entries_.begin() + i * cod_,
                                    entries_.begin() + (i + 1) * cod_),
                kExtractionTol);
}

Dist KleisliMap::push_forward(const Dist& d) const {
    if (d.size() != dom_) {
        throw Error(ErrorKind::SizeMismatch, "distribution size does not match domain");
    }
    std::vector<double> out(cod_, 0.0);
    for (std::size_t i = 0; i < dom_; ++i) {
        for (std::size_t j = 0; j < cod_; ++j) {
            out[j] += d[i] * entries_[i * cod_ + j];
        }
    }
    return Dist(std::move(out), kExtractionTol);
}

double KleisliMap::max_abs_distance(const KleisliMap& other) const {
    if (dom_ != other.dom_ || cod_ != other.cod_) {
        throw Error(ErrorKind::SizeMismatch, "Kleisli maps have different shapes");
    }
    double best = 0.0;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        best = std::max(best, std::abs(entries_[k] - other.entries_[k]));
    }
    return best;
}

KleisliMap kleisli_compose(const KleisliMap& g, const KleisliMap& f) {
    if (f.cod_size() != g.dom_size()) {
        throw Error(ErrorKind::SizeMismatch, "Kleisli composition size mismatch");
    }
    const std::size_t n = f.dom_size();
    const std::size_t m = f.cod_size();
    const std::size_t k = g.cod_size();
    std::vector<double> entries(n * k, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t mid = 0; mid < m; ++mid) {
            const double w = f(i, mid);
            if (w == 0.0) {
                continue;
            }
            for (std::size_t j = 0; j < k; ++j) {
                entries[i * k + j] += w * g(mid, j);
            }
        }
    }
    return KleisliMap(n, k, std::move(entries), kExtractionTol);
}

FunctionMap::FunctionMap(std::size_t dom_size, std::size_t cod_size,
                         std::vector<std::size_t> table)
    : dom_(dom_size), cod_(cod_size), table_(std::move(table)) {
    if (table_.size() != dom_) {
        throw Error(ErrorKind::SizeMismatch, "function table length does not match domain");
    }
    for (std::size_t value : table_) {
        if (value >= cod_) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "table value " + std::to_string(value) + " outside codomain");
        }
    }
}

FunctionMap FunctionMap::identity(std::size_t n) {
    std::vector<std::size_t> table(n);
    for (std::size_t i = 0; i < n; ++i) {
        table[i] = i;
    }
    return FunctionMap(n, n, std::move(table));
}

LinMap to_pu(const KleisliMap& f) {
    const std::size_t n = f.dom_size();
    const std::size_t m = f.cod_size();
    ComplexMatrix coeffs(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            coeffs(i, j) = f(i, j);
        }
    }
    return LinMap(AlgebraSignature::commutative(m), AlgebraSignature::commutative(n),
                  std::move(coeffs));
}

KleisliMap from_pu(const LinMap& h) {
    if (!h.dom().is_commutative() || !h.cod().is_commutative()) {
        throw Error(ErrorKind::NotCommutative,
                    "stochastic extraction needs commutative domain and codomain");
    }
    const MapClass cls = classify_map(h);
    if (!cls.unital || cls.positive != Positivity::Yes) {
        throw Error(ErrorKind::NotPu, "map does not classify as positive and unital");
    }
    const std::size_t m = h.dom().dimension();
    const std::size_t n = h.cod().dimension();
    std::vector<double> entries(n * m, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const Complex value = h.coeffs()(i, j);
            if (std::abs(value.imag()) > kExtractionTol) {
                throw Error(ErrorKind::NotStochastic,
                            "imaginary part " + std::to_string(value.imag()) +
                                " beyond extraction tolerance");
            }
            entries[i * m + j] = value.real();
            row_sum += value.real();
        }
        if (std::abs(row_sum - 1.0) > kExtractionTol) {
            throw Error(ErrorKind::NotStochastic,
                        "row " + std::to_string(i) + " sums to " + std::to_string(row_sum));
        }
    }
    return KleisliMap(n, m, std::move(entries), kExtractionTol);
}

LinMap function_to_miu(const FunctionMap& f) {
    const std::size_t n = f.dom_size();
    const std::size_t m = f.cod_size();
    ComplexMatrix coeffs(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        coeffs(i, f(i)) = 1.0;
    }
    return LinMap(AlgebraSignature::commutative(m), AlgebraSignature::commutative(n),
                  std::move(coeffs));
}

FunctionMap miu_to_function(const LinMap& h) {
    if (!h.dom().is_commutative() || !h.cod().is_commutative()) {
        throw Error(ErrorKind::NotCommutative,
                    "function extraction needs commutative domain and codomain");
    }
    const MapClass cls = classify_map(h);
    if (!cls.is_miu()) {
        throw Error(ErrorKind::NotMiu, "map does not preserve multiplication/involution/unit");
    }
    const std::size_t m = h.dom().dimension();
    const std::size_t n = h.cod().dimension();
    std::vector<std::size_t> table(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t ones = 0;
        for (std::size_t j = 0; j < m; ++j) {
            const Complex value = h.coeffs()(i, j);
            if (std::abs(value.imag()) > 1e-6) {
                throw Error(ErrorKind::NotFunctional, "matrix entry is not real");
            }
            const double re = value.real();
            if (std::abs(re - 1.0) <= 1e-6) {
                ++ones;
                table[i] = j;
            } else if (std::abs(re) > 1e-6) {
                throw Error(ErrorKind::NotFunctional,
                            "entry " + std::to_string(re) + " is neither 0 nor 1");
            }
        }
        if (ones != 1) {
            throw Error(ErrorKind::NotFunctional,
                        "row " + std::to_string(i) + " has " + std::to_string(ones) +
                            " unit entries");
        }
    }
    return FunctionMap(n, m, std::move(table));
}

State dist_to_state(const Dist& phi) {
    std::vector<ComplexMatrix> densities;
    densities.reserve(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) {
        ComplexMatrix d(1, 1);
        d(0, 0) = phi[i];
        densities.push_back(std::move(d));
    }
    return State(AlgebraSignature::commutative(phi.size()), std::move(densities));
}

Dist state_to_dist(const State& sigma) {
    if (!sigma.signature().is_commutative()) {
        throw Error(ErrorKind::NotCommutative, "only commutative states carry distributions");
    }
    std::vector<double> weights(sigma.block_count());
    for (std::size_t b = 0; b < sigma.block_count(); ++b) {
        weights[b] = sigma.density(b)(0, 0).real();
    }
    return Dist(std::move(weights), kExtractionTol);
}

Dist random_dist(std::size_t n, Rng& rng) {
    std::vector<double> w(n);
    double sum = 0.0;
    for (double& x : w) {
        x = -std::log(1.0 - rng.uniform());  // exponential, so the simplex is uniform
        sum += x;
    }
    for (double& x : w) {
        x /= sum;
    }
    return Dist(std::move(w), kExtractionTol);
}

KleisliMap random_kleisli_map(std::size_t n, std::size_t m, Rng& rng) {
    std::vector<double> entries;
    entries.reserve(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        const Dist row = random_dist(m, rng);
        entries.insert(entries.end(), row.weights().begin(), row.weights().end());
    }
    return KleisliMap(n, m, std::move(entries), kExtractionTol);
}

std::size_t count_miu_states(std::size_t n) {
    if (n == 0) {
        throw Error(ErrorKind::InvalidDimension, "state space of C^n needs n >= 1");
    }
    if (n > 16) {
        throw Error(ErrorKind::DimensionTooLarge, "Boolean enumeration caps n at 16");
    }
    const AlgebraSignature dom = AlgebraSignature::commutative(n);
    const AlgebraSignature cod = AlgebraSignature::commutative(1);
    std::size_t count = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        ComplexMatrix coeffs(1, n);
        for (std::size_t j = 0; j < n; ++j) {
            coeffs(0, j) = ((mask >> j) & 1u) ? 1.0 : 0.0;
        }
        if (classify_map(LinMap(dom, cod, std::move(coeffs))).is_miu()) {
            ++count;
        }
    }
    return count;
}

}  // namespace gelfand
