// Copyright 2026 The povmcoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POVMCOH_POVM_HPP
#define POVMCOH_POVM_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "povmcoh/linalg.hpp"

namespace povmcoh {

inline constexpr double kDefaultValidationTol = 1e-8;
/// Probabilities at or above this (negative) value are clamped to zero.
inline constexpr double kProbabilityClampTol = 1e-10;

/// An n-outcome measurement on a d-dimensional system, stored as its list of
/// Hermitian components A_a. The incoherent basis is always the index basis
/// of the stored matrices.
///
/// Construction checks shapes only; PSD-ness and completeness are reported by
/// `validate` and enforced by `Povm::checked`. This split lets tomography hand
/// back shot-noise reconstructions that are complete but slightly non-PSD
/// without hiding the violation.
class Povm {
public:
    Povm() = default;
    explicit Povm(std::vector<HermitianMatrix> components) : components_(std::move(components)) {
        if (components_.empty()) {
            throw DimensionError("a POVM needs at least one component");
        }
        const std::size_t d = components_.front().dim();
        if (d == 0) {
            throw DimensionError("POVM dimension must be >= 1");
        }
        for (std::size_t a = 0; a < components_.size(); ++a) {
            if (components_[a].dim() != d) {
                throw DimensionError("POVM component " + std::to_string(a) + " has dim " +
                                     std::to_string(components_[a].dim()) + ", expected " + std::to_string(d));
            }
        }
    }

    /// Builds and throws ValidationError unless PSD and complete within tol.
    static Povm checked(std::vector<HermitianMatrix> components, double tol = kDefaultValidationTol);

    std::size_t dim() const noexcept { return components_.empty() ? 0 : components_.front().dim(); }
    std::size_t outcomes() const noexcept { return components_.size(); }
    const HermitianMatrix &operator[](std::size_t a) const { return components_[a]; }
    const std::vector<HermitianMatrix> &components() const noexcept { return components_; }

    /// alpha_{ij|a} = <i|A_a|j>
    Complex element(std::size_t a, std::size_t i, std::size_t j) const { return components_[a](i, j); }

    friend bool operator==(const Povm &, const Povm &) = default;

private:
    std::vector<HermitianMatrix> components_;
};

struct ValidationReport {
    bool valid = false;
    /// eig_min of each component (negative means a PSD violation).
    std::vector<double> psd_margins;
    /// max-abs entry of sum_a A_a - I.
    double completeness_residual = 0.0;
    double tolerance = 0.0;
};

inline ValidationReport validate(const Povm &p, double tol = kDefaultValidationTol) {
    ValidationReport r;
    r.tolerance = tol;
    const std::size_t d = p.dim();
    Matrix sum(d);
    bool ok = true;
    for (const auto &c : p.components()) {
        const double m = eig_min(c);
        r.psd_margins.push_back(m);
        ok = ok && m >= -tol;
        sum += c.matrix();
    }
    sum -= Matrix::identity(d);
    r.completeness_residual = sum.max_abs();
    r.valid = ok && r.completeness_residual <= tol;
    return r;
}

inline Povm Povm::checked(std::vector<HermitianMatrix> components, double tol) {
    Povm p(std::move(components));
    const auto rep = validate(p, tol);
    if (!rep.valid) {
        for (std::size_t a = 0; a < rep.psd_margins.size(); ++a) {
            if (rep.psd_margins[a] < -tol) {
                throw ValidationError("POVM component " + std::to_string(a) + " is not PSD (eig_min " +
                                          std::to_string(rep.psd_margins[a]) + ")",
                                      a, -rep.psd_margins[a]);
            }
        }
        throw ValidationError("POVM completeness residual " + std::to_string(rep.completeness_residual) +
                                  " exceeds tolerance",
                              0, rep.completeness_residual);
    }
    return p;
}

/// Unit-trace PSD matrix.
class DensityMatrix {
public:
    DensityMatrix() = default;
    explicit DensityMatrix(HermitianMatrix m, double tol = kDefaultValidationTol) : m_(std::move(m)) {
        const double tr = m_.trace();
        if (std::abs(tr - 1.0) > 1e-9) {
            throw ValidationError("density matrix trace " + std::to_string(tr) + " != 1", 0, std::abs(tr - 1.0));
        }
        const double em = eig_min(m_);
        if (em < -tol) {
            throw ValidationError("density matrix is not PSD", 0, -em);
        }
    }

    /// |psi><psi| for a (not necessarily normalized) vector.
    static DensityMatrix pure(std::vector<Complex> psi) {
        double n = 0.0;
        for (const auto &z : psi) {
            n += std::norm(z);
        }
        if (n <= 0.0) {
            throw ValidationError("zero state vector");
        }
        const double s = 1.0 / std::sqrt(n);
        for (auto &z : psi) {
            z *= s;
        }
        return DensityMatrix(HermitianMatrix::projector(psi));
    }

    static DensityMatrix basis(std::size_t dim, std::size_t k) {
        std::vector<Complex> v(dim);
        v.at(k) = 1.0;
        return pure(std::move(v));
    }

    std::size_t dim() const noexcept { return m_.dim(); }
    const HermitianMatrix &matrix() const noexcept { return m_; }
    const Complex &operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

private:
    HermitianMatrix m_;
};

/// p(a) for a = 0..n-1.
struct OutcomeDistribution {
    std::vector<double> probs;

    std::size_t size() const noexcept { return probs.size(); }
    double operator[](std::size_t a) const { return probs[a]; }
};

inline bool is_incoherent(const Povm &p, double tol = kDefaultValidationTol) {
    for (const auto &c : p.components()) {
        for (std::size_t i = 0; i < c.dim(); ++i) {
            for (std::size_t j = 0; j < c.dim(); ++j) {
                if (i != j && std::abs(c(i, j)) > tol) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Total dephasing: keep only the diagonal of each component.
inline HermitianMatrix dephase(const HermitianMatrix &m) { return HermitianMatrix::diagonal(m.diagonal_values()); }

inline Povm dephase_measurement(const Povm &p) {
    std::vector<HermitianMatrix> out;
    out.reserve(p.outcomes());
    for (const auto &c : p.components()) {
        out.push_back(dephase(c));
    }
    return Povm(std::move(out));
}

inline DensityMatrix dephase_state(const DensityMatrix &rho) { return DensityMatrix(dephase(rho.matrix())); }

/// Born rule p(a) = Tr[rho A_a]; small negative round-off is clamped to 0,
/// larger negativity raises ValidationError.
inline OutcomeDistribution born_distribution(const Povm &p, const DensityMatrix &rho) {
    if (p.dim() != rho.dim()) {
        throw DimensionError("born_distribution: POVM dim " + std::to_string(p.dim()) + " vs state dim " +
                             std::to_string(rho.dim()));
    }
    OutcomeDistribution out;
    out.probs.reserve(p.outcomes());
    for (std::size_t a = 0; a < p.outcomes(); ++a) {
        double v = p[a].inner(rho.matrix());
        if (v < 0.0) {
            if (v < -kProbabilityClampTol) {
                throw ValidationError("negative probability " + std::to_string(v) + " for outcome " +
                                          std::to_string(a),
                                      a, -v);
            }
            v = 0.0;
        } else if (v > 1.0) {
            if (v > 1.0 + kProbabilityClampTol) {
                throw ValidationError("probability exceeds one for outcome " + std::to_string(a), a, v - 1.0);
            }
            v = 1.0;
        }
        out.probs.push_back(v);
    }
    return out;
}

/// Outcome-wise convex combination w*A + (1-w)*B.
inline Povm mix(const Povm &a, const Povm &b, double w) {
    if (a.dim() != b.dim() || a.outcomes() != b.outcomes()) {
        throw DimensionError("mix: POVM shapes differ");
    }
    std::vector<HermitianMatrix> out;
    for (std::size_t k = 0; k < a.outcomes(); ++k) {
        out.push_back(w * a[k] + (1.0 - w) * b[k]);
    }
    return Povm(std::move(out));
}

// --- random generators (deterministic for a fixed seed) ---

inline std::vector<Complex> random_state_vector(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<Complex> v(dim);
    double n = 0.0;
    for (auto &z : v) {
        z = Complex(g(rng), g(rng));
        n += std::norm(z);
    }
    for (auto &z : v) {
        z /= std::sqrt(n);
    }
    return v;
}

/// Ginibre matrix G with standard complex normal entries.
inline Matrix random_ginibre(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            m(i, j) = Complex(g(rng), g(rng));
        }
    }
    return m;
}

/// Hilbert-Schmidt random density matrix G G^dagger / Tr.
inline DensityMatrix random_density_matrix(std::size_t dim, std::mt19937_64 &rng) {
    const Matrix g = random_ginibre(dim, rng);
    HermitianMatrix h = HermitianMatrix::hermitian_part(g * g.adjoint());
    h *= 1.0 / h.trace();
    return DensityMatrix(h);
}

/// Random POVM B_a = S^{-1/2} P_a S^{-1/2} with P_a = G_a G_a^dagger and
/// S = sum_a P_a.
inline Povm random_povm(std::size_t dim, std::size_t outcomes, std::uint64_t seed) {
    if (dim == 0 || outcomes == 0) {
        throw DimensionError("random_povm needs dim >= 1 and outcomes >= 1");
    }
    std::mt19937_64 rng(seed);
    std::vector<HermitianMatrix> p;
    HermitianMatrix s(dim);
    for (std::size_t a = 0; a < outcomes; ++a) {
        const Matrix g = random_ginibre(dim, rng);
        p.push_back(HermitianMatrix::hermitian_part(g * g.adjoint()));
        s += p.back();
    }
    const auto es = eigh(s);
    const Matrix s_inv_half = spectral_map(es, [](double x) { return 1.0 / std::sqrt(x); }).matrix();
    std::vector<HermitianMatrix> out;
    HermitianMatrix acc(dim);
    for (std::size_t a = 0; a + 1 < outcomes; ++a) {
        out.push_back(HermitianMatrix::hermitian_part(s_inv_half * (p[a].matrix() * s_inv_half)));
        acc += out.back();
    }
    // Last component closes completeness exactly.
    out.push_back(HermitianMatrix::identity(dim) - acc);
    return Povm(std::move(out));
}

/// Random incoherent POVM: per basis index a random conditional distribution
/// over outcomes.
inline Povm random_incoherent_povm(std::size_t dim, std::size_t outcomes, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> e(1.0);
    std::vector<std::vector<double>> diag(outcomes, std::vector<double>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        double s = 0.0;
        for (std::size_t a = 0; a < outcomes; ++a) {
            diag[a][i] = e(rng);
            s += diag[a][i];
        }
        for (std::size_t a = 0; a < outcomes; ++a) {
            diag[a][i] /= s;
        }
    }
    std::vector<HermitianMatrix> out;
    for (const auto &dv : diag) {
        out.push_back(HermitianMatrix::diagonal(dv));
    }
    return Povm(std::move(out));
}

} // namespace povmcoh

#endif // POVMCOH_POVM_HPP
