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

#ifndef POVMCOH_ROBUSTNESS_HPP
#define POVMCOH_ROBUSTNESS_HPP

// Robustness of measurement coherence
//
//   R(A) = min { s : (A + s M) / (1 + s) incoherent, M a POVM }
//
// solved as the semidefinite program
//
//   primal:  minimize  max_i sum_a (D_a)_ii - 1
//            over diagonal D_a with D_a - A_a >= 0
//   dual:    maximize  sum_a Tr[Z_a A_a] - 1
//            over Z_a >= 0 with diag(Z_a) = sigma for all a, Tr sigma = 1.
//
// The mixing measurement is recovered as M_a = (D_a - A_a) / R.
//
// Iterates come from a dual alternating-direction augmented Lagrangian
// method on the standard form of the dual program. Every reported number is
// backed by an exactly feasible primal point and an exactly feasible dual
// point built from the iterates, so `duality_gap` is a certificate, not a
// residual estimate.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "povmcoh/linalg.hpp"
#include "povmcoh/monotones.hpp"
#include "povmcoh/povm.hpp"

namespace povmcoh {

struct RobustnessProblem {
    Povm povm;
    double tolerance = 1e-7;
    int max_iterations = 50000;
    /// 0 selects the deterministic default start; other values randomize the
    /// initial dual iterate.
    std::uint64_t seed = 0;
};

enum class SdpStatus { optimal, max_iter, infeasible };

inline std::string to_string(SdpStatus s) {
    switch (s) {
    case SdpStatus::optimal:
        return "optimal";
    case SdpStatus::max_iter:
        return "max_iter";
    case SdpStatus::infeasible:
        return "infeasible";
    }
    return "unknown";
}

/// Feasible point of the dual program and its objective.
struct DualCertificate {
    std::vector<HermitianMatrix> z;
    std::vector<double> sigma;
    double objective = 0.0;
};

struct SdpSolution {
    /// Certified upper bound on R (the primal objective at primal_diagonals).
    double value = 0.0;
    /// Certified lower bound on R (the dual objective at dual_matrices).
    double dual_value = 0.0;
    double duality_gap = 0.0;
    SdpStatus status = SdpStatus::max_iter;
    int iterations = 0;
    /// diag(D_a), rows summing to 1 + value.
    std::vector<std::vector<double>> primal_diagonals;
    std::vector<HermitianMatrix> dual_matrices;
    std::vector<double> sigma;
    /// (D_a - A_a) / value, present when value exceeds the tolerance.
    std::optional<Povm> mixing_povm;
};

/// sum_a Tr[Z_a A_a] - 1
inline double dual_objective(const Povm &p, const std::vector<HermitianMatrix> &z) {
    double s = -1.0;
    for (std::size_t a = 0; a < p.outcomes(); ++a) {
        s += z[a].inner(p[a]);
    }
    return s;
}

/// max_i sum_a D_a(i) - 1
inline double primal_objective(const std::vector<std::vector<double>> &diagonals) {
    double m = -kInf;
    for (std::size_t i = 0; i < diagonals.front().size(); ++i) {
        double s = 0.0;
        for (const auto &dg : diagonals) {
            s += dg[i];
        }
        m = std::max(m, s);
    }
    return m - 1.0;
}

/// Largest violation of the dual constraints (PSD, common diagonal, unit
/// trace); zero for an exactly feasible point.
inline double dual_infeasibility(const std::vector<HermitianMatrix> &z, const std::vector<double> &sigma) {
    double v = 0.0;
    double tr = 0.0;
    for (double s : sigma) {
        tr += s;
        v = std::max(v, -s);
    }
    v = std::max(v, std::abs(tr - 1.0));
    for (const auto &za : z) {
        v = std::max(v, -eig_min(za));
        for (std::size_t i = 0; i < sigma.size(); ++i) {
            v = std::max(v, std::abs(za(i, i).real() - sigma[i]));
        }
    }
    return v;
}

/// Largest violation of D_a - A_a >= 0.
inline double primal_infeasibility(const Povm &p, const std::vector<std::vector<double>> &diagonals) {
    double v = 0.0;
    for (std::size_t a = 0; a < p.outcomes(); ++a) {
        v = std::max(v, -eig_min(HermitianMatrix::diagonal(diagonals[a]) - p[a]));
    }
    return v;
}

/// Dual point Z_a = |i,j,theta_a><i,j,theta_a| with
/// |i,j,theta> = (|i> + e^{i theta}|j>)/sqrt2 and theta_a = -arg <j|A_a|i>.
/// Its objective equals Omega(i,j) = sum_a |<i|A_a|j>|.
inline DualCertificate dual_witness_from_pair(const Povm &p, std::size_t i, std::size_t j) {
    const std::size_t d = p.dim();
    if (i >= d || j >= d || i >= j) {
        throw std::out_of_range("dual_witness_from_pair needs 0 <= i < j < d, got (" + std::to_string(i) + "," +
                                std::to_string(j) + ") for d = " + std::to_string(d));
    }
    DualCertificate c;
    c.sigma.assign(d, 0.0);
    c.sigma[i] = 0.5;
    c.sigma[j] = 0.5;
    for (std::size_t a = 0; a < p.outcomes(); ++a) {
        const Complex lk = p[a](j, i);
        const double theta = std::abs(lk) > 0.0 ? -std::arg(lk) : 0.0;
        std::vector<Complex> v(d);
        v[i] = std::numbers::sqrt2 / 2.0;
        v[j] = std::polar(std::numbers::sqrt2 / 2.0, theta);
        c.z.push_back(HermitianMatrix::projector(v));
    }
    c.objective = dual_objective(p, c.z);
    return c;
}

namespace detail {

/// Map approximately-feasible PSD blocks onto the exact dual feasible set:
/// pick sigma from the block diagonals, then rescale each block by the
/// congruence S_a Z_a S_a with S_a = diag(sqrt(sigma_i / (Z_a)_ii)).
inline DualCertificate polish_dual(const Povm &p, const std::vector<HermitianMatrix> &blocks) {
    const std::size_t d = p.dim();
    const std::size_t n = p.outcomes();
    std::vector<HermitianMatrix> z;
    z.reserve(n);
    std::vector<double> sigma(d, 0.0);
    for (const auto &b : blocks) {
        z.push_back(psd_part(b));
        for (std::size_t i = 0; i < d; ++i) {
            sigma[i] += z.back()(i, i).real() / static_cast<double>(n);
        }
    }
    double tr = 0.0;
    for (auto &s : sigma) {
        s = std::max(s, 0.0);
        tr += s;
    }
    if (!(tr > 1e-300)) {
        sigma.assign(d, 1.0 / static_cast<double>(d));
    } else {
        for (auto &s : sigma) {
            s /= tr;
        }
    }
    DualCertificate c;
    c.sigma = sigma;
    for (auto &za : z) {
        std::vector<double> scale(d);
        for (std::size_t i = 0; i < d; ++i) {
            const double zi = za(i, i).real();
            if (zi > 1e-300 && sigma[i] > 0.0) {
                scale[i] = std::sqrt(sigma[i] / zi);
            } else {
                scale[i] = 0.0;
            }
        }
        Matrix m(d);
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t s = 0; s < d; ++s) {
                m(r, s) = scale[r] * za(r, s) * scale[s];
            }
            // Exactly sigma, including rows whose block diagonal vanished.
            m(r, r) = sigma[r];
        }
        c.z.push_back(HermitianMatrix::hermitian_part(m));
    }
    c.objective = dual_objective(p, c.z);
    return c;
}

/// Raise each D_a by its PSD violation, then top up row sums so every row
/// sums to 1 + value. Returns the certified primal objective.
inline double polish_primal(const Povm &p, std::vector<std::vector<double>> &diagonals) {
    const std::size_t d = p.dim();
    for (std::size_t a = 0; a < p.outcomes(); ++a) {
        // Shift by the violation plus a few ulps of the operator scale so the
        // polished point is feasible despite eigen-solver round-off.
        const double em = eig_min(HermitianMatrix::diagonal(diagonals[a]) - p[a]);
        const double guard = 1e-14 * (1.0 + p[a].max_abs());
        const double shift = em < guard ? guard - em : 0.0;
        for (auto &x : diagonals[a]) {
            x += shift;
        }
    }
    const double value = primal_objective(diagonals);
    for (std::size_t i = 0; i < d; ++i) {
        double s = 0.0;
        for (const auto &dg : diagonals) {
            s += dg[i];
        }
        diagonals[0][i] += (1.0 + value) - s;
    }
    return value;
}

/// Diagonally dominant primal point: D_a(i) = A_a(i,i) + sum_{j != i} |A_a(i,j)|.
/// Feasible by Gershgorin; its objective never exceeds C_l1 / 2.
inline std::vector<std::vector<double>> gershgorin_primal(const Povm &p) {
    std::vector<std::vector<double>> out;
    for (const auto &c : p.components()) {
        std::vector<double> dg(p.dim());
        for (std::size_t i = 0; i < p.dim(); ++i) {
            dg[i] = c(i, i).real();
            for (std::size_t j = 0; j < p.dim(); ++j) {
                if (j != i) {
                    dg[i] += std::abs(c(i, j));
                }
            }
        }
        out.push_back(std::move(dg));
    }
    return out;
}

/// Dense standard-form data for the dual program:
///   min <C, X>  s.t.  A(X) = b,  X = (Z_0..Z_{n-1}, sigma) in PSD^n x R^d_+
/// with constraints (Z_a)_ii - sigma_i = 0 and sum_i sigma_i = 1.
class DualAdmm {
public:
    DualAdmm(const Povm &p, std::uint64_t seed)
        : p_(p), d_(p.dim()), n_(p.outcomes()), m_(n_ * d_ + 1), normal_(build_normal()) {
        const double start = 1.0 / static_cast<double>(d_);
        for (std::size_t a = 0; a < n_; ++a) {
            x_.push_back(HermitianMatrix::identity(d_) * start);
            s_.push_back(HermitianMatrix(d_));
        }
        xs_.assign(d_, start);
        ss_.assign(d_, 0.0);
        if (seed != 0) {
            std::mt19937_64 rng(seed);
            for (auto &xa : x_) {
                const Matrix g = random_ginibre(d_, rng);
                HermitianMatrix h = HermitianMatrix::hermitian_part(g * g.adjoint());
                xa = h * (1.0 / h.trace() / static_cast<double>(d_) * 2.0);
            }
        }
        y_.assign(m_, 0.0);
        c_norm_ = 0.0;
        for (const auto &c : p_.components()) {
            c_norm_ += c.inner(c);
        }
        c_norm_ = std::sqrt(c_norm_);
    }

    void step(double rho) {
        // y = -(A A^*)^{-1} (mu (A(X) - b) + A(S - C))
        std::vector<double> rhs(m_, 0.0);
        for (std::size_t a = 0; a < n_; ++a) {
            for (std::size_t i = 0; i < d_; ++i) {
                const double ax = x_[a](i, i).real() - xs_[i];
                const double asc = (s_[a](i, i).real() + p_[a](i, i).real()) - ss_[i];
                rhs[a * d_ + i] = -(mu_ * ax + asc);
            }
        }
        double sx = 0.0;
        double ssum = 0.0;
        for (std::size_t i = 0; i < d_; ++i) {
            sx += xs_[i];
            ssum += ss_[i];
        }
        rhs[m_ - 1] = -(mu_ * (sx - 1.0) + ssum);
        y_ = normal_.solve(rhs);

        // V = C - A^*(y) - mu X; S = V_+; X <- (1-rho) X + rho (S - V) / mu
        for (std::size_t a = 0; a < n_; ++a) {
            HermitianMatrix v = -p_[a] - mu_ * x_[a];
            for (std::size_t i = 0; i < d_; ++i) {
                v.add_to_diagonal(i, -y_[a * d_ + i]);
            }
            const auto es = eigh(v);
            s_[a] = spectral_map(es, [](double x) { return x > 0.0 ? x : 0.0; });
            const HermitianMatrix neg = spectral_map(es, [](double x) { return x < 0.0 ? -x : 0.0; });
            x_[a] = (1.0 - rho) * x_[a] + (rho / mu_) * neg;
        }
        for (std::size_t i = 0; i < d_; ++i) {
            double ysum = 0.0;
            for (std::size_t a = 0; a < n_; ++a) {
                ysum += y_[a * d_ + i];
            }
            const double v = (ysum - y_[m_ - 1]) - mu_ * xs_[i];
            ss_[i] = std::max(v, 0.0);
            xs_[i] = (1.0 - rho) * xs_[i] + (rho / mu_) * std::max(-v, 0.0);
        }
    }

    /// Relative primal (A(X) = b) and dual (C - A^*y - S = 0) residuals.
    std::pair<double, double> residuals() const {
        double rp = 0.0;
        double sx = 0.0;
        for (std::size_t a = 0; a < n_; ++a) {
            for (std::size_t i = 0; i < d_; ++i) {
                const double r = x_[a](i, i).real() - xs_[i];
                rp += r * r;
            }
        }
        for (double x : xs_) {
            sx += x;
        }
        rp += (sx - 1.0) * (sx - 1.0);
        double rd = 0.0;
        for (std::size_t a = 0; a < n_; ++a) {
            HermitianMatrix r = -p_[a] - s_[a];
            for (std::size_t i = 0; i < d_; ++i) {
                r.add_to_diagonal(i, -y_[a * d_ + i]);
            }
            rd += r.inner(r);
        }
        for (std::size_t i = 0; i < d_; ++i) {
            double ysum = 0.0;
            for (std::size_t a = 0; a < n_; ++a) {
                ysum += y_[a * d_ + i];
            }
            const double r = (ysum - y_[m_ - 1]) - ss_[i];
            rd += r * r;
        }
        return {std::sqrt(rp) / 2.0, std::sqrt(rd) / (1.0 + c_norm_)};
    }

    void scale_mu(double f) { mu_ *= f; }

    const std::vector<HermitianMatrix> &z_blocks() const { return x_; }

    /// D_a = -diag(y_a)
    std::vector<std::vector<double>> primal_diagonals() const {
        std::vector<std::vector<double>> out(n_, std::vector<double>(d_));
        for (std::size_t a = 0; a < n_; ++a) {
            for (std::size_t i = 0; i < d_; ++i) {
                out[a][i] = -y_[a * d_ + i];
            }
        }
        return out;
    }

private:
    LuFactorization build_normal() const {
        RealMatrix aat(m_, m_);
        for (std::size_t a = 0; a < n_; ++a) {
            for (std::size_t i = 0; i < d_; ++i) {
                for (std::size_t b = 0; b < n_; ++b) {
                    aat(a * d_ + i, b * d_ + i) = (a == b ? 2.0 : 1.0);
                }
                aat(a * d_ + i, m_ - 1) = -1.0;
                aat(m_ - 1, a * d_ + i) = -1.0;
            }
        }
        aat(m_ - 1, m_ - 1) = static_cast<double>(d_);
        return LuFactorization(aat);
    }

    const Povm &p_;
    std::size_t d_;
    std::size_t n_;
    std::size_t m_;
    LuFactorization normal_;
    std::vector<HermitianMatrix> x_;
    std::vector<HermitianMatrix> s_;
    std::vector<double> xs_;
    std::vector<double> ss_;
    std::vector<double> y_;
    double mu_ = 1.0;
    double c_norm_ = 0.0;
};

} // namespace detail

/// Solve the robustness SDP to a certified duality gap <= tolerance.
inline SdpSolution robustness(const RobustnessProblem &prob) {
    const Povm &p = prob.povm;
    const std::size_t d = p.dim();
    SdpSolution sol;

    // Closed-form starting certificates: the argmax-pair dual witness and
    // the Gershgorin primal point.
    const LinfResult linf = c_linf(p);
    DualCertificate best_dual;
    if (d >= 2) {
        best_dual = dual_witness_from_pair(p, linf.i, linf.j);
    } else {
        best_dual.sigma = {1.0};
        for (std::size_t a = 0; a < p.outcomes(); ++a) {
            best_dual.z.push_back(HermitianMatrix::diagonal({1.0}));
        }
        best_dual.objective = dual_objective(p, best_dual.z);
    }
    auto best_primal = detail::gershgorin_primal(p);
    double upper = detail::polish_primal(p, best_primal);
    double lower = best_dual.objective;

    int it = 0;
    if (upper - lower > prob.tolerance) {
        detail::DualAdmm admm(p, prob.seed);
        const double rho = 1.6;
        for (it = 1; it <= prob.max_iterations; ++it) {
            admm.step(rho);
            if (it % 10 == 0) {
                const auto [rp, rd] = admm.residuals();
                if (rp > 4.0 * rd) {
                    admm.scale_mu(1.3);
                } else if (rd > 4.0 * rp) {
                    admm.scale_mu(1.0 / 1.3);
                }
            }
            if (it % 20 == 0 || it == prob.max_iterations) {
                auto dg = admm.primal_diagonals();
                const double up = detail::polish_primal(p, dg);
                if (up < upper) {
                    upper = up;
                    best_primal = std::move(dg);
                }
                auto dual = detail::polish_dual(p, admm.z_blocks());
                if (dual.objective > lower) {
                    lower = dual.objective;
                    best_dual = std::move(dual);
                }
                if (upper - lower <= prob.tolerance) {
                    break;
                }
            }
        }
        it = std::min(it, prob.max_iterations);
    }

    sol.iterations = it;
    sol.value = std::max(0.0, upper);
    sol.dual_value = lower;
    sol.duality_gap = std::max(0.0, upper - lower);
    sol.primal_diagonals = std::move(best_primal);
    sol.dual_matrices = std::move(best_dual.z);
    sol.sigma = std::move(best_dual.sigma);
    if (!std::isfinite(upper) || !std::isfinite(lower)) {
        sol.status = SdpStatus::infeasible;
    } else {
        sol.status = sol.duality_gap <= prob.tolerance ? SdpStatus::optimal : SdpStatus::max_iter;
    }
    if (sol.value > prob.tolerance) {
        std::vector<HermitianMatrix> m;
        for (std::size_t a = 0; a < p.outcomes(); ++a) {
            m.push_back((HermitianMatrix::diagonal(sol.primal_diagonals[a]) - p[a]) * (1.0 / upper));
        }
        sol.mixing_povm = Povm(std::move(m));
    }
    return sol;
}

inline SdpSolution robustness(const Povm &p, double tolerance = 1e-7, int max_iterations = 50000) {
    return robustness(RobustnessProblem{p, tolerance, max_iterations, 0});
}

/// For qubits R = C_linf = C_l1 / 2.
inline double qubit_robustness_closed_form(const Povm &p) {
    if (p.dim() != 2) {
        throw DimensionError("qubit_robustness_closed_form requires d = 2, got d = " + std::to_string(p.dim()));
    }
    return c_linf(p).value;
}

struct SandwichReport {
    double c_linf = 0.0;
    double robustness = 0.0;
    double c_l1_half = 0.0;
    double duality_gap = 0.0;
    SdpStatus status = SdpStatus::max_iter;
    bool ok = false;
};

/// Checks C_linf - tol <= R <= C_l1/2 + tol.
inline SandwichReport sandwich_check(const Povm &p, double tol = 1e-6, double sdp_tol = 1e-7) {
    SandwichReport r;
    r.c_linf = c_linf(p).value;
    r.c_l1_half = 0.5 * c_l1(p);
    const auto sol = robustness(p, sdp_tol);
    r.robustness = sol.value;
    r.duality_gap = sol.duality_gap;
    r.status = sol.status;
    r.ok = sol.status == SdpStatus::optimal && r.c_linf - tol <= r.robustness && r.robustness <= r.c_l1_half + tol;
    return r;
}

} // namespace povmcoh

#endif // POVMCOH_ROBUSTNESS_HPP
