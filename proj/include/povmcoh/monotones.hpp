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

#ifndef POVMCOH_MONOTONES_HPP
#define POVMCOH_MONOTONES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "povmcoh/linalg.hpp"
#include "povmcoh/povm.hpp"

namespace povmcoh {

// ---------------------------------------------------------------------------
// Closed-form monotones
// ---------------------------------------------------------------------------

/// Omega(i,j) = sum_a |<i|A_a|j>|. Symmetric, unit diagonal for a complete
/// POVM, identity iff the POVM is incoherent.
class OmegaMatrix {
public:
    explicit OmegaMatrix(std::size_t dim) : dim_(dim), v_(dim * dim, 0.0) {}
    std::size_t dim() const noexcept { return dim_; }
    double &operator()(std::size_t i, std::size_t j) { return v_[i * dim_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return v_[i * dim_ + j]; }

private:
    std::size_t dim_;
    std::vector<double> v_;
};

inline OmegaMatrix omega(const Povm &p) {
    OmegaMatrix om(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) {
        for (std::size_t j = 0; j < p.dim(); ++j) {
            double s = 0.0;
            for (const auto &c : p.components()) {
                s += std::abs(c(i, j));
            }
            om(i, j) = s;
        }
    }
    return om;
}

struct LinfResult {
    double value = 0.0;
    std::size_t i = 0;
    std::size_t j = 0;
};

/// max_{i<j} Omega(i,j); ties go to the lexicographically smallest pair.
/// For d = 1 the value is 0 with pair (0,0).
inline LinfResult c_linf(const Povm &p) {
    const OmegaMatrix om = omega(p);
    LinfResult r;
    bool first = true;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        for (std::size_t j = i + 1; j < p.dim(); ++j) {
            if (first || om(i, j) > r.value) {
                r = {om(i, j), i, j};
                first = false;
            }
        }
    }
    return r;
}

/// sum_a sum_{i != j} |<i|A_a|j>|. Not a monotone; C_l1/2 upper-bounds R_C.
inline double c_l1(const Povm &p) {
    double s = 0.0;
    for (const auto &c : p.components()) {
        for (std::size_t i = 0; i < p.dim(); ++i) {
            for (std::size_t j = 0; j < p.dim(); ++j) {
                if (i != j) {
                    s += std::abs(c(i, j));
                }
            }
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Statistical distances
// ---------------------------------------------------------------------------

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Kullback-Leibler divergence in bits; 0 log 0 = 0, p > 0 = q gives +inf.
inline double relative_entropy(const std::vector<double> &p, const std::vector<double> &q) {
    if (p.size() != q.size()) {
        throw DimensionError("relative_entropy: distributions differ in length");
    }
    double s = 0.0;
    for (std::size_t a = 0; a < p.size(); ++a) {
        if (p[a] <= 0.0) {
            continue;
        }
        if (q[a] <= 0.0) {
            return kInf;
        }
        s += p[a] * std::log2(p[a] / q[a]);
    }
    return s;
}

inline double relative_entropy(const OutcomeDistribution &p, const OutcomeDistribution &q) {
    return relative_entropy(p.probs, q.probs);
}

inline double total_variation(const std::vector<double> &p, const std::vector<double> &q) {
    if (p.size() != q.size()) {
        throw DimensionError("total_variation: distributions differ in length");
    }
    double s = 0.0;
    for (std::size_t a = 0; a < p.size(); ++a) {
        s += std::abs(p[a] - q[a]);
    }
    return 0.5 * s;
}

/// A convex statistical distance D(p, q) usable in the bracket estimator.
///
/// `smoothed` is a differentiable surrogate in q used by the inner convex
/// minimization; it must satisfy D <= smoothed <= D + smoothing_bias(n).
/// `gradient` returns (sub)gradients in p and q for the pure-state ascent.
class StatisticalDistance {
public:
    virtual ~StatisticalDistance() = default;
    virtual std::string name() const = 0;
    virtual double value(const std::vector<double> &p, const std::vector<double> &q) const = 0;
    virtual double smoothed(const std::vector<double> &p, const std::vector<double> &q,
                            std::vector<double> &grad_q) const = 0;
    virtual double smoothing_bias(std::size_t n) const = 0;
    virtual void gradient(const std::vector<double> &p, const std::vector<double> &q, std::vector<double> &grad_p,
                          std::vector<double> &grad_q) const = 0;
};

class RelativeEntropyDistance final : public StatisticalDistance {
public:
    std::string name() const override { return "relative-entropy"; }
    double value(const std::vector<double> &p, const std::vector<double> &q) const override {
        return relative_entropy(p, q);
    }
    double smoothed(const std::vector<double> &p, const std::vector<double> &q,
                    std::vector<double> &grad_q) const override {
        grad_q.assign(q.size(), 0.0);
        double s = 0.0;
        for (std::size_t a = 0; a < p.size(); ++a) {
            if (p[a] <= 0.0) {
                continue;
            }
            if (q[a] <= 0.0) {
                return kInf;
            }
            s += p[a] * std::log2(p[a] / q[a]);
            grad_q[a] = -p[a] / (q[a] * std::numbers::ln2);
        }
        return s;
    }
    double smoothing_bias(std::size_t) const override { return 0.0; }
    void gradient(const std::vector<double> &p, const std::vector<double> &q, std::vector<double> &grad_p,
                  std::vector<double> &grad_q) const override {
        grad_p.assign(p.size(), 0.0);
        grad_q.assign(q.size(), 0.0);
        constexpr double floor = 1e-300;
        for (std::size_t a = 0; a < p.size(); ++a) {
            const double pa = std::max(p[a], floor);
            const double qa = std::max(q[a], floor);
            grad_p[a] = std::log2(pa / qa) + 1.0 / std::numbers::ln2;
            grad_q[a] = -p[a] / (qa * std::numbers::ln2);
        }
    }
};

/// (1/2) sum |p - q|; smoothed with (1/2) sum sqrt((p-q)^2 + eps^2).
class TotalVariationDistance final : public StatisticalDistance {
public:
    explicit TotalVariationDistance(double eps = 1e-6) : eps_(eps) {}
    std::string name() const override { return "total-variation"; }
    double value(const std::vector<double> &p, const std::vector<double> &q) const override {
        return total_variation(p, q);
    }
    double smoothed(const std::vector<double> &p, const std::vector<double> &q,
                    std::vector<double> &grad_q) const override {
        grad_q.assign(q.size(), 0.0);
        double s = 0.0;
        for (std::size_t a = 0; a < p.size(); ++a) {
            const double diff = p[a] - q[a];
            const double r = std::sqrt(diff * diff + eps_ * eps_);
            s += 0.5 * r;
            grad_q[a] = -0.5 * diff / r;
        }
        return s;
    }
    double smoothing_bias(std::size_t n) const override { return 0.5 * static_cast<double>(n) * eps_; }
    void gradient(const std::vector<double> &p, const std::vector<double> &q, std::vector<double> &grad_p,
                  std::vector<double> &grad_q) const override {
        grad_p.assign(p.size(), 0.0);
        grad_q.assign(q.size(), 0.0);
        for (std::size_t a = 0; a < p.size(); ++a) {
            const double sg = p[a] > q[a] ? 0.5 : (p[a] < q[a] ? -0.5 : 0.0);
            grad_p[a] = sg;
            grad_q[a] = -sg;
        }
    }

private:
    double eps_;
};

/// Registered names: "relative-entropy" (aliases "re", "cs") and
/// "total-variation" (alias "tv").
inline std::unique_ptr<StatisticalDistance> make_distance(const std::string &name) {
    if (name == "relative-entropy" || name == "re" || name == "cs") {
        return std::make_unique<RelativeEntropyDistance>();
    }
    if (name == "total-variation" || name == "tv") {
        return std::make_unique<TotalVariationDistance>();
    }
    throw std::invalid_argument("unknown statistical distance '" + name + "'");
}

// ---------------------------------------------------------------------------
// Bracket estimator for min_M sup_rho D(p_A, p_M)
// ---------------------------------------------------------------------------

struct BracketConfig {
    double gap_tol = 1e-3;
    int max_iterations = 200;
    int starts = 16;
    std::uint64_t seed = 0;
    /// Target Frank-Wolfe gap of the inner convex program.
    double inner_tol = 1e-7;
};

struct CsEstimate {
    double lower = 0.0;
    double upper = kInf;
    DensityMatrix witness_state;
    Povm witness_incoherent_povm;
    int iterations = 0;
    bool converged = false;
    std::string distance;
};

namespace detail {

/// Incoherent POVM M_a = diag(alpha(., a)); alpha rows are points of the
/// probability simplex over outcomes.
struct IncoherentParams {
    std::size_t dim = 0;
    std::size_t outcomes = 0;
    std::vector<double> alpha; // row-major dim x outcomes

    double &at(std::size_t i, std::size_t a) { return alpha[i * outcomes + a]; }
    double at(std::size_t i, std::size_t a) const { return alpha[i * outcomes + a]; }

    Povm to_povm() const {
        std::vector<HermitianMatrix> comps;
        for (std::size_t a = 0; a < outcomes; ++a) {
            std::vector<double> dg(dim);
            for (std::size_t i = 0; i < dim; ++i) {
                dg[i] = at(i, a);
            }
            comps.push_back(HermitianMatrix::diagonal(dg));
        }
        return Povm(std::move(comps));
    }

    static IncoherentParams from_povm(const Povm &m) {
        IncoherentParams p{m.dim(), m.outcomes(), std::vector<double>(m.dim() * m.outcomes())};
        for (std::size_t i = 0; i < m.dim(); ++i) {
            double s = 0.0;
            for (std::size_t a = 0; a < m.outcomes(); ++a) {
                p.at(i, a) = std::max(0.0, m[a](i, i).real());
                s += p.at(i, a);
            }
            for (std::size_t a = 0; a < m.outcomes(); ++a) {
                p.at(i, a) = s > 0.0 ? p.at(i, a) / s : 1.0 / static_cast<double>(m.outcomes());
            }
        }
        return p;
    }
};

/// Euclidean projection onto the probability simplex (sort-based).
inline void project_simplex(double *v, std::size_t n) {
    std::vector<double> u(v, v + n);
    std::sort(u.begin(), u.end(), std::greater<>());
    double css = 0.0;
    double theta = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        css += u[k];
        const double t = (css - 1.0) / static_cast<double>(k + 1);
        if (u[k] - t > 0.0) {
            theta = t;
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        v[k] = std::max(v[k] - theta, 0.0);
    }
}

/// A probe state reduced to what the inner problem needs: outcome
/// probabilities under A and the diagonal of rho.
struct StateData {
    std::vector<double> p;    // p_A(a)
    std::vector<double> diag; // rho_ii
};

inline std::vector<double> mixed_distribution(const IncoherentParams &m, const std::vector<double> &diag) {
    std::vector<double> q(m.outcomes, 0.0);
    for (std::size_t i = 0; i < m.dim; ++i) {
        for (std::size_t a = 0; a < m.outcomes; ++a) {
            q[a] += diag[i] * m.at(i, a);
        }
    }
    return q;
}

/// Log-sum-exp smoothed max over states of the smoothed distance, and its
/// gradient in alpha.
inline double smoothed_objective(const StatisticalDistance &dist, const std::vector<StateData> &states,
                                 const IncoherentParams &m, double tau, std::vector<double> *grad) {
    const std::size_t k = states.size();
    std::vector<double> vals(k);
    std::vector<std::vector<double>> gq(k);
    double vmax = -kInf;
    for (std::size_t s = 0; s < k; ++s) {
        const auto q = mixed_distribution(m, states[s].diag);
        vals[s] = dist.smoothed(states[s].p, q, gq[s]);
        if (!std::isfinite(vals[s])) {
            return kInf;
        }
        vmax = std::max(vmax, vals[s]);
    }
    double z = 0.0;
    for (std::size_t s = 0; s < k; ++s) {
        z += std::exp((vals[s] - vmax) / tau);
    }
    const double f = vmax + tau * std::log(z);
    if (grad != nullptr) {
        grad->assign(m.alpha.size(), 0.0);
        for (std::size_t s = 0; s < k; ++s) {
            const double w = std::exp((vals[s] - vmax) / tau) / z;
            if (w == 0.0) {
                continue;
            }
            for (std::size_t i = 0; i < m.dim; ++i) {
                const double r = states[s].diag[i];
                if (r == 0.0) {
                    continue;
                }
                for (std::size_t a = 0; a < m.outcomes; ++a) {
                    (*grad)[i * m.outcomes + a] += w * r * gq[s][a];
                }
            }
        }
    }
    return f;
}

inline double frank_wolfe_gap(const IncoherentParams &m, const std::vector<double> &grad) {
    double gap = 0.0;
    for (std::size_t i = 0; i < m.dim; ++i) {
        double dot = 0.0;
        double gmin = kInf;
        for (std::size_t a = 0; a < m.outcomes; ++a) {
            const double g = grad[i * m.outcomes + a];
            dot += g * m.at(i, a);
            gmin = std::min(gmin, g);
        }
        gap += dot - gmin;
    }
    return gap;
}

struct InnerResult {
    IncoherentParams m;
    double certified_lower = 0.0;
    double max_value = 0.0; // max over states of the exact distance at m
};

/// min over incoherent M of max over `states` of D, by accelerated projected
/// gradient on a log-sum-exp smoothing with decreasing temperature. The
/// returned lower bound is certified by the Frank-Wolfe gap plus the
/// smoothing biases.
inline InnerResult solve_inner(const StatisticalDistance &dist, const std::vector<StateData> &states,
                               IncoherentParams m, double target_gap, double inner_tol) {
    const double log_k = std::log(static_cast<double>(states.size()));
    const double tau_final = std::max(1e-9, 0.05 * target_gap / std::max(log_k, 1.0));
    std::vector<double> grad;
    double tau = std::max(0.1, tau_final);
    double lipschitz = 1.0;
    double lower = -kInf;
    for (;;) {
        const double stage_tol = tau == tau_final ? std::max(inner_tol, 0.05 * target_gap) : 10.0 * tau;
        IncoherentParams x = m;
        IncoherentParams y = m;
        IncoherentParams x_prev = m;
        double t = 1.0;
        double fx = smoothed_objective(dist, states, x, tau, nullptr);
        for (int it = 0; it < 4000; ++it) {
            double fy = smoothed_objective(dist, states, y, tau, &grad);
            if (!std::isfinite(fy)) {
                y = x;
                t = 1.0;
                fy = smoothed_objective(dist, states, y, tau, &grad);
            }
            if (it % 10 == 0) {
                const double gap = frank_wolfe_gap(y, grad);
                const double lb = fy - gap - tau * log_k - dist.smoothing_bias(m.outcomes);
                lower = tau == tau_final ? std::max(lower, lb) : lower;
                if (gap <= stage_tol) {
                    x = y;
                    fx = fy;
                    break;
                }
            }
            IncoherentParams cand = y;
            double fc = kInf;
            for (int bt = 0; bt < 60; ++bt) {
                for (std::size_t k = 0; k < cand.alpha.size(); ++k) {
                    cand.alpha[k] = y.alpha[k] - grad[k] / lipschitz;
                }
                for (std::size_t i = 0; i < cand.dim; ++i) {
                    project_simplex(&cand.alpha[i * cand.outcomes], cand.outcomes);
                }
                fc = smoothed_objective(dist, states, cand, tau, nullptr);
                double model = fy;
                double dist2 = 0.0;
                for (std::size_t k = 0; k < cand.alpha.size(); ++k) {
                    const double dk = cand.alpha[k] - y.alpha[k];
                    model += grad[k] * dk;
                    dist2 += dk * dk;
                }
                model += 0.5 * lipschitz * dist2;
                if (std::isfinite(fc) && fc <= model + 1e-15 * std::abs(model)) {
                    break;
                }
                lipschitz *= 2.0;
            }
            if (!std::isfinite(fc)) {
                break;
            }
            x_prev = x;
            x = cand;
            // Adaptive restart on objective increase.
            if (fc > fx) {
                t = 1.0;
                y = x;
                fx = fc;
                continue;
            }
            fx = fc;
            const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
            const double beta = (t - 1.0) / t_next;
            t = t_next;
            for (std::size_t k = 0; k < y.alpha.size(); ++k) {
                y.alpha[k] = x.alpha[k] + beta * (x.alpha[k] - x_prev.alpha[k]);
            }
            for (std::size_t i = 0; i < y.dim; ++i) {
                project_simplex(&y.alpha[i * y.outcomes], y.outcomes);
            }
            lipschitz = std::max(lipschitz * 0.9, 1e-8);
        }
        m = x;
        if (tau == tau_final) {
            const double f = smoothed_objective(dist, states, m, tau, &grad);
            if (std::isfinite(f)) {
                lower = std::max(lower, f - frank_wolfe_gap(m, grad) - tau * log_k - dist.smoothing_bias(m.outcomes));
            }
            break;
        }
        tau = std::max(tau * 0.1, tau_final);
    }
    InnerResult r{m, std::max(lower, 0.0), 0.0};
    for (const auto &s : states) {
        r.max_value = std::max(r.max_value, dist.value(s.p, mixed_distribution(m, s.diag)));
    }
    return r;
}

inline StateData state_data(const Povm &p, const std::vector<Complex> &psi) {
    StateData s;
    for (const auto &c : p.components()) {
        s.p.push_back(std::max(0.0, c.expectation(psi)));
    }
    for (const auto &z : psi) {
        s.diag.push_back(std::norm(z));
    }
    return s;
}

struct AscentResult {
    double value = 0.0;
    std::vector<Complex> state;
};

/// Local maximization of rho -> D(p_A(rho), p_M(rho)) over pure states. Each
/// step moves to the top eigenvector of the linearization; convexity of D in
/// rho makes every accepted step non-decreasing.
inline AscentResult ascend_pure_state(const StatisticalDistance &dist, const Povm &a, const Povm &m,
                                      std::vector<Complex> psi) {
    auto eval = [&](const std::vector<Complex> &v, std::vector<double> &pa, std::vector<double> &pm) {
        pa.clear();
        pm.clear();
        for (std::size_t k = 0; k < a.outcomes(); ++k) {
            pa.push_back(std::max(0.0, a[k].expectation(v)));
            pm.push_back(std::max(0.0, m[k].expectation(v)));
        }
        return dist.value(pa, pm);
    };
    std::vector<double> pa;
    std::vector<double> pm;
    std::vector<double> gp;
    std::vector<double> gq;
    double f = eval(psi, pa, pm);
    AscentResult best{f, psi};
    for (int it = 0; it < 200 && std::isfinite(f); ++it) {
        dist.gradient(pa, pm, gp, gq);
        HermitianMatrix g(a.dim());
        for (std::size_t k = 0; k < a.outcomes(); ++k) {
            g += gp[k] * a[k];
            g += gq[k] * m[k];
        }
        const auto es = eigh(g);
        const double current = g.expectation(psi);
        const double gain = es.values.back() - current;
        if (!(gain > 1e-13 * (1.0 + std::abs(current)))) {
            break;
        }
        const auto next = es.vector(a.dim() - 1);
        std::vector<double> pa2;
        std::vector<double> pm2;
        const double f2 = eval(next, pa2, pm2);
        if (!(f2 > f + 1e-15)) {
            break;
        }
        psi = next;
        f = f2;
        pa = std::move(pa2);
        pm = std::move(pm2);
        best = {f, psi};
    }
    return best;
}

/// Seed states: basis vectors and the (|i> + e^{i k pi/2}|j>)/sqrt2 family.
inline std::vector<std::vector<Complex>> seed_states(std::size_t d) {
    std::vector<std::vector<Complex>> out;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Complex> v(d);
        v[i] = 1.0;
        out.push_back(v);
    }
    const Complex phases[4] = {1.0, Complex(0.0, 1.0), -1.0, Complex(0.0, -1.0)};
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            for (const auto &ph : phases) {
                std::vector<Complex> v(d);
                v[i] = std::numbers::sqrt2 / 2.0;
                v[j] = ph * std::numbers::sqrt2 / 2.0;
                out.push_back(v);
            }
        }
    }
    return out;
}

} // namespace detail

/// Bracket [lower, upper] for min_{M incoherent} sup_rho D(p_A, p_M).
///
/// lower: certified minimum of the max of D over a finite, adaptively grown
/// set of pure states. upper: supremum over pure states (multi-start local
/// ascent) of D at the best incoherent M found so far; it is a true upper
/// bound whenever the ascent finds the global supremum.
inline CsEstimate estimate_distance_monotone(const Povm &p, const StatisticalDistance &dist,
                                             const BracketConfig &cfg = {}) {
    const std::size_t d = p.dim();
    CsEstimate est;
    est.distance = dist.name();
    std::mt19937_64 rng(cfg.seed);

    std::vector<std::vector<Complex>> state_vectors = detail::seed_states(d);
    std::vector<detail::StateData> states;
    for (const auto &v : state_vectors) {
        states.push_back(detail::state_data(p, v));
    }

    // Random starts are drawn once so every outer iteration probes the same
    // directions plus the current witness.
    std::vector<std::vector<Complex>> starts;
    for (int s = 0; s < cfg.starts; ++s) {
        starts.push_back(random_state_vector(d, rng));
    }

    auto sup_over_states = [&](const Povm &m, std::vector<Complex> &arg) {
        double best = -kInf;
        std::vector<std::vector<Complex>> candidates = starts;
        // Seeds that are already in the cut set are evaluated too.
        candidates.insert(candidates.end(), state_vectors.begin(), state_vectors.end());
        for (const auto &c : candidates) {
            const auto r = detail::ascend_pure_state(dist, p, m, c);
            if (r.value > best) {
                best = r.value;
                arg = r.state;
            }
            if (!std::isfinite(best)) {
                break;
            }
        }
        return best;
    };

    if (is_incoherent(p, 0.0)) {
        est.upper = 0.0;
        est.converged = true;
        est.witness_incoherent_povm = p;
        est.witness_state = DensityMatrix::pure(state_vectors.front());
        return est;
    }

    // Initial candidate: the dephased measurement.
    detail::IncoherentParams m_best = detail::IncoherentParams::from_povm(dephase_measurement(p));
    std::vector<Complex> witness;
    est.upper = sup_over_states(m_best.to_povm(), witness);
    est.lower = 0.0;
    std::vector<Complex> best_witness = witness;

    detail::IncoherentParams m_cur = m_best;
    for (int it = 0; it < cfg.max_iterations && est.upper - est.lower > cfg.gap_tol; ++it) {
        est.iterations = it + 1;
        // Start the inner solve from an interior point to keep D finite.
        for (auto &x : m_cur.alpha) {
            x = 0.9 * x + 0.1 / static_cast<double>(m_cur.outcomes);
        }
        const auto inner = detail::solve_inner(dist, states, m_cur, cfg.gap_tol, cfg.inner_tol);
        est.lower = std::max(est.lower, inner.certified_lower);
        m_cur = inner.m;

        std::vector<Complex> arg;
        const double up = std::max(sup_over_states(m_cur.to_povm(), arg), inner.max_value);
        if (up < est.upper) {
            est.upper = up;
            m_best = m_cur;
            best_witness = arg;
        }
        if (est.lower > est.upper) {
            // The ascent missed the supremum at the best M; the lower bound
            // is certified, so the upper bound is lifted to it.
            est.upper = est.lower;
        }
        state_vectors.push_back(arg);
        states.push_back(detail::state_data(p, arg));
    }
    est.converged = est.upper - est.lower <= cfg.gap_tol;
    est.witness_incoherent_povm = m_best.to_povm();
    est.witness_state = DensityMatrix::pure(best_witness);
    return est;
}

/// Relative-entropy monotone C_S (bits).
inline CsEstimate c_s_estimate(const Povm &p, const BracketConfig &cfg = {}) {
    return estimate_distance_monotone(p, RelativeEntropyDistance{}, cfg);
}

inline CsEstimate distance_monotone(const Povm &p, const std::string &distance, const BracketConfig &cfg = {}) {
    const auto dist = make_distance(distance);
    return estimate_distance_monotone(p, *dist, cfg);
}

} // namespace povmcoh

#endif // POVMCOH_MONOTONES_HPP
