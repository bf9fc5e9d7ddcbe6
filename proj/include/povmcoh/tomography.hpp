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

#ifndef POVMCOH_TOMOGRAPHY_HPP
#define POVMCOH_TOMOGRAPHY_HPP

// Detector tomography from a linearly independent family of d^2 probe
// states. Two reconstructions are provided:
//
//  * direct: with the probe family |k>, (|k>+|l>)/sqrt2 (k>l) and
//    (|k>+i|l>)/sqrt2 (k<l), every matrix element of A_a is read off from
//    three probabilities;
//  * general: for any invertible family, solve Gamma^T chi_a = mu_a where
//    chi_a / gamma_k are the real vectorizations of A_a / rho_k.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "povmcoh/channels.hpp"
#include "povmcoh/linalg.hpp"
#include "povmcoh/monotones.hpp"
#include "povmcoh/povm.hpp"
#include "povmcoh/robustness.hpp"

namespace povmcoh {

/// Probe label (k, l); probe index is k * d + l.
struct ProbeLabel {
    std::size_t k = 0;
    std::size_t l = 0;
    friend bool operator==(const ProbeLabel &, const ProbeLabel &) = default;
};

inline std::string to_string(const ProbeLabel &p) { return std::to_string(p.k) + "," + std::to_string(p.l); }

struct ProbeFamily {
    std::size_t dim = 0;
    std::vector<ProbeLabel> labels;
    std::vector<std::vector<Complex>> vectors;
    std::vector<DensityMatrix> states;

    std::size_t size() const noexcept { return states.size(); }
};

/// |psi_kk> = |k>, |psi_kl> = (|k>+|l>)/sqrt2 for k > l, (|k>+i|l>)/sqrt2
/// for k < l.
inline std::vector<Complex> probe_vector(std::size_t d, std::size_t k, std::size_t l) {
    std::vector<Complex> v(d);
    if (k == l) {
        v[k] = 1.0;
    } else if (k > l) {
        v[k] = std::numbers::sqrt2 / 2.0;
        v[l] = std::numbers::sqrt2 / 2.0;
    } else {
        v[k] = std::numbers::sqrt2 / 2.0;
        v[l] = Complex(0.0, std::numbers::sqrt2 / 2.0);
    }
    return v;
}

// --- real vectorization, x = q d + r ---

/// (chi)_x = A_qq (q = r), sqrt2 Re A_qr (q < r), sqrt2 Im A_rq (q > r).
inline std::vector<double> vectorize(const HermitianMatrix &m) {
    const std::size_t d = m.dim();
    std::vector<double> v(d * d);
    for (std::size_t q = 0; q < d; ++q) {
        for (std::size_t r = 0; r < d; ++r) {
            const std::size_t x = q * d + r;
            if (q == r) {
                v[x] = m(q, q).real();
            } else if (q < r) {
                v[x] = std::numbers::sqrt2 * m(q, r).real();
            } else {
                v[x] = std::numbers::sqrt2 * m(r, q).imag();
            }
        }
    }
    return v;
}

inline HermitianMatrix devectorize(const std::vector<double> &v, std::size_t d) {
    if (v.size() != d * d) {
        throw DimensionError("devectorize: vector length is not d^2");
    }
    Matrix m(d);
    for (std::size_t q = 0; q < d; ++q) {
        m(q, q) = v[q * d + q];
        for (std::size_t r = q + 1; r < d; ++r) {
            const Complex z(v[q * d + r] / std::numbers::sqrt2, v[r * d + q] / std::numbers::sqrt2);
            m(q, r) = z;
            m(r, q) = std::conj(z);
        }
    }
    return HermitianMatrix::hermitian_part(m);
}

/// Per-outcome vectorization of a POVM.
struct VectorizedPovm {
    std::size_t dim = 0;
    std::vector<std::vector<double>> chi;

    static VectorizedPovm from(const Povm &p) {
        VectorizedPovm v{p.dim(), {}};
        for (const auto &c : p.components()) {
            v.chi.push_back(vectorize(c));
        }
        return v;
    }

    Povm to_povm() const {
        std::vector<HermitianMatrix> comps;
        for (const auto &c : chi) {
            comps.push_back(devectorize(c, dim));
        }
        return Povm(std::move(comps));
    }
};

/// Gamma = (gamma_1, ..., gamma_{d^2}) with gamma_k the vectorized probes.
inline RealMatrix gamma_matrix(const std::vector<DensityMatrix> &states) {
    if (states.empty()) {
        throw DimensionError("gamma_matrix: no probe states");
    }
    const std::size_t d = states.front().dim();
    const std::size_t n = d * d;
    if (states.size() != n) {
        throw DimensionError("probe family must contain d^2 = " + std::to_string(n) + " states, got " +
                             std::to_string(states.size()));
    }
    RealMatrix g(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto gk = vectorize(states[k].matrix());
        for (std::size_t x = 0; x < n; ++x) {
            g(x, k) = gk[x];
        }
    }
    return g;
}

struct ConditionReport {
    double condition_number = 0.0;
    /// Right singular vector of the smallest singular value: the combination
    /// of probes the family fails to distinguish.
    std::vector<double> weakest_direction;
};

inline ConditionReport condition(const RealMatrix &g) {
    const auto es = eigh_real_symmetric(g.transpose() * g);
    ConditionReport r;
    const double lo = std::max(es.values.front(), 0.0);
    const double hi = std::max(es.values.back(), 0.0);
    r.condition_number = lo > 0.0 ? std::sqrt(hi / lo) : kInf;
    for (std::size_t i = 0; i < es.vectors.dim(); ++i) {
        r.weakest_direction.push_back(es.vectors(i, 0).real());
    }
    return r;
}

inline ProbeFamily build_probe_family(std::size_t d) {
    if (d < 2) {
        throw DimensionError("probe family needs d >= 2");
    }
    ProbeFamily f;
    f.dim = d;
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l) {
            f.labels.push_back({k, l});
            f.vectors.push_back(probe_vector(d, k, l));
            f.states.push_back(DensityMatrix::pure(f.vectors.back()));
        }
    }
    const auto cond = condition(gamma_matrix(f.states));
    if (!std::isfinite(cond.condition_number)) {
        throw ValidationError("probe family is linearly dependent");
    }
    return f;
}

/// Measurement statistics for the d^2 probes, indexed by probe position.
/// Either exact probabilities (`probabilities`) or per-run multinomial counts
/// (`counts[probe][run][a]`, each summing to `shots`).
struct TomographyRecord {
    std::size_t dim = 0;
    std::size_t outcomes = 0;
    std::vector<std::vector<double>> probabilities;
    std::vector<std::vector<std::vector<std::uint64_t>>> counts;
    std::uint64_t shots = 0;

    bool has_counts() const noexcept { return !counts.empty(); }

    std::size_t runs() const noexcept {
        if (!has_counts()) {
            return 1;
        }
        return counts.front().size();
    }

    /// Probability table for a single run (the exact table in probability
    /// mode). Rows are normalized by their count total.
    std::vector<std::vector<double>> run_table(std::size_t run) const {
        if (!has_counts()) {
            return probabilities;
        }
        std::vector<std::vector<double>> t;
        for (const auto &probe : counts) {
            const auto &c = probe.at(run);
            double total = 0.0;
            for (auto x : c) {
                total += static_cast<double>(x);
            }
            std::vector<double> row;
            for (auto x : c) {
                row.push_back(total > 0.0 ? static_cast<double>(x) / total : 0.0);
            }
            t.push_back(std::move(row));
        }
        return t;
    }

    /// Counts pooled over all runs.
    std::vector<std::vector<double>> pooled_table() const {
        if (!has_counts()) {
            return probabilities;
        }
        std::vector<std::vector<double>> t;
        for (const auto &probe : counts) {
            std::vector<double> row(outcomes, 0.0);
            double total = 0.0;
            for (const auto &run : probe) {
                for (std::size_t a = 0; a < run.size(); ++a) {
                    row[a] += static_cast<double>(run[a]);
                    total += static_cast<double>(run[a]);
                }
            }
            for (auto &x : row) {
                x = total > 0.0 ? x / total : 0.0;
            }
            t.push_back(std::move(row));
        }
        return t;
    }

    /// Throws ValidationError naming the first missing or malformed probe.
    void check_shape() const {
        const std::size_t n = dim * dim;
        const std::size_t rows = has_counts() ? counts.size() : probabilities.size();
        if (rows < n) {
            const ProbeLabel missing{rows / dim, rows % dim};
            throw ValidationError("tomography record is missing probe row (" + to_string(missing) + ")", rows);
        }
        if (rows > n) {
            throw ValidationError("tomography record has " + std::to_string(rows) + " probe rows, expected " +
                                      std::to_string(n),
                                  rows);
        }
        for (std::size_t k = 0; k < n; ++k) {
            if (has_counts()) {
                if (counts[k].size() != runs()) {
                    throw ValidationError("probe row " + std::to_string(k) + " has a different run count", k);
                }
                for (const auto &run : counts[k]) {
                    if (run.size() != outcomes) {
                        throw ValidationError("probe row " + std::to_string(k) + " has wrong outcome count", k);
                    }
                }
            } else if (probabilities[k].size() != outcomes) {
                throw ValidationError("probe row " + std::to_string(k) + " has wrong outcome count", k);
            }
        }
    }
};

/// Exact Born probabilities of `p` on the probe family, optionally after a
/// noise channel acts on the probes.
inline TomographyRecord exact_record(const Povm &p, const ProbeFamily &f,
                                     const std::optional<KrausChannel> &noise = std::nullopt) {
    TomographyRecord rec{p.dim(), p.outcomes(), {}, {}, 0};
    for (const auto &rho : f.states) {
        const DensityMatrix state = noise ? DensityMatrix(noise->apply(rho.matrix())) : rho;
        rec.probabilities.push_back(born_distribution(p, state).probs);
    }
    return rec;
}

/// Per-probe random stream derived from (seed, k, l).
inline std::mt19937_64 probe_stream(std::uint64_t seed, std::size_t k, std::size_t l) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(l), 0x70766d63u};
    return std::mt19937_64(seq);
}

/// One multinomial draw of `shots` over `probs` via sequential binomials.
inline std::vector<std::uint64_t> sample_multinomial(const std::vector<double> &probs, std::uint64_t shots,
                                                     std::mt19937_64 &rng) {
    std::vector<std::uint64_t> out(probs.size(), 0);
    std::uint64_t remaining = shots;
    double mass = 1.0;
    for (std::size_t a = 0; a + 1 < probs.size() && remaining > 0; ++a) {
        const double pa = std::clamp(mass > 0.0 ? probs[a] / mass : 0.0, 0.0, 1.0);
        std::binomial_distribution<std::uint64_t> b(remaining, pa);
        out[a] = b(rng);
        remaining -= out[a];
        mass -= probs[a];
    }
    if (!probs.empty()) {
        out.back() += remaining;
    }
    return out;
}

/// Simulated counts: for each probe (k,l) and run, one multinomial draw of
/// `shots` outcomes.
inline TomographyRecord sample_record(const Povm &p, const ProbeFamily &f, std::uint64_t shots, std::size_t runs,
                                      std::uint64_t seed, const std::optional<KrausChannel> &noise = std::nullopt) {
    const auto exact = exact_record(p, f, noise);
    TomographyRecord rec{p.dim(), p.outcomes(), {}, {}, shots};
    for (std::size_t probe = 0; probe < f.size(); ++probe) {
        auto rng = probe_stream(seed, f.labels[probe].k, f.labels[probe].l);
        std::vector<std::vector<std::uint64_t>> per_run;
        for (std::size_t r = 0; r < runs; ++r) {
            per_run.push_back(sample_multinomial(exact.probabilities[probe], shots, rng));
        }
        rec.counts.push_back(std::move(per_run));
    }
    return rec;
}

struct Reconstruction {
    Povm povm;
    /// eig_min per component; negative entries are shot-noise PSD violations.
    std::vector<double> psd_margins;
    bool psd_ok = true;
    bool projected = false;
};

namespace detail {

inline Reconstruction finish(Povm p, double tol) {
    Reconstruction r{std::move(p), {}, true, false};
    for (const auto &c : r.povm.components()) {
        r.psd_margins.push_back(eig_min(c));
        r.psd_ok = r.psd_ok && r.psd_margins.back() >= -tol;
    }
    return r;
}

} // namespace detail

/// Direct readout from a probability table over the standard probe family:
///   A_a(k,k) = p(a|kk),
///   Re A_a(k,l) = p(a|kl) - (p(a|kk) + p(a|ll))/2   for k > l,
///   Im A_a(l,k) = p(a|kl) - (p(a|kk) + p(a|ll))/2   for k < l.
inline Reconstruction reconstruct_direct(std::size_t d, std::size_t n, const std::vector<std::vector<double>> &table,
                                         double tol = kDefaultValidationTol) {
    auto p = [&](std::size_t a, std::size_t k, std::size_t l) { return table[k * d + l][a]; };
    std::vector<HermitianMatrix> comps;
    for (std::size_t a = 0; a < n; ++a) {
        Matrix m(d);
        for (std::size_t k = 0; k < d; ++k) {
            m(k, k) = p(a, k, k);
        }
        for (std::size_t k = 0; k < d; ++k) {
            for (std::size_t l = 0; l < k; ++l) {
                // k > l: real part of <k|A|l>; (l,k) probe: imaginary part of <k|A|l>.
                const double re = p(a, k, l) - 0.5 * (p(a, k, k) + p(a, l, l));
                const double im = p(a, l, k) - 0.5 * (p(a, k, k) + p(a, l, l));
                m(k, l) = Complex(re, im);
                m(l, k) = Complex(re, -im);
            }
        }
        comps.push_back(HermitianMatrix::hermitian_part(m));
    }
    return detail::finish(Povm(std::move(comps)), tol);
}

inline Reconstruction reconstruct_direct(const TomographyRecord &rec, double tol = kDefaultValidationTol) {
    rec.check_shape();
    return reconstruct_direct(rec.dim, rec.outcomes, rec.pooled_table(), tol);
}

/// Linear inversion Gamma^T chi_a = mu_a for an arbitrary invertible family;
/// rows of `table` follow the order of `states`.
inline Reconstruction reconstruct_general(const std::vector<DensityMatrix> &states,
                                          const std::vector<std::vector<double>> &table, std::size_t n,
                                          double tol = kDefaultValidationTol) {
    const RealMatrix g = gamma_matrix(states);
    const std::size_t d = states.front().dim();
    if (table.size() != states.size()) {
        throw ValidationError("probability table has " + std::to_string(table.size()) + " rows for " +
                                  std::to_string(states.size()) + " probe states",
                              table.size());
    }
    const auto cond = condition(g);
    if (!(cond.condition_number <= 1e8)) {
        std::size_t worst = 0;
        for (std::size_t k = 1; k < cond.weakest_direction.size(); ++k) {
            if (std::abs(cond.weakest_direction[k]) > std::abs(cond.weakest_direction[worst])) {
                worst = k;
            }
        }
        std::ostringstream os;
        os << "probe states are linearly dependent (condition number " << cond.condition_number
           << "); deficient direction weights probe " << worst << " most, direction = [";
        for (std::size_t k = 0; k < cond.weakest_direction.size(); ++k) {
            os << (k ? ", " : "") << cond.weakest_direction[k];
        }
        os << "]";
        throw ValidationError(os.str(), worst, cond.condition_number);
    }
    const LuFactorization lu(g.transpose());
    VectorizedPovm v{d, {}};
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<double> mu;
        for (const auto &row : table) {
            mu.push_back(row.at(a));
        }
        v.chi.push_back(lu.solve(mu));
    }
    return detail::finish(v.to_povm(), tol);
}

/// Optional post-processing: clip negative eigenvalues, then restore
/// completeness by the congruence S^{-1/2} (.) S^{-1/2}.
inline Reconstruction project_psd(const Reconstruction &r, double tol = kDefaultValidationTol) {
    std::vector<HermitianMatrix> clipped;
    HermitianMatrix s(r.povm.dim());
    for (const auto &c : r.povm.components()) {
        clipped.push_back(psd_part(c));
        s += clipped.back();
    }
    const Matrix s_inv_half = spectral_map(eigh(s), [](double x) { return x > 0.0 ? 1.0 / std::sqrt(x) : 0.0; });
    std::vector<HermitianMatrix> out;
    for (const auto &c : clipped) {
        out.push_back(HermitianMatrix::hermitian_part(s_inv_half * (c.matrix() * s_inv_half)));
    }
    auto res = detail::finish(Povm(std::move(out)), tol);
    res.projected = true;
    return res;
}

struct Statistic {
    /// Value on the reconstruction from run-averaged statistics.
    double pooled = 0.0;
    double mean = 0.0;
    /// Sample standard deviation over runs (0 for a single run).
    double std = 0.0;
    /// std / sqrt(runs)
    double stderr_ = 0.0;
    std::vector<double> samples;
};

inline Statistic summarize(std::vector<double> samples) {
    Statistic s;
    s.samples = std::move(samples);
    const double n = static_cast<double>(s.samples.size());
    for (double x : s.samples) {
        s.mean += x / n;
    }
    if (s.samples.size() > 1) {
        double ss = 0.0;
        for (double x : s.samples) {
            ss += (x - s.mean) * (x - s.mean);
        }
        s.std = std::sqrt(ss / (n - 1.0));
        s.stderr_ = s.std / std::sqrt(n);
    }
    return s;
}

struct CoherenceOptions {
    bool project_psd = false;
    bool compute_robustness = true;
    double sdp_tolerance = 1e-7;
};

struct CoherenceReport {
    /// Reconstruction from the pooled record.
    Reconstruction reconstruction;
    Statistic c_linf;
    Statistic c_l1_half;
    Statistic robustness;
    std::size_t runs = 1;
};

/// Coherence of the run-averaged reconstruction (`pooled`) plus the spread of
/// per-run reconstructions for C_linf, C_l1/2 and R.
inline CoherenceReport coherence_from_counts(const TomographyRecord &rec, const CoherenceOptions &opt = {}) {
    rec.check_shape();
    CoherenceReport rep;
    rep.runs = rec.runs();
    rep.reconstruction = reconstruct_direct(rec);
    if (opt.project_psd) {
        rep.reconstruction = project_psd(rep.reconstruction);
    }
    std::vector<double> linf;
    std::vector<double> l1;
    std::vector<double> rc;
    for (std::size_t r = 0; r < rec.runs(); ++r) {
        auto recon = reconstruct_direct(rec.dim, rec.outcomes, rec.run_table(r));
        if (opt.project_psd) {
            recon = project_psd(recon);
        }
        linf.push_back(c_linf(recon.povm).value);
        l1.push_back(0.5 * c_l1(recon.povm));
        if (opt.compute_robustness) {
            rc.push_back(robustness(recon.povm, opt.sdp_tolerance).value);
        }
    }
    rep.c_linf = summarize(std::move(linf));
    rep.c_l1_half = summarize(std::move(l1));
    rep.c_linf.pooled = c_linf(rep.reconstruction.povm).value;
    rep.c_l1_half.pooled = 0.5 * c_l1(rep.reconstruction.povm);
    if (opt.compute_robustness) {
        rep.robustness = summarize(std::move(rc));
        rep.robustness.pooled = robustness(rep.reconstruction.povm, opt.sdp_tolerance).value;
    }
    return rep;
}

} // namespace povmcoh

#endif // POVMCOH_TOMOGRAPHY_HPP
