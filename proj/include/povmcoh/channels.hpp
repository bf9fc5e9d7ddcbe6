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

#ifndef POVMCOH_CHANNELS_HPP
#define POVMCOH_CHANNELS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "povmcoh/linalg.hpp"
#include "povmcoh/povm.hpp"

namespace povmcoh {

/// Completely positive trace-preserving map given by Kraus operators,
/// rho -> sum_mu K_mu rho K_mu^dagger.
class KrausChannel {
public:
    KrausChannel() = default;

    /// Throws ValidationError if sum_mu K^dagger K deviates from I by more
    /// than tol (max-abs entry).
    explicit KrausChannel(std::vector<GeneralMatrix> operators, double tol = kDefaultValidationTol)
        : ops_(std::move(operators)) {
        if (ops_.empty()) {
            throw DimensionError("a channel needs at least one Kraus operator");
        }
        const std::size_t d = ops_.front().dim();
        Matrix sum(d);
        for (std::size_t mu = 0; mu < ops_.size(); ++mu) {
            if (ops_[mu].dim() != d) {
                throw DimensionError("Kraus operator " + std::to_string(mu) + " has mismatched dim");
            }
            if (!ops_[mu].all_finite()) {
                throw ValidationError("Kraus operator " + std::to_string(mu) + " has non-finite entries", mu);
            }
            sum += ops_[mu].adjoint() * ops_[mu];
        }
        sum -= Matrix::identity(d);
        const double res = sum.max_abs();
        if (res > tol) {
            throw ValidationError("Kraus completeness residual " + std::to_string(res) + " exceeds tolerance", 0,
                                  res);
        }
    }

    std::size_t dim() const noexcept { return ops_.empty() ? 0 : ops_.front().dim(); }
    std::size_t size() const noexcept { return ops_.size(); }
    const GeneralMatrix &operator[](std::size_t mu) const { return ops_[mu]; }
    const std::vector<GeneralMatrix> &operators() const noexcept { return ops_; }

    HermitianMatrix apply(const HermitianMatrix &rho) const {
        HermitianMatrix out(rho.dim());
        for (const auto &k : ops_) {
            out += sandwich(k, rho);
        }
        return out;
    }

private:
    std::vector<GeneralMatrix> ops_;
};

/// K_mu = sum_i c_{mu,i} |pi_mu(i)><i|
struct SioDecomposition {
    std::vector<std::vector<std::size_t>> permutations;
    std::vector<std::vector<Complex>> coefficients;

    std::vector<GeneralMatrix> reconstruct() const {
        std::vector<GeneralMatrix> out;
        for (std::size_t mu = 0; mu < permutations.size(); ++mu) {
            const std::size_t d = permutations[mu].size();
            Matrix k(d);
            for (std::size_t i = 0; i < d; ++i) {
                k(permutations[mu][i], i) = coefficients[mu][i];
            }
            out.push_back(std::move(k));
        }
        return out;
    }
};

/// Returns the strictly-incoherent decomposition iff each Kraus operator has
/// at most one entry above tol per column and distinct rows for its nonzero
/// columns. Zero columns are mapped greedily to the unused rows.
inline std::optional<SioDecomposition> classify_sio(const KrausChannel &c, double tol = 1e-12) {
    SioDecomposition dec;
    const std::size_t d = c.dim();
    for (const auto &k : c.operators()) {
        std::vector<std::size_t> perm(d, d);
        std::vector<Complex> coef(d, 0.0);
        std::vector<bool> used(d, false);
        for (std::size_t i = 0; i < d; ++i) {
            std::size_t row = d;
            for (std::size_t r = 0; r < d; ++r) {
                if (std::abs(k(r, i)) > tol) {
                    if (row != d) {
                        return std::nullopt;
                    }
                    row = r;
                }
            }
            if (row == d) {
                continue;
            }
            if (used[row]) {
                return std::nullopt;
            }
            used[row] = true;
            perm[i] = row;
            coef[i] = k(row, i);
        }
        std::size_t next = 0;
        for (std::size_t i = 0; i < d; ++i) {
            if (perm[i] != d) {
                continue;
            }
            while (used[next]) {
                ++next;
            }
            perm[i] = next;
            used[next] = true;
        }
        dec.permutations.push_back(std::move(perm));
        dec.coefficients.push_back(std::move(coef));
    }
    return dec;
}

inline void check_dims(const KrausChannel &c, const Povm &p) {
    if (c.dim() != p.dim()) {
        throw DimensionError("channel dim " + std::to_string(c.dim()) + " does not match POVM dim " +
                             std::to_string(p.dim()));
    }
}

/// {sum_mu K_mu^dagger A_a K_mu}_a
inline Povm dual_apply_nonselective(const KrausChannel &c, const Povm &p) {
    check_dims(c, p);
    std::vector<HermitianMatrix> out;
    for (const auto &a : p.components()) {
        HermitianMatrix acc(p.dim());
        for (const auto &k : c.operators()) {
            acc += conj_sandwich(k, a);
        }
        out.push_back(std::move(acc));
    }
    return Povm(std::move(out));
}

/// {K_mu^dagger A_a K_mu}_{a,mu}, outcome index a * n_E + mu (a-major).
inline Povm dual_apply_selective(const KrausChannel &c, const Povm &p) {
    check_dims(c, p);
    std::vector<HermitianMatrix> out;
    for (const auto &a : p.components()) {
        for (const auto &k : c.operators()) {
            out.push_back(conj_sandwich(k, a));
        }
    }
    return Povm(std::move(out));
}

/// "a:mu" labels matching the selective expansion order.
inline std::vector<std::string> selective_labels(std::size_t outcomes, std::size_t kraus) {
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < outcomes; ++a) {
        for (std::size_t mu = 0; mu < kraus; ++mu) {
            labels.push_back(std::to_string(a) + ":" + std::to_string(mu));
        }
    }
    return labels;
}

/// Sum groups of `kraus` consecutive outcomes (inverse of the selective
/// expansion's bookkeeping).
inline Povm merge_selective(const Povm &expanded, std::size_t kraus) {
    if (kraus == 0 || expanded.outcomes() % kraus != 0) {
        throw DimensionError("merge_selective: outcome count not divisible by Kraus count");
    }
    std::vector<HermitianMatrix> out;
    for (std::size_t a = 0; a < expanded.outcomes() / kraus; ++a) {
        HermitianMatrix acc(expanded.dim());
        for (std::size_t mu = 0; mu < kraus; ++mu) {
            acc += expanded[a * kraus + mu];
        }
        out.push_back(std::move(acc));
    }
    return Povm(std::move(out));
}

inline double binomial(std::size_t n, std::size_t k) {
    double r = 1.0;
    for (std::size_t j = 1; j <= k; ++j) {
        r = r * static_cast<double>(n - k + j) / static_cast<double>(j);
    }
    return r;
}

/// K_mu = sum_{i>=mu} sqrt(C(i,mu) (1-gamma)^{i-mu} gamma^mu) |i-mu><i|,
/// mu = 0..d-1.
inline KrausChannel amplitude_damping(std::size_t d, double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw ValidationError("amplitude damping rate must lie in [0,1], got " + std::to_string(gamma), 0, gamma);
    }
    if (d == 0) {
        throw DimensionError("amplitude_damping needs d >= 1");
    }
    std::vector<GeneralMatrix> ops;
    for (std::size_t mu = 0; mu < d; ++mu) {
        Matrix k(d);
        for (std::size_t i = mu; i < d; ++i) {
            const double w = binomial(i, mu) * std::pow(1.0 - gamma, static_cast<double>(i - mu)) *
                             std::pow(gamma, static_cast<double>(mu));
            k(i - mu, i) = std::sqrt(w);
        }
        ops.push_back(std::move(k));
    }
    return KrausChannel(std::move(ops), 1e-12);
}

/// Total dephasing {|i><i|}_i.
inline KrausChannel dephasing_channel(std::size_t d) {
    std::vector<GeneralMatrix> ops;
    for (std::size_t i = 0; i < d; ++i) {
        Matrix k(d);
        k(i, i) = 1.0;
        ops.push_back(std::move(k));
    }
    return KrausChannel(std::move(ops));
}

inline KrausChannel identity_channel(std::size_t d) { return KrausChannel({Matrix::identity(d)}); }

/// Random SIO: per Kraus operator a random permutation, and per input index a
/// random conditional distribution p(mu|i) with random phases.
inline KrausChannel random_sio_channel(std::size_t d, std::size_t kraus, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> e(1.0);
    std::uniform_real_distribution<double> ph(0.0, 2.0 * std::numbers::pi);
    std::vector<std::vector<double>> prob(kraus, std::vector<double>(d));
    for (std::size_t i = 0; i < d; ++i) {
        double s = 0.0;
        for (std::size_t mu = 0; mu < kraus; ++mu) {
            prob[mu][i] = e(rng);
            s += prob[mu][i];
        }
        for (std::size_t mu = 0; mu < kraus; ++mu) {
            prob[mu][i] /= s;
        }
    }
    std::vector<GeneralMatrix> ops;
    for (std::size_t mu = 0; mu < kraus; ++mu) {
        std::vector<std::size_t> perm(d);
        for (std::size_t i = 0; i < d; ++i) {
            perm[i] = i;
        }
        std::shuffle(perm.begin(), perm.end(), rng);
        Matrix k(d);
        for (std::size_t i = 0; i < d; ++i) {
            k(perm[i], i) = std::polar(std::sqrt(prob[mu][i]), ph(rng));
        }
        ops.push_back(std::move(k));
    }
    return KrausChannel(std::move(ops), 1e-10);
}

} // namespace povmcoh

#endif // POVMCOH_CHANNELS_HPP
