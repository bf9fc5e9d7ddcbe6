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

#ifndef POVMCOH_EXPERIMENT_HPP
#define POVMCOH_EXPERIMENT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <future>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "povmcoh/channels.hpp"
#include "povmcoh/monotones.hpp"
#include "povmcoh/povm.hpp"
#include "povmcoh/robustness.hpp"
#include "povmcoh/tomography.hpp"

namespace povmcoh {

struct MeasurementDirection {
    double theta = 0.0;
    double phi = 0.0;
};

/// V = [[cos(t/2), e^{-i phi} sin(t/2)], [-sin(t/2), e^{-i phi} cos(t/2)]]
inline Matrix v_theta_phi(const MeasurementDirection &dir) {
    if (!std::isfinite(dir.theta) || !std::isfinite(dir.phi)) {
        throw ValidationError("measurement direction must be finite");
    }
    const double c = std::cos(dir.theta / 2.0);
    const double s = std::sin(dir.theta / 2.0);
    const Complex e = std::polar(1.0, -dir.phi);
    Matrix v(2);
    v(0, 0) = c;
    v(0, 1) = e * s;
    v(1, 0) = -s;
    v(1, 1) = e * c;
    return v;
}

/// Z = {V^dagger|0><0|V, V^dagger|1><1|V}; C_linf = |sin theta|.
inline Povm z_theta_phi(const MeasurementDirection &dir) {
    const Matrix vd = v_theta_phi(dir).adjoint();
    std::vector<HermitianMatrix> comps;
    for (std::size_t b = 0; b < 2; ++b) {
        comps.push_back(HermitianMatrix::projector({vd(0, b), vd(1, b)}));
    }
    return Povm(std::move(comps));
}

struct ProbeGate {
    std::string name;
    Matrix unitary;
    /// Probe label of U|0> in the (k,l) convention of the probe family.
    ProbeLabel prepares;
};

/// U_00 = I, U_01 = H, U_10 = PH, U_11 = X. H|0> = (|0>+|1>)/sqrt2 is the
/// family's (1,0) probe and PH|0> = (|0>+i|1>)/sqrt2 is its (0,1) probe.
inline std::vector<ProbeGate> prepare_probe_gates() {
    const double h = std::numbers::sqrt2 / 2.0;
    Matrix had(2);
    had(0, 0) = h;
    had(0, 1) = h;
    had(1, 0) = h;
    had(1, 1) = -h;
    Matrix phase(2);
    phase(0, 0) = 1.0;
    phase(1, 1) = Complex(0.0, 1.0);
    Matrix x(2);
    x(0, 1) = 1.0;
    x(1, 0) = 1.0;
    return {{"U_00", Matrix::identity(2), {0, 0}},
            {"U_01", had, {1, 0}},
            {"U_10", phase * had, {0, 1}},
            {"U_11", x, {1, 1}}};
}

enum class SweepPath { ThetaHalfPi, ThetaQuarterPi, PhiZero };

inline SweepPath parse_sweep_path(const std::string &s) {
    if (s == "p1" || s == "theta=pi/2") {
        return SweepPath::ThetaHalfPi;
    }
    if (s == "p2" || s == "theta=pi/4") {
        return SweepPath::ThetaQuarterPi;
    }
    if (s == "p3" || s == "phi=0") {
        return SweepPath::PhiZero;
    }
    throw std::invalid_argument("unknown sweep path '" + s + "' (expected p1, p2 or p3)");
}

inline std::string to_string(SweepPath p) {
    switch (p) {
    case SweepPath::ThetaHalfPi:
        return "p1";
    case SweepPath::ThetaQuarterPi:
        return "p2";
    case SweepPath::PhiZero:
        return "p3";
    }
    return "?";
}

struct SweepSpec {
    SweepPath path = SweepPath::ThetaHalfPi;
    double step = std::numbers::pi / 8.0;
    /// 0 selects exact-probability mode.
    std::uint64_t shots = 8192;
    std::size_t runs = 10;
    std::optional<KrausChannel> noise;
    std::uint64_t seed = 0;
    std::size_t jobs = 1;

    void check() const {
        if (!(step > 0.0) || !std::isfinite(step)) {
            throw ValidationError("sweep step must be positive", 0, step);
        }
        if (shots > 0 && runs == 0) {
            throw ValidationError("sweep runs must be >= 1");
        }
        if (noise && noise->dim() != 2) {
            throw DimensionError("sweep noise channel must act on a qubit");
        }
    }
};

/// Swept parameter values over [0, 2pi], both endpoints included.
inline std::vector<double> sweep_parameters(double step) {
    std::vector<double> out;
    const double end = 2.0 * std::numbers::pi;
    const auto n = static_cast<std::size_t>(std::floor(end / step + 1e-9));
    for (std::size_t k = 0; k <= n; ++k) {
        out.push_back(static_cast<double>(k) * step);
    }
    if (end - out.back() > 1e-9) {
        out.push_back(end);
    }
    return out;
}

inline MeasurementDirection sweep_direction(SweepPath path, double parameter) {
    switch (path) {
    case SweepPath::ThetaHalfPi:
        return {std::numbers::pi / 2.0, parameter};
    case SweepPath::ThetaQuarterPi:
        return {std::numbers::pi / 4.0, parameter};
    case SweepPath::PhiZero:
        return {parameter, 0.0};
    }
    return {};
}

struct SweepRow {
    double parameter = 0.0;
    MeasurementDirection direction;
    double theory = 0.0;
    /// C_linf of the run-averaged reconstruction.
    double mean = 0.0;
    /// Standard deviation of that run average: run_std / sqrt(runs).
    double std = 0.0;
    /// Spread of single-run estimates.
    double run_std = 0.0;
    /// NaN at the singular points theta in {0, pi, 2pi}.
    double ratio = std::numeric_limits<double>::quiet_NaN();
    TomographyRecord record;
};

struct SweepTable {
    SweepSpec spec;
    std::vector<SweepRow> rows;
};

/// theta is a multiple of pi up to round-off.
inline bool singular_direction(const MeasurementDirection &d) {
    const double r = d.theta / std::numbers::pi;
    return std::abs(r - std::round(r)) < 1e-9;
}

/// Task seed for direction index k: mixes the master seed with k.
inline std::uint64_t direction_seed(std::uint64_t seed, std::size_t k) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(k) + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline SweepRow sweep_point(const SweepSpec &spec, const ProbeFamily &family, std::size_t k, double parameter) {
    SweepRow row;
    row.parameter = parameter;
    row.direction = sweep_direction(spec.path, parameter);
    row.theory = std::abs(std::sin(row.direction.theta));
    const Povm z = z_theta_phi(row.direction);
    row.record = spec.shots == 0 ? exact_record(z, family, spec.noise)
                                 : sample_record(z, family, spec.shots, spec.runs, direction_seed(spec.seed, k),
                                                 spec.noise);
    CoherenceOptions opt;
    opt.compute_robustness = false;
    const auto rep = coherence_from_counts(row.record, opt);
    row.mean = rep.c_linf.pooled;
    row.std = rep.c_linf.stderr_;
    row.run_std = rep.c_linf.std;
    if (!singular_direction(row.direction)) {
        row.ratio = row.mean / row.theory;
    }
    return row;
}

/// Estimated C_linf along one of the three measurement-direction paths via
/// simulated tomography. Rows are ordered by parameter regardless of `jobs`.
inline SweepTable run_sweep(const SweepSpec &spec) {
    spec.check();
    const auto params = sweep_parameters(spec.step);
    const auto family = build_probe_family(2);
    SweepTable table{spec, std::vector<SweepRow>(params.size())};
    const std::size_t jobs = std::max<std::size_t>(1, spec.jobs);
    if (jobs == 1) {
        for (std::size_t k = 0; k < params.size(); ++k) {
            table.rows[k] = sweep_point(spec, family, k, params[k]);
        }
        return table;
    }
    for (std::size_t start = 0; start < params.size(); start += jobs) {
        std::vector<std::future<SweepRow>> futs;
        for (std::size_t k = start; k < std::min(params.size(), start + jobs); ++k) {
            futs.push_back(std::async(std::launch::async, [&, k] { return sweep_point(spec, family, k, params[k]); }));
        }
        for (std::size_t k = start; k < std::min(params.size(), start + jobs); ++k) {
            table.rows[k] = futs[k - start].get();
        }
    }
    return table;
}

/// Dichotomic qutrit POVM {G_0, I - G_0}.
inline Povm qutrit_dichotomic_povm() {
    const double g[3][3] = {{0.528, 0.263, 0.042}, {0.263, 0.137, 0.026}, {0.042, 0.026, 0.008}};
    Matrix g0(3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            g0(i, j) = g[i][j];
        }
    }
    const HermitianMatrix h0(g0);
    return Povm::checked({h0, HermitianMatrix::identity(3) - h0});
}

struct Fig2Row {
    double gamma = 0.0;
    double rc = 0.0;
    double gap = 0.0;
    double clinf = 0.0;
    double cl1half = 0.0;
    SdpStatus status = SdpStatus::optimal;
};

/// gamma_k = k / (points - 1), k = 0..points-1.
inline std::vector<double> gamma_grid(std::size_t points = 21) {
    if (points < 2) {
        throw ValidationError("gamma grid needs at least 2 points", 0, static_cast<double>(points));
    }
    std::vector<double> g;
    for (std::size_t k = 0; k < points; ++k) {
        g.push_back(static_cast<double>(k) / static_cast<double>(points - 1));
    }
    return g;
}

/// R_C, C_linf and C_l1/2 of the amplitude-damped (nonselective dual)
/// qutrit POVM along the grid.
inline std::vector<Fig2Row> run_fig2_sweep(const std::vector<double> &gammas, double tol = 1e-7,
                                           int max_iterations = 50000) {
    const Povm g = qutrit_dichotomic_povm();
    std::vector<Fig2Row> rows;
    for (double gamma : gammas) {
        const Povm damped = dual_apply_nonselective(amplitude_damping(3, gamma), g);
        const auto sol = robustness(damped, tol, max_iterations);
        if (sol.status == SdpStatus::infeasible) {
            throw std::runtime_error("robustness SDP failed at gamma = " + std::to_string(gamma));
        }
        rows.push_back({gamma, sol.value, sol.duality_gap, c_linf(damped).value, 0.5 * c_l1(damped), sol.status});
    }
    return rows;
}

} // namespace povmcoh

#endif // POVMCOH_EXPERIMENT_HPP
