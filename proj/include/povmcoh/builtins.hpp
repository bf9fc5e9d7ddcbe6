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

#ifndef POVMCOH_BUILTINS_HPP
#define POVMCOH_BUILTINS_HPP

// Named measurements and channels:
//
//   POVMs:    z:THETA,PHI   appendix-d   appendix-f-g
//   channels: dephasing   amplitude-damping:GAMMA   appendix-d   identity
//
// Angles accept plain numbers and pi expressions such as pi/2, 3pi/4,
// 0.5*pi or -pi.

#include <cctype>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "povmcoh/channels.hpp"
#include "povmcoh/experiment.hpp"
#include "povmcoh/povm.hpp"

namespace povmcoh {

/// Parses [coef][*]pi[/den] or a plain number.
inline double parse_angle(const std::string &text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
    }
    auto fail = [&]() -> double { throw std::invalid_argument("cannot parse angle '" + text + "'"); };
    auto number = [&](const std::string &t) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(t, &used);
        } catch (const std::exception &) {
            fail();
        }
        if (used != t.size() || !std::isfinite(v)) {
            fail();
        }
        return v;
    };
    const auto pos = s.find("pi");
    if (pos == std::string::npos) {
        return number(s);
    }
    std::string coef = s.substr(0, pos);
    if (!coef.empty() && coef.back() == '*') {
        coef.pop_back();
    }
    double c = 1.0;
    if (coef == "-") {
        c = -1.0;
    } else if (coef == "+") {
        c = 1.0;
    } else if (!coef.empty()) {
        c = number(coef);
    }
    const std::string rest = s.substr(pos + 2);
    double den = 1.0;
    if (!rest.empty()) {
        if (rest.front() != '/') {
            fail();
        }
        den = number(rest.substr(1));
        if (den == 0.0) {
            fail();
        }
    }
    return c * std::numbers::pi / den;
}

/// {[[1/2, +-1/2, 0, 0], [+-1/2, 1/2, 0, 0], [0, 0, 1/2, 0], [0, 0, 0, 1/2]]}
inline Povm l1_counterexample_povm() {
    std::vector<HermitianMatrix> comps;
    for (double sign : {1.0, -1.0}) {
        Matrix m(4);
        for (std::size_t i = 0; i < 4; ++i) {
            m(i, i) = 0.5;
        }
        m(0, 1) = 0.5 * sign;
        m(1, 0) = 0.5 * sign;
        comps.emplace_back(m);
    }
    return Povm::checked(std::move(comps));
}

/// K_0 = diag(1,1,0,0), K_1 = |0><2| + |1><3|.
inline KrausChannel l1_counterexample_channel() {
    Matrix k0(4);
    k0(0, 0) = 1.0;
    k0(1, 1) = 1.0;
    Matrix k1(4);
    k1(0, 2) = 1.0;
    k1(1, 3) = 1.0;
    return KrausChannel({k0, k1});
}

namespace detail {

inline std::optional<std::string> strip_prefix(const std::string &s, const std::string &prefix) {
    if (s.rfind(prefix, 0) == 0) {
        return s.substr(prefix.size());
    }
    return std::nullopt;
}

} // namespace detail

inline bool is_builtin_povm(const std::string &name) {
    return name == "appendix-d" || name == "appendix-f-g" || name.rfind("z:", 0) == 0;
}

inline Povm builtin_povm(const std::string &name) {
    if (name == "appendix-d") {
        return l1_counterexample_povm();
    }
    if (name == "appendix-f-g") {
        return qutrit_dichotomic_povm();
    }
    if (auto arg = detail::strip_prefix(name, "z:")) {
        const auto comma = arg->find(',');
        if (comma == std::string::npos) {
            throw std::invalid_argument("builtin z:THETA,PHI needs two angles, got '" + name + "'");
        }
        return z_theta_phi({parse_angle(arg->substr(0, comma)), parse_angle(arg->substr(comma + 1))});
    }
    throw std::invalid_argument("unknown builtin POVM '" + name + "'");
}

inline bool is_builtin_channel(const std::string &name) {
    return name == "dephasing" || name == "appendix-d" || name == "identity" ||
           name.rfind("amplitude-damping:", 0) == 0;
}

/// `dim` sizes the dimension-generic channels.
inline KrausChannel builtin_channel(const std::string &name, std::size_t dim) {
    if (name == "dephasing") {
        return dephasing_channel(dim);
    }
    if (name == "identity") {
        return identity_channel(dim);
    }
    if (name == "appendix-d") {
        return l1_counterexample_channel();
    }
    if (auto arg = detail::strip_prefix(name, "amplitude-damping:")) {
        std::size_t used = 0;
        double g = 0.0;
        try {
            g = std::stod(*arg, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != arg->size()) {
            throw std::invalid_argument("cannot parse damping rate in '" + name + "'");
        }
        return amplitude_damping(dim, g);
    }
    throw std::invalid_argument("unknown builtin channel '" + name + "'");
}

} // namespace povmcoh

#endif // POVMCOH_BUILTINS_HPP
