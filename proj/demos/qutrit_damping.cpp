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

// Prints R_C, C_linf and C_l1/2 of the qutrit dichotomic POVM under
// amplitude damping as the damping rate grows.
//
//   qutrit_damping [points]

#include <cstdio>
#include <cstdlib>

#include "povmcoh/povmcoh.hpp"

int main(int argc, char **argv) {
    const std::size_t points = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 21;
    try {
        std::printf("%8s %10s %10s %10s %10s\n", "gamma", "C_linf", "R_C", "C_l1/2", "gap");
        for (const auto &r : povmcoh::run_fig2_sweep(povmcoh::gamma_grid(points))) {
            std::printf("%8.3f %10.6f %10.6f %10.6f %10.1e\n", r.gamma, r.clinf, r.rc, r.cl1half, r.gap);
        }
    } catch (const std::exception &e) {
        std::fprintf(stderr, "qutrit_damping: %s\n", e.what());
        return 1;
    }
    return 0;
}
