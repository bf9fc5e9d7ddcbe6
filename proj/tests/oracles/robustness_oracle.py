# Copyright 2026 The povmcoh Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Reference robustness values from an off-the-shelf conic solver.

R(A) = min s  s.t.  A_a + s M_a = (1 + s) diag(q_a),  M_a >= 0,  sum_a M_a = I,
written with D_a = (1 + s) diag(q_a) as  min max_i sum_a (D_a)_ii - 1,
D_a diagonal, D_a >= A_a.
"""

from math import comb

import cvxpy as cp
import numpy as np


def robustness(components):
    d = components[0].shape[0]
    t = cp.Variable()
    diags = [cp.Variable(d) for _ in components]
    cons = []
    for a, dv in zip(components, diags):
        cons.append(cp.diag(dv) - a >> 0)
    cons.append(sum(diags) <= t)
    prob = cp.Problem(cp.Minimize(t - 1), cons)
    prob.solve(solver=cp.CLARABEL, tol_gap_abs=1e-11, tol_gap_rel=1e-11, tol_feas=1e-11)
    return prob.value


def qutrit_dichotomic():
    g0 = np.array([[0.528, 0.263, 0.042], [0.263, 0.137, 0.026], [0.042, 0.026, 0.008]])
    return [g0, np.eye(3) - g0]


def damping_kraus(d, gamma):
    ops = []
    for mu in range(d):
        k = np.zeros((d, d))
        for i in range(mu, d):
            k[i - mu, i] = np.sqrt(comb(i, mu) * (1 - gamma) ** (i - mu) * gamma**mu)
        ops.append(k)
    return ops


def dual(kraus, comps):
    return [sum(k.conj().T @ a @ k for k in kraus) for a in comps]


def l1_counterexample():
    out = []
    for s in (1, -1):
        m = np.eye(4) * 0.5
        m[0, 1] = m[1, 0] = 0.5 * s
        out.append(m)
    return out


def l1_counterexample_kraus():
    k0 = np.diag([1.0, 1, 0, 0])
    k1 = np.zeros((4, 4))
    k1[0, 2] = k1[1, 3] = 1
    return [k0, k1]


if __name__ == "__main__":
    g = qutrit_dichotomic()
    for gamma in (0.0, 0.25, 0.5, 0.9):
        print(f"qutrit gamma={gamma}: {robustness(dual(damping_kraus(3, gamma), g)):.9f}")
    a = l1_counterexample()
    print(f"l1 counterexample before: {robustness(a):.9f}")
    print(f"l1 counterexample after: {robustness(dual(l1_counterexample_kraus(), a)):.9f}")
    # Complex qutrit with three outcomes: trine-like rank-one POVM.
    w = np.exp(2j * np.pi / 3)
    vs = [np.array([1, w**k, w ** (2 * k)]) / np.sqrt(3) for k in range(3)]
    f = [np.outer(v, v.conj()) for v in vs]
    print(f"fourier basis: {robustness(f):.9f}")
