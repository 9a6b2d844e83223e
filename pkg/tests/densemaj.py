"""Dense Jordan-Wigner reference for small Majorana systems (test support).

Modes map to a qubit chain: c_{2k} = Z^k X, c_{2k+1} = Z^k Y.  States are
dense vectors of dimension 2^(n/2); every FLO operation has an exact dense
counterpart here, which the covariance-matrix engine is checked against.
"""

from __future__ import annotations

import numpy as np

_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_I = np.eye(2, dtype=complex)


def majorana_ops(n_modes: int) -> list[np.ndarray]:
    assert n_modes % 2 == 0
    nq = n_modes // 2
    ops = []
    for k in range(nq):
        for local in (_X, _Y):
            factors = [_Z] * k + [local] + [_I] * (nq - k - 1)
            m = factors[0]
            for f in factors[1:]:
                m = np.kron(m, f)
            ops.append(m)
    return ops


class DenseMajorana:
    def __init__(self, n_modes: int):
        self.n = n_modes
        self.c = majorana_ops(n_modes)
        self.psi = None

    def init_from_matching(self, matching, rng=None):
        dim = 2 ** (self.n // 2)
        rng = rng or np.random.default_rng(7)
        psi = rng.normal(size=dim) + 1j * rng.normal(size=dim)
        for p, q in matching:
            proj = 0.5 * (np.eye(dim) + 1j * self.c[p] @ self.c[q])
            psi = proj @ psi
        nrm = np.linalg.norm(psi)
        assert nrm > 1e-9, "matching projector annihilated the reference state"
        self.psi = psi / nrm
        return self

    def apply_rotation(self, p, q, theta):
        dim = 2 ** (self.n // 2)
        r = np.cos(theta) * np.eye(dim) + np.sin(theta) * (self.c[p] @ self.c[q])
        self.psi = r @ self.psi

    def measure_dimer(self, p, q, outcome):
        dim = 2 ** (self.n // 2)
        proj = 0.5 * (np.eye(dim) + outcome * 1j * self.c[p] @ self.c[q])
        phi = proj @ self.psi
        prob = float(np.real(np.vdot(phi, phi)))
        if prob > 1e-14:
            self.psi = phi / np.sqrt(prob)
        return prob

    def gamma(self) -> np.ndarray:
        g = np.zeros((self.n, self.n))
        for p in range(self.n):
            for q in range(p + 1, self.n):
                val = np.vdot(self.psi, 1j * self.c[p] @ self.c[q] @ self.psi)
                g[p, q] = val.real
                g[q, p] = -val.real
        return g
