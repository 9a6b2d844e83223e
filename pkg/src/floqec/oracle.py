"""Brute-force state-vector reference for small codes.

Exact per-syndrome quantities under a coherent Z-rotation profile: syndrome
probabilities, the diagonal matrix elements a_s, b_s of the corrected action
in the logical basis, their k_s/l_s combinations, overlap ratios q_s, r_s,
and the Bloch vector of the post-correction state.  Everything is computed
on dense 2^N vectors, so it is capped at small qubit numbers and exists to
validate the FLO pipeline and the estimators, never to scale.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .code import CodeClass, SurfaceCode
from .decoder import MatchingContext, build_context, decode

MAX_QUBITS = 20
MAX_X_STABS = 20


class OracleSizeError(ValueError):
    pass


def _bit_parity_table(n: int, mask: int) -> np.ndarray:
    """parity of popcount(x & mask) for all x in [0, 2^n)."""
    x = np.arange(1 << n, dtype=np.uint64) & np.uint64(mask)
    p = np.zeros(1 << n, dtype=np.uint8)
    while True:
        nz = x != 0
        if not nz.any():
            break
        p[nz] ^= (x[nz] & np.uint64(1)).astype(np.uint8)
        x >>= np.uint64(1)
    return p


def _mask(support) -> int:
    m = 0
    for q in support:
        m |= 1 << q
    return m


@dataclass
class LogicalBasis:
    code: SurfaceCode
    zero: np.ndarray
    one: np.ndarray

    @property
    def plus(self):
        return (self.zero + self.one) / np.sqrt(2)

    @property
    def minus(self):
        return (self.zero - self.one) / np.sqrt(2)

    @property
    def y(self):
        return (self.zero + 1j * self.one) / np.sqrt(2)

    def state(self, theta: float, phi: float) -> np.ndarray:
        return np.cos(theta / 2) * self.zero + np.sin(theta / 2) * np.exp(1j * phi) * self.one


def logical_basis(code: SurfaceCode) -> LogicalBasis:
    """|0_L> as the uniform superposition of computational states satisfying
    every Z-stabilizer and Z_L; |1_L> = X_L |0_L>."""
    n = code.n_qubits
    if n > MAX_QUBITS:
        raise OracleSizeError(f"{n} qubits exceeds the dense-oracle cap {MAX_QUBITS}")
    ok = np.ones(1 << n, dtype=bool)
    for sup in code.z_stabilizers:
        ok &= _bit_parity_table(n, _mask(sup)) == 0
    ok0 = ok & (_bit_parity_table(n, _mask(code.logical_z)) == 0)
    idx = np.nonzero(ok0)[0]
    zero = np.zeros(1 << n, dtype=complex)
    zero[idx] = 1.0 / np.sqrt(len(idx))
    xl = _mask(code.logical_x)
    one = np.zeros_like(zero)
    one[idx ^ xl] = zero[idx]
    return LogicalBasis(code=code, zero=zero, one=one)


def rotation_phases(code: SurfaceCode, eta: np.ndarray) -> np.ndarray:
    """Diagonal of exp(i sum_j eta_j Z_j) over computational states."""
    n = code.n_qubits
    eta = np.asarray(eta, dtype=float)
    tot = np.zeros(1 << n)
    for j in range(n):
        signs = 1.0 - 2.0 * _bit_parity_table(n, 1 << j).astype(float)
        tot += eta[j] * signs
    return np.exp(1j * tot)


@dataclass
class SyndromeData:
    syndrome: np.ndarray   # +1/-1 per X-stabilizer
    prob_plus: float       # P_s^+, from the |+_L> initial state
    a: complex
    b: complex
    correction: np.ndarray

    @property
    def k(self) -> complex:
        return (self.a + self.b) / 2

    @property
    def l(self) -> complex:
        return (self.a - self.b) / 2

    @property
    def gamma_s(self) -> complex:
        return self.a * np.conj(self.b)

    @property
    def q(self) -> float:
        num = abs(self.a - self.b) ** 2
        den = abs(self.a + self.b) ** 2
        return num / den if den > 0 else np.inf

    @property
    def r(self) -> float:
        num = abs(self.a - 1j * self.b) ** 2
        den = abs(self.a + 1j * self.b) ** 2
        return num / den if den > 0 else np.inf

    def bloch(self, basis: LogicalBasis, psi: np.ndarray) -> np.ndarray:
        """Bloch vector of the state after correction, for initial logical
        state psi (a dense vector in the codespace)."""
        a0 = self.a * np.vdot(basis.zero, psi)
        a1 = self.b * np.vdot(basis.one, psi)
        nrm = abs(a0) ** 2 + abs(a1) ** 2
        x = 2 * np.real(np.conj(a0) * a1) / nrm
        y = 2 * np.imag(np.conj(a0) * a1) / nrm
        z = (abs(a0) ** 2 - abs(a1) ** 2) / nrm
        return np.array([x, y, z])


def exact_channel(code: SurfaceCode, eta, ctx: MatchingContext | None = None
                  ) -> list[SyndromeData]:
    """All 2^(#X-stabs) syndrome branches of rotate-measure-correct, each
    decoded with the production decoder."""
    n = code.n_qubits
    n_x = len(code.x_stabilizers)
    if n > MAX_QUBITS or n_x > MAX_X_STABS:
        raise OracleSizeError("code too large for the dense oracle")
    if np.isscalar(eta):
        eta = np.full(n, float(eta))
    ctx = ctx or build_context(code)
    basis = logical_basis(code)
    phases = rotation_phases(code, eta)

    perms = []
    for sup in code.x_stabilizers:
        perms.append(np.arange(1 << n) ^ _mask(sup))

    out = []
    e0 = phases * basis.zero
    e1 = phases * basis.one
    ep = phases * basis.plus
    for bits in range(1 << n_x):
        s = np.array([1 - 2 * ((bits >> k) & 1) for k in range(n_x)], dtype=np.int8)
        p0, p1, pp = e0, e1, ep
        for k in range(n_x):
            p0 = (p0 + s[k] * p0[perms[k]]) / 2
            p1 = (p1 + s[k] * p1[perms[k]]) / 2
            pp = (pp + s[k] * pp[perms[k]]) / 2
        prob_plus = float(np.real(np.vdot(pp, pp)))
        corr = decode(ctx, s).h
        zsign = 1.0 - 2.0 * _bit_parity_table(n, _mask(np.nonzero(corr)[0])).astype(float)
        a = complex(np.vdot(basis.zero, zsign * p0))
        b = complex(np.vdot(basis.one, zsign * p1))
        out.append(SyndromeData(syndrome=s, prob_plus=prob_plus, a=a, b=b,
                                correction=corr))
    return out


def gamma_exact(channel: list[SyndromeData]) -> complex:
    """Sum over syndromes of a_s conj(b_s); with trace preservation this is
    the only parameter of the average logical channel."""
    return sum(sd.gamma_s for sd in channel)


def trace_preservation(channel: list[SyndromeData]) -> tuple[float, float]:
    alpha = sum(abs(sd.a) ** 2 for sd in channel)
    beta = sum(abs(sd.b) ** 2 for sd in channel)
    return float(alpha), float(beta)


def verify_class_structure(code: SurfaceCode, eta, tol: float = 1e-10) -> dict:
    """Per-class constraints on k_s, l_s: the even-Z odd-logical class acts
    unitarily (k real, l imaginary), the even-Z even-logical class acts as a
    real combination (k and l both real); odd-Z codes are unconstrained.
    Returns a report dict; raises AssertionError on violation."""
    channel = exact_channel(code, eta)
    cls = code.parity_class
    max_im_k = max(abs(sd.k.imag) for sd in channel)
    max_re_l = max(abs(sd.l.real) for sd in channel)
    max_im_l = max(abs(sd.l.imag) for sd in channel)
    report = {
        "class": cls.value,
        "max_im_k": max_im_k,
        "max_re_l": max_re_l,
        "max_im_l": max_im_l,
    }
    if cls is CodeClass.EVEN_Z_ODD_LOGICAL:
        if max_im_k > tol or max_re_l > tol:
            raise AssertionError(f"unitary form violated: {report}")
    elif cls is CodeClass.EVEN_Z_EVEN_LOGICAL:
        if max_im_k > tol or max_im_l > tol:
            raise AssertionError(f"real form violated: {report}")
    return report


def twirl_exhaustive(code: SurfaceCode, p: float,
                     ctx: MatchingContext | None = None) -> float:
    """Exact failure probability of the Pauli-twirled channel: every flip
    pattern, Bernoulli(p) per qubit, decoded with the production decoder."""
    n = code.n_qubits
    if n > MAX_QUBITS:
        raise OracleSizeError(f"{n} qubits exceeds the dense-oracle cap")
    ctx = ctx or build_context(code)
    n_x = len(code.x_stabilizers)
    xl_par = _bit_parity_table(n, _mask(code.logical_x))
    stab_par = [_bit_parity_table(n, _mask(sup)) for sup in code.x_stabilizers]
    syndrome_idx = np.zeros(1 << n, dtype=np.int64)
    for k in range(n_x):
        syndrome_idx |= stab_par[k].astype(np.int64) << k
    # decode each distinct syndrome once
    hpar = np.zeros(1 << n_x, dtype=np.uint8)
    for bits in range(1 << n_x):
        s = np.array([1 - 2 * ((bits >> k) & 1) for k in range(n_x)], dtype=np.int8)
        h = decode(ctx, s).h
        hpar[bits] = int(h[code.logical_x].sum()) % 2
    weights = _bit_parity_table(n, (1 << n) - 1)  # placeholder, recomputed below
    pop = np.zeros(1 << n, dtype=np.int64)
    for j in range(n):
        pop += (_bit_parity_table(n, 1 << j)).astype(np.int64)
    logp = pop * np.log(p) + (n - pop) * np.log1p(-p) if 0 < p < 1 else None
    if p == 0:
        probs = np.zeros(1 << n)
        probs[0] = 1.0
    elif p == 1:
        probs = np.zeros(1 << n)
        probs[-1] = 1.0
    else:
        probs = np.exp(logp)
    fail = (xl_par ^ hpar[syndrome_idx]).astype(float)
    return float(np.dot(probs, fail))
