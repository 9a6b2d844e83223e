"""Pauli-twirled baseline: independent Z-flips, MWPM decoding, logical
failure statistics.

Each qubit flips with probability sin^2(eta); the flip pattern's syndrome is
decoded and the trial fails when the residual anticommutes with the logical
X.  The per-trial loop (syndrome, defect gains, blossom, failure parity)
runs inside one numba kernel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numba import njit

from .decoder import MatchingContext
from ._blossom_jit import solve_blossom


@dataclass
class TwirlResult:
    trials: int
    failures: int

    @property
    def fail_rate(self) -> float:
        return self.failures / self.trials

    @property
    def gamma(self) -> float:
        return 1.0 - 2.0 * self.fail_rate

    @property
    def p_l(self) -> float:
        """Diamond-norm rate |gamma - 1| = 2 * failure fraction."""
        return abs(self.gamma - 1.0)

    @property
    def p_l_se(self) -> float:
        f = self.fail_rate
        return 2.0 * math.sqrt(max(f * (1 - f), 1e-12) / self.trials)


@njit(cache=True)
def _twirl_kernel(flips, qubit_stabs, xl, dist, bdist, pair_par, bnd_par):
    trials, n = flips.shape
    n_x = bdist.shape[0]
    fails = 0
    cnt = np.zeros(n_x, dtype=np.uint8)
    defects = np.empty(n_x, dtype=np.int64)
    for t in range(trials):
        for k in range(n_x):
            cnt[k] = 0
        par = 0
        for q in range(n):
            if flips[t, q]:
                a = qubit_stabs[q, 0]
                b = qubit_stabs[q, 1]
                if a >= 0:
                    cnt[a] ^= 1
                if b >= 0:
                    cnt[b] ^= 1
                par ^= xl[q]
        nd = 0
        for k in range(n_x):
            if cnt[k]:
                defects[nd] = k
                nd += 1
        if nd > 0:
            gains = np.zeros((nd, nd), dtype=np.int64)
            root = np.arange(nd)
            for a in range(nd):
                for b in range(a + 1, nd):
                    g = bdist[defects[a]] + bdist[defects[b]] - dist[defects[a], defects[b]]
                    if g > 0:
                        gains[a, b] = g
                        gains[b, a] = g
                        ra, rb = a, b
                        while root[ra] != ra:
                            ra = root[ra]
                        while root[rb] != rb:
                            rb = root[rb]
                        if ra != rb:
                            root[rb] = ra
            for a in range(nd):
                r = a
                while root[r] != r:
                    r = root[r]
                root[a] = r
            # match each connected component of the gain graph separately
            for r in range(nd):
                if root[r] != r:
                    continue
                members = np.nonzero(root == r)[0]
                m_sz = members.shape[0]
                if m_sz == 1:
                    par ^= bnd_par[defects[members[0]]]
                    continue
                sub = np.empty((m_sz, m_sz), dtype=np.int64)
                for a in range(m_sz):
                    for b in range(m_sz):
                        sub[a, b] = gains[members[a], members[b]]
                mate = solve_blossom(sub)
                for a in range(m_sz):
                    m = mate[a]
                    if m < 0:
                        par ^= bnd_par[defects[members[a]]]
                    elif m > a:
                        i = defects[members[a]]
                        j = defects[members[m]]
                        if i > j:
                            i, j = j, i
                        par ^= pair_par[i, j]
        fails += par
    return fails


def run_twirl_point(ctx: MatchingContext, eta: float, trials: int,
                    seed_key: list[int]) -> TwirlResult:
    """Monte Carlo failure count at flip probability sin^2(eta); the RNG
    stream is derived from the seed key alone, so results are independent of
    scheduling."""
    if not 0 <= eta <= math.pi / 2:
        raise ValueError("eta must lie in [0, pi/2]")
    p = math.sin(eta) ** 2
    code = ctx.code
    rng = np.random.default_rng(seed_key)
    xl = np.zeros(code.n_qubits, dtype=np.uint8)
    xl[code.logical_x] = 1
    flips = (rng.random((trials, code.n_qubits)) < p).astype(np.uint8)
    fails = _twirl_kernel(flips, ctx.qubit_stabs, xl,
                          ctx.dist.astype(np.int64), ctx.bdist.astype(np.int64),
                          ctx.pair_parity, ctx.bnd_parity)
    return TwirlResult(trials=trials, failures=int(fails))


def run_twirl_trial(ctx: MatchingContext, eta: float, rng: np.random.Generator):
    """Single trial, returning (flips, correction, failed); the sweep path
    uses the batched kernel instead."""
    from .decoder import decode, syndrome_of

    p = math.sin(eta) ** 2
    code = ctx.code
    f = (rng.random(code.n_qubits) < p).astype(np.uint8)
    syn = syndrome_of(code, f)
    h = decode(ctx, syn).h
    residual = f ^ h
    failed = bool(int(residual[code.logical_x].sum()) % 2)
    return f, h, failed
