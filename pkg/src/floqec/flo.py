"""Fermion-linear-optics engine: Gaussian states as covariance matrices.

The state of n Majorana modes is the real antisymmetric matrix
gamma[p, q] = <i c_p c_q> (p != q), together with the accumulated
log-probability of all postselected or sampled dimer outcomes.  Pure states
satisfy gamma gamma^T = 1; the engine re-purifies periodically to bound
floating-point drift.
"""

from __future__ import annotations

import math

import numpy as np

ZERO_PROB = 1e-12
PURITY_TOL = 1e-8
REPURIFY_EVERY = 256


class DegenerateProbabilityError(RuntimeError):
    """A postselected outcome has probability below the zero threshold."""


class GaussianState:
    def __init__(self, gamma: np.ndarray, log_prob: float = 0.0,
                 repurify_every: int = REPURIFY_EVERY):
        self.gamma = gamma
        self.log_prob = log_prob
        self.repurify_every = repurify_every
        self._meas_count = 0

    @property
    def n_modes(self) -> int:
        return self.gamma.shape[0]

    @classmethod
    def from_matching(cls, matching: list[tuple[int, int]], n_modes: int,
                      dtype=np.float64) -> "GaussianState":
        """All dimers of the matching start in their +1 eigenstate: the
        oriented pair (p, q) gets gamma[p, q] = +1."""
        seen = sorted(m for pair in matching for m in pair)
        if seen != list(range(n_modes)):
            raise ValueError("matching must be perfect over all modes")
        gamma = np.zeros((n_modes, n_modes), dtype=dtype)
        for p, q in matching:
            gamma[p, q] = 1.0
            gamma[q, p] = -1.0
        return cls(gamma)

    def copy(self) -> "GaussianState":
        out = GaussianState(self.gamma.copy(), self.log_prob, self.repurify_every)
        out._meas_count = self._meas_count
        return out

    # -- operations ---------------------------------------------------------

    def apply_rotation(self, p: int, q: int, theta: float) -> None:
        """Conjugate by exp(theta c_p c_q): the (p, q) plane rotates by
        2 theta, c_p -> cos(2t) c_p - sin(2t) c_q, c_q -> cos(2t) c_q
        + sin(2t) c_p."""
        if p == q:
            raise ValueError("rotation needs two distinct modes")
        c, s = math.cos(2 * theta), math.sin(2 * theta)
        g = self.gamma
        rp = c * g[p, :] - s * g[q, :]
        rq = c * g[q, :] + s * g[p, :]
        g[p, :], g[q, :] = rp, rq
        cp = c * g[:, p] - s * g[:, q]
        cq = c * g[:, q] + s * g[:, p]
        g[:, p], g[:, q] = cp, cq
        g[p, p] = g[q, q] = 0.0

    def dimer_probability(self, p: int, q: int, outcome: int) -> float:
        return 0.5 * (1.0 + outcome * self.gamma[p, q])

    def measure_dimer(self, p: int, q: int, outcome: int) -> float:
        """Projectively measure i c_p c_q postselecting the outcome; returns
        the outcome probability and collapses the state."""
        if outcome not in (-1, 1):
            raise ValueError("outcome must be +1 or -1")
        prob = self.dimer_probability(p, q, outcome)
        if prob < ZERO_PROB:
            raise DegenerateProbabilityError(
                f"outcome {outcome} on dimer ({p},{q}) has probability {prob:.3e}")
        g = self.gamma
        u = g[:, p].copy()
        v = g[:, q].copy()
        coef = outcome / (2.0 * prob)
        g += coef * (np.outer(v, u) - np.outer(u, v))
        g[p, :] = 0.0
        g[q, :] = 0.0
        g[:, p] = 0.0
        g[:, q] = 0.0
        g[p, q] = outcome
        g[q, p] = -outcome
        self.log_prob += math.log(prob)
        self._meas_count += 1
        if self.repurify_every and self._meas_count % self.repurify_every == 0:
            self.repurify()
        return prob

    def sample_dimer(self, p: int, q: int, rng: np.random.Generator) -> int:
        outcome = 1 if rng.random() < self.dimer_probability(p, q, +1) else -1
        self.measure_dimer(p, q, outcome)
        return outcome

    # -- housekeeping ---------------------------------------------------------

    def purity_error(self) -> float:
        g = self.gamma
        return float(np.max(np.abs(g @ g.T - np.eye(self.n_modes, dtype=g.dtype))))

    def repurify(self) -> None:
        """One Newton-Schulz step toward the nearest orthogonal antisymmetric
        matrix: gamma <- 1.5 gamma - 0.5 gamma gamma^T gamma.  Preserves
        antisymmetry exactly and converges quadratically for near-pure
        states."""
        g = self.gamma
        self.gamma = 1.5 * g - 0.5 * (g @ g.T @ g)

    def check(self) -> None:
        g = self.gamma
        if np.max(np.abs(g + g.T)) > 1e-9:
            raise AssertionError("covariance matrix is not antisymmetric")
        if np.max(np.abs(g)) > 1.0 + 1e-9:
            raise AssertionError("covariance entries exceed 1")
        if self.purity_error() > PURITY_TOL:
            raise AssertionError("state is not pure within tolerance")
