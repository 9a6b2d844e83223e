"""Exact maximum/minimum weight perfect matching on dense graphs.

Primal-dual blossom algorithm on a complete graph, O(n^3) for integer
weights.  Vertices are 1..n internally and blossom nodes take ids above n;
edge weights are doubled internally so all dual variables stay integral.
Zero-weight entries mean "no edge", so callers shift weights to be >= 1
(the min-weight helper does this as part of its max/min reduction).
"""

from __future__ import annotations

from collections import deque

import numpy as np

_INF = float("inf")


class _Blossom:
    """Maximum-weight matching on a dense graph with positive integer
    weights; on a complete even-order graph the result is perfect."""

    def __init__(self, w):
        n = len(w)
        self.n = n
        self.n_x = n
        N = 2 * n + 1
        gu = [[0] * N for _ in range(N)]
        gv = [[0] * N for _ in range(N)]
        gw = [[0] * N for _ in range(N)]
        for u in range(1, n + 1):
            for v in range(1, n + 1):
                gu[u][v] = u
                gv[u][v] = v
                if u != v:
                    gw[u][v] = 2 * int(w[u - 1][v - 1])
        self.gu, self.gv, self.gw = gu, gv, gw
        self.lab = [0] * N
        self.match = [0] * N
        self.slack = [0] * N
        self.st = list(range(N))
        self.pa = [0] * N
        self.S = [-1] * N
        self.vis = [0] * N
        self.flower: list[list[int]] = [[] for _ in range(N)]
        self.flower_from = [[0] * (n + 1) for _ in range(N)]
        self.q: deque[int] = deque()
        self.t = 0

    # edge record of table slot (x, y) has endpoints gu[x][y], gv[x][y]
    def e_delta(self, x, y):
        return self.lab[self.gu[x][y]] + self.lab[self.gv[x][y]] - self.gw[x][y]

    def update_slack(self, u, x):
        if not self.slack[x] or self.e_delta(u, x) < self.e_delta(self.slack[x], x):
            self.slack[x] = u

    def set_slack(self, x):
        self.slack[x] = 0
        for u in range(1, self.n + 1):
            if self.gw[u][x] > 0 and self.st[u] != x and self.S[self.st[u]] == 0:
                self.update_slack(u, x)

    def q_push(self, x):
        if x <= self.n:
            self.q.append(x)
        else:
            for y in self.flower[x]:
                self.q_push(y)

    def set_st(self, x, b):
        self.st[x] = b
        if x > self.n:
            for y in self.flower[x]:
                self.set_st(y, b)

    def get_pr(self, b, xr):
        f = self.flower[b]
        pr = f.index(xr)
        if pr % 2:
            self.flower[b] = [f[0]] + f[1:][::-1]
            return len(f) - pr
        return pr

    def set_match(self, u, v):
        self.match[u] = self.gv[u][v]
        if u <= self.n:
            return
        xr = self.flower_from[u][self.gu[u][v]]
        pr = self.get_pr(u, xr)
        f = self.flower[u]
        for i in range(pr):
            self.set_match(f[i], f[i ^ 1])
        self.set_match(xr, v)
        self.flower[u] = f[pr:] + f[:pr]

    def augment(self, u, v):
        while True:
            xnv = self.st[self.match[u]]
            self.set_match(u, v)
            if not xnv:
                return
            self.set_match(xnv, self.st[self.pa[xnv]])
            u, v = self.st[self.pa[xnv]], xnv

    def get_lca(self, u, v):
        self.t += 1
        while u or v:
            if u:
                if self.vis[u] == self.t:
                    return u
                self.vis[u] = self.t
                u = self.st[self.match[u]]
                if u:
                    u = self.st[self.pa[u]]
            u, v = v, u
        return 0

    def add_blossom(self, u, lca, v):
        b = self.n + 1
        while b <= self.n_x and self.st[b]:
            b += 1
        if b > self.n_x:
            self.n_x += 1
        self.lab[b] = 0
        self.S[b] = 0
        self.match[b] = self.match[lca]
        fl = [lca]
        x = u
        while x != lca:
            fl.append(x)
            y = self.st[self.match[x]]
            fl.append(y)
            self.q_push(y)
            x = self.st[self.pa[y]]
        fl = [fl[0]] + fl[1:][::-1]
        x = v
        while x != lca:
            fl.append(x)
            y = self.st[self.match[x]]
            fl.append(y)
            self.q_push(y)
            x = self.st[self.pa[y]]
        self.flower[b] = fl
        self.set_st(b, b)
        for x in range(1, self.n_x + 1):
            self.gw[b][x] = 0
            self.gw[x][b] = 0
        for x in range(1, self.n + 1):
            self.flower_from[b][x] = 0
        for xs in fl:
            if xs <= self.n:
                self.flower_from[b][xs] = xs
            else:
                for x in range(1, self.n + 1):
                    if self.flower_from[xs][x]:
                        self.flower_from[b][x] = xs
        for xs in fl:
            for x in range(1, self.n_x + 1):
                if self.gw[xs][x] and (not self.gw[b][x] or
                                       self.e_delta(xs, x) < self.e_delta(b, x)):
                    self.gu[b][x] = self.gu[xs][x]
                    self.gv[b][x] = self.gv[xs][x]
                    self.gw[b][x] = self.gw[xs][x]
                    self.gu[x][b] = self.gu[x][xs]
                    self.gv[x][b] = self.gv[x][xs]
                    self.gw[x][b] = self.gw[x][xs]
        self.set_slack(b)

    def expand_blossom(self, b):
        for xs in self.flower[b]:
            self.set_st(xs, xs)
        xr = self.flower_from[b][self.gu[b][self.pa[b]]]
        pr = self.get_pr(b, xr)
        f = self.flower[b]
        for i in range(0, pr, 2):
            xs, xns = f[i], f[i + 1]
            self.pa[xs] = self.gu[xns][xs]
            self.S[xs] = 1
            self.S[xns] = 0
            self.slack[xs] = 0
            self.set_slack(xns)
            self.q_push(xns)
        self.S[xr] = 1
        self.pa[xr] = self.pa[b]
        for i in range(pr + 1, len(f)):
            self.S[f[i]] = -1
            self.set_slack(f[i])
        self.st[b] = 0
        self.flower[b] = []

    def on_found_edge(self, x, y):
        u, v = self.st[self.gu[x][y]], self.st[self.gv[x][y]]
        if self.S[v] == -1:
            self.pa[v] = self.gu[x][y]
            self.S[v] = 1
            nu = self.st[self.match[v]]
            self.slack[v] = 0
            self.slack[nu] = 0
            self.S[nu] = 0
            self.q_push(nu)
        elif self.S[v] == 0:
            lca = self.get_lca(u, v)
            if not lca:
                self.augment(u, v)
                self.augment(v, u)
                return True
            self.add_blossom(u, lca, v)
        return False

    def matching_round(self):
        self.S = [-1] * len(self.S)
        self.slack = [0] * len(self.slack)
        self.q = deque()
        for x in range(1, self.n_x + 1):
            if self.st[x] == x and not self.match[x]:
                self.pa[x] = 0
                self.S[x] = 0
                self.q_push(x)
        if not self.q:
            return False
        while True:
            while self.q:
                u = self.q.popleft()
                if self.S[self.st[u]] == 1:
                    continue
                for v in range(1, self.n + 1):
                    if self.gw[u][v] > 0 and self.st[u] != self.st[v]:
                        if self.e_delta(u, v) == 0:
                            if self.on_found_edge(u, v):
                                return True
                        else:
                            self.update_slack(u, self.st[v])
            d = _INF
            for b in range(self.n + 1, self.n_x + 1):
                if self.st[b] == b and self.S[b] == 1:
                    d = min(d, self.lab[b] // 2)
            for x in range(1, self.n_x + 1):
                if self.st[x] == x and self.slack[x]:
                    if self.S[x] == -1:
                        d = min(d, self.e_delta(self.slack[x], x))
                    elif self.S[x] == 0:
                        d = min(d, self.e_delta(self.slack[x], x) // 2)
            for u in range(1, self.n + 1):
                if self.S[self.st[u]] == 0:
                    if self.lab[u] <= d:
                        return False
                    self.lab[u] -= d
                elif self.S[self.st[u]] == 1:
                    self.lab[u] += d
            for b in range(self.n + 1, self.n_x + 1):
                if self.st[b] == b:
                    if self.S[b] == 0:
                        self.lab[b] += 2 * d
                    elif self.S[b] == 1:
                        self.lab[b] -= 2 * d
            self.q = deque()
            for x in range(1, self.n_x + 1):
                if (self.st[x] == x and self.slack[x] and
                        self.st[self.slack[x]] != x and
                        self.e_delta(self.slack[x], x) == 0):
                    if self.on_found_edge(self.slack[x], x):
                        return True
            for b in range(self.n + 1, self.n_x + 1):
                if self.st[b] == b and self.S[b] == 1 and self.lab[b] == 0:
                    self.expand_blossom(b)

    def solve(self):
        w_max = 0
        for u in range(1, self.n + 1):
            for v in range(1, self.n + 1):
                w_max = max(w_max, self.gw[u][v])
        for u in range(1, self.n + 1):
            self.lab[u] = w_max // 2
        while self.matching_round():
            pass
        return self.match[1:self.n + 1]


def max_weight_perfect_matching(w) -> np.ndarray:
    """Mate array (0-based) of a maximum-weight perfect matching of the
    complete graph with positive integer weight matrix w (n even)."""
    w = np.asarray(w)
    n = w.shape[0]
    if n % 2:
        raise ValueError("perfect matching needs an even number of vertices")
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    match = _Blossom(w.tolist()).solve()
    mate = np.array([m - 1 for m in match], dtype=np.int64)
    if np.any(mate < 0) or not np.array_equal(mate[mate], np.arange(n)):
        raise RuntimeError("matching is not perfect")
    return mate


def min_weight_perfect_matching(w) -> np.ndarray:
    """Mate array of a minimum-weight perfect matching (integer weights,
    complete graph, n even)."""
    w = np.asarray(w, dtype=np.int64)
    wmax = int(w.max(initial=0))
    return max_weight_perfect_matching(wmax - w + 1)
