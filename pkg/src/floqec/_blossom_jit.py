"""Numba port of the dense blossom matching (see matching.py for the
reference implementation).  State lives in preallocated integer arrays;
the recursive helpers of the reference become explicit work stacks.

Array layout (N = 2n + 1 node slots, ids 1..n are vertices):
  gu, gv, gw   (N, N)   edge records per table slot
  flower       (N, n+2) blossom cycles, flower_len giving lengths
  flower_from  (N, n+1) sub-blossom containing each vertex
"""

from __future__ import annotations

import numpy as np
from numba import njit

_INF = np.int64(2**62)


@njit(cache=True, inline="always")
def _e_delta(x, y, gu, gv, gw, lab):
    return lab[gu[x, y]] + lab[gv[x, y]] - gw[x, y]


@njit(cache=True, inline="always")
def _update_slack(u, x, gu, gv, gw, lab, slack):
    if slack[x] == 0 or _e_delta(u, x, gu, gv, gw, lab) < _e_delta(slack[x], x, gu, gv, gw, lab):
        slack[x] = u


@njit(cache=True, inline="always")
def _set_slack(x, n, gu, gv, gw, lab, slack, st, S):
    slack[x] = 0
    for u in range(1, n + 1):
        if gw[u, x] > 0 and st[u] != x and S[st[u]] == 0:
            _update_slack(u, x, gu, gv, gw, lab, slack)


@njit(cache=True)
def _q_push(x, n, flower, flower_len, q, q_tail, stack):
    sp = 0
    stack[sp] = x
    sp += 1
    while sp > 0:
        sp -= 1
        y = stack[sp]
        if y <= n:
            q[q_tail] = y
            q_tail += 1
        else:
            for i in range(flower_len[y]):
                stack[sp] = flower[y, i]
                sp += 1
    return q_tail


@njit(cache=True)
def _set_st(x, b, n, st, flower, flower_len, stack):
    sp = 0
    stack[sp] = x
    sp += 1
    while sp > 0:
        sp -= 1
        y = stack[sp]
        st[y] = b
        if y > n:
            for i in range(flower_len[y]):
                stack[sp] = flower[y, i]
                sp += 1


@njit(cache=True)
def _get_pr(b, xr, flower, flower_len):
    ln = flower_len[b]
    pr = 0
    for i in range(ln):
        if flower[b, i] == xr:
            pr = i
            break
    if pr % 2 == 1:
        # reverse flower[b, 1:ln]
        lo, hi = 1, ln - 1
        while lo < hi:
            tmp = flower[b, lo]
            flower[b, lo] = flower[b, hi]
            flower[b, hi] = tmp
            lo += 1
            hi -= 1
        return ln - pr
    return pr


@njit(cache=True)
def _set_match(u0, v0, n, gu, gv, match, flower, flower_len, flower_from, frames):
    sp = 0
    frames[sp, 0] = u0
    frames[sp, 1] = v0
    sp += 1
    while sp > 0:
        sp -= 1
        u = frames[sp, 0]
        v = frames[sp, 1]
        match[u] = gv[u, v]
        if u <= n:
            continue
        xr = flower_from[u, gu[u, v]]
        pr = _get_pr(u, xr, flower, flower_len)
        ln = flower_len[u]
        for i in range(pr):
            frames[sp, 0] = flower[u, i]
            frames[sp, 1] = flower[u, i ^ 1]
            sp += 1
        frames[sp, 0] = xr
        frames[sp, 1] = v
        sp += 1
        # rotate flower[u] left by pr
        if pr > 0:
            buf = np.empty(ln, dtype=np.int64)
            for i in range(ln):
                buf[i] = flower[u, (pr + i) % ln]
            for i in range(ln):
                flower[u, i] = buf[i]


@njit(cache=True)
def _augment(u, v, n, gu, gv, match, st, pa, flower, flower_len, flower_from, frames):
    while True:
        xnv = st[match[u]]
        _set_match(u, v, n, gu, gv, match, flower, flower_len, flower_from, frames)
        if xnv == 0:
            return
        _set_match(xnv, st[pa[xnv]], n, gu, gv, match, flower, flower_len, flower_from, frames)
        u = st[pa[xnv]]
        v = xnv


@njit(cache=True)
def _get_lca(u, v, t, st, match, pa, vis):
    while u != 0 or v != 0:
        if u != 0:
            if vis[u] == t:
                return u
            vis[u] = t
            u = st[match[u]]
            if u != 0:
                u = st[pa[u]]
        tmp = u
        u = v
        v = tmp
    return 0


@njit(cache=True)
def _add_blossom(u, lca, v, n, n_x, gu, gv, gw, lab, match, slack, st, pa, S,
                 flower, flower_len, flower_from, q, q_tail, stack):
    b = n + 1
    while b <= n_x and st[b] != 0:
        b += 1
    if b > n_x:
        n_x += 1
    lab[b] = 0
    S[b] = 0
    match[b] = match[lca]
    ln = 0
    flower[b, ln] = lca
    ln += 1
    x = u
    while x != lca:
        flower[b, ln] = x
        ln += 1
        y = st[match[x]]
        flower[b, ln] = y
        ln += 1
        q_tail = _q_push(y, n, flower, flower_len, q, q_tail, stack)
        x = st[pa[y]]
    # reverse flower[b, 1:ln]
    lo, hi = 1, ln - 1
    while lo < hi:
        tmp = flower[b, lo]
        flower[b, lo] = flower[b, hi]
        flower[b, hi] = tmp
        lo += 1
        hi -= 1
    x = v
    while x != lca:
        flower[b, ln] = x
        ln += 1
        y = st[match[x]]
        flower[b, ln] = y
        ln += 1
        q_tail = _q_push(y, n, flower, flower_len, q, q_tail, stack)
        x = st[pa[y]]
    flower_len[b] = ln
    _set_st(b, b, n, st, flower, flower_len, stack)
    for x in range(1, n_x + 1):
        gw[b, x] = 0
        gw[x, b] = 0
    for x in range(1, n + 1):
        flower_from[b, x] = 0
    for i in range(ln):
        xs = flower[b, i]
        if xs <= n:
            flower_from[b, xs] = xs
        else:
            for x in range(1, n + 1):
                if flower_from[xs, x] != 0:
                    flower_from[b, x] = xs
    for i in range(ln):
        xs = flower[b, i]
        for x in range(1, n_x + 1):
            if gw[xs, x] != 0 and (gw[b, x] == 0 or
                                   _e_delta(xs, x, gu, gv, gw, lab) <
                                   _e_delta(b, x, gu, gv, gw, lab)):
                gu[b, x] = gu[xs, x]
                gv[b, x] = gv[xs, x]
                gw[b, x] = gw[xs, x]
                gu[x, b] = gu[x, xs]
                gv[x, b] = gv[x, xs]
                gw[x, b] = gw[x, xs]
    _set_slack(b, n, gu, gv, gw, lab, slack, st, S)
    return n_x, q_tail


@njit(cache=True)
def _expand_blossom(b, n, gu, gv, gw, lab, slack, st, pa, S,
                    flower, flower_len, flower_from, q, q_tail, stack):
    for i in range(flower_len[b]):
        _set_st(flower[b, i], flower[b, i], n, st, flower, flower_len, stack)
    xr = flower_from[b, gu[b, pa[b]]]
    pr = _get_pr(b, xr, flower, flower_len)
    i = 0
    while i < pr:
        xs = flower[b, i]
        xns = flower[b, i + 1]
        pa[xs] = gu[xns, xs]
        S[xs] = 1
        S[xns] = 0
        slack[xs] = 0
        _set_slack(xns, n, gu, gv, gw, lab, slack, st, S)
        q_tail = _q_push(xns, n, flower, flower_len, q, q_tail, stack)
        i += 2
    S[xr] = 1
    pa[xr] = pa[b]
    for i in range(pr + 1, flower_len[b]):
        xs = flower[b, i]
        S[xs] = -1
        _set_slack(xs, n, gu, gv, gw, lab, slack, st, S)
    st[b] = 0
    flower_len[b] = 0
    return q_tail


@njit(cache=True)
def _on_found_edge(x, y, n, n_x, gu, gv, gw, lab, match, slack, st, pa, S, vis, t,
                   flower, flower_len, flower_from, q, q_tail, stack, frames):
    u = st[gu[x, y]]
    v = st[gv[x, y]]
    found = False
    if S[v] == -1:
        pa[v] = gu[x, y]
        S[v] = 1
        nu = st[match[v]]
        slack[v] = 0
        slack[nu] = 0
        S[nu] = 0
        q_tail = _q_push(nu, n, flower, flower_len, q, q_tail, stack)
    elif S[v] == 0:
        lca = _get_lca(u, v, t, st, match, pa, vis)
        if lca == 0:
            _augment(u, v, n, gu, gv, match, st, pa, flower, flower_len, flower_from, frames)
            _augment(v, u, n, gu, gv, match, st, pa, flower, flower_len, flower_from, frames)
            found = True
        else:
            n_x, q_tail = _add_blossom(u, lca, v, n, n_x, gu, gv, gw, lab, match,
                                       slack, st, pa, S, flower, flower_len,
                                       flower_from, q, q_tail, stack)
    return found, n_x, q_tail


@njit(cache=True)
def solve_blossom(w: np.ndarray) -> np.ndarray:
    """Mate array (0-based) of a maximum-weight perfect matching of the
    complete graph with positive integer weights w."""
    n = w.shape[0]
    N = n + n // 2 + 2
    gu = np.zeros((N, N), dtype=np.int64)
    gv = np.zeros((N, N), dtype=np.int64)
    gw = np.zeros((N, N), dtype=np.int64)
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            gu[u, v] = u
            gv[u, v] = v
            if u != v:
                gw[u, v] = 2 * w[u - 1, v - 1]
    lab = np.zeros(N, dtype=np.int64)
    match = np.zeros(N, dtype=np.int64)
    slack = np.zeros(N, dtype=np.int64)
    st = np.arange(N, dtype=np.int64)
    pa = np.zeros(N, dtype=np.int64)
    S = np.full(N, -1, dtype=np.int64)
    vis = np.zeros(N, dtype=np.int64)
    flower = np.zeros((N, n + 2), dtype=np.int64)
    flower_len = np.zeros(N, dtype=np.int64)
    flower_from = np.zeros((N, n + 1), dtype=np.int64)
    q = np.zeros(4 * N, dtype=np.int64)
    stack = np.zeros(2 * N, dtype=np.int64)
    frames = np.zeros((4 * N, 2), dtype=np.int64)
    n_x = n
    t = 0

    w_max = np.int64(0)
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            if gw[u, v] > w_max:
                w_max = gw[u, v]
    for u in range(1, n + 1):
        lab[u] = w_max // 2
    # greedy warm start on initially tight (maximum-weight) edges
    for u in range(1, n + 1):
        if match[u] == 0:
            for v in range(1, n + 1):
                if v != u and match[v] == 0 and gw[u, v] == w_max:
                    match[u] = v
                    match[v] = u
                    break

    while True:
        # one augmenting round
        for i in range(N):
            S[i] = -1
            slack[i] = 0
        q_head = 0
        q_tail = 0
        for x in range(1, n_x + 1):
            if st[x] == x and match[x] == 0:
                pa[x] = 0
                S[x] = 0
                q_tail = _q_push(x, n, flower, flower_len, q, q_tail, stack)
        if q_tail == 0:
            break
        augmented = False
        while not augmented:
            while q_head < q_tail:
                u = q[q_head]
                q_head += 1
                stu = st[u]
                if S[stu] == 1:
                    continue
                # rows/cols of real vertices keep identity edge records, so
                # the scan can use lab/gw directly
                lab_u = lab[u]
                for v in range(1, n + 1):
                    w_uv = gw[u, v]
                    if w_uv > 0 and stu != st[v]:
                        if lab_u + lab[v] - w_uv == 0:
                            t += 1
                            found, n_x, q_tail = _on_found_edge(
                                u, v, n, n_x, gu, gv, gw, lab, match, slack, st,
                                pa, S, vis, t, flower, flower_len, flower_from,
                                q, q_tail, stack, frames)
                            if found:
                                augmented = True
                                break
                            stu = st[u]
                        else:
                            _update_slack(u, st[v], gu, gv, gw, lab, slack)
                if augmented:
                    break
            if augmented:
                break
            d = _INF
            for b in range(n + 1, n_x + 1):
                if st[b] == b and S[b] == 1:
                    dd = lab[b] // 2
                    if dd < d:
                        d = dd
            for x in range(1, n_x + 1):
                if st[x] == x and slack[x] != 0:
                    if S[x] == -1:
                        dd = _e_delta(slack[x], x, gu, gv, gw, lab)
                        if dd < d:
                            d = dd
                    elif S[x] == 0:
                        dd = _e_delta(slack[x], x, gu, gv, gw, lab) // 2
                        if dd < d:
                            d = dd
            stop = False
            for u in range(1, n + 1):
                if S[st[u]] == 0:
                    if lab[u] <= d:
                        stop = True
            if stop or d >= _INF:
                break
            for u in range(1, n + 1):
                if S[st[u]] == 0:
                    lab[u] -= d
                elif S[st[u]] == 1:
                    lab[u] += d
            for b in range(n + 1, n_x + 1):
                if st[b] == b:
                    if S[b] == 0:
                        lab[b] += 2 * d
                    elif S[b] == 1:
                        lab[b] -= 2 * d
            q_head = 0
            q_tail = 0
            for x in range(1, n_x + 1):
                if (st[x] == x and slack[x] != 0 and st[slack[x]] != x and
                        _e_delta(slack[x], x, gu, gv, gw, lab) == 0):
                    t += 1
                    found, n_x, q_tail = _on_found_edge(
                        slack[x], x, n, n_x, gu, gv, gw, lab, match, slack, st,
                        pa, S, vis, t, flower, flower_len, flower_from,
                        q, q_tail, stack, frames)
                    if found:
                        augmented = True
                        break
            if augmented:
                break
            for b in range(n + 1, n_x + 1):
                if st[b] == b and S[b] == 1 and lab[b] == 0:
                    q_tail = _expand_blossom(b, n, gu, gv, gw, lab, slack, st, pa,
                                             S, flower, flower_len, flower_from,
                                             q, q_tail, stack)
        if not augmented:
            break

    mate = np.empty(n, dtype=np.int64)
    for u in range(1, n + 1):
        mate[u - 1] = match[u] - 1
    return mate
