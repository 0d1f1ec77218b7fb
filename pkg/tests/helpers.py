"""Shared brute-force oracles for the test suite.

Everything here is deliberately slow and independent of the library's
bit-parallel code paths: quads are enumerated index-by-index and classified
from raw adjacency lookups, so a bug in the packed-word kernels cannot hide.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from math import comb

import numpy as np

from tourney import Tournament, from_arc_list


def brute_triples(t: Tournament) -> tuple[int, int]:
    """(tr3, c3) by enumerating all vertex triples."""
    m = t.matrix()
    tr3 = c3 = 0
    for a, b, c in combinations(range(t.n), 3):
        # sorted triple is cyclic iff a->b, b->c, c->a or the reverse cycle
        if m[a, b] == m[b, c] and m[a, c] != m[a, b]:
            c3 += 1
        else:
            tr3 += 1
    return tr3, c3


def brute_quads(t: Tournament) -> tuple[int, int, int, int]:
    """(tr4, w4, l4, r4) by classifying every 4-subset via score sequence."""
    m = t.matrix().astype(np.int64)
    key = {(0, 1, 2, 3): 0, (1, 1, 1, 3): 1, (0, 2, 2, 2): 2, (1, 1, 2, 2): 3}
    out = [0, 0, 0, 0]
    for quad in combinations(range(t.n), 4):
        sub = m[np.ix_(quad, quad)]
        out[key[tuple(sorted(sub.sum(axis=1)))]] += 1
    return tuple(out)


def brute_quads_fast(t: Tournament) -> tuple[int, int, int, int]:
    """Same census as brute_quads but vectorised over all C(n,4) subsets.

    Still an independent oracle: works from the dense boolean matrix and
    per-subset degree sort, no packed words anywhere.
    """
    n = t.n
    m = t.matrix()
    quads = np.array(list(combinations(range(n), 4)), dtype=np.int64)
    if quads.size == 0:
        return (0, 0, 0, 0)
    a, b, c, d = quads.T
    deg = np.zeros((len(quads), 4), dtype=np.int8)
    pairs = [(0, 1, a, b), (0, 2, a, c), (0, 3, a, d),
             (1, 2, b, c), (1, 3, b, d), (2, 3, c, d)]
    for i, j, u, v in pairs:
        fwd = m[u, v]
        deg[fwd, i] += 1
        deg[~fwd, j] += 1
    deg.sort(axis=1)
    mx = deg[:, 3]
    mn = deg[:, 0]
    tr4 = int(np.count_nonzero(mx == 3) - np.count_nonzero((mx == 3) & (mn == 1)))
    w4 = int(np.count_nonzero((mx == 3) & (mn == 1)))
    l4 = int(np.count_nonzero((mx == 2) & (mn == 0)))
    r4 = len(quads) - tr4 - w4 - l4
    return (tr4, w4, l4, r4)


def brute_arc_flags(t: Tournament, u: int, v: int) -> tuple[int, int, int, int]:
    """(o, i, tr, c) for arc u->v from raw neighbourhood intersections."""
    m = t.matrix()
    assert m[u, v]
    o = i = tr = c = 0
    for w in range(t.n):
        if w == u or w == v:
            continue
        uw, vw = m[u, w], m[v, w]
        if uw and vw:
            o += 1
        elif not uw and not vw:
            i += 1
        elif uw and not vw:
            tr += 1
        else:
            c += 1
    return o, i, tr, c


def brute_flag_values(t: Tournament, combo: str):
    """Sorted list of raw flag counts over every arc, for one combo."""
    m = t.matrix()
    vals = []
    for u in range(t.n):
        for v in range(t.n):
            if m[u, v]:
                o, i, tr, c = brute_arc_flags(t, u, v)
                got = {"o": o, "i": i, "tr": tr, "c": c,
                       "oi": o + i, "ctr": c + tr}[combo]
                vals.append(got)
    return sorted(vals)


# ---------------------------------------------------------------------------
# isomorphism-class enumeration for small orders
# ---------------------------------------------------------------------------
#
# A tournament on vertices 0..k-1 is encoded as a bit string over the
# C(k,2) unordered pairs in the order (0,1),(0,2),(1,2),(0,3),... i.e.
# pair (i,j) with i<j sits at index j*(j-1)//2 + i.  Bit set means i->j.
# With this ordering an order-(k-1) code is a prefix of every extension,
# so classes can be grown one vertex at a time.

def _pair_index(i: int, j: int) -> int:
    return j * (j - 1) // 2 + i


@lru_cache(maxsize=None)
def _perm_tables(k: int):
    """For each permutation of range(k): gather indices and flip mask.

    code_after_relabel[b] = code_before[gather[b]] XOR flip[b], where bit b
    is pair (i,j) of the relabelled tournament.
    """
    npairs = k * (k - 1) // 2
    gathers = []
    flips = []
    for perm in permutations(range(k)):
        g = np.empty(npairs, dtype=np.int64)
        f = np.empty(npairs, dtype=bool)
        for j in range(k):
            for i in range(j):
                pi, pj = perm[i], perm[j]
                if pi < pj:
                    g[_pair_index(i, j)] = _pair_index(pi, pj)
                    f[_pair_index(i, j)] = False
                else:
                    g[_pair_index(i, j)] = _pair_index(pj, pi)
                    f[_pair_index(i, j)] = True
    # flipped pair: winner bit inverts
        gathers.append(g)
        flips.append(f)
    return np.array(gathers), np.array(flips)


@lru_cache(maxsize=None)
def iso_classes(k: int) -> tuple[int, ...]:
    """Canonical integer codes of all tournament iso classes of order k.

    A code is the pair-bit string read msb-first; canonical means minimal
    over all k! relabellings.  npairs ≤ 21 for k ≤ 7, so codes fit in int64
    and the min-over-permutations is a single vectorised reduction.
    """
    if k <= 1:
        return (0,)
    prev = iso_classes(k - 1)
    npairs_prev = (k - 1) * (k - 2) // 2
    npairs = k * (k - 1) // 2
    new_bits = k - 1
    gathers, flips = _perm_tables(k)
    weights = (1 << np.arange(npairs - 1, -1, -1)).astype(np.int64)
    exts = np.arange(1 << new_bits)
    ext_bits = (exts[:, None] >> np.arange(new_bits - 1, -1, -1)) & 1
    seen: set = set()
    for code in prev:
        base = (code >> np.arange(npairs_prev - 1, -1, -1)) & 1
        bits = np.concatenate(
            [np.broadcast_to(base, (len(exts), npairs_prev)), ext_bits], axis=1
        ).astype(bool)
        cand = bits[:, gathers] ^ flips       # (exts, k!, npairs)
        codes = cand @ weights                # (exts, k!)
        seen.update(codes.min(axis=1).tolist())
    return tuple(sorted(seen))


def tournament_from_code(code: int, k: int) -> Tournament:
    """Decode a pair-bit integer back into a Tournament."""
    npairs = k * (k - 1) // 2
    arcs = []
    for j in range(k):
        for i in range(j):
            b = _pair_index(i, j)
            if (code >> (npairs - 1 - b)) & 1:
                arcs.append((i, j))
            else:
                arcs.append((j, i))
    return from_arc_list(k, arcs)


def all_tournaments(k: int):
    """One representative Tournament per isomorphism class of order k."""
    return [tournament_from_code(code, k) for code in iso_classes(k)]


ISO_COUNTS = {1: 1, 2: 1, 3: 2, 4: 4, 5: 12, 6: 56, 7: 456}


def ks_oracle(values, cdf, grid: int = 200001) -> float:
    """Sup-distance between an empirical cdf and a reference, by dense grid.

    Checks just left and right of every grid point and every sample value,
    so it bounds the true sup to within the grid spacing for any cdf that is
    monotone with jumps only at sample values or reference atoms.
    """
    values = np.sort(np.asarray(values, dtype=np.float64))
    n = len(values)
    xs = np.unique(np.concatenate([np.linspace(-0.25, 1.25, grid), values]))
    eps = 1e-12
    best = 0.0
    for shift in (-eps, 0.0, eps):
        pts = xs + shift
        ecdf = np.searchsorted(values, pts, side="right") / n
        best = max(best, float(np.max(np.abs(ecdf - cdf(pts)))))
    return best
