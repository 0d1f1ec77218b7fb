"""Exact bit-parallel subtournament counting and per-arc flag statistics.

Order-3/4 counts are exact integers obtained from word-wise AND + popcount
over packed adjacency rows; total work for the order-4 census is
O(n^3 / word).  Per-arc flag counts (the four ways a third vertex can
attach to an arc) feed empirical distributions that are compared against
uniform or point-mass references with a sup-norm (KS) distance.
"""

from __future__ import annotations

import csv
import io as _io
import math
from dataclasses import dataclass, field

import numpy as np

from . import _bits, _parallel
from .core import Tournament
from .errors import EmptyDistribution, NotAnArc, OrderTooSmall

FLAG_COMBOS = ("o", "i", "tr", "c", "oi", "ctr")

_COMBO_ALIASES = {
    "o": "o", "i": "i", "tr": "tr", "c": "c",
    "oi": "oi", "o+i": "oi", "ctr": "ctr", "c+tr": "ctr",
}


def _binom(n: int, k: int) -> int:
    return math.comb(n, k) if n >= k else 0


# ---------------------------------------------------------------------------
# per-arc flag counts


@dataclass(frozen=True)
class ArcFlagCounts:
    """Third-vertex census for one arc u -> v.

    o:  vertices w beaten by both endpoints (u->w, v->w)
    i:  vertices beating both (w->u, w->v)
    tr: vertices continuing the arc transitively (u->w, w->v)
    c:  vertices closing a 3-cycle (v->w, w->u)
    """
    o: int
    i: int
    tr: int
    c: int

    def total(self) -> int:
        return self.o + self.i + self.tr + self.c


def arc_flag_counts(t: Tournament, u: int, v: int) -> ArcFlagCounts:
    """Exact (o, i, tr, c) for the arc u -> v; sums to n - 2."""
    if not t.has_arc(u, v):
        raise NotAnArc(f"({u},{v}) is not an arc")
    out, inp = t.out_packed, t.in_packed
    o = int(_bits.popcount_rows(out[u] & out[v]))
    i = int(_bits.popcount_rows(inp[u] & inp[v]))
    tr = int(_bits.popcount_rows(out[u] & inp[v]))
    c = int(_bits.popcount_rows(inp[u] & out[v]))
    return ArcFlagCounts(o=o, i=i, tr=tr, c=c)


# ---------------------------------------------------------------------------
# order-3 / order-4 census


def triple_counts(t: Tournament) -> tuple:
    """(tr3, c3): every 3-set is transitive or cyclic; tr3 = sum C(outdeg, 2)."""
    if t.n < 3:
        raise OrderTooSmall(f"triple counts need n >= 3, got {t.n}")
    d = t.outdegrees().astype(object)
    tr3 = int(sum(dd * (dd - 1) // 2 for dd in d))
    return tr3, _binom(t.n, 3) - tr3


def _chunks(n: int, words: int, target_bytes: int = 1 << 26) -> list:
    """Vertex chunks sized so one (chunk, n, words) uint64 block stays modest."""
    per_row = max(1, n * words * 8)
    b = max(1, min(128, target_bytes // per_row))
    return [np.arange(lo, min(lo + b, n)) for lo in range(0, n, b)]


def quad_counts(t: Tournament) -> tuple:
    """Exact (tr4, w4, l4, r4) over all C(n,4) quadruples.

    For each vertex v the induced out-neighbourhood census comes from
    |N+(u) & N+(v)| popcounts: the transitive triples inside N+(v) yield
    TR4s with source v, the cyclic ones yield W4s with apex v; dually for
    in-neighbourhoods and L4; R4 is the remainder.
    """
    if t.n < 4:
        raise OrderTooSmall(f"quad counts need n >= 4, got {t.n}")
    n = t.n
    out, inp = t.out_packed, t.in_packed
    d = t.outdegrees()

    def job(vs: np.ndarray) -> tuple:
        # cnt_out[k, u] = |N+(u) & N+(vs[k])|, similarly against N-(vs[k])
        cnt_out = np.bitwise_count(out[None, :, :] & out[vs, None, :]).sum(axis=2, dtype=np.int64)
        cnt_in = np.bitwise_count(out[None, :, :] & inp[vs, None, :]).sum(axis=2, dtype=np.int64)
        mask_out = _bits.unpack_rows(out[vs], n)
        mask_in = _bits.unpack_rows(inp[vs], n)
        # within-chunk sums fit int64: terms are <= C(n,2) over <= 128*n cells
        tr4_part = int((np.where(mask_out, cnt_out * (cnt_out - 1) // 2, 0)).sum(dtype=np.int64))
        l4tr_part = int((np.where(mask_in, cnt_in * (cnt_in - 1) // 2, 0)).sum(dtype=np.int64))
        return tr4_part, l4tr_part

    tr4 = 0
    in_tr3 = 0
    for tr4_part, l4tr_part in _parallel.map_jobs(job, _chunks(n, out.shape[1])):
        tr4 += tr4_part
        in_tr3 += l4tr_part
    w4 = int(sum(_binom(int(dd), 3) for dd in d)) - tr4
    l4 = int(sum(_binom(int(n - 1 - dd), 3) for dd in d)) - in_tr3
    r4 = _binom(n, 4) - tr4 - w4 - l4
    return tr4, w4, l4, r4


@dataclass(frozen=True)
class CountProfile:
    """Exact order-3 and (optionally) order-4 counts with their binomials."""
    n: int
    tr3: int
    c3: int
    tr4: int | None = None
    w4: int | None = None
    l4: int | None = None
    r4: int | None = None

    @property
    def binom3(self) -> int:
        return _binom(self.n, 3)

    @property
    def binom4(self) -> int:
        return _binom(self.n, 4)

    def density(self, name: str) -> float:
        num, den = self.density_pair(name)
        return num / den

    def density_pair(self, name: str) -> tuple:
        """(numerator, denominator) integers for exact density comparisons."""
        count = getattr(self, name)
        if count is None:
            raise ValueError(f"{name} was not counted")
        den = self.binom3 if name in ("tr3", "c3") else self.binom4
        return count, den

    def to_json_dict(self) -> dict:
        out = {"n": self.n, "tr3": self.tr3, "c3": self.c3, "binom3": self.binom3}
        if self.tr4 is not None:
            out.update(tr4=self.tr4, w4=self.w4, l4=self.l4, r4=self.r4,
                       binom4=self.binom4)
        names = ["tr3", "c3"] + (["tr4", "w4", "l4", "r4"] if self.tr4 is not None else [])
        out["densities"] = {
            name: {"num": self.density_pair(name)[0],
                   "den": self.density_pair(name)[1],
                   "float": self.density(name)}
            for name in names
        }
        return out


def count_profile(t: Tournament, orders=(3, 4)) -> CountProfile:
    tr3, c3 = triple_counts(t)
    if 4 in orders and t.n >= 4:
        tr4, w4, l4, r4 = quad_counts(t)
        return CountProfile(t.n, tr3, c3, tr4, w4, l4, r4)
    return CountProfile(t.n, tr3, c3)


# ---------------------------------------------------------------------------
# sampled order-4 densities


@dataclass(frozen=True)
class SampledQuadDensities:
    samples: int
    p_tr4: float
    p_w4: float
    p_l4: float
    p_r4: float
    se_tr4: float
    se_w4: float
    se_l4: float
    se_r4: float

    def to_json_dict(self) -> dict:
        return {
            "samples": self.samples,
            "p_tr4": self.p_tr4, "p_w4": self.p_w4,
            "p_l4": self.p_l4, "p_r4": self.p_r4,
            "se_tr4": self.se_tr4, "se_w4": self.se_w4,
            "se_l4": self.se_l4, "se_r4": self.se_r4,
        }


def _distinct_quads(rng: np.random.Generator, n: int, k: int) -> np.ndarray:
    """k rows of 4 distinct vertices, uniform with replacement across rows."""
    q = rng.integers(0, n, size=(k, 4), dtype=np.int64)
    while True:
        s = np.sort(q, axis=1)
        bad = (s[:, :-1] == s[:, 1:]).any(axis=1)
        if not bad.any():
            return q
        q[bad] = rng.integers(0, n, size=(int(bad.sum()), 4), dtype=np.int64)


def classify4_batch(t: Tournament, quads: np.ndarray) -> np.ndarray:
    """Class index (0=TR4, 1=W4, 2=L4, 3=R4) per row of 4 distinct vertices."""
    out = t.out_packed
    deg = np.zeros(quads.shape, dtype=np.int8)
    for a in range(4):
        for b in range(a + 1, 4):
            bit = _bits.test_bits(out, quads[:, a], quads[:, b])
            deg[:, a] += bit
            deg[:, b] += ~bit
    mx = deg.max(axis=1)
    mn = deg.min(axis=1)
    # score sequences: TR4 (0,1,2,3)  W4 (1,1,1,3)  L4 (0,2,2,2)  R4 (1,1,2,2)
    return np.where(mx == 3, np.where(mn == 0, 0, 1), np.where(mn == 0, 2, 3))


def sampled_quad_densities(t: Tournament, samples: int, seed=None) -> SampledQuadDensities:
    """Uniform 4-subsets with replacement; frequencies with binomial SEs."""
    if t.n < 4:
        raise OrderTooSmall(f"sampling needs n >= 4, got {t.n}")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    freq = np.zeros(4, dtype=np.int64)
    remaining = samples
    while remaining > 0:
        k = min(remaining, 1 << 20)
        quads = _distinct_quads(rng, t.n, k)
        cls = classify4_batch(t, quads)
        freq += np.bincount(cls, minlength=4)
        remaining -= k
    p = freq / samples
    se = np.sqrt(p * (1.0 - p) / samples)
    return SampledQuadDensities(samples, *(float(x) for x in p), *(float(x) for x in se))


# ---------------------------------------------------------------------------
# per-arc flag distributions


def arc_flag_count_arrays(t: Tournament, combos=FLAG_COMBOS) -> dict:
    """Integer flag counts per arc, one array per requested combo.

    Arrays are aligned with each other (same arc order) but the order itself
    is an implementation detail; distributions only use the multiset.
    """
    if t.n < 3:
        raise OrderTooSmall(f"arc flags need n >= 3, got {t.n}")
    combos = tuple(_COMBO_ALIASES[c] for c in combos)
    need = set()
    for cb in combos:
        need.update({"oi": {"o", "i"}, "ctr": {"c", "tr"}}.get(cb, {cb}))
    n = t.n
    out, inp = t.out_packed, t.in_packed

    def job(vs: np.ndarray) -> dict:
        # fix the arc head v; the in-neighbours u of v are the arc tails
        head_mask = _bits.unpack_rows(inp[vs], n)
        got = {}
        if "o" in need:
            got["o"] = np.bitwise_count(out[None, :, :] & out[vs, None, :]).sum(axis=2, dtype=np.int64)
        if "i" in need:
            got["i"] = np.bitwise_count(inp[None, :, :] & inp[vs, None, :]).sum(axis=2, dtype=np.int64)
        if "tr" in need:
            got["tr"] = np.bitwise_count(out[None, :, :] & inp[vs, None, :]).sum(axis=2, dtype=np.int64)
        if "c" in need:
            got["c"] = np.bitwise_count(inp[None, :, :] & out[vs, None, :]).sum(axis=2, dtype=np.int64)
        return {k: v[head_mask] for k, v in got.items()}

    parts = _parallel.map_jobs(job, _chunks(n, out.shape[1]))
    flat = {k: np.concatenate([p[k] for p in parts]) for k in need}
    result = {}
    for cb in combos:
        if cb == "oi":
            result[cb] = flat["o"] + flat["i"]
        elif cb == "ctr":
            result[cb] = flat["c"] + flat["tr"]
        else:
            result[cb] = flat[cb]
    return result


@dataclass(frozen=True)
class EmpiricalDistribution:
    """Multiset of per-arc flag counts with their normalized statistics.

    values are count/(n-2); the second factorial moment pairs count/(n-2)
    with (count-1)/(n-3), which is the finite-n-exact analogue of a squared
    density.
    """
    counts: np.ndarray = field(repr=False)
    n: int

    def __post_init__(self):
        object.__setattr__(self, "counts", np.sort(np.asarray(self.counts, dtype=np.int64)))

    @property
    def size(self) -> int:
        return int(self.counts.size)

    @property
    def values(self) -> np.ndarray:
        return self.counts / (self.n - 2)

    @property
    def mean(self) -> float:
        return float(self.values.mean()) if self.size else 0.0

    @property
    def second_moment(self) -> float:
        return float((self.values ** 2).mean()) if self.size else 0.0

    def factorial_sum(self) -> int:
        """Exact integer sum of count*(count-1) over all arcs."""
        c = self.counts
        return int((c * (c - 1)).sum(dtype=object))

    @property
    def second_factorial_moment(self) -> float:
        if self.size == 0 or self.n < 4:
            return 0.0
        return self.factorial_sum() / (self.size * (self.n - 2) * (self.n - 3))

    def value_counts(self) -> tuple:
        """(unique sorted values, multiplicities)."""
        uniq, mult = np.unique(self.counts, return_counts=True)
        return uniq / (self.n - 2), mult


def arc_flag_distribution(t: Tournament, combo: str) -> EmpiricalDistribution:
    """One normalized flag value per arc for the chosen combo.

    combo is one of o, i, tr, c, oi (= o+i), ctr (= c+tr).
    """
    key = _COMBO_ALIASES.get(str(combo).lower())
    if key is None:
        raise ValueError(f"unknown flag combo {combo!r}; choose from {FLAG_COMBOS}")
    counts = arc_flag_count_arrays(t, combos=(key,))[key]
    return EmpiricalDistribution(counts=counts, n=t.n)


# ---------------------------------------------------------------------------
# reference distributions and KS distance


@dataclass(frozen=True)
class ReferenceDistribution:
    """Either U(0, q) or a point mass at p, given by its CDF."""
    kind: str
    param: float

    @classmethod
    def uniform(cls, q: float) -> "ReferenceDistribution":
        if not (0.0 < q <= 1.0):
            raise ValueError(f"q must lie in (0,1], got {q}")
        return cls("uniform", float(q))

    @classmethod
    def point_mass(cls, p: float) -> "ReferenceDistribution":
        if not (0.0 <= p <= 1.0):
            raise ValueError(f"p must lie in [0,1], got {p}")
        return cls("point_mass", float(p))

    def cdf(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        if self.kind == "uniform":
            return np.clip(x / self.param, 0.0, 1.0)
        return (x >= self.param).astype(np.float64)

    def cdf_left(self, x: np.ndarray) -> np.ndarray:
        """Left limit F(x-); differs from cdf only at an atom."""
        x = np.asarray(x, dtype=np.float64)
        if self.kind == "uniform":
            return np.clip(x / self.param, 0.0, 1.0)
        return (x > self.param).astype(np.float64)

    def atoms(self) -> tuple:
        return () if self.kind == "uniform" else (self.param,)


def ks_distance(dist: EmpiricalDistribution, ref: ReferenceDistribution) -> float:
    """sup |empirical CDF - reference CDF|.

    Both CDFs are right-continuous steps or piecewise monotone, so the sup
    is attained at a jump of either side; it suffices to compare the two
    one-sided limits at every sample value and reference atom.
    """
    if dist.size == 0:
        raise EmptyDistribution("no values to compare")
    v = dist.values  # already sorted
    m = v.size
    pts = np.unique(np.concatenate([v, np.asarray(ref.atoms(), dtype=np.float64)]))
    e_hi = np.searchsorted(v, pts, side="right") / m
    e_lo = np.searchsorted(v, pts, side="left") / m
    d_right = float(np.max(np.abs(e_hi - ref.cdf(pts))))
    d_left = float(np.max(np.abs(e_lo - ref.cdf_left(pts))))
    return max(d_right, d_left)


# ---------------------------------------------------------------------------
# exports


def distribution_to_csv(dist: EmpiricalDistribution, bins: int | None = None) -> str:
    """CSV text: sorted value,count pairs, or a binned histogram over [0,1]."""
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if bins is None:
        w.writerow(["value", "count"])
        uniq, mult = dist.value_counts()
        for val, k in zip(uniq, mult):
            w.writerow([repr(float(val)), int(k)])
    else:
        if bins < 1:
            raise ValueError("bins must be >= 1")
        hist, edges = np.histogram(dist.values, bins=bins, range=(0.0, 1.0))
        w.writerow(["bin_lo", "bin_hi", "count"])
        for k in range(bins):
            w.writerow([repr(float(edges[k])), repr(float(edges[k + 1])), int(hist[k])])
    return buf.getvalue()
