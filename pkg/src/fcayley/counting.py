"""Exact big-integer counting for Brown-Belk sets and their boundary data.

Everything reduces to four arrays per height cap k (f, F, S, M below) plus
convolutions with short sequences, so the pipeline scales to n in the
thousands where explicit enumeration is hopeless.  All ratios are exact
Fractions; decimals appear only in rendered output.

  f[l]  trees with l leaves, height <= k       f[1] = 1,
                                               f[l] = sum f'[i] f'[l-i] over
                                               children of height <= k-1
  F[n]  forests with n leaves (F[0] = 1)       F = 1 + f*F
  S[n]  pairs of forests, total n leaves       S = F*F = F + f*S
  M[n]  marked forests = |BB(n, k)|            M = f*S = S - F

A tree of height k has at most 2^k leaves, so f has finite support and all
recurrences cost O(n * min(n, 2^k)) big-integer operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cayley import INV, base_symbol


def tree_counts(k: int, max_leaves: int) -> list[int]:
    """f[0..max_leaves]: trees with the given leaf count and height <= k."""
    if k < 0 or max_leaves < 0:
        raise ValueError("k and max_leaves must be nonnegative")
    f = [0] * (max_leaves + 1)
    if max_leaves >= 1:
        f[1] = 1
    if k == 0:
        return f
    lower = tree_counts(k - 1, min(max_leaves, 2 ** (k - 1)))
    top = min(max_leaves, 2 ** k)
    for l in range(2, top + 1):
        acc = 0
        for i in range(max(1, l - len(lower) + 1), min(l - 1, len(lower) - 1) + 1):
            acc += lower[i] * lower[l - i]
        f[l] = acc
    return f


def _support(seq: list[int]) -> list[int]:
    return [i for i, v in enumerate(seq) if v]


def _conv_short(a: list[int], b: list[int], cap: int) -> list[int]:
    """Full convolution of two short sequences, truncated at index cap."""
    out = [0] * (cap + 1)
    for i in _support(a):
        ai = a[i]
        for j in _support(b):
            if i + j > cap:
                break
            out[i + j] += ai * b[j]
    return out


def _conv_with(series: list[int], short: list[int], n_max: int) -> list[int]:
    """(short * series)[0..n_max] where short has small support."""
    sup = _support(short)
    out = [0] * (n_max + 1)
    for n in range(n_max + 1):
        acc = 0
        for l in sup:
            if l > n:
                break
            acc += short[l] * series[n - l]
        out[n] = acc
    return out


class CountTable:
    """All counting arrays for one height cap, built up to a leaf budget."""

    def __init__(self, k: int, n_max: int):
        self.k = k
        self.n_max = n_max
        cap = min(n_max, 2 ** k) if k < 64 else n_max
        self.f = tree_counts(k, cap)
        self.f += [0] * (n_max + 1 - len(self.f))
        # trees the merge moves may produce children from: height <= k-1
        low_cap = min(n_max, 2 ** (k - 1)) if k >= 1 else 0
        self.f_lower = tree_counts(k - 1, low_cap) if k >= 1 else [0] * 1
        self.F = self._forest_series()
        self.S = self._pair_series()
        self.M = [s - f for s, f in zip(self.S, self.F)]
        self._ax1: list[int] | None = None
        self._ax2: list[int] | None = None
        self._y0: list[int] | None = None

    def _forest_series(self) -> list[int]:
        f, N = self.f, self.n_max
        sup = _support(f)
        F = [0] * (N + 1)
        F[0] = 1
        for n in range(1, N + 1):
            acc = 0
            for l in sup:
                if l > n:
                    break
                acc += f[l] * F[n - l]
            F[n] = acc
        return F

    def _pair_series(self) -> list[int]:
        f, F, N = self.f, self.F, self.n_max
        sup = _support(f)
        S = [0] * (N + 1)
        for n in range(N + 1):
            acc = F[n]
            for l in sup:
                if l > n:
                    break
                acc += f[l] * S[n - l]
            S[n] = acc
        return S

    def accepts_x1_inv(self) -> list[int]:
        """Forests whose marked tree has a right neighbour, both heights < k."""
        if self._ax1 is None:
            h = _conv_short(self.f_lower, self.f_lower, self.n_max)
            self._ax1 = _conv_with(self.S, h, self.n_max)
        return self._ax1

    def accepts_x2_inv(self) -> list[int]:
        """Forests with two trees right of the marker, both heights < k."""
        if self._ax2 is None:
            self._ax2 = _conv_with(self.accepts_x1_inv(), self.f, self.n_max)
        return self._ax2

    def y0(self) -> list[int]:
        """Marked trivial tree flanked by trees of height exactly k (index n-1)."""
        if self._y0 is None:
            if self.k < 1:
                self._y0 = [0] * (self.n_max + 1)
            else:
                g = list(self.f)  # trees of height exactly k
                for i in range(min(len(g), len(self.f_lower))):
                    g[i] -= self.f_lower[i]
                gg = _conv_short(g, g, self.n_max)
                self._y0 = _conv_with(self.S, gg, self.n_max)
        return self._y0


_tables: dict[int, CountTable] = {}


def table(k: int, n: int) -> CountTable:
    """Shared table for a height cap, grown on demand."""
    t = _tables.get(k)
    if t is None or t.n_max < n:
        t = CountTable(k, max(n, 2 * t.n_max if t else n))
        _tables[k] = t
    return t


def bb_count(n: int, k: int) -> int:
    """|BB(n, k)| as an exact integer."""
    if n < 1:
        raise ValueError("n must be positive")
    return table(k, n).M[n]


def y0_count(n: int, k: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    if k < 1:
        return 0
    t = table(k, n)
    return t.y0()[n - 1] if n >= 1 else 0


def p_fraction(n: int, k: int) -> Fraction:
    """p = |Y0| / |BB(n, k)|."""
    return Fraction(y0_count(n, k), bb_count(n, k))


SUPPORTED = ("x0", "x1", "xb1", "x2")


def nu_counts(n: int, k: int, symbols) -> dict[str, int]:
    """Exact per-letter counts of vertices of BB(n, k) not accepting the letter.

    Each convolution follows the acceptance rule of its own letter; the
    symmetric property nu(a) = nu(a^-1) is a theorem about Cayley subgraphs,
    so it comes out of these independent formulas as a cross-check rather
    than being assumed.
    """
    t = table(k, n)
    M_n, F_n = t.M[n], t.F[n]
    M_prev = t.M[n - 1] if n >= 1 else 0
    S_prev = t.S[n - 1] if n >= 1 else 0
    out: dict[str, int] = {}
    for sym in symbols:
        base = base_symbol(sym)
        if base not in SUPPORTED:
            raise ValueError(f"unsupported letter {sym!r}")
        if base == "x0":
            pos = F_n          # marker leftmost
            neg = F_n          # marker rightmost
        elif base in ("x1", "xb1"):
            pos = S_prev       # marked tree trivial
            neg = M_n - t.accepts_x1_inv()[n]
        else:  # x2
            pos = F_n + M_prev  # no right neighbour, or a trivial one
            neg = M_n - t.accepts_x2_inv()[n]
        out[sym] = pos
        out[sym + INV] = neg
    return out


@dataclass(frozen=True)
class DensityRecord:
    """Exact density data of BB(n, k) over one alphabet."""

    n: int
    k: int
    alphabet: str
    size: int
    nu: dict[str, int]
    density: Fraction
    iota: Fraction
    p: Fraction
    xi: Fraction | None

    def as_obj(self) -> dict:
        from .cayley import decimal_str

        return {
            "n": self.n,
            "k": self.k,
            "alphabet": self.alphabet,
            "size": str(self.size),
            "nu": {a: str(v) for a, v in self.nu.items()},
            "delta": str(self.density),
            "delta_decimal": decimal_str(self.density),
            "iota": str(self.iota),
            "iota_decimal": decimal_str(self.iota),
            "p": str(self.p),
            "p_decimal": decimal_str(self.p) if self.p else "0",
            "xi": str(self.xi) if self.xi is not None else None,
            "xi_decimal": decimal_str(self.xi) if self.xi else None,
        }


def density_report(n: int, k: int, symbols) -> DensityRecord:
    """Density, isoperimetric quotient and per-letter boundary counts via DP."""
    symbols = tuple(symbols)
    m = len(symbols)
    size = bb_count(n, k)
    nu = nu_counts(n, k, symbols)
    cheeger = sum(nu.values())
    density = Fraction(2 * m * size - cheeger, size)
    iota = Fraction(cheeger, size)
    assert density + iota == 2 * m
    return DensityRecord(
        n=n, k=k,
        alphabet=",".join(base_symbol(s) for s in symbols),
        size=size, nu=nu, density=density, iota=iota,
        p=p_fraction(n, k),
        xi=xi_estimate(k, n) if n >= 2 else None,
    )


def xi_estimate(k: int, n: int) -> Fraction:
    """|BB(n-1, k)| / |BB(n, k)|, the non-acceptance ratio for x1."""
    if n < 2:
        raise ValueError("need n >= 2")
    t = table(k, n)
    return Fraction(t.M[n - 1], t.M[n])


def xi_diagnostics(k: int, n: int) -> dict:
    """Stabilization report: the last two successive ratios and their gap."""
    last = xi_estimate(k, n)
    prev = xi_estimate(k, n - 1)
    return {"k": k, "n": n, "xi": last, "xi_prev": prev, "gap": abs(last - prev)}


@dataclass(frozen=True)
class TrimmedReport:
    """Density of BB(n, k) over {x0, x1, xb1} after removing the isolated set."""

    n: int
    k: int
    density: Fraction
    p: Fraction
    trimmed_density: Fraction
    iota_star_bound: Fraction  # 2m - trimmed density, m = 3


def trimmed_density(n: int, k: int) -> TrimmedReport:
    """(delta - 4p) / (1 - p) for the {x0, x1, xb1} graph.

    Removing the Y0 vertices deletes exactly their two accepted slots and the
    two inverse slots pointing at them, i.e. 4 directed edges per vertex; no
    two Y0 vertices are adjacent, so there is no double counting.
    """
    rec = density_report(n, k, ("x0", "x1", "xb1"))
    p = rec.p
    if p == 1:
        raise ValueError("cannot trim: every vertex is isolated")
    trimmed = (rec.density - 4 * p) / (1 - p)
    return TrimmedReport(n=n, k=k, density=rec.density, p=p,
                         trimmed_density=trimmed,
                         iota_star_bound=6 - trimmed)


def trimming_constants(p0: Fraction = Fraction(1, 260),
                       eps: Fraction | None = None) -> dict:
    """Symbolic form of the trimming bound: with p > p0 and any eps in (0, p0),
    the isoperimetric constant is below 1 - (p0 - eps)/(1 - p0); the choice
    eps = p0/2 gives 517/518 for p0 = 1/260."""
    if eps is None:
        eps = p0 / 2
    bound = 1 - (p0 - eps) / (1 - p0)
    return {"p0": p0, "eps": eps, "iota_bound": bound}


def catalan(n: int) -> int:
    """c_n = (2n)! / (n! (n+1)!), the forest count without a height cap."""
    import math

    return math.comb(2 * n, n) // (n + 1)
