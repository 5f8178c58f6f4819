"""Finite-type root system data in the simple-root basis.

Weights are exact rational coordinate vectors over the simple roots
(integral for F4/G2, where the weight lattice equals the root lattice).
Nothing here, or anywhere else in this package, touches floating point.

Conventions are pinned by two pairing values: in F4, alpha_1 and alpha_2
are long with <alpha_2, alpha_3^vee> = -2 and <alpha_3, alpha_2^vee> = -1;
in G2, alpha_1 is short with <alpha_2, alpha_1^vee> = -3.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class WeightVec:
    """A weight written in simple-root coordinates."""

    coords: tuple[Fraction, ...]

    def __add__(self, other: "WeightVec") -> "WeightVec":
        return WeightVec(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "WeightVec") -> "WeightVec":
        return WeightVec(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "WeightVec":
        return WeightVec(tuple(-a for a in self.coords))

    def __mul__(self, c) -> "WeightVec":
        c = Fraction(c)
        return WeightVec(tuple(c * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def is_nonneg(self) -> bool:
        return all(a >= 0 for a in self.coords)

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coords)

    def to_json(self):
        return [a.numerator if a.denominator == 1 else str(a) for a in self.coords]

    @staticmethod
    def from_json(data) -> "WeightVec":
        return wv(*[Fraction(str(a)) for a in data])

    def __repr__(self):
        return "wv(%s)" % ", ".join(str(a) for a in self.coords)


def wv(*coords) -> WeightVec:
    return WeightVec(tuple(Fraction(c) for c in coords))


_CHAIN_SERIES = {"A", "B", "C", "D", "F", "G"}


def _cartan_matrix(series: str, rank: int) -> list[list[int]]:
    # entry (i, j), 0-based here, is <alpha_{j+1}, alpha_{i+1}^vee>
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def edge(i, j, down=-1, up=-1):
        a[i][j] = down
        a[j][i] = up

    if series == "A":
        for i in range(rank - 1):
            edge(i, i + 1)
    elif series == "B":
        if rank < 2:
            raise ValueError("B requires rank >= 2")
        for i in range(rank - 1):
            edge(i, i + 1)
        a[rank - 1][rank - 2] = -2  # alpha_rank short
    elif series == "C":
        if rank < 2:
            raise ValueError("C requires rank >= 2")
        for i in range(rank - 1):
            edge(i, i + 1)
        a[rank - 2][rank - 1] = -2  # alpha_rank long
    elif series == "D":
        if rank < 3:
            raise ValueError("D requires rank >= 3")
        for i in range(rank - 2):
            edge(i, i + 1)
        edge(rank - 3, rank - 1)
    elif series == "F":
        if rank != 4:
            raise ValueError("F requires rank 4")
        a = [
            [2, -1, 0, 0],
            [-1, 2, -1, 0],
            [0, -2, 2, -1],
            [0, 0, -1, 2],
        ]
    elif series == "G":
        if rank != 2:
            raise ValueError("G requires rank 2")
        a = [[2, -3], [-1, 2]]
    else:
        raise ValueError(
            "unknown series %r (supported: A, B, C, D, F4, G2)" % series
        )
    return a


def _solve_exact(mat: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a square nonsingular system by Gaussian elimination."""
    n = len(mat)
    m = [row[:] + [rhs[k]] for k, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        inv = Fraction(1) / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


@dataclass(frozen=True)
class RootSystem:
    series: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[WeightVec, ...]
    long_short: tuple[str, ...]  # per positive root: "long" | "short"
    _dsym: tuple[Fraction, ...]  # symmetrizer, (alpha_i, alpha_i) = 2 d_i

    @property
    def tag(self) -> str:
        return "%s%d" % (self.series, self.rank)

    def simple_root(self, i: int) -> WeightVec:
        return wv(*[1 if j == i - 1 else 0 for j in range(self.rank)])

    def is_positive_root(self, mu: WeightVec) -> bool:
        return mu in self._posset()

    def is_root(self, mu: WeightVec) -> bool:
        return mu in self._posset() or -mu in self._posset()

    def _posset(self):
        return frozenset(self.positive_roots)

    def norm2(self, mu: WeightVec) -> Fraction:
        # (mu, mu) with (alpha_i, alpha_j) = d_i * cartan[i][j]
        tot = Fraction(0)
        for i, a in enumerate(mu.coords):
            if a == 0:
                continue
            for j, b in enumerate(mu.coords):
                if b != 0:
                    tot += a * b * self._dsym[i] * self.cartan[i][j]
        return tot


def build_root_system(series: str, rank: int) -> RootSystem:
    """Construct the root system for a valid finite type label."""
    series = series.upper()
    if series not in _CHAIN_SERIES or rank < 1:
        raise ValueError("unknown series/rank %r/%r" % (series, rank))
    if series == "A" and rank >= 1:
        pass
    cartan = _cartan_matrix(series, rank)

    # symmetrizer: d_i cartan[i][j] = d_j cartan[j][i]
    d: list[Fraction | None] = [None] * rank
    d[0] = Fraction(1)
    changed = True
    while changed:
        changed = False
        for i in range(rank):
            for j in range(rank):
                if i != j and cartan[i][j] != 0:
                    if d[i] is not None and d[j] is None:
                        d[j] = d[i] * cartan[i][j] / cartan[j][i]
                        changed = True
    if any(x is None for x in d):
        raise ValueError("disconnected diagram for %s%d" % (series, rank))
    dmin = min(d)  # type: ignore[type-var]
    d = [x / dmin for x in d]  # type: ignore[operator]

    def pair(mu: WeightVec, i: int) -> Fraction:
        return sum(
            (mu.coords[j] * cartan[i - 1][j] for j in range(rank)), Fraction(0)
        )

    simple = [
        WeightVec(tuple(Fraction(1 if j == i else 0) for j in range(rank)))
        for i in range(rank)
    ]
    pos = list(simple)
    seen = set(pos)
    frontier = list(simple)
    while frontier:
        beta = frontier.pop()
        for i in range(1, rank + 1):
            img = beta - pair(beta, i) * simple[i - 1]
            if img.is_nonneg() and img not in seen:
                seen.add(img)
                pos.append(img)
                frontier.append(img)
    pos.sort(key=lambda b: (sum(b.coords), b.coords))

    dvals = d
    norms = []
    for b in pos:
        tot = Fraction(0)
        for i, a in enumerate(b.coords):
            for j, c in enumerate(b.coords):
                if a and c:
                    tot += a * c * dvals[i] * cartan[i][j]
        norms.append(tot)
    nmax = max(norms)
    classes = tuple("long" if n == nmax else "short" for n in norms)

    return RootSystem(
        series=series,
        rank=rank,
        cartan=tuple(tuple(row) for row in cartan),
        positive_roots=tuple(pos),
        long_short=classes,
        _dsym=tuple(dvals),
    )


def pairing(sys: RootSystem, mu: WeightVec, i: int):
    """<mu, alpha_i^vee>, linear in mu; an integer on the weight lattice."""
    val = sum(
        (mu.coords[j] * sys.cartan[i - 1][j] for j in range(sys.rank)), Fraction(0)
    )
    if val.denominator == 1:
        return val.numerator
    return val


def reflect(sys: RootSystem, mu: WeightVec, i: int) -> WeightVec:
    return mu - pairing(sys, mu, i) * sys.simple_root(i)


def dot_reflect(sys: RootSystem, mu: WeightVec, i: int) -> WeightVec:
    """s_i . mu for the dot action w . lam = w(lam + rho) - rho."""
    return mu - (pairing(sys, mu, i) + 1) * sys.simple_root(i)


def rho(sys: RootSystem) -> WeightVec:
    half = Fraction(1, 2)
    acc = WeightVec(tuple(Fraction(0) for _ in range(sys.rank)))
    for b in sys.positive_roots:
        acc = acc + b
    return half * acc


def fundamental_weight(sys: RootSystem, i: int) -> WeightVec:
    mat = [[Fraction(sys.cartan[r][c]) for c in range(sys.rank)] for r in range(sys.rank)]
    rhs = [Fraction(1 if r == i - 1 else 0) for r in range(sys.rank)]
    return WeightVec(tuple(_solve_exact(mat, rhs)))


def _dominant_in_class(sys: RootSystem, cls: str) -> WeightVec:
    found = [
        b
        for b, c in zip(sys.positive_roots, sys.long_short)
        if c == cls and all(pairing(sys, b, i) >= 0 for i in range(1, sys.rank + 1))
    ]
    if len(found) != 1:
        raise ValueError("no unique dominant %s root" % cls)
    return found[0]


def highest_long_root(sys: RootSystem) -> WeightVec:
    return _dominant_in_class(sys, "long")


def highest_short_root(sys: RootSystem) -> WeightVec:
    if all(c == "long" for c in sys.long_short):
        return _dominant_in_class(sys, "long")
    return _dominant_in_class(sys, "short")
