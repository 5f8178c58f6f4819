"""Torus-graded B-modules with lowering operators, and their chain
(Jordan) decomposition for a chosen simple index.

A module stores one lowering matrix per simple root; entries are exact
rationals or, for modules assembled as extensions whose class the
induction method does not determine, named parameters.  Scalars are
therefore affine-linear expressions in parameters (class LinExpr), and
decompositions that are sensitive to a parameter's vanishing come back
as an explicit CaseSplit instead of a silently chosen branch.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .rootsys import RootSystem, WeightVec, pairing

# ---------------------------------------------------------------------------
# scalars: exact rationals, or affine-linear expressions in parameters


class LinExpr:
    """const + sum of coeff * parameter, all coefficients exact."""

    __slots__ = ("const", "terms")

    def __init__(self, const=0, terms=None):
        self.const = Fraction(const)
        self.terms = {p: Fraction(c) for p, c in (terms or {}).items() if c != 0}

    @staticmethod
    def of(x) -> "LinExpr":
        if isinstance(x, LinExpr):
            return x
        return LinExpr(x)

    @staticmethod
    def param(name: str) -> "LinExpr":
        return LinExpr(0, {name: 1})

    def __add__(self, other):
        other = LinExpr.of(other)
        terms = dict(self.terms)
        for p, c in other.terms.items():
            terms[p] = terms.get(p, Fraction(0)) + c
        return LinExpr(self.const + other.const, terms)

    __radd__ = __add__

    def __neg__(self):
        return LinExpr(-self.const, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-LinExpr.of(other))

    def __rsub__(self, other):
        return LinExpr.of(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, LinExpr):
            if not other.terms:
                other = other.const
            elif not self.terms:
                return other * self.const
            else:
                raise ValueError("nonlinear parameter product")
        c = Fraction(other)
        return LinExpr(self.const * c, {p: k * c for p, k in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * (Fraction(1) / Fraction(other))

    def is_zero(self) -> bool:
        return self.const == 0 and not self.terms

    def is_constant(self) -> bool:
        return not self.terms

    def params(self):
        return set(self.terms)

    def substitute(self, assignment) -> "LinExpr":
        """Substitute parameters; values may be numbers or affine LinExprs."""
        out = LinExpr(self.const)
        for p, c in self.terms.items():
            if p in assignment:
                out = out + LinExpr.of(assignment[p]) * c
            else:
                out = out + LinExpr(0, {p: c})
        return out

    def __eq__(self, other):
        other = LinExpr.of(other)
        return self.const == other.const and self.terms == other.terms

    def __hash__(self):
        return hash((self.const, frozenset(self.terms.items())))

    def __repr__(self):
        if self.is_constant():
            return str(self.const)
        bits = [] if self.const == 0 else [str(self.const)]
        bits += ["%s*%s" % (c, p) for p, c in sorted(self.terms.items())]
        return " + ".join(bits)


Scalar = Fraction | int | LinExpr


def as_fraction(x: Scalar) -> Fraction:
    if isinstance(x, LinExpr):
        if not x.is_constant():
            raise ValueError("parameter-dependent scalar where a constant is needed")
        return x.const
    return Fraction(x)


def scalar_is_zero(x: Scalar) -> bool:
    return x.is_zero() if isinstance(x, LinExpr) else x == 0


def scalar_params(x: Scalar) -> set:
    return x.params() if isinstance(x, LinExpr) else set()


def solve_constraints(eqs) -> dict:
    """Solve affine expressions set to zero for their parameters.

    Returns an assignment param -> LinExpr (possibly constant) that
    eliminates one parameter per independent equation, with earlier
    pivots rewritten in terms of the remaining free parameters.
    Raises ValueError if the system forces a nonzero constant to vanish.
    """
    sol: dict = {}
    for e in eqs:
        e = LinExpr.of(e).substitute(sol)
        if e.is_constant():
            if e.const != 0:
                raise ValueError("inconsistent linear constraints")
            continue
        p = min(e.terms)
        c = e.terms[p]
        val = LinExpr(
            -e.const / c, {q: -k / c for q, k in e.terms.items() if q != p}
        )
        sol = {q: v.substitute({p: val}) for q, v in sol.items()}
        sol[p] = val
    return sol


# ---------------------------------------------------------------------------
# sparse exact linear algebra on dict-keyed coordinate vectors


def vec_add_scaled(acc: dict, vec: dict, c) -> None:
    for k, v in vec.items():
        cur = acc.get(k, 0)
        new = cur + c * v
        if scalar_is_zero(new):
            acc.pop(k, None)
        else:
            acc[k] = new


class Span:
    """Gauss-Jordan row space with recorded combinations.

    Rows added with a tag can later be recovered: reduce(v) returns
    (comb, residual) with v = sum comb[tag] * row_tag + residual.
    Pivot entries must be parameter-free; reduced vectors may carry
    LinExpr coordinates.
    """

    def __init__(self):
        self.rows = []  # (pivot_key, vec, comb)

    def _eliminate(self, vec: dict, comb: dict) -> None:
        for key, row, rcomb in self.rows:
            c = vec.get(key)
            if c is not None and not scalar_is_zero(c):
                vec_add_scaled(vec, row, -c)
                vec_add_scaled(comb, rcomb, -c)
                vec.pop(key, None)

    def add(self, vec: dict, tag) -> bool:
        """Add a generator; returns False if dependent on earlier rows."""
        vec = {k: as_fraction(v) for k, v in vec.items() if not scalar_is_zero(v)}
        comb = {tag: Fraction(1)}
        self._eliminate(vec, comb)
        vec = {k: v for k, v in vec.items() if v != 0}
        if not vec:
            return False
        key = min(vec)
        inv = Fraction(1) / vec[key]
        vec = {k: v * inv for k, v in vec.items()}
        comb = {t: v * inv for t, v in comb.items()}
        for _, row, rcomb in self.rows:
            c = row.get(key)
            if c:
                vec_add_scaled(row, vec, -c)
                vec_add_scaled(rcomb, comb, -c)
                row.pop(key, None)
        self.rows.append((key, vec, comb))
        return True

    def reduce(self, vec: dict):
        vec = dict(vec)
        comb: dict = {}
        self._eliminate(vec, comb)
        vec = {k: v for k, v in vec.items() if not scalar_is_zero(v)}
        return {t: -c for t, c in comb.items() if not scalar_is_zero(c)}, vec

    def __len__(self):
        return len(self.rows)


def nullspace(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    """Kernel basis of a dense matrix (rows x cols), exact."""
    if not mat:
        return []
    rows, cols = len(mat), len(mat[0])
    m = [row[:] for row in mat]
    piv_of_col: dict[int, int] = {}
    r = 0
    for c in range(cols):
        sel = next((k for k in range(r, rows) if m[k][c] != 0), None)
        if sel is None:
            continue
        m[r], m[sel] = m[sel], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for k in range(rows):
            if k != r and m[k][c] != 0:
                f = m[k][c]
                m[k] = [x - f * y for x, y in zip(m[k], m[r])]
        piv_of_col[c] = r
        r += 1
        if r == rows:
            break
    out = []
    for c in range(cols):
        if c in piv_of_col:
            continue
        v = [Fraction(0)] * cols
        v[c] = Fraction(1)
        for pc, pr in piv_of_col.items():
            v[pc] = -m[pr][c]
        out.append(v)
    return out


# ---------------------------------------------------------------------------
# modules


@dataclass(frozen=True)
class BModule:
    """Finite-dimensional torus-graded module over the (negative) Borel."""

    sys: RootSystem
    weights: tuple[WeightVec, ...]
    # per simple index: column dicts, lowering[i][src] = {tgt: scalar}
    lowering: dict[int, tuple[dict, ...]] = field(compare=False)
    name: str = ""

    @property
    def dim(self) -> int:
        return len(self.weights)

    def validate(self) -> None:
        for i in range(1, self.sys.rank + 1):
            alpha = self.sys.simple_root(i)
            cols = self.lowering[i]
            if len(cols) != self.dim:
                raise ValueError("lowering_%d has wrong shape" % i)
            for src, col in enumerate(cols):
                for tgt, c in col.items():
                    if scalar_is_zero(c):
                        continue
                    if self.weights[tgt] != self.weights[src] - alpha:
                        raise ValueError(
                            "entry %d->%d of lowering_%d violates the grading"
                            % (src, tgt, i)
                        )

    def params(self) -> set:
        out: set = set()
        for cols in self.lowering.values():
            for col in cols:
                for c in col.values():
                    out |= scalar_params(c)
        return out

    def to_json(self) -> dict:
        def enc(c):
            c = as_fraction(c) if not scalar_params(c) else c
            if isinstance(c, LinExpr):
                return repr(c)
            return str(Fraction(c))

        return {
            "sys": self.sys.tag,
            "name": self.name,
            "weights": [w.to_json() for w in self.weights],
            "lowering": {
                str(i): [{str(t): enc(c) for t, c in col.items()} for col in cols]
                for i, cols in self.lowering.items()
            },
            "params": sorted(self.params()),
        }


def zero_module(sys: RootSystem, name: str = "0") -> BModule:
    return BModule(sys, (), {i: () for i in range(1, sys.rank + 1)}, name)


def line_module(sys: RootSystem, lam: WeightVec, name: str = "") -> BModule:
    return BModule(
        sys,
        (lam,),
        {i: ({},) for i in range(1, sys.rank + 1)},
        name or "C_%r" % (lam,),
    )


def direct_sum(m: BModule, n: BModule, name: str = "") -> BModule:
    off = m.dim
    lowering = {}
    for i in range(1, m.sys.rank + 1):
        cols = [dict(col) for col in m.lowering[i]]
        cols += [{t + off: c for t, c in col.items()} for col in n.lowering[i]]
        lowering[i] = tuple(cols)
    return BModule(m.sys, m.weights + n.weights, lowering, name or "%s + %s" % (m.name, n.name))


Character = dict  # WeightVec -> int, possibly signed


def character(m: BModule) -> Character:
    ch: Character = {}
    for w in m.weights:
        ch[w] = ch.get(w, 0) + 1
    return ch


def char_dim(ch: Character) -> int:
    return sum(ch.values())


def char_sub(a: Character, b: Character) -> Character:
    out = dict(a)
    for w, c in b.items():
        out[w] = out.get(w, 0) - c
    return {w: c for w, c in out.items() if c != 0}


def char_add(a: Character, b: Character) -> Character:
    return char_sub(a, {w: -c for w, c in b.items()})


def dim_at(m: BModule, mu: WeightVec) -> int:
    return sum(1 for w in m.weights if w == mu)


def instantiate(m: BModule, assignment) -> BModule:
    """Substitute parameter values; the result must be fully known."""
    missing = m.params() - set(assignment)
    if missing:
        raise ValueError("assignment misses parameters %s" % sorted(missing))
    lowering = {}
    for i, cols in m.lowering.items():
        new_cols = []
        for col in cols:
            nc = {}
            for t, c in col.items():
                if isinstance(c, LinExpr):
                    c = c.substitute(assignment)
                    c = c.const if c.is_constant() else c
                if not scalar_is_zero(c):
                    nc[t] = Fraction(c) if not isinstance(c, LinExpr) else c
            new_cols.append(nc)
        lowering[i] = tuple(new_cols)
    return BModule(m.sys, m.weights, lowering, m.name)


# ---------------------------------------------------------------------------
# chain decomposition


@dataclass(frozen=True)
class Chain:
    """A Jordan string for one lowering operator.

    vectors[a] has weight top - a*alpha_i; the operator sends vectors[a]
    exactly to vectors[a+1] and kills the last.  twist is the coroot
    pairing of the chain's character part: <top, alpha_i^vee> - ell.
    """

    top: WeightVec
    ell: int
    vectors: tuple  # coordinate dicts in the ambient module's basis
    twist: int


@dataclass(frozen=True)
class CaseSplit:
    """Decompositions per zero/nonzero instantiation of the parameters
    that appear in the requested lowering matrix."""

    params: tuple[str, ...]
    cases: dict  # assignment tuple (0/1 per param) -> list[Chain]

    def shapes_agree(self) -> bool:
        return len({chain_shape(chains) for chains in self.cases.values()}) == 1

    def pick(self, value: int) -> list["Chain"]:
        key = tuple(value for _ in self.params)
        return self.cases[key]


def _apply_cols(cols, vec: dict) -> dict:
    out: dict = {}
    for src, c in vec.items():
        for tgt, e in cols[src].items():
            cur = out.get(tgt, 0)
            new = cur + c * e
            if scalar_is_zero(new):
                out.pop(tgt, None)
            else:
                out[tgt] = new
    return out


def chain_shape(chains) -> tuple:
    """Isomorphism-type key of a chain list: sorted (top weight, length)."""
    return tuple(sorted((tuple(c.top.coords), c.ell) for c in chains))


def matrix_params(m: BModule, i: int) -> tuple:
    """Sorted names of undetermined scalars appearing in lowering_i."""
    return tuple(
        sorted({p for col in m.lowering[i] for c in col.values() for p in scalar_params(c)})
    )


def chain_decompose(m: BModule, i: int):
    """Jordan-chain decomposition of lowering_i, or a CaseSplit.

    With k undetermined scalars in the matrix this enumerates all 2**k
    zero/nonzero instantiations, so callers should bound k before calling.
    """
    params = matrix_params(m, i)
    if not params:
        return _chain_decompose_known(m, i)
    cases = {}
    for values in product((0, 1), repeat=len(params)):
        assignment = dict(zip(params, values))
        inst = instantiate_matrix(m, i, assignment)
        cases[values] = _chain_decompose_known(inst, i)
    return CaseSplit(tuple(params), cases)


def instantiate_matrix(m: BModule, i: int, assignment) -> BModule:
    """Substitute parameters appearing in lowering_i only."""
    lowering = dict(m.lowering)
    new_cols = []
    for col in m.lowering[i]:
        nc = {}
        for t, c in col.items():
            if isinstance(c, LinExpr):
                c = c.substitute(assignment)
                c = c.const if c.is_constant() else c
            if not scalar_is_zero(c):
                nc[t] = c
        new_cols.append(nc)
    lowering[i] = tuple(new_cols)
    return BModule(m.sys, m.weights, lowering, m.name)


def _chain_decompose_known(m: BModule, i: int) -> list[Chain]:
    dim = m.dim
    if dim == 0:
        return []
    cols = tuple(
        {t: as_fraction(c) for t, c in col.items() if not scalar_is_zero(c)}
        for col in m.lowering[i]
    )
    alpha = m.sys.simple_root(i)

    by_weight: dict[WeightVec, list[int]] = {}
    for idx, w in enumerate(m.weights):
        by_weight.setdefault(w, []).append(idx)

    def apply_n(vec: dict) -> dict:
        return _apply_cols(cols, vec)

    # kernels of powers, per weight space
    powers = [{idx: {idx: Fraction(1)} for idx in range(dim)}]  # N^0
    q = 0
    while any(powers[-1][idx] for idx in range(dim)):
        q += 1
        if q > dim:
            raise AssertionError("lowering_%d is not nilpotent" % i)
        powers.append({idx: apply_n(powers[-1][idx]) for idx in range(dim)})

    def kernel_at(s: int, mu: WeightVec) -> list[dict]:
        basis = by_weight.get(mu, [])
        if not basis:
            return []
        if s >= q:
            return [{idx: Fraction(1)} for idx in basis]
        tgt_basis = by_weight.get(mu - s * alpha, [])
        mat = [
            [powers[s][src].get(t, Fraction(0)) for src in basis] for t in tgt_basis
        ]
        if not mat:
            return [{idx: Fraction(1)} for idx in basis]
        ker = nullspace(mat)
        return [
            {basis[k]: v for k, v in enumerate(row) if v != 0} for row in ker
        ]

    chains: list[Chain] = []
    for size in range(q, 0, -1):  # block size = number of members
        for mu in by_weight:
            cand = kernel_at(size, mu)
            if not cand:
                continue
            span = Span()
            for v in kernel_at(size - 1, mu):
                span.add(v, None)
            for v in kernel_at(size + 1, mu + alpha):
                img = apply_n(v)
                if img:
                    span.add(img, None)
            for v in cand:
                if span.add(v, None):
                    members = [v]
                    for _ in range(size - 1):
                        members.append(apply_n(members[-1]))
                    k = pairing(m.sys, mu, i) - (size - 1)
                    chains.append(Chain(mu, size - 1, tuple(members), int(k)))

    total = sum(c.ell + 1 for c in chains)
    full = Span()
    for c in chains:
        for v in c.vectors:
            if not full.add(v, None):
                raise AssertionError("chain members are dependent")
    if total != dim:
        raise AssertionError(
            "chain decomposition covers %d of %d dimensions" % (total, dim)
        )
    return chains
