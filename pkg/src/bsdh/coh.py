"""P^1-step induction functors on B-modules and the tower recursion.

One step for a simple index i is computed on the big cell of P_i/B with
affine coordinate z along the positive root vector e_i.  A chain with
top mu, length ell and twist k is a copy of (irreducible sl2-module of
highest weight ell) tensored with a character of pairing k, so its
sections and first cohomology are realized explicitly:

  section (a, m):  z |-> exp(-z e_i)(member_a) * z^m

with m in [0, k] for H^0 and, as a Laurent class modulo functions
regular on either chart, m in [k+1, -1] for H^1.  On these dressed
monomials the index-i lowering operator acts by

  f_i (a, m) = (a+1, m) + (m - k) (a, m+1)

and lowering operators for j != i act coefficient-wise in z, which is
exact because alpha_i - alpha_j is never a root, so e_i commutes with
f_j.  Expressing the result in the dressed basis again is plain exact
linear algebra; a nonzero residual would mean the model is wrong and
raises immediately.

The tower consumes the word right to left.  At each letter the new
degree-d module is the extension of step_h1(previous degree d-1) by
step_h0(previous degree d); cross-block entries that the short exact
sequence does not determine become named Unknown parameters (none are
needed for the current letter itself, whose minimal parabolic acts on
the whole sequence, so an equivariant splitting exists for it).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb as _comb

from .rootsys import (
    RootSystem,
    WeightVec,
    dot_reflect,
    pairing,
    rho,
)
from .bmod import (
    BModule,
    CaseSplit,
    Chain,
    Character,
    LinExpr,
    Span,
    chain_decompose,
    chain_shape,
    char_dim,
    character,
    instantiate_matrix,
    line_module,
    matrix_params,
    scalar_is_zero,
    solve_constraints,
    zero_module,
)
from . import weyl


class TowerError(Exception):
    pass


class DimCapExceeded(TowerError):
    pass


class VanishingAxiomError(TowerError):
    """Higher relative cohomology appeared where the checked axiom says
    it must vanish."""


class AmbiguousModuleError(TowerError):
    """A chain decomposition genuinely depends on an undetermined
    extension parameter."""


# ---------------------------------------------------------------------------
# Demazure operator (character-level Euler oracle)


def demazure_letter(sys: RootSystem, ch: Character, i: int) -> Character:
    alpha = sys.simple_root(i)
    out: Character = {}

    def bump(w, c):
        n = out.get(w, 0) + c
        if n:
            out[w] = n
        else:
            out.pop(w, None)

    for lam, mult in ch.items():
        k = pairing(sys, lam, i)
        if k >= 0:
            for b in range(k + 1):
                bump(lam - b * alpha, mult)
        elif k <= -2:
            for b in range(-k - 1):
                bump(lam + (b + 1) * alpha, -mult)
    return out


def demazure_char(sys: RootSystem, word, ch: Character) -> Character:
    """Iterated Demazure operator, letters applied right to left."""
    for i in reversed(word):
        ch = demazure_letter(sys, ch, i)
    return ch


# ---------------------------------------------------------------------------
# one induction step


def _beta(a: int, r: int, ell: int) -> Fraction:
    val = _comb(a, r)
    for s in range(r):
        val *= ell - a + 1 + s
    return Fraction(val)


def _realization(chain: Chain, a: int, m: int):
    """Coordinates of the dressed monomial, keyed (basis index, power)."""
    out: dict = {}
    for r in range(a + 1):
        c = _beta(a, r, chain.ell) * (-1) ** r
        if c == 0:
            continue
        for idx, v in chain.vectors[a - r].items():
            key = (idx, m + r)
            cur = out.get(key, Fraction(0)) + c * v
            if cur:
                out[key] = cur
            else:
                out.pop(key, None)
    return out


def _apply_lowering(m: BModule, j: int, coords: dict) -> dict:
    cols = m.lowering[j]
    out: dict = {}
    for (idx, p), c in coords.items():
        for tgt, e in cols[idx].items():
            key = (tgt, p)
            cur = out.get(key, 0) + c * e
            if scalar_is_zero(cur):
                out.pop(key, None)
            else:
                out[key] = cur
    return out


class _ClosureConstraint(Exception):
    """Sections close under a parametric lowering only if these affine
    expressions in the undetermined scalars vanish."""

    def __init__(self, equations):
        super().__init__("parametric closure constraint")
        self.equations = equations


def _induce(m: BModule, i: int, chains: list[Chain]) -> tuple[BModule, BModule]:
    """Both step functors at once, sharing the decomposition.

    Undetermined extension scalars in the lowerings other than i are
    pinned here when the section spans force linear relations on them;
    the chains only involve lowering_i, so they survive the substitution.
    """
    for _ in range(1 + sum(len(matrix_params(m, j)) for j in m.lowering)):
        try:
            return _induce_once(m, i, chains)
        except _ClosureConstraint as exc:
            solution = solve_constraints(exc.equations)
            m = _substitute_everywhere(m, solution)
    raise AssertionError("closure constraint solving did not terminate")


def _induce_once(m: BModule, i: int, chains: list[Chain]) -> tuple[BModule, BModule]:
    sys = m.sys
    alpha = sys.simple_root(i)
    max_ell = max((c.ell for c in chains), default=0)

    def build(mode: str) -> BModule:
        entries = []  # (chain_idx, a, m)
        for ci, c in enumerate(chains):
            if mode == "h0":
                window = range(0, c.twist + 1)
            else:
                window = range(c.twist + 1, 0)
            for a in range(c.ell + 1):
                for mm in window:
                    entries.append((ci, a, mm))
        if not entries:
            return zero_module(sys)

        weights = tuple(
            chains[ci].top - (a + mm) * alpha for ci, a, mm in entries
        )
        index_of = {e: n for n, e in enumerate(entries)}

        span = Span()
        if mode == "h1":
            # subspace of classes that vanish: regular on the z-chart or
            # regular at infinity
            mmin = min(mm for _, _, mm in entries)
            pmax = max(0, max_ell)
            for idx in range(m.dim):
                for p in range(0, pmax + 1):
                    span.add({(idx, p): Fraction(1)}, None)
            for ci, c in enumerate(chains):
                for a in range(c.ell + 1):
                    for mm in range(mmin, min(c.twist, -1) + 1):
                        span.add(_realization(c, a, mm), None)
        for e in entries:
            ci, a, mm = e
            ok = span.add(_realization(chains[ci], a, mm), e)
            if not ok:
                raise AssertionError("dependent %s basis entry %r" % (mode, e))

        lowering: dict[int, tuple] = {}
        for j in range(1, sys.rank + 1):
            cols = []
            for e in entries:
                ci, a, mm = e
                col: dict = {}
                if j == i:
                    k = chains[ci].twist
                    if a + 1 <= chains[ci].ell:
                        col[index_of[(ci, a + 1, mm)]] = Fraction(1)
                    coef = Fraction(mm - k)
                    if coef and (ci, a, mm + 1) in index_of:
                        col[index_of[(ci, a, mm + 1)]] = coef
                else:
                    img = _apply_lowering(m, j, _realization(chains[ci], a, mm))
                    combo, residual = span.reduce(img)
                    if residual:
                        eqs = [LinExpr.of(v) for v in residual.values()]
                        if any(e.is_constant() for e in eqs):
                            raise AssertionError(
                                "lowering_%d leaves the %s section span"
                                % (j, mode)
                            )
                        raise _ClosureConstraint(eqs)
                    for tag, cc in combo.items():
                        if tag is not None and not scalar_is_zero(cc):
                            col[index_of[tag]] = cc
                cols.append(col)
            lowering[j] = tuple(cols)

        out = BModule(sys, weights, lowering, "%s(%s, %d)" % (mode, m.name, i))
        out.validate()
        return out

    return build("h0"), build("h1")


# full 2**k case enumeration is only affordable for small k; past this
# bound the shape check samples the two uniform instantiations instead
_FULL_SPLIT_PARAMS = 4


def _resolve_chains(m: BModule, i: int, policy: int, log: list, step: int, degree: int):
    """Chain-decompose lowering_i, instantiating parameters if needed."""
    params = matrix_params(m, i)
    if params:
        if len(params) <= _FULL_SPLIT_PARAMS:
            agree = chain_decompose(m, i).shapes_agree()
            checked = "all"
        else:
            shapes = set()
            for v in (0, 1):
                inst = instantiate_matrix(m, i, {p: v for p in params})
                shapes.add(chain_shape(chain_decompose(inst, i)))
            agree = len(shapes) == 1
            checked = "uniform"
        log.append(
            {
                "event": "case_split",
                "step": step,
                "degree": degree,
                "params": list(params),
                "shapes_agree": agree,
                "shapes_checked": checked,
            }
        )
        assignment = {p: policy for p in params}
        m = instantiate_matrix(m, i, assignment)
        m = _substitute_everywhere(m, assignment)
    decomp = chain_decompose(m, i)
    assert not isinstance(decomp, CaseSplit)
    return m, decomp


def _substitute_everywhere(m: BModule, assignment) -> BModule:
    lowering = {}
    for j, cols in m.lowering.items():
        new_cols = []
        for col in cols:
            nc = {}
            for t, c in col.items():
                if isinstance(c, LinExpr):
                    c = c.substitute(assignment)
                    c = c.const if c.is_constant() else c
                if not scalar_is_zero(c):
                    nc[t] = c
            new_cols.append(nc)
        lowering[j] = tuple(new_cols)
    return BModule(m.sys, m.weights, lowering, m.name)


def _extension(
    sub: BModule,
    quo: BModule,
    i: int,
    counter: list[int],
    log: list,
    step: int,
    degree: int,
) -> BModule:
    if sub.dim == 0:
        return quo
    if quo.dim == 0:
        return sub
    sys = sub.sys
    off = sub.dim
    created = []
    lowering = {}
    for j in range(1, sys.rank + 1):
        cols = [dict(col) for col in sub.lowering[j]]
        cols += [{t + off: c for t, c in col.items()} for col in quo.lowering[j]]
        if j != i:
            alpha_j = sys.simple_root(j)
            for qsrc in range(quo.dim):
                target_weight = quo.weights[qsrc] - alpha_j
                for stgt in range(sub.dim):
                    if sub.weights[stgt] == target_weight:
                        counter[0] += 1
                        p = "x%d" % counter[0]
                        cols[off + qsrc][stgt] = LinExpr.param(p)
                        created.append(p)
        lowering[j] = tuple(cols)
    if created:
        log.append(
            {
                "event": "extension",
                "step": step,
                "degree": degree,
                "params": created,
            }
        )
    return BModule(
        sys, sub.weights + quo.weights, lowering, "ext(%s | %s)" % (sub.name, quo.name)
    )


# ---------------------------------------------------------------------------
# towers


@dataclass
class CohProfile:
    sys: RootSystem
    word: tuple
    seed_char: Character
    modules: dict[int, BModule] | None
    chars: dict[int, Character]
    ambiguity_log: list = field(default_factory=list)
    method: str = "tower"

    @property
    def h0(self) -> BModule:
        return self.modules[0] if self.modules and 0 in self.modules else zero_module(self.sys)

    @property
    def h1(self) -> BModule:
        return self.modules[1] if self.modules and 1 in self.modules else zero_module(self.sys)

    def char(self, d: int) -> Character:
        return dict(self.chars.get(d, {}))

    def h2plus(self) -> list[tuple[int, Character]]:
        return [(d, dict(ch)) for d, ch in sorted(self.chars.items()) if d >= 2]

    def euler(self) -> Character:
        out: Character = {}
        for d, ch in self.chars.items():
            for w, c in ch.items():
                n = out.get(w, 0) + (-1) ** d * c
                if n:
                    out[w] = n
                else:
                    out.pop(w, None)
        return out

    def ambiguous(self) -> bool:
        return any(
            ev["event"] == "case_split" and not ev["shapes_agree"]
            for ev in self.ambiguity_log
        )

    def to_json(self) -> dict:
        return {
            "word": list(self.word),
            "method": self.method,
            "seed": [[w.to_json(), c] for w, c in sorted_char(self.seed_char)],
            "cohomology": {
                str(d): [[w.to_json(), c] for w, c in sorted_char(ch)]
                for d, ch in sorted(self.chars.items())
                if ch
            },
            "ambiguity_log": self.ambiguity_log,
        }


def sorted_char(ch: Character):
    return sorted(ch.items(), key=lambda t: tuple(t[0].coords))


def tower_coh(
    sys: RootSystem,
    word,
    seed: BModule,
    *,
    policy: int = 0,
    enforce_h2: bool = False,
    dim_cap: int | None = None,
) -> CohProfile:
    """Iterate the induction step over the word, right to left."""
    word = tuple(word)
    if not weyl.is_reduced(sys, word):
        raise TowerError("word %r is not reduced" % (word,))
    seed.validate()
    log: list = []
    counter = [0]
    mods: dict[int, BModule] = {0: seed}
    for step, i in enumerate(reversed(word)):
        parts: dict[int, tuple[BModule, BModule]] = {}
        for d in sorted(mods):
            m, chains = _resolve_chains(mods[d], i, policy, log, step, d)
            parts[d] = _induce(m, i, chains)
        new: dict[int, BModule] = {}
        for d in range(0, max(parts) + 2):
            quo = parts[d][0] if d in parts else zero_module(sys)
            sub = parts[d - 1][1] if d - 1 in parts else zero_module(sys)
            ext = _extension(sub, quo, i, counter, log, step, d)
            if ext.dim:
                new[d] = ext
        mods = new or {0: zero_module(sys)}
        if enforce_h2 and any(d >= 2 for d in mods):
            raise VanishingAxiomError(
                "H^j, j>=2 appeared at step %d of %r" % (step, word)
            )
        total = sum(m.dim for m in mods.values())
        if dim_cap is not None and total > dim_cap:
            raise DimCapExceeded("tower dimension %d exceeds cap" % total)
    return CohProfile(
        sys,
        word,
        character(seed),
        mods,
        {d: character(m) for d, m in mods.items() if m.dim},
        log,
    )


def step_h0(m: BModule, i: int) -> BModule:
    """H^0(s_i, -) with full module structure."""
    m, chains = _step_resolve(m, i)
    return _induce(m, i, chains)[0]


def step_h1(m: BModule, i: int) -> BModule:
    """H^1(s_i, -) with full module structure."""
    m, chains = _step_resolve(m, i)
    return _induce(m, i, chains)[1]


def _step_resolve(m: BModule, i: int):
    if len(matrix_params(m, i)) > _FULL_SPLIT_PARAMS:
        raise AmbiguousModuleError(
            "too many undetermined extension scalars in lowering_%d" % i
        )
    decomp = chain_decompose(m, i)
    if isinstance(decomp, CaseSplit):
        if not decomp.shapes_agree():
            raise AmbiguousModuleError(
                "chain shapes depend on parameters %s" % (decomp.params,)
            )
        assignment = {p: 0 for p in decomp.params}
        m = _substitute_everywhere(instantiate_matrix(m, i, assignment), assignment)
        decomp = chain_decompose(m, i)
    return m, decomp


def line_bundle_coh(
    sys: RootSystem,
    word,
    lam: WeightVec,
    *,
    policy: int = 0,
    enforce_h2: bool = False,
    dim_cap: int | None = None,
) -> CohProfile:
    """H^*(w, lambda); at the longest element the dominance-shift
    computation replaces the module tower when the tower would be too
    large or had to instantiate an extension scalar heuristically."""
    word = tuple(word)
    try:
        profile = tower_coh(
            sys,
            word,
            line_module(sys, lam),
            policy=policy,
            enforce_h2=enforce_h2,
            dim_cap=dim_cap,
        )
    except DimCapExceeded:
        if weyl.element_of(sys, word) != weyl.longest_element(sys):
            raise
        return _w0_shift_profile(sys, word, lam)
    heuristic = any(
        ev.get("event") == "case_split" for ev in profile.ambiguity_log
    )
    if heuristic and weyl.element_of(sys, word) == weyl.longest_element(sys):
        return _w0_shift_profile(sys, word, lam)
    return profile


def _w0_shift_profile(sys: RootSystem, word, lam: WeightVec) -> CohProfile:
    """At w_0 the shift identity moves lambda into the dominant chamber
    one dot-reflection at a time, raising the degree each time."""
    mu = lam
    degree = 0
    guard = 0
    while True:
        guard += 1
        if guard > len(sys.positive_roots) + 1:
            raise AssertionError("dominance shift did not terminate")
        pairings = [pairing(sys, mu, i) for i in range(1, sys.rank + 1)]
        if any(k == -1 for k in pairings):
            return CohProfile(sys, tuple(word), {lam: 1}, None, {}, [], "shift")
        neg = next((i for i, k in enumerate(pairings, 1) if k <= -2), None)
        if neg is None:
            break
        mu = dot_reflect(sys, mu, neg)
        degree += 1
    ch = demazure_char(sys, word, {mu: 1})
    return CohProfile(sys, tuple(word), {lam: 1}, None, {degree: ch}, [], "shift")


def rel_tangent_series(
    sys: RootSystem, word, *, policy: int = 0
) -> list[CohProfile]:
    """Profiles of H^*(prefix_r, alpha_{i_r}) for r = 1..len(word)."""
    word = tuple(word)
    out = []
    for r in range(1, len(word) + 1):
        out.append(
            line_bundle_coh(
                sys,
                word[:r],
                sys.simple_root(word[r - 1]),
                policy=policy,
                enforce_h2=True,
            )
        )
    return out


# ---------------------------------------------------------------------------
# Borel-Weil-Bott oracle (independent cross-check at the longest element)


@dataclass(frozen=True)
class BBWResult:
    singular: bool
    degree: int | None
    dominant: WeightVec | None
    dim: int


def _inner(sys: RootSystem, a: WeightVec, b: WeightVec) -> Fraction:
    tot = Fraction(0)
    for i, x in enumerate(a.coords):
        if x == 0:
            continue
        for j, y in enumerate(b.coords):
            if y != 0:
                tot += x * y * sys._dsym[i] * sys.cartan[i][j]
    return tot


def bbw_oracle(sys: RootSystem, lam: WeightVec) -> BBWResult:
    """Degree, dominant weight and Weyl-formula dimension of H^*(G/B, lam)."""
    r = rho(sys)
    mu = lam + r
    for beta in sys.positive_roots:
        if _inner(sys, mu, beta) == 0:
            return BBWResult(True, None, None, 0)
    degree = 0
    guard = 0
    while True:
        i = next(
            (j for j in range(1, sys.rank + 1) if pairing(sys, mu, j) < 0), None
        )
        if i is None:
            break
        mu = mu - pairing(sys, mu, i) * sys.simple_root(i)
        degree += 1
        guard += 1
        if guard > len(sys.positive_roots):
            raise AssertionError("dominance sort did not terminate")
    num = Fraction(1)
    for beta in sys.positive_roots:
        num *= _inner(sys, mu, beta) / _inner(sys, r, beta)
    if num.denominator != 1:
        raise AssertionError("Weyl dimension is not an integer")
    return BBWResult(False, degree, mu - r, num.numerator)
