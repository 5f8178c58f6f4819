"""Tangent-bundle rigidity via the prefix long exact sequence.

For a reduced word w = (i_1, ..., i_N) and each prefix Z_r there is an
exact sequence

  0 -> H^0(pre_r, a_r) -> H^0(Z_r, T) -> H^0(Z_{r-1}, T)
    -> H^1(pre_r, a_r) -> H^1(Z_r, T) -> H^1(Z_{r-1}, T) -> 0

with a_r = alpha_{i_r}, and higher relative cohomology vanishes (a
runtime-checked axiom in coh).  The exact inputs a0, a1 come from
rel_tangent_series; the connecting ranks are never computed, only
bounded.  Everything else is monotone interval narrowing:

  (F)/(B)  h0[r] = a0[r] + h0[r-1] - t[r],
           h1[r] = a1[r] - t[r] + h1[r-1],  0 <= t[r] <= min(a1[r], h0[r-1])
  (P)      at r = N (the longest element) H^0(Z, T) is a parabolic
           subalgebra: dim 1 on negative roots, rank at 0, at most 1 on
           positive roots, 0 elsewhere
  (I)      restriction from Z_N is injective on H^0 when the prefix
           inverts the highest long root
  (S)      restriction H^1(Z_N) -> H^1(Z_r) is surjective
  (E)      per-weight Euler equality h0[r] - h1[r] = euler[r]

A nonrigidity certificate is a prefix where the step H^1 dimension
exceeds every possible image of the restriction map; surjectivity then
lifts the class to the full tower.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .rootsys import RootSystem, WeightVec
from .bmod import Character
from .coh import CohProfile, rel_tangent_series, sorted_char
from . import weyl


@dataclass
class Interval:
    lo: int
    hi: int

    def narrow(self, lo, hi) -> bool:
        nlo, nhi = max(self.lo, lo), min(self.hi, hi)
        if (nlo, nhi) == (self.lo, self.hi):
            return False
        self.lo, self.hi = nlo, nhi
        return True

    def empty(self) -> bool:
        return self.lo > self.hi

    def exact(self) -> bool:
        return self.lo == self.hi


class LedgerContradiction(Exception):
    pass


@dataclass
class DimLedger:
    sys: RootSystem
    word: tuple
    weights: list[WeightVec]
    a0: list[dict]  # 1-based prefix -> weight index -> int
    a1: list[dict]
    h0: list[list[Interval]]
    h1: list[list[Interval]]
    t: list[list[Interval]]
    euler: list[list[int]]
    descent: list[bool]

    @property
    def n(self) -> int:
        return len(self.word)

    def index_of(self, mu: WeightVec) -> int | None:
        try:
            return self.weights.index(mu)
        except ValueError:
            return None


def _series_chars(series: list[CohProfile]):
    return (
        [p.char(0) for p in series],
        [p.char(1) for p in series],
    )


def euler_table(sys: RootSystem, word, series: list[CohProfile] | None = None):
    """Cumulative per-weight Euler characteristics of H^*(Z_r, T)."""
    word = tuple(word)
    if series is None:
        series = rel_tangent_series(sys, word)
    ch0, ch1 = _series_chars(series)
    rows: list[Character] = [{}]
    for r in range(1, len(word) + 1):
        row = dict(rows[-1])
        for w, c in ch0[r - 1].items():
            row[w] = row.get(w, 0) + c
        for w, c in ch1[r - 1].items():
            row[w] = row.get(w, 0) - c
        rows.append({w: c for w, c in row.items() if c})
    return rows


@dataclass(frozen=True)
class Certificate:
    kind: str  # "nonrigid" | "rigid" | "undecided"
    prefix: int | None = None
    weight: WeightVec | None = None
    detail: str = ""
    weights: tuple = ()  # every qualifying weight at the earliest prefix
    open_weights: tuple = ()

    def to_json(self):
        return {
            "kind": self.kind,
            "prefix": self.prefix,
            "weight": self.weight.to_json() if self.weight else None,
            "weights": [w.to_json() for w in self.weights],
            "detail": self.detail,
            "open_weights": [w.to_json() for w in self.open_weights],
        }


def nonrigidity_certificate(
    sys: RootSystem, word, series: list[CohProfile] | None = None
) -> Certificate | None:
    """Earliest prefix whose step H^1 cannot be hit by restriction."""
    word = tuple(word)
    if series is None:
        series = rel_tangent_series(sys, word)
    ch0, ch1 = _series_chars(series)
    bound: Character = {}
    for r in range(1, len(word) + 1):
        hits = [
            mu for mu, c in sorted_char(ch1[r - 1]) if c > bound.get(mu, 0)
        ]
        if hits:
            mu = hits[0]
            return Certificate(
                "nonrigid",
                r,
                mu,
                "dim H^1(prefix_%d, alpha_%d)_mu = %d exceeds the "
                "restriction bound %d"
                % (r, word[r - 1], ch1[r - 1][mu], bound.get(mu, 0)),
                weights=tuple(hits),
            )
        for mu, c in ch0[r - 1].items():
            bound[mu] = bound.get(mu, 0) + c
    return None


def build_ledger(sys: RootSystem, word, series: list[CohProfile]) -> DimLedger:
    word = tuple(word)
    n = len(word)
    ch0, ch1 = _series_chars(series)
    wset: set[WeightVec] = set()
    for ch in ch0 + ch1:
        wset |= set(ch)
    for beta in sys.positive_roots:
        wset.add(beta)
        wset.add(-beta)
    wset.add(WeightVec(tuple(Fraction(0) for _ in range(sys.rank))))
    weights = sorted(wset, key=lambda w: tuple(w.coords))
    widx = {w: k for k, w in enumerate(weights)}

    a0 = [dict() for _ in range(n + 1)]
    a1 = [dict() for _ in range(n + 1)]
    for r in range(1, n + 1):
        a0[r] = {widx[w]: c for w, c in ch0[r - 1].items()}
        a1[r] = {widx[w]: c for w, c in ch1[r - 1].items()}

    etab = euler_table(sys, word, series)
    euler = [[0] * len(weights) for _ in range(n + 1)]
    for r in range(n + 1):
        for w, c in etab[r].items():
            euler[r][widx[w]] = c

    # forward upper bounds seed the lattice
    cum0 = [0] * len(weights)
    cum1 = [0] * len(weights)
    h0 = [[Interval(0, 0) for _ in weights]]
    h1 = [[Interval(0, 0) for _ in weights]]
    t = [[Interval(0, 0) for _ in weights]]
    for r in range(1, n + 1):
        for k, c in a0[r].items():
            cum0[k] += c
        for k, c in a1[r].items():
            cum1[k] += c
        h0.append([Interval(0, cum0[k]) for k in range(len(weights))])
        h1.append([Interval(0, cum1[k]) for k in range(len(weights))])
        t.append(
            [Interval(0, a1[r].get(k, 0)) for k in range(len(weights))]
        )

    descent = [False] + [
        weyl.alpha0_descent(sys, word[:r]) for r in range(1, n + 1)
    ]
    return DimLedger(sys, word, weights, a0, a1, h0, h1, t, euler, descent)


def _apply_relation(x: Interval, c: int, p: Interval, tt: Interval) -> bool:
    """Narrow all three variables of x = c + p - tt."""
    changed = x.narrow(c + p.lo - tt.hi, c + p.hi - tt.lo)
    changed |= p.narrow(x.lo - c + tt.lo, x.hi - c + tt.hi)
    changed |= tt.narrow(c + p.lo - x.hi, c + p.hi - x.lo)
    return changed


def propagate(ledger: DimLedger, rule_order: list[str] | None = None) -> DimLedger:
    """Run the narrowing rules to their (unique) fixed point."""
    sys = ledger.sys
    n = ledger.n
    nw = len(ledger.weights)
    rank = sys.rank
    posroots = set(sys.positive_roots)

    def rule_p() -> bool:
        changed = False
        for k, mu in enumerate(ledger.weights):
            iv = ledger.h0[n][k]
            if mu.is_zero():
                changed |= iv.narrow(rank, rank)
            elif -mu in posroots:
                changed |= iv.narrow(1, 1)
            elif mu in posroots:
                changed |= iv.narrow(0, 1)
            else:
                changed |= iv.narrow(0, 0)
        return changed

    def rule_fb() -> bool:
        changed = False
        for r in range(1, n + 1):
            for k in range(nw):
                c0 = ledger.a0[r].get(k, 0)
                c1 = ledger.a1[r].get(k, 0)
                tt = ledger.t[r][k]
                changed |= tt.narrow(0, min(c1, ledger.h0[r - 1][k].hi))
                changed |= _apply_relation(
                    ledger.h0[r][k], c0, ledger.h0[r - 1][k], tt
                )
                changed |= _apply_relation(
                    ledger.h1[r][k], c1, ledger.h1[r - 1][k], tt
                )
        return changed

    def rule_i() -> bool:
        changed = False
        for r in range(1, n):
            if not ledger.descent[r]:
                continue
            for k in range(nw):
                lo = ledger.h0[n][k].lo
                if lo:
                    changed |= ledger.h0[r][k].narrow(lo, ledger.h0[r][k].hi)
        return changed

    def rule_s() -> bool:
        changed = False
        for r in range(1, n):
            for k in range(nw):
                lo = ledger.h1[r][k].lo
                if lo > ledger.h1[n][k].lo:
                    changed |= ledger.h1[n][k].narrow(lo, ledger.h1[n][k].hi)
        return changed

    def rule_e() -> bool:
        changed = False
        for r in range(1, n + 1):
            for k in range(nw):
                chi = ledger.euler[r][k]
                x, y = ledger.h0[r][k], ledger.h1[r][k]
                changed |= x.narrow(chi + y.lo, chi + y.hi)
                changed |= y.narrow(x.lo - chi, x.hi - chi)
        return changed

    rules = {"P": rule_p, "F": rule_fb, "I": rule_i, "S": rule_s, "E": rule_e}
    order = rule_order or ["P", "F", "E", "I", "S"]
    changed = True
    while changed:
        changed = False
        for name in order:
            changed |= rules[name]()
        for r in range(n + 1):
            for k in range(nw):
                for iv in (ledger.h0[r][k], ledger.h1[r][k]):
                    if iv.empty():
                        raise LedgerContradiction(
                            "empty interval at prefix %d, weight %r"
                            % (r, ledger.weights[k])
                        )
    return ledger


@dataclass
class RigidityReport:
    sys: RootSystem
    word: tuple
    verdict: str
    certificate: Certificate
    ledger: DimLedger
    euler: list
    seconds: float
    ambiguity_events: int = 0

    def h0_at(self, r: int, mu: WeightVec) -> Interval:
        k = self.ledger.index_of(mu)
        if k is None:
            return Interval(0, 0)
        return self.ledger.h0[r][k]

    def h1_at(self, r: int, mu: WeightVec) -> Interval:
        k = self.ledger.index_of(mu)
        if k is None:
            return Interval(0, 0)
        return self.ledger.h1[r][k]

    def to_json(self):
        n = len(self.word)
        rows = []
        for k, mu in enumerate(self.ledger.weights):
            iv0, iv1 = self.ledger.h0[n][k], self.ledger.h1[n][k]
            if iv0.hi or iv1.hi:
                rows.append(
                    {
                        "weight": mu.to_json(),
                        "h0": [iv0.lo, iv0.hi],
                        "h1": [iv1.lo, iv1.hi],
                    }
                )
        return {
            "word": list(self.word),
            "verdict": self.verdict,
            "certificate": self.certificate.to_json(),
            "seconds": round(self.seconds, 3),
            "ambiguity_events": self.ambiguity_events,
            "ledger_final": rows,
        }


def rigidity_verdict(
    sys: RootSystem, word, rule_order: list[str] | None = None
) -> RigidityReport:
    word = tuple(word)
    start = time.monotonic()
    if not weyl.is_reduced(sys, word):
        raise ValueError("word is not reduced")
    if weyl.element_of(sys, word) != weyl.longest_element(sys):
        raise ValueError("word does not represent the longest element")
    series = rel_tangent_series(sys, word)
    amb = sum(len(p.ambiguity_log) for p in series)
    cert = nonrigidity_certificate(sys, word, series)
    ledger = build_ledger(sys, word, series)
    propagate(ledger, rule_order)
    etab = euler_table(sys, word, series)
    n = len(word)
    if cert is not None:
        return RigidityReport(
            sys, word, "Nonrigid", cert, ledger, etab, time.monotonic() - start, amb
        )
    open_weights = []
    nonzero = None
    for k, mu in enumerate(ledger.weights):
        iv = ledger.h1[n][k]
        if iv.lo >= 1:
            nonzero = (k, mu)
            break
        if iv.hi > 0:
            open_weights.append(mu)
    if nonzero is not None:
        cert = Certificate(
            "nonrigid",
            n,
            nonzero[1],
            "propagation forces dim H^1(Z, T) >= %d at this weight"
            % ledger.h1[n][nonzero[0]].lo,
        )
        verdict = "Nonrigid"
    elif not open_weights:
        cert = Certificate("rigid", detail="all H^1 intervals collapsed to zero")
        verdict = "Rigid"
    else:
        cert = Certificate(
            "undecided", open_weights=tuple(open_weights), detail="intervals left open"
        )
        verdict = "Undecided"
    return RigidityReport(
        sys, word, verdict, cert, ledger, etab, time.monotonic() - start, amb
    )


SIMPLY_LACED = {"A", "D", "E"}


def classify(sys: RootSystem) -> list[dict]:
    """Verdicts over all Coxeter normal forms of the system."""
    out = []
    for seq, c_word in weyl.enumerate_coxeter_normal_forms(sys):
        if sys.series in SIMPLY_LACED:
            out.append(
                {
                    "sequence": seq,
                    "coxeter_word": c_word,
                    "verdict": "Rigid",
                    "report": None,
                    "note": "simply laced: tangent H^1 vanishes for every word",
                }
            )
            continue
        word = weyl.w0_expression_from_coxeter(sys, c_word)
        report = rigidity_verdict(sys, word)
        out.append(
            {
                "sequence": seq,
                "coxeter_word": c_word,
                "verdict": report.verdict,
                "report": report,
                "note": "",
            }
        )
    return out
