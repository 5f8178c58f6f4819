"""Weyl group words, canonical elements, and Coxeter normal forms.

Words are tuples of 1-based simple indices.  act() composes left to
right: act((i1,...,ir), mu) = s_{i1}(s_{i2}(...s_{ir}(mu)...)).
Elements are canonicalized by their action on the fundamental weights,
which is faithful; reducedness is decided by the inversion-count
criterion, never by braid-move search.
"""
from __future__ import annotations

from dataclasses import dataclass

from .rootsys import (
    RootSystem,
    WeightVec,
    fundamental_weight,
    highest_long_root,
    pairing,
    reflect,
    rho,
)

WeylWord = tuple[int, ...]


@dataclass(frozen=True)
class WeylElement:
    """Canonical form: the tuple (w(omega_1), ..., w(omega_n))."""

    images: tuple[WeightVec, ...]


def check_word(sys: RootSystem, word: WeylWord) -> None:
    for i in word:
        if not 1 <= i <= sys.rank:
            raise ValueError("letter %r out of range 1..%d" % (i, sys.rank))


def act(sys: RootSystem, word: WeylWord, mu: WeightVec) -> WeightVec:
    check_word(sys, word)
    for i in reversed(word):
        mu = reflect(sys, mu, i)
    return mu


def element_of(sys: RootSystem, word: WeylWord) -> WeylElement:
    return WeylElement(
        tuple(act(sys, word, fundamental_weight(sys, i)) for i in range(1, sys.rank + 1))
    )


def inversion_count(sys: RootSystem, word: WeylWord) -> int:
    inv = reverse_word(word)
    n = 0
    for beta in sys.positive_roots:
        if not act(sys, inv, beta).is_nonneg():
            n += 1
    return n


def reverse_word(word: WeylWord) -> WeylWord:
    return tuple(reversed(word))


def length(sys: RootSystem, word: WeylWord) -> int:
    """Length of the element the word represents (its inversion count)."""
    return inversion_count(sys, word)


def is_reduced(sys: RootSystem, word: WeylWord) -> bool:
    return inversion_count(sys, word) == len(word)


def longest_word(sys: RootSystem) -> WeylWord:
    """A reduced word for w_0, built by sorting -rho up to rho."""
    mu = -rho(sys)
    word: list[int] = []
    while True:
        for i in range(1, sys.rank + 1):
            if pairing(sys, mu, i) < 0:
                mu = reflect(sys, mu, i)
                word.append(i)
                break
        else:
            break
    return tuple(word)


def longest_element(sys: RootSystem) -> WeylElement:
    return element_of(sys, longest_word(sys))


def coxeter_from_decreasing_seq(sys: RootSystem, seq) -> WeylWord:
    """c = [a_1, n][a_2, a_1 - 1]...[a_k, a_{k-1} - 1], [i, j] = s_i...s_j.

    seq = (a_1 > a_2 > ... > a_k = 1) with a_1 <= rank; a_0 is rank + 1.
    """
    seq = tuple(seq)
    if not seq or seq[-1] != 1:
        raise ValueError("sequence must end at 1")
    if any(a <= b for a, b in zip(seq, seq[1:])):
        raise ValueError("sequence must be strictly decreasing")
    if seq[0] > sys.rank:
        raise ValueError("sequence entries must be <= rank")
    word: list[int] = []
    prev = sys.rank + 1
    for a in seq:
        word.extend(range(a, prev))
        prev = a
    out = tuple(word)
    if sorted(out) != list(range(1, sys.rank + 1)):
        raise AssertionError("not a Coxeter word: %r" % (out,))
    return out


def coxeter_exponent(sys: RootSystem, c_word: WeylWord, i: int) -> int:
    """Least m >= 1 with c^m(omega_i) = w_0(omega_i)."""
    w0 = longest_element(sys)
    target = w0.images[i - 1]
    mu = fundamental_weight(sys, i)
    bound = 2 * len(sys.positive_roots)
    for m in range(1, bound + 1):
        mu = act(sys, c_word, mu)
        if mu == target:
            return m
    raise AssertionError("no exponent found within the Coxeter number")


def w0_expression_from_coxeter(sys: RootSystem, c_word: WeylWord) -> WeylWord:
    m = coxeter_exponent(sys, c_word, 1)
    word = c_word * m
    if not is_reduced(sys, word):
        raise AssertionError("concatenation %r is not reduced" % (word,))
    if element_of(sys, word) != longest_element(sys):
        raise AssertionError("concatenation %r is not the longest element" % (word,))
    return word


def alpha0_descent(sys: RootSystem, word: WeylWord) -> bool:
    """True iff w^{-1}(alpha_0) < 0 for the highest long root alpha_0."""
    a0 = highest_long_root(sys)
    return not act(sys, reverse_word(word), a0).is_nonneg()


def enumerate_coxeter_normal_forms(sys: RootSystem) -> list[tuple[tuple[int, ...], WeylWord]]:
    """All strictly decreasing sequences ending at 1, with their words."""
    out = []
    rest = list(range(2, sys.rank + 1))
    for mask in range(1 << len(rest)):
        chosen = [rest[k] for k in range(len(rest)) if mask >> k & 1]
        seq = tuple(sorted(chosen, reverse=True)) + (1,)
        out.append((seq, coxeter_from_decreasing_seq(sys, seq)))
    out.sort()
    return out


def generate_group(sys: RootSystem) -> set[WeylElement]:
    """Brute-force closure under the simple reflections."""
    ident = element_of(sys, ())
    seen = {ident}
    frontier = [ident]
    while frontier:
        el = frontier.pop()
        for i in range(1, sys.rank + 1):
            nxt = WeylElement(tuple(reflect(sys, mu, i) for mu in el.images))
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen
