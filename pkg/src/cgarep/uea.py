"""Universal enveloping algebra U(g_ell) in a PBW basis of normal words.

A word is normal when its factors appear in the order

    H, P_{ell-1}, ..., P_0,  D, P_ell,  C, P_{ell+1}, ..., P_{2 ell}

read left to right: raising generators first, then the Cartan pair, then
lowering generators.  Applied to a lowest weight vector, a normal word is
evaluated right to left, so lowering factors annihilate and Cartan factors
give eigenvalues before any raising factor acts.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb, perm
from typing import Iterable, Union

from .exact import ONE, ZERO, ParamPoly, Q
from .liealg import H, AlgebraConfig, ConfigError, Generator, P, omega_generator, structure_constants

Word = tuple[Generator, ...]


def order_key(ell: int, g: Generator) -> int:
    if g.kind == "H":
        return 0
    if g.kind == "D":
        return ell + 1
    if g.kind == "C":
        return ell + 3
    n = g.index
    if n < ell:
        return ell - n
    if n == ell:
        return ell + 2
    return n + 3


def is_normal(ell: int, word: Word) -> bool:
    keys = [order_key(ell, g) for g in word]
    return all(a <= b for a, b in zip(keys, keys[1:]))


@lru_cache(maxsize=None)
def _normal_word(ell: int, word: Word, strategy: str) -> tuple[tuple[Word, object], ...]:
    keys = [order_key(ell, g) for g in word]
    descents = [i for i in range(len(word) - 1) if keys[i] > keys[i + 1]]
    if not descents:
        return ((word, Q(1)),)
    i = descents[0] if strategy == "left" else descents[-1]
    a, b = word[i], word[i + 1]
    acc: dict[Word, object] = {}
    swapped = word[:i] + (b, a) + word[i + 2:]
    for w, c in _normal_word(ell, swapped, strategy):
        acc[w] = acc.get(w, 0) + c
    cfg = AlgebraConfig(ell)
    for g, k in structure_constants(cfg, a, b).items():
        for w, c in _normal_word(ell, word[:i] + (g,) + word[i + 2:], strategy):
            acc[w] = acc.get(w, 0) + k * c
    return tuple((w, c) for w, c in acc.items() if c)


class UEAElement:
    """Linear combination of normal words with ParamPoly coefficients."""

    __slots__ = ("ell", "terms")

    def __init__(self, ell: int, terms=None, *, normalize: bool = True):
        self.ell = ell
        acc: dict[Word, ParamPoly] = {}
        for word, c in (terms or {}).items():
            c = ParamPoly.coerce(c)
            if not c:
                continue
            word = tuple(word)
            if normalize and not is_normal(ell, word):
                for w, k in _normal_word(ell, word, "left"):
                    acc[w] = acc.get(w, ZERO) + c * k
            else:
                acc[word] = acc.get(word, ZERO) + c
        self.terms: dict[Word, ParamPoly] = {w: c for w, c in acc.items() if c}

    @classmethod
    def one(cls, ell: int) -> UEAElement:
        return cls(ell, {(): ONE})

    @classmethod
    def word(cls, ell: int, *factors: Generator, coeff=ONE) -> UEAElement:
        return cls(ell, {tuple(factors): coeff})

    @classmethod
    def generator(cls, ell: int, g: Generator) -> UEAElement:
        return cls(ell, {(g,): ONE})

    def __add__(self, other) -> UEAElement:
        other = self._coerce(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return UEAElement(self.ell, out, normalize=False)

    __radd__ = __add__

    def __neg__(self) -> UEAElement:
        return UEAElement(self.ell, {w: -c for w, c in self.terms.items()}, normalize=False)

    def __sub__(self, other) -> UEAElement:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> UEAElement:
        return self._coerce(other) - self

    def __mul__(self, other) -> UEAElement:
        if not isinstance(other, UEAElement):
            c = ParamPoly.coerce(other)
            return UEAElement(self.ell, {w: v * c for w, v in self.terms.items()}, normalize=False)
        out: dict[Word, ParamPoly] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                out[w1 + w2] = out.get(w1 + w2, ZERO) + c1 * c2
        return UEAElement(self.ell, out)

    def __rmul__(self, other) -> UEAElement:
        c = ParamPoly.coerce(other)
        return UEAElement(self.ell, {w: v * c for w, v in self.terms.items()}, normalize=False)

    def __pow__(self, k: int) -> UEAElement:
        if k < 0:
            raise ValueError("negative power")
        out = UEAElement.one(self.ell)
        for _ in range(k):
            out = out * self
        return out

    def _coerce(self, other) -> UEAElement:
        if isinstance(other, UEAElement):
            if other.ell != self.ell:
                raise ConfigError("mixing elements of different algebras")
            return other
        return UEAElement(self.ell, {(): ParamPoly.coerce(other)})

    def __eq__(self, other) -> bool:
        if isinstance(other, UEAElement):
            return self.ell == other.ell and self.terms == other.terms
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.terms)

    def subs(self, delta=None, p=None) -> UEAElement:
        return UEAElement(self.ell, {w: c.subs(delta=delta, p=p) for w, c in self.terms.items()},
                          normalize=False)

    def max_length(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def __repr__(self) -> str:
        return f"UEAElement({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda wc: _word_sort_key(self.ell, wc[0]))
        parts = []
        for w, c in items:
            body = format_word(w)
            parts.append(_format_term(c, body))
        return _join_terms(parts)


def _word_sort_key(ell: int, word: Word):
    return (-len(word), [order_key(ell, g) for g in word])


def format_word(word: Iterable[Generator], mul: str = "*") -> str:
    """``H*H*P1`` -> ``H^2*P1``; the empty word is ``1``."""
    groups: list[list] = []
    for g in word:
        if groups and groups[-1][0] == g:
            groups[-1][1] += 1
        else:
            groups.append([g, 1])
    if not groups:
        return "1"
    return mul.join(str(g) if e == 1 else f"{g}^{e}" for g, e in groups)


def _format_term(c: ParamPoly, body: str) -> str:
    if body == "1":
        s = str(c)
        return s if c.is_monomial() or not s.count(" ") else f"({s})"
    if c == ONE:
        return body
    if c == -ONE:
        return "-" + body
    if c.is_monomial():
        return f"{c}*{body}"
    return f"({c})*{body}"


def _join_terms(parts: list[str]) -> str:
    out = parts[0]
    for part in parts[1:]:
        out += " - " + part[1:] if part.startswith("-") else " + " + part
    return out


Wordish = Union[Word, list, UEAElement]


def normal_order(cfg: AlgebraConfig, x: Wordish, strategy: str = "left") -> UEAElement:
    """Rewrite to normal words with XY -> YX + [X, Y] at the first (``left``)
    or last (``right``) out-of-order adjacent pair."""
    if strategy not in ("left", "right"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if isinstance(x, UEAElement):
        items = x.terms.items()
    else:
        items = [(tuple(x), ONE)]
    out: dict[Word, ParamPoly] = {}
    for word, c in items:
        for g in word:
            cfg.check(g)
        for w, k in _normal_word(cfg.ell, tuple(word), strategy):
            out[w] = out.get(w, ZERO) + c * k
    return UEAElement(cfg.ell, out, normalize=False)


def pnh_closed_form(cfg: AlgebraConfig, n: int, k: int) -> UEAElement:
    """[P_n, H^k] = sum_i binom(n, i) k!/(k-i)! H^{k-i} P_{n-i}."""
    if not 1 <= n <= 2 * cfg.ell:
        raise ConfigError(f"need 1 <= n <= {2 * cfg.ell}, got n={n}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    terms = {}
    for i in range(1, min(n, k) + 1):
        terms[(H,) * (k - i) + (P(n - i),)] = comb(n, i) * perm(k, i)
    return UEAElement(cfg.ell, terms)


def omega_word(cfg: AlgebraConfig, x: UEAElement) -> UEAElement:
    """Lift of the anti-involution: reverse each word, map factors, reorder."""
    terms = {}
    for w, c in x.terms.items():
        new = tuple(omega_generator(cfg, g) for g in reversed(w))
        terms[new] = terms.get(new, ZERO) + c
    return UEAElement(cfg.ell, terms)


def ad(cfg: AlgebraConfig, g: Generator, x: UEAElement) -> UEAElement:
    """Commutator [g, x] inside U(g_ell)."""
    gx = UEAElement.generator(cfg.ell, g)
    return gx * x - x * gx
