"""
Exact integer polynomials in y_1, ..., y_n and symmetric-function helpers.

Coefficients are Python ints, so nothing ever overflows. Polynomials are
immutable once built; all helpers return fresh objects.
"""
from __future__ import annotations

import functools
import itertools
from collections import defaultdict
from typing import Iterable, Iterator, Mapping, Sequence

from .combinatorics import (
    Partition,
    conjugate,
    determinant,
    iter_compositions,
    pad,
    partition,
    permutations,
    sign,
    simple_reflection,
)
from .errors import ConsistencyError

Exps = tuple[int, ...]


class IntPolynomial:
    """Sparse polynomial: a mapping from exponent vectors to nonzero ints."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exps, int] | Iterable[tuple[Exps, int]] = ()):
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exps, int] = {}
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {nvars} variables")
            if coeff:
                clean[exps] = clean.get(exps, 0) + int(coeff)
        self._terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exps, int]) -> IntPolynomial:
        # trusted constructor: terms already validated and zero-free
        p = object.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> IntPolynomial:
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c: int) -> IntPolynomial:
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def one(cls, nvars: int) -> IntPolynomial:
        return cls.constant(nvars, 1)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1) -> IntPolynomial:
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def variable(cls, k: int, nvars: int) -> IntPolynomial:
        if not 1 <= k <= nvars:
            raise ValueError(f"y{k} out of range for {nvars} variables")
        return cls._raw(nvars, {tuple(1 if i == k - 1 else 0 for i in range(nvars)): 1})

    # -- accessors --------------------------------------------------------

    @property
    def terms(self) -> Mapping[Exps, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __iter__(self) -> Iterator[tuple[Exps, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, exps: Sequence[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def degree(self) -> int:
        """Total degree (-1 for the zero polynomial)."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def leading_exponent(self) -> Exps:
        """Lexicographically greatest exponent vector."""
        return max(self._terms)

    def constant_term(self) -> int:
        return self._terms.get((0,) * self.nvars, 0)

    def is_symmetric(self) -> bool:
        return all(act_perm(simple_reflection(r, self.nvars), self) == self for r in range(1, self.nvars))

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> IntPolynomial:
        if isinstance(other, IntPolynomial):
            if other.nvars != self.nvars:
                raise ValueError("polynomials in different numbers of variables")
            return other
        if isinstance(other, int):
            return IntPolynomial.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return IntPolynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return IntPolynomial.zero(self.nvars)
            return IntPolynomial._raw(self.nvars, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exps, int] = defaultdict(int)
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return IntPolynomial._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        if k < 0:
            raise ValueError("negative power")
        result = IntPolynomial.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == IntPolynomial.constant(self.nvars, other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- printing ---------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exps, int]]:
        """Terms in graded-lex order, largest first."""
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self) -> str:
        return format_terms((monomial_str(e), c) for e, c in self.sorted_terms())

    def __repr__(self) -> str:
        return f"IntPolynomial({self.nvars}, {str(self)!r})"


def monomial_str(exps: Sequence[int]) -> str:
    factors = []
    for i, e in enumerate(exps, start=1):
        if e == 1:
            factors.append(f"y{i}")
        elif e > 1:
            factors.append(f"y{i}^{e}")
    return "*".join(factors)


def format_terms(terms: Iterable[tuple[str, int]]) -> str:
    """Join (basis-string, coefficient) pairs as ``a - 2*b + c``; empty string means 1."""
    pieces = []
    for body, coeff in terms:
        mag = abs(coeff)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if not pieces:
            pieces.append(text if coeff > 0 else f"-{text}")
        else:
            pieces.append(f"+ {text}" if coeff > 0 else f"- {text}")
    return " ".join(pieces) if pieces else "0"


# ---------------------------------------------------------------------------
# symmetric functions
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def elementary(k: int, n: int) -> IntPolynomial:
    """e_k(y_1, ..., y_n); zero for k < 0 or k > n."""
    if k < 0 or k > n:
        return IntPolynomial.zero(n)
    terms = {}
    for subset in itertools.combinations(range(n), k):
        terms[tuple(1 if i in subset else 0 for i in range(n))] = 1
    return IntPolynomial._raw(n, terms)


@functools.lru_cache(maxsize=None)
def complete(s: int, n: int) -> IntPolynomial:
    """h_s(y_1, ..., y_n); zero for s < 0."""
    if s < 0:
        return IntPolynomial.zero(n)
    return IntPolynomial._raw(n, {c: 1 for c in iter_compositions(s, n)})


def _delta(n: int) -> tuple[int, ...]:
    return tuple(range(n - 1, -1, -1))


def alternant(alpha: Sequence[int]) -> IntPolynomial:
    """a_alpha = sum over w of sign(w) * w(y^alpha)."""
    n = len(alpha)
    mono = IntPolynomial.monomial(alpha)
    total = IntPolynomial.zero(n)
    for w in permutations(n):
        total = total + act_perm(w, mono) * sign(w)
    return total


SCHUR_METHODS = ("jacobi_trudi_h", "jacobi_trudi_e", "bialternant")


@functools.lru_cache(maxsize=None)
def schur(lam: Partition, n: int, method: str = "jacobi_trudi_h") -> IntPolynomial:
    """
    Schur polynomial s_lam(y_1, ..., y_n).

    All three methods are exact; ``bialternant`` divides a_{lam+delta} by the
    Vandermonde a_delta and raises ConsistencyError on a nonzero remainder.
    """
    lam = partition(lam)
    if len(lam) > n:
        return IntPolynomial.zero(n)
    one = IntPolynomial.one(n)
    if method == "jacobi_trudi_h":
        size = len(lam)
        mat = [[complete(lam[i] - i + j, n) for j in range(size)] for i in range(size)]
        return determinant(mat, one)
    if method == "jacobi_trudi_e":
        conj = conjugate(lam)
        size = len(conj)
        mat = [[elementary(conj[i] - i + j, n) for j in range(size)] for i in range(size)]
        return determinant(mat, one)
    if method == "bialternant":
        delta = _delta(n)
        num = alternant(tuple(a + d for a, d in zip(pad(lam, n), delta)))
        return exact_divide(num, alternant(delta))
    raise ValueError(f"unknown method {method!r}; expected one of {SCHUR_METHODS}")


def exact_divide(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Quotient f/g, which must be exact; lex-leading-term division."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    lead = g.leading_exponent()
    lc = g.coefficient(lead)
    quotient: dict[Exps, int] = {}
    rem = f
    while rem:
        top = rem.leading_exponent()
        diff = tuple(a - b for a, b in zip(top, lead))
        c, r = divmod(rem.coefficient(top), lc)
        if any(d < 0 for d in diff) or r:
            raise ConsistencyError(f"{g} does not divide {f} exactly")
        quotient[diff] = c
        rem = rem - g * IntPolynomial._raw(f.nvars, {diff: c})
    return IntPolynomial._raw(f.nvars, quotient)


# ---------------------------------------------------------------------------
# permutation action and divided differences
# ---------------------------------------------------------------------------


def act_exps(w: Sequence[int], exps: Sequence[int]) -> Exps:
    out = [0] * len(exps)
    for i, e in enumerate(exps):
        out[w[i] - 1] = e
    return tuple(out)


def act_perm(w: Sequence[int], f: IntPolynomial) -> IntPolynomial:
    """Substitute y_i -> y_{w(i)}."""
    if len(w) != f.nvars:
        raise ValueError("permutation size does not match the number of variables")
    return IntPolynomial._raw(f.nvars, {act_exps(w, e): c for e, c in f.items()})


def divided_difference(r: int, f: IntPolynomial) -> IntPolynomial:
    """
    (s_r f - f) / (y_r - y_{r+1}), by synthetic division in y_r.

    The remainder (the numerator evaluated at y_r = y_{r+1}) must vanish;
    otherwise ConsistencyError is raised.
    """
    n = f.nvars
    if not 1 <= r < n:
        raise ValueError(f"divided difference index {r} out of range for {n} variables")
    num = act_perm(simple_reflection(r, n), f) - f
    i, j = r - 1, r
    # coefficients of powers of y_r, as dicts over the remaining exponents
    by_power: dict[int, dict[Exps, int]] = defaultdict(dict)
    for e, c in num.items():
        rest = e[:i] + (0,) + e[i + 1:]
        by_power[e[i]][rest] = c
    if not by_power:
        return IntPolynomial.zero(n)

    def shift(d: dict[Exps, int]) -> dict[Exps, int]:
        # multiply by y_{r+1}
        return {e[:j] + (e[j] + 1,) + e[j + 1:]: c for e, c in d.items()}

    def add(a: dict[Exps, int], b: dict[Exps, int]) -> dict[Exps, int]:
        out = dict(a)
        for e, c in b.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return out

    top = max(by_power)
    quotient: dict[Exps, int] = {}
    carry: dict[Exps, int] = {}
    for k in range(top, 0, -1):
        carry = add(by_power.get(k, {}), shift(carry))
        for e, c in carry.items():
            quotient[e[:i] + (k - 1,) + e[i + 1:]] = c
    remainder = add(by_power.get(0, {}), shift(carry))
    if remainder:
        raise ConsistencyError(f"y{r} - y{r + 1} does not divide s_{r}f - f for f = {f}")
    return IntPolynomial._raw(n, quotient)


@functools.lru_cache(maxsize=None)
def divided_difference_monomial(r: int, exps: Exps) -> tuple[tuple[Exps, int], ...]:
    """Cached divided difference of a single monomial, as a tuple of terms."""
    return tuple(divided_difference(r, IntPolynomial._raw(len(exps), {exps: 1})).items())


# ---------------------------------------------------------------------------
# Schur expansion
# ---------------------------------------------------------------------------


def expand_in_schur(f: IntPolynomial) -> dict[Partition, int]:
    """
    Coefficients c_lam with f = sum c_lam s_lam, found by repeatedly removing
    the lex-leading monomial (Schur polynomials are unitriangular against
    monomials in that order).
    """
    n = f.nvars
    if not f.is_symmetric():
        raise ValueError(f"{f} is not symmetric")
    out: dict[Partition, int] = {}
    rem = f
    while rem:
        top = rem.leading_exponent()
        c = rem.coefficient(top)
        lam = partition(top)
        out[lam] = c
        rem = rem - schur(lam, n) * c
    return dict(sorted(out.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True))


def from_schur(coeffs: Mapping[Partition, int], n: int) -> IntPolynomial:
    total = IntPolynomial.zero(n)
    for lam, c in coeffs.items():
        total = total + schur(lam, n) * c
    return total


def eh_alternating_residual(m: int, n: int) -> IntPolynomial:
    """
    sum_{s=0}^{min(m,n)} (-1)^s e_s h_{m-s}; identically zero for m >= 1.

    For m = 0 the alternation is empty and the zero polynomial is returned.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    total = IntPolynomial.zero(n)
    if m == 0:
        return total
    for s in range(min(m, n) + 1):
        total = total + elementary(s, n) * complete(m - s, n) * (-1) ** s
    return total

