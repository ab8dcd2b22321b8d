"""
The nilHecke algebra H_n and its cyclotomic quotient H_{ell,n}.

Elements are stored in the normal form ``sum coeff * psi_w * y^c`` (psi on the
left). Multiplication is done one generator at a time on the right:

    (psi_w f) psi_r = psi_{w s_r} (s_r f) + psi_w d_r(f),

where psi_w psi_r vanishes unless the lengths add, and d_r is the divided
difference ``(s_r f - f) / (y_r - y_{r+1})``.  Polynomials therefore move
rightward through psi one reduced-word letter at a time.

In the cyclotomic quotient every exponent vector is capped by c_i <= ell - i.
A monomial violating this is rewritten at its largest offending index s with

    h_{ell-s+1}(y_1, ..., y_s) = 0,

i.e. y_s^{ell-s+1} is replaced by minus the other monomials of that complete
symmetric polynomial. Only y_1..y_{s-1} gain degree, so the tuple
(c_n, ..., c_1) strictly decreases lexicographically and rewriting
terminates.  The leading terms y_s^{ell-s+1} are powers of distinct
variables, so the relations form a Groebner basis and the capped monomials
are a basis of the quotient polynomial ring; the surviving words psi_w y^c
number n! * ell!/(ell-n)! = (n!)^2 binom(ell, n), the dimension of
H_{ell,n}, so they form a basis and the rewriting is a faithful normal form.
"""
from __future__ import annotations

import functools
import itertools
import sys
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .combinatorics import (
    Partition,
    Permutation,
    check_permutation,
    identity,
    inverse,
    iter_compositions,
    length,
    longest_element,
    nilcoxeter_mul,
    pad,
    partition,
    permutations,
    reduced_word,
    simple_reflection,
)
from .errors import ConsistencyError
from .sympoly import IntPolynomial, divided_difference_monomial, format_terms, monomial_str

Exps = tuple[int, ...]
Word = tuple[Permutation, Exps]

# the cyclotomic rewriting recurses once per rewrite step
sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


@dataclass(frozen=True)
class NilHecke:
    """H_n (``ell=None``) or the cyclotomic quotient H_{ell,n}."""

    n: int
    ell: int | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.ell is not None and self.ell < self.n:
            raise ValueError(f"the cyclotomic quotient needs n <= ell (got ell={self.ell}, n={self.n})")

    @property
    def cyclotomic(self) -> bool:
        return self.ell is not None

    @property
    def flavor(self) -> str:
        return "cyclotomic" if self.cyclotomic else "free"

    def __str__(self) -> str:
        if self.cyclotomic:
            return f"H_{{{self.ell},{self.n}}}"
        return f"H_{self.n}"

    # -- constructors -----------------------------------------------------

    def element(self, terms: Mapping[Word, int] | Iterable[tuple[Word, int]]) -> NilHeckeElement:
        """Build an element from (perm, exps) -> coeff, reducing if cyclotomic."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[Word, int] = defaultdict(int)
        for (w, c), coeff in items:
            w = check_permutation(w)
            c = tuple(c)
            if len(w) != self.n or len(c) != self.n or any(e < 0 for e in c):
                raise ValueError(f"bad basis word ({w}, {c}) for {self}")
            out[(w, c)] += coeff
        return self._make(out)

    def _make(self, terms: dict[Word, int]) -> NilHeckeElement:
        if self.cyclotomic:
            terms = _reduce_terms(terms, self.ell)
        return NilHeckeElement(self, {k: v for k, v in terms.items() if v})

    def zero(self) -> NilHeckeElement:
        return NilHeckeElement(self, {})

    def one(self) -> NilHeckeElement:
        return self.scalar(1)

    def scalar(self, c: int) -> NilHeckeElement:
        return NilHeckeElement(self, {(identity(self.n), (0,) * self.n): c} if c else {})

    def psi(self, r: int) -> NilHeckeElement:
        if not 1 <= r < self.n:
            raise ValueError(f"psi_{r} does not exist in {self} (need 1 <= r < {self.n})")
        return NilHeckeElement(self, {(simple_reflection(r, self.n), (0,) * self.n): 1})

    def psi_perm(self, w: Sequence[int]) -> NilHeckeElement:
        w = check_permutation(w)
        if len(w) != self.n:
            raise ValueError(f"{w} is not in Sym_{self.n}")
        return NilHeckeElement(self, {(w, (0,) * self.n): 1})

    def y(self, k: int, power: int = 1) -> NilHeckeElement:
        if not 1 <= k <= self.n:
            raise ValueError(f"y_{k} does not exist in {self} (need 1 <= k <= {self.n})")
        if power < 0:
            raise ValueError("negative power")
        return self.monomial(tuple(power if i == k - 1 else 0 for i in range(self.n)))

    def monomial(self, exps: Sequence[int], coeff: int = 1) -> NilHeckeElement:
        return self._make({(identity(self.n), tuple(exps)): coeff})

    def from_polynomial(self, f: IntPolynomial) -> NilHeckeElement:
        if f.nvars != self.n:
            raise ValueError("polynomial has the wrong number of variables")
        e = identity(self.n)
        return self._make({(e, c): v for c, v in f.items()})

    def basis(self) -> list[Word]:
        if not self.cyclotomic:
            raise ValueError("the free nilHecke algebra is infinite dimensional")
        return enumerate_basis(self.ell, self.n)


class NilHeckeElement:
    """A finite integer combination of normal-form words psi_w y^c."""

    __slots__ = ("algebra", "_terms", "_hash")

    def __init__(self, algebra: NilHecke, terms: dict[Word, int]):
        self.algebra = algebra
        self._terms = terms
        self._hash = None

    @property
    def terms(self) -> dict[Word, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, w: Sequence[int], c: Sequence[int]) -> int:
        return self._terms.get((tuple(w), tuple(c)), 0)

    def by_permutation(self) -> dict[Permutation, IntPolynomial]:
        """Group as sum_w psi_w f_w."""
        groups: dict[Permutation, dict[Exps, int]] = defaultdict(dict)
        for (w, c), v in self._terms.items():
            groups[w][c] = v
        return {w: IntPolynomial._raw(self.algebra.n, t) for w, t in groups.items()}

    def polynomial_part(self) -> IntPolynomial:
        """The identity-permutation component."""
        e = identity(self.algebra.n)
        return IntPolynomial._raw(
            self.algebra.n, {c: v for (w, c), v in self._terms.items() if w == e}
        )

    def degree(self) -> int | None:
        """The degree 2*|c| - 2*l(w) if homogeneous; ``None`` if zero or inhomogeneous."""
        degrees = {2 * sum(c) - 2 * length(w) for w, c in self._terms}
        return degrees.pop() if len(degrees) == 1 else None

    def is_homogeneous(self) -> bool:
        return not self._terms or self.degree() is not None

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: NilHeckeElement) -> None:
        if other.algebra != self.algebra:
            raise ValueError(f"cannot combine elements of {self.algebra} and {other.algebra}")

    def _lift(self, other):
        if isinstance(other, NilHeckeElement):
            self._check(other)
            return other
        if isinstance(other, int):
            return self.algebra.scalar(other)
        if isinstance(other, IntPolynomial):
            return self.algebra.from_polynomial(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, v in other._terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return NilHeckeElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self) -> NilHeckeElement:
        return NilHeckeElement(self.algebra, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return self.algebra.zero()
            return NilHeckeElement(self.algebra, {k: v * other for k, v in self._terms.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return mul(other, self)

    def __pow__(self, k: int) -> NilHeckeElement:
        if k < 0:
            raise ValueError("negative power")
        result = self.algebra.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.algebra.scalar(other)
        if not isinstance(other, NilHeckeElement):
            return NotImplemented
        return self.algebra == other.algebra and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.algebra, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- printing ---------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Word, int]]:
        """Longest permutations first, then one-line lex, then graded-lex exponents (largest first)."""
        return sorted(
            self._terms.items(),
            key=lambda t: (length(t[0][0]), t[0][0], sum(t[0][1]), t[0][1]),
            reverse=True,
        )

    def __str__(self) -> str:
        return format_terms((word_str(w, c), v) for (w, c), v in self.sorted_terms())

    def __repr__(self) -> str:
        return f"<{self.algebra}: {self}>"


def word_str(w: Permutation, c: Exps) -> str:
    parts = []
    if length(w):
        parts.append("psi[" + ",".join(map(str, reduced_word(w))) + "]")
    mono = monomial_str(c)
    if mono:
        parts.append(mono)
    return "*".join(parts)


# ---------------------------------------------------------------------------
# the multiplication engine
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _psi_step(w: Permutation, r: int) -> Permutation | None:
    return nilcoxeter_mul(w, simple_reflection(r, len(w)))


def _right_psi(terms: Mapping[Word, int], r: int) -> dict[Word, int]:
    """Multiply a normal-form combination on the right by psi_r."""
    out: dict[Word, int] = defaultdict(int)
    i = r - 1
    for (w, c), v in terms.items():
        ws = _psi_step(w, r)
        if ws is not None:
            out[(ws, c[:i] + (c[i + 1], c[i]) + c[i + 2:])] += v
        for e, d in divided_difference_monomial(r, c):
            out[(w, e)] += v * d
    return {k: v for k, v in out.items() if v}


def _times_polynomial(terms: Mapping[Word, int], poly: Mapping[Exps, int]) -> dict[Word, int]:
    out: dict[Word, int] = defaultdict(int)
    for (w, c), v in terms.items():
        for e, d in poly.items():
            out[(w, tuple(a + b for a, b in zip(c, e)))] += v * d
    return out


def _mul_terms(a: Mapping[Word, int], b: Mapping[Word, int]) -> dict[Word, int]:
    groups: dict[Permutation, dict[Exps, int]] = defaultdict(dict)
    for (w, c), v in b.items():
        groups[w][c] = v
    out: dict[Word, int] = defaultdict(int)
    for v_perm, poly in groups.items():
        t = a
        for r in reduced_word(v_perm):
            t = _right_psi(t, r)
            if not t:
                break
        for k, val in _times_polynomial(t, poly).items():
            out[k] += val
    return {k: v for k, v in out.items() if v}


@functools.lru_cache(maxsize=None)
def _reduce_monomial(ell: int, exps: Exps) -> tuple[tuple[Exps, int], ...]:
    n = len(exps)
    for s in range(n, 0, -1):
        if exps[s - 1] > ell - s:
            break
    else:
        return ((exps, 1),)
    power = ell - s + 1
    base = list(exps)
    base[s - 1] -= power
    out: dict[Exps, int] = defaultdict(int)
    for comp in iter_compositions(power, s):
        if comp[s - 1] == power:
            continue
        new = tuple(base[i] + comp[i] if i < s else base[i] for i in range(n))
        for e, d in _reduce_monomial(ell, new):
            out[e] -= d
    return tuple((e, d) for e, d in out.items() if d)


def _reduce_terms(terms: Mapping[Word, int], ell: int) -> dict[Word, int]:
    out: dict[Word, int] = defaultdict(int)
    for (w, c), v in terms.items():
        for e, d in _reduce_monomial(ell, c):
            out[(w, e)] += v * d
    return {k: v for k, v in out.items() if v}


def reduce_polynomial(f: IntPolynomial, ell: int) -> IntPolynomial:
    """Normal form of a polynomial in y_1..y_n modulo the cyclotomic relations."""
    out: dict[Exps, int] = defaultdict(int)
    for c, v in f.items():
        for e, d in _reduce_monomial(ell, c):
            out[e] += v * d
    return IntPolynomial._raw(f.nvars, {e: v for e, v in out.items() if v})


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def gen_psi(r: int, algebra: NilHecke) -> NilHeckeElement:
    return algebra.psi(r)


def gen_y(k: int, algebra: NilHecke) -> NilHeckeElement:
    return algebra.y(k)


def mul(a: NilHeckeElement, b: NilHeckeElement) -> NilHeckeElement:
    if a.algebra != b.algebra:
        raise ValueError(f"cannot multiply elements of {a.algebra} and {b.algebra}")
    return a.algebra._make(_mul_terms(a._terms, b._terms))


def cyclotomic_reduce(x: NilHeckeElement, ell: int | None = None) -> NilHeckeElement:
    """
    Image of ``x`` in the cyclotomic quotient.

    A free element needs ``ell``; a cyclotomic element is re-normalised (a
    no-op on anything built through this module).
    """
    if x.algebra.cyclotomic:
        if ell is not None and ell != x.algebra.ell:
            raise ValueError("element already lives in a different cyclotomic quotient")
        target = x.algebra
    else:
        if ell is None:
            raise ValueError("ell is required to reduce a free element")
        target = NilHecke(x.algebra.n, ell)
    return target._make(dict(x._terms))


def star(x: NilHeckeElement) -> NilHeckeElement:
    """The anti-involution fixing every psi_r and y_k: psi_w y^c -> y^c psi_{w^-1}."""
    n = x.algebra.n
    e = identity(n)
    out: dict[Word, int] = defaultdict(int)
    for w, poly in x.by_permutation().items():
        t: Mapping[Word, int] = {(e, c): v for c, v in poly.items()}
        for r in reduced_word(inverse(w)):
            t = _right_psi(t, r)
        for k, v in t.items():
            out[k] += v
    return x.algebra._make(out)


def mod_Jn(x: NilHeckeElement) -> IntPolynomial:
    """The polynomial y_x with x = y_x mod sum_s psi_s H_n."""
    if x.algebra.cyclotomic:
        raise ValueError("mod_Jn is defined on the free nilHecke algebra")
    return x.polynomial_part()


def mod_Jn_prime(x: NilHeckeElement) -> IntPolynomial:
    """The polynomial y'_x with x = y'_x mod sum_s H_n psi_s."""
    return mod_Jn(star(x))


def _sign_w0(n: int) -> int:
    return -1 if (n * (n - 1) // 2) % 2 else 1


def _delta(n: int) -> Exps:
    return tuple(range(n - 1, -1, -1))


def y_lambda(lam: Sequence[int], n: int) -> Exps:
    """Exponent vector of y_1^{l_1+n-1} y_2^{l_2+n-2} ... y_n^{l_n}."""
    return tuple(a + d for a, d in zip(pad(lam, n), _delta(n)))


@functools.lru_cache(maxsize=None)
def S_element(lam: Partition, algebra: NilHecke) -> NilHeckeElement:
    """(-1)^{n(n-1)/2} y^{lam+delta} psi_{w0}; zero when lam has more than n parts."""
    lam = partition(lam)
    n = algebra.n
    if len(lam) > n:
        return algebra.zero()
    return algebra.monomial(y_lambda(lam, n), _sign_w0(n)) * algebra.psi_perm(longest_element(n))


def S_row(s: int, algebra: NilHecke) -> NilHeckeElement:
    """S_{(s)}, zero for s < 0."""
    return algebra.zero() if s < 0 else S_element((s,), algebra)


def S_column(k: int, algebra: NilHecke) -> NilHeckeElement:
    """S_{(1^k)}, zero for k < 0 or k > n."""
    return algebra.zero() if k < 0 else S_element((1,) * k, algebra)


@functools.lru_cache(maxsize=None)
def b_element(lam: Partition, algebra: NilHecke) -> NilHeckeElement:
    """psi_{w0} y^{lam+delta} psi_{w0} y_min; zero when lam has more than n parts."""
    lam = partition(lam)
    n = algebra.n
    if len(lam) > n:
        return algebra.zero()
    w0 = algebra.psi_perm(longest_element(n))
    return w0 * algebra.monomial(y_lambda(lam, n)) * w0 * algebra.monomial(_delta(n))


def b_row(s: int, algebra: NilHecke) -> NilHeckeElement:
    return algebra.zero() if s < 0 else b_element((s,), algebra)


def b_column(k: int, algebra: NilHecke) -> NilHeckeElement:
    return algebra.zero() if k < 0 else b_element((1,) * k, algebra)


def z_poly(lam: Sequence[int], n: int) -> IntPolynomial:
    """The y-polynomial part of S_lam in the free algebra."""
    z = mod_Jn(S_element(partition(lam), NilHecke(n)))
    if not z.is_symmetric():
        raise ConsistencyError(f"y-part of S_{tuple(lam)} is not symmetric: {z}")
    return z


def is_central(f: IntPolynomial, ell: int | None, n: int) -> bool:
    """Whether f commutes with every psi_r in H_{ell,n} (or H_n for ``ell=None``)."""
    alg = NilHecke(n, ell)
    x = alg.from_polynomial(f)
    return all(x * alg.psi(r) == alg.psi(r) * x for r in range(1, n))


def enumerate_basis(ell: int, n: int) -> list[Word]:
    """All psi_w y^c with c_i <= ell - i."""
    if n > ell:
        raise ValueError("need n <= ell")
    ranges = [range(ell - i + 1) for i in range(1, n + 1)]
    return [(w, c) for w in permutations(n) for c in itertools.product(*ranges)]
