"""
Integral cohomology of the Grassmannian G_{k,m} in the Schubert basis.

A basis class is a weakly increasing k-tuple ``a`` with entries in [0, m].
Multiplication by the special class ``ctilde_j = (0, ..., 0, j)`` is the Pieri
rule: (a) * ctilde_j is the sum of all (b) with a_i <= b_i <= a_{i+1}
(a_{k+1} = m) and sum(b) = sum(a) + j.  A general product expands one factor
as the Giambelli determinant det(ctilde_{a_i+i-j}) and applies Pieri
repeatedly.
"""
from __future__ import annotations

import functools
import itertools
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .combinatorics import (
    check_schubert_index,
    determinant,
    pad,
    partition,
    schubert_indices,
    sign,
    tau,
    tau_hat_inv,
)
from .sympoly import IntPolynomial, expand_in_schur, format_terms, schur

Index = tuple[int, ...]


@dataclass(frozen=True)
class GrassmannRing:
    """H^*(G_{k,m}, Z); basis classes are weakly increasing k-tuples in [0, m]."""

    k: int
    m: int

    def __post_init__(self):
        if self.k < 0 or self.m < 0:
            raise ValueError("k and m must be nonnegative")

    @property
    def ell(self) -> int:
        return self.k + self.m

    @property
    def dual(self) -> GrassmannRing:
        return GrassmannRing(self.m, self.k)

    def __str__(self) -> str:
        return f"G({self.k},{self.m})"

    def basis(self) -> list[Index]:
        return schubert_indices(self.k, self.m)

    @property
    def rank(self) -> int:
        return len(self.basis())

    def check_index(self, a: Sequence[int]) -> Index:
        if len(a) != self.k:
            raise ValueError(f"{tuple(a)} is not a Schubert index of {self} (need length {self.k})")
        return check_schubert_index(a, self.m)

    def cls(self, a: Sequence[int], coeff: int = 1) -> CohomologyClass:
        a = self.check_index(a)
        return CohomologyClass(self, {a: coeff} if coeff else {})

    def element(self, terms: Mapping[Sequence[int], int] | Iterable[tuple[Sequence[int], int]]) -> CohomologyClass:
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[Index, int] = defaultdict(int)
        for a, c in items:
            out[self.check_index(a)] += c
        return CohomologyClass(self, {a: c for a, c in out.items() if c})

    def zero(self) -> CohomologyClass:
        return CohomologyClass(self, {})

    def one(self) -> CohomologyClass:
        return self.cls((0,) * self.k)

    def special_c(self, i: int) -> CohomologyClass:
        """c_i = (0, ..., 0, 1, ..., 1) with i ones; zero outside [0, k]."""
        if not 0 <= i <= self.k:
            return self.zero()
        if i and not self.m:
            return self.zero()
        return self.cls((0,) * (self.k - i) + (1,) * i)

    def special_ctilde(self, j: int) -> CohomologyClass:
        """ctilde_j = (0, ..., 0, j); zero outside [0, m]."""
        if not 0 <= j <= self.m:
            return self.zero()
        if j and not self.k:
            return self.zero()
        return self.cls((0,) * (self.k - 1) + (j,) if self.k else ())

    def special_cbar(self, j: int) -> CohomologyClass:
        """cbar_j = (-1)^j ctilde_j."""
        return self.special_ctilde(j) * (-1) ** j


class CohomologyClass:
    """An integer combination of Schubert basis classes."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: GrassmannRing, terms: dict[Index, int]):
        self.ring = ring
        self._terms = terms

    @property
    def terms(self) -> dict[Index, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, a: Sequence[int]) -> int:
        return self._terms.get(tuple(a), 0)

    def degree(self) -> int | None:
        """Cohomological degree 2*sum(a) if homogeneous, else ``None``."""
        degrees = {2 * sum(a) for a in self._terms}
        return degrees.pop() if len(degrees) == 1 else None

    def _lift(self, other):
        if isinstance(other, CohomologyClass):
            if other.ring != self.ring:
                raise ValueError(f"cannot combine classes of {self.ring} and {other.ring}")
            return other
        if isinstance(other, int):
            return self.ring.one() * other
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for a, c in other._terms.items():
            s = out.get(a, 0) + c
            if s:
                out[a] = s
            else:
                out.pop(a, None)
        return CohomologyClass(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> CohomologyClass:
        return CohomologyClass(self.ring, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return self.ring.zero()
            return CohomologyClass(self.ring, {a: c * other for a, c in self._terms.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> CohomologyClass:
        result = self.ring.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.ring.one() * other
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self._terms.items())))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def sorted_terms(self) -> list[tuple[Index, int]]:
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]))

    def __str__(self) -> str:
        return format_terms((index_str(a), c) for a, c in self.sorted_terms())

    def __repr__(self) -> str:
        return f"<{self.ring}: {self}>"


def index_str(a: Sequence[int]) -> str:
    return "(" + ",".join(map(str, a)) + ")"


# ---------------------------------------------------------------------------
# Pieri and Giambelli
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _pieri(a: Index, j: int, m: int) -> tuple[Index, ...]:
    k = len(a)
    upper = a[1:] + (m,)
    target = sum(a) + j
    out: list[Index] = []

    def extend(i: int, acc: tuple[int, ...], total: int) -> None:
        if i == k:
            if total == target:
                out.append(acc)
            return
        rest_max = sum(upper[i + 1:])
        for b in range(a[i], upper[i] + 1):
            if total + b > target:
                break
            if total + b + rest_max >= target:
                extend(i + 1, acc + (b,), total + b)

    extend(0, (), 0)
    return tuple(out)


def pieri_mul(x: CohomologyClass, j: int) -> CohomologyClass:
    """x * ctilde_j."""
    ring = x.ring
    if not 0 <= j <= ring.m or (j and not ring.k):
        return ring.zero()
    out: dict[Index, int] = defaultdict(int)
    for a, c in x.items():
        for b in _pieri(a, j, ring.m):
            out[b] += c
    return CohomologyClass(ring, {b: c for b, c in out.items() if c})


@functools.lru_cache(maxsize=None)
def _giambelli(a: Index, m: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    k = len(a)
    out: dict[tuple[int, ...], int] = defaultdict(int)
    for cols in itertools.permutations(range(k)):
        factors = [a[i] + i - cols[i] for i in range(k)]
        if any(not 0 <= t <= m for t in factors):
            continue
        out[tuple(sorted(t for t in factors if t))] += sign(tuple(c + 1 for c in cols))
    return tuple(sorted((key, c) for key, c in out.items() if c))


def giambelli(a: Sequence[int], ring: GrassmannRing) -> dict[tuple[int, ...], int]:
    """
    det(ctilde_{a_i+i-j}) as a polynomial in the special classes.

    Keys list the indices j of the ctilde_j factors (ctilde_0 = 1 omitted);
    factors outside [0, m] vanish and are dropped.
    """
    return dict(_giambelli(ring.check_index(a), ring.m))


def evaluate_ctilde_monomials(expansion: Mapping[tuple[int, ...], int], x: CohomologyClass) -> CohomologyClass:
    """sum coeff * x * prod ctilde_j, by repeated Pieri."""
    total = x.ring.zero()
    for factors, coeff in expansion.items():
        y = x
        for j in factors:
            y = pieri_mul(y, j)
            if not y:
                break
        total = total + y * coeff
    return total


@functools.lru_cache(maxsize=None)
def _mul_basis(a: Index, b: Index, ring: GrassmannRing) -> tuple[tuple[Index, int], ...]:
    # Giambelli-expand the factor with fewer nonzero entries
    if sum(1 for t in a if t) < sum(1 for t in b if t):
        a, b = b, a
    result = evaluate_ctilde_monomials(_giambelli_dict(b, ring.m), ring.cls(a))
    return tuple(result.items())


def _giambelli_dict(a: Index, m: int) -> dict[tuple[int, ...], int]:
    return dict(_giambelli(a, m))


def mul(x: CohomologyClass, y: CohomologyClass) -> CohomologyClass:
    if x.ring != y.ring:
        raise ValueError(f"cannot multiply classes of {x.ring} and {y.ring}")
    ring = x.ring
    out: dict[Index, int] = defaultdict(int)
    for a, c in x.items():
        for b, d in y.items():
            key = (a, b) if a <= b else (b, a)
            for e, v in _mul_basis(*key, ring):
                out[e] += c * d * v
    return CohomologyClass(ring, {e: v for e, v in out.items() if v})


# ---------------------------------------------------------------------------
# independent oracle
# ---------------------------------------------------------------------------


def _class_polynomial(x: CohomologyClass) -> IntPolynomial:
    k = x.ring.k
    total = IntPolynomial.zero(k)
    for a, c in x.items():
        total = total + schur(partition(reversed(a)), k) * c
    return total


def oracle_mul(*xs: CohomologyClass) -> CohomologyClass:
    """
    Product computed through Schur polynomials in k variables: (a) is
    s_{(a_k, ..., a_1)}, and partitions with a first part above m are dropped.
    """
    if not xs:
        raise ValueError("oracle_mul needs at least one factor")
    ring = xs[0].ring
    if any(x.ring != ring for x in xs):
        raise ValueError("all factors must live in the same ring")
    if ring.k == 0 or ring.m == 0:
        # rank one: the ring is Z
        c = 1
        for x in xs:
            c *= x.coefficient((0,) * ring.k)
        return ring.one() * c
    poly = IntPolynomial.one(ring.k)
    for x in xs:
        poly = poly * _class_polynomial(x)
    out = {}
    for lam, c in expand_in_schur(poly).items():
        if lam and lam[0] > ring.m:
            continue
        out[tuple(reversed(pad(lam, ring.k)))] = c
    return ring.element(out)


# ---------------------------------------------------------------------------
# Borel presentation, duality
# ---------------------------------------------------------------------------


def borel_residuals(ring: GrassmannRing) -> list[CohomologyClass]:
    """Coefficients of t^1..t^ell in (sum c_i t^i)(sum cbar_j t^j)."""
    out = []
    for p in range(1, ring.ell + 1):
        total = ring.zero()
        for i in range(0, min(p, ring.k) + 1):
            j = p - i
            if j <= ring.m:
                total = total + ring.special_c(i) * ring.special_cbar(j)
        out.append(total)
    return out


def zeta_index(a: Sequence[int], ell: int) -> Index:
    return tau_hat_inv(tau(a, ell), ell)


def zeta(x: CohomologyClass, target: GrassmannRing | None = None) -> CohomologyClass:
    """G_{n,ell-n} -> G_{ell-n,n}, basis class (a) to tau_hat_inv(tau(a))."""
    ring = x.ring
    dual = ring.dual
    if target is not None and target != dual:
        raise ValueError(f"zeta maps {ring} to {dual}, not {target}")
    return dual.element((zeta_index(a, ring.ell), c) for a, c in x.items())


def giambelli_second(a: Sequence[int], ell: int) -> CohomologyClass:
    """det(c_{a_i+i-j}) for a in Theta_{ell,n}, evaluated in G_{ell-n,n}."""
    n = len(a)
    a = check_schubert_index(a, ell - n)
    target = GrassmannRing(ell - n, n)
    matrix = [[target.special_c(a[i] + i - j) for j in range(n)] for i in range(n)]
    return determinant(matrix, target.one())
