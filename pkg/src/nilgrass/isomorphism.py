"""
The basic algebra B of H_{ell,n}, realised as the Z-span of the elements b_lam
for lam in the n x (ell-n) box, and its identification with Grassmannian
cohomology through eta, eta_hat and zeta.
"""
from __future__ import annotations

import functools
from typing import Mapping, Sequence

from .combinatorics import (
    Partition,
    conjugate,
    determinant,
    partition,
    partitions_in_box,
    rho,
    strict_tuples,
    tau,
    tau_hat,
    tau_hat_inv,
    tensor_col,
    tensor_row,
)
from .errors import ConsistencyError, NotInSpanError
from .grassmann import CohomologyClass, GrassmannRing, giambelli_second, index_str, mul as gmul, oracle_mul, zeta
from .linalg import echelon, rank, solve
from .nilhecke import NilHecke, NilHeckeElement, b_element, enumerate_basis, is_central, reduce_polynomial, z_poly
from .report import Case, VerificationReport
from .sympoly import IntPolynomial, format_terms, schur

__all__ = [
    "BasicAlgebra",
    "BasicAlgebraElement",
    "Case",
    "VerificationReport",
    "basic_algebra",
    "b_decompose",
    "eta",
    "eta_hat",
    "center_basis",
    "check_eta_relations",
    "check_eta",
    "check_b_identities",
    "check_center",
    "check_duality",
]


def partition_str(lam: Sequence[int]) -> str:
    return "b(" + ",".join(map(str, lam)) + ")"


class BasicAlgebra:
    """
    The b_lam span inside H_{ell,n}, with precomputed normal forms.

    Coordinates are recovered from a square subsystem on a set of pivot
    words chosen once by fraction-free elimination; every decomposition is
    then checked by reconstruction.
    """

    def __init__(self, ell: int, n: int):
        self.ell = ell
        self.n = n
        self.algebra = NilHecke(n, ell)
        self.partitions: list[Partition] = partitions_in_box(n, ell - n)
        self.index = {lam: i for i, lam in enumerate(self.partitions)}
        self.vectors = [b_element(lam, self.algebra) for lam in self.partitions]
        words = sorted({w for v in self.vectors for w, _ in v.items()})
        rows = [[v.coefficient(*w) for w in words] for v in self.vectors]
        _, pivots = echelon(rows)
        if len(pivots) != len(self.partitions):
            raise ConsistencyError(f"the b_lam of H_{{{ell},{n}}} are linearly dependent")
        self._pivot_words = [words[c] for c in pivots]
        self._square = [[v.coefficient(*w) for v in self.vectors] for w in self._pivot_words]
        self._products: dict[tuple[Partition, Partition], NilHeckeElement] = {}
        self._product_coords: dict[tuple[Partition, Partition], BasicAlgebraElement] = {}

    def __repr__(self) -> str:
        return f"BasicAlgebra(ell={self.ell}, n={self.n})"

    # -- elements ---------------------------------------------------------

    def element(self, coeffs: Mapping[Sequence[int], int]) -> BasicAlgebraElement:
        out: dict[Partition, int] = {}
        for lam, c in coeffs.items():
            lam = partition(lam)
            if lam not in self.index:
                raise ValueError(f"{lam} does not fit the {self.n}x{self.ell - self.n} box")
            if c:
                out[lam] = out.get(lam, 0) + c
        return BasicAlgebraElement(self, {k: v for k, v in out.items() if v})

    def zero(self) -> BasicAlgebraElement:
        return BasicAlgebraElement(self, {})

    def one(self) -> BasicAlgebraElement:
        return self.element({(): 1})

    def b(self, lam: Sequence[int]) -> BasicAlgebraElement:
        """b_lam in coordinates; partitions outside the box are decomposed (they vanish)."""
        lam = partition(lam)
        if lam in self.index:
            return self.element({lam: 1})
        return self.decompose(b_element(lam, self.algebra))

    def b_row(self, s: int) -> BasicAlgebraElement:
        return self.zero() if s < 0 else self.b((s,))

    def b_column(self, k: int) -> BasicAlgebraElement:
        return self.zero() if k < 0 else self.b((1,) * k)

    def realize(self, x: BasicAlgebraElement) -> NilHeckeElement:
        total = self.algebra.zero()
        for lam, c in x.items():
            total = total + self.vectors[self.index[lam]] * c
        return total

    def decompose(self, x: NilHeckeElement) -> BasicAlgebraElement:
        if x.algebra != self.algebra:
            raise ValueError(f"element lives in {x.algebra}, expected {self.algebra}")
        rhs = [x.coefficient(*w) for w in self._pivot_words]
        coords = solve(self._square, rhs)
        result = BasicAlgebraElement(self, {lam: c for lam, c in zip(self.partitions, coords) if c})
        residual = x - self.realize(result)
        if residual:
            raise NotInSpanError(f"element is not in the b-span; residual {residual}", residual)
        return result

    # -- products ---------------------------------------------------------

    def product(self, lam: Sequence[int], mu: Sequence[int]) -> NilHeckeElement:
        """b_lam * b_mu in H_{ell,n} (any partitions; cached)."""
        key = (partition(lam), partition(mu))
        if key not in self._products:
            self._products[key] = b_element(key[0], self.algebra) * b_element(key[1], self.algebra)
        return self._products[key]

    def product_coords(self, lam: Partition, mu: Partition) -> BasicAlgebraElement:
        key = (lam, mu)
        if key not in self._product_coords:
            self._product_coords[key] = self.decompose(self.product(lam, mu))
        return self._product_coords[key]


@functools.lru_cache(maxsize=None)
def basic_algebra(ell: int, n: int) -> BasicAlgebra:
    return BasicAlgebra(ell, n)


class BasicAlgebraElement:
    """Coordinates sum c_lam b_lam of an element of B."""

    __slots__ = ("basic", "_coeffs")

    def __init__(self, basic: BasicAlgebra, coeffs: dict[Partition, int]):
        self.basic = basic
        self._coeffs = coeffs

    @property
    def coefficients(self) -> dict[Partition, int]:
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def coefficient(self, lam: Sequence[int]) -> int:
        return self._coeffs.get(partition(lam), 0)

    def realize(self) -> NilHeckeElement:
        return self.basic.realize(self)

    def _lift(self, other):
        if isinstance(other, BasicAlgebraElement):
            if other.basic is not self.basic:
                raise ValueError("elements of different basic algebras")
            return other
        if isinstance(other, int):
            return self.basic.one() * other
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._coeffs)
        for lam, c in other._coeffs.items():
            s = out.get(lam, 0) + c
            if s:
                out[lam] = s
            else:
                out.pop(lam, None)
        return BasicAlgebraElement(self.basic, out)

    __radd__ = __add__

    def __neg__(self) -> BasicAlgebraElement:
        return BasicAlgebraElement(self.basic, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return self.basic.zero()
            return BasicAlgebraElement(self.basic, {k: v * other for k, v in self._coeffs.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return other
        total = self.basic.zero()
        for lam, c in self._coeffs.items():
            for mu, d in other._coeffs.items():
                total = total + self.basic.product_coords(lam, mu) * (c * d)
        return total

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, BasicAlgebraElement):
            return NotImplemented
        return self.basic is other.basic and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.basic.ell, self.basic.n, frozenset(self._coeffs.items())))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def sorted_terms(self) -> list[tuple[Partition, int]]:
        return sorted(self._coeffs.items(), key=lambda t: (sum(t[0]), t[0]))

    def __str__(self) -> str:
        return format_terms((partition_str(lam), c) for lam, c in self.sorted_terms())

    def __repr__(self) -> str:
        return f"<B_{{{self.basic.ell},{self.basic.n}}}: {self}>"


def b_decompose(x: NilHeckeElement, ell: int, n: int) -> BasicAlgebraElement:
    return basic_algebra(ell, n).decompose(x)


# ---------------------------------------------------------------------------
# eta, eta_hat
# ---------------------------------------------------------------------------


def _check_rank_one_side(ring: GrassmannRing, n: int) -> None:
    if n < 1:
        raise ValueError(f"{ring} has no nilHecke counterpart (n must be positive)")


def eta(x: CohomologyClass) -> BasicAlgebraElement:
    """G_{n,ell-n} -> B: (a) goes to b_{rho(tau(a))}."""
    ring = x.ring
    _check_rank_one_side(ring, ring.k)
    basic = basic_algebra(ring.ell, ring.k)
    return basic.element({rho(tau(a, ring.ell), ring.ell): c for a, c in x.items()})


def eta_hat(x: CohomologyClass) -> BasicAlgebraElement:
    """G_{ell-n,n} -> B: (a) goes to b_{rho(tau_hat(a))}."""
    ring = x.ring
    _check_rank_one_side(ring, ring.m)
    basic = basic_algebra(ring.ell, ring.m)
    return basic.element({rho(tau_hat(a, ring.ell), ring.ell): c for a, c in x.items()})


def center_basis(ell: int, n: int) -> list[tuple[tuple[int, ...], Partition, IntPolynomial]]:
    """(strict tuple, rho of it, s_rho(y) reduced in H_{ell,n}) over P_{ell,n}."""
    out = []
    for lam in strict_tuples(ell, n):
        p = rho(lam, ell)
        out.append((lam, p, reduce_polynomial(schur(p, n), ell)))
    return out


# ---------------------------------------------------------------------------
# verification drivers
# ---------------------------------------------------------------------------


def check_eta_relations(ell: int, n: int) -> VerificationReport:
    """The defining relations of the Borel presentation, evaluated on b(lam_i), b(mu_j)."""
    report = VerificationReport(f"eta relations ell={ell} n={n}")
    B = basic_algebra(ell, n)
    H = B.algebra

    def col(i: int) -> Partition:
        return (1,) * i

    def row(j: int) -> Partition:
        return (j,) if j else ()

    def P(lam: Partition, mu: Partition) -> NilHeckeElement:
        return B.product(lam, mu)

    def record(label: str, m: int, value: NilHeckeElement) -> None:
        report.check(f"relation ({label})", not value, lambda: f"evaluates to {value}", ell=ell, n=n, m=m)

    k = ell - n
    if k >= n:
        for m in range(1, n + 1):
            v = b_element(col(m), H) + b_element(row(m), H) * (-1) ** m
            for s in range(1, m):
                v = v + P(col(s), row(m - s)) * (-1) ** (m - s)
            record("1", m, v)
        for m in range(n + 1, k + 1):
            v = b_element(row(m), H) * (-1) ** m
            for s in range(1, n + 1):
                v = v + P(col(s), row(m - s)) * (-1) ** (m - s)
            record("2", m, v)
        for m in range(k + 1, ell + 1):
            v = H.zero()
            for i in range(1, n + 1):
                j = m - i
                if 1 <= j <= k:
                    v = v + P(col(i), row(j)) * (-1) ** j
            record("3", m, v)
    else:
        for m in range(1, k + 1):
            v = b_element(col(m), H) + b_element(row(m), H) * (-1) ** m
            for s in range(1, m):
                v = v + P(col(s), row(m - s)) * (-1) ** (m - s)
            record("11", m, v)
        for m in range(k + 1, n + 1):
            v = b_element(col(m), H)
            for s in range(1, k + 1):
                v = v + P(row(s), col(m - s)) * (-1) ** s
            record("22", m, v)
        for m in range(n + 1, ell + 1):
            v = H.zero()
            for i in range(1, n + 1):
                j = m - i
                if 1 <= j <= k:
                    v = v + P(row(j), col(i)) * (-1) ** j
            record("33", m, v)
    return report


def _check_bijection(report: VerificationReport, name: str, images: dict, basic: BasicAlgebra, **params) -> None:
    targets = sorted(images.values())
    report.check(
        name,
        targets == sorted(basic.partitions) and len(set(targets)) == len(targets),
        lambda: f"images {targets} vs box {basic.partitions}",
        **params,
    )


def check_eta(ell: int, n: int) -> VerificationReport:
    """
    eta and eta_hat: basis-to-basis bijections, degree preservation,
    multiplicativity on all basis pairs, agreement with the Schur oracle,
    and the generating relations.
    """
    report = VerificationReport(f"eta ell={ell} n={n}")
    B = basic_algebra(ell, n)
    for label, ring, fn, index_map in (
        ("eta", GrassmannRing(n, ell - n), eta, lambda a: rho(tau(a, ell), ell)),
        ("eta_hat", GrassmannRing(ell - n, n), eta_hat, lambda a: rho(tau_hat(a, ell), ell)),
    ):
        basis = ring.basis()
        images = {a: index_map(a) for a in basis}
        _check_bijection(report, f"{label} is a basis bijection", images, B, ell=ell, n=n)
        for a in basis:
            lam = images[a]
            report.check(
                f"{label} basis formula",
                fn(ring.cls(a)) == B.b(lam),
                lambda: f"{label}({index_str(a)}) = {fn(ring.cls(a))}",
                ell=ell, n=n, a=a,
            )
            report.check(
                f"{label} preserves degree",
                sum(lam) == sum(a),
                lambda: f"|{lam}| != {sum(a)}",
                ell=ell, n=n, a=a,
            )
        for i, a in enumerate(basis):
            for b in basis[i:]:
                x, y = ring.cls(a), ring.cls(b)
                lhs = fn(x) * fn(y)
                rhs = fn(gmul(x, y))
                report.check(
                    f"{label} multiplicative",
                    lhs == rhs,
                    lambda: f"{label}{index_str(a)}*{label}{index_str(b)} = {lhs} but {label}({gmul(x, y)}) = {rhs}",
                    ell=ell, n=n, a=a, b=b,
                )
                if label == "eta":
                    oracle = fn(oracle_mul(x, y))
                    report.check(
                        "b-span closure matches Schur oracle",
                        lhs == oracle,
                        lambda: f"b-product {lhs} vs oracle {oracle}",
                        ell=ell, n=n, a=a, b=b,
                    )
    report.extend(check_eta_relations(ell, n))
    return report


def check_b_identities(ell: int, n: int) -> VerificationReport:
    """Commutativity, Pieri and both Jacobi-Trudi determinants for b_lam over the box."""
    report = VerificationReport(f"b_lambda ell={ell} n={n}")
    B = basic_algebra(ell, n)
    H = B.algebra
    box = B.partitions
    k = ell - n

    for i, lam in enumerate(box):
        for mu in box[i:]:
            ab, ba = B.product(lam, mu), B.product(mu, lam)
            report.check("b commute", ab == ba, lambda: f"b{lam}b{mu} - b{mu}b{lam} = {ab - ba}", lam=lam, mu=mu)

    for lam in box:
        for c in range(n + 1):
            lhs = B.product(lam, (1,) * c)
            rhs = H.zero()
            for mu in tensor_col(lam, c, len(lam) + c):
                rhs = rhs + b_element(mu, H)
            report.check("b Pieri column", lhs == rhs, lambda: f"difference {lhs - rhs}", lam=lam, k=c)
        for s in range(k + 2):
            lhs = B.product(lam, (s,) if s else ())
            rhs = H.zero()
            for mu in tensor_row(lam, s, len(lam) + 1):
                rhs = rhs + b_element(mu, H)
            report.check("b Pieri row", lhs == rhs, lambda: f"difference {lhs - rhs}", lam=lam, s=s)

    for lam in box:
        target = b_element(lam, H)
        size = len(lam)
        h_form = determinant(
            [[B.b_row(lam[i] - i + j) for j in range(size)] for i in range(size)], B.one()
        ).realize()
        report.check("b Jacobi-Trudi (rows)", h_form == target, lambda: f"det gives {h_form}", lam=lam)
        conj = conjugate(lam)
        size = len(conj)
        e_form = determinant(
            [[B.b_column(conj[i] - i + j) for j in range(size)] for i in range(size)], B.one()
        ).realize()
        report.check("b Jacobi-Trudi (columns)", e_form == target, lambda: f"det gives {e_form}", lam=lam)
    return report


def check_center(ell: int, n: int) -> VerificationReport:
    """z_{rho(lam)} = s_{rho(lam)}, centrality, and independence over P_{ell,n}."""
    report = VerificationReport(f"center ell={ell} n={n}")
    polys = []
    for lam, p, reduced in center_basis(ell, n):
        z = z_poly(p, n)
        s = schur(p, n)
        report.check("z = schur", z == s, lambda: f"z{p} = {z}, s{p} = {s}", ell=ell, n=n, lam=lam)
        report.check("central", is_central(reduced, ell, n), lambda: f"{reduced} fails a psi commutation", lam=lam)
        polys.append(reduced)
    words = [c for w, c in enumerate_basis(ell, n) if w == tuple(range(1, n + 1))]
    matrix = [[f.coefficient(c) for c in words] for f in polys]
    r = rank(matrix)
    report.check("center basis independent", r == len(polys), lambda: f"rank {r} < {len(polys)}", ell=ell, n=n)
    return report


def check_duality(ell: int, n: int) -> VerificationReport:
    """eta = eta_hat . zeta, zeta is a degree-preserving ring isomorphism, and the second Giambelli formula."""
    report = VerificationReport(f"duality ell={ell} n={n}")
    ring = GrassmannRing(n, ell - n)
    dual = ring.dual
    basis = ring.basis()
    for a in basis:
        x = ring.cls(a)
        zx = zeta(x)
        lhs, rhs = eta(x), eta_hat(zx)
        report.check("eta = eta_hat . zeta", lhs == rhs, lambda: f"{lhs} vs {rhs}", ell=ell, n=n, a=a)
        expected = dual.cls(tau_hat_inv(tau(a, ell), ell))
        report.check("zeta basis formula", zx == expected, lambda: f"zeta{index_str(a)} = {zx}", ell=ell, n=n, a=a)
        report.check("zeta preserves degree", zx.degree() == x.degree(), lambda: f"{zx}", ell=ell, n=n, a=a)
        back = zeta(zx)
        report.check("zeta involutive", back == x, lambda: f"zeta(zeta{index_str(a)}) = {back}", ell=ell, n=n, a=a)
        g2 = giambelli_second(a, ell)
        report.check("second Giambelli", g2 == expected, lambda: f"det gives {g2}, expected {expected}", ell=ell, n=n, a=a)
    for i, a in enumerate(basis):
        for b in basis[i:]:
            x, y = ring.cls(a), ring.cls(b)
            lhs, rhs = zeta(gmul(x, y)), gmul(zeta(x), zeta(y))
            report.check("zeta multiplicative", lhs == rhs, lambda: f"{lhs} vs {rhs}", ell=ell, n=n, a=a, b=b)
    images = sorted(zeta(ring.cls(a)).sorted_terms()[0][0] for a in basis)
    report.check("zeta bijective on bases", images == sorted(dual.basis()), lambda: f"{images}", ell=ell, n=n)
    return report
