"""
Verification suites shared by the command line and the acceptance tests.

Every suite takes ``(ell, n, seed)``. With ``ell``/``n`` left as ``None`` it
sweeps its full default range; otherwise it restricts to the given
parameters. Random cases come from ``random.Random(seed)``.
"""
from __future__ import annotations

import itertools
import math
import random
from typing import Callable, Iterable

from .combinatorics import (
    determinant,
    length,
    longest_element,
    partitions_in_box,
    permutations,
    tensor_col,
    tensor_row,
)
from .grassmann import (
    GrassmannRing,
    borel_residuals,
    evaluate_ctilde_monomials,
    giambelli,
    mul as gmul,
    oracle_mul,
)
from .isomorphism import check_b_identities, check_center, check_duality, check_eta
from .nilhecke import (
    NilHecke,
    NilHeckeElement,
    S_column,
    S_element,
    S_row,
    cyclotomic_reduce,
    enumerate_basis,
    mod_Jn,
    mod_Jn_prime,
    star,
    z_poly,
)
from .report import VerificationReport
from .sympoly import (
    SCHUR_METHODS,
    IntPolynomial,
    complete,
    eh_alternating_residual,
    elementary,
    schur,
)

Suite = Callable[[int | None, int | None, int], VerificationReport]

ISO_PAIRS = [(ell, n) for ell in range(1, 6) for n in range(1, ell + 1)] + [(6, 2), (6, 3)]


def _pairs(ell: int | None, n: int | None, default: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    if ell is None and n is None:
        return list(default)
    if ell is None:
        return [p for p in default if p[1] == n]
    if n is None:
        return [(ell, k) for k in range(1, ell + 1)]
    if not 1 <= n <= ell:
        raise ValueError(f"need 1 <= n <= ell (got ell={ell}, n={n})")
    return [(ell, n)]


def random_word(rng: random.Random, algebra: NilHecke, max_exp: int = 3) -> NilHeckeElement:
    """psi_w y^c with the length of w drawn uniformly first, so short words are common."""
    n = algebra.n
    perms = permutations(n)
    target = rng.randint(0, length(perms[-1]))
    w = rng.choice([p for p in perms if length(p) == target])
    if algebra.cyclotomic:
        c = tuple(rng.randint(0, algebra.ell - i) for i in range(1, n + 1))
    else:
        c = tuple(rng.randint(0, max_exp) for _ in range(n))
    return algebra.element({(w, c): 1})


def random_element(rng: random.Random, algebra: NilHecke, terms: int = 3, max_exp: int = 2) -> NilHeckeElement:
    total = algebra.zero()
    for _ in range(terms):
        total = total + random_word(rng, algebra, max_exp) * rng.randint(-3, 3)
    return total


def _is_normal(x: NilHeckeElement) -> bool:
    ell = x.algebra.ell
    return all(e <= ell - i for (_, c), _v in x.items() for i, e in enumerate(c, start=1))


# ---------------------------------------------------------------------------
# nilHecke relations
# ---------------------------------------------------------------------------


def check_defining_relations(algebra: NilHecke, report: VerificationReport) -> None:
    n = algebra.n
    psi, y = algebra.psi, algebra.y
    params = {"flavor": algebra.flavor, "ell": algebra.ell, "n": n}
    for r in range(1, n):
        sq = psi(r) * psi(r)
        report.check("psi_r^2 = 0", not sq, lambda: f"psi_{r}^2 = {sq}", r=r, **params)
        lhs, rhs = psi(r) * y(r + 1), y(r) * psi(r) + 1
        report.check("psi_r y_{r+1} = y_r psi_r + 1", lhs == rhs, lambda: f"{lhs} vs {rhs}", r=r, **params)
        lhs, rhs = y(r + 1) * psi(r), psi(r) * y(r) + 1
        report.check("y_{r+1} psi_r = psi_r y_r + 1", lhs == rhs, lambda: f"{lhs} vs {rhs}", r=r, **params)
        for k in range(1, n + 1):
            if k in (r, r + 1):
                continue
            lhs, rhs = psi(r) * y(k), y(k) * psi(r)
            report.check("psi_r y_k = y_k psi_r", lhs == rhs, lambda: f"{lhs} vs {rhs}", r=r, k=k, **params)
        for s in range(1, n):
            if abs(r - s) > 1:
                lhs, rhs = psi(r) * psi(s), psi(s) * psi(r)
                report.check("distant psi commute", lhs == rhs, lambda: f"{lhs} vs {rhs}", r=r, s=s, **params)
        if r < n - 1:
            lhs = psi(r) * psi(r + 1) * psi(r)
            rhs = psi(r + 1) * psi(r) * psi(r + 1)
            report.check("braid", lhs == rhs, lambda: f"{lhs} vs {rhs}", r=r, **params)
    for i in range(1, n + 1):
        for k in range(i + 1, n + 1):
            lhs, rhs = y(i) * y(k), y(k) * y(i)
            report.check("y commute", lhs == rhs, lambda: f"{lhs} vs {rhs}", i=i, k=k, **params)


def _check_random_products(
    algebra: NilHecke, rng: random.Random, count: int, report: VerificationReport, max_exp: int = 3
) -> None:
    params = {"flavor": algebra.flavor, "ell": algebra.ell, "n": algebra.n}
    bad_assoc = bad_grade = bad_normal = 0
    witness = None
    for _ in range(count):
        a, b, c = (random_word(rng, algebra, max_exp) for _ in range(3))
        ab = a * b
        left, right = ab * c, a * (b * c)
        if left != right:
            bad_assoc += 1
            witness = witness or f"({a})({b})({c}): {left} vs {right}"
        da, db = a.degree(), b.degree()
        if ab and ab.degree() != da + db:
            bad_grade += 1
            witness = witness or f"deg({a} * {b}) = {ab.degree()}"
        if algebra.cyclotomic and not (_is_normal(ab) and _is_normal(left)):
            bad_normal += 1
            witness = witness or f"{ab} is not reduced"
    report.check(f"associativity ({count} random triples)", not bad_assoc, witness, **params)
    report.check("grading additive", not bad_grade, witness, **params)
    if algebra.cyclotomic:
        report.check("products stay in normal form", not bad_normal, witness, **params)


def suite_free_relations(ell: int | None = None, n: int | None = None, seed: int = 0) -> VerificationReport:
    report = VerificationReport("free-relations")
    rng = random.Random(seed)
    for k in [n] if n is not None else [2, 3, 4]:
        H = NilHecke(k)
        check_defining_relations(H, report)
        _check_random_products(H, rng, 200, report)
        bad = None
        for _ in range(50):
            a, b = random_element(rng, H), random_element(rng, H)
            if star(a * b) != star(b) * star(a) or star(star(a)) != a:
                bad = f"a={a}, b={b}"
                break
        report.check("star is an anti-involution", bad is None, bad, n=k)
    return report


# ---------------------------------------------------------------------------
# cyclotomic quotient
# ---------------------------------------------------------------------------


CYCLOTOMIC_PAIRS = [(ell, n) for ell in range(1, 7) for n in range(1, ell + 1)]


def suite_cyclotomic(ell: int | None = None, n: int | None = None, seed: int = 0) -> VerificationReport:
    report = VerificationReport("cyclotomic")
    rng = random.Random(seed)
    for l, k in _pairs(ell, n, CYCLOTOMIC_PAIRS):
        expected = math.factorial(k) ** 2 * math.comb(l, k)
        count = len(enumerate_basis(l, k))
        report.check("basis count", count == expected, f"{count} != {expected}", ell=l, n=k)
        C = NilHecke(k, l)
        top = C.y(1, l)
        report.check("y_1^ell = 0", not top, lambda: f"y1^{l} -> {top}", ell=l, n=k)
        for s in range(1, k + 1):
            for t in (1, 2):
                h = C.from_polynomial(_embed(complete(l - s + t, s), k))
                report.check("sum relation vanishes", not h, lambda: f"h_{l - s + t}(y1..y{s}) -> {h}", ell=l, n=k, s=s, t=t)
        for t in (1, 2, 3):
            h = C.from_polynomial(complete(l - k + t, k))
            report.check("h_{ell-n+t} vanishes", not h, lambda: f"-> {h}", ell=l, n=k, t=t)
        report.check("reduction idempotent", _reduction_idempotent(C, rng), "re-reduction changed an element", ell=l, n=k)
        check_defining_relations(C, report)
        _check_random_products(C, rng, 100, report)
    return report


def _embed(f: IntPolynomial, n: int) -> IntPolynomial:
    """A polynomial in y_1..y_s viewed in y_1..y_n."""
    pad = n - f.nvars
    return IntPolynomial(n, {c + (0,) * pad: v for c, v in f.items()})


def _reduction_idempotent(C: NilHecke, rng: random.Random) -> bool:
    for _ in range(10):
        x = random_word(rng, C)
        if cyclotomic_reduce(x) != x:
            return False
    return True


# ---------------------------------------------------------------------------
# symmetric functions and S_lambda
# ---------------------------------------------------------------------------


def suite_schur(ell: int | None = None, n: int | None = None, seed: int = 0) -> VerificationReport:
    report = VerificationReport("schur")
    for k in [n] if n is not None else [2, 3]:
        for lam in partitions_in_box(3, 3):
            z, s = z_poly(lam, k), schur(lam, k)
            report.check("z(lam) = s_lam", z == s, lambda: f"z = {z}, s = {s}", lam=lam, n=k)
            forms = {m: schur(lam, k, method=m) for m in SCHUR_METHODS}
            report.check("Schur constructions agree", len(set(forms.values())) == 1, lambda: f"{forms}", lam=lam, n=k)
        for m in range(1, 7):
            r = eh_alternating_residual(m, k)
            report.check("sum (-1)^s e_s h_{m-s} = 0", not r, lambda: f"-> {r}", m=m, n=k)
    return report


def suite_s_lambda(ell: int | None = None, n: int | None = None, seed: int = 0) -> VerificationReport:
    report = VerificationReport("s-lambda")
    rng = random.Random(seed)
    for k in [n] if n is not None else [2, 3]:
        H = NilHecke(k)
        for i in range(5):
            got = mod_Jn(S_row(i, H))
            report.check("S_(i) = h_i mod J_n", got == complete(i, k), lambda: f"{got}", i=i, n=k)
        for j in range(k + 1):
            got = mod_Jn(S_column(j, H))
            report.check("S_(1^j) = e_j mod J_n", got == elementary(j, k), lambda: f"{got}", j=j, n=k)
        small = partitions_in_box(2, 2)
        for lam, mu in itertools.product(small, repeat=2):
            a = mod_Jn(S_element(lam, H) * S_element(mu, H))
            b = mod_Jn(S_element(mu, H) * S_element(lam, H))
            report.check("S_lam S_mu = S_mu S_lam mod J_n", a == b, lambda: f"{a} vs {b}", lam=lam, mu=mu, n=k)
        for lam in partitions_in_box(3, 3):
            S_lam = S_element(lam, H)
            for c in range(k + 1):
                lhs = S_lam * S_column(c, H)
                for nu in tensor_col(lam, c, len(lam) + c):
                    lhs = lhs - S_element(nu, H)
                r = mod_Jn(lhs)
                report.check("S Pieri column", not r, lambda: f"residual {r}", lam=lam, k=c, n=k)
            for s in range(4):
                lhs = S_lam * S_row(s, H)
                for nu in tensor_row(lam, s, len(lam) + 1):
                    lhs = lhs - S_element(nu, H)
                r = mod_Jn(lhs)
                report.check("S Pieri row", not r, lambda: f"residual {r}", lam=lam, s=s, n=k)
            size = len(lam)
            det = determinant([[S_row(lam[i] - i + j, H) for j in range(size)] for i in range(size)], H.one())
            a, b = mod_Jn(det), mod_Jn(S_lam)
            report.check("S Jacobi-Trudi", a == b, lambda: f"{a} vs {b}", lam=lam, n=k)
        bad = None
        for _ in range(100):
            x = random_element(rng, H)
            if mod_Jn_prime(star(x)) != mod_Jn(x):
                bad = f"x = {x}"
                break
        report.check("mod J'_n(star x) = mod J_n(x)", bad is None, bad, n=k)
        w0 = H.psi_perm(longest_element(k))
        ymin = H.monomial(tuple(range(k - 1, -1, -1)))
        sgn = -1 if (k * (k - 1) // 2) % 2 else 1
        report.check("y_min psi_w0 = sign mod J_n", mod_Jn(ymin * w0 * sgn) == 1, None, n=k)
        report.check("psi_w0 y_min = sign mod J'_n", mod_Jn_prime(w0 * ymin * sgn) == 1, None, n=k)
    return report


# ---------------------------------------------------------------------------
# b_lambda, Grassmannian, isomorphisms
# ---------------------------------------------------------------------------


B_PAIRS = [(ell, n) for ell in range(1, 6) for n in range(1, ell + 1)]


def suite_b_lambda(ell: int | None = None, n: int | None = None, seed: int = 0) -> VerificationReport:
    report = VerificationReport("b-lambda")
    for l, k in _pairs(ell, n, B_PAIRS):
        report.extend(check_b_identities(l, k))
    return report


def grassmann_rings(ell: int | None, n: int | None) -> list[GrassmannRing]:
    if ell is None and n is None:
        return [GrassmannRing(k, l - k) for l in range(0, 7) for k in range(0, l + 1)]
    rings = []
    for l, k in _pairs(ell, n, []):
        for ring in (GrassmannRing(k, l - k), GrassmannRing(l - k, k)):
            if ring not in rings:
                rings.append(ring)
    return rings


def suite_grassmann(ell: int | None = None, n: int | None = None, seed: int = 0) -> VerificationReport:
    report = VerificationReport("grassmann")
    for ring in grassmann_rings(ell, n):
        p = {"k": ring.k, "m": ring.m}
        basis = ring.basis()
        classes = [ring.cls(a) for a in basis]
        top = 2 * ring.k * ring.m
        bad = None
        for x, y in itertools.product(classes, repeat=2):
            xy = gmul(x, y)
            if xy != oracle_mul(x, y):
                bad = f"{x} * {y}: {xy} vs oracle {oracle_mul(x, y)}"
                break
            if xy != gmul(y, x):
                bad = f"{x} * {y} not commutative"
                break
            if xy and xy.degree() != x.degree() + y.degree():
                bad = f"deg({x} * {y}) = {xy.degree()}"
                break
            if x.degree() + y.degree() > top and xy:
                bad = f"{x} * {y} = {xy} above the top degree"
                break
        report.check("mul = oracle_mul, commutative, graded", bad is None, bad, rank=len(basis), **p)
        unit = all(gmul(ring.one(), x) == x for x in classes)
        report.check("identity class is neutral", unit, None, **p)
        if ring.ell <= 5:
            bad = None
            for x, y, z in itertools.product(classes, repeat=3):
                if gmul(gmul(x, y), z) != gmul(x, gmul(y, z)):
                    bad = f"({x})({y})({z})"
                    break
            report.check("associative", bad is None, bad, **p)
        res = borel_residuals(ring)
        report.check("Borel residuals vanish", not any(res), lambda: f"{[str(r) for r in res]}", **p)
        for a in basis:
            g = evaluate_ctilde_monomials(giambelli(a, ring), ring.one())
            report.check("Giambelli reconstitutes the class", g == ring.cls(a), lambda: f"det gives {g}", a=a, **p)
    G22 = GrassmannRing(2, 2)
    s1 = G22.cls((0, 1))
    folded, oracle = s1 * s1 * s1 * s1, oracle_mul(s1, s1, s1, s1)
    expected = G22.cls((2, 2), 2)
    report.check("(0,1)^4 = 2*(2,2) in G(2,2)", folded == expected == oracle, lambda: f"{folded}, oracle {oracle}")
    return report


def suite_eta(ell: int | None = None, n: int | None = None, seed: int = 0) -> VerificationReport:
    report = VerificationReport("eta")
    for l, k in _pairs(ell, n, ISO_PAIRS):
        report.extend(check_eta(l, k))
        report.extend(check_center(l, k))
    return report


def suite_duality(ell: int | None = None, n: int | None = None, seed: int = 0) -> VerificationReport:
    report = VerificationReport("duality")
    for l, k in _pairs(ell, n, ISO_PAIRS):
        report.extend(check_duality(l, k))
    return report


SUITES: dict[str, Suite] = {
    "free-relations": suite_free_relations,
    "cyclotomic": suite_cyclotomic,
    "schur": suite_schur,
    "s-lambda": suite_s_lambda,
    "b-lambda": suite_b_lambda,
    "grassmann": suite_grassmann,
    "eta": suite_eta,
    "duality": suite_duality,
}


def run_suite(name: str, ell: int | None = None, n: int | None = None, seed: int = 0) -> list[VerificationReport]:
    """Run one suite, or every suite for ``"all"``."""
    if name == "all":
        return [fn(ell, n, seed) for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return [SUITES[name](ell, n, seed)]
