"""JSON forms of elements and classes; coefficients travel as decimal strings."""
from __future__ import annotations

from typing import Any

from .grassmann import CohomologyClass, GrassmannRing
from .isomorphism import BasicAlgebraElement
from .nilhecke import NilHecke, NilHeckeElement
from .sympoly import IntPolynomial


def element_to_json(x: NilHeckeElement) -> dict[str, Any]:
    alg = x.algebra
    return {
        "flavor": alg.flavor,
        "ell": alg.ell,
        "n": alg.n,
        "terms": [
            {"perm": list(w), "exps": list(c), "coeff": str(v)} for (w, c), v in x.sorted_terms()
        ],
    }


def element_from_json(data: dict[str, Any]) -> NilHeckeElement:
    flavor = data.get("flavor", "free")
    if flavor not in ("free", "cyclotomic"):
        raise ValueError(f"unknown flavor {flavor!r}")
    ell = data.get("ell") if flavor == "cyclotomic" else None
    if flavor == "cyclotomic" and ell is None:
        raise ValueError("cyclotomic element without ell")
    alg = NilHecke(int(data["n"]), None if ell is None else int(ell))
    return alg.element(
        ((tuple(t["perm"]), tuple(t["exps"])), int(t["coeff"])) for t in data["terms"]
    )


def class_to_json(x: CohomologyClass) -> dict[str, Any]:
    return {
        "k": x.ring.k,
        "m": x.ring.m,
        "classes": [{"index": list(a), "coeff": str(c)} for a, c in x.sorted_terms()],
    }


def class_from_json(data: dict[str, Any], ring: GrassmannRing | None = None) -> CohomologyClass:
    if ring is None:
        if "k" not in data or "m" not in data:
            raise ValueError("class JSON without k/m needs an explicit ring")
        ring = GrassmannRing(int(data["k"]), int(data["m"]))
    return ring.element((tuple(t["index"]), int(t["coeff"])) for t in data["classes"])


def polynomial_to_json(f: IntPolynomial) -> dict[str, Any]:
    return {
        "nvars": f.nvars,
        "terms": [{"exps": list(c), "coeff": str(v)} for c, v in f.sorted_terms()],
    }


def basic_to_json(x: BasicAlgebraElement) -> dict[str, Any]:
    return {
        "b": [{"partition": list(lam), "coeff": str(c)} for lam, c in x.sorted_terms()],
        "element": element_to_json(x.realize()),
    }
