"""Quantum K-theory classes and the Pieri products.

A :class:`QKClass` is a finite integer combination of basis elements
``q^d O^mu``, each stored as its canonical :class:`QuantumShape`.  Negative
q-degrees are allowed (Laurent classes).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

from . import coeffs
from .errors import ConsistencyError, DomainError, ParseError
from .strip_poset import (
    GRA, LG, OG, Family, QuantumShape, lambda_plus, shapes_between, candidates_above, shift,
    skew,
)


@dataclass(frozen=True)
class QKClass:
    family: Family
    terms: Mapping[QuantumShape, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for shape, c in self.terms.items():
            if shape.family != self.family:
                raise DomainError(f"{shape} does not belong to {self.family}")
            if c:
                clean[shape] = int(c)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def basis(cls, shape: QuantumShape, coeff: int = 1) -> "QKClass":
        return cls(shape.family, {shape: coeff})

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "QKClass") -> None:
        if not isinstance(other, QKClass) or other.family != self.family:
            raise DomainError("classes belong to different families")

    def __add__(self, other: "QKClass") -> "QKClass":
        self._check(other)
        out = dict(self.terms)
        for s, c in other.terms.items():
            out[s] = out.get(s, 0) + c
        return QKClass(self.family, out)

    def __neg__(self) -> "QKClass":
        return self.scale(-1)

    def __sub__(self, other: "QKClass") -> "QKClass":
        return self + (-other)

    def scale(self, k: int) -> "QKClass":
        return QKClass(self.family, {s: k * c for s, c in self.terms.items()})

    def __rmul__(self, k: int) -> "QKClass":
        return self.scale(k)

    def q_shift(self, k: int = 1) -> "QKClass":
        return QKClass(self.family, {shift(s, k): c for s, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, QKClass) and other.family == self.family
                and dict(other.terms) == dict(self.terms))

    def __hash__(self) -> int:
        return hash((self.family, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __getitem__(self, shape: QuantumShape) -> int:
        return self.terms.get(shape, 0)

    # -- inspection ---------------------------------------------------------

    def items(self) -> list[tuple[QuantumShape, int]]:
        """Terms by ascending q-degree, then descending partition."""
        by_partition = sorted(self.terms.items(), key=lambda t: t[0].mu, reverse=True)
        return sorted(by_partition, key=lambda t: t[0].d)

    def q_degrees(self) -> list[int]:
        return sorted({s.d for s in self.terms})

    def truncate(self, max_degree: int) -> "QKClass":
        return QKClass(self.family, {s: c for s, c in self.terms.items() if s.d <= max_degree})

    def classical_part(self) -> "QKClass":
        return QKClass(self.family, {s: c for s, c in self.terms.items() if s.d == 0})

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        out = {"family": self.family.kind, "n": self.family.n}
        if self.family.kind == GRA:
            out["m"] = self.family.m
        out["terms"] = [{"q": s.d, "partition": list(s.mu), "coeff": c} for s, c in self.items()]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    @classmethod
    def from_dict(cls, data: Mapping) -> "QKClass":
        try:
            family = Family(data["family"], int(data["n"]), int(data.get("m", 0)))
            terms: dict[QuantumShape, int] = {}
            for t in data["terms"]:
                s = QuantumShape(family, int(t["q"]), tuple(int(x) for x in t["partition"]))
                terms[s] = terms.get(s, 0) + int(t["coeff"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed class record: {exc}") from exc
        return cls(family, terms)

    @classmethod
    def from_json(cls, text: str) -> "QKClass":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(str(exc)) from exc
        return cls.from_dict(data)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for s, c in self.items():
            factors = []
            if abs(c) != 1:
                factors.append(str(abs(c)))
            if s.d == 1:
                factors.append("q")
            elif s.d:
                factors.append(f"q^{s.d}")
            factors.append("O[" + ",".join(map(str, s.mu)) + "]")
            body = "·".join(factors)
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)


# ---------------------------------------------------------------------------
# Pieri products

def _check_p(family: Family, p: int) -> None:
    if not 1 <= p <= family.max_p:
        raise DomainError(f"p must lie in [1, {family.max_p}] for {family}, got {p}")


def pieri_coefficient(p: int, nu: QuantumShape, lam: QuantumShape, route: str | None = None) -> int:
    theta = skew(nu, lam)
    kind = lam.family.kind
    if kind == GRA:
        return coeffs.coeff_A(theta, p)
    if kind == OG:
        return coeffs.coeff_B(theta, p)
    return coeffs.coeff_N(theta, p, route or coeffs.RECURSION)


def pieri(p: int, lam: QuantumShape, route: str | None = None) -> QKClass:
    """``O^p * O^lam`` in quantum K-theory."""
    family = lam.family
    _check_p(family, p)
    terms = {nu: pieri_coefficient(p, nu, lam, route) for nu in candidates_above(lam)}
    return QKClass(family, terms)


def pieri_class(p: int, c: QKClass, route: str | None = None) -> QKClass:
    """Linear extension of :func:`pieri`."""
    out = QKClass(c.family)
    for shape, coeff in c.items():
        out = out + pieri(p, shape, route).scale(coeff)
    return out


# ---------------------------------------------------------------------------
# Undeformed product and psi for LG

def _largest_shape_of_degree(family: Family, d: int) -> QuantumShape:
    return QuantumShape(family, d, tuple(range(family.max_p, 0, -1)))


def undeformed_pieri_lg(p: int, mu: QuantumShape, max_degree: int | None = None,
                        route: str = coeffs.CLOSED) -> QKClass:
    """``O^p (.) O^mu`` truncated to q-degrees ``<= max_degree`` (default ``mu.d + 2``).

    The undeformed product has terms in every q-degree above ``mu``, so the full
    product is not a finite class; every retained term is exact.
    """
    family = mu.family
    if family.kind != LG:
        raise DomainError("the undeformed product is defined for LG(n,2n)")
    _check_p(family, p)
    top_degree = mu.d + 2 if max_degree is None else max_degree
    if top_degree < mu.d:
        return QKClass(family)
    top = _largest_shape_of_degree(family, top_degree)
    terms = {nu: coeffs.coeff_H(skew(nu, mu), p, route) for nu in shapes_between(mu, top)}
    return QKClass(family, terms)


def psi(c: QKClass) -> QKClass:
    """Term-wise ``psi(O^lam) = q^{-1} O^{lam+}``."""
    if c.family.kind != LG:
        raise DomainError("psi is defined for LG(n,2n)")
    out: dict[QuantumShape, int] = {}
    for s, coeff in c.terms.items():
        t = shift(lambda_plus(s), -1)
        out[t] = out.get(t, 0) + coeff
    return QKClass(c.family, out)


def pieri_via_undeformed(p: int, mu: QuantumShape, max_degree: int | None = None) -> QKClass:
    """``O^p (.) O^mu - q psi(O^p (.) O^mu)``, exact through ``max_degree``."""
    top = mu.d + 2 if max_degree is None else max_degree
    od = undeformed_pieri_lg(p, mu, top)
    return (od - psi(od).q_shift(1)).truncate(top)


def check_nonnegative_degrees(c: QKClass) -> QKClass:
    if any(s.d < 0 for s in c.terms):
        raise ConsistencyError("product of classical inputs produced a negative q-degree")
    return c


def is_q_interval(c: QKClass) -> bool:
    degs = c.q_degrees()
    return not degs or degs == list(range(degs[0], degs[-1] + 1))


__all__ = [
    "QKClass", "pieri", "pieri_class", "pieri_coefficient", "undeformed_pieri_lg", "psi",
    "pieri_via_undeformed", "is_q_interval", "check_nonnegative_degrees",
]
