"""Seidel classes acting on the box posets and on quantum K-theory classes.

For every family the Seidel group acts on the poset by order automorphisms:

* GrA(m,n): translations of the cylinder; ``sigma`` is ``(1,0)``, ``tau`` is ``(0,1)``.
* OG(n,2n): ``row`` (the class ``[X^{n-1}]``) translates by ``(1,1)``; ``point``
  is the reflection ``(i,j) -> (j, i+n)``.
* LG(n,2n): ``q`` translates by ``(1,1)``; ``point`` is ``(i,j) -> (j, i+n)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, TYPE_CHECKING

from .errors import ConsistencyError, DomainError, ParseError
from .strip_poset import (
    GRA, LG, OG, Box, Family, QuantumShape, _seq_value, _shape_from_profile,
    _shape_from_sequence, boundary_sequence, row_length, row_profile, row_start, translate,
)

if TYPE_CHECKING:
    from .qk_ring import QKClass

GENERATORS = {
    GRA: ("sigma", "tau", "point", "q"),
    OG: ("row", "point", "q"),
    LG: ("point", "q"),
}


@dataclass(frozen=True)
class SeidelElement:
    """A Seidel class times a power of q, in normal form.

    GrA stores a translation ``(x, y)`` reduced modulo ``(m, m-n)`` so that
    ``-(n-m) < x - y <= m``.  OG and LG store ``(eps, t)``: the reflection applied
    ``eps`` times followed by ``t`` diagonal translations (OG half-steps, LG q-steps).
    """

    family: Family
    a: int = 0
    b: int = 0

    def __post_init__(self) -> None:
        f = self.family
        if f.kind == GRA:
            x, y = self.a, self.b
            m, nm = f.m, f.n - f.m
            k = -((m - (x - y)) // f.n)
            x, y = x - k * m, y + k * nm
            if not -nm < x - y <= m:
                raise ConsistencyError(f"bad GrA normal form ({x},{y})")
            object.__setattr__(self, "a", x)
            object.__setattr__(self, "b", y)
        else:
            eps, t = self.a, self.b
            if eps not in (0, 1):
                t += (eps // 2) * f.n
                eps %= 2
            object.__setattr__(self, "a", eps)
            object.__setattr__(self, "b", t)

    # -- construction -------------------------------------------------------

    @classmethod
    def identity(cls, family: Family) -> "SeidelElement":
        return cls(family, 0, 0)

    @classmethod
    def generator(cls, family: Family, name: str, power: int = 1) -> "SeidelElement":
        name = name.lower()
        if name not in GENERATORS[family.kind]:
            raise DomainError(f"{name!r} is not a Seidel generator for {family}")
        if family.kind == GRA:
            m = family.m
            vec = {"sigma": (1, 0), "tau": (0, 1), "point": (m, 0), "q": (1, 1)}[name]
            return cls(family, vec[0] * power, vec[1] * power)
        if name == "point":
            return cls(family, power % 2, (power // 2) * family.n)
        step = 2 if (family.kind == OG and name == "q") else 1
        return cls(family, 0, step * power)

    @classmethod
    def from_word(cls, family: Family, word: Iterable[tuple[str, int]]) -> "SeidelElement":
        out = cls.identity(family)
        for name, power in word:
            out = out * cls.generator(family, name, power)
        return out

    @classmethod
    def parse(cls, family: Family, text: str) -> "SeidelElement":
        """Parse ``"sigma^2*q"`` style words."""
        word = []
        for token in text.replace(" ", "").split("*"):
            if not token:
                continue
            name, _, power = token.partition("^")
            try:
                word.append((name, int(power) if power else 1))
            except ValueError as exc:
                raise ParseError(f"bad exponent in {token!r}") from exc
        return cls.from_word(family, word)

    # -- group structure ----------------------------------------------------

    def __mul__(self, other: "SeidelElement") -> "SeidelElement":
        if self.family != other.family:
            raise DomainError("Seidel elements of different families")
        if self.family.kind == GRA:
            return SeidelElement(self.family, self.a + other.a, self.b + other.b)
        t = self.b + other.b + (self.family.n if self.a and other.a else 0)
        return SeidelElement(self.family, self.a ^ other.a, t)

    def __pow__(self, k: int) -> "SeidelElement":
        if k < 0:
            return self.inverse() ** (-k)
        out = SeidelElement.identity(self.family)
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> "SeidelElement":
        if self.family.kind == GRA:
            return SeidelElement(self.family, -self.a, -self.b)
        return SeidelElement(self.family, self.a, -self.b - (self.family.n if self.a else 0))

    @property
    def normal_form(self) -> tuple[int, ...]:
        """GrA ``(a, b, d)`` for sigma^a tau^b q^d; OG ``(k, delta, d)``; LG ``(eps, d)``."""
        f = self.family
        if f.kind == GRA:
            x, y = self.a, self.b
            return (x - y, 0, y) if x >= y else (0, y - x, x)
        if f.kind == OG:
            return (self.b % 2, self.a, self.b // 2)
        return (self.a, self.b)

    @property
    def q_power(self) -> int:
        """Exponent d such that this element is q^d times a Seidel class."""
        return act_on_shape(self, QuantumShape(self.family, 0)).d

    def without_q(self) -> "SeidelElement":
        """The Seidel class itself, with the q-power removed."""
        return self * SeidelElement.generator(self.family, "q", -self.q_power)

    def __str__(self) -> str:
        f = self.family
        if f.kind == GRA:
            a, b, d = self.normal_form
            parts = [f"sigma^{a}" if a else "", f"tau^{b}" if b else "", f"q^{d}" if d else ""]
        elif f.kind == OG:
            k, delta, d = self.normal_form
            parts = [f"row^{k}" if k else "", "point" if delta else "", f"q^{d}" if d else ""]
        else:
            eps, d = self.normal_form
            parts = ["point" if eps else "", f"q^{d}" if d else ""]
        return "*".join(p for p in parts if p) or "1"


# ---------------------------------------------------------------------------
# Actions

def act_on_box(s: SeidelElement, b: Box) -> Box:
    f = s.family
    i, j = b
    if f.kind == GRA:
        return f.reduce((i + s.a, j + s.b))
    if not f.in_strip(b):
        raise DomainError(f"box {b} is outside the strip of {f}")
    if s.a:
        i, j = j, i + f.n
    return (i + s.b, j + s.b)


def _reflect_shape(shape: QuantumShape) -> QuantumShape:
    """Image of an LG/OG ideal under ``(i,j) -> (j, i+n)``."""
    f = shape.family
    base, tail = row_profile(shape)
    top = base + len(tail)
    lo, hi = base + 1, top + f.n
    rows = []
    for row in range(lo, hi + 1):
        start = row_start(f, row)
        count = 0
        for col in range(start, start + f.width):
            i = col - f.n
            if row < row_start(f, i) + row_length(shape, i):
                count += 1
        rows.append(count)
    return _shape_from_profile(f, lo - 1, rows)


def act_on_shape(s: SeidelElement, shape: QuantumShape) -> QuantumShape:
    f = shape.family
    if s.family != f:
        raise DomainError("Seidel element and shape belong to different families")
    if f.kind == GRA:
        seq = boundary_sequence(shape)
        new = tuple(_seq_value(f, seq, i - s.a) + s.b for i in range(1, f.m + 1))
        return _shape_from_sequence(f, new)
    if s.a:
        shape = _reflect_shape(shape)
    return translate(shape, s.b)


def seidel_multiply(s: SeidelElement, c: "QKClass") -> "QKClass":
    """Quantum product of a Seidel element with a class: a permutation of basis elements."""
    from .qk_ring import QKClass

    out = QKClass(c.family)
    for shape, coeff in c.terms.items():
        out = out + QKClass(c.family, {act_on_shape(s, shape): coeff})
    return out


# ---------------------------------------------------------------------------
# Degree bookkeeping from codimensions

def seidel_class(s: SeidelElement) -> QuantumShape:
    """The classical shape of the Seidel class ``s`` without its q-power."""
    return act_on_shape(s.without_q(), QuantumShape(s.family, 0))


def _grassmann_word(family: Family, mu: tuple[int, ...]) -> frozenset[int]:
    """Positions of the vertical steps of the boundary path of ``mu``, a subset of [1,n]."""
    m = family.m
    parts = mu + (0,) * (m - len(mu))
    return frozenset(parts[m - 1 - i] + i + 1 for i in range(m))


def _grassmann_partition(family: Family, subset: Iterable[int]) -> tuple[int, ...]:
    m = family.m
    elems = sorted(subset)
    return tuple(elems[m - 1 - k] - (m - 1 - k) - 1 for k in range(m))


def _rotated_classical(s: SeidelElement, u: QuantumShape) -> tuple[int, ...]:
    """Classical part of ``s * O^u`` for GrA by rotating the m-subset of [1,n]."""
    f = s.family
    a, b, _ = s.normal_form
    shift = (b - a) % f.n
    word = _grassmann_word(f, u.mu)
    return _grassmann_partition(f, ((x - 1 + shift) % f.n + 1 for x in word))


def seidel_degree(s: SeidelElement, u: QuantumShape) -> int:
    """q-exponent of ``s * O^u`` from the balance ``d c1 + codim(wu) = codim(w) + codim(u)``.

    For GrA the classical part of ``wu`` comes from rotating the m-subset of the
    boundary word; for OG and LG it is read off the image of the poset action.
    """
    if u.d != 0:
        raise DomainError("seidel_degree expects a classical shape u")
    w = s.without_q()
    if w.family.kind == GRA:
        wu = _rotated_classical(w, u)
    else:
        wu = act_on_shape(w, u).mu
    codim_w = seidel_class(w).size
    total = codim_w + u.size - sum(wu)
    d, r = divmod(total, s.family.c1)
    if r:
        raise ConsistencyError(f"codimension balance {total} is not divisible by c1={s.family.c1}")
    return d + s.q_power
