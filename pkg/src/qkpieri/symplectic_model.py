"""Schubert symbols of symplectic Grassmannians and matrix diagrams of Richardson varieties.

A Schubert symbol for ``SG(m, 2n)`` is an m-subset ``P`` of ``[1, 2n]`` with no
two elements summing to ``2n + 1``.  For ``Q <= P`` the diagram ``M_P^Q`` has a
star in row ``i`` and column ``c`` when ``q_i <= c <= p_i``; its statistics
(cuts, lone stars, components) describe the perpendicular image as a complete
intersection.  For ``LG(n, 2n)`` this yields the Pieri-type Gromov-Witten
invariants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .coeffs import h
from .errors import DomainError, OrderError
from .strip_poset import (
    Family, QuantumShape, contains, count_n, rim_size, skew,
)


@dataclass(frozen=True, order=True)
class SchubertSymbol:
    n: int
    elements: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        elems = tuple(sorted(int(x) for x in self.elements))
        if self.n < 1:
            raise DomainError("n must be positive")
        if len(set(elems)) != len(elems):
            raise DomainError(f"repeated entries in {elems}")
        if any(not 1 <= x <= 2 * self.n for x in elems):
            raise DomainError(f"entries of {elems} must lie in [1, {2 * self.n}]")
        s = set(elems)
        if any(2 * self.n + 1 - x in s for x in elems):
            raise DomainError(f"{elems} contains a pair summing to {2 * self.n + 1}")
        if len(elems) > self.n:
            raise DomainError("a Schubert symbol has at most n elements")
        object.__setattr__(self, "elements", elems)

    @property
    def m(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def length(self) -> int:
        """Dimension of the Schubert variety ``Y_P``."""
        p, two = self.elements, 2 * self.n + 1
        pairs = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] + p[j] > two)
        return sum(x - i for i, x in enumerate(p, start=1)) - pairs

    def dual(self) -> "SchubertSymbol":
        return SchubertSymbol(self.n, tuple(2 * self.n + 1 - x for x in self.elements))

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"


def bruhat_le(q: SchubertSymbol, p: SchubertSymbol) -> bool:
    return q.n == p.n and q.m == p.m and all(a <= b for a, b in zip(q, p))


# ---------------------------------------------------------------------------
# Shapes of LG(n,2n) and their symbols

def _strict(n: int, lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam if int(x) != 0)
    if any(x < 0 for x in lam) or any(a <= b for a, b in zip(lam, lam[1:])):
        raise DomainError(f"{lam} is not a strict partition")
    if lam and lam[0] > n:
        raise DomainError(f"{lam} does not fit in the staircase of size {n}")
    return lam


def shape_to_symbol(n: int, lam: Sequence[int]) -> SchubertSymbol:
    """Read the border path of ``lam`` from the upper-right corner: step k gives k
    if horizontal and 2n+1-k if vertical."""
    lam = _strict(n, lam)
    out = []
    x, i = n, 1
    for k in range(1, n + 1):
        part = lam[i - 1] if i <= len(lam) else 0
        if x > i - 1 + part:
            out.append(k)
            x -= 1
        else:
            out.append(2 * n + 1 - k)
            i += 1
    return SchubertSymbol(n, tuple(out))


def symbol_to_shape(sym: SchubertSymbol) -> tuple[int, ...]:
    n = sym.n
    if sym.m != n:
        raise DomainError("only Lagrangian symbols (m = n) correspond to shapes")
    s = set(sym.elements)
    x, i, rows = n, 1, []
    for k in range(1, n + 1):
        if k in s:
            x -= 1
        elif 2 * n + 1 - k in s:
            rows.append(x - (i - 1))
            i += 1
        else:
            raise DomainError(f"{sym} has no entry for step {k}")
    return _strict(n, rows)


# ---------------------------------------------------------------------------
# Matrix diagrams

class Descriptor(NamedTuple):
    linear_eqs: tuple[int, ...]
    quadratic_eqs: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class MatrixDiagram:
    P: SchubertSymbol
    Q: SchubertSymbol

    def __post_init__(self) -> None:
        if self.P.n != self.Q.n or self.P.m != self.Q.m:
            raise DomainError("P and Q must be symbols for the same SG(m,2n)")
        if not bruhat_le(self.Q, self.P):
            raise OrderError(f"{self.Q} is not below {self.P} in the Bruhat order")

    @property
    def n(self) -> int:
        return self.P.n

    @property
    def m(self) -> int:
        return self.P.m

    @property
    def rows(self) -> list[tuple[int, int]]:
        return list(zip(self.Q.elements, self.P.elements))

    def correlated(self, i: int, j: int) -> bool:
        """Rows are 0-based here."""
        q, p, two = self.Q.elements, self.P.elements, 2 * self.n + 1
        return i != j and q[i] + q[j] < two < p[i] + p[j]

    @cached_property
    def correlated_pairs(self) -> tuple[tuple[int, int], ...]:
        m = self.m
        return tuple((i + 1, j + 1) for i in range(m) for j in range(i + 1, m) if self.correlated(i, j))

    @property
    def unassigned(self) -> int:
        return sum(p - q for q, p in self.rows)

    @property
    def dimension(self) -> int:
        return self.unassigned - len(self.correlated_pairs)

    def constraints(self, k: int) -> int:
        """Number of rows correlated to row ``k`` (1-based)."""
        return sum(1 for j in range(self.m) if self.correlated(k - 1, j))

    def movable(self, k: int) -> bool:
        q, p = self.rows[k - 1]
        return self.constraints(k) < p - q

    def solvable(self, k: int) -> bool:
        q, p = self.rows[k - 1]
        return self.constraints(k) <= p - q

    @property
    def movable_rows(self) -> tuple[int, ...]:
        return tuple(k for k in range(1, self.m + 1) if self.movable(k))

    @property
    def solvable_rows(self) -> tuple[int, ...]:
        return tuple(k for k in range(1, self.m + 1) if self.solvable(k))

    def is_cut(self, c: int) -> bool:
        return 0 <= c <= 2 * self.n and all(p <= c or c < q for q, p in self.rows)

    @cached_property
    def cuts(self) -> tuple[int, ...]:
        return tuple(c for c in range(2 * self.n + 1) if self.is_cut(c))

    @cached_property
    def double_cuts(self) -> tuple[int, ...]:
        return tuple(c for c in self.cuts if self.is_cut(2 * self.n - c))

    @property
    def lone_stars(self) -> tuple[int, ...]:
        return tuple(sorted(q for q, p in self.rows if q == p))

    @cached_property
    def components(self) -> tuple[tuple[int, int], ...]:
        n = self.n
        ends = [c for c in self.double_cuts if c <= n]
        if ends[-1] != n:
            ends.append(n)
        return tuple(zip(ends, ends[1:]))

    def rows_in(self, comp: tuple[int, int]) -> tuple[int, ...]:
        a, b = comp
        n2 = 2 * self.n
        out = []
        for k, (q, p) in enumerate(self.rows, start=1):
            if (a < q <= p <= b or n2 - b < q <= p <= n2 - a
                    or (b == self.n and a < q <= p <= n2 - a)):
                out.append(k)
        return tuple(out)

    def is_quadratic(self, comp: tuple[int, int]) -> bool:
        a, b = comp
        return (b in self.double_cuts and b - a >= 2 and len(self.rows_in(comp)) == b - a)

    @property
    def quadratic_components(self) -> tuple[tuple[int, int], ...]:
        return tuple(c for c in self.components if self.is_quadratic(c))

    def ascii(self, bars: str = "double-cuts") -> str:
        """Star/dot grid with a bar after every double-cut (or every cut) column."""
        if bars not in ("double-cuts", "cuts"):
            raise DomainError(f"bars must be 'double-cuts' or 'cuts', got {bars!r}")
        source = self.double_cuts if bars == "double-cuts" else self.cuts
        marks = {c for c in source if 1 <= c <= 2 * self.n - 1}
        lines = []
        for q, p in self.rows:
            cells = []
            for c in range(1, 2 * self.n + 1):
                cells.append("*" if q <= c <= p else ".")
                if c in marks:
                    cells.append("|")
            lines.append(" ".join(cells))
        return "\n".join(lines)

    def stats(self) -> dict:
        desc = ppq_descriptor(self.P, self.Q)
        return {
            "n": self.n, "m": self.m,
            "P": list(self.P.elements), "Q": list(self.Q.elements),
            "unassigned": self.unassigned,
            "correlated_pairs": [list(x) for x in self.correlated_pairs],
            "dimension": self.dimension,
            "cuts": list(self.cuts),
            "double_cuts": list(self.double_cuts),
            "lone_stars": list(self.lone_stars),
            "components": [list(c) for c in self.components],
            "quadratic_components": [list(c) for c in self.quadratic_components],
            "movable_rows": list(self.movable_rows),
            "solvable_rows": list(self.solvable_rows),
            "equations": descriptor_equations(self.n, desc),
        }


def diagram(P: SchubertSymbol, Q: SchubertSymbol) -> MatrixDiagram:
    return MatrixDiagram(P, Q)


def richardson_dimension(P: SchubertSymbol, Q: SchubertSymbol) -> int:
    """``dim Y_P^Q = l(P) - l(Q)``, independent of the diagram count."""
    if not bruhat_le(Q, P):
        raise OrderError(f"{Q} is not below {P} in the Bruhat order")
    return P.length() - Q.length()


def ppq_descriptor(P: SchubertSymbol, Q: SchubertSymbol) -> Descriptor:
    """Linear equations ``x_{2n+1-s}`` (one per lone star) and quadrics (one per quadratic component)."""
    M = MatrixDiagram(P, Q)
    lin = tuple(sorted(2 * M.n + 1 - s for s in M.lone_stars))
    return Descriptor(lin, M.quadratic_components)


def descriptor_equations(n: int, desc: Descriptor) -> list[str]:
    out = [f"x{k}" for k in desc.linear_eqs]
    for a, b in desc.quadratic_eqs:
        out.append(" + ".join(f"x{t}x{2 * n + 1 - t}" for t in range(a + 1, b + 1)))
    return out


def descriptor_text(n: int, desc: Descriptor) -> str:
    eqs = descriptor_equations(n, desc)
    return f"Z({', '.join(eqs)})" if eqs else f"P^{2 * n - 1}"


# ---------------------------------------------------------------------------
# Curve neighbourhoods and Gromov-Witten invariants of Pieri type

def _theta(lam: Sequence[int], mu: Sequence[int], d: int, n: int):
    f = Family.lg(n)
    top = QuantumShape(f, d, tuple(lam))
    bottom = QuantumShape(f, 0, tuple(mu))
    if not contains(top, bottom):
        return None
    return skew(top, bottom)


def curve_nbhd_symbols(lam: Sequence[int], mu: Sequence[int], d: int,
                       n: int) -> tuple[SchubertSymbol, SchubertSymbol]:
    """``(P', Q')`` with ``P' = {p_{d+1}, ..., p_n}`` and ``Q' = {q_1, ..., q_{n-d}}``."""
    if not 0 <= d <= n:
        raise DomainError(f"degree d must lie in [0, {n}]")
    lam, mu = _strict(n, lam), _strict(n, mu)
    if _theta(lam, mu, d, n) is None:
        raise OrderError(f"the curve neighbourhood is empty: {mu} is not contained in {lam}[{d}]")
    P, Q = shape_to_symbol(n, lam), shape_to_symbol(n, mu)
    Pp = SchubertSymbol(n, P.elements[d:])
    Qp = SchubertSymbol(n, Q.elements[:n - d])
    if not bruhat_le(Qp, Pp):
        raise OrderError(f"{Qp} is not below {Pp}")
    return Pp, Qp


class CurveStats(NamedTuple):
    R: int
    N: int
    size: int


def theta_stats(lam: Sequence[int], mu: Sequence[int], d: int, n: int) -> CurveStats | None:
    th = _theta(_strict(n, lam), _strict(n, mu), d, n)
    if th is None:
        return None
    boxes = th.boxes
    return CurveStats(rim_size(th.family, boxes) if boxes else 0, count_n(th.family, boxes), len(boxes))


def gw_pieri(lam: Sequence[int], mu: Sequence[int], d: int, p: int, n: int) -> int:
    """``I_d(O_lam, O^mu, O^p) = h(N, R - p)`` for ``theta = lam[d] / mu``; 1 when R = n + 1."""
    if not 1 <= p <= n:
        raise DomainError(f"p must lie in [1, {n}]")
    if d < 0:
        raise DomainError("d must be non-negative")
    st = theta_stats(lam, mu, d, n)
    if st is None:
        return 0
    if st.R == n + 1:
        return 1
    return h(st.N, st.R - p)


def rook_strip_subshapes(n: int, nu: Sequence[int]) -> Iterable[tuple[tuple[int, ...], int]]:
    """Pairs ``(kappa, |nu/kappa|)`` with ``nu / kappa`` having at most one box per row and column.

    Such boxes are pairwise incomparable, hence subsets of the corners of ``nu``.
    """
    nu = _strict(n, nu)
    boxes = {(i, i + k) for i, part in enumerate(nu, start=1) for k in range(part)}
    removable = [b for b in boxes
                 if (b[0] + 1, b[1]) not in boxes and (b[0], b[1] + 1) not in boxes]
    for k in range(len(removable) + 1):
        for sub in combinations(sorted(removable), k):
            if len({i for i, _ in sub}) < k or len({j for _, j in sub}) < k:
                continue
            rest = boxes - set(sub)
            rows = [sum(1 for (i, _) in rest if i == r) for r in range(1, len(nu) + 1)]
            yield tuple(x for x in rows if x), k


__all__ = [
    "SchubertSymbol", "MatrixDiagram", "Descriptor", "bruhat_le", "shape_to_symbol",
    "symbol_to_shape", "diagram", "richardson_dimension", "ppq_descriptor",
    "descriptor_equations", "descriptor_text", "curve_nbhd_symbols", "theta_stats",
    "gw_pieri", "rook_strip_subshapes",
]
