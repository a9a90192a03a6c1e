"""Box posets for Gr(m,n), OG(n,2n) and LG(n,2n), quantum shapes and skew shapes.

Coordinates: a box is ``(i, j)`` with the row ``i`` increasing to the south and
the column ``j`` increasing to the east.  The posets are

* LG(n): the strip ``i <= j <= i+n``; SW diagonal ``j == i``, NE diagonal ``j == i+n``.
* OG(n): the strip ``i < j < i+n``; SW diagonal ``j == i+1``, NE diagonal ``j == i+n-1``.
* GrA(m,n): the cylinder ``Z^2 / Z(m, m-n)``; boxes are stored with ``1 <= i <= m``.

A quantum shape is a lower order ideal, stored as ``(d, mu)`` for the basis
element ``q^d O^mu``.  For LG/OG the ideal of ``O^mu`` has every row ``i <= 0``
full and row ``i >= 1`` starting on the SW diagonal with ``mu_i`` boxes; ``q``
translates by ``(1,1)`` in LG and by ``(2,2)`` in OG.  For GrA the ideal is
``{(i,j) : j <= lam_i}`` for a boundary sequence ``lam_1 >= ... >= lam_m``
extended by ``lam_{i+m} = lam_i - (n-m)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import ConsistencyError, DomainError, OrderError, ParseError

Box = tuple[int, int]

GRA = "GrA"
OG = "OG"
LG = "LG"

_KIND_ALIASES = {
    "gr": GRA, "gra": GRA, "grassmannian": GRA,
    "og": OG, "lg": LG,
}


@dataclass(frozen=True)
class Family:
    """One of Gr(m,n), OG(n,2n), LG(n,2n)."""

    kind: str
    n: int
    m: int = 0

    def __post_init__(self) -> None:
        kind = _KIND_ALIASES.get(str(self.kind).lower(), self.kind)
        object.__setattr__(self, "kind", kind)
        if kind == GRA:
            if not 0 < self.m < self.n:
                raise DomainError(f"Gr(m,n) needs 0 < m < n, got m={self.m}, n={self.n}")
        elif kind == OG:
            if self.n < 2:
                raise DomainError(f"OG(n,2n) needs n >= 2, got n={self.n}")
            object.__setattr__(self, "m", 0)
        elif kind == LG:
            if self.n < 1:
                raise DomainError(f"LG(n,2n) needs n >= 1, got n={self.n}")
            object.__setattr__(self, "m", 0)
        else:
            raise DomainError(f"unknown family kind {self.kind!r}")

    @classmethod
    def gr(cls, m: int, n: int) -> "Family":
        return cls(GRA, n, m)

    @classmethod
    def og(cls, n: int) -> "Family":
        return cls(OG, n)

    @classmethod
    def lg(cls, n: int) -> "Family":
        return cls(LG, n)

    @property
    def c1(self) -> int:
        """Degree of the anticanonical class on a line."""
        return {GRA: self.n, OG: 2 * self.n - 2, LG: self.n + 1}[self.kind]

    @property
    def width(self) -> int:
        """Boxes per row of the strip; for GrA the column period n-m."""
        return {GRA: self.n - self.m, OG: self.n - 1, LG: self.n + 1}[self.kind]

    @property
    def dim(self) -> int:
        if self.kind == GRA:
            return self.m * (self.n - self.m)
        if self.kind == OG:
            return self.n * (self.n - 1) // 2
        return self.n * (self.n + 1) // 2

    @property
    def max_p(self) -> int:
        """Largest index of a special Schubert class O^p."""
        return {GRA: self.n - self.m, OG: self.n - 1, LG: self.n}[self.kind]

    @property
    def sw_offset(self) -> int:
        """Value of j - i on the SW diagonal (LG/OG)."""
        self._require_strip()
        return 0 if self.kind == LG else 1

    @property
    def ne_offset(self) -> int:
        """Value of j - i on the NE diagonal (LG/OG)."""
        self._require_strip()
        return self.n if self.kind == LG else self.n - 1

    def _require_strip(self) -> None:
        if self.kind == GRA:
            raise DomainError("Gr(m,n) has no diagonals; R and N are undefined")

    def in_strip(self, b: Box) -> bool:
        if self.kind == GRA:
            return True
        i, j = b
        return self.sw_offset <= j - i <= self.ne_offset

    def reduce(self, b: Box) -> Box:
        """Canonical representative of a box (only changes GrA boxes)."""
        if self.kind != GRA:
            return b
        i, j = b
        k, r = divmod(i - 1, self.m)
        return (r + 1, j + k * (self.n - self.m))

    def __str__(self) -> str:
        if self.kind == GRA:
            return f"Gr({self.m},{self.n})"
        return f"{self.kind}({self.n},{2 * self.n})"


def _validate_partition(family: Family, mu: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(int(x) for x in mu)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(x <= 0 for x in parts):
        raise DomainError(f"partition {parts} has non-positive parts")
    if family.kind == GRA:
        if len(parts) > family.m or (parts and parts[0] > family.n - family.m):
            raise DomainError(f"{parts} does not fit in the {family.m}x{family.n - family.m} rectangle")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise DomainError(f"{parts} is not a partition")
    else:
        if any(a <= b for a, b in zip(parts, parts[1:])):
            raise DomainError(f"{parts} is not a strict partition")
        if parts and parts[0] > family.max_p:
            raise DomainError(f"{parts} has first part larger than {family.max_p}")
    return parts


@dataclass(frozen=True)
class QuantumShape:
    """The order ideal of ``q^d O^mu`` in canonical form."""

    family: Family
    d: int
    mu: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "mu", _validate_partition(self.family, self.mu))
        object.__setattr__(self, "d", int(self.d))

    @property
    def size(self) -> int:
        return sum(self.mu)

    def sort_key(self) -> tuple:
        return (self.d, self.mu)

    def __str__(self) -> str:
        return format_shape(self)


def classical(family: Family, mu: Sequence[int] = ()) -> QuantumShape:
    return QuantumShape(family, 0, tuple(mu))


def all_classical(family: Family) -> list[QuantumShape]:
    """Every shape with d = 0, sorted by (size, partition)."""
    if family.kind == GRA:
        parts = [p for p in product(range(family.n - family.m, -1, -1), repeat=family.m)
                 if all(a >= b for a, b in zip(p, p[1:]))]
    else:
        top = family.max_p
        parts = []
        for k in range(top + 1):
            for c in combinations(range(top, 0, -1), k):
                parts.append(c)
    shapes = {QuantumShape(family, 0, p) for p in parts}
    return sorted(shapes, key=lambda s: (s.size, s.mu))


# ---------------------------------------------------------------------------
# Row profiles (LG/OG) and boundary sequences (GrA)

def row_profile(s: QuantumShape) -> tuple[int, tuple[int, ...]]:
    """Rows ``<= base`` are full, row ``base + k`` has ``tail[k-1]`` boxes."""
    if s.family.kind == GRA:
        raise DomainError("row profiles are defined for OG and LG only")
    base = s.d if s.family.kind == LG else 2 * s.d
    return base, s.mu


def row_length(s: QuantumShape, i: int) -> int:
    base, tail = row_profile(s)
    if i <= base:
        return s.family.width
    k = i - base
    return tail[k - 1] if k <= len(tail) else 0


def row_start(family: Family, i: int) -> int:
    return i + family.sw_offset


def _shape_from_profile(family: Family, base: int, rows: Sequence[int]) -> QuantumShape:
    w = family.width
    rows = list(rows)
    prev = w
    for length in rows:
        if not 0 <= length <= w:
            raise DomainError(f"row length {length} outside [0, {w}]")
        if not (length == 0 or length < prev or (length == w and prev == w)):
            raise DomainError(f"row lengths {rows} above base {base} do not form an order ideal")
        prev = length
    while rows and rows[0] == w:
        base += 1
        rows.pop(0)
    while rows and rows[-1] == 0:
        rows.pop()
    if family.kind == OG and base % 2:
        base -= 1
        rows.insert(0, w)
    d = base if family.kind == LG else base // 2
    return QuantumShape(family, d, tuple(rows))


def _seq_value(family: Family, seq: Sequence[int], i: int) -> int:
    k, r = divmod(i - 1, family.m)
    return seq[r] - k * (family.n - family.m)


def _q_seq(family: Family, seq: Sequence[int], k: int) -> tuple[int, ...]:
    m, nm = family.m, family.n - family.m
    seq = tuple(seq)
    for _ in range(k):
        seq = (seq[-1] + nm + 1,) + tuple(x + 1 for x in seq[:-1])
    for _ in range(-k):
        seq = tuple(x - 1 for x in seq[1:]) + (seq[0] - nm - 1,)
    assert len(seq) == m
    return seq


def boundary_sequence(s: QuantumShape) -> tuple[int, ...]:
    """The sequence ``(lam_1, ..., lam_m)`` of a GrA shape."""
    if s.family.kind != GRA:
        raise DomainError("boundary sequences are defined for Gr(m,n) only")
    base = s.mu + (0,) * (s.family.m - len(s.mu))
    return _q_seq(s.family, base, s.d)


def _shape_from_sequence(family: Family, seq: Sequence[int]) -> QuantumShape:
    m, nm = family.m, family.n - family.m
    seq = tuple(int(x) for x in seq)
    if len(seq) != m:
        raise DomainError(f"boundary sequence must have {m} entries, got {len(seq)}")
    if any(a < b for a, b in zip(seq, seq[1:])):
        raise DomainError(f"boundary sequence {seq} is not weakly decreasing")
    if seq[0] - seq[-1] > nm:
        raise DomainError(f"boundary sequence {seq} violates the cylinder bound {nm}")
    d = 0
    for _ in range(4 * (abs(sum(seq)) // family.n + 2)):
        if seq[-1] < 0:
            seq = _q_seq(family, seq, 1)
            d -= 1
        elif seq[0] > nm:
            seq = _q_seq(family, seq, -1)
            d += 1
        else:
            return QuantumShape(family, d, seq)
    raise ConsistencyError(f"canonicalization of {seq} did not terminate")


def canonicalize(family: Family, ideal) -> QuantumShape:
    """Canonical ``(d, mu)`` of an order ideal given by its boundary description.

    GrA: a boundary sequence of length m.  LG/OG: a pair ``(k, rows)`` meaning
    rows ``<= k`` are full and row ``k + t`` has ``rows[t-1]`` boxes.
    """
    if family.kind == GRA:
        return _shape_from_sequence(family, ideal)
    try:
        base, rows = ideal
        base = int(base)
    except (TypeError, ValueError) as exc:
        raise DomainError("LG/OG ideals are given as (full_rows_through, row_lengths)") from exc
    return _shape_from_profile(family, base, rows)


# ---------------------------------------------------------------------------
# Membership, shifts, containment

def shape_membership(s: QuantumShape, b: Box) -> bool:
    family = s.family
    if not family.in_strip(b):
        raise DomainError(f"box {b} is outside the strip of {family}")
    i, j = b
    if family.kind == GRA:
        return j <= _seq_value(family, boundary_sequence(s), i)
    return j < row_start(family, i) + row_length(s, i)


def shift(s: QuantumShape, steps: int, half: bool = False) -> QuantumShape:
    """Multiply by ``q^steps``, or by ``[X^{n-1}]^steps`` when ``half`` (OG only)."""
    if not half:
        return QuantumShape(s.family, s.d + steps, s.mu)
    if s.family.kind != OG:
        raise DomainError("half-steps exist only for OG(n,2n)")
    base, tail = row_profile(s)
    return _shape_from_profile(s.family, base + steps, tail)


def translate(s: QuantumShape, t: int) -> QuantumShape:
    """Translate the ideal by ``(t, t)``."""
    if s.family.kind == OG:
        return shift(s, t, half=True)
    return shift(s, t)


def _row_range(*shapes: QuantumShape) -> range:
    lo = min(row_profile(s)[0] for s in shapes) + 1
    hi = max(row_profile(s)[0] + len(s.mu) for s in shapes)
    return range(lo, hi + 1)


def contains(nu: QuantumShape, lam: QuantumShape) -> bool:
    """True iff the ideal of ``lam`` is contained in the ideal of ``nu``."""
    if nu.family != lam.family:
        raise DomainError("shapes belong to different families")
    if nu.family.kind == GRA:
        return all(a >= b for a, b in zip(boundary_sequence(nu), boundary_sequence(lam)))
    return all(row_length(nu, i) >= row_length(lam, i) for i in _row_range(nu, lam))


def ideal_union(a: QuantumShape, b: QuantumShape) -> QuantumShape:
    if a.family.kind == GRA:
        seq = tuple(map(max, boundary_sequence(a), boundary_sequence(b)))
        return _shape_from_sequence(a.family, seq)
    rows = _row_range(a, b)
    return _shape_from_profile(a.family, rows.start - 1,
                               [max(row_length(a, i), row_length(b, i)) for i in rows])


def ideal_intersection(a: QuantumShape, b: QuantumShape) -> QuantumShape:
    if a.family.kind == GRA:
        seq = tuple(map(min, boundary_sequence(a), boundary_sequence(b)))
        return _shape_from_sequence(a.family, seq)
    rows = _row_range(a, b)
    return _shape_from_profile(a.family, rows.start - 1,
                               [min(row_length(a, i), row_length(b, i)) for i in rows])


def ideal_boxes(s: QuantumShape, rows: range) -> frozenset[Box]:
    """Boxes of the ideal lying in the given rows (LG/OG)."""
    out = set()
    for i in rows:
        start = row_start(s.family, i)
        out.update((i, j) for j in range(start, start + row_length(s, i)))
    return frozenset(out)


def lambda_plus(s: QuantumShape) -> QuantumShape:
    """Smallest LG shape containing ``s`` with one more NE-diagonal box."""
    if s.family.kind != LG:
        raise DomainError("lambda_plus is defined for LG(n,2n) only")
    return _shape_from_profile(s.family, s.d + 1, s.mu[1:])


# ---------------------------------------------------------------------------
# Skew shapes

@dataclass(frozen=True)
class SkewShape:
    """A finite set of boxes ``nu \\ lam``; GrA boxes use rows ``1..m``."""

    family: Family
    boxes: frozenset

    def __post_init__(self) -> None:
        object.__setattr__(self, "boxes", frozenset(self.family.reduce(b) for b in self.boxes))

    @classmethod
    def from_boxes(cls, family: Family, boxes: Iterable[Box]) -> "SkewShape":
        """Build and validate a skew shape from explicit boxes (LG/OG)."""
        boxes = frozenset((int(i), int(j)) for i, j in boxes)
        for b in boxes:
            if not family.in_strip(b):
                raise DomainError(f"box {b} is outside the strip of {family}")
        if family.kind != GRA and not is_convex(family, boxes):
            raise DomainError("boxes do not form a skew shape")
        return cls(family, boxes)

    def __len__(self) -> int:
        return len(self.boxes)

    def __iter__(self) -> Iterator[Box]:
        return iter(sorted(self.boxes))

    def __contains__(self, b: object) -> bool:
        return b in self.boxes

    def __bool__(self) -> bool:
        return bool(self.boxes)

    def with_boxes(self, boxes: Iterable[Box]) -> "SkewShape":
        return SkewShape(self.family, frozenset(boxes))

    @cached_property
    def normalized(self) -> frozenset:
        """Box set translated along the diagonal so that the top row is 0."""
        if not self.boxes or self.family.kind == GRA:
            return self.boxes
        t = min(i for i, _ in self.boxes)
        return frozenset((i - t, j - t) for i, j in self.boxes)


def is_convex(family: Family, boxes: frozenset) -> bool:
    for a in boxes:
        for c in boxes:
            if a[0] <= c[0] and a[1] <= c[1] and a != c:
                for i in range(a[0], c[0] + 1):
                    for j in range(a[1], c[1] + 1):
                        if family.in_strip((i, j)) and (i, j) not in boxes:
                            return False
    return True


def skew(nu: QuantumShape, lam: QuantumShape) -> SkewShape:
    """The skew shape ``nu / lam``; raises OrderError unless ``lam`` is contained in ``nu``."""
    if not contains(nu, lam):
        raise OrderError(f"{format_shape(lam)} is not contained in {format_shape(nu)}")
    family = nu.family
    boxes = set()
    if family.kind == GRA:
        a, b = boundary_sequence(lam), boundary_sequence(nu)
        for i in range(family.m):
            boxes.update((i + 1, j) for j in range(a[i] + 1, b[i] + 1))
    else:
        for i in _row_range(nu, lam):
            start = row_start(family, i)
            boxes.update((i, j) for j in range(start + row_length(lam, i), start + row_length(nu, i)))
    return SkewShape(family, frozenset(boxes))


# ---------------------------------------------------------------------------
# Raw statistics on box sets (LG/OG strip coordinates)

def neighbors(family: Family, b: Box) -> list[Box]:
    i, j = b
    return [family.reduce(c) for c in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1))]


def components(family: Family, boxes: frozenset) -> list[frozenset]:
    """Edge-connected components, ordered by their NE-most box."""
    seen: set = set()
    out = []
    for b in sorted(boxes):
        if b in seen:
            continue
        comp = {b}
        stack = [b]
        while stack:
            for c in neighbors(family, stack.pop()):
                if c in boxes and c not in comp:
                    comp.add(c)
                    stack.append(c)
        seen |= comp
        out.append(frozenset(comp))
    return out


def is_rim_boxes(boxes: frozenset) -> bool:
    """No box strictly south and strictly east of another."""
    for (i, j) in boxes:
        for (a, b) in boxes:
            if a > i and b > j:
                return False
    return True


def _is_rim_cylinder(family: Family, boxes: frozenset) -> bool:
    m, nm = family.m, family.n - family.m
    for (i, j) in boxes:
        for (a, b) in boxes:
            for k in range(-2, 3):
                if a + k * m > i and b - k * nm > j:
                    return False
    return True


def rim_size(family: Family, boxes: frozenset) -> int:
    """Size of a maximal rim in a skew shape: the number of occupied diagonals."""
    family._require_strip()
    return len({j - i for i, j in boxes})


def ne_box(boxes: frozenset) -> Box:
    """The north-east box: rightmost box of the top row."""
    if not boxes:
        raise DomainError("empty skew shape has no north-east box")
    top = min(i for i, _ in boxes)
    return (top, max(j for i, j in boxes if i == top))


def meets_sw(family: Family, boxes: Iterable[Box]) -> bool:
    sw = family.sw_offset
    return any(j - i == sw for i, j in boxes)


def ne_boxes(family: Family, boxes: Iterable[Box]) -> list[Box]:
    ne = family.ne_offset
    return sorted(b for b in boxes if b[1] - b[0] == ne)


def count_n(family: Family, boxes: frozenset) -> int:
    """Components disjoint from both diagonals."""
    sw, ne = family.sw_offset, family.ne_offset
    return sum(1 for c in components(family, boxes)
               if all(j - i not in (sw, ne) for i, j in c))


def count_n_prime(family: Family, boxes: frozenset) -> int:
    """Components disjoint from the SW diagonal."""
    sw = family.sw_offset
    return sum(1 for c in components(family, boxes) if all(j - i != sw for i, j in c))


def count_n_prime_q(family: Family, boxes: frozenset) -> int:
    """Components disjoint from the SW diagonal that do not contain the NE box."""
    if not boxes:
        return 0
    sw, q = family.sw_offset, ne_box(boxes)
    return sum(1 for c in components(family, boxes)
               if q not in c and all(j - i != sw for i, j in c))


def se_corners(boxes: frozenset) -> frozenset:
    """Maximal boxes: nothing immediately below or to the right."""
    return frozenset((i, j) for i, j in boxes
                     if (i + 1, j) not in boxes and (i, j + 1) not in boxes)


def theta_prime_boxes(boxes: frozenset) -> frozenset:
    return boxes - se_corners(boxes)


def theta_prime_q_boxes(boxes: frozenset) -> frozenset:
    return theta_prime_boxes(boxes) | {ne_box(boxes)}


def theta_circ_boxes(family: Family, boxes: frozenset) -> frozenset:
    ne = family.ne_offset
    return boxes - {b for b in se_corners(boxes) if b[1] - b[0] != ne}


def theta_minus_boxes(family: Family, boxes: frozenset) -> frozenset:
    diag = ne_boxes(family, boxes)
    if not diag:
        return boxes
    top = max(diag)
    row = top[0]
    gone = {top} | {(i, j) for i, j in boxes if i == row and (i + 1, j) not in boxes}
    return boxes - gone


class Arm(NamedTuple):
    psi: frozenset
    theta_hat: frozenset
    arm_is_row: bool
    arm_is_column: bool
    connected: bool


def ne_arm_boxes(boxes: frozenset) -> Arm:
    """North-east arm: the largest line cut out of the shape by a square whose upper-right box is the NE box."""
    qi, qj = ne_box(boxes)
    reach = max(max(i - qi, qj - j) for i, j in boxes) + 1
    psi = frozenset([(qi, qj)])
    for s in range(2, reach + 1):
        inter = frozenset((i, j) for i, j in boxes if qi <= i < qi + s and qj - s < j <= qj)
        if len({i for i, _ in inter}) > 1 and len({j for _, j in inter}) > 1:
            break
        psi = inter
    hat = boxes - psi
    connected = any(c in hat for (i, j) in psi
                    for c in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)))
    return Arm(psi, hat, (qi + 1, qj) not in boxes, (qi, qj - 1) not in boxes, connected)


# ---------------------------------------------------------------------------
# Public record-valued operations on SkewShape

class SkewStats(NamedTuple):
    is_rim: bool
    components: int
    R: int | None
    N: int | None
    N_prime: int | None
    N_prime_q: int | None
    r_rows: int
    is_horizontal_strip: bool


def is_horizontal_strip(theta: SkewShape) -> bool:
    """At most one box in each column (GrA: cylinder columns, i.e. column classes mod n-m)."""
    family = theta.family
    if family.kind == GRA:
        cols = [j % (family.n - family.m) for _, j in theta.boxes]
    else:
        cols = [j for _, j in theta.boxes]
    return len(cols) == len(set(cols))


def skew_stats(theta: SkewShape) -> SkewStats:
    family, boxes = theta.family, theta.boxes
    comps = len(components(family, boxes))
    rows = len({i for i, _ in boxes})
    if family.kind == GRA:
        return SkewStats(_is_rim_cylinder(family, boxes), comps, None, None, None, None,
                         rows, is_horizontal_strip(theta))
    return SkewStats(
        is_rim_boxes(boxes), comps, rim_size(family, boxes), count_n(family, boxes),
        count_n_prime(family, boxes), count_n_prime_q(family, boxes),
        rows, is_horizontal_strip(theta))


class DerivedSubshapes(NamedTuple):
    theta_prime: SkewShape
    theta_prime_q: SkewShape
    theta_circ: SkewShape
    theta_minus: SkewShape


def derived_subshapes(theta: SkewShape) -> DerivedSubshapes:
    family, boxes = theta.family, theta.boxes
    family._require_strip()
    if not boxes:
        raise DomainError("theta'_q is undefined for the empty skew shape")
    return DerivedSubshapes(
        theta.with_boxes(theta_prime_boxes(boxes)),
        theta.with_boxes(theta_prime_q_boxes(boxes)),
        theta.with_boxes(theta_circ_boxes(family, boxes)),
        theta.with_boxes(theta_minus_boxes(family, boxes)))


class NEArm(NamedTuple):
    psi: SkewShape
    theta_hat: SkewShape
    arm_is_row: bool
    arm_is_column: bool
    connected: bool


def ne_arm(theta: SkewShape) -> NEArm:
    if not theta.boxes:
        raise DomainError("the empty skew shape has no north-east arm")
    arm = ne_arm_boxes(theta.boxes)
    return NEArm(theta.with_boxes(arm.psi), theta.with_boxes(arm.theta_hat),
                 arm.arm_is_row, arm.arm_is_column, arm.connected)


# ---------------------------------------------------------------------------
# Enumeration of shapes above a given one

def _profiles_between(family: Family, base: int, lo: Sequence[int], hi: Sequence[int]) -> Iterator[list[int]]:
    w = family.width

    def rec(k: int, prev: int, acc: list[int]) -> Iterator[list[int]]:
        if k == len(lo):
            yield list(acc)
            return
        for length in range(lo[k], hi[k] + 1):
            if length == 0 or length < prev or (length == w and prev == w):
                acc.append(length)
                yield from rec(k + 1, length, acc)
                acc.pop()

    yield from rec(0, w, [])


def shapes_between(lam: QuantumShape, top: QuantumShape) -> list[QuantumShape]:
    """All shapes ``nu`` with ``lam <= nu <= top``, sorted by (d, mu)."""
    if not contains(top, lam):
        return []
    family = lam.family
    if family.kind == GRA:
        a, b = boundary_sequence(lam), boundary_sequence(top)
        out = set()
        for seq in product(*(range(x, y + 1) for x, y in zip(a, b))):
            if all(u >= v for u, v in zip(seq, seq[1:])) and seq[0] - seq[-1] <= family.n - family.m:
                out.add(_shape_from_sequence(family, seq))
    else:
        rows = _row_range(lam, top)
        lo = [row_length(lam, i) for i in rows]
        hi = [row_length(top, i) for i in rows]
        out = {_shape_from_profile(family, rows.start - 1, prof)
               for prof in _profiles_between(family, rows.start - 1, lo, hi)}
    return sorted(out, key=QuantumShape.sort_key)


def one_step_up(lam: QuantumShape) -> QuantumShape:
    """``lam`` translated by one diagonal step (GrA: one row down, i.e. sigma)."""
    if lam.family.kind == GRA:
        seq = boundary_sequence(lam)
        nm = lam.family.n - lam.family.m
        return _shape_from_sequence(lam.family, (seq[-1] + nm,) + seq[:-1])
    return translate(lam, 1)


def candidates_above(lam: QuantumShape) -> list[QuantumShape]:
    """Every ``nu`` containing ``lam`` for which ``nu / lam`` can be a rim (or horizontal strip)."""
    return shapes_between(lam, one_step_up(lam))


# ---------------------------------------------------------------------------
# Textual shape literals

_LITERAL = re.compile(r"^\s*(?P<parts>[0-9,\s]*|∅)\s*(?:@(?P<kind>[dh])(?P<k>-?\d+))?\s*$")


def parse_shape(family: Family, text: str) -> QuantumShape:
    """Parse ``"7,5,4,2@d1"``; OG also accepts ``"4,2@h3"`` for ``[X^{n-1}]^3``."""
    match = _LITERAL.match(text)
    if not match:
        raise ParseError(f"cannot parse shape literal {text!r}")
    raw = match.group("parts").replace("∅", "").strip()
    parts = [int(x) for x in raw.split(",") if x.strip()] if raw else []
    shape = QuantumShape(family, 0, tuple(parts))
    if match.group("kind"):
        k = int(match.group("k"))
        if match.group("kind") == "h":
            if family.kind != OG:
                raise ParseError("the @h suffix is only meaningful for OG")
            shape = shift(shape, k, half=True)
        else:
            shape = shift(shape, k)
    return shape


def format_shape(s: QuantumShape) -> str:
    parts = ",".join(map(str, s.mu)) if s.mu else "0"
    return f"{parts}@d{s.d}"
