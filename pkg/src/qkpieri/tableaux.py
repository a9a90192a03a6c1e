"""KOG-, KLG- and QKLG-tableaux on rims.

Labels are pairs ``(value, primed)`` ordered ``1' < 1 < 2' < 2 < ...``; internally
``v'`` is encoded as ``2v - 1`` and ``v`` as ``2v``.  A box ``c`` is south-west
of ``b`` when ``c != b``, ``c`` is weakly below ``b`` and weakly left of ``b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import DomainError
from .strip_poset import Box, SkewShape, is_rim_boxes

KOG = "KOG"
KLG = "KLG"
QKLG = "QKLG"
KINDS = (KOG, KLG, QKLG)

Label = tuple[int, bool]


def encode(label: Label) -> int:
    value, primed = label
    return 2 * value - 1 if primed else 2 * value


def decode(code: int) -> Label:
    return ((code + 1) // 2, code % 2 == 1)


def label_str(label: Label) -> str:
    return f"{label[0]}'" if label[1] else str(label[0])


@dataclass(frozen=True)
class Tableau:
    kind: str
    shape: SkewShape
    entries: tuple[tuple[Box, Label], ...]

    @classmethod
    def from_dict(cls, kind: str, shape: SkewShape, entries: dict) -> "Tableau":
        return cls(kind, shape, tuple(sorted(entries.items())))

    @property
    def labels(self) -> dict[Box, Label]:
        return dict(self.entries)

    @property
    def content(self) -> frozenset[int]:
        return frozenset(v for _, (v, _) in self.entries)

    def rows(self) -> list[list[str]]:
        """NW-justified grid; ``"."`` marks positions outside the shape."""
        if not self.entries:
            return []
        labels = self.labels
        i0 = min(i for i, _ in labels)
        i1 = max(i for i, _ in labels)
        j0 = min(j for _, j in labels)
        out = []
        for i in range(i0, i1 + 1):
            last = max(j for a, j in labels if a == i)
            out.append([label_str(labels[(i, j)]) if (i, j) in labels else "."
                        for j in range(j0, last + 1)])
        return out

    def serialize(self) -> str:
        grid = self.rows()
        width = max((len(t) for row in grid for t in row), default=1)
        return "\n".join(" ".join(t.rjust(width) for t in row).rstrip() for row in grid)


def tableau_from_rows(kind: str, shape: SkewShape, rows: list[list[str]]) -> Tableau:
    """Inverse of :meth:`Tableau.rows`: place tokens on the shape's boxes row by row."""
    boxes = sorted(shape.boxes)
    by_row: dict[int, list[Box]] = {}
    for b in boxes:
        by_row.setdefault(b[0], []).append(b)
    keys = sorted(by_row)
    filled = [[t for t in row if t != "."] for row in rows]
    if len(filled) != len(keys) or any(len(r) != len(by_row[k]) for r, k in zip(filled, keys)):
        raise DomainError("token rows do not match the shape")
    entries = {}
    for k, row in zip(keys, filled):
        for b, tok in zip(by_row[k], row):
            tok = tok.strip()
            primed = tok.endswith("'")
            entries[b] = (int(tok.rstrip("'")), primed)
    return Tableau.from_dict(kind, shape, entries)


# ---------------------------------------------------------------------------
# Validation

class Validation(NamedTuple):
    ok: bool
    clause: str | None


def _south_west(boxes, b: Box) -> list[Box]:
    i, j = b
    return [c for c in boxes if c != b and c[0] >= i and c[1] <= j]


def quantum_boxes(shape: SkewShape, labels: dict[Box, Label], seeds=None) -> set[Box]:
    """Least fixed point: the seeds (default NE-diagonal boxes), plus neighbours of
    unrepeated quantum boxes."""
    counts: dict[int, int] = {}
    for v, _ in labels.values():
        counts[v] = counts.get(v, 0) + 1
    if seeds is None:
        ne = shape.family.ne_offset
        quantum = {b for b in labels if b[1] - b[0] == ne}
    else:
        quantum = set(seeds) & set(labels)
    stack = list(quantum)
    while stack:
        b = stack.pop()
        if counts[labels[b][0]] != 1:
            continue
        i, j = b
        for c in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
            if c in labels and c not in quantum:
                quantum.add(c)
                stack.append(c)
    return quantum


def is_terminal(shape: SkewShape, b: Box) -> bool:
    i, j = b
    return (j - i != shape.family.sw_offset
            and (i, j - 1) not in shape.boxes and (i + 1, j) not in shape.boxes)


def validate(t: Tableau, seeds=None) -> Validation:
    """Check the defining conditions; report the first violated clause.

    ``seeds`` overrides the initial quantum boxes of a QKLG-tableau.
    """
    shape, labels = t.shape, t.labels
    if not is_rim_boxes(shape.boxes):
        raise DomainError("tableaux are defined on rims only")
    if set(labels) != set(shape.boxes):
        return Validation(False, "shape")
    codes = {b: encode(lab) for b, lab in labels.items()}
    if any(v < 1 for v, _ in labels.values()):
        return Validation(False, "labels")
    if t.kind == KOG and any(p for _, p in labels.values()):
        return Validation(False, "unprimed")
    for (i, j), c in codes.items():
        if (i, j - 1) in codes and codes[(i, j - 1)] >= c:
            return Validation(False, "i")
    for (i, j), c in codes.items():
        if (i + 1, j) in codes and codes[(i + 1, j)] <= c:
            return Validation(False, "ii")
    if t.kind == KOG:
        for b, c in codes.items():
            sw = [codes[x] for x in _south_west(codes, b)]
            if sw and not (c <= min(sw) or c >= max(sw)):
                return Validation(False, "iii")
        return Validation(True, None)
    for b, c in codes.items():
        sw = [codes[x] for x in _south_west(codes, b)]
        if c % 2 == 0 and sw and c < max(sw):
            return Validation(False, "iii")
    for b, c in codes.items():
        sw = [codes[x] for x in _south_west(codes, b)]
        if c % 2 == 1 and sw and c > min(sw):
            return Validation(False, "iv")
    sw_diag = shape.family.sw_offset
    if any(c % 2 == 1 for (i, j), c in codes.items() if j - i == sw_diag):
        return Validation(False, "v")
    if t.kind == KLG:
        return Validation(True, None)
    counts: dict[int, int] = {}
    for v, _ in labels.values():
        counts[v] = counts.get(v, 0) + 1
    quantum = quantum_boxes(shape, labels, seeds)
    for b in sorted(quantum):
        v, primed = labels[b]
        if primed and not is_terminal(shape, b) and counts[v] != 1:
            return Validation(False, "vi")
    for b in sorted(quantum):
        if is_terminal(shape, b) and not labels[b][1]:
            return Validation(False, "vii")
    return Validation(True, None)


# ---------------------------------------------------------------------------
# Enumeration

def _fill_plan(shape: SkewShape):
    order = sorted(shape.boxes, key=lambda b: (-b[0], b[1]))
    index = {b: k for k, b in enumerate(order)}
    plan = []
    for k, (i, j) in enumerate(order):
        sw = [index[c] for c in _south_west(shape.boxes, (i, j))]
        assert all(x < k for x in sw)
        left = index.get((i, j - 1))
        below = index.get((i + 1, j))
        plan.append((sw, left, below))
    return order, plan


def _fillings(kind: str, shape: SkewShape, p: int) -> Iterator[list[int]]:
    """Codes of all fillings satisfying the local conditions with content {1..p}."""
    size = len(shape.boxes)
    if p < 0 or p > size or (p == 0 and size > 0):
        return
    order, plan = _fill_plan(shape)
    family = shape.family
    on_sw = [False] * size
    if kind != KOG:
        sw_diag = family.sw_offset
        on_sw = [j - i == sw_diag for i, j in order]
    codes = [0] * size
    full = (1 << p) - 1
    top = 2 * p

    def rec(k: int, used: int) -> Iterator[list[int]]:
        if k == size:
            if used == full:
                yield list(codes)
            return
        missing = p - bin(used).count("1")
        if missing > size - k:
            return
        sw, left, below = plan[k]
        lo = codes[left] + 1 if left is not None else 1
        hi = codes[below] - 1 if below is not None else top
        sw_codes = [codes[x] for x in sw]
        mn = min(sw_codes) if sw_codes else None
        mx = max(sw_codes) if sw_codes else None
        for c in range(lo, hi + 1):
            primed = c % 2 == 1
            if kind == KOG:
                if primed:
                    continue
                if sw_codes and not (c <= mn or c >= mx):
                    continue
            else:
                if primed:
                    if on_sw[k] or (sw_codes and c > mn):
                        continue
                elif sw_codes and c < mx:
                    continue
            codes[k] = c
            yield from rec(k + 1, used | (1 << ((c + 1) // 2 - 1)))
        codes[k] = 0

    yield from rec(0, 0)


def enumerate_tableaux(kind: str, theta: SkewShape, p: int, seeds=None) -> list[Tableau]:
    """All tableaux of the given kind on ``theta`` with content exactly ``{1..p}``."""
    if kind not in KINDS:
        raise DomainError(f"unknown tableau kind {kind!r}")
    if not is_rim_boxes(theta.boxes):
        return []
    if not theta.boxes:
        return [Tableau(kind, theta, ())] if p == 0 else []
    order, _ = _fill_plan(theta)
    out = []
    for codes in _fillings(KLG if kind == QKLG else kind, theta, p):
        t = Tableau.from_dict(kind, theta, {b: decode(c) for b, c in zip(order, codes)})
        if kind == QKLG and not validate(t, seeds).ok:
            continue
        out.append(t)
    out.sort(key=lambda t: [encode(lab) for _, lab in t.entries])
    return out


def count_tableaux(kind: str, theta: SkewShape, p: int) -> int:
    if kind == QKLG:
        return len(enumerate_tableaux(kind, theta, p))
    if not is_rim_boxes(theta.boxes):
        return 0
    if not theta.boxes:
        return 1 if p == 0 else 0
    return sum(1 for _ in _fillings(kind, theta, p))


def signed_count(kind: str, theta: SkewShape, p: int) -> int:
    return (-1) ** ((len(theta.boxes) - p) % 2) * count_tableaux(kind, theta, p)
