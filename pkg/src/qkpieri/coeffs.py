"""Scalar coefficients of the Pieri rules, each computed by every available route.

All functions take a :class:`SkewShape` and an integer ``p`` (any sign).  The
strip families (LG, OG) use strip coordinates; only the SW/NE diagonal offsets
of the family matter, so results are memoized on the diagonally normalized box
set.

Routes:

* ``C``: ``closed`` (alternating sum over corners), ``recursion`` (NE-arm
  recursion), ``tableau`` (signed KLG count).
* ``H_q``: ``closed`` and ``recursion``.
* ``N_q``: ``recursion`` and ``tableau`` (signed QKLG count).
* ``H`` and ``N-hat``: closed sums only; ``H`` also has a ``dispatch`` route
  through ``C`` and ``H_q``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable

from .errors import DomainError
from .strip_poset import (
    GRA, Family, SkewShape, count_n, count_n_prime, count_n_prime_q,
    is_horizontal_strip, is_rim_boxes, meets_sw, ne_arm_boxes, ne_box, ne_boxes,
    rim_size, theta_circ_boxes, theta_minus_boxes, theta_prime_boxes,
)
from . import tableaux

CLOSED = "closed"
RECURSION = "recursion"
TABLEAU = "tableau"
DISPATCH = "dispatch"

ROUTES = {
    "C": (CLOSED, RECURSION, TABLEAU),
    "H": (CLOSED, DISPATCH),
    "Hq": (CLOSED, RECURSION),
    "Nq": (RECURSION, TABLEAU),
    "N": (RECURSION, TABLEAU, CLOSED),
}


def h(a: int, b: int) -> int:
    """Euler characteristic of a complete intersection of ``a`` quadrics of dimension ``b``."""
    if a < 0:
        raise DomainError("h(a, b) requires a >= 0")
    if b < 0:
        return 0
    if b >= a:
        return 1
    return sum((-1) ** j * 2 ** (a - j) * comb(a, j) for j in range(b + 1))


def _delta(x: int, y: int) -> int:
    return 1 if x == y else 0


def _check_route(name: str, route: str) -> None:
    if route not in ROUTES[name]:
        raise DomainError(f"route {route!r} is not available for {name}; use one of {ROUTES[name]}")


def _strip(theta: SkewShape) -> tuple[Family, frozenset]:
    if theta.family.kind == GRA:
        raise DomainError("this coefficient is defined for the LG/OG strips only")
    return theta.family, theta.normalized


def _normal(boxes: Iterable) -> frozenset:
    boxes = frozenset(boxes)
    if not boxes:
        return boxes
    t = min(i for i, _ in boxes)
    return frozenset((i - t, j - t) for i, j in boxes)


def _is_row(boxes: frozenset) -> bool:
    return len({i for i, _ in boxes}) == 1


def _is_column(boxes: frozenset) -> bool:
    return len({j for _, j in boxes}) == 1


def _subsets(items: Iterable) -> Iterable[frozenset]:
    items = sorted(items)
    for k in range(len(items) + 1):
        for sub in combinations(items, k):
            yield frozenset(sub)


def lower_ideals_between(lo: frozenset, hi: frozenset) -> Iterable[frozenset]:
    """Lower order ideals ``phi`` of ``hi`` with ``lo`` contained in ``phi``."""
    for extra in _subsets(hi - lo):
        phi = lo | extra
        if all(c not in hi or c in phi
               for (i, j) in phi for c in ((i - 1, j), (i, j - 1))):
            yield phi


# ---------------------------------------------------------------------------
# A: Grassmannians of type A

def coeff_A(theta: SkewShape, p: int) -> int:
    if theta.family.kind != GRA:
        raise DomainError("coefficient A is defined for Grassmannians of type A")
    if not is_horizontal_strip(theta):
        return 0
    size = len(theta.boxes)
    r = len({i for i, _ in theta.boxes})
    k = size - p
    if size == 0:
        return 1 if p == 0 else 0
    if k < 0 or k > r - 1:
        return 0
    return (-1) ** k * comb(r - 1, k)


# ---------------------------------------------------------------------------
# B: maximal orthogonal Grassmannians

def coeff_B(theta: SkewShape, p: int) -> int:
    if theta.family.kind == GRA:
        raise DomainError("coefficient B is defined for strip families")
    if not theta.boxes:
        return 1 if p == 0 else 0
    if p < 0 or not is_rim_boxes(theta.boxes):
        return 0
    return tableaux.signed_count(tableaux.KOG, theta, p)


# ---------------------------------------------------------------------------
# C

@lru_cache(maxsize=None)
def _c_closed(family: Family, boxes: frozenset, p: int) -> int:
    base = theta_prime_boxes(boxes)
    total = 0
    for extra in _subsets(boxes - base):
        phi = base | extra
        sign = -1 if (len(boxes) - len(phi)) % 2 else 1
        total += sign * h(count_n_prime(family, phi), (rim_size(family, phi) if phi else 0) - p)
    return total


@lru_cache(maxsize=None)
def _c_rec(family: Family, boxes: frozenset, p: int) -> int:
    if not boxes:
        return 1 if p <= 0 else 0
    if not is_rim_boxes(boxes):
        return 0
    size = len(boxes)
    arm = ne_arm_boxes(boxes)
    a = len(arm.psi)
    if not arm.theta_hat:
        if meets_sw(family, boxes):
            if _is_row(boxes):
                return _delta(p, size)
            return _delta(p, size) - _delta(p, size - 1)
        return 2 * _delta(p, size) - (1 if p >= 1 else 0) * _delta(p, size - 1)
    hat = _normal(arm.theta_hat)

    def c(k: int) -> int:
        return _c_rec(family, hat, k)

    if arm.connected:
        return c(p - a) - c(p - a + 1)
    if a == 1:
        return 2 * c(p - 1) - 2 * c(p)
    return 2 * c(p - a) - 3 * c(p - a + 1) + c(p - a + 2)


def _signed_tableau_count(kind: str, theta: SkewShape, p: int, seeds=None) -> int:
    if not theta.boxes:
        return 1 if p <= 0 else 0
    if p <= 0:
        return 0
    if kind == tableaux.QKLG:
        count = len(tableaux.enumerate_tableaux(kind, theta, p, seeds=seeds))
    else:
        count = tableaux.count_tableaux(kind, theta, p)
    return (-1) ** ((len(theta.boxes) - p) % 2) * count


def coeff_C(theta: SkewShape, p: int, route: str = RECURSION) -> int:
    _check_route("C", route)
    family, boxes = _strip(theta)
    if route == CLOSED:
        return _c_closed(family, boxes, p)
    if route == RECURSION:
        return _c_rec(family, boxes, p)
    return _signed_tableau_count(tableaux.KLG, theta, p)


# ---------------------------------------------------------------------------
# H_q

@lru_cache(maxsize=None)
def _hq_closed(family: Family, boxes: frozenset, p: int) -> int:
    q = ne_box(boxes)
    base = theta_prime_boxes(boxes) | {q}
    total = 0
    for extra in _subsets(boxes - base):
        phi = base | extra
        sign = -1 if (len(boxes) - len(phi)) % 2 else 1
        total += sign * h(count_n_prime_q(family, phi), rim_size(family, phi) - p)
    return total


@lru_cache(maxsize=None)
def _hq_rec(family: Family, boxes: frozenset, p: int) -> int:
    if not is_rim_boxes(boxes):
        return 0
    size = len(boxes)
    arm = ne_arm_boxes(boxes)
    a = len(arm.psi)
    if not arm.theta_hat:
        if _is_row(boxes):
            return 1 if p <= size else 0
        return _delta(p, size)
    hat = _normal(arm.theta_hat)
    if arm.connected:
        if arm.arm_is_row or p >= size:
            return _hq_rec(family, hat, p - a)
        return (_c_rec(family, hat, p - a) - _hq_rec(family, hat, p - a)
                + _hq_rec(family, hat, p - a + 1))
    if arm.arm_is_row:
        return _c_rec(family, hat, p - a)
    return _c_rec(family, hat, p - a) - _c_rec(family, hat, p - a + 1)


def coeff_Hq(theta: SkewShape, p: int, route: str = RECURSION) -> int:
    _check_route("Hq", route)
    family, boxes = _strip(theta)
    if not boxes:
        raise DomainError("H_q is defined for non-empty skew shapes")
    if route == CLOSED:
        return _hq_closed(family, boxes, p)
    return _hq_rec(family, boxes, p)


# ---------------------------------------------------------------------------
# H (undeformed product)

@lru_cache(maxsize=None)
def _h_closed(family: Family, boxes: frozenset, p: int) -> int:
    base = theta_circ_boxes(family, boxes)
    total = 0
    for extra in _subsets(boxes - base):
        phi = base | extra
        sign = -1 if (len(boxes) - len(phi)) % 2 else 1
        total += sign * h(count_n(family, phi), (rim_size(family, phi) if phi else 0) - p)
    return total


def coeff_H(theta: SkewShape, p: int, route: str = CLOSED) -> int:
    """Coefficient of the undeformed product.  ``dispatch`` needs at most one NE-diagonal box."""
    _check_route("H", route)
    family, boxes = _strip(theta)
    if route == CLOSED:
        return _h_closed(family, boxes, p)
    diag = ne_boxes(family, boxes)
    if not diag:
        return _c_rec(family, boxes, p)
    if len(diag) == 1:
        return _hq_rec(family, boxes, p)
    raise DomainError("the dispatch route needs at most one box on the NE diagonal")


# ---------------------------------------------------------------------------
# N_q, N-hat and N

@lru_cache(maxsize=None)
def _nq_rec(family: Family, boxes: frozenset, p: int) -> int:
    if not is_rim_boxes(boxes):
        return 0
    size = len(boxes)
    arm = ne_arm_boxes(boxes)
    a = len(arm.psi)
    if not arm.theta_hat:
        if meets_sw(family, boxes) or _is_column(boxes):
            return _delta(p, size)
        return _delta(p, size) - _delta(p, size - 1)
    hat = _normal(arm.theta_hat)

    def c(k: int) -> int:
        return _c_rec(family, hat, k)

    if arm.connected:
        if arm.arm_is_column:
            return _nq_rec(family, hat, p - a)
        return _nq_rec(family, hat, p - a) - c(p - a + 1)
    if arm.arm_is_column:
        return c(p - a) - c(p - a + 1)
    return c(p - a) - 2 * c(p - a + 1) + c(p - a + 2)


def coeff_Nq(theta: SkewShape, p: int, route: str = RECURSION) -> int:
    """``N_q``; the tableau route treats the NE box as the seed of the quantum boxes."""
    _check_route("Nq", route)
    family, boxes = _strip(theta)
    if not boxes:
        raise DomainError("N_q is defined for non-empty skew shapes")
    if route == RECURSION:
        return _nq_rec(family, boxes, p)
    if not is_rim_boxes(boxes):
        return 0
    return _signed_tableau_count(tableaux.QKLG, theta, p, seeds={ne_box(theta.boxes)})


@lru_cache(maxsize=None)
def _nhat(family: Family, boxes: frozenset, p: int) -> int:
    total = _h_closed(family, boxes, p)
    for phi in lower_ideals_between(theta_minus_boxes(family, boxes), boxes):
        if phi != boxes:
            total -= _h_closed(family, _normal(phi), p)
    return total


def coeff_Nhat(theta: SkewShape, p: int) -> int:
    family, boxes = _strip(theta)
    return _nhat(family, boxes, p)


def coeff_N(theta: SkewShape, p: int, route: str = RECURSION) -> int:
    """Coefficient of the quantum Pieri rule for LG.

    ``C`` off the NE diagonal, 0 with two or more NE-diagonal boxes, otherwise the
    signed QKLG count (``tableau``), its recursion, or the ``closed`` H-sum.
    """
    _check_route("N", route)
    family, boxes = _strip(theta)
    if route == CLOSED:
        return _nhat(family, boxes, p)
    diag = ne_boxes(family, boxes)
    if len(diag) >= 2:
        return 0
    if not diag:
        if route == TABLEAU:
            return _signed_tableau_count(tableaux.KLG, theta, p)
        return _c_rec(family, boxes, p)
    if route == TABLEAU:
        if not is_rim_boxes(boxes):
            return 0
        return _signed_tableau_count(tableaux.QKLG, theta, p)
    return _nq_rec(family, boxes, p)


def clear_caches() -> None:
    for fn in (_c_closed, _c_rec, _hq_closed, _hq_rec, _h_closed, _nq_rec, _nhat):
        fn.cache_clear()


__all__ = [
    "h", "coeff_A", "coeff_B", "coeff_C", "coeff_H", "coeff_Hq", "coeff_Nq",
    "coeff_Nhat", "coeff_N", "ROUTES", "CLOSED", "RECURSION", "TABLEAU", "DISPATCH",
    "clear_caches",
]
