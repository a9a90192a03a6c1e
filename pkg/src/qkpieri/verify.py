"""Self-checking suites: independent routes and identities that must agree.

Each suite returns a :class:`SuiteResult` with pass/fail counts and the first few
failures.  ``max_size`` bounds the family size (n for the strip families).
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import coeffs
from .coeffs import h
from .errors import DomainError
from .qk_ring import (
    QKClass, check_nonnegative_degrees, is_q_interval, pieri, pieri_class, pieri_via_undeformed,
)
from .seidel import (
    GENERATORS, SeidelElement, act_on_box, act_on_shape, seidel_degree, seidel_multiply,
)
from .strip_poset import (
    Family, QuantumShape, SkewShape, all_classical, candidates_above, contains, count_n_prime,
    count_n_prime_q, is_rim_boxes, ne_arm_boxes, parse_shape, skew,
)
from .symplectic_model import (
    SchubertSymbol, curve_nbhd_symbols, diagram, gw_pieri, richardson_dimension,
    rook_strip_subshapes, theta_stats,
)

MAX_FAILURES = 10


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    def check(self, ok: bool, label: Callable[[], str] | str) -> None:
        if ok:
            self.passed += 1
            return
        self.failed += 1
        if len(self.failures) < MAX_FAILURES:
            self.failures.append(label() if callable(label) else label)

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed > 0

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{self.name}: {status} ({self.passed} passed, {self.failed} failed)"


# ---------------------------------------------------------------------------
# Shared sweeps

def lg_skew_sweep(max_n: int = 6, max_size: int = 8, rims_only: bool = False) -> list[SkewShape]:
    """Non-empty skew shapes ``nu / lam`` (``nu`` one q-step above) in LG(n), n <= max_n, up to translation.

    Every rim of the strip appears, since a rim ``theta`` satisfies ``theta = nu / lam``
    with ``nu`` inside ``lam`` shifted by one diagonal step.
    """
    seen: set = set()
    out = []
    for n in range(1, max_n + 1):
        f = Family.lg(n)
        for lam in all_classical(f):
            for nu in candidates_above(lam):
                th = skew(nu, lam)
                if not th.boxes or len(th.boxes) > max_size:
                    continue
                if rims_only and not is_rim_boxes(th.boxes):
                    continue
                key = (n, th.normalized)
                if key in seen:
                    continue
                seen.add(key)
                out.append(th)
    return out


def _label(th: SkewShape, p: int, *vals) -> str:
    return f"{th.family} theta={sorted(th.boxes)} p={p} values={vals}"


# ---------------------------------------------------------------------------
# Suites

def suite_route_agreement(max_size: int = 6) -> SuiteResult:
    res = SuiteResult("route-agreement")
    for th in lg_skew_sweep(max_size, 8, rims_only=True):
        size = len(th.boxes)
        touches_ne = bool(coeffs.ne_boxes(th.family, th.boxes))
        for p in range(-2, size + 3):
            c = [coeffs.coeff_C(th, p, r) for r in coeffs.ROUTES["C"]]
            hq = [coeffs.coeff_Hq(th, p, r) for r in coeffs.ROUTES["Hq"]]
            nq = coeffs.coeff_Nq(th, p, coeffs.RECURSION)
            res.check(len(set(c)) == 1, lambda: _label(th, p, "C", *c))
            res.check(len(set(hq)) == 1, lambda: _label(th, p, "Hq", *hq))
            if touches_ne:
                nt = coeffs.coeff_N(th, p, coeffs.TABLEAU)
                nh = coeffs.coeff_Nhat(th, p)
                res.check(nq == nt == nh, lambda: _label(th, p, "Nq/QKLG/Nhat", nq, nt, nh))
            else:
                res.check(coeffs.coeff_H(th, p, coeffs.CLOSED) == c[0],
                          lambda: _label(th, p, "H vs C"))
    return res


def suite_recursions(max_size: int = 6) -> SuiteResult:
    res = SuiteResult("recursions")
    for a in range(0, 11):
        for b in range(-2, 13):
            res.check(h(a + 1, b) + h(a, b - 1) == 2 * h(a, b), f"h identity a={a} b={b}")
    for th in lg_skew_sweep(max_size, 8):
        f, boxes = th.family, th.boxes
        size = len(boxes)
        rim = is_rim_boxes(boxes)
        arm = ne_arm_boxes(boxes)
        C = lambda p, t=th: coeffs.coeff_C(t, p)  # noqa: E731
        Hq = lambda p, t=th: coeffs.coeff_Hq(t, p)  # noqa: E731
        Nq = lambda p, t=th: coeffs.coeff_Nq(t, p)  # noqa: E731
        # sum over proper lower ideals containing theta-hat
        odot_sum = None
        if arm.arm_is_row:
            odot_sum = lambda p: sum(  # noqa: E731
                coeffs.coeff_C(th.with_boxes(phi), p)
                for phi in coeffs.lower_ideals_between(arm.theta_hat, boxes) if phi != boxes)
        for p in range(-2, size + 3):
            diff = Hq(p) - Nq(p)
            expect = odot_sum(p) if odot_sum else 0
            res.check(diff == expect, lambda: _label(th, p, "odot", diff, expect))
            if not rim:
                continue
            if p <= 0:
                row = 1 if len({i for i, _ in boxes}) == 1 else 0
                res.check(C(p) == 0 and Nq(p) == 0 and Hq(p) == row, lambda: _label(th, p, "basic(a)"))
            if p > size:
                res.check(C(p) == Nq(p) == Hq(p) == 0, lambda: _label(th, p, "basic(c)"))
            if p < size:
                res.check(Hq(p) - Hq(p + 1) == C(p) - Nq(p), lambda: _label(th, p, "hhcn"))
                single = len(arm.psi) == 1 and not arm.connected
                if not single:
                    lhs = 2 * Nq(p) - Nq(p + 1)
                    rhs = C(p) - C(p + 1) if arm.arm_is_row else C(p)
                    res.check(lhs == rhs, lambda: _label(th, p, "nncc", lhs, rhs))
            sign = (-1) ** ((size - p) % 2)
            res.check(sign * C(p) >= 0 and sign * coeffs.coeff_N(th, p) >= 0,
                      lambda: _label(th, p, "sign"))
        if rim:
            res.check(C(size) == 2 ** count_n_prime(f, boxes), lambda: _label(th, size, "basic(b) C"))
            res.check(Nq(size) == Hq(size) == 2 ** count_n_prime_q(f, boxes),
                      lambda: _label(th, size, "basic(b) Nq"))
    return res


def golden_products() -> list[tuple[str, QKClass, QKClass]]:
    """(label, computed, expected) for the worked examples."""
    out = []
    gr = Family.gr(3, 7)
    lam = parse_shape(gr, "3,3,1")
    expected = QKClass(gr, {parse_shape(gr, "4,3,3"): 1, parse_shape(gr, "2,1@d1"): 1,
                            parse_shape(gr, "2,2@d1"): -1})
    out.append(("Gr(3,7) O^3 * O^(3,3,1)", pieri(3, lam), expected))
    og = Family.og(5)
    lam = parse_shape(og, "4,2")
    expected = QKClass(og, {parse_shape(og, "4,3,1"): 2, parse_shape(og, "4,3,2"): -1,
                            parse_shape(og, "0@d1"): 1, parse_shape(og, "1@d1"): -2,
                            parse_shape(og, "2@d1"): 1})
    out.append(("OG(5,10) O^2 * O^(4,2)", pieri(2, lam), expected))
    g4 = Family.gr(2, 4)
    s = SeidelElement.generator(g4, "sigma")
    u = parse_shape(g4, "2,1")
    out.append(("Gr(2,4) [X^(2)] * O^(2,1)", seidel_multiply(s, QKClass.basis(u)),
                QKClass.basis(parse_shape(g4, "1@d1"))))
    return out


def suite_pieri_examples(max_size: int = 6) -> SuiteResult:
    res = SuiteResult("pieri-examples")
    for label, got, want in golden_products():
        res.check(got == want, lambda: f"{label}: got {got}, expected {want}")
    lg = Family.lg(7)
    prod = pieri(6, parse_shape(lg, "7,5,4,2"))
    res.check(prod[parse_shape(lg, "7,5,3,2@d1")] == -4, "LG(7,14) coefficient of q O^(7,5,3,2)")
    g4 = Family.gr(2, 4)
    res.check(seidel_degree(SeidelElement.generator(g4, "sigma"), parse_shape(g4, "2,1")) == 1,
              "Gr(2,4) degree via codimension balance")
    return res


def _seidel_families(max_size: int) -> list[Family]:
    fams = []
    for n in range(2, max_size + 1):
        fams += [Family.gr(m, n) for m in range(1, n)]
        fams.append(Family.lg(n))
        if n >= 2:
            fams.append(Family.og(n))
    return fams


def _relations(f: Family) -> list[tuple[list, list]]:
    """Defining relations as pairs of generator words."""
    if f.kind == "GrA":
        return [([("sigma", f.n)], [("q", f.n - f.m)]), ([("tau", f.n)], [("q", f.m)]),
                ([("sigma", 1), ("tau", 1)], [("q", 1)]), ([("sigma", f.m)], [("point", 1)]),
                ([("tau", f.n - f.m)], [("point", 1)])]
    if f.kind == "OG":
        return [([("row", 2)], [("q", 1)]), ([("point", 2)], [("row", f.n)]),
                ([("point", 1), ("row", 1)], [("row", 1), ("point", 1)])]
    return [([("point", 2)], [("q", f.n)]), ([("point", 1), ("q", 1)], [("q", 1), ("point", 1)])]


def _act_word(f: Family, word: list, u: QuantumShape) -> QuantumShape:
    for name, power in reversed(word):
        g = SeidelElement.generator(f, name)
        for _ in range(power):
            u = act_on_shape(g, u)
    return u


def suite_seidel(max_size: int = 6) -> SuiteResult:
    res = SuiteResult("seidel")
    for f in _seidel_families(max_size):
        shapes = all_classical(f)
        e = SeidelElement.identity(f)
        gens = {g: SeidelElement.generator(f, g) for g in GENERATORS[f.kind]}
        for lhs, rhs in _relations(f):
            for u in shapes:
                res.check(_act_word(f, lhs, u) == _act_word(f, rhs, u),
                          f"{f} relation {lhs} = {rhs} on {u}")
            res.check(SeidelElement.from_word(f, lhs) == SeidelElement.from_word(f, rhs),
                      f"{f} normal form of {lhs} = {rhs}")
        for g, s in gens.items():
            res.check(s * s.inverse() == e, f"{f} {g} inverse")
            for u in shapes:
                img = seidel_multiply(s, QKClass.basis(u))
                res.check(len(img.terms) == 1 and list(img.terms.values()) == [1],
                          f"{f} {g} single term on {u}")
                if g != "q":
                    w = s.without_q()
                    d = seidel_degree(w, u)
                    res.check(act_on_shape(w, u).d == d, f"{f} {g} degree of {u}")
        if f.kind != "GrA":
            boxes = [(i, j) for i in range(-1, 3) for j in range(i, i + f.width + 2) if f.in_strip((i, j))]
            for s in gens.values():
                for a in boxes:
                    for b in boxes:
                        le = a[0] <= b[0] and a[1] <= b[1]
                        ia, ib = act_on_box(s, a), act_on_box(s, b)
                        res.check(le == (ia[0] <= ib[0] and ia[1] <= ib[1]),
                                  f"{f} order on {a},{b}")
    return res


def suite_gw_diagram(max_size: int = 6, samples: int = 500, seed: int = 0) -> SuiteResult:
    res = SuiteResult("gw-diagram")
    M = diagram(SchubertSymbol(6, (5, 7, 10, 12)), SchubertSymbol(6, (2, 3, 8, 9)))
    res.check(M.dimension == 8 == richardson_dimension(M.P, M.Q), "SG(4,12) dimension")
    M = diagram(SchubertSymbol(10, (2, 3, 7, 8, 11, 12, 16, 20)),
                SchubertSymbol(10, (1, 2, 4, 6, 9, 11, 16, 18)))
    res.check(M.components == ((0, 3), (3, 8), (8, 10)) and M.lone_stars == (16,)
              and M.quadratic_components == ((0, 3),), "SG(8,20) components")
    Pp, Qp = curve_nbhd_symbols((11, 8, 6, 3, 1), (12, 11, 9, 6, 5), 2, 12)
    M = diagram(Pp, Qp)
    st = theta_stats((11, 8, 6, 3, 1), (12, 11, 9, 6, 5), 2, 12)
    res.check((st.R, st.N, len(M.lone_stars), M.quadratic_components, M.movable_rows)
              == (10, 1, 1, ((4, 8),), (6, 7, 10)), "LG(12,24) example")
    rng = random.Random(seed)
    max_n = max(2, min(max_size + 2, 8))
    count = 0
    attempts = 0
    while count < samples and attempts < 100 * samples:
        attempts += 1
        n = rng.randint(1, max_n)
        shapes = all_classical(Family.lg(n))
        lam, mu = rng.choice(shapes).mu, rng.choice(shapes).mu
        d = rng.randint(0, n)
        st = theta_stats(lam, mu, d, n)
        if st is None or st.R > n:
            continue
        count += 1
        Pp, Qp = curve_nbhd_symbols(lam, mu, d, n)
        M = diagram(Pp, Qp)
        res.check(len(M.lone_stars) == n - st.R - st.N and len(M.quadratic_components) == st.N,
                  f"connectors n={n} lam={lam} mu={mu} d={d}")
    for n in range(1, min(max_size, 4) + 1):
        f = Family.lg(n)
        shapes = all_classical(f)
        for nu in shapes:
            for mu in shapes:
                for d in range(0, 3):
                    top = QuantumShape(f, d, nu.mu)
                    if not contains(top, mu):
                        continue
                    for p in range(1, n + 1):
                        lhs = coeffs.coeff_H(skew(top, mu), p)
                        rhs = sum((-1) ** k * gw_pieri(kap, mu.mu, d, p, n)
                                  for kap, k in rook_strip_subshapes(n, nu.mu))
                        res.check(lhs == rhs, f"rook strips n={n} nu={nu.mu} mu={mu.mu} d={d} p={p}")
    return res


RING_FAMILIES = [Family.gr(2, 4), Family.gr(2, 5), Family.gr(3, 6), Family.og(4), Family.og(5), Family.lg(2), Family.lg(3)]


def suite_ring_commute(max_size: int = 6) -> SuiteResult:
    res = SuiteResult("ring-commute")
    for f in RING_FAMILIES:
        for lam in all_classical(f):
            basis = QKClass.basis(lam)
            prods = {p: pieri(p, lam) for p in range(1, f.max_p + 1)}
            for p, pr in prods.items():
                res.check(is_q_interval(pr), f"{f} interval p={p} {lam}")
                check_nonnegative_degrees(pr)
                for r in range(p + 1, f.max_p + 1):
                    res.check(pieri_class(p, prods[r]) == pieri_class(r, pr),
                              f"{f} commute p={p} r={r} {lam}")
                for g in GENERATORS[f.kind]:
                    s = SeidelElement.generator(f, g)
                    res.check(pieri_class(p, seidel_multiply(s, basis)) == seidel_multiply(s, pr),
                              f"{f} Seidel {g} p={p} {lam}")
    for n in range(1, min(max_size, 4) + 1):
        f = Family.lg(n)
        for mu in all_classical(f):
            for p in range(1, n + 1):
                top = mu.d + 2
                res.check(pieri(p, mu).truncate(top) == pieri_via_undeformed(p, mu, top),
                          f"LG({n}) undeformed reconstruction p={p} {mu}")
    return res


SUITES: dict[str, Callable[[int], SuiteResult]] = {
    "route-agreement": suite_route_agreement,
    "recursions": suite_recursions,
    "pieri-examples": suite_pieri_examples,
    "seidel": suite_seidel,
    "gw-diagram": suite_gw_diagram,
    "ring-commute": suite_ring_commute,
}


def _run_one(args: tuple[str, int]) -> SuiteResult:
    name, max_size = args
    return SUITES[name](max_size)


def run_suites(names: list[str], max_size: int = 6, threads: int | None = None) -> list[SuiteResult]:
    """Run suites, in parallel processes when ``threads`` (or QK_THREADS) exceeds 1."""
    if threads is None:
        threads = int(os.environ.get("QK_THREADS", "1") or 1)
    jobs = [(n, max_size) for n in names]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(_run_one, jobs))
    return [_run_one(j) for j in jobs]


def iter_suite_names(name: str) -> Iterator[str]:
    if name == "all":
        yield from SUITES
    elif name in SUITES:
        yield name
    else:
        raise DomainError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or 'all'")
