"""MED, maximal-length and almost-maximal-length families."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .core import GapClassification, Generators, SemigroupProfile, _coerce, classify_gaps, compute_apery, profile, validate_generators
from .errors import BadParameters, NotMED, ensure
from .triple import FamilyMember, _verify_predictions

SPORADIC_AML = {"4-5-11": (4, 5, 11), "4-7-13": (4, 7, 13)}


@dataclass(frozen=True)
class FamilyTag:
    med: bool
    ml: bool
    aml: bool
    almost_min_length: bool
    parameters: dict | None = None

    def as_dict(self) -> dict:
        return {"med": self.med, "ml": self.ml, "aml": self.aml,
                "almost_min_length": self.almost_min_length}


def ml_pattern(values) -> tuple[int, int] | None:
    """``(m, k)`` if ``values == (m, mk+1, ..., mk+m-1)``."""
    m = len(values)
    if m < 2 or values[0] != m or (values[1] - 1) % m:
        return None
    k = (values[1] - 1) // m
    if k >= 1 and tuple(values) == tuple([m] + [m * k + j for j in range(1, m)]):
        return m, k
    return None


def aml_pattern(values) -> tuple[int, int] | None:
    """``(t, k)`` if ``values`` matches the almost-maximal-length tuples.

    For ``t = 2`` this is the series ``(3, 3k+2, 3k+4)`` or a sporadic tuple
    (reported with ``k = 0``); for ``t >= 3`` it is
    ``(t+1, k(t+1)+t, k(t+1)+t+2, ..., k(t+1)+2t)``.
    """
    values = tuple(values)
    if values in SPORADIC_AML.values():
        return 2, 0
    if len(values) == 3 and values[0] == 3 and (values[1] - 2) % 3 == 0:
        k = (values[1] - 2) // 3
        if k >= 1 and values == (3, 3 * k + 2, 3 * k + 4):
            return 2, k
    t = values[0] - 1
    if t >= 3 and len(values) == t + 1:
        base = values[1] - t
        if base > 0 and base % (t + 1) == 0:
            k = base // (t + 1)
            want = (t + 1, k * (t + 1) + t) + tuple(k * (t + 1) + t + j for j in range(2, t + 1))
            if values == want:
                return t, k
    return None


def classify_family(g, p: SemigroupProfile, gc: GapClassification) -> FamilyTag:
    g = _coerce(g)
    t = p.type
    nh, ng = len(gc.h_gaps), len(gc.g_gaps)
    ensure(p.genus <= ng * t, "length.genus_bound", f"G={p.genus}, #g={ng}, t={t}")
    ensure(0 <= nh <= ng * (t - 1), "length.sandwich")
    med = g.m >= 3 and g.m == g.multiplicity
    ml = t >= 2 and nh == ng * (t - 1)
    aml = t >= 2 and nh == ng * (t - 1) - 1
    almost_min = nh == 1
    if ml:
        ensure(med, "length.ml_is_med")
    if aml and t >= 3:
        ensure(med, "length.aml_is_med")
    params = None
    if ml:
        params = {"m": g.m, "k": ml_pattern(g.values)[1] if ml_pattern(g.values) else None}
    elif aml:
        pat = aml_pattern(g.values)
        params = {"t": t, "k": pat[1] if pat else None}
    return FamilyTag(med, ml, aml, almost_min, params)


@dataclass(frozen=True)
class MedStats:
    frobenius: int
    genus: int
    type: int
    pseudo_frobenius: tuple[int, ...]
    min_h: int
    max_h: int
    h_count: int
    g_count: int


def _exact_div(num: int, den: int, check_id: str) -> int:
    ensure(num % den == 0, check_id, f"{num}/{den}")
    return num // den


def _require_med(g: Generators) -> None:
    if g.m < 3 or g.m != g.multiplicity:
        raise NotMED(f"{g.values}: needs embedding dimension = multiplicity >= 3")


def med_stats(g) -> MedStats:
    g = _coerce(g)
    _require_med(g)
    m, d = g.m, g.values
    rest = sum(d[1:])
    # the non-multiplicity generators fill residues 1..m-1 mod m exactly once,
    # so 2*rest == m(m-1) (mod 2m); rest itself is a multiple of m only for odd m
    ensure((2 * rest - m * (m - 1)) % (2 * m) == 0, "med.residue_sum")
    stats = MedStats(
        frobenius=d[-1] - m,
        genus=_exact_div(2 * rest - m * (m - 1), 2 * m, "med.genus_integral"),
        type=m - 1,
        pseudo_frobenius=tuple(x - m for x in d[1:]),
        min_h=d[-1] - d[-2],
        max_h=d[-2] - m,
        h_count=_exact_div(2 * rest, m, "med.h_count_integral") - d[-1],
        g_count=_exact_div(2 * m * d[-1] - 2 * rest - m * (m - 1), 2 * m, "med.g_count_integral"),
    )
    ap = compute_apery(g)
    p = profile(ap)
    gc = classify_gaps(ap, p)
    ensure(not p.symmetric, "med.never_symmetric")
    if gcd(d[1], m) == 1:
        # multiples of d_2 then reach every residue, capping each Apéry element
        ensure(d[-1] <= (m - 1) * d[1] - m, "med.largest_generator_bound")
    ensure(d[-1] <= 2 * d[-2] - 2 * m + 3, "med.spread_bound")
    at_equality = d[-1] == 2 * d[-2] - 2 * m + 3
    ensure(at_equality == (gc.max_h - gc.min_h == m - 3), "med.spread_equality")
    if m == 3:
        ensure(at_equality == (len(gc.h_gaps) == 1), "med.spread_equality_single_h")
    got = MedStats(p.frobenius, p.genus, p.type, p.pseudo_frobenius,
                   gc.min_h, gc.max_h, len(gc.h_gaps), len(gc.g_gaps))
    ensure(got == stats, "med.closed_forms", f"{g.values}: predicted {stats}, got {got}")
    return stats


def med_balance_check(g) -> bool:
    """True iff the MED tuple has as many h-gaps as g-gaps."""
    g = _coerce(g)
    _require_med(g)
    m, d = g.m, g.values
    balanced = 6 * sum(d[1:-1]) + m * (m - 1) == 2 * (2 * m - 3) * d[-1]
    ap = compute_apery(g)
    gc = classify_gaps(ap, profile(ap))
    ensure(balanced == (len(gc.h_gaps) == len(gc.g_gaps)), "med.balance_iff")
    return balanced


def _positive(name: str, value, low: int = 1) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < low:
        raise BadParameters(f"{name} must be an integer >= {low}, got {value!r}")
    return value


def family_ml(m: int, k: int) -> FamilyMember:
    _positive("m", m, 3)
    _positive("k", k, 1)
    g = validate_generators([m] + [m * k + j for j in range(1, m)])
    predicted = {
        "frobenius": m * k - 1,
        "h_count": m * k - 2 * k,
        "g_count": k,
        "min_h": 1,
        "max_h": m * k - 2,
    }
    _verify_predictions(g, predicted, "ml")
    ap = compute_apery(g)
    p = profile(ap)
    tag = classify_family(g, p, classify_gaps(ap, p))
    ensure(tag.ml and tag.med, "ml.classified")
    return FamilyMember(g, {"m": m, "k": k}, predicted)


def family_aml(t: int, k: int | None = None, sporadic: str | None = None) -> FamilyMember:
    _positive("t", t, 2)
    if sporadic is not None:
        if t != 2 or sporadic not in SPORADIC_AML:
            raise BadParameters(f"sporadic tuple must be one of {sorted(SPORADIC_AML)} with t = 2")
        g = validate_generators(SPORADIC_AML[sporadic])
        predicted = {"4-5-11": {"frobenius": 7, "h_count": 2, "g_count": 3, "min_h": 1, "max_h": 6},
                     "4-7-13": {"frobenius": 10, "h_count": 3, "g_count": 4, "min_h": 1, "max_h": 9}}[sporadic]
        params = {"t": 2, "sporadic": sporadic}
    else:
        _positive("k", k, 1)
        if t == 2:
            g = validate_generators((3, 3 * k + 2, 3 * k + 4))
            predicted = {"frobenius": 3 * k + 1, "h_count": k, "g_count": k + 1,
                         "min_h": 2, "max_h": 3 * k - 1}
        else:
            base = k * (t + 1)
            g = validate_generators([t + 1, base + t] + [base + t + j for j in range(2, t + 1)])
            predicted = {"frobenius": base + t - 1, "h_count": (k + 1) * t - k - 2,
                         "g_count": k + 1, "min_h": 1, "max_h": base + t - 2}
        params = {"t": t, "k": k}
    predicted["type"] = t
    _verify_predictions(g, predicted, "aml")
    ap = compute_apery(g)
    p = profile(ap)
    tag = classify_family(g, p, classify_gaps(ap, p))
    ensure(tag.aml, "aml.classified")
    return FamilyMember(g, params, predicted)
