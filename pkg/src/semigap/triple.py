"""Closed forms for three-generator semigroups.

The Johnson matrix collects the minimal relations ``a_ii d_i = a_ij d_j + a_ik d_k``.
Indices are 0-based here: ``a[i][j]`` multiplies ``d_j`` in row ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from math import gcd, isqrt

from .core import Generators, _coerce, classify_gaps, compute_apery, profile, validate_generators
from .errors import (
    BadParameters,
    NotMinimal,
    NotPerfectSquare,
    ParityViolation,
    ProductTooSmall,
    WrongDimension,
    ensure,
)
from .polyhilbert import SparsePoly, numerator_q


@dataclass(frozen=True)
class JohnsonMatrix:
    rows: tuple[tuple[int, int, int], ...]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    @property
    def diagonal(self) -> tuple[int, int, int]:
        return tuple(self.rows[i][i] for i in range(3))

    def inner(self, d) -> int:
        """``<a, d> = sum a_ii d_i``."""
        return sum(a * x for a, x in zip(self.diagonal, d))

    def cyclic_products(self) -> tuple[int, int]:
        a = self
        return a[0, 1] * a[1, 2] * a[2, 0], a[1, 0] * a[0, 2] * a[2, 1]


@dataclass(frozen=True)
class SymmetricTriple:
    """Returned instead of a matrix: minimal relations are not unique for symmetric triples."""

    generators: Generators


@dataclass(frozen=True)
class TripleInvariants:
    J: int
    frobenius: int
    genus: int
    q_closed: SparsePoly
    inner: int


def _pair_representations(x: int, p: int, q: int) -> list[tuple[int, int]]:
    out = []
    for u in range(x // p + 1):
        r = x - u * p
        if r % q == 0:
            out.append((u, r // q))
    return out


def _require_triple(g: Generators) -> None:
    if g.m != 3:
        raise WrongDimension(f"expected three generators, got {g.m}")


def johnson_matrix(g, ap=None) -> JohnsonMatrix | SymmetricTriple:
    g = _coerce(g)
    _require_triple(g)
    ap = ap or compute_apery(g)
    if profile(ap).symmetric:
        return SymmetricTriple(g)
    d = g.values
    rows = []
    for i in range(3):
        j, k = [x for x in range(3) if x != i]
        found = None
        for v in range(2, min(d[j], d[k]) + 1):
            reps = _pair_representations(v * d[i], d[j], d[k])
            if reps:
                ensure(len(reps) == 1, "johnson.unique", f"{v}*{d[i]} has {reps}")
                found = (v, reps[0])
                break
        ensure(found is not None, "johnson.exists", f"no relation for d_{i + 1}")
        v, (uj, uk) = found
        row = [0, 0, 0]
        row[i], row[j], row[k] = v, uj, uk
        rows.append(tuple(row))
    jm = JohnsonMatrix(tuple(rows))
    _check_matrix(jm, d)
    return jm


def _check_matrix(a: JohnsonMatrix, d) -> None:
    for i in range(3):
        j, k = [x for x in range(3) if x != i]
        ensure(a[i, i] * d[i] == a[i, j] * d[j] + a[i, k] * d[k], "johnson.row_relation")
        ensure(gcd(a[i, i], gcd(a[i, j], a[i, k])) == 1, "johnson.row_gcd")
        ensure(a[i, j] > 0 and a[i, k] > 0, "johnson.positive")
    for i, j, k in permutations(range(3)):
        ensure(a[i, i] == a[j, i] + a[k, i], "johnson.column_sum")
        ensure(a[i, i] * a[j, j] == d[k] + a[i, j] * a[j, i], "johnson.diagonal_product")
    ensure(generators_from_matrix(a) == tuple(d), "johnson.reconstruction")


def generators_from_matrix(a: JohnsonMatrix) -> tuple[int, int, int]:
    d1 = a[0, 1] * a[1, 2] + a[2, 1] * a[0, 2] + a[0, 1] * a[0, 2]
    d2 = a[1, 2] * a[2, 0] + a[0, 2] * a[1, 0] + a[1, 2] * a[1, 0]
    d3 = a[2, 0] * a[0, 1] + a[1, 0] * a[2, 1] + a[2, 0] * a[2, 1]
    return d1, d2, d3


def conductor_from_matrix(a: JohnsonMatrix) -> int:
    p, q = a.cyclic_products()
    a11, a22, a33 = a.diagonal
    forward = a[0, 1] * a[1, 2] + a[1, 2] * a[2, 0] + a[2, 0] * a[0, 1]
    backward = a[1, 0] * a[0, 2] + a[0, 2] * a[2, 1] + a[2, 1] * a[1, 0]
    mixed = a[2, 0] * a[2, 1] + a[0, 1] * a[0, 2] + a[1, 2] * a[1, 0]
    return 1 + a11 * a22 * a33 - forward - backward - mixed + max(p, q)


def h_gap_count_from_matrix(a: JohnsonMatrix) -> int:
    return min(a.cyclic_products())


def min_h_from_matrix(a: JohnsonMatrix) -> int:
    p, q = a.cyclic_products()
    return abs(p - q)


def triple_invariants(g, jm: JohnsonMatrix, q: SparsePoly | None = None) -> TripleInvariants:
    g = _coerce(g)
    _require_triple(g)
    d = g.values
    diag = jm.diagonal
    inner = jm.inner(d)
    pair_sum = sum(diag[i] * diag[j] * d[i] * d[j] for i in range(3) for j in range(i))
    j_sq = inner * inner - 4 * pair_sum + 4 * d[0] * d[1] * d[2]
    if j_sq < 0 or isqrt(j_sq) ** 2 != j_sq:
        raise NotPerfectSquare(f"J^2 = {j_sq}")
    J = isqrt(j_sq)
    if (inner + J) % 2:
        raise ParityViolation(f"<a,d> = {inner}, J = {J}")
    prod_diag = diag[0] * diag[1] * diag[2]
    sigma = g.total
    if (1 + inner - prod_diag - sigma) % 2:
        raise ParityViolation("genus numerator is odd")
    F = (inner + J) // 2 - sigma
    G = (1 + inner - prod_diag - sigma) // 2

    for i, j, _ in permutations(range(3)):
        ensure(J == abs(jm[i, j] * d[j] - jm[j, i] * d[i]), "triple.j_pairwise")
    for i in range(3):
        ensure(J < diag[i] * d[i], "triple.j_below_relations")
    ensure(J <= 1 + prod_diag - sigma, "triple.j_upper_bound")
    ensure(F + 1 == conductor_from_matrix(jm), "triple.conductor_formula")

    q_closed = (SparsePoly.one()
                - SparsePoly({diag[i] * d[i]: 1 for i in range(3)})
                + SparsePoly.monomial((inner - J) // 2)
                + SparsePoly.monomial((inner + J) // 2))
    if q is None:
        q = numerator_q(g, compute_apery(g))
    ensure(q_closed == q, "triple.closed_form_q", f"{q_closed} != {q}")
    return TripleInvariants(J, F, G, q_closed, inner)


def hgap_extremes_3(ti: TripleInvariants) -> tuple[int, int]:
    return ti.J, ti.frobenius - ti.J


@dataclass(frozen=True)
class FamilyMember:
    """A generated tuple together with the statistics the closed forms predict."""

    generators: Generators
    parameters: dict
    predicted: dict = field(default_factory=dict)


def _verify_predictions(g: Generators, predicted: dict, family: str) -> None:
    ap = compute_apery(g)
    p = profile(ap)
    gc = classify_gaps(ap, p)
    actual = {
        "frobenius": p.frobenius,
        "conductor": p.conductor,
        "genus": p.genus,
        "type": p.type,
        "h_gaps": list(gc.h_gaps),
        "h_count": len(gc.h_gaps),
        "g_count": len(gc.g_gaps),
        "min_h": gc.min_h,
        "max_h": gc.max_h,
    }
    for key, want in predicted.items():
        ensure(actual[key] == want, f"{family}.{key}", f"{g.values}: predicted {want}, got {actual[key]}")


def pseudo_symmetric_triple(a: int, b: int, c: int) -> FamilyMember:
    """Pseudo-symmetric triple ``(1+ab+b, 1+bc+c, 1+ca+a)`` with its predicted statistics."""
    for name, x in (("a", a), ("b", b), ("c", c)):
        if isinstance(x, bool) or not isinstance(x, int) or x < 1:
            raise BadParameters(f"{name} must be a positive integer, got {x!r}")
    if a * b * c < 2:
        raise ProductTooSmall(f"abc = {a * b * c} < 2")
    raw = (1 + a * b + b, 1 + b * c + c, 1 + c * a + a)
    if len(set(raw)) < 3:
        raise NotMinimal(sorted(raw), max(raw), {max(raw): 1})
    g = validate_generators(raw)
    n = a * b * c
    predicted = {
        "conductor": 2 * n - 1,
        "genus": n,
        "g_count": n - 1,
        "h_gaps": [n - 1],
        "min_h": n - 1,
        "max_h": n - 1,
    }
    _verify_predictions(g, predicted, "pseudo3")
    ensure(pseudo_symmetric_check_3(g), "pseudo3.is_pseudo_symmetric")
    jm = johnson_matrix(g)
    ensure(1 in jm.cyclic_products(), "pseudo3.unit_cycle")
    forward = (jm[0, 1], jm[1, 2], jm[2, 0])
    backward = (jm[1, 0], jm[0, 2], jm[2, 1])
    ensure(forward == (1, 1, 1) or backward == (1, 1, 1), "pseudo3.unit_entries")
    return FamilyMember(g, {"a": a, "b": b, "c": c}, predicted)


def pseudo_symmetric_check_3(g) -> bool:
    g = _coerce(g)
    _require_triple(g)
    ap = compute_apery(g)
    p = profile(ap)
    gc = classify_gaps(ap, p)
    result = len(gc.h_gaps) == 1
    ensure(result == p.pseudo_symmetric, "pseudo3.one_h_gap_iff",
           f"{g.values}: #h={len(gc.h_gaps)}, S'={p.pseudo_frobenius}")
    return result
