"""Exact sparse polynomials and the Hilbert-series numerator machinery.

All polynomials here have nonnegative integer degrees and integer
coefficients.  The numerator ``Q`` of the Hilbert series over
``prod(1 - z^d)`` is obtained from the Apéry generating function; ``V``
compares ``Q`` with its own reflection and, when nonzero, factors as the
binomial product times the h-gap generating polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .core import AperyTable, Generators, SemigroupProfile, _coerce
from .errors import (
    MirrorDegreeTooSmall,
    NonUnitCoefficient,
    NotDivisible,
    OverflowBudgetExceeded,
    SymmetricInput,
    ensure,
)

_BUDGET = 2**63 - 1


def _checked(c: int) -> int:
    if c > _BUDGET or c < -_BUDGET - 1:
        raise OverflowBudgetExceeded(f"coefficient {c} leaves the 64-bit range")
    return c


class SparsePoly:
    """Immutable polynomial stored as ``{degree: nonzero coefficient}``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        acc: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for d, c in items:
            if d < 0:
                raise ValueError(f"negative degree {d}")
            acc[d] = acc.get(d, 0) + c
        self._terms = {d: _checked(c) for d, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "SparsePoly":
        return cls({degree: coeff})

    @classmethod
    def one(cls) -> "SparsePoly":
        return cls({0: 1})

    @classmethod
    def binomial_product(cls, degrees: Iterable[int]) -> "SparsePoly":
        """``prod(1 - z^d)`` over ``degrees``."""
        out = cls.one()
        for d in degrees:
            out = out * cls({0: 1, d: -1})
        return out

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def coeff(self, degree: int) -> int:
        return self._terms.get(degree, 0)

    def support(self) -> list[int]:
        return list(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> float:
        return next(reversed(self._terms)) if self._terms else -math.inf

    def min_degree(self) -> float:
        return next(iter(self._terms)) if self._terms else -math.inf

    def weight(self) -> int:
        """Number of monomials counted with multiplicity (sum of |coefficients|)."""
        return sum(abs(c) for c in self._terms.values())

    def at_one(self) -> int:
        return sum(self._terms.values())

    def to_pairs(self) -> list[list[int]]:
        return [[d, c] for d, c in self._terms.items()]

    @classmethod
    def from_pairs(cls, pairs) -> "SparsePoly":
        return cls((int(d), int(c)) for d, c in pairs)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        acc = dict(self._terms)
        for d, c in other._terms.items():
            acc[d] = acc.get(d, 0) + c
        return SparsePoly(acc)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly({d: -c for d, c in self._terms.items()})

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def __mul__(self, other) -> "SparsePoly":
        if isinstance(other, int):
            return SparsePoly({d: c * other for d, c in self._terms.items()})
        acc: dict[int, int] = {}
        for d1, c1 in self._terms.items():
            for d2, c2 in other._terms.items():
                acc[d1 + d2] = acc.get(d1 + d2, 0) + c1 * c2
        return SparsePoly(acc)

    __rmul__ = __mul__

    def divide_exact(self, divisor: "SparsePoly") -> "SparsePoly":
        """Quotient of an exact division; any remainder raises NotDivisible."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_deg = divisor.degree()
        lead = divisor._terms[lead_deg]
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            if top < lead_deg:
                raise NotDivisible(f"remainder of degree {top} left")
            c = rem[top]
            if c % lead:
                raise NotDivisible(f"coefficient {c} at degree {top} not divisible by {lead}")
            q = c // lead
            shift = top - lead_deg
            quot[shift] = q
            for d, dc in divisor._terms.items():
                k = d + shift
                v = rem.get(k, 0) - q * dc
                if v:
                    rem[k] = _checked(v)
                else:
                    rem.pop(k, None)
        return SparsePoly(quot)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, SparsePoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"SparsePoly({self._terms!r})"

    def __str__(self) -> str:
        return format_poly(self)


def format_poly(p: SparsePoly, var: str = "z") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for d, c in p:
        mag = abs(c)
        if d == 0:
            body = str(mag)
        else:
            mono = var if d == 1 else f"{var}^{d}"
            body = mono if mag == 1 else f"{mag}{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def mirror(p: SparsePoly, n: int) -> SparsePoly:
    """``z^n * p(1/z)``."""
    if not p.is_zero() and n < p.degree():
        raise MirrorDegreeTooSmall(f"cannot reflect degree {p.degree()} inside {n}")
    return SparsePoly({n - d: c for d, c in p})


def apery_gf(ap: AperyTable) -> SparsePoly:
    p = SparsePoly({w: 1 for w in ap.entries})
    ensure(len(p) == ap.modulus and p.weight() == ap.modulus, "apery_gf.terms")
    return p


def numerator_q(g: Generators, ap: AperyTable) -> SparsePoly:
    """Hilbert-series numerator: ``prod_{j>=2}(1 - z^{d_j})`` times the Apéry generating function."""
    g = _coerce(g)
    q = SparsePoly.binomial_product(g.values[1:]) * apery_gf(ap)
    m = g.m
    ensure(q.coeff(0) == 1, "q.constant_term")
    ensure(q.at_one() == 0 or m == 1, "q.vanishes_at_one", f"Q(1) = {q.at_one()}")
    ensure(q.coeff(q.degree()) == (-1) ** (m - 1), "q.top_sign")
    if m >= 2:
        bound = g.multiplicity * 2 ** (m - 1) - 2 * (m - 1)
        ensure(q.weight() <= bound, "q.term_bound", f"{q.weight()} > {bound}")
    return q


def hilbert_truncated(g: Generators, q: SparsePoly, n: int,
                      ap: AperyTable | None = None) -> list[int]:
    """First ``n + 1`` coefficients of ``Q / prod(1 - z^{d_i})``.

    Each coefficient is checked to be 0 or 1; when ``ap`` is given it is
    also compared with the membership test.
    """
    if n < 0:
        raise ValueError("window must be nonnegative")
    g = _coerce(g)
    series = [0] * (n + 1)
    for d, c in q:
        if d <= n:
            series[d] = c
    for d in g.values:
        # multiply by 1/(1 - z^d): running sum with stride d
        for k in range(d, n + 1):
            series[k] += series[k - d]
    for k, c in enumerate(series):
        ensure(c in (0, 1), "hilbert.indicator", f"coefficient {c} at degree {k}")
        if ap is not None:
            ensure(c == (ap.entries[k % ap.modulus] <= k), "hilbert.membership", f"degree {k}")
    return series


def gap_windows(series: Iterable[int], frobenius: int) -> tuple[SparsePoly, SparsePoly]:
    """h-gap and g-gap polynomials recovered from the Hilbert series on ``[0, F]``.

    Splitting ``H = P + z^c/(1-z)`` with ``P`` the part below the conductor,
    the two reflected generating functions become the polynomials
    ``sum_{k<=F} z^k - P - z^F P(1/z)`` and ``z^F P(1/z)``.
    """
    F = frobenius
    if F < 0:
        return SparsePoly(), SparsePoly()
    coeffs = list(series)
    if len(coeffs) < F + 1:
        raise ValueError("series window shorter than F + 1")
    below = SparsePoly({k: coeffs[k] for k in range(F + 1)})
    reflected = mirror(below, F)
    full = SparsePoly({k: 1 for k in range(F + 1)})
    return full - below - reflected, reflected


def is_symmetric_numerator(q: SparsePoly, m: int) -> bool:
    return mirror(q, q.degree()) * ((-1) ** (m - 1)) == q


def v_polynomial(q: SparsePoly, m: int) -> SparsePoly:
    if q.is_zero():
        raise ValueError("Q must be nonzero")
    n = q.degree()
    v = mirror(q, n) * ((-1) ** (m - 1)) - q
    ensure(v.coeff(0) == 0 and v.coeff(n) == 0, "v.endpoint_cancellation")
    return v


def hgap_poly_from_v(v: SparsePoly, g: Generators) -> SparsePoly:
    g = _coerce(g)
    if v.is_zero():
        return SparsePoly()
    h = v.divide_exact(SparsePoly.binomial_product(g.values))
    bad = [(d, c) for d, c in h if c != 1]
    if bad:
        raise NonUnitCoefficient(f"terms {bad[:5]}")
    return h


def hgap_bounds_via_v(v: SparsePoly, g: Generators) -> tuple[int, int]:
    """Smallest and largest h-gap read off the extreme degrees of ``V``."""
    g = _coerce(g)
    if v.is_zero():
        raise SymmetricInput("V vanishes: the semigroup is symmetric")
    lo, hi = v.min_degree(), v.degree()
    ensure(v.coeff(lo) == 1, "v.min_term_sign", f"coefficient {v.coeff(lo)}")
    # top term is (-1)^m * z^(max_h + sum d): the product's top sign times +1
    ensure(v.coeff(hi) == (-1) ** g.m, "v.max_term_sign", f"coefficient {v.coeff(hi)}")
    return lo, hi - g.total


@dataclass(frozen=True)
class XiSummary:
    xi: tuple[int, ...]
    size: int
    degree: int

    @property
    def xi_min(self) -> int:
        return self.xi[0]

    @property
    def xi_max(self) -> int:
        return self.xi[-1]

    @property
    def xi_bar(self) -> tuple[int, ...]:
        return tuple(sorted(self.degree - x for x in self.xi))


def xi_and_min_hgap(q: SparsePoly) -> tuple[XiSummary, int]:
    n = q.degree()
    if q.is_zero() or mirror(q, n) in (q, -q):
        raise SymmetricInput("Q is self-reflective: no h-gaps to extract")
    inner = {d: c for d, c in q if d not in (0, n)}
    xi = tuple(inner)
    size = sum(abs(c) for c in inner.values())
    ensure(size == q.weight() - 2, "xi.size")
    summary = XiSummary(xi, size, n)
    return summary, n - summary.xi_max


def betti_top(p: SemigroupProfile, g: Generators, q: SparsePoly) -> list[int]:
    """Degrees of the top syzygy level: the pseudo-Frobenius numbers shifted by the generator sum."""
    g = _coerce(g)
    sigma = g.total
    top = [f + sigma for f in p.pseudo_frobenius]
    sign = (-1) ** (g.m - 1)
    for b in top:
        ensure(q.coeff(b) == sign, "betti_top.in_q", f"degree {b} has coefficient {q.coeff(b)}")
    ensure(len(top) == p.type, "betti_top.count")
    ensure(q.degree() == p.frobenius + sigma, "q.degree_frobenius")
    return top


__all__ = [
    "SparsePoly", "XiSummary", "format_poly", "mirror", "apery_gf", "numerator_q",
    "hilbert_truncated", "gap_windows", "is_symmetric_numerator", "v_polynomial",
    "hgap_poly_from_v", "hgap_bounds_via_v", "xi_and_min_hgap", "betti_top",
]
