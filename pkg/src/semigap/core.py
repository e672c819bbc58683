"""Generators, Apéry tables and first-order semigroup data."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .errors import (
    EmptyInput,
    GcdNotOne,
    NegativeArgument,
    NonPositiveGenerator,
    NotMinimal,
    OverflowBudgetExceeded,
    ensure,
)

INT_BUDGET = 2**63 - 1


@dataclass(frozen=True)
class Generators:
    values: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.values)

    @property
    def multiplicity(self) -> int:
        return self.values[0]

    @property
    def total(self) -> int:
        """Sum of all generators."""
        return sum(self.values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


@dataclass(frozen=True)
class AperyTable:
    """Least semigroup element in every residue class modulo the multiplicity."""

    modulus: int
    entries: tuple[int, ...]

    def __contains__(self, s: int) -> bool:
        return contains(self, s)

    def elements(self) -> list[int]:
        return sorted(self.entries)


@dataclass(frozen=True)
class SemigroupProfile:
    frobenius: int
    genus: int
    pseudo_frobenius: tuple[int, ...]
    symmetric: bool
    pseudo_symmetric: bool

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    @property
    def type(self) -> int:
        return len(self.pseudo_frobenius)


@dataclass(frozen=True)
class GapClassification:
    gaps: tuple[int, ...]
    g_gaps: tuple[int, ...]
    h_gaps: tuple[int, ...]

    @property
    def min_h(self) -> int | None:
        return self.h_gaps[0] if self.h_gaps else None

    @property
    def max_h(self) -> int | None:
        return self.h_gaps[-1] if self.h_gaps else None


def _shortest_residues(modulus: int, steps: Iterable[int]) -> list[int]:
    # Dijkstra on residues mod `modulus`; arc r -> (r + d) % modulus costs d.
    steps = sorted(set(steps))
    dist = [-1] * modulus
    heap = [(0, 0)]
    while heap:
        w, r = heapq.heappop(heap)
        if dist[r] >= 0:
            continue
        dist[r] = w
        for d in steps:
            nxt = (r + d) % modulus
            if dist[nxt] < 0:
                heapq.heappush(heap, (w + d, nxt))
    return dist


def _representation(target: int, others: Sequence[int]) -> dict[int, int]:
    """Return multiplicities of ``others`` summing to ``target`` (caller knows one exists)."""
    pred = [0] * (target + 1)
    reach = [False] * (target + 1)
    reach[0] = True
    for s in range(1, target + 1):
        for g in others:
            if g <= s and reach[s - g]:
                reach[s] = True
                pred[s] = g
                break
    ensure(reach[target], "generators.witness", f"{target} not reachable by {tuple(others)}")
    witness: dict[int, int] = {}
    s = target
    while s:
        witness[pred[s]] = witness.get(pred[s], 0) + 1
        s -= pred[s]
    return witness


def _representable(target: int, others: Sequence[int]) -> bool:
    g = reduce(gcd, others)
    if target % g:
        return False
    reduced = [x // g for x in others]
    t = target // g
    base = min(reduced)
    table = _shortest_residues(base, [x for x in reduced if x != base])
    r = table[t % base]
    return r >= 0 and r <= t


def validate_generators(raw: Iterable[int]) -> Generators:
    """Sort, deduplicate and check a candidate minimal generating tuple.

    Raises EmptyInput, NonPositiveGenerator, GcdNotOne or NotMinimal.
    """
    items = list(raw)
    if not items:
        raise EmptyInput("no generators given")
    for x in items:
        if isinstance(x, bool) or not isinstance(x, int):
            raise NonPositiveGenerator(f"generator {x!r} is not an integer")
        if x < 1:
            raise NonPositiveGenerator(f"generator {x} is not positive")
        if x > INT_BUDGET:
            raise OverflowBudgetExceeded(f"generator {x} exceeds the 64-bit budget")
    values = tuple(sorted(set(items)))
    g = reduce(gcd, values)
    if g != 1:
        raise GcdNotOne(values, g)
    for i, d in enumerate(values):
        others = values[:i] + values[i + 1:]
        if others and _representable(d, others):
            raise NotMinimal(values, d, _representation(d, others))
    return Generators(values)


def _coerce(g) -> Generators:
    return g if isinstance(g, Generators) else validate_generators(g)


def compute_apery(g: Generators) -> AperyTable:
    g = _coerce(g)
    d1 = g.multiplicity
    entries = _shortest_residues(d1, g.values[1:])
    ensure(all(e >= 0 for e in entries), "apery.complete", "unreachable residue")
    if max(entries) + g.total > INT_BUDGET:
        raise OverflowBudgetExceeded(f"{g.values}: Apéry elements exceed the 64-bit budget")
    ap = AperyTable(d1, tuple(entries))
    ensure(entries[0] == 0, "apery.zero")
    ensure(len(set(entries)) == d1, "apery.distinct")
    ensure(all(d in ap.entries for d in g.values[1:]), "apery.contains_generators")
    return ap


def contains(ap: AperyTable, s: int) -> bool:
    if s < 0:
        raise NegativeArgument(f"membership asked for negative {s}")
    return ap.entries[s % ap.modulus] <= s


def _member(ap: AperyTable, s: int) -> bool:
    return s >= 0 and ap.entries[s % ap.modulus] <= s


def profile(ap: AperyTable) -> SemigroupProfile:
    d1 = ap.modulus
    entries = ap.entries
    F = max(entries) - d1
    genus = sum(1 for s in range(1, F + 1) if not _member(ap, s))

    # Apéry genus formula, kept as a redundant cross-check.
    total = sum(entries)
    ensure(2 * total - d1 * (d1 - 1) == 2 * d1 * genus, "genus.apery_sum",
           f"sieve genus {genus} vs Apéry sum {total}")

    maximal = [
        w for w in entries
        if not any(v != w and _member(ap, v - w) for v in entries)
    ]
    pf = tuple(sorted(w - d1 for w in maximal))
    t = len(pf)
    symmetric = t == 1
    pseudo = (t == 2 and F % 2 == 0 and pf == (F // 2, F))
    c = F + 1
    ensure(pf[-1] == F, "pseudo_frobenius.max_is_frobenius")
    ensure(symmetric == (2 * genus == c), "symmetry.genus_conductor",
           f"t={t}, 2G={2 * genus}, c={c}")
    ensure(symmetric or 2 * genus > c, "symmetry.genus_exceeds")
    return SemigroupProfile(F, genus, pf, symmetric, pseudo)


def classify_gaps(ap: AperyTable, p: SemigroupProfile) -> GapClassification:
    F = p.frobenius
    gaps = [s for s in range(1, F + 1) if not _member(ap, s)]
    g_gaps = tuple(x for x in gaps if _member(ap, F - x))
    h_gaps = tuple(x for x in gaps if not _member(ap, F - x))
    c, G = p.conductor, p.genus
    ensure(len(g_gaps) == c - G, "gaps.g_count", f"{len(g_gaps)} != c - G = {c - G}")
    ensure(len(h_gaps) == 2 * G - c, "gaps.h_count", f"{len(h_gaps)} != 2G - c = {2 * G - c}")
    if h_gaps:
        ensure(h_gaps[0] + h_gaps[-1] == F, "h_gaps.min_plus_max")
    return GapClassification(tuple(gaps), g_gaps, h_gaps)
