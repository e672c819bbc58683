"""Brute-force reference model and the exhaustive property sweep.

Nothing in the sieve path touches the Apéry/Dijkstra code in :mod:`core`;
the sweep compares the two routes field by field.
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Iterator, Sequence

from .errors import InternalInvariantViolation, SweepFailure


@dataclass(frozen=True)
class SieveModel:
    generators: tuple[int, ...]
    bound: int
    member: tuple[bool, ...]

    def __contains__(self, s: int) -> bool:
        if s < 0:
            return False
        if s > self.bound:
            return True  # bound lies past the conductor after calibration
        return self.member[s]


def _sieve(gens: Sequence[int], bound: int) -> list[bool]:
    member = [False] * (bound + 1)
    member[0] = True
    for s in range(1, bound + 1):
        member[s] = any(d <= s and member[s - d] for d in gens)
    return member


def build_sieve(gens: Sequence[int]) -> SieveModel:
    """Sieve the semigroup, growing the bound until it provably covers ``2F + 2``."""
    gens = tuple(sorted(gens))
    run_needed = gens[-1] + 1
    bound = max(4 * gens[-1], 64)
    while True:
        member = _sieve(gens, bound)
        if all(member[bound - run_needed + 1:]):
            last_gap = max((s for s in range(bound + 1) if not member[s]), default=-1)
            if bound >= 2 * last_gap + 2:
                return SieveModel(gens, bound, tuple(member))
        bound *= 2


@dataclass(frozen=True)
class ReferenceRecord:
    generators: tuple[int, ...]
    frobenius: int
    conductor: int
    genus: int
    gaps: tuple[int, ...]
    g_gaps: tuple[int, ...]
    h_gaps: tuple[int, ...]
    pseudo_frobenius: tuple[int, ...]
    type: int
    apery: tuple[int, ...]
    sieve: SieveModel = field(repr=False, compare=False)


def brute_analyze(gens: Sequence[int]) -> ReferenceRecord:
    sv = build_sieve(gens)
    gens = sv.generators
    gaps = tuple(s for s in range(1, sv.bound + 1) if s not in sv)
    F = gaps[-1] if gaps else -1
    g_gaps = tuple(x for x in gaps if (F - x) in sv)
    h_gaps = tuple(x for x in gaps if (F - x) not in sv)
    nonzero = [s for s in range(1, F + 1) if s in sv]
    # literal definition; elements above F are all members so x + s > F is automatic
    pf = tuple(x for x in gaps if all((x + s) in sv for s in nonzero)) if gaps else (F,)
    d1 = gens[0]
    apery = [None] * d1
    for s in range(sv.bound + 1):
        if s in sv and (s - d1) not in sv and apery[s % d1] is None:
            apery[s % d1] = s
    return ReferenceRecord(gens, F, F + 1, len(gaps), gaps, g_gaps, h_gaps, pf,
                           len(pf), tuple(apery), sv)


def _sieve_minimal(values: tuple[int, ...]) -> bool:
    for i, d in enumerate(values):
        others = values[:i] + values[i + 1:]
        if others and _sieve(others, d)[d]:
            return False
    return True


def enumerate_tuples(m: int, d_max: int) -> Iterator[tuple[int, ...]]:
    """Every minimal generating tuple of length ``m`` with entries at most ``d_max``, lexicographically."""
    if m < 2:
        raise ValueError("m must be at least 2")
    for combo in combinations(range(m, d_max + 1), m):
        if reduce(gcd, combo) != 1:
            continue
        if _sieve_minimal(combo):
            yield combo


# -- sweep ----------------------------------------------------------------

@dataclass
class SweepReport:
    tuples: int = 0
    symmetric: int = 0
    passes: Counter = field(default_factory=Counter)
    elapsed: float = 0.0
    per_dim: Counter = field(default_factory=Counter)

    def merge(self, other: "SweepReport") -> "SweepReport":
        return SweepReport(
            self.tuples + other.tuples,
            self.symmetric + other.symmetric,
            self.passes + other.passes,
            self.elapsed + other.elapsed,
            self.per_dim + other.per_dim,
        )

    def as_dict(self) -> dict:
        return {
            "tuples": self.tuples,
            "symmetric": self.symmetric,
            "per_dimension": {str(k): v for k, v in sorted(self.per_dim.items())},
            "checks": dict(sorted(self.passes.items())),
            "elapsed_seconds": round(self.elapsed, 3),
        }


def _complement_is_symmetric_semigroup(g_gaps: tuple[int, ...], limit: int) -> bool:
    """Would ``N0 \\ g_gaps`` be an additively closed, symmetric set (checked up to ``limit``)?"""
    excluded = set(g_gaps)
    frob = max(g_gaps)
    inside = [s for s in range(limit + 1) if s not in excluded]
    for i, x in enumerate(inside):
        for y in inside[i:]:
            if x + y > limit:
                break
            if x + y in excluded:
                return False
    return all((s not in excluded) != ((frob - s) not in excluded) for s in range(frob + 1))


def check_tuple(values: tuple[int, ...]) -> tuple[Counter, bool]:
    """Run every pipeline on one tuple and compare against the oracle.

    Returns per-check pass counts and the symmetry flag; raises
    InternalInvariantViolation on the first failed assertion.
    """
    from .analysis import analyze
    from .special import aml_pattern, ml_pattern

    passed: Counter = Counter()

    def check(cond: bool, check_id: str, detail: str = "") -> None:
        if not cond:
            raise InternalInvariantViolation(check_id, detail)
        passed[check_id] += 1

    a = analyze(values)
    for cid, ok in a.checks.items():
        check(ok, cid)
    ref = brute_analyze(values)
    p, gc = a.profile, a.gaps

    check(ref.frobenius == p.frobenius, "oracle.frobenius")
    check(ref.conductor == p.conductor, "oracle.conductor")
    check(ref.genus == p.genus, "oracle.genus")
    check(ref.gaps == gc.gaps, "oracle.gaps")
    check(ref.g_gaps == gc.g_gaps, "oracle.g_gaps")
    check(ref.h_gaps == gc.h_gaps, "oracle.h_gaps")
    check(ref.pseudo_frobenius == p.pseudo_frobenius, "oracle.pseudo_frobenius")
    check(ref.type == p.type, "oracle.type")
    check(ref.apery == a.apery.entries, "oracle.apery")
    limit = ref.sieve.bound
    check(all(a.series[k] == (k in ref.sieve) for k in range(len(a.series)) if k <= limit),
          "oracle.hilbert_series")

    # symmetry flag via the literal s in S <=> F - s not in S definition
    F = p.frobenius
    literal_sym = all((s in ref.sieve) != ((F - s) in ref.sieve) for s in range(F + 1))
    check(literal_sym == p.symmetric, "oracle.symmetry_definition")

    t, nh, ng = p.type, len(gc.h_gaps), len(gc.g_gaps)
    m = len(values)
    if not p.symmetric:
        check(not _complement_is_symmetric_semigroup(gc.g_gaps, 2 * F + 2),
              "g_gaps.complement_not_symmetric_semigroup")
    if m == 2:
        check(p.symmetric and a.v.is_zero(), "two_generators.symmetric")
        check(a.q.terms == {0: 1, values[0] * values[1]: -1}, "two_generators.q")
    if m == 3 and not p.symmetric:
        check(t == 2, "triple.type_two")
        check((nh == 1) == p.pseudo_symmetric, "triple.single_h_iff_pseudo_symmetric")

    fam = a.family
    if m >= 3:
        is_ml_tuple = ml_pattern(values) is not None
        check(fam.ml == is_ml_tuple, "length.ml_iff_pattern", f"ml={fam.ml}")
        pat = aml_pattern(values)
        if t == 2:
            check(fam.aml == (pat is not None and pat[0] == 2), "length.aml_type_two_iff_pattern",
                  f"aml={fam.aml}")
        elif t >= 3:
            check(fam.aml == (pat is not None and pat[0] == t), "length.aml_type_many_iff_pattern",
                  f"aml={fam.aml}")
        if fam.aml:
            check(values[0] in (3, 4) if t == 2 else values[0] == t + 1, "length.aml_multiplicity")
    return passed, p.symmetric


def _run_one(args):
    index, values = args
    try:
        passed, sym = check_tuple(values)
    except InternalInvariantViolation as exc:
        return index, values, None, exc.check_id, exc.detail
    return index, values, passed, sym, ""


def theorem_sweep(m_values: Sequence[int], d_max: int | dict, parallel: int | None = None) -> SweepReport:
    """Check every enumerated tuple; raise SweepFailure at the first (lowest-index) counterexample.

    ``d_max`` may be a single bound or a mapping ``m -> bound``.
    """
    start = time.perf_counter()
    jobs = []
    for m in m_values:
        bound = d_max[m] if isinstance(d_max, dict) else d_max
        for values in enumerate_tuples(m, bound):
            jobs.append((len(jobs), values))

    report = SweepReport()
    if parallel and parallel > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            results = list(pool.map(_run_one, jobs, chunksize=32))
    else:
        results = map(_run_one, jobs)
    for index, values, passed, extra, detail in results:
        if passed is None:
            raise SweepFailure(index, values, extra, detail)
        report.tuples += 1
        report.symmetric += int(extra)
        report.per_dim[len(values)] += 1
        report.passes.update(passed)
    report.elapsed = time.perf_counter() - start
    return report
