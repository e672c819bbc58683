"""Serializable report of one analysis, plus the ASCII gap diagram."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields

from .analysis import Analysis

# Emission order of the JSON keys.  Optional keys keep their slot and are
# simply skipped when absent.
KEY_ORDER = (
    "generators", "multiplicity", "embedding_dim", "frobenius", "conductor", "genus",
    "type", "pseudo_frobenius", "gaps", "g_gaps", "h_gaps", "min_h_gap", "max_h_gap",
    "q_polynomial", "v_polynomial", "xi", "johnson", "family", "checks",
)
OPTIONAL_KEYS = frozenset({"min_h_gap", "max_h_gap", "xi", "johnson"})


@dataclass
class SemigroupReport:
    generators: list[int]
    multiplicity: int
    embedding_dim: int
    frobenius: int
    conductor: int
    genus: int
    type: int
    pseudo_frobenius: list[int]
    gaps: list[int]
    g_gaps: list[int]
    h_gaps: list[int]
    min_h_gap: int | None
    max_h_gap: int | None
    q_polynomial: list[list[int]]
    v_polynomial: list[list[int]]
    xi: dict | None
    johnson: list[list[int]] | None
    family: dict
    checks: dict[str, bool] = field(default_factory=dict)

    @classmethod
    def from_analysis(cls, a: Analysis) -> "SemigroupReport":
        p, gc = a.profile, a.gaps
        xi = None
        if a.xi is not None:
            xi = {"min": a.xi.xi_min, "max": a.xi.xi_max, "size": a.xi.size}
        johnson = [list(r) for r in a.johnson.rows] if a.johnson is not None else None
        return cls(
            generators=list(a.generators.values),
            multiplicity=a.generators.multiplicity,
            embedding_dim=a.generators.m,
            frobenius=p.frobenius,
            conductor=p.conductor,
            genus=p.genus,
            type=p.type,
            pseudo_frobenius=list(p.pseudo_frobenius),
            gaps=list(gc.gaps),
            g_gaps=list(gc.g_gaps),
            h_gaps=list(gc.h_gaps),
            min_h_gap=gc.min_h,
            max_h_gap=gc.max_h,
            q_polynomial=a.q.to_pairs(),
            v_polynomial=a.v.to_pairs(),
            xi=xi,
            johnson=johnson,
            family=a.family.as_dict(),
            checks=dict(sorted(a.checks.items())),
        )

    def to_dict(self) -> dict:
        out = {}
        for key in KEY_ORDER:
            value = getattr(self, key)
            if value is None and key in OPTIONAL_KEYS:
                continue
            out[key] = value
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "SemigroupReport":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown report keys: {sorted(unknown)}")
        kwargs = {key: data.get(key) for key in known}
        return cls(**kwargs)

    def to_json(self) -> str:
        return dump_json(self.to_dict())

    @property
    def failed_claims(self) -> list[str]:
        return [k for k, ok in self.checks.items() if not ok]


def dump_json(doc: dict) -> str:
    """One top-level key per line, each value compact; deterministic for a given input."""
    body = ",\n".join(f"  {json.dumps(k)}: {json.dumps(v, separators=(', ', ': '))}"
                      for k, v in doc.items())
    return "{\n" + body + "\n}" if doc else "{}"


def _fmt_list(xs) -> str:
    return "{" + ", ".join(map(str, xs)) + "}"


def render_text(r: SemigroupReport) -> str:
    from .polyhilbert import SparsePoly, format_poly

    rows = [
        ("generators", "(" + ", ".join(map(str, r.generators)) + ")"),
        ("multiplicity", r.multiplicity),
        ("embedding dimension", r.embedding_dim),
        ("Frobenius number", r.frobenius),
        ("conductor", r.conductor),
        ("genus", r.genus),
        ("type", r.type),
        ("pseudo-Frobenius", _fmt_list(r.pseudo_frobenius)),
        ("g-gaps", _fmt_list(r.g_gaps)),
        ("h-gaps", _fmt_list(r.h_gaps)),
    ]
    if r.min_h_gap is not None:
        rows.append(("h-gap extremes", f"{r.min_h_gap} .. {r.max_h_gap}"))
    rows.append(("Q", format_poly(SparsePoly.from_pairs(r.q_polynomial))))
    rows.append(("V", format_poly(SparsePoly.from_pairs(r.v_polynomial))))
    if r.xi is not None:
        rows.append(("Xi", f"min {r.xi['min']}, max {r.xi['max']}, size {r.xi['size']}"))
    if r.johnson is not None:
        rows.append(("Johnson matrix", "  ".join(str(tuple(row)) for row in r.johnson)))
    flags = [k for k, v in r.family.items() if v]
    rows.append(("families", ", ".join(flags) if flags else "none"))
    passed = sum(r.checks.values())
    rows.append(("checks", f"{passed}/{len(r.checks)} hold"))
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)


DIAGRAM_LIMIT = 200


def render_diagram(r: SemigroupReport) -> str:
    """Number line ``0..F``: ``#`` member, ``g`` g-gap, ``h`` h-gap, then the h-gap pairs."""
    F = r.frobenius
    if F < 0:
        return "no gaps: the semigroup is all of N0"
    h_set, g_set = set(r.h_gaps), set(r.g_gaps)
    pairs = [(h, F - h) for h in r.h_gaps if h <= F - h]
    if F > DIAGRAM_LIMIT:
        lines = [f"F = {F} exceeds {DIAGRAM_LIMIT}; h-gap pairs h <-> F-h:"]
        lines += [f"  {h:>{len(str(F))}} <-> {k}" for h, k in pairs]
        if not pairs:
            lines.append("  (none: symmetric)")
        return "\n".join(lines)

    def mark(s: int) -> str:
        return "h" if s in h_set else "g" if s in g_set else "#"

    pad = "    "
    tens = "".join(str(s // 10 % 10) if s % 10 == 0 else " " for s in range(F + 1))
    ones = "".join(str(s % 10) for s in range(F + 1))
    lines = [pad + tens, pad + ones, pad + "".join(mark(s) for s in range(F + 1))]
    for h, k in pairs:
        if h == k:
            arc = " " * h + "@"
        else:
            arc = " " * h + "^" + "-" * (k - h - 1) + "^"
        lines.append(pad + arc.ljust(F + 1) + f"  {h} <-> {k}")
    lines.append("legend: # member, g g-gap, h h-gap, arcs join h and F-h")
    return "\n".join(lines)
