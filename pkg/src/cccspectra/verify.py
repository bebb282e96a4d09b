"""Brute force versus closed forms over parameter ranges.

A sweep never aborts on a disagreement; everything lands in the report so
a single run gives the full census.
"""
from __future__ import annotations

import enum
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .ccc import (AbelianGroup, NotUnionOfCliques, build_ccc, complete_union_shape,
                  expected_shape)
from .closed_forms import (Classification, EnergyOrdering, Matrix, UnsupportedParams,
                           classify_closed, classify_from_energies, closed_energies,
                           closed_spectra, energy_ordering, ordering_of)
from .groups import Family, GroupSpec, validate_presentation
from .spectra import (MismatchBeyondTolerance, energy_report, format_rational,
                      is_super_integral, numeric_cap, numeric_cross_check, spectra_of_union)


class Category(enum.Enum):
    SHAPE = "Shape"
    SPECTRUM_A = "SpectrumA"
    SPECTRUM_L = "SpectrumL"
    SPECTRUM_Q = "SpectrumQ"
    ENERGY = "Energy"
    ORDERING = "Ordering"
    CLASSIFICATION = "Classification"
    PRESENTATION = "Presentation"
    NUMERIC = "Numeric"
    FORMULA_DISCREPANCY = "FormulaDiscrepancy"


@dataclass(frozen=True)
class Mismatch:
    spec: GroupSpec
    category: Category
    detail: str

    def to_json_obj(self) -> dict:
        return {"group": self.spec.label, "family": self.spec.family.value,
                "params": self.spec.params(), "category": self.category.value,
                "detail": self.detail}


@dataclass(frozen=True)
class ConjectureViolation:
    spec: GroupSpec
    which: str  # "E-LE" or "LEplus-LE"
    detail: str

    def to_json_obj(self) -> dict:
        return {"group": self.spec.label, "which": self.which, "detail": self.detail}


@dataclass(frozen=True)
class InstanceRecord:
    """What brute force found for one group."""

    spec: GroupSpec
    shape: str
    vertices: int
    edges: int
    E: str
    LE: str
    LE_plus: str
    ordering: str | None
    classification: str
    super_integral: bool
    numeric: str  # "ok", "skipped" or "fail"

    def to_json_obj(self) -> dict:
        return {"group": self.spec.label, "family": self.spec.family.value,
                "params": self.spec.params(), "shape": self.shape,
                "vertices": self.vertices, "edges": self.edges,
                "E": self.E, "LE": self.LE, "LE_plus": self.LE_plus,
                "ordering": self.ordering, "classification": self.classification,
                "super_integral": self.super_integral, "numeric": self.numeric}


@dataclass
class SweepReport:
    instances_checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    conjecture_violations: list[ConjectureViolation] = field(default_factory=list)
    records: list[InstanceRecord] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def merge(self, other: "SweepReport") -> "SweepReport":
        out = SweepReport(self.instances_checked + other.instances_checked,
                          self.mismatches + other.mismatches,
                          self.conjecture_violations + other.conjecture_violations,
                          self.records + other.records)
        out.normalize()
        return out

    def normalize(self) -> None:
        cats = list(Category)
        self.mismatches.sort(key=lambda x: (x.spec.sort_key(), cats.index(x.category), x.detail))
        self.conjecture_violations.sort(key=lambda x: (x.spec.sort_key(), x.which))
        self.records.sort(key=lambda r: r.spec.sort_key())

    def by_category(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for mm in self.mismatches:
            counts[mm.category.value] = counts.get(mm.category.value, 0) + 1
        return dict(sorted(counts.items()))

    def all_equal(self) -> list[GroupSpec]:
        return [r.spec for r in self.records if r.ordering == EnergyOrdering.ALL_EQUAL.code]

    def to_json_obj(self) -> dict:
        return {
            "instances_checked": self.instances_checked,
            "mismatch_count": len(self.mismatches),
            "mismatches_by_category": self.by_category(),
            "mismatches": [m.to_json_obj() for m in self.mismatches],
            "conjecture_violations": [c.to_json_obj() for c in self.conjecture_violations],
            "records": [r.to_json_obj() for r in self.records],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)

    def to_text(self) -> str:
        lines = [f"instances checked: {self.instances_checked}",
                 f"mismatches: {len(self.mismatches)}"]
        for cat, k in self.by_category().items():
            lines.append(f"  {cat}: {k}")
        for mm in self.mismatches:
            lines.append(f"{mm.spec.label}\t{mm.category.value}\t{mm.detail}")
        lines.append(f"conjecture violations: {len(self.conjecture_violations)}")
        for c in self.conjecture_violations:
            lines.append(f"{c.spec.label}\t{c.which}\t{c.detail}")
        return "\n".join(lines) + "\n"


# --- parameter ranges --------------------------------------------------------

def family_specs(family: Family, max_n: int, max_m: int | None = None,
                 include_u_m2: bool = False) -> list[GroupSpec]:
    """Legal specs in range, in canonical order."""
    if family is Family.DIHEDRAL:
        return [GroupSpec.dihedral(n) for n in range(3, max_n + 1)]
    if family is Family.DICYCLIC:
        top = max_m if max_m is not None else max_n
        return [GroupSpec.dicyclic(m) for m in range(2, top + 1)]
    if family is Family.UMETA:
        top = max_m if max_m is not None else max_n
        lo = 2 if include_u_m2 else 3
        return [GroupSpec.umeta(n, m) for n in range(2, max_n + 1) for m in range(lo, top + 1)]
    if family is Family.VGROUP:
        return [GroupSpec.vgroup(n) for n in range(2, max_n + 1)]
    return [GroupSpec.semidihedral(n) for n in range(2, max_n + 1)]


def _specs(families: Iterable[Family], max_n, max_m, include_u_m2) -> list[GroupSpec]:
    out = []
    for fam in sorted(set(families), key=list(Family).index):
        out += family_specs(fam, max_n, max_m, include_u_m2)
    return out


# --- per-instance check ------------------------------------------------------

def _fmt(q) -> str:
    return format_rational(q)


def _energies_str(r) -> str:
    return f"E={_fmt(r.E)}, LE={_fmt(r.LE)}, LE+={_fmt(r.LE_plus)}, |V|={r.vertex_count}, |e|={r.edge_count}"


def _check_um2(spec: GroupSpec) -> SweepReport:
    rep = SweepReport(1)
    try:
        build_ccc(spec)
        got = "non-empty graph"
    except AbelianGroup:
        got = "abelian group, empty vertex set"
    claimed = closed_energies(spec, strict=False)
    rep.mismatches.append(Mismatch(
        spec, Category.FORMULA_DISCREPANCY,
        f"brute force: {got}; m=2 table rows claim {_energies_str(claimed)}"))
    return rep


def check_instance(spec: GroupSpec) -> SweepReport:
    """Run every brute-force versus closed-form comparison for one group."""
    if spec.family is Family.UMETA and spec.m == 2:
        return _check_um2(spec)
    rep = SweepReport(1)
    bad = lambda cat, detail: rep.mismatches.append(Mismatch(spec, cat, detail))

    pres = validate_presentation(spec)
    for v in pres.violations:
        bad(Category.PRESENTATION, v)

    try:
        g = build_ccc(spec)
        shape = complete_union_shape(g)
    except (AbelianGroup, NotUnionOfCliques) as exc:
        bad(Category.SHAPE, str(exc))
        return rep

    want_shape = expected_shape(spec)
    if shape != want_shape:
        bad(Category.SHAPE, f"brute {shape} vs closed {want_shape}")

    spectra = spectra_of_union(shape)
    closed = closed_spectra(spec)
    for which, got, want in zip(Matrix, spectra, closed):
        if got != want:
            cat = {Matrix.A: Category.SPECTRUM_A, Matrix.L: Category.SPECTRUM_L,
                   Matrix.Q: Category.SPECTRUM_Q}[which]
            bad(cat, f"brute [{got}] vs closed [{want}]")

    report = energy_report(shape)
    want_energy = closed_energies(spec)
    if report != want_energy:
        bad(Category.ENERGY, f"brute {_energies_str(report)} vs closed {_energies_str(want_energy)}")

    order = ordering_of(report)
    try:
        want_order = energy_ordering(spec)
        if order != want_order:
            bad(Category.ORDERING, f"brute {order.code if order else 'unpatterned'} "
                                   f"vs closed {want_order.code}")
    except UnsupportedParams as exc:
        bad(Category.ORDERING, str(exc))

    cls = classify_from_energies(report)
    try:
        want_cls = classify_closed(spec)
        if cls != want_cls:
            bad(Category.CLASSIFICATION, f"brute {cls} vs closed {want_cls}")
    except UnsupportedParams as exc:
        bad(Category.CLASSIFICATION, str(exc))

    if g.vertex_count > numeric_cap():
        numeric = "skipped"
    else:
        try:
            numeric_cross_check(g, spectra)
            numeric = "ok"
        except MismatchBeyondTolerance as exc:
            numeric = "fail"
            bad(Category.NUMERIC, str(exc))

    if report.E > report.LE:
        rep.conjecture_violations.append(ConjectureViolation(
            spec, "E-LE", f"E={_fmt(report.E)} > LE={_fmt(report.LE)}"))
    if report.LE_plus > report.LE:
        rep.conjecture_violations.append(ConjectureViolation(
            spec, "LEplus-LE", f"LE+={_fmt(report.LE_plus)} > LE={_fmt(report.LE)}"))

    rep.records.append(InstanceRecord(
        spec, str(shape), report.vertex_count, report.edge_count,
        _fmt(report.E), _fmt(report.LE), _fmt(report.LE_plus),
        order.code if order else None, str(cls), is_super_integral(*spectra), numeric))
    return rep


def sweep(families: Iterable[Family], max_n: int, max_m: int | None = None,
          include_u_m2: bool = False, workers: int = 1) -> SweepReport:
    """Check every legal spec in range; output is identical for any ``workers``."""
    specs = _specs(families, max_n, max_m, include_u_m2)
    if workers > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(check_instance, specs, chunksize=4))
    else:
        parts = [check_instance(s) for s in specs]
    out = SweepReport()
    for p in parts:
        out.instances_checked += p.instances_checked
        out.mismatches += p.mismatches
        out.conjecture_violations += p.conjecture_violations
        out.records += p.records
    out.normalize()
    return out


# --- conjecture and question checks ------------------------------------------

@dataclass
class ConjectureReport:
    instances_checked: int = 0
    violations: list[ConjectureViolation] = field(default_factory=list)
    # which relations hold with equality, per group: subset of {"E=LE", "LE+=LE", "E=LE+"}
    equalities: dict[GroupSpec, tuple[str, ...]] = field(default_factory=dict)

    def all_equal(self) -> list[GroupSpec]:
        return [s for s, eq in self.equalities.items() if len(eq) == 3]

    def to_json_obj(self) -> dict:
        return {
            "instances_checked": self.instances_checked,
            "violations": [v.to_json_obj() for v in self.violations],
            "equalities": [{"group": s.label, "holds": list(eq)}
                           for s, eq in self.equalities.items()],
        }


def check_conjectures(families: Iterable[Family], max_n: int,
                      max_m: int | None = None) -> ConjectureReport:
    """Test E <= LE and LE+ <= LE exactly on brute-force graphs."""
    out = ConjectureReport()
    for spec in _specs(families, max_n, max_m, False):
        report = energy_report(complete_union_shape(build_ccc(spec)))
        out.instances_checked += 1
        E, L, Q = report.E, report.LE, report.LE_plus
        if E > L:
            out.violations.append(ConjectureViolation(spec, "E-LE", f"E={_fmt(E)} > LE={_fmt(L)}"))
        if Q > L:
            out.violations.append(ConjectureViolation(spec, "LEplus-LE",
                                                      f"LE+={_fmt(Q)} > LE={_fmt(L)}"))
        eq = tuple(name for name, holds in (("E=LE", E == L), ("LE+=LE", Q == L),
                                            ("E=LE+", E == Q)) if holds)
        if eq:
            out.equalities[spec] = eq
    return out


__all__ = ["Category", "Classification", "ConjectureReport", "ConjectureViolation",
           "InstanceRecord", "Mismatch", "SweepReport", "check_conjectures",
           "check_instance", "family_specs", "sweep"]
