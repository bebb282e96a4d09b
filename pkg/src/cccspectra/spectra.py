"""Exact spectra and energies of disjoint unions of complete graphs.

All arithmetic is on :class:`fractions.Fraction`. The floating-point
eigensolver in :func:`numeric_cross_check` is an independent oracle only and
never feeds any exact result.
"""
from __future__ import annotations

import json
import os
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .ccc import CCCGraph, UnionShape, complete_union_shape

DEFAULT_NUMERIC_CAP = 512
NUMERIC_TOLERANCE = 1e-9


class ZeroVertices(ValueError):
    pass


class MismatchBeyondTolerance(AssertionError):
    def __init__(self, matrix: str, exact: Fraction, numeric: float, deviation: float):
        self.matrix, self.exact, self.numeric, self.deviation = matrix, exact, numeric, deviation
        super().__init__(f"{matrix}: exact {format_rational(exact)} vs numeric {numeric!r} "
                         f"(deviation {deviation:.3e})")


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    if not isinstance(text, str) or "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational string: {text!r}")
    return Fraction(text)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue multiset as ``((value, multiplicity), ...)``, values decreasing."""

    entries: tuple[tuple[Fraction, int], ...]

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple]) -> "Spectrum":
        acc: Counter = Counter()
        for value, mult in pairs:
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for eigenvalue {value}")
            if mult:
                acc[Fraction(value)] += mult
        return cls(tuple((v, acc[v]) for v in sorted(acc, reverse=True)))

    @classmethod
    def from_values(cls, values: Iterable) -> "Spectrum":
        return cls.from_pairs((v, 1) for v in values)

    def __len__(self) -> int:
        return sum(k for _, k in self.entries)

    def values(self) -> list[Fraction]:
        """All eigenvalues with repetition, in decreasing order."""
        return [v for v, k in self.entries for _ in range(k)]

    def total(self) -> Fraction:
        return sum((v * k for v, k in self.entries), Fraction(0))

    def multiplicity(self, value) -> int:
        value = Fraction(value)
        return next((k for v, k in self.entries if v == value), 0)

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v, _ in self.entries)

    def __str__(self) -> str:
        return ", ".join(f"{format_rational(v)}^{k}" for v, k in self.entries)

    def to_json_obj(self) -> list[dict]:
        return [{"value": format_rational(v), "mult": k} for v, k in self.entries]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: list[dict]) -> "Spectrum":
        return cls.from_pairs((parse_rational(e["value"]), int(e["mult"])) for e in obj)

    @classmethod
    def from_json(cls, text: str) -> "Spectrum":
        return cls.from_json_obj(json.loads(text))


def spectra_of_union(shape: UnionShape) -> tuple[Spectrum, Spectrum, Spectrum]:
    """Adjacency, Laplacian and signless-Laplacian spectra of ``⊔ l K_m``."""
    A, L, Q = [], [], []
    for l, m in shape.parts:
        A += [(m - 1, l), (-1, l * (m - 1))]
        L += [(0, l), (m, l * (m - 1))]
        Q += [(2 * m - 2, l), (m - 2, l * (m - 1))]
    return Spectrum.from_pairs(A), Spectrum.from_pairs(L), Spectrum.from_pairs(Q)


def edge_count(shape: UnionShape) -> int:
    return shape.edge_count


def energy(A: Spectrum) -> Fraction:
    return sum((abs(v) * k for v, k in A.entries), Fraction(0))


def _deviation_energy(S: Spectrum, vertex_count: int, edges: int) -> Fraction:
    if vertex_count == 0:
        raise ZeroVertices("energy undefined on a graph with no vertices")
    mean = Fraction(2 * edges, vertex_count)
    return sum((abs(v - mean) * k for v, k in S.entries), Fraction(0))


def laplacian_energy(L: Spectrum, vertex_count: int, edges: int) -> Fraction:
    return _deviation_energy(L, vertex_count, edges)


def signless_laplacian_energy(Q: Spectrum, vertex_count: int, edges: int) -> Fraction:
    return _deviation_energy(Q, vertex_count, edges)


def is_super_integral(A: Spectrum, L: Spectrum, Q: Spectrum) -> bool:
    return A.is_integral() and L.is_integral() and Q.is_integral()


@dataclass(frozen=True)
class EnergyReport:
    vertex_count: int
    edge_count: int
    E: Fraction
    LE: Fraction
    LE_plus: Fraction

    @property
    def mean_degree(self) -> Fraction:
        return Fraction(2 * self.edge_count, self.vertex_count)

    def to_json_obj(self) -> dict:
        return {
            "vertices": self.vertex_count,
            "edges": self.edge_count,
            "mean_degree": format_rational(self.mean_degree),
            "E": format_rational(self.E),
            "LE": format_rational(self.LE),
            "LE_plus": format_rational(self.LE_plus),
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "EnergyReport":
        return cls(int(obj["vertices"]), int(obj["edges"]), parse_rational(obj["E"]),
                   parse_rational(obj["LE"]), parse_rational(obj["LE_plus"]))


def energy_report(shape: UnionShape) -> EnergyReport:
    A, L, Q = spectra_of_union(shape)
    V, e = shape.vertex_count, shape.edge_count
    return EnergyReport(V, e, energy(A), laplacian_energy(L, V, e),
                        signless_laplacian_energy(Q, V, e))


# --- floating-point oracle ---------------------------------------------------

def numeric_cap() -> int:
    raw = os.environ.get("CCC_MAX_NUMERIC_VERTICES")
    return int(raw) if raw else DEFAULT_NUMERIC_CAP


@dataclass(frozen=True)
class CrossCheckReport:
    vertex_count: int
    max_deviation: float
    per_matrix: dict


def graph_matrices(g: CCCGraph) -> dict[str, np.ndarray]:
    A = g.adjacency.astype(float)
    D = np.diag(A.sum(axis=1))
    return {"A": A, "L": D - A, "Q": D + A}


def numeric_cross_check(g: CCCGraph, exact: tuple[Spectrum, Spectrum, Spectrum] | None = None,
                        tol: float = NUMERIC_TOLERANCE, cap: int | None = None) -> CrossCheckReport:
    """Compare ``exact`` (A, L, Q) against ``numpy.linalg.eigvalsh`` on the graph's matrices.

    Both lists are sorted descending and paired by position. Without
    ``exact`` the spectra are derived from the graph's clique-union shape.
    """
    if exact is None:
        exact = spectra_of_union(complete_union_shape(g))
    cap = numeric_cap() if cap is None else cap
    if g.vertex_count > cap:
        raise ValueError(f"{g.vertex_count} vertices exceeds numeric cap {cap}")
    per = {}
    worst = 0.0
    for (name, M), S in zip(graph_matrices(g).items(), exact):
        got = np.sort(np.linalg.eigvalsh(M))[::-1]
        want = S.values()
        if len(want) != len(got):
            raise MismatchBeyondTolerance(name, Fraction(len(want)), float(len(got)), float("inf"))
        dev = 0.0
        for w, x in zip(want, got):
            d = abs(float(w) - float(x))
            if d > tol:
                raise MismatchBeyondTolerance(name, w, float(x), d)
            dev = max(dev, d)
        per[name] = dev
        worst = max(worst, dev)
    return CrossCheckReport(g.vertex_count, worst, per)
