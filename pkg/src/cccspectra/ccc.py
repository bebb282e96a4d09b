"""Commuting conjugacy class graphs and their clique-union shapes."""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .groups import (ConjugacyClass, Family, GroupSpec, _mul, element_arrays, is_abelian,
                     mul_arrays, noncentral_classes)


class AbelianGroup(ValueError):
    """The group has no non-central classes, so its CCC graph is undefined."""


class NotUnionOfCliques(ValueError):
    def __init__(self, component: list[int]):
        self.component = component
        super().__init__(f"component {component} is not a complete graph")


@dataclass(frozen=True)
class UnionShape:
    """Disjoint union of complete graphs as ``((count, size), ...)``, sizes decreasing."""

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        sizes = [m for _, m in self.parts]
        if any(l <= 0 or m <= 0 for l, m in self.parts):
            raise ValueError(f"non-positive part in {self.parts}")
        if sizes != sorted(set(sizes), reverse=True):
            raise ValueError(f"parts not canonical: {self.parts}")

    @classmethod
    def from_sizes(cls, sizes: Iterable[int]) -> "UnionShape":
        """Canonical shape from component sizes; zero sizes are dropped."""
        counts = Counter(s for s in sizes if s != 0)
        if any(s < 0 for s in counts):
            raise ValueError(f"negative component size in {sorted(counts)}")
        return cls(tuple((counts[s], s) for s in sorted(counts, reverse=True)))

    @classmethod
    def from_parts(cls, parts: Iterable[tuple[int, int]]) -> "UnionShape":
        sizes: list[int] = []
        for l, m in parts:
            if l < 0:
                raise ValueError(f"negative count in part {(l, m)}")
            sizes += [m] * l
        return cls.from_sizes(sizes)

    @property
    def vertex_count(self) -> int:
        return sum(l * m for l, m in self.parts)

    @property
    def edge_count(self) -> int:
        return sum(l * m * (m - 1) // 2 for l, m in self.parts)

    @property
    def component_count(self) -> int:
        return sum(l for l, _ in self.parts)

    def sizes(self) -> list[int]:
        return [m for l, m in self.parts for _ in range(l)]

    def __str__(self) -> str:
        if not self.parts:
            return "empty"
        return " + ".join(f"K{m}" if l == 1 else f"{l}K{m}" for l, m in self.parts)


@dataclass(frozen=True, eq=False)
class CCCGraph:
    spec: GroupSpec
    vertices: tuple[ConjugacyClass, ...]
    adjacency: np.ndarray

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(np.triu(self.adjacency, 1)))]

    @property
    def edge_count(self) -> int:
        return int(np.triu(self.adjacency, 1).sum())

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def neighbours(self, i: int) -> list[int]:
        return [int(j) for j in np.flatnonzero(self.adjacency[i])]

    def to_adjacency_json(self) -> str:
        doc = {
            "group": self.spec.label,
            "family": self.spec.family.value,
            "params": self.spec.params(),
            "vertices": [
                {"index": i, "representative": list(c.representative),
                 "label": str(c.representative), "size": c.size}
                for i, c in enumerate(self.vertices)
            ],
            "adjacency": [self.neighbours(i) for i in range(self.vertex_count)],
        }
        return json.dumps(doc, indent=2)

    def to_edge_list(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges())


def _commute(spec: GroupSpec, p, q) -> bool:
    return _mul(spec, p, q) == _mul(spec, q, p)


def classes_commute(spec: GroupSpec, X: ConjugacyClass, Y: ConjugacyClass,
                    full_scan: bool = False) -> bool:
    """Whether some member of X commutes with some member of Y.

    By default only ``rep(X)`` is tried against every member of Y: if
    ``x'y' = y'x'`` with ``x' = g^-1 rep(X) g`` then ``rep(X)`` commutes with
    ``g y' g^-1``, which lies in Y.
    """
    if full_scan:
        return any(_commute(spec, x, y) for x in X.members for y in Y.members)
    r = X.representative
    return any(_commute(spec, r, y) for y in Y.members)


def build_ccc(spec: GroupSpec, full_scan: bool = False) -> CCCGraph:
    if is_abelian(spec):
        raise AbelianGroup(f"{spec.label} is abelian; its CCC graph has no vertices")
    verts = noncentral_classes(spec)
    k = len(verts)
    adj = np.zeros((k, k), dtype=bool)
    if full_scan:
        for i in range(k):
            for j in range(i + 1, k):
                if classes_commute(spec, verts[i], verts[j], full_scan=True):
                    adj[i, j] = adj[j, i] = True
    else:
        # one vectorised pass over the centralizer of each representative
        A, B = element_arrays(spec)
        owner = np.full(spec.order, -1)
        for i, c in enumerate(verts):
            for a, b in c.members:
                owner[a * spec.y_range + b] = i
        for i, c in enumerate(verts):
            a, b = c.representative
            la, lb = mul_arrays(spec, a, b, A, B)
            ra, rb = mul_arrays(spec, A, B, a, b)
            hit = owner[(la == ra) & (lb == rb)]
            adj[i, hit[hit >= 0]] = True
        adj |= adj.T
        np.fill_diagonal(adj, False)
    adj.setflags(write=False)
    return CCCGraph(spec, verts, adj)


def connected_components(adj: np.ndarray) -> list[list[int]]:
    k = len(adj)
    seen = [False] * k
    comps = []
    for s in range(k):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in np.flatnonzero(adj[v]):
                if not seen[w]:
                    seen[w] = True
                    stack.append(int(w))
        comps.append(sorted(comp))
    return comps


def complete_union_shape(g: CCCGraph) -> UnionShape:
    sizes = []
    for comp in connected_components(g.adjacency):
        sub = g.adjacency[np.ix_(comp, comp)]
        if int(sub.sum()) != len(comp) * (len(comp) - 1):
            raise NotUnionOfCliques(comp)
        sizes.append(len(comp))
    return UnionShape.from_sizes(sizes)


def expected_shape(spec: GroupSpec, strict: bool = True) -> UnionShape:
    """Clique-union shape predicted by the structure results for each family."""
    f, n, m = spec.family, spec.n, spec.m
    if f is Family.DIHEDRAL:
        if n % 2:
            parts = [(1, 1), (1, (n - 1) // 2)]
        elif n % 4 == 0:
            parts = [(2, 1), (1, n // 2 - 1)]
        else:
            parts = [(1, 2), (1, n // 2 - 1)]
    elif f is Family.DICYCLIC:
        parts = [(1, 2), (1, m - 1)] if m % 2 else [(2, 1), (1, m - 1)]
    elif f is Family.UMETA:
        if m == 2 and strict:
            raise AbelianGroup(f"{spec.label} is abelian (m = 2 forces y = y^-1)")
        if m % 2:
            parts = [(1, n * (m - 1) // 2), (1, n)]
        else:
            parts = [(1, n * (m - 2) // 2), (2, n)]
    elif f is Family.VGROUP:
        parts = [(2, 1), (1, 2 * n - 1)] if n % 2 else [(2, 2), (1, 2 * n - 2)]
    else:
        parts = [(1, 4), (1, 2 * n - 2)] if n % 2 else [(2, 1), (1, 2 * n - 1)]
    return UnionShape.from_parts(parts)
