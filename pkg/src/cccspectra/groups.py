"""Normal-form arithmetic for the five metacyclic-type families and brute-force
centers and conjugacy classes.

Every element is stored as an exponent pair ``(a, b)`` standing for
``x**a * y**b``. Products are reduced with a per-family commutation law
``y**b x**c = x**c' y**b'`` so multiplication is O(1).
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

import numpy as np


class Family(enum.Enum):
    DIHEDRAL = "d2n"
    DICYCLIC = "q4m"
    UMETA = "u"
    VGROUP = "v8n"
    SEMIDIHEDRAL = "sd8n"

    @classmethod
    def parse(cls, text: str) -> "Family":
        key = text.strip().lower()
        for fam in cls:
            if key in (fam.value, fam.name.lower()):
                return fam
        raise ValueError(f"unknown family {text!r}; expected one of "
                         f"{', '.join(f.value for f in cls)}")


class InvalidParameters(ValueError):
    """Raised when a GroupSpec is built with parameters outside the family's range."""


class NonCanonicalElement(ValueError):
    pass


class Element(NamedTuple):
    a: int
    b: int

    def __str__(self) -> str:
        return _word(self.a, self.b)


def _word(a: int, b: int) -> str:
    if a == 0 and b == 0:
        return "1"
    parts = []
    if a:
        parts.append("x" if a == 1 else f"x^{a}")
    if b:
        parts.append("y" if b == 1 else f"y^{b}")
    return "".join(parts)


IDENTITY = Element(0, 0)

# (lower bound for n, lower bound for m); None means the parameter is absent
_BOUNDS = {
    Family.DIHEDRAL: (3, None),
    Family.DICYCLIC: (None, 2),
    Family.UMETA: (2, 2),
    Family.VGROUP: (2, None),
    Family.SEMIDIHEDRAL: (2, None),
}


@dataclass(frozen=True)
class GroupSpec:
    family: Family
    n: int | None = None
    m: int | None = None

    def __post_init__(self):
        lo_n, lo_m = _BOUNDS[self.family]
        for name, lo in (("n", lo_n), ("m", lo_m)):
            value = getattr(self, name)
            if lo is None:
                if value is not None:
                    raise InvalidParameters(f"{self.family.value} takes no parameter {name}")
                continue
            if value is None:
                raise InvalidParameters(f"{self.family.value} requires parameter {name}")
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidParameters(f"{name} must be an integer, got {value!r}")
            if value < lo:
                raise InvalidParameters(f"{self.family.value} requires {name} >= {lo}, got {value}")

    @classmethod
    def dihedral(cls, n: int) -> "GroupSpec":
        return cls(Family.DIHEDRAL, n=n)

    @classmethod
    def dicyclic(cls, m: int) -> "GroupSpec":
        return cls(Family.DICYCLIC, m=m)

    @classmethod
    def umeta(cls, n: int, m: int) -> "GroupSpec":
        return cls(Family.UMETA, n=n, m=m)

    @classmethod
    def vgroup(cls, n: int) -> "GroupSpec":
        return cls(Family.VGROUP, n=n)

    @classmethod
    def semidihedral(cls, n: int) -> "GroupSpec":
        return cls(Family.SEMIDIHEDRAL, n=n)

    @property
    def order(self) -> int:
        f = self.family
        if f is Family.DIHEDRAL:
            return 2 * self.n
        if f is Family.DICYCLIC:
            return 4 * self.m
        if f is Family.UMETA:
            return 2 * self.n * self.m
        return 8 * self.n

    @property
    def x_order(self) -> int:
        """Modulus for the x-exponent of a canonical element."""
        f = self.family
        if f is Family.DIHEDRAL:
            return self.n
        if f is Family.DICYCLIC:
            return 2 * self.m
        if f is Family.SEMIDIHEDRAL:
            return 4 * self.n
        return 2 * self.n

    @property
    def y_range(self) -> int:
        """Number of distinct y-exponents in canonical form."""
        f = self.family
        if f is Family.UMETA:
            return self.m
        if f is Family.VGROUP:
            return 4
        return 2

    @property
    def label(self) -> str:
        f = self.family
        if f is Family.DIHEDRAL:
            return f"D{self.order}"
        if f is Family.DICYCLIC:
            return f"Q{self.order}"
        if f is Family.UMETA:
            return f"U({self.n},{self.m})"
        if f is Family.VGROUP:
            return f"V{self.order}"
        return f"SD{self.order}"

    def params(self) -> dict:
        return {k: v for k, v in (("n", self.n), ("m", self.m)) if v is not None}

    def sort_key(self) -> tuple:
        return (list(Family).index(self.family), self.n or 0, self.m or 0)

    def __str__(self) -> str:
        return self.label


def is_canonical(spec: GroupSpec, p) -> bool:
    a, b = p
    return (isinstance(a, int) and isinstance(b, int)
            and 0 <= a < spec.x_order and 0 <= b < spec.y_range)


def _check(spec: GroupSpec, p) -> None:
    if not is_canonical(spec, p):
        raise NonCanonicalElement(f"{tuple(p)} is not a canonical element of {spec.label}")


def _mul(spec: GroupSpec, p, q) -> Element:
    a, b = p
    c, d = q
    f = spec.family
    N = spec.x_order
    if f is Family.DIHEDRAL:
        return Element((a + (-c if b else c)) % N, (b + d) & 1)
    if f is Family.DICYCLIC:
        a2 = a + (-c if b else c)
        b2 = b + d
        if b2 >= 2:
            # y^2 = x^m
            a2 += spec.m
            b2 -= 2
        return Element(a2 % N, b2)
    if f is Family.UMETA:
        return Element((a + c) % N, ((-b if c & 1 else b) + d) % spec.m)
    if f is Family.SEMIDIHEDRAL:
        return Element((a + (c * (2 * spec.n - 1) if b else c)) % N, (b + d) & 1)
    # VGROUP: y x^c = x^-c y^(3 if c odd else 1), so y^b x^c = x^(c(-1)^b) y^(b t)
    t = 3 if c & 1 else 1
    return Element((a + (-c if b & 1 else c)) % N, (b * t + d) % 4)


def mul_arrays(spec: GroupSpec, a, b, c, d):
    """Vectorised ``_mul`` on exponent arrays (numpy broadcasting applies)."""
    a, b, c, d = (np.asarray(v, dtype=np.int64) for v in (a, b, c, d))
    f = spec.family
    N = spec.x_order
    if f is Family.DIHEDRAL:
        return (a + np.where(b == 1, -c, c)) % N, (b + d) & 1
    if f is Family.DICYCLIC:
        b2 = b + d
        carry = b2 >= 2
        return (a + np.where(b == 1, -c, c) + spec.m * carry) % N, b2 - 2 * carry
    if f is Family.UMETA:
        return (a + c) % N, (np.where(c & 1, -b, b) + d) % spec.m
    if f is Family.SEMIDIHEDRAL:
        return (a + np.where(b == 1, c * (2 * spec.n - 1), c)) % N, (b + d) & 1
    t = np.where(c & 1, 3, 1)
    return (a + np.where(b & 1, -c, c)) % N, (b * t + d) % 4


def element_arrays(spec: GroupSpec) -> tuple[np.ndarray, np.ndarray]:
    """Exponent arrays in the same order as ``elements(spec)``."""
    a, b = np.divmod(np.arange(spec.order), spec.y_range)
    return a, b


def multiply(spec: GroupSpec, p, q) -> Element:
    """Canonical form of ``x^p.a y^p.b * x^q.a y^q.b``."""
    _check(spec, p)
    _check(spec, q)
    return _mul(spec, p, q)


def _y_inverse(spec: GroupSpec, b: int) -> Element:
    if b == 0:
        return IDENTITY
    f = spec.family
    if f is Family.DICYCLIC:
        # y^-1 = y^3 = x^m y
        return Element(spec.m, 1)
    return Element(0, (-b) % spec.y_range)


def _inv(spec: GroupSpec, p) -> Element:
    a, b = p
    # (x^a y^b)^-1 = y^-b x^-a
    return _mul(spec, _y_inverse(spec, b), Element((-a) % spec.x_order, 0))


def inverse(spec: GroupSpec, p) -> Element:
    _check(spec, p)
    return _inv(spec, p)


def power(spec: GroupSpec, p, k: int) -> Element:
    if k < 0:
        p, k = _inv(spec, p), -k
    out, base = IDENTITY, Element(*p)
    while k:
        if k & 1:
            out = _mul(spec, out, base)
        base = _mul(spec, base, base)
        k >>= 1
    return out


@lru_cache(maxsize=256)
def elements(spec: GroupSpec) -> tuple[Element, ...]:
    """All canonical elements in lexicographic order."""
    return tuple(Element(a, b) for a in range(spec.x_order) for b in range(spec.y_range))


def generators(spec: GroupSpec) -> tuple[Element, Element]:
    return Element(1, 0), Element(0, 1)


# --- presentation validation -------------------------------------------------

CAYLEY_LIMIT = 200
ASSOC_SAMPLES = 20000


@dataclass
class PresentationReport:
    spec: GroupSpec
    order: int
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _relations(spec: GroupSpec):
    """Defining relations as (name, lhs, rhs) triples of canonical elements."""
    x, y = generators(spec)
    mul = lambda *ps: _reduce(spec, ps)
    pw = lambda p, k: power(spec, p, k)
    xi, yi = _inv(spec, x), _inv(spec, y)
    f = spec.family
    if f is Family.DIHEDRAL:
        n = spec.n
        return [("x^n = 1", pw(x, n), IDENTITY), ("y^2 = 1", pw(y, 2), IDENTITY),
                ("yxy = x^-1", mul(y, x, y), xi)]
    if f is Family.DICYCLIC:
        m = spec.m
        return [("x^2m = 1", pw(x, 2 * m), IDENTITY), ("x^m = y^2", pw(x, m), pw(y, 2)),
                ("y^-1xy = x^-1", mul(yi, x, y), xi)]
    if f is Family.UMETA:
        n, m = spec.n, spec.m
        return [("x^2n = 1", pw(x, 2 * n), IDENTITY), ("y^m = 1", pw(y, m), IDENTITY),
                ("x^-1yx = y^-1", mul(xi, y, x), yi)]
    if f is Family.VGROUP:
        n = spec.n
        return [("x^2n = 1", pw(x, 2 * n), IDENTITY), ("y^4 = 1", pw(y, 4), IDENTITY),
                ("yx = x^-1y^-1", mul(y, x), mul(xi, yi)),
                ("y^-1x = x^-1y", mul(yi, x), mul(xi, y))]
    n = spec.n
    return [("x^4n = 1", pw(x, 4 * n), IDENTITY), ("y^2 = 1", pw(y, 2), IDENTITY),
            ("yxy = x^(2n-1)", mul(y, x, y), pw(x, 2 * n - 1))]


def _reduce(spec: GroupSpec, ps) -> Element:
    out = IDENTITY
    for p in ps:
        out = _mul(spec, out, p)
    return out


def validate_presentation(spec: GroupSpec, seed: int = 0) -> PresentationReport:
    """Check the normal-form law against the family's presentation.

    Confirms element count, closure and associativity (exhaustive up to
    ``CAYLEY_LIMIT`` elements, sampled above), that every defining relation
    holds, that ``x`` and ``y`` generate everything, and that inverses exist.
    Violations are collected rather than raised.
    """
    els = elements(spec)
    rep = PresentationReport(spec, len(els))
    if len(els) != spec.order or len(set(els)) != spec.order:
        rep.violations.append(f"element count {len(set(els))} != order {spec.order}")
    canon = set(els)

    if spec.order <= CAYLEY_LIMIT:
        index = {g: i for i, g in enumerate(els)}
        table = []
        for p in els:
            row = []
            for q in els:
                r = _mul(spec, p, q)
                if r not in canon:
                    rep.violations.append(f"closure: {p}*{q} -> {r}")
                    return rep
                row.append(index[r])
            table.append(row)
        t = np.asarray(table, dtype=np.int64)
        # t[t][i, j, k] = (ij)k and t[:, t][i, j, k] = i(jk)
        bad = np.argwhere(t[t] != t[:, t])
        if len(bad):
            i, j, k = bad[0]
            rep.violations.append(f"associativity fails on {els[i]}, {els[j]}, {els[k]}")
    else:
        rng = random.Random(seed)
        for _ in range(ASSOC_SAMPLES):
            p, q, r = rng.choice(els), rng.choice(els), rng.choice(els)
            pq = _mul(spec, p, q)
            if pq not in canon:
                rep.violations.append(f"closure: {p}*{q} -> {pq}")
                break
            if _mul(spec, pq, r) != _mul(spec, p, _mul(spec, q, r)):
                rep.violations.append(f"associativity fails on {p}, {q}, {r}")
                break

    for g in els:
        if _mul(spec, IDENTITY, g) != g or _mul(spec, g, IDENTITY) != g:
            rep.violations.append(f"identity law fails at {g}")
            break
        h = _inv(spec, g)
        if _mul(spec, g, h) != IDENTITY or _mul(spec, h, g) != IDENTITY:
            rep.violations.append(f"no two-sided inverse for {g}")
            break

    for name, lhs, rhs in _relations(spec):
        if lhs != rhs:
            rep.violations.append(f"relation {name} fails: {lhs} != {rhs}")

    reached = {IDENTITY}
    frontier = [IDENTITY]
    gens = generators(spec)
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = _mul(spec, g, s)
                if h not in reached:
                    reached.add(h)
                    nxt.append(h)
        frontier = nxt
    if len(reached) != spec.order:
        rep.violations.append(f"<x, y> has {len(reached)} elements, expected {spec.order}")
    return rep


# --- centers and classes -----------------------------------------------------

@dataclass(frozen=True)
class ConjugacyClass:
    representative: Element
    members: frozenset

    @property
    def size(self) -> int:
        return len(self.members)

    def __str__(self) -> str:
        return f"{self.representative}^G"


@lru_cache(maxsize=256)
def center(spec: GroupSpec) -> frozenset:
    els = elements(spec)
    gens = generators(spec)
    # commuting with both generators is equivalent to commuting with everything
    return frozenset(g for g in els if all(_mul(spec, g, s) == _mul(spec, s, g) for s in gens))


def center_brute(spec: GroupSpec) -> frozenset:
    els = elements(spec)
    return frozenset(g for g in els if all(_mul(spec, g, h) == _mul(spec, h, g) for h in els))


def is_abelian(spec: GroupSpec) -> bool:
    return len(center(spec)) == spec.order


@lru_cache(maxsize=256)
def conjugacy_classes(spec: GroupSpec) -> tuple[ConjugacyClass, ...]:
    """Partition of the group into conjugation orbits, sorted by smallest member.

    Orbits are closed under conjugation by the two generators, which is the
    same as closing under the whole group.
    """
    gens = [(s, _inv(spec, s)) for s in generators(spec)]
    seen: set = set()
    out = []
    for g in elements(spec):  # lexicographic, so g is the smallest member of its orbit
        if g in seen:
            continue
        orbit = {g}
        stack = [g]
        while stack:
            h = stack.pop()
            for s, si in gens:
                c = _mul(spec, _mul(spec, si, h), s)
                if c not in orbit:
                    orbit.add(c)
                    stack.append(c)
        seen |= orbit
        out.append(ConjugacyClass(g, frozenset(orbit)))
    return tuple(out)


def conjugacy_classes_brute(spec: GroupSpec) -> tuple[ConjugacyClass, ...]:
    """Same partition, conjugating by every element."""
    els = elements(spec)
    invs = [(h, _inv(spec, h)) for h in els]
    seen: set = set()
    out = []
    for g in els:
        if g in seen:
            continue
        orbit = frozenset(_mul(spec, _mul(spec, hi, g), h) for h, hi in invs)
        seen |= orbit
        out.append(ConjugacyClass(g, orbit))
    return tuple(out)


def noncentral_classes(spec: GroupSpec) -> tuple[ConjugacyClass, ...]:
    z = center(spec)
    return tuple(c for c in conjugacy_classes(spec) if c.representative not in z)
