"""Published closed-form spectra, energies, orderings and hyperenergetic
classifications for the CCC graphs of the five families.

Everything here is a formula table evaluated from the group parameters
alone; nothing builds a group or a graph. Case branches are guarded
top-down in the order they are stated, small-parameter exceptions first.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, fields
from fractions import Fraction as F

from .groups import Family, GroupSpec
from .spectra import EnergyReport, Spectrum


class UnsupportedParams(ValueError):
    """Parameters outside every case covered by the published tables."""


class Matrix(enum.Enum):
    A = "A"
    L = "L"
    Q = "Q"


def _half(x: int) -> int:
    if x % 2:
        raise ArithmeticError(f"expected an even value, got {x}")
    return x // 2


def _strict_u(spec: GroupSpec, strict: bool) -> None:
    if spec.family is Family.UMETA and spec.m == 2 and strict:
        raise UnsupportedParams(
            f"{spec.label}: m = 2 makes the group abelian; the m = 2 table rows cannot be checked")


# --- spectra -----------------------------------------------------------------

def _dihedral_spectrum(n: int, which: Matrix):
    if n % 2:
        h = _half(n - 3)
        return {
            Matrix.A: [(-1, h), (0, 1), (h, 1)],
            Matrix.L: [(0, 2), (F(n - 1, 2), h)],
            Matrix.Q: [(0, 1), (n - 3, 1), (F(n - 5, 2), h)],
        }[which]
    k = n // 2
    if k % 2 == 0:
        return {
            Matrix.A: [(-1, k - 2), (0, 2), (k - 2, 1)],
            Matrix.L: [(0, 3), (k - 1, k - 2)],
            Matrix.Q: [(0, 2), (n - 4, 1), (k - 3, k - 2)],
        }[which]
    return {
        Matrix.A: [(-1, k - 1), (1, 1), (k - 2, 1)],
        Matrix.L: [(0, 2), (2, 1), (k - 1, k - 2)],
        Matrix.Q: [(2, 1), (0, 1), (n - 4, 1), (k - 3, k - 2)],
    }[which]


def _dicyclic_spectrum(m: int, which: Matrix):
    if m % 2:
        return {
            Matrix.A: [(-1, m - 1), (1, 1), (m - 2, 1)],
            Matrix.L: [(0, 2), (2, 1), (m - 1, m - 2)],
            Matrix.Q: [(2, 1), (0, 1), (2 * m - 4, 1), (m - 3, m - 2)],
        }[which]
    return {
        Matrix.A: [(-1, m - 2), (0, 2), (m - 2, 1)],
        Matrix.L: [(0, 3), (m - 1, m - 2)],
        Matrix.Q: [(0, 2), (2 * m - 4, 1), (m - 3, m - 2)],
    }[which]


def _umeta_spectrum(n: int, m: int, which: Matrix):
    if m % 2:
        big = n * (m - 1)
        return {
            Matrix.A: [(-1, _half(n * (m + 1) - 4)), (F(big - 2, 2), 1), (n - 1, 1)],
            Matrix.L: [(0, 2), (F(big, 2), _half(big - 2)), (n, n - 1)],
            Matrix.Q: [(big - 2, 1), (F(big - 4, 2), _half(big - 2)), (2 * n - 2, 1),
                       (n - 2, n - 1)],
        }[which]
    big = n * (m - 2)
    return {
        Matrix.A: [(-1, _half(n * (m + 2) - 6)), (F(big - 2, 2), 1), (n - 1, 2)],
        Matrix.L: [(0, 3), (F(big, 2), _half(big - 2)), (n, 2 * n - 2)],
        Matrix.Q: [(big - 2, 1), (F(big - 4, 2), _half(big - 2)), (2 * n - 2, 2),
                   (n - 2, 2 * n - 2)],
    }[which]


def _vgroup_spectrum(n: int, which: Matrix):
    if n % 2:
        return {
            Matrix.A: [(-1, 2 * n - 2), (0, 2), (2 * n - 2, 1)],
            Matrix.L: [(0, 3), (2 * n - 1, 2 * n - 2)],
            Matrix.Q: [(0, 2), (4 * n - 4, 1), (2 * n - 3, 2 * n - 2)],
        }[which]
    return {
        Matrix.A: [(-1, 2 * n - 1), (1, 2), (2 * n - 3, 1)],
        Matrix.L: [(0, 3), (2, 2), (2 * n - 2, 2 * n - 3)],
        Matrix.Q: [(2, 2), (0, 2), (4 * n - 6, 1), (2 * n - 4, 2 * n - 3)],
    }[which]


def _semidihedral_spectrum(n: int, which: Matrix):
    if n % 2:
        return {
            Matrix.A: [(-1, 2 * n), (3, 1), (2 * n - 3, 1)],
            Matrix.L: [(0, 2), (4, 3), (2 * n - 2, 2 * n - 3)],
            Matrix.Q: [(6, 1), (2, 3), (4 * n - 6, 1), (2 * n - 4, 2 * n - 3)],
        }[which]
    return {
        Matrix.A: [(-1, 2 * n - 2), (0, 2), (2 * n - 2, 1)],
        Matrix.L: [(0, 3), (2 * n - 1, 2 * n - 2)],
        Matrix.Q: [(0, 2), (4 * n - 4, 1), (2 * n - 3, 2 * n - 2)],
    }[which]


def _merge(pairs) -> Spectrum:
    # Degenerate rows (e.g. U(n,2)) carry a -1 multiplicity that cancels on merge.
    acc: dict = {}
    for v, k in pairs:
        acc[F(v)] = acc.get(F(v), 0) + k
    if any(k < 0 for k in acc.values()):
        raise ArithmeticError(f"negative net multiplicity in {sorted(acc.items())}")
    return Spectrum.from_pairs(acc.items())


def closed_spectrum(spec: GroupSpec, which: Matrix | str, strict: bool = True) -> Spectrum:
    which = Matrix(which) if isinstance(which, str) else which
    _strict_u(spec, strict)
    f, n, m = spec.family, spec.n, spec.m
    if f is Family.DIHEDRAL:
        pairs = _dihedral_spectrum(n, which)
    elif f is Family.DICYCLIC:
        pairs = _dicyclic_spectrum(m, which)
    elif f is Family.UMETA:
        pairs = _umeta_spectrum(n, m, which)
    elif f is Family.VGROUP:
        pairs = _vgroup_spectrum(n, which)
    else:
        pairs = _semidihedral_spectrum(n, which)
    return _merge(pairs)


def closed_spectra(spec: GroupSpec, strict: bool = True) -> tuple[Spectrum, Spectrum, Spectrum]:
    return tuple(closed_spectrum(spec, w, strict) for w in Matrix)


# --- vertex/edge counts and energies -------------------------------------------

def closed_counts(spec: GroupSpec, strict: bool = True) -> tuple[int, int]:
    """``(|V|, |e|)`` as stated alongside each energy computation."""
    _strict_u(spec, strict)
    f, n, m = spec.family, spec.n, spec.m
    if f is Family.DIHEDRAL:
        if n % 2:
            V, e8 = F(n + 1, 2), F((n - 1) * (n - 3), 8)
        elif n % 4 == 0:
            V, e8 = F(n, 2) + 1, F((n - 2) * (n - 4), 8)
        else:
            V, e8 = F(n, 2) + 1, F((n - 2) * (n - 4) + 8, 8)
        return int(V), int(e8)
    if f is Family.DICYCLIC:
        if m % 2:
            return m + 1, ((m - 1) * (m - 2) + 2) // 2
        return m + 1, (m - 1) * (m - 2) // 2
    if f is Family.UMETA:
        if m % 2:
            V = F(n * (m + 1), 2)
            e = F(n * n * (m - 1) ** 2 - 2 * n * (m - 2 * n + 1), 8)
        else:
            V = F(n * (m + 2), 2)
            e = F(n * n * (m - 2) ** 2 - 2 * n * (m - 4 * n + 2), 8)
        return int(V), int(e)
    if f is Family.VGROUP:
        if n % 2:
            return 2 * n + 1, (2 * n - 1) * (2 * n - 2) // 2
        return 2 * n + 2, ((2 * n - 2) * (2 * n - 3) + 4) // 2
    if n % 2:
        return 2 * n + 2, ((2 * n - 2) * (2 * n - 3) + 12) // 2
    return 2 * n + 1, (2 * n - 1) * (2 * n - 2) // 2


def _dihedral_energies(n: int):
    if n % 2:
        E = n - 3
    elif n % 4 == 0:
        E = n - 4
    else:
        E = n - 2

    if n % 2:
        LE = F(2 * (n - 1) * (n - 3), n + 1)
    elif n % 4 == 0:
        LE = F(3 * (n - 2) * (n - 4), n + 2)
    elif n == 6:
        LE = F(4)
    else:  # n even, n/2 odd, n >= 10
        LE = F((n - 4) * (3 * n - 10), n + 2)

    if n % 2:
        LEp = F((n - 3) * (n + 3), n + 1)
    elif n in (4, 8):
        LEp = F((n - 4) * (n + 6), n + 2)
    elif n % 4 == 0:  # n >= 12
        LEp = F(2 * (n - 2) * (n - 4), n + 2)
    elif n == 6:
        LEp = F(4)
    elif n == 10:
        LEp = F(22, 3)
    else:  # n even, n/2 odd, n >= 14
        LEp = F(2 * (n - 2) * (n - 6), n + 2)
    return F(E), LE, LEp


def _dicyclic_energies(m: int):
    E = 2 * m - 2 if m % 2 else 2 * m - 4

    if m == 3:
        LE = F(4)
    elif m % 2:
        LE = F(2 * (m - 2) * (3 * m - 5), m + 1)
    else:
        LE = F(6 * (m - 1) * (m - 2), m + 1)

    if m == 3:
        LEp = F(4)
    elif m == 5:
        LEp = F(22, 3)
    elif m % 2:  # m >= 7
        LEp = F(4 * (m - 1) * (m - 3), m + 1)
    elif m in (2, 4):
        LEp = F(2 * (m - 2) * (m + 3), m + 1)
    else:  # m even, m >= 6
        LEp = F(4 * (m - 1) * (m - 2), m + 1)
    return F(E), LE, LEp


def _umeta_energies(n: int, m: int):
    if m % 2:
        E = n * (m + 1) - 4
    elif m == 2:
        E = 4 * (n - 1)
    else:
        E = n * (m + 2) - 6

    if m == 3:
        LE = F(4 * (n - 1))
    elif m == 5:
        LE = F(2 * (2 * n - 1) * (n + 3), 3)
    elif m % 2:  # m >= 7
        LE = F(m * m * n * n - 4 * m * n * n + m * m * n + 3 * n * n - 2 * m * n - 2 * m + 5 * n - 2,
               m + 1)
    elif m == 2:
        LE = F(4 * (n - 1))
    elif m == 4:
        LE = F(6 * (n - 1))
    else:  # m even, m >= 6
        LE = F(2 * m * m * n * n - 12 * m * n * n + m * m * n + 16 * n * n - 4 * m * n - 2 * m
               + 12 * n - 4, m + 2)

    if m == 3:
        LEp = F(4 * (n - 1))
    elif m == 5 and n == 2:
        LEp = F(22, 3)
    elif m == 5:
        LEp = F(2 * (2 * n + 3) * (n - 1), 3)
    elif m % 2:  # m >= 7
        LEp = F(n * n * (m - 1) * (m - 3), m + 1)
    elif m == 2:
        LEp = F(4 * (n - 1))
    elif m == 4:
        LEp = F(6 * (n - 1))
    elif m == 6:
        LEp = F(2 * (n + 2) * (n - 1))
    else:  # m even, m >= 8
        LEp = F(2 * n * n * (m - 2) * (m - 4), m + 2)
    return F(E), LE, LEp


def _vgroup_energies(n: int):
    if n % 2:
        return (F(4 * n - 4), F(6 * (2 * n - 1) * (2 * n - 2), 2 * n + 1),
                F(4 * (2 * n - 1) * (2 * n - 2), 2 * n + 1))
    if n == 2:
        return F(6), F(6), F(6)
    return F(4 * n - 2), F(2 * (2 * n - 3) * (5 * n - 7), n + 1), F(16 * (n - 1) * (n - 2), n + 1)


def _semidihedral_energies(n: int):
    E = 4 * n if n % 2 else 4 * n - 4

    if n == 3:
        LE = F(12)
    elif n % 2:
        LE = F(2 * (2 * n - 3) * (5 * n - 11), n + 1)
    else:
        LE = F(6 * (2 * n - 1) * (2 * n - 2), 2 * n + 1)

    if n == 3:
        LEp = F(12)
    elif n == 5:
        LEp = F(22)
    elif n % 2:  # n >= 7
        LEp = F(16 * (n - 1) * (n - 3), n + 1)
    elif n == 2:
        LEp = F(28, 5)
    else:  # n even, n >= 4
        LEp = F(4 * (2 * n - 1) * (2 * n - 2), 2 * n + 1)
    return F(E), LE, LEp


def closed_energies(spec: GroupSpec, strict: bool = True) -> EnergyReport:
    _strict_u(spec, strict)
    f, n, m = spec.family, spec.n, spec.m
    if f is Family.DIHEDRAL:
        E, LE, LEp = _dihedral_energies(n)
    elif f is Family.DICYCLIC:
        E, LE, LEp = _dicyclic_energies(m)
    elif f is Family.UMETA:
        E, LE, LEp = _umeta_energies(n, m)
    elif f is Family.VGROUP:
        E, LE, LEp = _vgroup_energies(n)
    else:
        E, LE, LEp = _semidihedral_energies(n)
    V, e = closed_counts(spec, strict)
    return EnergyReport(V, e, E, LE, LEp)


# --- orderings -----------------------------------------------------------------

class EnergyOrdering(enum.Enum):
    ALL_EQUAL = "E = LE+ = LE"
    Q_LT_E_LT_L = "LE+ < E < LE"
    E_LT_Q_LT_L = "E < LE+ < LE"
    E_EQ_Q_LT_L = "E = LE+ < LE"
    E_LT_Q_EQ_L = "E < LE+ = LE"

    @property
    def code(self) -> str:
        return {
            "ALL_EQUAL": "AllEqual",
            "Q_LT_E_LT_L": "QltEltL",
            "E_LT_Q_LT_L": "EltQltL",
            "E_EQ_Q_LT_L": "EeqQltL",
            "E_LT_Q_EQ_L": "EltQeqL",
        }[self.name]


def ordering_of(report: EnergyReport) -> EnergyOrdering | None:
    """Which of the five patterns the three energies realise, or None if none does."""
    E, L, Q = report.E, report.LE, report.LE_plus
    if E == Q == L:
        return EnergyOrdering.ALL_EQUAL
    if Q < E < L:
        return EnergyOrdering.Q_LT_E_LT_L
    if E < Q < L:
        return EnergyOrdering.E_LT_Q_LT_L
    if E == Q < L:
        return EnergyOrdering.E_EQ_Q_LT_L
    if E < Q == L:
        return EnergyOrdering.E_LT_Q_EQ_L
    return None


def energy_ordering(spec: GroupSpec, strict: bool = True) -> EnergyOrdering:
    _strict_u(spec, strict)
    f, n, m = spec.family, spec.n, spec.m
    O = EnergyOrdering
    if f is Family.DIHEDRAL:
        if n in (3, 4, 6):
            return O.ALL_EQUAL
        if n == 5:
            return O.E_LT_Q_EQ_L
        if n == 10:
            return O.Q_LT_E_LT_L
        return O.E_LT_Q_LT_L  # n >= 7, n != 10
    if f is Family.DICYCLIC:
        if m in (2, 3):
            return O.ALL_EQUAL
        if m == 5:
            return O.Q_LT_E_LT_L
        if m == 7:
            return O.E_EQ_Q_LT_L
        return O.E_LT_Q_LT_L  # m = 4, 6 or m >= 8
    if f is Family.UMETA:
        if m in (2, 3, 4):
            return O.ALL_EQUAL
        if (m == 5 and n in (2, 3)) or (m == 6 and n == 2):
            return O.Q_LT_E_LT_L
        if (m == 5 and n >= 4) or (m >= 6 and n >= 3) or (m >= 8 and n >= 2):
            return O.E_LT_Q_LT_L
        if m == 7 and n == 2:
            return O.E_EQ_Q_LT_L
        raise UnsupportedParams(f"{spec.label} is not covered by the ordering cases")
    if f is Family.VGROUP:
        return O.ALL_EQUAL if n == 2 else O.E_LT_Q_LT_L
    return O.ALL_EQUAL if n == 3 else O.E_LT_Q_LT_L


# --- hyperenergetic / borderenergetic classification ----------------------------

@dataclass(frozen=True)
class Classification:
    hyper_e: bool = False
    border_e: bool = False
    hyper_l: bool = False
    border_l: bool = False
    hyper_q: bool = False
    border_q: bool = False

    def __post_init__(self):
        for x in "elq":
            if getattr(self, f"hyper_{x}") and getattr(self, f"border_{x}"):
                raise ValueError(f"hyper_{x} and border_{x} are exclusive")

    def flags(self) -> list[str]:
        return [f.name for f in fields(self) if getattr(self, f.name)]

    def to_json_obj(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def __str__(self) -> str:
        names = {"hyper_e": "hyperE", "border_e": "borderE", "hyper_l": "hyperL",
                 "border_l": "borderL", "hyper_q": "hyperQ", "border_q": "borderQ"}
        return ",".join(names[f] for f in self.flags()) or "none"


NONE = Classification()
HYPER_L = Classification(hyper_l=True)
BORDER_L = Classification(border_l=True)
HYPER_LQ = Classification(hyper_l=True, hyper_q=True)


def complete_graph_energy(vertex_count: int) -> F:
    """E = LE = LE+ of K_k."""
    return F(2 * (vertex_count - 1))


def classify_from_energies(report: EnergyReport) -> Classification:
    k = complete_graph_energy(report.vertex_count)
    E, L, Q = report.E, report.LE, report.LE_plus
    return Classification(E > k, E == k, L > k, L == k, Q > k, Q == k)


def classify_closed(spec: GroupSpec, strict: bool = True) -> Classification:
    """Flags exactly as stated in the published per-family classification."""
    _strict_u(spec, strict)
    f, n, m = spec.family, spec.n, spec.m
    if f is Family.DIHEDRAL:
        if n % 2 or n in (4, 6):
            return NONE
        if n in (8, 10, 12, 14):
            return HYPER_L
        return HYPER_LQ  # n even, n >= 16
    if f is Family.DICYCLIC:
        if m in (2, 3, 4):
            return NONE
        if m == 5:
            return BORDER_L
        if m in (6, 7):
            return HYPER_L
        return HYPER_LQ  # m >= 8
    if f is Family.UMETA:
        if m in (2, 3, 4) or (m == 6 and n == 2):
            return NONE
        if m == 5 and n == 2:
            return BORDER_L
        if (m, n) in ((5, 3), (6, 3), (7, 2)):
            return HYPER_L
        if (m in (5, 6) and n >= 4) or (m == 7 and n >= 3) or m >= 8:
            return HYPER_LQ
        raise UnsupportedParams(f"{spec.label} is not covered by the classification cases")
    if f is Family.VGROUP:
        if n == 2:
            return NONE
        if n in (3, 4):
            return HYPER_L
        return HYPER_LQ  # n >= 5
    if n in (2, 3):
        return NONE
    if n == 5:
        return Classification(hyper_l=True, border_q=True)
    return HYPER_LQ  # n = 4 or n >= 6
