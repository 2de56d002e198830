"""Named basis of sp(4,C) with its Cartan decomposition and weights.

The ten basis matrices are constructed entry-exact; every bracket is then
*computed* from the matrices and expressed back in basis coordinates, so
the stored reference table acts as a regression oracle rather than an
input.  The sl(2) warm-up basis lives here too.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .exact import (ExactMatrix, GaussianRational, GR_I, commutator,
                    solve_in_span)


class StructureError(Exception):
    """Internal consistency failure while building a structure table."""


@dataclass(frozen=True)
class Weight:
    """A weight in the (e1,e2) coordinates of the compact Cartan (Z,Z')."""

    a: Fraction
    b: Fraction

    @staticmethod
    def of(a, b) -> "Weight":
        return Weight(Fraction(a), Fraction(b))

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "Weight":
        return Weight(-self.a, -self.b)

    def scale(self, c) -> "Weight":
        f = Fraction(c)
        return Weight(self.a * f, self.b * f)

    def dot(self, other: "Weight") -> Fraction:
        return self.a * other.a + self.b * other.b

    def pair(self, coords: Tuple[int, int]) -> Fraction:
        """Evaluate against a torus point c1*Z + c2*Z'."""
        return self.a * coords[0] + self.b * coords[1]

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __str__(self) -> str:
        def f(x: Fraction) -> str:
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return f"({f(self.a)}, {f(self.b)})"


WEIGHT_ZERO = Weight(Fraction(0), Fraction(0))


@dataclass(frozen=True)
class BasisElement:
    name: str
    matrix: ExactMatrix
    part: str  # "compact" | "noncompact"
    hweight: Optional[Weight]  # None for torus elements

    def is_torus(self) -> bool:
        return self.hweight is None


SP4_NAMES = ("Z", "Z'", "N+", "N-", "X+", "X-", "P1+", "P1-", "P0+", "P0-")
SP4_TORUS = ("Z", "Z'")
SL2_NAMES = ("H", "X", "Y")

_I = GR_I
_NI = -GR_I
_H = Fraction(1, 2)


def _sp4_matrices() -> Dict[str, ExactMatrix]:
    m = ExactMatrix.from_rows
    return {
        "Z": m([[0, 0, 1, 0], [0, 0, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 0]]).scale(_NI),
        "Z'": m([[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, -1, 0, 0]]).scale(_NI),
        "N+": m([[0, 1, 0, _NI], [-1, 0, _NI, 0], [0, _I, 0, 1], [_I, 0, -1, 0]]).scale(_H),
        "N-": m([[0, 1, 0, _I], [-1, 0, _I, 0], [0, _NI, 0, 1], [_NI, 0, -1, 0]]).scale(_H),
        "X+": m([[1, 0, _I, 0], [0, 0, 0, 0], [_I, 0, -1, 0], [0, 0, 0, 0]]).scale(_H),
        "X-": m([[1, 0, _NI, 0], [0, 0, 0, 0], [_NI, 0, -1, 0], [0, 0, 0, 0]]).scale(_H),
        "P1+": m([[0, 1, 0, _I], [1, 0, _I, 0], [0, _I, 0, -1], [_I, 0, -1, 0]]).scale(_H),
        "P1-": m([[0, 1, 0, _NI], [1, 0, _NI, 0], [0, _NI, 0, -1], [_NI, 0, -1, 0]]).scale(_H),
        "P0+": m([[0, 0, 0, 0], [0, 1, 0, _I], [0, 0, 0, 0], [0, _I, 0, -1]]).scale(_H),
        "P0-": m([[0, 0, 0, 0], [0, 1, 0, _NI], [0, 0, 0, 0], [0, _NI, 0, -1]]).scale(_H),
    }


def _sl2_matrices() -> Dict[str, ExactMatrix]:
    m = ExactMatrix.from_rows
    return {
        "H": m([[1, 0], [0, -1]]),
        "X": m([[0, 1], [0, 0]]),
        "Y": m([[0, 0], [1, 0]]),
    }


def sp4_theta(x: ExactMatrix) -> ExactMatrix:
    """Cartan involution of sp(4): negative transpose."""
    return -x.transpose()


_SL2_W = ExactMatrix.from_rows([[0, 1], [1, 0]])


def sl2_theta(x: ExactMatrix) -> ExactMatrix:
    """Cartan involution int(w) after negative transpose, w the coordinate swap."""
    return _SL2_W @ (-x.transpose()) @ _SL2_W


def symplectic_form(n: int = 2) -> ExactMatrix:
    """The form J = [[0, I_n], [-I_n, 0]] defining Sp(2n)."""
    rows = []
    for i in range(2 * n):
        row = [0] * (2 * n)
        if i < n:
            row[i + n] = 1
        else:
            row[i - n] = -1
        rows.append(row)
    return ExactMatrix.from_rows(rows)


# Reference bracket table (upper triangle; lower triangle by antisymmetry,
# diagonal zero).  Each entry is a list of (coefficient, basis name) pairs.
# The (N+, Z') cell is stored with the value forced by antisymmetry and by
# direct matrix arithmetic, [N+, Z'] = N+.
SP4_BRACKET_REFERENCE: Dict[Tuple[str, str], Tuple[Tuple[int, str], ...]] = {
    ("Z", "Z'"): (),
    ("Z", "N+"): ((1, "N+"),),
    ("Z", "N-"): ((-1, "N-"),),
    ("Z", "X+"): ((2, "X+"),),
    ("Z", "X-"): ((-2, "X-"),),
    ("Z", "P1+"): ((1, "P1+"),),
    ("Z", "P1-"): ((-1, "P1-"),),
    ("Z", "P0+"): (),
    ("Z", "P0-"): (),
    ("Z'", "N+"): ((-1, "N+"),),
    ("Z'", "N-"): ((1, "N-"),),
    ("Z'", "X+"): (),
    ("Z'", "X-"): (),
    ("Z'", "P1+"): ((1, "P1+"),),
    ("Z'", "P1-"): ((-1, "P1-"),),
    ("Z'", "P0+"): ((2, "P0+"),),
    ("Z'", "P0-"): ((-2, "P0-"),),
    ("N+", "N-"): ((1, "Z'"), (-1, "Z")),
    ("N+", "X+"): (),
    ("N+", "X-"): ((-1, "P1-"),),
    ("N+", "P1+"): ((2, "X+"),),
    ("N+", "P1-"): ((-2, "P0-"),),
    ("N+", "P0+"): ((1, "P1+"),),
    ("N+", "P0-"): (),
    ("N-", "X+"): ((-1, "P1+"),),
    ("N-", "X-"): (),
    ("N-", "P1+"): ((-2, "P0+"),),
    ("N-", "P1-"): ((2, "X-"),),
    ("N-", "P0+"): (),
    ("N-", "P0-"): ((1, "P1-"),),
    ("X+", "X-"): ((1, "Z"),),
    ("X+", "P1+"): (),
    ("X+", "P1-"): ((1, "N+"),),
    ("X+", "P0+"): (),
    ("X+", "P0-"): (),
    ("X-", "P1+"): ((1, "N-"),),
    ("X-", "P1-"): (),
    ("X-", "P0+"): (),
    ("X-", "P0-"): (),
    ("P1+", "P1-"): ((1, "Z"), (1, "Z'")),
    ("P1+", "P0+"): (),
    ("P1+", "P0-"): ((1, "N+"),),
    ("P1-", "P0+"): ((1, "N-"),),
    ("P1-", "P0-"): (),
    ("P0+", "P0-"): ((1, "Z'"),),
}


def reference_bracket(a: str, b: str) -> Tuple[Tuple[int, str], ...]:
    """Reference combination for [a, b], any ordered pair of basis names."""
    if a == b:
        return ()
    if (a, b) in SP4_BRACKET_REFERENCE:
        return SP4_BRACKET_REFERENCE[(a, b)]
    return tuple((-c, n) for c, n in SP4_BRACKET_REFERENCE[(b, a)])


class StructureTable:
    """A named basis with all brackets expressed in basis coordinates."""

    def __init__(self, algebra: str, names: Sequence[str],
                 matrices: Dict[str, ExactMatrix], torus: Sequence[str],
                 theta) -> None:
        self.algebra = algebra
        self.names = tuple(names)
        self.torus_names = tuple(torus)
        self._theta = theta
        mats = [matrices[n] for n in self.names]

        parts = {}
        for name, mat in zip(self.names, mats):
            img = theta(mat)
            if img == mat:
                parts[name] = "compact"
            elif img == -mat:
                parts[name] = "noncompact"
            else:
                raise StructureError(f"{name} is not a theta eigenvector")

        self._coords: Dict[Tuple[str, str], tuple] = {}
        for a, b in itertools.product(self.names, repeat=2):
            br = commutator(matrices[a], matrices[b])
            coords = solve_in_span(br, mats)
            if coords is None:
                raise StructureError(f"bracket [{a}, {b}] leaves the span")
            self._coords[(a, b)] = coords

        hweights = {}
        for name in self.names:
            if name in self.torus_names:
                hweights[name] = None
                continue
            comps = []
            for t in self.torus_names:
                coords = self._coords[(t, name)]
                idx = self.names.index(name)
                for k, c in enumerate(coords):
                    if k != idx and c:
                        raise StructureError(f"[{t}, {name}] is not a multiple of {name}")
                    if k == idx:
                        if c.im != 0:
                            raise StructureError(f"non-real eigenvalue on {name}")
                        comps.append(c.re)
            while len(comps) < 2:
                comps.append(Fraction(0))
            hweights[name] = Weight(comps[0], comps[1])

        self.elements: Dict[str, BasisElement] = {
            name: BasisElement(name, matrices[name], parts[name], hweights[name])
            for name in self.names
        }

    def matrix(self, name: str) -> ExactMatrix:
        return self.elements[name].matrix

    def bracket(self, a: str, b: str) -> ExactMatrix:
        return commutator(self.matrix(a), self.matrix(b))

    def bracket_coords(self, a: str, b: str) -> tuple:
        return self._coords[(a, b)]

    def bracket_combo(self, a: str, b: str) -> Tuple[Tuple[Fraction, str], ...]:
        """The bracket as (coefficient, name) pairs, zero terms dropped."""
        out = []
        for name, c in zip(self.names, self._coords[(a, b)]):
            if c:
                if c.im != 0:
                    raise StructureError(f"non-real structure constant at [{a}, {b}]")
                out.append((c.re, name))
        return tuple(out)

    def compact_names(self) -> Tuple[str, ...]:
        return tuple(n for n in self.names if self.elements[n].part == "compact")

    def noncompact_names(self) -> Tuple[str, ...]:
        return tuple(n for n in self.names if self.elements[n].part == "noncompact")

    def theta(self, x: ExactMatrix) -> ExactMatrix:
        return self._theta(x)


def build_sp4() -> StructureTable:
    """The sp(4,C) structure table, computed from the ten basis matrices."""
    return StructureTable("sp4", SP4_NAMES, _sp4_matrices(), SP4_TORUS, sp4_theta)


def build_sl2() -> StructureTable:
    """The sl(2,C) warm-up table with Cartan decomposition k=<H>, p=<X,Y>."""
    return StructureTable("sl2", SL2_NAMES, _sl2_matrices(), ("H",), sl2_theta)


def hweight_of(table: StructureTable, name: str) -> Weight:
    """Weight of a non-torus basis element under the (Z, Z') eigenvalue pairing."""
    el = table.elements[name]
    if el.is_torus():
        raise ValueError(f"{name} is a torus element and carries no root")
    return el.hweight


def rho_half_sum(elements: Iterable[BasisElement]) -> Weight:
    """Half the sum of the weights of the given non-torus basis elements."""
    total = WEIGHT_ZERO
    for el in elements:
        if el.is_torus():
            raise ValueError(f"{el.name} is a torus element and carries no root")
        total = total + el.hweight
    return total.scale(Fraction(1, 2))


# C2 root data used by invariants and by the parabolic labelling.
C2_ROOTS = tuple(Weight.of(a, b) for a, b in
                 ((1, -1), (-1, 1), (2, 0), (-2, 0), (1, 1), (-1, -1), (0, 2), (0, -2)))
C2_LONG = frozenset({(2, 0), (-2, 0), (0, 2), (0, -2)})
C2_SHORT = frozenset({(1, -1), (-1, 1), (1, 1), (-1, -1)})


@dataclass
class StructureReport:
    """Result of the exhaustive structure verification."""

    cells: list  # [((a, b), bool)] over all 100 ordered pairs
    jacobi: list  # [((a, b, c), bool)] over all 120 unordered triples
    cartan: dict  # rule name -> bool
    symplectic: list  # [(name, bool)]
    roots_ok: bool

    @property
    def ok(self) -> bool:
        return (all(v for _, v in self.cells) and all(v for _, v in self.jacobi)
                and all(self.cartan.values()) and all(v for _, v in self.symplectic)
                and self.roots_ok)


def verify_structure(fault: Optional[str] = None) -> StructureReport:
    """Check every bracket cell, the Jacobi identity, the Cartan containments,
    symplectic membership and the root system against the reference data.

    ``fault`` names a basis element whose matrix gets one entry corrupted
    before checking; used to demonstrate that the verifier detects damage.
    """
    matrices = _sp4_matrices()
    if fault is not None:
        bad = matrices[fault]
        entries = list(bad.entries)
        entries[0] = entries[0] + 1
        matrices[fault] = ExactMatrix(bad.rows, bad.cols, tuple(entries))
    mats = [matrices[n] for n in SP4_NAMES]

    cells = []
    for a, b in itertools.product(SP4_NAMES, repeat=2):
        br = commutator(matrices[a], matrices[b])
        coords = solve_in_span(br, mats)
        if coords is None:
            cells.append(((a, b), False))
            continue
        expected = {n: Fraction(0) for n in SP4_NAMES}
        for c, n in reference_bracket(a, b):
            expected[n] += c
        got_ok = all(
            coords[k] == GaussianRational.of(expected[n])
            for k, n in enumerate(SP4_NAMES))
        cells.append(((a, b), got_ok))

    jacobi = []
    for a, b, c in itertools.combinations(SP4_NAMES, 3):
        total = (commutator(matrices[a], commutator(matrices[b], matrices[c]))
                 + commutator(matrices[b], commutator(matrices[c], matrices[a]))
                 + commutator(matrices[c], commutator(matrices[a], matrices[b])))
        jacobi.append(((a, b, c), total.is_zero()))

    compact = ("Z", "Z'", "N+", "N-")
    noncompact = ("X+", "X-", "P1+", "P1-", "P0+", "P0-")
    k_mats = [matrices[n] for n in compact]
    p_mats = [matrices[n] for n in noncompact]

    def contained(pairs, span):
        return all(
            solve_in_span(commutator(matrices[a], matrices[b]), span) is not None
            for a, b in pairs)

    cartan = {
        "[k,k]<=k": contained(itertools.product(compact, compact), k_mats),
        "[k,p]<=p": contained(itertools.product(compact, noncompact), p_mats),
        "[p,p]<=k": contained(itertools.product(noncompact, noncompact), k_mats),
    }

    J = symplectic_form(2)
    symplectic = [
        (n, (matrices[n].transpose() @ J + J @ matrices[n]).is_zero())
        for n in SP4_NAMES
    ]

    roots_ok = False
    try:
        table = StructureTable("sp4", SP4_NAMES, matrices, SP4_TORUS, sp4_theta)
        found = sorted((w.hweight.a, w.hweight.b)
                       for w in table.elements.values() if not w.is_torus())
        expect = sorted((r.a, r.b) for r in C2_ROOTS)
        roots_ok = found == expect
    except StructureError:
        roots_ok = False

    return StructureReport(cells, jacobi, cartan, symplectic, roots_ok)
