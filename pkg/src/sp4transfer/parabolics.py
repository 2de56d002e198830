"""Theta-stable parabolic subalgebras of sp(4) from signed partitions.

A torus point x = c1*Z + c2*Z' splits the root vectors by the sign of
<root, x>; the zero part joins the Levi, the positive part is the
nilradical.  Signed partitions of 2 enumerate the Weyl-orbit cone points,
and each resulting subalgebra carries a parabolic-subgroup label and an
admissibility constraint on highest weights computed from its Levi.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .exact import GaussianRational, commutator, solve_in_span
from .structure import (SP4_NAMES, SP4_TORUS, StructureTable, Weight,
                        build_sp4, rho_half_sum)


@lru_cache(maxsize=None)
def sp4_table() -> StructureTable:
    return build_sp4()


@dataclass(frozen=True)
class ConePoint:
    """Torus point c1*Z + c2*Z', canonical under coordinate permutation."""

    coords: Tuple[int, int]

    @staticmethod
    def of(c1: int, c2: int) -> "ConePoint":
        a, b = sorted((c1, c2), reverse=True)
        return ConePoint((a, b))

    def pair(self, w: Weight) -> Fraction:
        return w.pair(self.coords)

    def display(self) -> str:
        terms = []
        for c, sym in zip(self.coords, ("Z", "Z'")):
            if c == 0:
                continue
            mag = "" if abs(c) == 1 else str(abs(c))
            terms.append(("-" if c < 0 else "+") + mag + sym)
        if not terms:
            return "0"
        out = "".join(terms)
        return out[1:] if out.startswith("+") else out

    def __str__(self) -> str:
        return self.display()


@dataclass(frozen=True)
class SignedPartition:
    """2 = sum_j (n_j + m_j) + zeros with n_j + m_j > 0 for each j."""

    pos: Tuple[int, ...]  # n_1 .. n_s (multiplicity of +j)
    neg: Tuple[int, ...]  # m_1 .. m_s (multiplicity of -j)
    zeros: int

    def __post_init__(self):
        if len(self.pos) != len(self.neg):
            raise ValueError("pos and neg level lists must have equal length")
        if self.zeros < 0 or any(n < 0 for n in self.pos + self.neg):
            raise ValueError("multiplicities must be nonnegative")
        if any(n + m == 0 for n, m in zip(self.pos, self.neg)):
            raise ValueError("each level must carry a positive multiplicity")

    @property
    def total(self) -> int:
        return sum(self.pos) + sum(self.neg) + self.zeros

    def display(self) -> str:
        terms = [f"({n}+{m})" for n, m in reversed(list(zip(self.pos, self.neg)))]
        if terms:
            terms.append(str(self.zeros))
            return f"{self.total} = " + "+".join(terms)
        return f"{self.total} = {self.zeros}"


def partition_to_cone(p: SignedPartition) -> ConePoint:
    """Cone point with +j repeated n_j times, -j repeated m_j times, 0 zeros times."""
    if p.total != 2:
        raise ValueError("only partitions of 2 are supported")
    coords: List[int] = []
    for j, (n, m) in enumerate(zip(p.pos, p.neg), start=1):
        coords.extend([j] * n)
        coords.extend([-j] * m)
    coords.extend([0] * p.zeros)
    a, b = sorted(coords, reverse=True)
    return ConePoint((a, b))


# Admissible-weight families, keyed by the h-intersection of the derived Levi.
FAMILY_ZERO = "only-zero"          # lambda = 0
FAMILY_ANY = "any"                 # any dominant lambda
FAMILY_FIRST = "(lambda1,0)"       # lambda2 = 0
FAMILY_EQUAL = "(lambda1,lambda1)"  # lambda1 = lambda2

_FAMILY_DISPLAY = {
    FAMILY_ZERO: "lambda = 0",
    FAMILY_ANY: "any lambda",
    FAMILY_FIRST: "lambda = (lambda1, 0)",
    FAMILY_EQUAL: "lambda = (lambda1, lambda1)",
}


def family_display(family: str) -> str:
    return _FAMILY_DISPLAY[family]


def family_contains(family: str, lam: Tuple[int, int]) -> bool:
    """Membership of a dominant integral weight (l1 >= l2 >= 0) in a family."""
    l1, l2 = lam
    if not (l1 >= l2 >= 0):
        raise ValueError("lambda must be dominant: lambda1 >= lambda2 >= 0")
    if family == FAMILY_ZERO:
        return l1 == 0 and l2 == 0
    if family == FAMILY_ANY:
        return True
    if family == FAMILY_FIRST:
        return l2 == 0
    if family == FAMILY_EQUAL:
        return l1 == l2
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class ThetaParabolic:
    """One theta-stable parabolic q = levi + nilrad with its bookkeeping."""

    label: str
    cone: ConePoint
    partition: SignedPartition
    levi: Tuple[str, ...]     # torus names first, then root-vector names
    nilrad: Tuple[str, ...]
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def u_cap_p(self) -> Tuple[str, ...]:
        table = sp4_table()
        return tuple(n for n in self.nilrad if table.elements[n].part == "noncompact")

    def levi_root_names(self) -> Tuple[str, ...]:
        return tuple(n for n in self.levi if n not in SP4_TORUS)

    def nilrad_weights(self) -> Tuple[Weight, ...]:
        table = sp4_table()
        return tuple(table.elements[n].hweight for n in self.nilrad)

    def u_cap_p_weights(self) -> Tuple[Weight, ...]:
        table = sp4_table()
        return tuple(table.elements[n].hweight for n in self.u_cap_p)

    def to_dict(self) -> dict:
        eq = equivalent_label(self)
        return {
            "id": self.label,
            "x": list(self.cone.coords),
            "x_display": self.cone.display(),
            "partition": {
                "positive": list(self.partition.pos),
                "negative": list(self.partition.neg),
                "zeros": self.partition.zeros,
                "display": self.partition.display(),
            },
            "levi": list(self.levi),
            "nilrad": list(self.nilrad),
            "u_cap_p": list(self.u_cap_p),
            "group_label": group_label(self),
            "admissible_family": admissible_family(self),
            "equivalent_to": eq,
            "notes": list(self.notes),
        }


def cone_to_parabolic(x: ConePoint) -> ThetaParabolic:
    """Split the root vectors by the sign of their pairing with x."""
    table = sp4_table()
    levi = list(SP4_TORUS)
    nilrad = []
    for name in SP4_NAMES:
        el = table.elements[name]
        if el.is_torus():
            continue
        v = x.pair(el.hweight)
        if v == 0:
            levi.append(name)
        elif v > 0:
            nilrad.append(name)
    partition = _partition_for_cone(x)
    label = _LABEL_BY_CONE.get(x.coords, "?")
    return ThetaParabolic(label=label, cone=x, partition=partition,
                          levi=tuple(levi), nilrad=tuple(nilrad),
                          notes=_NOTES.get(label, ()))


_LABEL_BY_CONE: Dict[Tuple[int, int], str] = {
    (0, 0): "q1",
    (-1, -2): "q2",
    (2, -1): "q3",
    (1, -2): "q4",
    (2, 1): "q5",
    (1, 1): "q6",
    (-1, -1): "q7",
    (1, 0): "q8",
    (0, -1): "q9",
    (1, -1): "q10",
}

_NOTES: Dict[str, Tuple[str, ...]] = {
    "q4": ("x = Z-2Z' is the descending-sorted Weyl-orbit representative; "
           "the swap-conjugate chamber -Z+2Z' carries the mirrored nilradical "
           "{N-, X-, P1+, P0+} and defines the same subalgebra class up to "
           "compact conjugation with q3's opposite.",),
    "q9": ("derived algebra of the Levi computed as span{Z, X+, X-}; its "
           "torus intersection is <Z>.",),
}


def _all_signed_partitions(n: int) -> List[SignedPartition]:
    out = []
    for zeros in range(n + 1):
        rest = n - zeros
        for comp in _compositions(rest):
            for split in itertools.product(*[
                    [(k, t - k) for k in range(t + 1)] for t in comp]):
                pos = tuple(s[0] for s in split)
                neg = tuple(s[1] for s in split)
                out.append(SignedPartition(pos, neg, zeros))
    return out


def _compositions(r: int) -> List[Tuple[int, ...]]:
    if r == 0:
        return [()]
    out = []
    for first in range(1, r + 1):
        for tail in _compositions(r - first):
            out.append((first,) + tail)
    return out


@lru_cache(maxsize=None)
def _partition_index() -> Dict[Tuple[int, int], SignedPartition]:
    index = {}
    for p in _all_signed_partitions(2):
        cone = partition_to_cone(p)
        if cone.coords in index:
            raise RuntimeError(f"duplicate cone point {cone.coords}")
        index[cone.coords] = p
    return index


def _partition_for_cone(x: ConePoint) -> SignedPartition:
    return _partition_index()[x.coords]


def enumerate_all(n: int = 2) -> List[ThetaParabolic]:
    """All theta-stable parabolic subalgebras for Sp(2n,R); rank 2 only."""
    if n != 2:
        raise ValueError("only rank n = 2 is supported")
    parabolics = [cone_to_parabolic(ConePoint(coords))
                  for coords in _partition_index()]
    parabolics.sort(key=lambda q: int(q.label[1:]))
    return parabolics


@lru_cache(maxsize=None)
def by_label() -> Dict[str, ThetaParabolic]:
    return {q.label: q for q in enumerate_all()}


def get(label: str) -> ThetaParabolic:
    try:
        return by_label()[label]
    except KeyError:
        raise ValueError(f"unknown parabolic label {label!r}") from None


def are_equivalent(a: ThetaParabolic, b: ThetaParabolic) -> bool:
    """Equal weight multisets of the noncompact nilradical parts."""
    key = lambda q: sorted((w.a, w.b) for w in q.u_cap_p_weights())
    return key(a) == key(b)


def equivalent_label(q: ThetaParabolic) -> Optional[str]:
    """Label of the earliest equivalent parabolic preceding q, if any."""
    own = int(q.label[1:])
    for other in enumerate_all():
        if int(other.label[1:]) < own and are_equivalent(q, other):
            return other.label
    return None


def equivalence_classes() -> List[Tuple[str, ...]]:
    """Labels grouped by equivalence, ordered by first member."""
    groups: List[List[str]] = []
    for q in enumerate_all():
        for g in groups:
            if are_equivalent(q, get(g[0])):
                g.append(q.label)
                break
        else:
            groups.append([q.label])
    return [tuple(g) for g in groups]


def _echelon_remainder(rows: List[List[Fraction]], v: List[Fraction]) -> List[Fraction]:
    for row in rows:
        pivot_col = next((c for c, x in enumerate(row) if x != 0), None)
        if pivot_col is not None and v[pivot_col] != 0:
            f = v[pivot_col] / row[pivot_col]
            v = [a - f * b for a, b in zip(v, row)]
    return v


def _levi_derived_torus_constraints(q: ThetaParabolic) -> List[Tuple[Fraction, Fraction]]:
    """Generators of h intersected with [levi, levi], as (c1, c2) pairs."""
    table = sp4_table()
    mats = [table.matrix(n) for n in SP4_NAMES]

    span_rows: List[List[Fraction]] = []
    for a, b in itertools.combinations(q.levi, 2):
        coords = solve_in_span(commutator(table.matrix(a), table.matrix(b)), mats)
        row = []
        for c in coords:
            if c.im != 0:
                raise RuntimeError("non-real bracket coordinates")
            row.append(c.re)
        if any(row):
            span_rows.append(row)

    # Row-echelon the derived-span, then express membership of a generic
    # torus vector alpha*Z + beta*Z' as a linear condition on (alpha, beta).
    echelon: List[List[Fraction]] = []
    for row in span_rows:
        row = _echelon_remainder(echelon, list(row))
        if any(row):
            echelon.append(row)

    e_z = [Fraction(0)] * 10
    e_z[0] = Fraction(1)
    e_zp = [Fraction(0)] * 10
    e_zp[1] = Fraction(1)
    r0 = _echelon_remainder(echelon, e_z)
    r1 = _echelon_remainder(echelon, e_zp)

    in_span_z = not any(r0)
    in_span_zp = not any(r1)
    if in_span_z and in_span_zp:
        return [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]
    if in_span_z:
        return [(Fraction(1), Fraction(0))]
    if in_span_zp:
        return [(Fraction(0), Fraction(1))]
    # alpha*r0 + beta*r1 = 0 componentwise; nontrivial solutions exist only
    # when r0 and r1 are proportional.
    for x0, x1 in zip(r0, r1):
        if x0 != 0 and x1 != 0:
            # candidate generator (alpha, beta) = (x1, -x0), normalized
            alpha, beta = x1, -x0
            if all(alpha * a + beta * b == 0 for a, b in zip(r0, r1)):
                if alpha < 0 or (alpha == 0 and beta < 0):
                    alpha, beta = -alpha, -beta
                return [(alpha, beta)]
            return []
    return []


def admissible_family(q: ThetaParabolic) -> str:
    """Constraint family for highest weights extending to the Levi.

    Computes h intersected with the derived algebra of the Levi in the
    complexification and converts each generator c1*Z + c2*Z' into the
    vanishing condition c1*lambda1 + c2*lambda2 = 0, reported as the
    dominant-chamber family.
    """
    gens = _levi_derived_torus_constraints(q)
    if len(gens) == 2:
        return FAMILY_ZERO
    if not gens:
        return FAMILY_ANY
    (c1, c2), = gens
    if c1 == 0 or c2 == 0:
        return FAMILY_FIRST
    return FAMILY_EQUAL


def group_label(q: ThetaParabolic) -> str:
    """Parabolic-subgroup label G/B/P_J/P_S from the Levi's root type."""
    if not q.nilrad:
        return "G"
    table = sp4_table()
    roots = {(table.elements[n].hweight.a, table.elements[n].hweight.b)
             for n in q.levi_root_names()}
    if not roots or roots == {(1, -1), (-1, 1)}:
        return "B"
    if roots == {(1, 1), (-1, -1)}:
        return "P_S"
    if roots in ({(2, 0), (-2, 0)}, {(0, 2), (0, -2)}):
        return "P_J"
    raise ValueError(f"unrecognized Levi root set {roots} for {q.label}")


def is_discrete_series(q: ThetaParabolic, lam: Tuple[int, int]) -> bool:
    """True when the whole Levi is compact; lambda must be admissible."""
    if not family_contains(admissible_family(q), lam):
        raise ValueError(
            f"lambda {lam} is not admissible for {q.label}: requires "
            f"{family_display(admissible_family(q))}")
    table = sp4_table()
    return all(table.elements[n].part == "compact" for n in q.levi)


def chamber_adapted(q: ThetaParabolic, lam: Tuple[int, int]) -> Weight:
    """The Weyl conjugate of a dominant weight adapted to q's chamber.

    Returns the signed coordinate permutation of lam whose pairing with
    every nilradical root is nonnegative; it is the representative used in
    Harish-Chandra parameter and lowest-type computations.
    """
    if not family_contains(admissible_family(q), lam):
        raise ValueError(
            f"lambda {lam} is not admissible for {q.label}: requires "
            f"{family_display(admissible_family(q))}")
    a, b = lam
    candidates = []
    for x, y in ((a, b), (b, a)):
        for s1 in (1, -1):
            for s2 in (1, -1):
                w = (s1 * x, s2 * y)
                if w not in candidates:
                    candidates.append(w)
    roots = q.nilrad_weights()
    for w in candidates:
        ww = Weight.of(*w)
        if all(ww.dot(r) >= 0 for r in roots):
            return ww
    raise RuntimeError(f"no chamber-adapted conjugate of {lam} for {q.label}")


def rho_u(q: ThetaParabolic) -> Weight:
    """Compact-frame half sum of the nilradical weights."""
    table = sp4_table()
    return rho_half_sum([table.elements[n] for n in q.nilrad])
