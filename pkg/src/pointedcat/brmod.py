"""Braided module categories over a pointed category and the level-2 S-matrix.

A module category is cut out by a subgroup H of the transparent subgroup
together with a 2-cochain mu trivializing the associator on H; its simple
objects are indexed by cosets G/H.  A braiding on it is a character chi of G
acting through

    sigma_(M_k, U_g) = omega(k, g) * omega(g, k) * chi(g)

and two such are equivalent iff their characters agree on the transparent
subgroup.  Pairing the resulting classes against transparent elements gives a
square matrix which must come out as the character table of the transparent
subgroup; every entry is evaluated at all coset representatives and any
disagreement aborts, since the common value is forced.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import CycloMatrix, CycloNumber, RootOfUnity, embed
from .errors import (
    BaseMismatch,
    InternalInconsistency,
    LiftNotFound,
    NoMuFound,
    NotAdmissible,
    ShapeMismatch,
    ValidationError,
    WellDefinednessViolation,
)
from .groups import (
    DEFAULT_MAX_GROUP_ORDER,
    Character,
    Element,
    Subgroup,
    character_table,
    characters,
    cyclic_presentation,
    quotient,
    restrict,
    subgroups_of,
    trivial_subgroup,
)
from .cocycles import TwoCochain, find_mu
from .metric import PointedBFC, mueger_center


@dataclass(frozen=True)
class BraidedModuleCat:
    """(H, mu, chi) data; simples are indexed by the stored coset representatives."""

    base: PointedBFC
    subgroup: Subgroup
    mu: TwoCochain
    chi: Character
    coset_reps: tuple[Element, ...]


def admissible_subgroups(
    base: PointedBFC, max_order: int = DEFAULT_MAX_GROUP_ORDER
) -> list[Subgroup]:
    """Subgroups of the transparent subgroup, in deterministic order."""
    return subgroups_of(mueger_center(base), max_order)


def build_module_cat(
    base: PointedBFC, sub: Subgroup, chi: Character
) -> BraidedModuleCat:
    """Assemble a braided module category, searching for mu on an escalating
    value-order schedule exp(H), 2 exp(H), 4 exp(H) (capped at the mu-search
    bound).  A subgroup outside the transparent subgroup is rejected."""
    group = base.group
    if sub.parent != group:
        raise ShapeMismatch("subgroup belongs to a different group")
    if chi.parent != group:
        raise ShapeMismatch("character belongs to a different group")
    center = mueger_center(base)
    if not all(center.contains(h) for h in sub.elements):
        raise NotAdmissible(
            "braidings only exist over subgroups of the transparent subgroup"
        )
    if base.cocycle is None:
        raise ValidationError(
            "module categories need an explicit cocycle on the base category"
        )
    exponent = sub.exponent
    schedule = [n for n in (exponent, 2 * exponent, 4 * exponent) if n <= 24]
    if not schedule:
        schedule = [exponent]
    mu = None
    for value_order in schedule:
        mu = find_mu(base.cocycle, sub, value_order)
        if mu is not None:
            break
    if mu is None:
        raise NoMuFound(
            f"no trivializing cochain on H of order {sub.order} "
            f"with values of order up to {schedule[-1]}"
        )
    reps = quotient(group, sub).reps
    return BraidedModuleCat(base, sub, mu, chi, reps)


def module_braiding(mod: BraidedModuleCat, k: Element, g: Element) -> CycloNumber:
    """The braiding scalar on the simple indexed by k against the grade g."""
    r = _braiding_root(mod, k, g)
    return embed(r, r.order)


def _braiding_root(mod: BraidedModuleCat, k: Element, g: Element) -> RootOfUnity:
    return mod.base.form.pairing(k, g) * mod.chi.eval(g)


def smatrix2_entry(mod: BraidedModuleCat, g: Element) -> CycloNumber:
    r = _entry_root(mod, g)
    return embed(r, r.order)


def _entry_root(mod: BraidedModuleCat, g: Element) -> RootOfUnity:
    """Evaluate at every coset representative and insist on one common value."""
    center = mueger_center(mod.base)
    if not center.contains(g):
        raise NotAdmissible(f"{g} is not transparent in {mod.base.label or 'the base'}")
    values = [_braiding_root(mod, k, g) for k in mod.coset_reps]
    first = values[0]
    for k, value in zip(mod.coset_reps, values):
        if value != first:
            raise WellDefinednessViolation(
                f"entry at transparent {g} differs between simples {mod.coset_reps[0]} "
                f"and {k}: {first} vs {value}"
            )
    if first != mod.chi.eval(g):
        raise InternalInconsistency(
            "entry at a transparent element must reduce to the character value"
        )
    return first


# ----------------------------------------------------------------------
# Schur classes.
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class SchurClass:
    """Equivalence class of braided module categories: the restricted character."""

    base: PointedBFC
    restricted: Character


def schur_class(mod: BraidedModuleCat) -> SchurClass:
    center = mueger_center(mod.base)
    return SchurClass(mod.base, restrict(mod.chi, center))


def class_product(a: SchurClass, b: SchurClass) -> SchurClass:
    if a.base != b.base:
        raise BaseMismatch("Schur classes live over different base categories")
    return SchurClass(a.base, a.restricted * b.restricted)


@dataclass(frozen=True)
class ClassRep:
    schur: SchurClass
    representative: BraidedModuleCat


@lru_cache(maxsize=None)
def schur_classes(base: PointedBFC) -> tuple[ClassRep, ...]:
    """One class per character of the transparent subgroup, each represented on
    the regular module (H trivial) by a lifted character of G."""
    group = base.group
    center = mueger_center(base)
    pres = cyclic_presentation(center)
    lifts = characters(group)
    out = []
    for target in characters(pres.group):
        lift = None
        for chi in lifts:
            if restrict(chi, center).coords == target.coords:
                lift = chi
                break
        if lift is None:
            raise LiftNotFound(
                f"no character of G restricts to {target.coords} on the "
                "transparent subgroup; this contradicts character extension"
            )
        mod = build_module_cat(base, trivial_subgroup(group), lift)
        out.append(ClassRep(SchurClass(base, target), mod))
    return tuple(out)


# ----------------------------------------------------------------------
# The level-2 S-matrix.
# ----------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SMatrix2:
    base: PointedBFC
    rows: tuple[SchurClass, ...]
    representatives: tuple[BraidedModuleCat, ...]
    cols: tuple[Element, ...]
    matrix: CycloMatrix
    roots: tuple[tuple[RootOfUnity, ...], ...]


@lru_cache(maxsize=None)
def smatrix2(base: PointedBFC) -> SMatrix2:
    """Rows over Schur classes (character order), columns over transparent
    elements (element order); squareness and invertibility are asserted."""
    center = mueger_center(base)
    cols = center.elements
    reps = schur_classes(base)
    roots = tuple(
        tuple(_entry_root(item.representative, g) for g in cols) for item in reps
    )
    if len(roots) != len(cols):
        raise InternalInconsistency(
            f"level-2 S-matrix is {len(roots)}x{len(cols)}, not square"
        )
    conductor = math.lcm(*(r.order for row in roots for r in row))
    matrix = CycloMatrix.from_rows(
        [[embed(r, conductor) for r in row] for row in roots]
    )
    if matrix.det().is_zero:
        raise InternalInconsistency("level-2 S-matrix is singular")
    return SMatrix2(
        base,
        tuple(item.schur for item in reps),
        tuple(item.representative for item in reps),
        cols,
        matrix,
        roots,
    )


def verify_character_table(base: PointedBFC) -> bool:
    """The level-2 S-matrix must be the character table of the transparent
    subgroup, matched through its cyclic-factor presentation."""
    sm = smatrix2(base)
    center = mueger_center(base)
    pres = cyclic_presentation(center)
    table = character_table(pres.group)
    col_perm = [
        pres.group.element_index(pres.from_parent(g)) for g in sm.cols
    ]
    for i in range(table.rows):
        for j in range(table.cols):
            if sm.matrix.at(i, j) != table.at(i, col_perm[j]):
                return False
    return True


@dataclass(frozen=True)
class Pi0Report:
    pi0: int
    pi0_omega: int
    equal: bool


def pi0_report(base: PointedBFC) -> Pi0Report:
    """|pi_0| of the double layer vs the transparent subgroup order."""
    pi0 = len(schur_classes(base))
    pi0_omega = mueger_center(base).order
    if pi0 != pi0_omega:
        raise InternalInconsistency(
            f"component count {pi0} differs from transparent count {pi0_omega}"
        )
    return Pi0Report(pi0, pi0_omega, pi0 == pi0_omega)


def verify_group_hom(base: PointedBFC) -> bool:
    """Each column of the level-2 S-matrix is multiplicative on classes."""
    sm = smatrix2(base)
    pres_group = sm.rows[0].restricted.parent
    index_of = {cls.restricted.coords: i for i, cls in enumerate(sm.rows)}
    for i, a in enumerate(sm.rows):
        for j, b in enumerate(sm.rows):
            k = index_of[pres_group.add(a.restricted.coords, b.restricted.coords)]
            for col in range(len(sm.cols)):
                if sm.roots[k][col] != sm.roots[i][col] * sm.roots[j][col]:
                    return False
    return True
