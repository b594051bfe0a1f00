"""Finite abelian groups as products of cyclic factors.

Elements are plain tuples of residues, ordered lexicographically everywhere
so matrix rows and columns are reproducible across runs.  Subgroups are
extensional (identified by their sorted element list), quotients are
presented in cyclic-factor form via Smith normal form of the relation
matrix, and the dual group is realized as coordinate tuples of the same
shape as elements.

The group literal syntax "Z2", "Z4xZ2", "Z2xZ2xZ3" (case-insensitive) is
shared by the CLI and all file formats.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import CycloMatrix, RootOfUnity, embed, root_of_unity
from .errors import (
    GroupTooLarge,
    InternalInconsistency,
    NotSubgroup,
    ParseError,
    ShapeMismatch,
)

Element = tuple[int, ...]

DEFAULT_MAX_GROUP_ORDER = 256


@dataclass(frozen=True)
class AbelianGroup:
    """Direct product of cyclic groups Z/n_1 x ... x Z/n_r; trivial is (1,)."""

    factors: tuple[int, ...]

    def __post_init__(self):
        if not self.factors or any(n < 1 for n in self.factors):
            raise ParseError(f"invalid cyclic factors {self.factors}")

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def zero(self) -> Element:
        return (0,) * len(self.factors)

    def elements(self) -> list[Element]:
        return list(itertools.product(*(range(n) for n in self.factors)))

    def _check(self, g: Element) -> None:
        if len(g) != len(self.factors):
            raise ShapeMismatch(
                f"element {g} has {len(g)} coordinates, group has {len(self.factors)}"
            )

    def reduce(self, g: Element) -> Element:
        self._check(g)
        return tuple(c % n for c, n in zip(g, self.factors))

    def add(self, g: Element, h: Element) -> Element:
        self._check(g)
        self._check(h)
        return tuple((a + b) % n for a, b, n in zip(g, h, self.factors))

    def neg(self, g: Element) -> Element:
        self._check(g)
        return tuple((-a) % n for a, n in zip(g, self.factors))

    def sub(self, g: Element, h: Element) -> Element:
        return self.add(g, self.neg(h))

    def scalar_mul(self, k: int, g: Element) -> Element:
        self._check(g)
        return tuple((k * a) % n for a, n in zip(g, self.factors))

    def element_index(self, g: Element) -> int:
        """Position of g in elements() order (mixed-radix value of the coords)."""
        self._check(g)
        idx = 0
        for c, n in zip(g, self.factors):
            idx = idx * n + c
        return idx

    def element_order(self, g: Element) -> int:
        self._check(g)
        return math.lcm(*(n // math.gcd(n, c) for c, n in zip(g, self.factors)))

    def __str__(self) -> str:
        return format_group(self)


def parse_group(text: str) -> AbelianGroup:
    """Parse a group literal like "Z4xZ2" (case-insensitive)."""
    s = text.strip().lower()
    if not s:
        raise ParseError("empty group literal")
    factors = []
    for part in s.split("x"):
        part = part.strip()
        if not part.startswith("z") or not part[1:].isdigit():
            raise ParseError(f"cannot parse group literal {text!r}")
        factors.append(int(part[1:]))
    return AbelianGroup(tuple(factors))


def format_group(group: AbelianGroup) -> str:
    return "x".join(f"Z{n}" for n in group.factors)


# ----------------------------------------------------------------------
# Subgroups.
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Subgroup:
    """Subgroup given extensionally; elements sorted, closure validated."""

    parent: AbelianGroup
    elements: tuple[Element, ...]
    generators: tuple[Element, ...]

    def __post_init__(self):
        elems = self.elements
        if list(elems) != sorted(set(elems)):
            raise NotSubgroup("subgroup element list must be sorted and deduplicated")
        elemset = frozenset(elems)
        if self.parent.zero not in elemset:
            raise NotSubgroup("subgroup must contain the identity")
        for g in elems:
            if self.parent.neg(g) not in elemset:
                raise NotSubgroup(f"subgroup not closed under negation at {g}")
            for h in elems:
                if self.parent.add(g, h) not in elemset:
                    raise NotSubgroup(f"subgroup not closed under addition at {g}+{h}")
        if self.parent.order % len(elems) != 0:
            raise NotSubgroup("subgroup order does not divide the group order")
        object.__setattr__(self, "_elemset", elemset)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def exponent(self) -> int:
        return math.lcm(*(self.parent.element_order(g) for g in self.elements))

    def contains(self, g: Element) -> bool:
        return g in self._elemset

    def __le__(self, other: "Subgroup") -> bool:
        return self.parent == other.parent and all(other.contains(g) for g in self.elements)


def _closure(group: AbelianGroup, seed) -> frozenset:
    out = {group.zero}
    frontier = [group.reduce(g) for g in seed]
    out.update(frontier)
    while frontier:
        nxt = []
        for g in frontier:
            for h in list(out):
                s = group.add(g, h)
                if s not in out:
                    out.add(s)
                    nxt.append(s)
        frontier = nxt
    return frozenset(out)


def subgroup_generated(group: AbelianGroup, gens) -> Subgroup:
    gens = tuple(group.reduce(g) for g in gens)
    elems = tuple(sorted(_closure(group, gens)))
    return Subgroup(group, elems, gens)


def subgroup_from_elements(group: AbelianGroup, elems) -> Subgroup:
    elems = tuple(sorted({group.reduce(g) for g in elems} | {group.zero}))
    return Subgroup(group, elems, minimal_generators(group, elems))


def minimal_generators(group: AbelianGroup, elems) -> tuple[Element, ...]:
    """Greedy generating set, scanning the sorted element list."""
    gens: list[Element] = []
    have = frozenset({group.zero})
    target = frozenset(elems)
    for g in sorted(elems):
        if g in have:
            continue
        gens.append(g)
        have = _closure(group, gens)
        if have == target:
            break
    return tuple(gens)


def trivial_subgroup(group: AbelianGroup) -> Subgroup:
    return Subgroup(group, (group.zero,), ())


def full_subgroup(group: AbelianGroup) -> Subgroup:
    return subgroup_from_elements(group, group.elements())


def _subgroups_over(group: AbelianGroup, universe) -> list[Subgroup]:
    """All subgroups whose elements lie in the (closed) universe."""
    universe = sorted(universe)
    found = {frozenset({group.zero})}
    frontier = [frozenset({group.zero})]
    while frontier:
        nxt = []
        for current in frontier:
            for g in universe:
                if g in current:
                    continue
                grown = _closure(group, list(current) + [g])
                if grown not in found:
                    found.add(grown)
                    nxt.append(grown)
        frontier = nxt
    subs = [subgroup_from_elements(group, elems) for elems in found]
    subs.sort(key=lambda s: (s.order, s.elements))
    return subs


def all_subgroups(group: AbelianGroup, max_order: int = DEFAULT_MAX_GROUP_ORDER) -> list[Subgroup]:
    """Every subgroup exactly once, sorted by (order, element list)."""
    if group.order > max_order:
        raise GroupTooLarge(f"|G| = {group.order} exceeds the bound {max_order}")
    return _subgroups_over(group, group.elements())


def subgroups_of(sub: Subgroup, max_order: int = DEFAULT_MAX_GROUP_ORDER) -> list[Subgroup]:
    if sub.parent.order > max_order:
        raise GroupTooLarge(f"|G| = {sub.parent.order} exceeds the bound {max_order}")
    return _subgroups_over(sub.parent, sub.elements)


# ----------------------------------------------------------------------
# Quotients via Smith normal form.
# ----------------------------------------------------------------------

def smith_diagonal(mat: list[list[int]]) -> list[int]:
    """Nonnegative invariant factors d_1 | d_2 | ... of an integer matrix."""
    m = [row[:] for row in mat]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    diag = []
    top = 0
    while top < min(nrows, ncols):
        pivot = None
        for i in range(top, nrows):
            for j in range(top, ncols):
                if m[i][j] != 0 and (pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        m[top], m[pi] = m[pi], m[top]
        for row in m:
            row[top], row[pj] = row[pj], row[top]
        dirty = False
        for i in range(top + 1, nrows):
            q = m[i][top] // m[top][top]
            if q:
                for j in range(top, ncols):
                    m[i][j] -= q * m[top][j]
            if m[i][top] != 0:
                dirty = True
        for j in range(top + 1, ncols):
            q = m[top][j] // m[top][top]
            if q:
                for i in range(top, nrows):
                    m[i][j] -= q * m[i][top]
            if m[top][j] != 0:
                dirty = True
        if dirty:
            continue
        # pivot must divide every remaining entry for the invariant-factor chain
        offender = None
        for i in range(top + 1, nrows):
            for j in range(top + 1, ncols):
                if m[i][j] % m[top][top] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for j in range(top, ncols):
                m[top][j] += m[offender][j]
            continue
        diag.append(abs(m[top][top]))
        top += 1
    return diag


@dataclass(frozen=True)
class Quotient:
    """G/H in cyclic-factor form plus the coset-representative map."""

    group: AbelianGroup
    reps: tuple[Element, ...]
    _rep_of: dict

    def rep_of(self, g: Element) -> Element:
        return self._rep_of[g]

    def rep_index(self, g: Element) -> int:
        return self.reps.index(self._rep_of[g])


def quotient(group: AbelianGroup, sub: Subgroup) -> Quotient:
    """Quotient group with lexicographically minimal coset representatives."""
    if sub.parent != group:
        raise NotSubgroup("subgroup belongs to a different group")
    relations = [
        [group.factors[i] if i == j else 0 for j in range(group.rank)]
        for i in range(group.rank)
    ]
    for h in sub.elements:
        relations.append(list(h))
    diag = smith_diagonal(relations)
    factors = tuple(sorted((d for d in diag if d > 1), reverse=True)) or (1,)
    rep_of = {}
    reps = []
    for g in group.elements():
        if g in rep_of:
            continue
        coset = sorted(group.add(g, h) for h in sub.elements)
        for member in coset:
            rep_of[member] = coset[0]
        reps.append(coset[0])
    reps.sort()
    q = AbelianGroup(factors)
    if q.order != group.order // sub.order or len(reps) != q.order:
        raise InternalInconsistency(
            f"quotient of order {group.order}/{sub.order} presented with {factors}"
        )
    return Quotient(q, tuple(reps), rep_of)


# ----------------------------------------------------------------------
# Cyclic-factor presentation of a subgroup.
# ----------------------------------------------------------------------

def _decompose(elems, add, neg, zero):
    """Invariant-factor generators [(g, m), ...] with m_1 >= m_2 >= ..., m_{i+1} | m_i.

    Splits off a maximal-order cyclic summand, recurses on the quotient and
    lifts the quotient generators, correcting each lift by a multiple of the
    first generator so its order is preserved.
    """
    if len(elems) == 1:
        return []

    def order_of(x):
        k, acc = 1, x
        while acc != zero:
            acc = add(acc, x)
            k += 1
        return k

    best = None
    for x in sorted(elems):
        m = order_of(x)
        if best is None or m > best[1]:
            best = (x, m)
    head, head_order = best

    cyclic = []
    acc = zero
    for _ in range(head_order):
        cyclic.append(acc)
        acc = add(acc, head)

    rep_of = {}
    for x in elems:
        rep_of[x] = min(add(x, c) for c in cyclic)
    reps = sorted(set(rep_of.values()))

    rest = _decompose(
        reps,
        lambda a, b: rep_of[add(a, b)],
        lambda a: rep_of[neg(a)],
        zero,
    )

    out = [(head, head_order)]
    for gen, m in rest:
        acc = zero
        for _ in range(m):
            acc = add(acc, gen)
        # acc lies in <head>; find it as c * head, then cancel (c//m) * head
        c, probe = 0, zero
        while probe != acc:
            probe = add(probe, head)
            c += 1
        assert c % m == 0, "lift correction must be divisible by the quotient order"
        shift = zero
        for _ in range(c // m):
            shift = add(shift, head)
        out.append((add(gen, neg(shift)), m))
    return out


@dataclass(frozen=True)
class Presentation:
    """Explicit isomorphism between a subgroup and a cyclic-factor group."""

    group: AbelianGroup
    gens: tuple[Element, ...]
    _to_parent: dict
    _from_parent: dict

    def to_parent(self, coords: Element) -> Element:
        return self._to_parent[coords]

    def from_parent(self, g: Element) -> Element:
        return self._from_parent[g]


@lru_cache(maxsize=None)
def cyclic_presentation(sub: Subgroup) -> Presentation:
    """Present a subgroup as a cyclic-factor group with explicit generators.

    When the subgroup is the whole group, the identity presentation on the
    ambient factors is used so reports line up with the original coordinates.
    """
    parent = sub.parent
    if sub.order == parent.order:
        ident = {g: g for g in parent.elements()}
        basis = tuple(
            parent.reduce(tuple(1 if j == i else 0 for j in range(parent.rank)))
            for i in range(parent.rank)
        )
        return Presentation(parent, basis, ident, ident)

    pairs = _decompose(list(sub.elements), parent.add, parent.neg, parent.zero)
    if not pairs:
        group = AbelianGroup((1,))
        zero = parent.zero
        return Presentation(group, (zero,), {(0,): zero}, {zero: (0,)})

    factors = tuple(m for _, m in pairs)
    gens = tuple(g for g, _ in pairs)
    group = AbelianGroup(factors)
    to_parent = {}
    from_parent = {}
    for coords in group.elements():
        g = parent.zero
        for c, gen in zip(coords, gens):
            g = parent.add(g, parent.scalar_mul(c, gen))
        to_parent[coords] = g
        from_parent[g] = coords
    if len(from_parent) != sub.order or set(from_parent) != set(sub.elements):
        raise InternalInconsistency("cyclic presentation is not a bijection")
    return Presentation(group, gens, to_parent, from_parent)


# ----------------------------------------------------------------------
# Characters and the character table.
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Character:
    """chi(g) = prod_i zeta_{n_i}^(coords[i] * g[i]) on the parent group."""

    parent: AbelianGroup
    coords: Element

    def __post_init__(self):
        self.parent._check(self.coords)

    def eval(self, g: Element) -> RootOfUnity:
        self.parent._check(g)
        n = self.parent.exponent
        total = 0
        for c, gi, ni in zip(self.coords, g, self.parent.factors):
            total += c * gi * (n // ni)
        return root_of_unity(n, total % n)

    def __mul__(self, other: "Character") -> "Character":
        assert self.parent == other.parent
        return Character(self.parent, self.parent.add(self.coords, other.coords))

    @property
    def is_trivial(self) -> bool:
        return all(c == 0 for c in self.coords)


def characters(group: AbelianGroup) -> list[Character]:
    """All |G| characters, in lexicographic coordinate order."""
    return [Character(group, coords) for coords in group.elements()]


def restrict(chi: Character, sub: Subgroup) -> Character:
    """Restriction to a subgroup, expressed on its cyclic-factor presentation."""
    pres = cyclic_presentation(sub)
    coords = []
    for gen, m in zip(pres.gens, pres.group.factors):
        value = chi.eval(gen)
        if m % value.order != 0:
            raise InternalInconsistency(
                f"character value of order {value.order} on a generator of order {m}"
            )
        coords.append((value.exponent * (m // value.order)) % m)
    restricted = Character(pres.group, tuple(coords))
    return restricted


def character_eval(chi: Character, g: Element) -> RootOfUnity:
    return chi.eval(g)


def character_table(group: AbelianGroup) -> CycloMatrix:
    """|G| x |G| matrix of chi(g); rows by characters(), columns by elements()."""
    conductor = group.exponent
    elems = group.elements()
    rows = []
    for chi in characters(group):
        rows.append([embed(chi.eval(g), conductor) for g in elems])
    return CycloMatrix.from_rows(rows)


def character_root_table(group: AbelianGroup) -> list[list[RootOfUnity]]:
    elems = group.elements()
    return [[chi.eval(g) for g in elems] for chi in characters(group)]
