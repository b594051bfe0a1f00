"""Abelian 3-cocycles (associator + braiding scalars) on a finite abelian group.

A pair of tables (psi, omega) on G encodes a braided monoidal structure on
G-graded lines: psi is the associator scalar on triples, omega the braiding
scalar on pairs.  The pentagon and two hexagon identities below pin the
scalar conventions; they are validated wholesale, and two theorem-backed
assertions guard the convention: the trace g -> omega(g, g) of any valid
pair must be a quadratic form, and building the standard pair back from a
quadratic form must return it as its trace.  If either ever fails the build
aborts; conventions are never silently patched.

All cochains are normalized (value 1 whenever an argument is the identity).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import reduce

from .cyclotomic import ONE, RootOfUnity, root_of_unity
from .errors import (
    BoundsExceeded,
    ConventionError,
    GroupTooLarge,
    InvalidQuadraticForm,
    NotACocycle,
    NotRealizable,
    NotSubgroup,
    OrderTooLarge,
    ParseError,
)
from .groups import AbelianGroup, Element, Subgroup


def _product(values) -> RootOfUnity:
    return reduce(lambda a, b: a * b, values, ONE)


# ----------------------------------------------------------------------
# Tables.
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class AbelianCocycle:
    """Dense (psi, omega) tables indexed by element-index triples and pairs."""

    group: AbelianGroup
    psi: tuple[RootOfUnity, ...]
    omega: tuple[RootOfUnity, ...]

    def __post_init__(self):
        n = self.group.order
        assert len(self.psi) == n**3 and len(self.omega) == n**2

    def psi_at(self, a: Element, b: Element, c: Element) -> RootOfUnity:
        n = self.group.order
        idx = self.group.element_index
        return self.psi[(idx(a) * n + idx(b)) * n + idx(c)]

    def omega_at(self, a: Element, b: Element) -> RootOfUnity:
        idx = self.group.element_index
        return self.omega[idx(a) * self.group.order + idx(b)]

    @property
    def normalized(self) -> bool:
        return self.normalization_witness() is None

    def normalization_witness(self):
        """First table entry violating normalization, or None."""
        zero = self.group.zero
        elems = self.group.elements()
        for a in elems:
            if not self.omega_at(a, zero).is_one:
                return ("omega", (a, zero))
            if not self.omega_at(zero, a).is_one:
                return ("omega", (zero, a))
            for b in elems:
                for triple in ((zero, a, b), (a, zero, b), (a, b, zero)):
                    if not self.psi_at(*triple).is_one:
                        return ("psi", triple)
        return None


def cocycle_from_tables(group: AbelianGroup, psi_table: dict, omega_table: dict) -> AbelianCocycle:
    """Assemble from sparse dicts keyed by element tuples; missing entries are 1."""
    elems = group.elements()
    psi = [
        psi_table.get((a, b, c), ONE)
        for a in elems
        for b in elems
        for c in elems
    ]
    omega = [omega_table.get((a, b), ONE) for a in elems for b in elems]
    return AbelianCocycle(group, tuple(psi), tuple(omega))


@dataclass(frozen=True)
class TwoCochain:
    """Normalized map domain x domain -> roots of unity on a subgroup's elements."""

    parent: AbelianGroup
    domain: tuple[Element, ...]
    table: tuple[RootOfUnity, ...]

    def __post_init__(self):
        assert len(self.table) == len(self.domain) ** 2
        object.__setattr__(
            self, "_index", {g: i for i, g in enumerate(self.domain)}
        )
        zero = self.parent.zero
        if zero not in self._index:
            raise ParseError("two-cochain domain must contain the identity")
        for g in self.domain:
            if not (self.at(g, zero).is_one and self.at(zero, g).is_one):
                raise ParseError(f"two-cochain not normalized at {g}")

    def at(self, a: Element, b: Element) -> RootOfUnity:
        return self.table[self._index[a] * len(self.domain) + self._index[b]]


def two_cochain_from_table(
    parent: AbelianGroup, domain, table: dict
) -> TwoCochain:
    domain = tuple(sorted(domain))
    values = [table.get((a, b), ONE) for a in domain for b in domain]
    return TwoCochain(parent, domain, tuple(values))


# ----------------------------------------------------------------------
# Cocycle conditions.
# ----------------------------------------------------------------------

def check_pentagon(c: AbelianCocycle):
    """psi(b,c,d) psi(a,b+c,d) psi(a,b,c) = psi(a+b,c,d) psi(a,b,c+d) on all quadruples.

    Returns (True, None) or (False, first violating quadruple).  For a
    normalized table, quadruples with a zero argument hold identically, so
    only all-nonzero ones are scanned; a trivial associator passes outright.
    """
    g = c.group
    if all(v.is_one for v in c.psi):
        return True, None
    elems = g.elements()
    if c.normalized:
        elems = [x for x in elems if x != g.zero]
    for a, b, cc, d in itertools.product(elems, repeat=4):
        lhs = c.psi_at(b, cc, d) * c.psi_at(a, g.add(b, cc), d) * c.psi_at(a, b, cc)
        rhs = c.psi_at(g.add(a, b), cc, d) * c.psi_at(a, b, g.add(cc, d))
        if lhs != rhs:
            return False, (a, b, cc, d)
    return True, None


def check_hexagons(c: AbelianCocycle):
    """Both hexagon identities relating omega to psi; witness is ("H1"|"H2", triple).

    H1: omega(a,b+c) = omega(a,b) omega(a,c) psi(a,b,c)^-1 psi(b,a,c) psi(b,c,a)^-1
    H2: omega(a+b,c) = omega(a,c) omega(b,c) psi(a,b,c) psi(a,c,b)^-1 psi(c,a,b)

    For a normalized table both identities hold automatically whenever an
    argument is zero, so only all-nonzero triples are scanned then.
    """
    g = c.group
    elems = g.elements()
    if c.normalized:
        elems = [x for x in elems if x != g.zero]
    for a, b, cc in itertools.product(elems, repeat=3):
        h1 = (
            c.omega_at(a, b)
            * c.omega_at(a, cc)
            * c.psi_at(a, b, cc).inv()
            * c.psi_at(b, a, cc)
            * c.psi_at(b, cc, a).inv()
        )
        if c.omega_at(a, g.add(b, cc)) != h1:
            return False, ("H1", (a, b, cc))
        h2 = (
            c.omega_at(a, cc)
            * c.omega_at(b, cc)
            * c.psi_at(a, b, cc)
            * c.psi_at(a, cc, b).inv()
            * c.psi_at(cc, a, b)
        )
        if c.omega_at(g.add(a, b), cc) != h2:
            return False, ("H2", (a, b, cc))
    return True, None


def is_abelian_cocycle(c: AbelianCocycle) -> bool:
    return check_pentagon(c)[0] and check_hexagons(c)[0]


def cocycle_failure(c: AbelianCocycle):
    """(condition name, witness) for the first violated condition, else None."""
    bad_entry = c.normalization_witness()
    if bad_entry is not None:
        return ("normalization", bad_entry)
    ok, witness = check_pentagon(c)
    if not ok:
        return ("pentagon", witness)
    ok, witness = check_hexagons(c)
    if not ok:
        return (witness[0], witness[1])
    return None


def require_cocycle(c: AbelianCocycle) -> None:
    failure = cocycle_failure(c)
    if failure is not None:
        raise NotACocycle(f"{failure[0]} condition fails at {failure[1]}")


# ----------------------------------------------------------------------
# Quadratic forms and their polarization.
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class QuadraticForm:
    """q: G -> roots of unity with q(0)=1, q(-g)=q(g), bimultiplicative polarization.

    The polarization sigma(g,h) = q(g+h) q(g)^-1 q(h)^-1 is cached at
    construction; it equals the double braiding of any cocycle tracing to q.
    """

    group: AbelianGroup
    values: tuple[RootOfUnity, ...]

    def __post_init__(self):
        g = self.group
        elems = g.elements()
        if len(self.values) != g.order:
            raise InvalidQuadraticForm(
                f"expected {g.order} values, got {len(self.values)}"
            )
        if not self.values[0].is_one:
            raise InvalidQuadraticForm("q(0) must be 1")
        idx = g.element_index
        for x in elems:
            if self.values[idx(x)] != self.values[idx(g.neg(x))]:
                raise InvalidQuadraticForm(f"q(-g) != q(g) at g = {x}")
        n = g.order
        sigma = [ONE] * (n * n)
        for x in elems:
            ix = idx(x)
            qx_inv = self.values[ix].inv()
            for y in elems:
                sigma[ix * n + idx(y)] = (
                    self.values[idx(g.add(x, y))] * qx_inv * self.values[idx(y)].inv()
                )
        # bimultiplicativity in one slot (the other follows by symmetry of sigma);
        # stepping by basis vectors is equivalent to the full check by induction
        basis = [
            g.reduce(tuple(1 if j == i else 0 for j in range(g.rank)))
            for i in range(g.rank)
        ]
        for e in basis:
            ie = idx(e)
            for x in elems:
                ix, ixe = idx(x), idx(g.add(x, e))
                for y in elems:
                    iy = idx(y)
                    if sigma[ixe * n + iy] != sigma[ix * n + iy] * sigma[ie * n + iy]:
                        raise InvalidQuadraticForm(
                            f"polarization not bimultiplicative at ({x}+{e}, {y})"
                        )
        object.__setattr__(self, "_sigma", tuple(sigma))

    def q(self, g: Element) -> RootOfUnity:
        return self.values[self.group.element_index(g)]

    def pairing(self, g: Element, h: Element) -> RootOfUnity:
        idx = self.group.element_index
        return self._sigma[idx(g) * self.group.order + idx(h)]

    @property
    def conductor(self) -> int:
        return math.lcm(*(v.order for v in self.values))


@dataclass(frozen=True, eq=False)
class Pairing:
    """Symmetric bimultiplicative pairing table (the polarization)."""

    group: AbelianGroup
    table: tuple[RootOfUnity, ...]

    def eval(self, g: Element, h: Element) -> RootOfUnity:
        idx = self.group.element_index
        return self.table[idx(g) * self.group.order + idx(h)]


def polarization(q: QuadraticForm) -> Pairing:
    """sigma(g,h) = q(g+h) q(g)^-1 q(h)^-1; symmetry and bimultiplicativity checked."""
    pairing = Pairing(q.group, q._sigma)
    elems = q.group.elements()
    for g in elems:
        for h in elems:
            if pairing.eval(g, h) != pairing.eval(h, g):
                raise InvalidQuadraticForm(f"polarization not symmetric at ({g}, {h})")
    return pairing


def trace_form(c: AbelianCocycle) -> QuadraticForm:
    """q(g) = omega(g, g) of a valid cocycle.

    That this is a quadratic form is a theorem about the hexagon convention:
    a failure here means the convention itself is broken, so it aborts.
    """
    require_cocycle(c)
    values = tuple(c.omega_at(g, g) for g in c.group.elements())
    try:
        return QuadraticForm(c.group, values)
    except InvalidQuadraticForm as exc:
        raise ConventionError(
            f"trace of a valid cocycle is not a quadratic form: {exc}"
        ) from exc


def apply_coboundary(c: AbelianCocycle, phi: TwoCochain) -> AbelianCocycle:
    """Twist by a normalized 2-cochain on the whole group.

    psi'(a,b,c) = psi(a,b,c) phi(b,c) phi(a,b+c) phi(a+b,c)^-1 phi(a,b)^-1
    omega'(a,b) = omega(a,b) phi(b,a) phi(a,b)^-1

    The direction of the omega twist is the one coherent with the hexagon
    identities in check_hexagons (the opposite twist breaks them already on
    Z/3).  The output must still be a cocycle and must keep its trace form.
    """
    g = c.group
    if len(phi.domain) != g.order or phi.parent != g:
        raise NotSubgroup("coboundary cochain must be defined on the whole group")
    elems = g.elements()
    psi = {}
    omega = {}
    for a in elems:
        for b in elems:
            omega[(a, b)] = c.omega_at(a, b) * phi.at(b, a) * phi.at(a, b).inv()
            for cc in elems:
                psi[(a, b, cc)] = (
                    c.psi_at(a, b, cc)
                    * phi.at(b, cc)
                    * phi.at(a, g.add(b, cc))
                    * phi.at(g.add(a, b), cc).inv()
                    * phi.at(a, b).inv()
                )
    out = cocycle_from_tables(g, psi, omega)
    failure = cocycle_failure(out)
    if failure is not None:
        raise NotACocycle(
            f"coboundary twist broke the {failure[0]} condition at {failure[1]}; "
            "this signals a convention bug"
        )
    if tuple(out.omega_at(x, x) for x in elems) != tuple(c.omega_at(x, x) for x in elems):
        raise ConventionError("coboundary changed the trace form")
    return out


# ----------------------------------------------------------------------
# Standard cocycle of a quadratic form.
# ----------------------------------------------------------------------

def standard_cocycle(q: QuadraticForm) -> AbelianCocycle:
    """The canonical (psi, omega) pair whose trace is q.

    Per cyclic factor Z/n with tau = q(e_i):
        omega(a, b) *= tau^(a_i b_i),   psi(a, b, c) *= tau^(n a_i floor((b_i+c_i)/n))
    and cross terms omega(a, b) *= sigma(e_i, e_j)^(a_i b_j) for i < j.
    """
    g = q.group
    basis = [
        g.reduce(tuple(1 if j == i else 0 for j in range(g.rank)))
        for i in range(g.rank)
    ]
    taus = [q.q(e) for e in basis]
    for n, tau in zip(g.factors, taus):
        allowed = n if n % 2 == 1 else 2 * n
        if allowed % tau.order != 0:
            raise NotRealizable(
                f"q(e) of order {tau.order} on a cyclic factor of order {n}"
            )
    cross = {}
    for i in range(g.rank):
        for j in range(i + 1, g.rank):
            s = q.pairing(basis[i], basis[j])
            if math.gcd(g.factors[i], g.factors[j]) % s.order != 0:
                raise NotRealizable(
                    f"pairing of order {s.order} across factors "
                    f"{g.factors[i]} and {g.factors[j]}"
                )
            cross[(i, j)] = s

    elems = g.elements()
    omega = {}
    psi = {}
    for a in elems:
        for b in elems:
            parts = [tau ** (ai * bi) for tau, ai, bi in zip(taus, a, b)]
            parts += [
                cross[(i, j)] ** (a[i] * b[j])
                for i in range(g.rank)
                for j in range(i + 1, g.rank)
            ]
            omega[(a, b)] = _product(parts)
            for c in elems:
                parts = [
                    taus[i] ** (g.factors[i] * a[i] * ((b[i] + c[i]) // g.factors[i]))
                    for i in range(g.rank)
                ]
                psi[(a, b, c)] = _product(parts)
    out = cocycle_from_tables(g, psi, omega)
    failure = cocycle_failure(out)
    if failure is not None:
        raise ConventionError(
            f"standard cocycle violates the {failure[0]} condition at {failure[1]}"
        )
    if tuple(out.omega_at(x, x) for x in elems) != q.values:
        raise ConventionError("standard cocycle does not trace back to its form")
    return out


# ----------------------------------------------------------------------
# Exponent-vector search engine (shared by find_mu and classify_h3ab).
# ----------------------------------------------------------------------

def _solve_exponents(count: int, modulus: int, equations):
    """Yield exponent vectors in lexicographic order satisfying linear congruences.

    ``equations`` is a list of (terms, target) with terms = [(index, coeff)];
    a solution x has sum(coeff * x[index]) = target (mod modulus) for each.
    Constraints are applied as soon as their last variable is assigned, so the
    DFS prunes early and the first yield is the lexicographic minimum.
    """
    by_last = [[] for _ in range(count)]
    for terms, target in equations:
        merged: dict[int, int] = {}
        for idx, coeff in terms:
            merged[idx] = (merged.get(idx, 0) + coeff) % modulus
        merged = {i: c for i, c in merged.items() if c}
        target %= modulus
        if not merged:
            if target:
                return
            continue
        by_last[max(merged)].append((tuple(sorted(merged.items())), target))

    assign = [0] * count

    def dfs(pos: int):
        if pos == count:
            yield tuple(assign)
            return
        for value in range(modulus):
            assign[pos] = value
            if all(
                sum(coeff * assign[idx] for idx, coeff in terms) % modulus == target
                for terms, target in by_last[pos]
            ):
                yield from dfs(pos + 1)

    yield from dfs(0)


def _rou_exponent(r: RootOfUnity, modulus: int) -> int | None:
    """Exponent k with r = z_modulus^k, or None if the order does not divide."""
    if modulus % r.order != 0:
        return None
    return (r.exponent * (modulus // r.order)) % modulus


# ----------------------------------------------------------------------
# Trivializing 2-cochains on subgroups.
# ----------------------------------------------------------------------

def find_mu(c: AbelianCocycle, sub: Subgroup, value_order: int) -> TwoCochain | None:
    """Lexicographically first normalized mu on H with (delta mu) = psi|_H, or None.

    delta mu (a,b,c) = mu(b,c) mu(a,b+c) mu(a+b,c)^-1 mu(a,b)^-1, searched over
    values in the value_order-th roots of unity.
    """
    if sub.parent != c.group:
        raise NotSubgroup("subgroup belongs to a different group")
    if sub.order > 16 or value_order > 24:
        raise BoundsExceeded(
            f"mu search bounded at |H| <= 16, N <= 24; got {sub.order}, {value_order}"
        )
    if not c.normalized:
        raise NotACocycle("mu search requires a normalized cocycle")

    g = c.group
    zero = g.zero
    domain = sub.elements
    free = [(a, b) for a in domain for b in domain if a != zero and b != zero]
    slot = {pair: i for i, pair in enumerate(free)}

    def term(a: Element, b: Element, coeff: int):
        if a == zero or b == zero:
            return []
        return [(slot[(a, b)], coeff)]

    equations = []
    for a in domain:
        for b in domain:
            for cc in domain:
                target = _rou_exponent(c.psi_at(a, b, cc), value_order)
                if target is None:
                    return None
                terms = (
                    term(b, cc, +1)
                    + term(a, g.add(b, cc), +1)
                    + term(g.add(a, b), cc, -1)
                    + term(a, b, -1)
                )
                equations.append((terms, target))

    for solution in _solve_exponents(len(free), value_order, equations):
        table = {
            pair: root_of_unity(value_order, k) for pair, k in zip(free, solution)
        }
        return two_cochain_from_table(g, domain, table)
    return None


# ----------------------------------------------------------------------
# Brute-force classification on tiny groups.
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class CocycleClass:
    """A coboundary orbit, keyed by its trace quadratic form."""

    representative: AbelianCocycle
    form: QuadraticForm
    orbit_size: int


def classify_h3ab(group: AbelianGroup, value_order: int) -> list[CocycleClass]:
    """All normalized (psi, omega) pairs with values in the N-th roots, partitioned
    into coboundary orbits; orbits must coincide with trace-form fibers.

    Representatives are the lexicographically least orbit members; classes are
    sorted by their trace form.
    """
    if group.order > 4:
        raise GroupTooLarge(f"classification bounded at |G| <= 4, got {group.order}")
    if value_order > 8:
        raise OrderTooLarge(f"classification bounded at N <= 8, got {value_order}")

    g = group
    zero = g.zero
    elems = g.elements()
    nonzero = [x for x in elems if x != zero]
    n = value_order

    free_triples = [t for t in itertools.product(nonzero, repeat=3)]
    tslot = {t: i for i, t in enumerate(free_triples)}
    free_pairs = [p for p in itertools.product(nonzero, repeat=2)]
    pslot = {p: i for i, p in enumerate(free_pairs)}

    def psi_term(a, b, c, coeff):
        if zero in (a, b, c):
            return []
        return [(tslot[(a, b, c)], coeff)]

    def omega_term(a, b, coeff):
        if a == zero or b == zero:
            return []
        return [(pslot[(a, b)], coeff)]

    pentagon = []
    for a, b, c, d in itertools.product(elems, repeat=4):
        terms = (
            psi_term(b, c, d, +1)
            + psi_term(a, g.add(b, c), d, +1)
            + psi_term(a, b, c, +1)
            + psi_term(g.add(a, b), c, d, -1)
            + psi_term(a, b, g.add(c, d), -1)
        )
        pentagon.append((terms, 0))

    def psi_value(vec, a, b, c) -> int:
        if zero in (a, b, c):
            return 0
        return vec[tslot[(a, b, c)]]

    solutions = []
    for psi_vec in _solve_exponents(len(free_triples), n, pentagon):
        hexagons = []
        for a, b, c in itertools.product(elems, repeat=3):
            h1_terms = (
                omega_term(a, g.add(b, c), +1)
                + omega_term(a, b, -1)
                + omega_term(a, c, -1)
            )
            h1_target = -psi_value(psi_vec, a, b, c) + psi_value(psi_vec, b, a, c) - psi_value(psi_vec, b, c, a)
            hexagons.append((h1_terms, h1_target))
            h2_terms = (
                omega_term(g.add(a, b), c, +1)
                + omega_term(a, c, -1)
                + omega_term(b, c, -1)
            )
            h2_target = psi_value(psi_vec, a, b, c) - psi_value(psi_vec, a, c, b) + psi_value(psi_vec, c, a, b)
            hexagons.append((h2_terms, h2_target))
        for omega_vec in _solve_exponents(len(free_pairs), n, hexagons):
            solutions.append((psi_vec, omega_vec))

    # coboundary action: generated by elementary cochains, closed under addition
    generators = []
    for pair in free_pairs:
        phi = {pair: 1}

        def phi_at(x, y):
            return phi.get((x, y), 0)

        dpsi = []
        for a, b, c in free_triples:
            dpsi.append(
                (
                    phi_at(b, c)
                    + phi_at(a, g.add(b, c))
                    - phi_at(g.add(a, b), c)
                    - phi_at(a, b)
                )
                % n
            )
        domega = [(phi_at(b, a) - phi_at(a, b)) % n for a, b in free_pairs]
        generators.append((tuple(dpsi), tuple(domega)))

    identity = (tuple([0] * len(free_triples)), tuple([0] * len(free_pairs)))
    coboundaries = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for base in frontier:
            for gen in generators:
                combined = (
                    tuple((x + y) % n for x, y in zip(base[0], gen[0])),
                    tuple((x + y) % n for x, y in zip(base[1], gen[1])),
                )
                if combined not in coboundaries:
                    coboundaries.add(combined)
                    nxt.append(combined)
        frontier = nxt

    def trace_key(vec):
        return tuple(
            vec[1][pslot[(x, x)]] if x != zero else 0 for x in elems
        )

    solution_set = set(solutions)
    remaining = sorted(solution_set)
    seen = set()
    classes = []
    for sol in remaining:
        if sol in seen:
            continue
        orbit = {
            (
                tuple((x + y) % n for x, y in zip(sol[0], b[0])),
                tuple((x + y) % n for x, y in zip(sol[1], b[1])),
            )
            for b in coboundaries
        }
        if not orbit <= solution_set:
            raise ConventionError("coboundary orbit escaped the enumerated cocycle set")
        keys = {trace_key(member) for member in orbit}
        if len(keys) != 1:
            raise ConventionError("coboundary orbit mixes distinct trace forms")
        seen |= orbit
        psi_table = {
            t: root_of_unity(n, k) for t, k in zip(free_triples, sol[0])
        }
        omega_table = {
            p: root_of_unity(n, k) for p, k in zip(free_pairs, sol[1])
        }
        rep = cocycle_from_tables(g, psi_table, omega_table)
        require_cocycle(rep)
        classes.append(CocycleClass(rep, trace_form(rep), len(orbit)))

    forms = [tuple((v.order, v.exponent) for v in cls.form.values) for cls in classes]
    if len(set(forms)) != len(forms):
        raise ConventionError("two coboundary orbits share one trace form")
    order = sorted(range(len(classes)), key=lambda i: forms[i])
    return [classes[i] for i in order]
