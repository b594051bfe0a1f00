import itertools

import pytest

from pointedcat.cyclotomic import CycloMatrix, CycloNumber, root_of_unity
from pointedcat.errors import GroupTooLarge, NotSubgroup, ParseError, ShapeMismatch
from pointedcat.groups import (
    AbelianGroup,
    all_subgroups,
    character_table,
    characters,
    cyclic_presentation,
    format_group,
    parse_group,
    quotient,
    restrict,
    smith_diagonal,
    subgroup_from_elements,
    subgroup_generated,
    trivial_subgroup,
)


def test_group_literals():
    assert parse_group("Z2").factors == (2,)
    assert parse_group("z4Xz2").factors == (4, 2)
    assert parse_group("Z2xZ2xZ3").factors == (2, 2, 3)
    assert format_group(AbelianGroup((4, 2))) == "Z4xZ2"
    with pytest.raises(ParseError):
        parse_group("S3")
    with pytest.raises(ParseError):
        parse_group("")


def test_elements_order_is_lexicographic():
    assert parse_group("Z2").elements() == [(0,), (1,)]
    assert parse_group("Z2xZ2").elements() == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert parse_group("Z4").elements() == [(0,), (1,), (2,), (3,)]


def test_arithmetic():
    g = parse_group("Z4")
    assert g.add((3,), (2,)) == (1,)
    assert g.neg((1,)) == (3,)
    assert g.element_order((2,)) == 2
    with pytest.raises(ShapeMismatch):
        g.add((1, 0), (1,))


def test_subgroup_generated():
    g = parse_group("Z4")
    assert subgroup_generated(g, [(2,)]).elements == ((0,), (2,))
    g22 = parse_group("Z2xZ2")
    assert subgroup_generated(g22, [(1, 0), (0, 1)]).order == 4
    assert subgroup_generated(g22, []).elements == ((0, 0),)


def test_subgroup_validation():
    g = parse_group("Z4")
    with pytest.raises(NotSubgroup):
        # not closed: {0, 1} misses 2
        from pointedcat.groups import Subgroup
        Subgroup(g, ((0,), (1,)), ((1,),))


# -- all_subgroups against a brute-force oracle -------------------------

def oracle_subgroups(group):
    """Close every subset of G and collect the distinct results."""
    elems = group.elements()
    found = set()
    for size in range(len(elems) + 1):
        for subset in itertools.combinations(elems, size):
            closure = {group.zero}
            frontier = list(subset)
            closure.update(frontier)
            while frontier:
                nxt = []
                for a in frontier:
                    for b in list(closure):
                        s = group.add(a, b)
                        if s not in closure:
                            closure.add(s)
                            nxt.append(s)
                frontier = nxt
            found.add(frozenset(closure))
    return found


@pytest.mark.parametrize("literal,count", [("Z2xZ2", 5), ("Z4", 3), ("Z5", 2)])
def test_all_subgroups_counts(literal, count):
    group = parse_group(literal)
    subs = all_subgroups(group)
    assert len(subs) == count
    assert {frozenset(s.elements) for s in subs} == oracle_subgroups(group)


def test_all_subgroups_sorted_and_lagrange():
    group = parse_group("Z2xZ4")
    subs = all_subgroups(group)
    assert {frozenset(s.elements) for s in subs} == oracle_subgroups(group)
    keys = [(s.order, s.elements) for s in subs]
    assert keys == sorted(keys)
    for s in subs:
        assert group.order % s.order == 0


@pytest.mark.parametrize("literal", ["Z2xZ4", "Z3xZ3", "Z12"])
def test_lattice_closed_under_intersection(literal):
    group = parse_group(literal)
    subs = all_subgroups(group)
    lattice = {frozenset(s.elements) for s in subs}
    for a in subs:
        for b in subs:
            assert frozenset(set(a.elements) & set(b.elements)) in lattice


def test_all_subgroups_bound():
    with pytest.raises(GroupTooLarge):
        all_subgroups(parse_group("Z32"), max_order=16)


# -- quotients -----------------------------------------------------------

def test_quotient_examples():
    g4 = parse_group("Z4")
    q = quotient(g4, subgroup_generated(g4, [(2,)]))
    assert q.group.factors == (2,)
    assert q.reps == ((0,), (1,))

    q_id = quotient(g4, trivial_subgroup(g4))
    assert q_id.group.order == 4
    assert q_id.reps == tuple(g4.elements())

    g22 = parse_group("Z2xZ2")
    q_diag = quotient(g22, subgroup_generated(g22, [(1, 1)]))
    assert q_diag.group.factors == (2,)
    assert q_diag.reps == ((0, 0), (0, 1))
    assert q_diag.rep_of((1, 1)) == (0, 0)
    assert q_diag.rep_of((1, 0)) == (0, 1)


def test_quotient_orders_and_fibers():
    group = parse_group("Z2xZ4")
    for sub in all_subgroups(group):
        q = quotient(group, sub)
        assert q.group.order == group.order // sub.order
        fibers = {}
        for g in group.elements():
            fibers.setdefault(q.rep_of(g), []).append(g)
        assert set(fibers) == set(q.reps)
        assert all(len(v) == sub.order for v in fibers.values())


def test_quotient_rejects_foreign_subgroup():
    with pytest.raises(NotSubgroup):
        quotient(parse_group("Z4"), trivial_subgroup(parse_group("Z2")))


def test_smith_diagonal():
    assert smith_diagonal([[2, 0], [0, 4]]) == [2, 4]
    assert smith_diagonal([[4, 0], [0, 2]]) == [2, 4]
    # relation matrix of Z4 x Z4 mod the diagonal Z4: quotient is Z4
    diag = smith_diagonal([[4, 0], [0, 4], [1, 1]])
    assert [d for d in diag if d > 1] == [4]


# -- characters ----------------------------------------------------------

def test_characters_z2():
    g = parse_group("Z2")
    values = [chi.eval((1,)) for chi in characters(g)]
    assert values == [root_of_unity(1, 0), root_of_unity(2, 1)]


def test_character_eval_z4():
    g = parse_group("Z4")
    chi = characters(g)[1]
    assert chi.coords == (1,)
    assert chi.eval((1,)) == root_of_unity(4, 1)


def test_characters_are_homomorphisms():
    for literal in ("Z2", "Z3", "Z4", "Z2xZ2", "Z2xZ4"):
        g = parse_group(literal)
        for chi in characters(g):
            for a in g.elements():
                for b in g.elements():
                    assert chi.eval(g.add(a, b)) == chi.eval(a) * chi.eval(b)


def test_restrict_to_diagonal():
    g = parse_group("Z2xZ2")
    diag = subgroup_generated(g, [(1, 1)])
    chi = characters(g)[g.element_index((1, 0))]
    restricted = restrict(chi, diag)
    assert restricted.parent.factors == (2,)
    assert restricted.coords == (1,)
    # restriction agrees with chi on every subgroup element
    pres = cyclic_presentation(diag)
    for coords in pres.group.elements():
        assert restricted.eval(coords) == chi.eval(pres.to_parent(coords))


def test_restrict_is_multiplicative():
    g = parse_group("Z2xZ4")
    sub = subgroup_generated(g, [(1, 2)])
    for chi in characters(g):
        for psi in characters(g):
            lhs = restrict(chi * psi, sub)
            rhs = restrict(chi, sub) * restrict(psi, sub)
            assert lhs.coords == rhs.coords


def test_cyclic_presentation_every_subgroup():
    for literal in ("Z2", "Z4", "Z2xZ2", "Z2xZ4", "Z3xZ3"):
        group = parse_group(literal)
        for sub in all_subgroups(group):
            pres = cyclic_presentation(sub)
            assert pres.group.order == sub.order
            seen = {pres.to_parent(c) for c in pres.group.elements()}
            assert seen == set(sub.elements)
            if sub.order == group.order:
                # the whole group keeps its own coordinates
                assert pres.group == group
                continue
            for gen, order in zip(pres.gens, pres.group.factors):
                if sub.order > 1:
                    assert group.element_order(gen) == order or order == 1
            # invariant factors descend and divide
            factors = pres.group.factors
            for a, b in zip(factors, factors[1:]):
                assert a % b == 0


def test_character_table_examples():
    one = CycloNumber.one()
    minus = CycloNumber.from_rational(-1)
    assert character_table(parse_group("Z2")) == CycloMatrix.from_rows(
        [[one, one], [one, minus]]
    )
    assert character_table(AbelianGroup((1,))) == CycloMatrix.from_rows([[one]])


def test_character_table_z3_unitary():
    table = character_table(parse_group("Z3"))
    gram = table.matmul(table.conj().transpose())
    assert gram == CycloMatrix.identity(3).scale(CycloNumber.from_rational(3))


def _abelian_groups_up_to(n):
    from pointedcat.battery import _abelian_groups_of_order

    out = []
    for order in range(1, n + 1):
        out.extend(_abelian_groups_of_order(order))
    return out


def test_character_table_invertible_up_to_16():
    for group in _abelian_groups_up_to(16):
        assert character_table(group).rank() == group.order


def test_subgroup_from_elements_dedupes():
    g = parse_group("Z4")
    sub = subgroup_from_elements(g, [(2,), (0,), (2,)])
    assert sub.elements == ((0,), (2,))
    assert sub.generators == ((2,),)
