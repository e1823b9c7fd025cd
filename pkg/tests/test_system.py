import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cdsem.system import (
    BasicType,
    ClassType,
    System,
    ValueToken,
    VariationConfig,
    p_car_type1,
    p_sub_noncirc,
    p_sub_trans,
    transitive_closure,
    valid,
    well_formed,
)

from gen import random_system
from strategies import relations

V0 = frozenset({ValueToken(0)})
ABC_CYCLE = {("A", "C"), ("C", "B"), ("B", "A")}
ALL_ABC = set(itertools.product("ABC", repeat=2))


def sub_system(sub, classes="ABC"):
    return System(types={ClassType(c) for c in classes}, classes=set(classes),
                  car={ClassType(c): V0 for c in classes}, sub=sub)


# independent oracles ------------------------------------------------------

def transitive_by_triples(rel, universe):
    return all(
        not ((a, b) in rel and (b, c) in rel) or (a, c) in rel
        for a, b, c in itertools.product(universe, repeat=3)
    )


def closure_by_paths(rel):
    """Pairs joined by a non-empty path, found by bounded path enumeration."""
    nodes = {x for p in rel for x in p}
    result = set()
    for a in nodes:
        frontier = {a}
        for _ in range(len(nodes)):
            frontier = {b for x in frontier for (y, b) in rel if y == x}
            result |= {(a, b) for b in frontier}
    return result


# well_formed --------------------------------------------------------------

def test_type_constructors_are_free():
    assert BasicType("A") != ClassType("A")
    assert len({BasicType("A"), ClassType("A")}) == 2
    assert sorted([ClassType("A"), BasicType("z"), BasicType("a")]) == [
        BasicType("a"), BasicType("z"), ClassType("A")]


def test_well_formed_empty():
    assert well_formed(System())


def test_well_formed_class_without_type():
    assert not well_formed(System(classes={"A"}))


def test_well_formed_two_classes():
    assert well_formed(sub_system({("A", "B")}, "AB"))


@pytest.mark.parametrize("sm", [
    System(types={ClassType("A")}, classes={"A"}, car={ClassType("A"): V0}, sub={("A", "B")}),
    System(types={ClassType("A")}, classes={"A"}, car={}),
    System(types={ClassType("A")}, classes={"A"}, car={ClassType("A"): V0, BasicType("int"): V0}),
    System(types={ClassType("A")}, classes={"A"}, car={ClassType("A"): V0},
           attrs={("A", "x", BasicType("int"))}),
    System(types={ClassType("A")}, classes={"A"}, car={ClassType("A"): V0},
           attrs={("B", "x", ClassType("A"))}),
    System(types={ClassType("A")}, classes={"A"}, car={ClassType("A"): V0}, assoc_links={("A", "B")}),
    System(types={BasicType("A")}, classes={"A"}, car={BasicType("A"): V0}),
])
def test_well_formed_violations(sm):
    assert not well_formed(sm)


# predicates ---------------------------------------------------------------

def test_car_type1():
    assert p_car_type1(System())
    int_t = BasicType("int")
    assert not p_car_type1(System(types={int_t}, car={int_t: set()}))
    both = System(types={ClassType("A"), int_t}, classes={"A"},
                  car={ClassType("A"): {ValueToken(0)}, int_t: {ValueToken(1)}})
    assert p_car_type1(both)


def test_sub_trans_examples():
    assert p_sub_trans(System())
    assert not p_sub_trans(sub_system({("C", "B"), ("B", "A")}))
    assert p_sub_trans(sub_system({("C", "B"), ("B", "A"), ("C", "A")}))


def test_sub_noncirc_examples():
    assert p_sub_noncirc(sub_system({("A", "A")}))
    assert not p_sub_noncirc(sub_system({("A", "B"), ("B", "A")}))
    assert transitive_closure(ABC_CYCLE) == ALL_ABC
    assert not p_sub_noncirc(sub_system(ALL_ABC))


def test_valid_examples():
    cfg = VariationConfig()
    assert valid(System(), cfg)
    assert not valid(sub_system({("C", "B"), ("B", "A")}), cfg)
    closed = sub_system({("C", "B"), ("B", "A"), ("C", "A")})
    assert valid(closed, VariationConfig(require_noncircular=True))


def test_valid_respects_flags():
    empty_car = System(types={ClassType("A")}, classes={"A"}, car={ClassType("A"): set()})
    assert not valid(empty_car, VariationConfig())
    assert valid(empty_car, VariationConfig(require_car_nonempty=False))
    open_chain = sub_system({("C", "B"), ("B", "A")})
    assert valid(open_chain, VariationConfig(require_transitive=False))
    assert valid(sub_system(ALL_ABC), VariationConfig())
    assert not valid(sub_system(ALL_ABC), VariationConfig(require_noncircular=True))
    # single inheritance has no system-level reading
    assert valid(sub_system({("A", "B"), ("A", "C")}), VariationConfig(single_inheritance=True))
    assert not valid(System(classes={"A"}), VariationConfig(False, False, False, False))


def test_transitive_relations_on_two_elements():
    pairs = list(itertools.product("ab", repeat=2))
    rels = [frozenset(p for i, p in enumerate(pairs) if mask >> i & 1) for mask in range(16)]
    expected = [transitive_by_triples(r, "ab") for r in rels]
    assert sum(expected) == 13
    got = [p_sub_trans(sub_system(set(r), "ab")) for r in rels]
    assert got == expected


# closure ------------------------------------------------------------------

def test_closure_examples():
    assert transitive_closure(set()) == frozenset()
    assert transitive_closure({("C", "B"), ("B", "A")}) == {("C", "B"), ("B", "A"), ("C", "A")}
    assert transitive_closure(ABC_CYCLE) == ALL_ABC


@given(relations)
def test_closure_matches_path_oracle(rel):
    assert transitive_closure(rel) == closure_by_paths(rel)


@given(relations, relations)
def test_closure_laws(r, s):
    c = transitive_closure(r)
    assert r <= c
    assert transitive_closure(c) == c
    assert transitive_closure(r) <= transitive_closure(r | s)
    assert transitive_by_triples(c, "abcd")


@given(relations)
def test_sub_trans_iff_closed(rel):
    sm = sub_system(set(rel), "abcd")
    assert p_sub_trans(sm) == (rel == transitive_closure(rel))


@given(st.integers(0, 2**32 - 1))
def test_car_irrelevance(seed):
    sm = random_system(random.Random(seed))
    if not p_car_type1(sm):
        return
    collapsed = System(types=sm.types, classes=sm.classes, sub=sm.sub, attrs=sm.attrs,
                       assoc_links=sm.assoc_links, car={t: V0 for t in sm.car})
    for pred in (well_formed, p_car_type1, p_sub_trans, p_sub_noncirc):
        assert pred(collapsed) == pred(sm)
