"""Finite systems of the structural system model and the predicates over them.

A :class:`System` carries the type universe, the class universe (classes are
identified by name), a carrier set per type, the subclass relation and the
attribute/link facts needed by the class-diagram mapping.  Pair ``(a, b)`` in
``sub`` reads "a is a subclass of b".
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import total_ordering
from typing import AbstractSet, Iterable, Mapping

Pair = tuple[str, str]


@total_ordering
@dataclass(frozen=True)
class TypeId:
    name: str

    _rank = 0

    def __lt__(self, other: "TypeId") -> bool:
        if not isinstance(other, TypeId):
            return NotImplemented
        return (self._rank, self.name) < (other._rank, other.name)

    def __str__(self) -> str:
        return f"{self._label} {self.name}"


@dataclass(frozen=True)
class BasicType(TypeId):
    _rank = 0
    _label = "Basic"


@dataclass(frozen=True)
class ClassType(TypeId):
    _rank = 1
    _label = "Class"


@dataclass(frozen=True, order=True)
class ValueToken:
    index: int

    def __str__(self) -> str:
        return f"v{self.index}"


@dataclass(frozen=True)
class System:
    types: AbstractSet[TypeId] = frozenset()
    classes: AbstractSet[str] = frozenset()
    car: Mapping[TypeId, AbstractSet[ValueToken]] = field(default_factory=dict, hash=False)
    sub: AbstractSet[Pair] = frozenset()
    attrs: AbstractSet[tuple[str, str, TypeId]] = frozenset()
    assoc_links: AbstractSet[Pair] = frozenset()

    def __post_init__(self) -> None:
        for name in ("types", "classes", "sub", "attrs", "assoc_links"):
            value = getattr(self, name)
            if not isinstance(value, frozenset):
                object.__setattr__(self, name, frozenset(value))
        car = self.car
        if not (type(car) is dict and all(type(v) is frozenset for v in car.values())):
            object.__setattr__(self, "car", {t: frozenset(v) for t, v in car.items()})


@dataclass(frozen=True)
class VariationConfig:
    """Switches for the optional system predicates."""

    require_car_nonempty: bool = True
    require_transitive: bool = True
    require_noncircular: bool = False
    single_inheritance: bool = False


def well_formed(sm: System) -> bool:
    class_types = {t.name for t in sm.types if isinstance(t, ClassType)}
    if not sm.classes <= class_types:
        return False
    if not {c for pair in sm.sub for c in pair} <= sm.classes:
        return False
    if any(c not in sm.classes or t not in sm.types for c, _, t in sm.attrs):
        return False
    if sm.car.keys() != sm.types:
        return False
    return {c for pair in sm.assoc_links for c in pair} <= sm.classes


def p_car_type1(sm: System) -> bool:
    return all(sm.car.get(t) for t in sm.types)


def p_sub_trans(sm: System) -> bool:
    sub = sm.sub
    succ: dict[str, set[str]] = {}
    for a, b in sub:
        succ.setdefault(a, set()).add(b)
    return all((a, c) in sub for a, b in sub for c in succ.get(b, ()))


def p_sub_noncirc(sm: System) -> bool:
    return all(a == b or (b, a) not in sm.sub for a, b in sm.sub)


def valid(sm: System, cfg: VariationConfig) -> bool:
    """Well-formedness plus every predicate enabled in ``cfg``.

    ``single_inheritance`` is a syntactic restriction and is not read here.
    """
    if not well_formed(sm):
        return False
    if cfg.require_car_nonempty and not p_car_type1(sm):
        return False
    if cfg.require_transitive and not p_sub_trans(sm):
        return False
    if cfg.require_noncircular and not p_sub_noncirc(sm):
        return False
    return True


def transitive_closure(rel: Iterable[Pair]) -> frozenset[Pair]:
    closure = set(rel)
    succ: dict[str, set[str]] = {}
    for a, b in closure:
        succ.setdefault(a, set()).add(b)
    changed = True
    while changed:
        changed = False
        for a in list(succ):
            reach = set(succ[a])
            for b in succ[a]:
                reach |= succ.get(b, set())
            if reach != succ[a]:
                succ[a] = reach
                changed = True
    return frozenset((a, b) for a, bs in succ.items() for b in bs)
