"""Mapping of diagrams to the sets of systems they denote.

The denotation of a diagram is kept intensional: a set of positive atoms,
each of which every member system must satisfy.  Membership of a system in
the denotation of a list of documents is :func:`in_sem`; the denotation of a
list is the intersection of the denotations of its members.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import AbstractSet, Iterable, Union

from .syntax import AssocDecl, ClassDecl, Diagram
from .system import BasicType, ClassType, System, VariationConfig, valid


@dataclass(frozen=True, order=True)
class ClassExists:
    name: str


@dataclass(frozen=True, order=True)
class TypeExistsByName:
    name: str


@dataclass(frozen=True, order=True)
class SubEdge:
    sub_class: str
    super_class: str


@dataclass(frozen=True, order=True)
class AttrFact:
    class_name: str
    attr: str
    type_name: str


@dataclass(frozen=True, order=True)
class AssocFact:
    left: str
    right: str


Atom = Union[ClassExists, TypeExistsByName, SubEdge, AttrFact, AssocFact]
ConstraintSet = frozenset


@functools.lru_cache(maxsize=4096)
def extract_constraints(d: Diagram) -> frozenset[Atom]:
    atoms: set[Atom] = set()
    for e in d.elements:
        if isinstance(e, ClassDecl):
            atoms.add(ClassExists(e.name))
            for s in e.supers:
                atoms.add(ClassExists(s))
                atoms.add(SubEdge(e.name, s))
            for a in e.attrs:
                atoms.add(AttrFact(e.name, a.name, a.type_name))
                atoms.add(TypeExistsByName(a.type_name))
        elif isinstance(e, AssocDecl):
            atoms.update((ClassExists(e.left), ClassExists(e.right), AssocFact(e.left, e.right)))
    return frozenset(atoms)


def extract_all(docs: Iterable[Diagram]) -> frozenset[Atom]:
    atoms: frozenset[Atom] = frozenset()
    for d in docs:
        atoms |= extract_constraints(d)
    return atoms


def holds_atom(sm: System, atom: Atom) -> bool:
    match atom:
        case ClassExists(name):
            return name in sm.classes
        case TypeExistsByName(name):
            return ClassType(name) in sm.types or BasicType(name) in sm.types
        case SubEdge(a, b):
            return (a, b) in sm.sub
        case AttrFact(c, a, t):
            return any(
                (c, a, tid) in sm.attrs and tid in sm.types
                for tid in (ClassType(t), BasicType(t))
            )
        case AssocFact(left, right):
            return (left, right) in sm.assoc_links
    raise TypeError(f"not an atom: {atom!r}")


def satisfies(sm: System, cs: AbstractSet[Atom]) -> bool:
    return all(holds_atom(sm, a) for a in cs)


def in_sem(sm: System, docs: Iterable[Diagram], cfg: VariationConfig) -> bool:
    """True iff ``sm`` belongs to the joint denotation of ``docs`` under ``cfg``."""
    if not valid(sm, cfg):  # includes well_formed
        return False
    return all(satisfies(sm, extract_constraints(d)) for d in docs)
