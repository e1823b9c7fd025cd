"""Consistency and refinement decisions for sets of class diagrams.

Every atom produced by the mapping is positive, so a document list has a least
satisfying system.  :func:`canonical_system` builds it; when it fails an
enabled predicate, so does every system that satisfies the documents, because
the closure edges forced by transitivity are present in all of them.  That makes
:func:`check_consistency` and :func:`check_refinement` exact decisions.

:func:`enumerate_systems` with the ``brute_force_*`` functions is a bounded
oracle that only evaluates :func:`~cdsem.semantics.in_sem` over an explicit
search space.  It is used to cross-check the constructive decisions.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import ClassVar, Iterable, Iterator, Sequence

from .semantics import (
    AssocFact,
    AttrFact,
    ClassExists,
    SubEdge,
    TypeExistsByName,
    extract_all,
    holds_atom,
    in_sem,
)
from .syntax import Diagram
from .system import (
    BasicType,
    ClassType,
    Pair,
    System,
    TypeId,
    ValueToken,
    VariationConfig,
    transitive_closure,
)

DEFAULT_CAP = 2**24
FRESH_PREFIX = "_X"


class ScopeTooLarge(Exception):
    def __init__(self, candidates: int, cap: int):
        self.candidates = candidates
        self.cap = cap
        super().__init__(f"scope needs {candidates} candidate sub-relations, cap is {cap}")


@dataclass(frozen=True)
class Scope:
    extra_classes: int = 0
    values_per_type: int = 1
    allow_extra_attr_facts: bool = False

    def __post_init__(self) -> None:
        if self.extra_classes < 0:
            raise ValueError("extra_classes must be >= 0")
        if self.values_per_type < 1:
            raise ValueError("values_per_type must be >= 1")


# -- results ---------------------------------------------------------------

@dataclass(frozen=True)
class CycleEvidence:
    cycle: tuple[str, ...]

    def __str__(self) -> str:
        return "CYCLE " + " -> ".join(self.cycle)


@dataclass(frozen=True)
class SingleInheritanceViolation:
    class_name: str
    supers: tuple[str, ...]

    def __str__(self) -> str:
        return f"MULTIPLE-INHERITANCE {self.class_name} extends {', '.join(self.supers)}"


@dataclass(frozen=True)
class NoWitness:
    def __str__(self) -> str:
        return "NO-WITNESS"


Evidence = CycleEvidence | SingleInheritanceViolation | NoWitness


@dataclass(frozen=True)
class Consistent:
    witness: System
    consistent: ClassVar[bool] = True


@dataclass(frozen=True)
class Inconsistent:
    evidence: Evidence
    consistent: ClassVar[bool] = False


CheckResult = Consistent | Inconsistent


@dataclass(frozen=True)
class Refines:
    refines: ClassVar[bool] = True


@dataclass(frozen=True)
class NotRefines:
    counterexample: System
    refines: ClassVar[bool] = False


RefineResult = Refines | NotRefines


# -- canonical construction ------------------------------------------------

def canonical_system(docs: Iterable[Diagram], cfg: VariationConfig) -> System:
    atoms = extract_all(docs)
    classes = {a.name for a in atoms if isinstance(a, ClassExists)}
    types: set[TypeId] = {ClassType(c) for c in classes}
    types |= {BasicType(a.name) for a in atoms
              if isinstance(a, TypeExistsByName) and a.name not in classes}
    edges = {(a.sub_class, a.super_class) for a in atoms if isinstance(a, SubEdge)}
    sub = transitive_closure(edges) if cfg.require_transitive else frozenset(edges)
    if cfg.require_car_nonempty:
        car = {t: {ValueToken(i)} for i, t in enumerate(sorted(types))}
    else:
        car = {t: set() for t in types}

    def resolve(name: str) -> TypeId:
        return ClassType(name) if name in classes else BasicType(name)

    attrs = {(a.class_name, a.attr, resolve(a.type_name)) for a in atoms if isinstance(a, AttrFact)}
    links = {(a.left, a.right) for a in atoms if isinstance(a, AssocFact)}
    return System(types=types, classes=classes, car=car, sub=sub, attrs=attrs, assoc_links=links)


def declared_edges(docs: Iterable[Diagram]) -> frozenset[Pair]:
    return frozenset(
        (a.sub_class, a.super_class) for a in extract_all(docs) if isinstance(a, SubEdge)
    )


def find_cycle(edges: Iterable[Pair], transitive: bool = True) -> tuple[str, ...] | None:
    """A cycle of length >= 2 through distinct classes, or None.

    With ``transitive`` the cycle lies in the least non-trivial strongly
    connected component and is a shortest one through its least member; the
    list starts at that member, which is the lexicographically least rotation.
    Without it only two-cycles violate antisymmetry, so the least one is returned.
    """
    edges = frozenset(edges)
    if not transitive:
        pairs = sorted((a, b) for a, b in edges if a != b and (b, a) in edges)
        if not pairs:
            return None
        a, b = pairs[0]
        return (a, b, a)

    reach = transitive_closure(edges)
    start = min(
        (a for a, b in reach if a != b and (b, a) in reach),
        default=None,
    )
    if start is None:
        return None
    component = {start} | {b for a, b in reach if a == start and (b, start) in reach}
    succ: dict[str, list[str]] = {}
    for a, b in sorted(edges):
        if a in component and b in component and a != b:
            succ.setdefault(a, []).append(b)

    parent: dict[str, str] = {}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        for nxt in succ.get(node, ()):
            if nxt == start:
                path = [node]
                while path[-1] != start:
                    path.append(parent[path[-1]])
                return (start, *reversed(path[:-1]), start)
            if nxt not in parent:
                parent[nxt] = node
                queue.append(nxt)
    raise AssertionError("strongly connected component without a cycle")


def single_inheritance_violations(docs: Iterable[Diagram]) -> list[tuple[str, tuple[str, ...]]]:
    supers: dict[str, list[str]] = {}
    for d in docs:
        for c in d.classes:
            known = supers.setdefault(c.name, [])
            known.extend(s for s in c.supers if s not in known)
    return [(c, tuple(s)) for c, s in sorted(supers.items()) if len(s) >= 2]


def _inheritance_gate(docs: Sequence[Diagram], cfg: VariationConfig) -> Inconsistent | None:
    if cfg.single_inheritance:
        violations = single_inheritance_violations(docs)
        if violations:
            return Inconsistent(SingleInheritanceViolation(*violations[0]))
    return None


def check_consistency(docs: Sequence[Diagram], cfg: VariationConfig) -> CheckResult:
    docs = list(docs)
    gate = _inheritance_gate(docs, cfg)
    if gate is not None:
        return gate
    witness = canonical_system(docs, cfg)
    if in_sem(witness, docs, cfg):
        return Consistent(witness)
    # only the antisymmetry predicate can fail on the canonical system
    cycle = find_cycle(declared_edges(docs), transitive=cfg.require_transitive)
    assert cycle is not None
    return Inconsistent(CycleEvidence(cycle))


def check_refinement(
    refined: Sequence[Diagram], abstract: Sequence[Diagram], cfg: VariationConfig
) -> RefineResult:
    """Decide whether every system of ``refined`` is a system of ``abstract``."""
    result = check_consistency(refined, cfg)
    if not result.consistent:
        return Refines()
    canonical = result.witness
    if all(holds_atom(canonical, a) for a in extract_all(abstract)):
        return Refines()
    return NotRefines(canonical)


# -- bounded oracle --------------------------------------------------------

def _search_space_size(n_classes: int, scope: Scope) -> int:
    return sum(2 ** ((n_classes + k) ** 2) for k in range(scope.extra_classes + 1))


def enumerate_systems(
    base: Sequence[Diagram],
    scope: Scope = Scope(),
    cfg: VariationConfig = VariationConfig(),
    cap: int = DEFAULT_CAP,
) -> Iterator[System]:
    """Every well-formed system of the bounded search space, in a fixed order.

    The classes are the names declared by ``base`` plus ``k`` fresh classes
    ``_X0 .. _X{k-1}`` for ``k = 0 .. scope.extra_classes``.  The types are the
    class types plus a basic type for each referenced type name that is not a
    class.  For each ``k`` the systems are produced lexicographically over
    (sub, car sizes, attrs, assoc_links), where a subset of a sorted candidate
    list is ordered by its bitmask.  ``sub`` ranges over all subsets of
    classes x classes; each carrier holds between 0 (1 if the carrier predicate
    is enabled) and ``scope.values_per_type`` tokens; attrs and links range over
    subsets of the candidate facts of ``base``.

    Raises :class:`ScopeTooLarge` before yielding anything when the number of
    candidate sub-relations exceeds ``cap``.
    """
    atoms = extract_all(base)
    base_classes = sorted({a.name for a in atoms if isinstance(a, ClassExists)})
    needed = _search_space_size(len(base_classes), scope)
    if needed > cap:
        raise ScopeTooLarge(needed, cap)
    return _enumerate(atoms, base_classes, scope, cfg)


def _enumerate(atoms, base_classes: list[str], scope: Scope, cfg: VariationConfig) -> Iterator[System]:
    type_names = sorted({a.name for a in atoms if isinstance(a, TypeExistsByName)})
    attr_facts = sorted(a for a in atoms if isinstance(a, AttrFact))
    assoc_facts = sorted((a.left, a.right) for a in atoms if isinstance(a, AssocFact))
    lo = 1 if cfg.require_car_nonempty else 0

    for k in range(scope.extra_classes + 1):
        classes = base_classes + [f"{FRESH_PREFIX}{i}" for i in range(k)]
        class_set = frozenset(classes)
        types = sorted({ClassType(c) for c in classes}
                       | {BasicType(n) for n in type_names if n not in class_set})
        type_set = frozenset(types)
        by_name = {t.name: t for t in types}

        attr_cands = sorted({(f.class_name, f.attr, by_name[f.type_name]) for f in attr_facts})
        link_cands = list(assoc_facts)
        if scope.allow_extra_attr_facts:
            attr_names = sorted({f.attr for f in attr_facts})
            attr_cands = sorted(set(attr_cands)
                                | {(c, a, t) for c in classes for a in attr_names for t in types})
            link_cands = sorted(set(link_cands) | set(itertools.product(classes, classes)))

        pairs = list(itertools.product(classes, classes))
        car_choices = list(itertools.product(range(lo, scope.values_per_type + 1), repeat=len(types)))
        attr_subsets = _subsets(attr_cands)
        link_subsets = _subsets(link_cands)

        for sub in _subsets(pairs):
            for counts in car_choices:
                car = {}
                next_token = 0
                for t, n in zip(types, counts):
                    car[t] = frozenset(ValueToken(next_token + i) for i in range(n))
                    next_token += n
                for attrs in attr_subsets:
                    for links in link_subsets:
                        yield System(types=type_set, classes=class_set, car=car,
                                     sub=sub, attrs=attrs, assoc_links=links)


def _subsets(items: Sequence) -> list[frozenset]:
    return [
        frozenset(x for i, x in enumerate(items) if mask >> i & 1)
        for mask in range(2 ** len(items))
    ]


def brute_force_consistency(
    docs: Sequence[Diagram], cfg: VariationConfig, scope: Scope = Scope(), cap: int = DEFAULT_CAP
) -> CheckResult:
    docs = list(docs)
    gate = _inheritance_gate(docs, cfg)
    if gate is not None:
        return gate
    for sm in enumerate_systems(docs, scope, cfg, cap):
        if in_sem(sm, docs, cfg):
            return Consistent(sm)
    cycle = find_cycle(declared_edges(docs), transitive=cfg.require_transitive)
    return Inconsistent(CycleEvidence(cycle) if cycle else NoWitness())


def brute_force_refinement(
    refined: Sequence[Diagram],
    abstract: Sequence[Diagram],
    cfg: VariationConfig,
    scope: Scope = Scope(),
    cap: int = DEFAULT_CAP,
) -> RefineResult:
    """Search for a system of ``refined`` outside ``abstract``; bounded by ``scope``.

    A ``Refines`` verdict only covers the searched space.
    """
    refined, abstract = list(refined), list(abstract)
    if _inheritance_gate(refined, cfg) is not None:
        return Refines()
    for sm in enumerate_systems(refined, scope, cfg, cap):
        if in_sem(sm, refined, cfg) and not in_sem(sm, abstract, cfg):
            return NotRefines(sm)
    return Refines()
