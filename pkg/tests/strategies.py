"""Hypothesis strategies for diagrams and relations."""
from __future__ import annotations

from hypothesis import strategies as st

from cdsem.syntax import (
    AssocDecl, Attribute, ClassDecl, Diagram, KEYWORDS, Modifier, RawInvariant,
)

idents = st.from_regex(r"[A-Za-z][A-Za-z0-9_]{0,6}", fullmatch=True).filter(
    lambda s: s not in KEYWORDS
)
small_names = st.sampled_from(["A", "B", "C"])

invariant_texts = st.text(
    alphabet="abcxyz0123456789 <>=+-*().\n/", min_size=0, max_size=20
).map(str.strip).map(RawInvariant)

attributes = st.builds(
    Attribute,
    type_name=idents,
    name=idents,
    modifier=st.sampled_from([None, Modifier.PUBLIC, Modifier.PRIVATE]),
)

class_decls = st.builds(
    ClassDecl,
    name=idents,
    supers=st.lists(idents, max_size=3).map(tuple),
    attrs=st.lists(attributes, max_size=3).map(tuple),
)

assoc_decls = st.builds(AssocDecl, left=idents, right=idents)

diagrams = st.builds(
    Diagram,
    name=idents,
    invariants=st.lists(invariant_texts, max_size=2).map(tuple),
    elements=st.lists(st.one_of(class_decls, assoc_decls), max_size=5).map(tuple),
)

# diagrams over a three-name universe, used for semantic properties
small_class_decls = st.builds(
    ClassDecl,
    name=small_names,
    supers=st.lists(small_names, max_size=2).map(tuple),
    attrs=st.lists(
        st.builds(Attribute, type_name=st.sampled_from(["int", "bool", "A"]),
                  name=st.sampled_from(["x", "y"])),
        max_size=1,
    ).map(tuple),
)
small_diagrams = st.builds(
    Diagram,
    name=st.just("D"),
    elements=st.lists(
        st.one_of(small_class_decls, st.builds(AssocDecl, small_names, small_names)),
        max_size=3,
    ).map(tuple),
)
small_doc_lists = st.lists(small_diagrams, min_size=0, max_size=2)

relations = st.frozensets(st.tuples(st.sampled_from("abcd"), st.sampled_from("abcd")), max_size=10)
