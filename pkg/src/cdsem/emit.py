"""Text output: deep-embedding constant definitions and system dumps."""
from __future__ import annotations

from .syntax import AssocDecl, Attribute, Diagram, Element, Modifier
from .system import System

DEFAULT_IMPORTS = "$UMLP/abstractSyntax/gen/CDSimpAS"

_MODIFIER_TERMS = {
    None: "None",
    Modifier.PUBLIC: "(Some CModifierPUBLIC)",
    Modifier.PRIVATE: "(Some CModifierPRIVATE)",
}


def hol_string(text: str) -> str:
    # backslash and quote are the only characters needing escapes inside ''...''
    return "''" + text.replace("\\", "\\\\").replace("'", "\\'") + "''"


def _list(items) -> str:
    return "[" + ", ".join(items) + "]"


def attribute_term(a: Attribute) -> str:
    return f"CDAttribute {_MODIFIER_TERMS[a.modifier]} {hol_string(a.type_name)} {hol_string(a.name)}"


def element_term(e: Element) -> str:
    if isinstance(e, AssocDecl):
        return f"CDElementCDAssociation (CDAssociation {hol_string(e.left)} {hol_string(e.right)})"
    supers = _list(hol_string(s) for s in e.supers)
    attrs = _list(attribute_term(a) for a in e.attrs)
    return f"CDElementCDClass (CDClass {hol_string(e.name)} {supers} {attrs})"


def emit_term(d: Diagram, const_name: str) -> str:
    """Constant definition holding ``d`` as a ``CDDefinition`` term."""
    invariants = _list(f"Invariant {hol_string(i.text)}" for i in d.invariants)
    elements = _list(element_term(e) for e in d.elements)
    return f'constdefs "{const_name} == CDDefinition {hol_string(d.name)} {invariants} {elements}"\n'


def emit_theory(d: Diagram, const_name: str, imports: str = DEFAULT_IMPORTS) -> str:
    return (
        f"theory {d.name}\n"
        f'imports "{imports}"\n'
        "begin\n"
        f"{emit_term(d, const_name)}"
        "end\n"
    )


SECTIONS = ("TYPES", "CLASSES", "SUB", "CAR", "ATTRS", "ASSOC")


def emit_system(sm: System) -> str:
    """Line-oriented dump of a system; entries sorted within each section."""
    entries = {
        "TYPES": [str(t) for t in sm.types],
        "CLASSES": list(sm.classes),
        "SUB": [f"{a} < {b}" for a, b in sm.sub],
        "CAR": [
            f"{t} : {len(vals)} value{'' if len(vals) == 1 else 's'}"
            for t, vals in sm.car.items()
        ],
        "ATTRS": [f"{c}.{a} : {t}" for c, a, t in sm.attrs],
        "ASSOC": [f"{l} -- {r}" for l, r in sm.assoc_links],
    }
    lines = []
    for section in SECTIONS:
        lines.append(section)
        lines.extend(f"  {entry}" for entry in sorted(entries[section]))
    return "\n".join(lines) + "\n"
