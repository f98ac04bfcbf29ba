"""Relation vocabulary: names, argument sorts, and literal representation.

Every relation the store can hold is registered here with its argument
sorts, so the DSL, the rule compiler and the CLI agree on typing.  Sorts:

* ``ent`` — an entity term (bare names in the DSL denote the entity);
* ``ind`` — a spatial individual (bare names are sugar for ``sref(name)``);
* ``dir`` — a direction term.

Allen constraint cells are held in a dedicated store (see engine) and are
asserted through the pseudo-relation ``Allen(ind, ind, dir, {rels})``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .terms import Term


class Status(Enum):
    ENTAILED = "entailed"
    REFUTED = "refuted"
    UNKNOWN = "unknown"

    def negate(self) -> "Status":
        if self is Status.ENTAILED:
            return Status.REFUTED
        if self is Status.REFUTED:
            return Status.ENTAILED
        return Status.UNKNOWN


@dataclass(frozen=True, slots=True)
class Lit:
    rel: str
    args: tuple[Term, ...]

    def __str__(self) -> str:  # pragma: no cover - debugging aid
        from .terms import render

        return f"{self.rel}({', '.join(render(a) for a in self.args)})"


ENTITY_CLASSES = ("Obj", "Mat", "Subst", "Loc", "Sp-port")

#: relation name -> argument sorts
SIGNATURES: dict[str, tuple[str, ...]] = {
    # connection calculus over individuals
    "C": ("ind", "ind"),
    "P": ("ind", "ind"),
    "PP": ("ind", "ind"),
    "O": ("ind", "ind"),
    "EC": ("ind", "ind"),
    "TP": ("ind", "ind"),
    "NTP": ("ind", "ind"),
    "OP": ("ind",),
    "CL": ("ind",),
    "Sp": ("ind", "ind"),
    "Con": ("ind",),
    "ICont": ("ind", "ind"),
    "WCont": ("ind", "ind"),
    "Cont": ("ind", "ind"),
    "=s": ("ind", "ind"),
    # boundary hierarchy
    "Env": ("ind", "ind"),
    "Lim1": ("ind", "ind"),
    "Contour": ("ind", "ind"),
    "Lim2": ("ind", "ind"),
    "Ends": ("ind", "ind"),
    "Lim3": ("ind", "ind"),
    "Surface": ("ind", "ind"),
    "Line": ("ind", "ind"),
    "Point": ("ind", "ind"),
    # qualitative distance
    "Closer": ("ind", "ind", "ind"),
    "Equidist": ("ind", "ind", "ind"),
    # direction algebra
    "Kd": ("dir", "dir", "dir"),
    "DirEq": ("dir", "dir"),
    "Ortho": ("dir", "dir"),
    "In-med": ("dir", "dir", "dir"),
    "In-sum": ("dir", "dir", "dir"),
    # extremities
    "Ext": ("ind", "ind", "dir"),
    "Exts": ("ind", "ind", "ind", "dir"),
    "Salient": ("ind", "ind"),
    # ontology / kb-core
    "Obj": ("ent",),
    "Mat": ("ent",),
    "Subst": ("ent",),
    "Loc": ("ent",),
    "Sp-port": ("ent",),
    "At": ("ent",),
    "Coll": ("ent",),
    "Is-coll": ("ent", "ent"),
    "Leq": ("ent", "ent"),
    "Q": ("ent", "ent"),
    "Depend": ("ent", "ent"),
    # meronymy
    "Member": ("ent", "ent"),
    "Subcoll": ("ent", "ent"),
    "Portion": ("ent", "ent"),
    "Subst-Wh": ("ent", "ent"),
    "Component": ("ent", "ent"),
    "Piece": ("ent", "ent"),
    "Part": ("ent", "ent"),
    # functional attributes (declared via entity attrs or asserted)
    "Can-Use": ("ent",),
    "In-Use": ("ent",),
    "Speaker": ("ent",),
    "Container": ("ent",),
    "Can-Contain": ("ent",),
    "Scattered": ("ent",),
    "Surrounding": ("ent",),
    "Intrinsic-Stab": ("ent",),
    "Complex-Shape": ("ent",),
    "Ground": ("ent",),
    "Utilise": ("ent", "ent"),
    "Orient-gen": ("ent", "dir"),
    # intrinsic orientation
    "dir-ext": ("ent", "ent", "ent", "dir"),
    "Orient-haut": ("dir", "ent"),
    "Orient-bas": ("dir", "ent"),
    "Orient-avant1": ("dir", "ent"),
    "Orient-avant2": ("dir", "ent"),
    "Orient-avant3": ("dir", "ent"),
    "Orient-avant": ("dir", "ent"),
    "Orient-arriere": ("dir", "ent"),
    # projective relations
    "In-sp": ("ent", "ent", "dir"),
    "Etre-devant-i": ("ent", "ent", "dir"),
    "Etre-devant-d": ("ent", "ent", "dir"),
    "Etre-derriere-i": ("ent", "ent", "dir"),
    "Etre-derriere-d": ("ent", "ent", "dir"),
    # support
    "Stabilise": ("ent", "ent"),
    "Stab_tot": ("ent", "ent"),
    "Zonecont": ("ind", "ind", "ind"),
    "Plus_haut": ("ind", "ind"),
    "Same-level": ("ind", "ind"),
    "Cont1": ("ind", "ind"),
    "Cont2": ("ind", "ind"),
    "Cont3": ("ind", "ind"),
    "Catcomp1": ("ent", "ent"),
    "Catcomp2": ("ent", "ent"),
    "Catcomp3": ("ent", "ent"),
    "Sur1": ("ent", "ent"),
    "Sur2": ("ent", "ent"),
    "Sur3": ("ent", "ent"),
    # containment
    "Con-Comp": ("ind", "ind"),
    "TDs": ("ent", "ent"),
    "PDs": ("ent", "ent"),
    "DPt": ("ent", "ent"),
}

#: relations accepted by `query` but answered by evaluators, not the store
EVALUATED = ("Dans", "Sur", "Contact", "Classify")


def signature(rel: str) -> tuple[str, ...]:
    try:
        return SIGNATURES[rel]
    except KeyError:
        raise KeyError(f"unknown relation: {rel}") from None


def check_lit(lit: Lit) -> None:
    sig = signature(lit.rel)
    if len(sig) != len(lit.args):
        raise ValueError(f"{lit.rel} expects {len(sig)} arguments, got {len(lit.args)}")
    for sort, arg in zip(sig, lit.args):
        ok = (
            (sort == "ent" and arg.is_entity())
            or (sort == "ind" and arg.is_individual())
            or (sort == "dir" and arg.is_direction())
        )
        if not ok:
            raise ValueError(f"{lit.rel}: argument {arg!r} is not of sort {sort}")
