"""Term algebra for entities, spatial individuals, and directions.

Three sorts share one immutable term language:

* entity terms — atomic entities, plural sums (free join-semilattice over
  atoms), interior entities ``int(x)`` and remainder entities ``rest(x, y)``;
* individual terms — spatial referents ``sref(e)`` plus the constructors of
  the connection calculus (binary sum, intersection, complement, topological
  interior/closure, the universal individual, pre-interiors and envelopes);
* direction terms — named directions and their opposites.

Constructors normalize eagerly: sums are flattened/AC-canonical, double
complements and double opposites cancel, interior/closure are idempotent and
fix the universal individual.  Construction depth (number of nested
non-atomic constructors) is tracked so the engine can enforce its term-depth
budget.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

UP_NAME = "haut-grav"
DOWN_NAME = "bas-grav"


class TermError(ValueError):
    """Raised for ill-formed terms (wrong sort, bad arity, depth excess)."""


@dataclass(frozen=True, slots=True)
class Term:
    """Base class; concrete terms are the dataclasses below."""

    def is_entity(self) -> bool:
        return isinstance(self, (Ent, Plur, IntEnt, RestEnt))

    def is_individual(self) -> bool:
        return isinstance(
            self, (Sref, Sum, Inter, Compl, Interior, Closure, Univ, Env, Preint, Outline)
        )

    def is_direction(self) -> bool:
        return isinstance(self, (Dir, Opp))


# --------------------------------------------------------------------------
# entity sort


@dataclass(frozen=True, slots=True)
class Ent(Term):
    name: str


@dataclass(frozen=True, slots=True)
class Plur(Term):
    members: frozenset[Term]  # Ent atoms


@dataclass(frozen=True, slots=True)
class IntEnt(Term):
    owner: Term  # entity term


@dataclass(frozen=True, slots=True)
class RestEnt(Term):
    whole: Term
    part: Term


# --------------------------------------------------------------------------
# individual sort


@dataclass(frozen=True, slots=True)
class Sref(Term):
    entity: Term


@dataclass(frozen=True, slots=True)
class Sum(Term):
    parts: frozenset[Term]


@dataclass(frozen=True, slots=True)
class Inter(Term):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Compl(Term):
    arg: Term


@dataclass(frozen=True, slots=True)
class Interior(Term):
    arg: Term


@dataclass(frozen=True, slots=True)
class Closure(Term):
    arg: Term


@dataclass(frozen=True, slots=True)
class Univ(Term):
    pass


@dataclass(frozen=True, slots=True)
class Env(Term):
    arg: Term


@dataclass(frozen=True, slots=True)
class Preint(Term):
    arg: Term


@dataclass(frozen=True, slots=True)
class Outline(Term):
    arg: Term


# --------------------------------------------------------------------------
# direction sort


@dataclass(frozen=True, slots=True)
class Dir(Term):
    name: str


@dataclass(frozen=True, slots=True)
class Opp(Term):
    arg: Term  # always a Dir after normalization


UNIVERSAL = Univ()
UP = Dir(UP_NAME)
DOWN = Opp(UP)


# --------------------------------------------------------------------------
# normalizing constructors


def ent(name: str) -> Ent:
    return Ent(name)


def plur(members: Iterable[Term]) -> Term:
    """Plural sum over entity terms; atoms flatten, singleton collapses."""
    flat: set[Term] = set()
    for m in members:
        if isinstance(m, Plur):
            flat.update(m.members)
        elif isinstance(m, (Ent, IntEnt, RestEnt)):
            flat.add(m)
        else:
            raise TermError(f"plural member must be an entity term: {m!r}")
    if not flat:
        raise TermError("empty plural sum")
    if len(flat) == 1:
        return next(iter(flat))
    return Plur(frozenset(flat))


def int_ent(owner: Term) -> IntEnt:
    if not owner.is_entity():
        raise TermError(f"int(.) applies to an entity term: {owner!r}")
    if isinstance(owner, IntEnt):
        raise TermError("interior entities have no interior of their own")
    return IntEnt(owner)


def rest_ent(whole: Term, part: Term) -> RestEnt:
    if not (whole.is_entity() and part.is_entity()):
        raise TermError("rest(.,.) applies to entity terms")
    if whole == part:
        raise TermError("rest(x, x) is empty")
    return RestEnt(whole, part)


def sref(entity: Term) -> Sref:
    if not entity.is_entity():
        raise TermError(f"sref(.) applies to an entity term: {entity!r}")
    return Sref(entity)


def isum(*parts: Term) -> Term:
    flat: set[Term] = set()
    for p in parts:
        if isinstance(p, Sum):
            flat.update(p.parts)
        elif p.is_individual():
            if isinstance(p, Univ):
                return UNIVERSAL  # x + a* =s a*
            flat.add(p)
        else:
            raise TermError(f"sum part must be an individual: {p!r}")
    if not flat:
        raise TermError("empty individual sum")
    if len(flat) == 1:
        return next(iter(flat))
    return Sum(frozenset(flat))


def iinter(a: Term, b: Term) -> Term:
    if not (a.is_individual() and b.is_individual()):
        raise TermError("inter(.,.) applies to individuals")
    if a == b:
        return a
    if isinstance(a, Univ):
        return b
    if isinstance(b, Univ):
        return a
    left, right = sorted((a, b), key=term_key)
    return Inter(left, right)


def icompl(a: Term) -> Term:
    if not a.is_individual():
        raise TermError("compl(.) applies to individuals")
    if isinstance(a, Compl):
        return a.arg
    if isinstance(a, Univ):
        raise TermError("the universal individual has no complement")
    return Compl(a)


def iint(a: Term) -> Term:
    """Topological interior; idempotent, fixes a* and interiors."""
    if not a.is_individual():
        raise TermError("i(.) applies to individuals")
    if isinstance(a, (Interior, Univ)):
        return a
    return Interior(a)


def iclos(a: Term) -> Term:
    """Topological closure; idempotent, fixes a* (A9)."""
    if not a.is_individual():
        raise TermError("c(.) applies to individuals")
    if isinstance(a, (Closure, Univ)):
        return a
    return Closure(a)


def ienv(a: Term) -> Term:
    """Envelope; idempotent (env of an envelope is itself)."""
    if not a.is_individual():
        raise TermError("env(.) applies to individuals")
    if isinstance(a, Env):
        return a
    return Env(a)


def ipreint(a: Term) -> Term:
    if not a.is_individual():
        raise TermError("preint(.) applies to individuals")
    return Preint(a)


def ioutline(a: Term) -> Term:
    if not a.is_individual():
        raise TermError("outline(.) applies to individuals")
    return Outline(a)


def direction(name: str) -> Term:
    if name == DOWN_NAME:
        return DOWN
    return Dir(name)


def opp(d: Term) -> Term:
    if isinstance(d, Opp):
        return d.arg
    if isinstance(d, Dir):
        return Opp(d)
    raise TermError(f"opp(.) applies to directions: {d!r}")


# --------------------------------------------------------------------------
# structural helpers


def term_key(t: Term) -> tuple:
    """Deterministic total order on terms (class name, then recursive keys)."""
    if isinstance(t, Ent):
        return ("Ent", t.name)
    if isinstance(t, Plur):
        return ("Plur", tuple(sorted(term_key(m) for m in t.members)))
    if isinstance(t, IntEnt):
        return ("IntEnt", term_key(t.owner))
    if isinstance(t, RestEnt):
        return ("RestEnt", term_key(t.whole), term_key(t.part))
    if isinstance(t, Sref):
        return ("Sref", term_key(t.entity))
    if isinstance(t, Sum):
        return ("Sum", tuple(sorted(term_key(p) for p in t.parts)))
    if isinstance(t, Inter):
        return ("Inter", term_key(t.left), term_key(t.right))
    if isinstance(t, Compl):
        return ("Compl", term_key(t.arg))
    if isinstance(t, Interior):
        return ("Interior", term_key(t.arg))
    if isinstance(t, Closure):
        return ("Closure", term_key(t.arg))
    if isinstance(t, Univ):
        return ("Univ",)
    if isinstance(t, Env):
        return ("Env", term_key(t.arg))
    if isinstance(t, Preint):
        return ("Preint", term_key(t.arg))
    if isinstance(t, Outline):
        return ("Outline", term_key(t.arg))
    if isinstance(t, Dir):
        return ("Dir", t.name)
    if isinstance(t, Opp):
        return ("Opp", term_key(t.arg))
    raise TermError(f"unknown term: {t!r}")


def children(t: Term) -> tuple[Term, ...]:
    if isinstance(t, (Ent, Dir, Univ)):
        return ()
    if isinstance(t, Plur):
        return tuple(sorted(t.members, key=term_key))
    if isinstance(t, IntEnt):
        return (t.owner,)
    if isinstance(t, RestEnt):
        return (t.whole, t.part)
    if isinstance(t, Sref):
        return (t.entity,)
    if isinstance(t, Sum):
        return tuple(sorted(t.parts, key=term_key))
    if isinstance(t, Inter):
        return (t.left, t.right)
    if isinstance(t, (Compl, Interior, Closure, Env, Preint, Outline, Opp)):
        return (t.arg,)
    raise TermError(f"unknown term: {t!r}")


def rebuild(t: Term, kids: tuple[Term, ...]) -> Term:
    """Rebuild a term of t's shape over new children, renormalizing."""
    if isinstance(t, (Ent, Dir, Univ)):
        return t
    if isinstance(t, Plur):
        return plur(kids)
    if isinstance(t, IntEnt):
        return int_ent(kids[0])
    if isinstance(t, RestEnt):
        return rest_ent(kids[0], kids[1])
    if isinstance(t, Sref):
        return sref(kids[0])
    if isinstance(t, Sum):
        return isum(*kids)
    if isinstance(t, Inter):
        return iinter(kids[0], kids[1])
    if isinstance(t, Compl):
        return icompl(kids[0])
    if isinstance(t, Interior):
        return iint(kids[0])
    if isinstance(t, Closure):
        return iclos(kids[0])
    if isinstance(t, Env):
        return ienv(kids[0])
    if isinstance(t, Preint):
        return ipreint(kids[0])
    if isinstance(t, Outline):
        return ioutline(kids[0])
    if isinstance(t, Opp):
        return opp(kids[0])
    raise TermError(f"unknown term: {t!r}")


@lru_cache(maxsize=None)
def depth(t: Term) -> int:
    """Nesting depth of non-atomic constructors (atoms, srefs count 0)."""
    kids = children(t)
    inner = max((depth(k) for k in kids), default=0)
    if isinstance(t, (Ent, Dir, Univ, Sref, Plur, Opp)):
        return inner
    return inner + 1


def render(t: Term) -> str:
    """Canonical concrete syntax (matches the scene DSL)."""
    if isinstance(t, Ent):
        return t.name
    if isinstance(t, Plur):
        return "{" + ", ".join(sorted(render(m) for m in t.members)) + "}"
    if isinstance(t, IntEnt):
        return f"int({render(t.owner)})"
    if isinstance(t, RestEnt):
        return f"rest({render(t.whole)}, {render(t.part)})"
    if isinstance(t, Sref):
        return f"sref({render(t.entity)})"
    if isinstance(t, Sum):
        inner = ", ".join(render(p) for p in sorted(t.parts, key=term_key))
        return f"sum({inner})"
    if isinstance(t, Inter):
        return f"inter({render(t.left)}, {render(t.right)})"
    if isinstance(t, Compl):
        return f"compl({render(t.arg)})"
    if isinstance(t, Interior):
        return f"i({render(t.arg)})"
    if isinstance(t, Closure):
        return f"c({render(t.arg)})"
    if isinstance(t, Univ):
        return "universal"
    if isinstance(t, Env):
        return f"env({render(t.arg)})"
    if isinstance(t, Preint):
        return f"preint({render(t.arg)})"
    if isinstance(t, Outline):
        return f"outline({render(t.arg)})"
    if isinstance(t, Dir):
        return t.name
    if isinstance(t, Opp):
        if t == DOWN:
            return DOWN_NAME
        return f"opp({render(t.arg)})"
    raise TermError(f"unknown term: {t!r}")
