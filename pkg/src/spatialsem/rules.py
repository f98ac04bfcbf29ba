"""The saturation rule inventory.

Definitions compile to forward and backward rules, axioms compile forward
only, prose theorems get their own ``T-*`` ids, integrity rules conclude a
conflict naming the violated rule, and defeasible identifications live in
the default layer.  Structural facts that the stores enforce by construction
(symmetry of C, opposite-involution, term normalizations) are registered
without a function so the rule listing stays complete.

Rule functions take the KB and return True when anything changed.  They are
monotone: they only ever add literals, refinements, merges, disjunction
records and conflicts.  Scans snapshot the store, so newly derived facts are
picked up on the following round.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from . import allen as A
from .kb import KB, Conflict, interior_mode
from .relations import Lit, Status
from .terms import (
    UNIVERSAL, UP, Compl, Env, IntEnt, Inter, Interior, Closure, Plur,
    RestEnt, Sref, Sum, Term, TermError, Univ, iclos, icompl, ienv, iint,
    iinter, ioutline, ipreint, isum, opp, render, rest_ent, sref, term_key,
)

ENT = Status.ENTAILED
REF = Status.REFUTED
UNK = Status.UNKNOWN

#: Allen sets with dedicated roles
AFTER = frozenset({"mi", ">"})
LEVEL = frozenset({"o", "oi", "s", "si", "d", "di", "f", "fi", "="})
BEFORE_OR_MEETS = frozenset({"<", "m"})


@dataclass(frozen=True, slots=True)
class Rule:
    id: str
    kind: str  # axiom | definition | theorem | integrity | default | reconstruction
    about: str
    fn: Callable[[KB], bool] | None = None
    phase: str = "monotone"  # monotone | post | structural


RULES: list[Rule] = []


def rule(rid: str, kind: str, about: str, phase: str = "monotone"):
    def deco(fn: Callable[[KB], bool]) -> Callable[[KB], bool]:
        RULES.append(Rule(rid, kind, about, fn, phase))
        return fn
    return deco


def note(rid: str, kind: str, about: str) -> None:
    """Register a rule enforced structurally (store/term level)."""
    RULES.append(Rule(rid, kind, about, None, "structural"))


# ----------------------------------------------------------------------
# small helpers

def st(kb: KB, rel: str, *args: Term) -> Status:
    return kb.status(rel, args)


def pp(kb: KB, rel: str, *args: Term) -> tuple[int, ...]:
    pid = kb.proof_id(rel, args)
    return () if pid is None else (pid,)


def lits(kb: KB, rel: str, status: Status = ENT) -> list[Lit]:
    return list(kb.lits(rel, status))


def deep(kb: KB, t: Term) -> Term | None:
    """Register a constructed term unless it exceeds the depth bound."""
    try:
        return kb.touch(t)
    except TermError:
        return None


def any_class(kb: KB, e: Term, *classes: str) -> bool:
    return any(st(kb, c, e) is ENT for c in classes)


def all_refuted(kb: KB, e: Term, *classes: str) -> bool:
    return all(st(kb, c, e) is REF for c in classes)


def class_premises(kb: KB, e: Term, *classes: str) -> tuple[int, ...]:
    for c in classes:
        if st(kb, c, e) is ENT:
            return pp(kb, c, e)
    return ()


def dir_distinct(kb: KB, a: Term, b: Term) -> bool:
    """Are two directions provably distinct?"""
    a, b = kb.canon(a), kb.canon(b)
    if a == b:
        return False
    if st(kb, "DirEq", a, b) is REF:
        return True
    return a == kb.canon(opp(b))  # opposites are always distinct


def p_index(kb: KB) -> tuple[dict[Term, list[Lit]], dict[Term, list[Lit]]]:
    """P+ literals indexed by part and by whole."""
    by_part: dict[Term, list[Lit]] = {}
    by_whole: dict[Term, list[Lit]] = {}
    for lit in kb.lits("P"):
        by_part.setdefault(lit.args[0], []).append(lit)
        by_whole.setdefault(lit.args[1], []).append(lit)
    return by_part, by_whole


def sum_terms(kb: KB) -> list[Sum]:
    return [t for t in list(kb.terms) if isinstance(t, Sum) and kb.canon(t) == t]


def interior_entities(kb: KB) -> list[IntEnt]:
    return [t for t in list(kb.entities) if isinstance(t, IntEnt)]


# ----------------------------------------------------------------------
# connection calculus core

@rule("A1", "axiom", "connection is reflexive: C(x,x) for every individual")
def a1(kb: KB) -> bool:
    ch = False
    for t in kb.individuals():
        ch |= kb.add("C", (t, t), ENT, "A1")
    return ch


note("A2", "axiom", "connection is symmetric; the store keys C on unordered pairs")
note("A9", "axiom", "the universal individual is closed: c(a*) normalizes to a*")
note("D7", "definition", "closure as complement-interior-complement; a term constructor")
note("A23", "axiom", "every direction has an opposite; opp(.) is the constructor, involutive")
note("D39", "definition", "downward = opposite of upward; bas-grav normalizes to opp(haut-grav)")
note("A29", "axiom", "connected individuals project onto non-disjoint intervals; folded into every projection lookup")
note("T-P-ALLEN", "theorem", "a part projects inside its whole ({s,f,d,=}); folded into every projection lookup")
note("A32", "axiom", "plural sums exist; the plural constructor builds the free join")
note("A33", "axiom", "plural intersections exist when a common lower bound does; not materialized")
note("A40", "axiom", "same-substance quantities admit a sum quantity; materialized on demand by cumulate()")
note("A4", "axiom", "sums of individuals exist and are unique; term constructor")
note("A5", "axiom", "a universal individual exists; constant a*")
note("A6", "axiom", "complements exist for non-universal individuals; term constructor")
note("A7", "axiom", "intersections exist for overlapping individuals; construction requires O entailed")
note("A8", "axiom", "interiors exist; term constructor, idempotent")


@rule("A5.conn", "axiom", "everything connects to and is part of the universal individual")
def a5_conn(kb: KB) -> bool:
    ch = False
    for t in kb.individuals():
        if isinstance(t, Univ):
            continue
        ch |= kb.add("C", (t, UNIVERSAL), ENT, "A5")
        ch |= kb.add("P", (t, UNIVERSAL), ENT, "A5")
    return ch


@rule("D1.fwd", "definition", "a part passes every connection on to its whole")
def d1_fwd(kb: KB) -> bool:
    ch = False
    cs = lits(kb, "C")
    for plit in lits(kb, "P"):
        x, y = plit.args
        prem = pp(kb, "P", x, y)
        for clit in cs:
            if clit.args[0] == x:
                ch |= kb.add("C", (clit.args[1], y), ENT, "D1",
                             prem + pp(kb, "C", *clit.args))
    return ch


@rule("D1.contra", "definition", "a connection the whole refuses refutes parthood")
def d1_contra(kb: KB) -> bool:
    ch = False
    negs = lits(kb, "C", REF)
    if not negs:
        return False
    pos_by_arg: dict[Term, list[Lit]] = {}
    for clit in lits(kb, "C"):
        pos_by_arg.setdefault(clit.args[0], []).append(clit)
    for nlit in negs:
        z, y = nlit.args
        for clit in pos_by_arg.get(z, ()):
            x = clit.args[1]
            ch |= kb.add("P", (x, y), REF, "D1",
                         pp(kb, "C", z, x) + pp(kb, "C", z, y))
    return ch


@rule("T-P-REFL", "theorem", "everything is part of itself")
def p_refl(kb: KB) -> bool:
    ch = False
    for t in kb.individuals():
        ch |= kb.add("P", (t, t), ENT, "T-P-REFL")
    return ch


@rule("T-P-TRANS", "theorem", "parthood is transitive")
def p_trans(kb: KB) -> bool:
    ch = False
    by_part, _ = p_index(kb)
    for lit in lits(kb, "P"):
        x, y = lit.args
        for nxt in by_part.get(y, ()):
            ch |= kb.add("P", (x, nxt.args[1]), ENT, "T-P-TRANS",
                         pp(kb, "P", x, y) + pp(kb, "P", *nxt.args))
    return ch


@rule("D2.fwd", "definition", "proper part = part that is not a whole")
def d2_fwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "P"):
        x, y = lit.args
        if st(kb, "P", y, x) is REF:
            ch |= kb.add("PP", (x, y), ENT, "D2",
                         pp(kb, "P", x, y) + pp(kb, "P", y, x))
    return ch


@rule("D2.bwd", "definition", "unfolding a proper part")
def d2_bwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "PP"):
        x, y = lit.args
        prem = pp(kb, "PP", x, y)
        ch |= kb.add("P", (x, y), ENT, "D2", prem)
        ch |= kb.add("P", (y, x), REF, "D2", prem)
    for lit in lits(kb, "P", REF):
        ch |= kb.add("PP", lit.args, REF, "D2", pp(kb, "P", *lit.args))
    for lit in lits(kb, "P"):
        ch |= kb.add("PP", (lit.args[1], lit.args[0]), REF, "D2",
                     pp(kb, "P", *lit.args))
    return ch


@rule("T-PP-TRANS", "theorem", "proper parthood is transitive")
def pp_trans(kb: KB) -> bool:
    ch = False
    by_part: dict[Term, list[Lit]] = {}
    for lit in lits(kb, "PP"):
        by_part.setdefault(lit.args[0], []).append(lit)
    for lit in lits(kb, "PP"):
        x, y = lit.args
        for nxt in by_part.get(y, ()):
            ch |= kb.add("PP", (x, nxt.args[1]), ENT, "T-PP-TRANS",
                         pp(kb, "PP", x, y) + pp(kb, "PP", *nxt.args))
    return ch


@rule("D3.fwd", "definition", "a shared part makes two individuals overlap")
def d3_fwd(kb: KB) -> bool:
    ch = False
    by_part, _ = p_index(kb)
    for z, plits in by_part.items():
        wholes = [l.args[1] for l in plits]
        for i, x in enumerate(wholes):
            for y in wholes[i:]:
                ch |= kb.add("O", (x, y), ENT, "D3",
                             pp(kb, "P", z, x) + pp(kb, "P", z, y))
    return ch


@rule("D3.contra", "definition", "no overlap refutes parthood both ways")
def d3_contra(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "O", REF):
        x, y = lit.args
        prem = pp(kb, "O", x, y)
        ch |= kb.add("P", (x, y), REF, "D3", prem)
        ch |= kb.add("P", (y, x), REF, "D3", prem)
    return ch


@rule("T-P-O", "theorem", "a part overlaps its whole")
def t_p_o(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "P"):
        ch |= kb.add("O", lit.args, ENT, "T-P-O", pp(kb, "P", *lit.args))
    return ch


@rule("T-O-C", "theorem", "overlap entails connection")
def t_o_c(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "O"):
        ch |= kb.add("C", lit.args, ENT, "T-O-C", pp(kb, "O", *lit.args))
    return ch


@rule("T-O-MONO", "theorem", "non-overlap passes down to parts")
def t_o_mono(kb: KB) -> bool:
    ch = False
    negs = lits(kb, "O", REF)
    if not negs:
        return False
    _, by_whole = p_index(kb)
    for nlit in negs:
        a, b = nlit.args
        prem = pp(kb, "O", a, b)
        for plit in by_whole.get(a, ()):
            x = plit.args[0]
            ch |= kb.add("O", (x, b), REF, "T-O-MONO",
                         prem + pp(kb, "P", x, a))
    return ch


@rule("T-C-MONO", "theorem", "refused connection passes down to parts")
def t_c_mono(kb: KB) -> bool:
    ch = False
    negs = lits(kb, "C", REF)
    if not negs:
        return False
    _, by_whole = p_index(kb)
    for nlit in negs:
        a, b = nlit.args
        prem = pp(kb, "C", a, b)
        for plit in by_whole.get(a, ()):
            x = plit.args[0]
            ch |= kb.add("C", (x, b), REF, "T-C-MONO",
                         prem + pp(kb, "P", x, a))
    return ch


@rule("D4.fwd", "definition", "connection without overlap is external connection")
def d4_fwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "C"):
        x, y = lit.args
        if x == y:
            continue
        if st(kb, "O", x, y) is REF:
            ch |= kb.add("EC", (x, y), ENT, "D4",
                         pp(kb, "C", x, y) + pp(kb, "O", x, y))
    return ch


@rule("D4.bwd", "definition", "unfolding external connection")
def d4_bwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "EC"):
        prem = pp(kb, "EC", *lit.args)
        ch |= kb.add("C", lit.args, ENT, "D4", prem)
        ch |= kb.add("O", lit.args, REF, "D4", prem)
    for lit in lits(kb, "C", REF):
        ch |= kb.add("EC", lit.args, REF, "D4", pp(kb, "C", *lit.args))
    for lit in lits(kb, "O"):
        ch |= kb.add("EC", lit.args, REF, "D4", pp(kb, "O", *lit.args))
    return ch


@rule("D5.fwd", "definition", "a part sharing an external neighbor is tangential")
def d5_fwd(kb: KB) -> bool:
    ch = False
    ec_by_arg: dict[Term, list[Lit]] = {}
    for lit in lits(kb, "EC"):
        ec_by_arg.setdefault(lit.args[0], []).append(lit)
    for plit in lits(kb, "P"):
        x, y = plit.args
        for el in ec_by_arg.get(x, ()):
            z = el.args[1]
            if st(kb, "EC", z, y) is ENT:
                ch |= kb.add("TP", (x, y), ENT, "D5",
                             pp(kb, "P", x, y) + pp(kb, "EC", z, x)
                             + pp(kb, "EC", z, y))
                break
    return ch


@rule("D5.bwd", "definition", "a tangential part is a part")
def d5_bwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "TP"):
        ch |= kb.add("P", lit.args, ENT, "D5", pp(kb, "TP", *lit.args))
    for lit in lits(kb, "P", REF):
        ch |= kb.add("TP", lit.args, REF, "D5", pp(kb, "P", *lit.args))
    return ch


@rule("D6.bwd", "definition", "a non-tangential part is a part that shares no external neighbor")
def d6_bwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "NTP"):
        x, y = lit.args
        prem = pp(kb, "NTP", x, y)
        ch |= kb.add("P", (x, y), ENT, "D6", prem)
        for el in lits(kb, "EC"):
            if el.args[1] == x:
                z = el.args[0]
                ch |= kb.add("EC", (z, y), REF, "D6",
                             prem + pp(kb, "EC", z, x))
    for lit in lits(kb, "P", REF):
        ch |= kb.add("NTP", lit.args, REF, "D6", pp(kb, "P", *lit.args))
    return ch


@rule("T-TP-NTP", "theorem", "tangential and non-tangential split the parts")
def t_tp_ntp(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "P"):
        x, y = lit.args
        prem = pp(kb, "P", x, y)
        if st(kb, "TP", x, y) is REF:
            ch |= kb.add("NTP", (x, y), ENT, "T-TP-NTP",
                         prem + pp(kb, "TP", x, y))
        if st(kb, "NTP", x, y) is REF:
            ch |= kb.add("TP", (x, y), ENT, "T-TP-NTP",
                         prem + pp(kb, "NTP", x, y))
    for lit in lits(kb, "TP"):
        ch |= kb.add("NTP", lit.args, REF, "T-TP-NTP", pp(kb, "TP", *lit.args))
    for lit in lits(kb, "NTP"):
        ch |= kb.add("TP", lit.args, REF, "T-TP-NTP", pp(kb, "NTP", *lit.args))
    return ch


@rule("T-NTP-TRANS", "theorem", "non-tangential parthood is transitive")
def ntp_trans(kb: KB) -> bool:
    ch = False
    by_part: dict[Term, list[Lit]] = {}
    for lit in lits(kb, "NTP"):
        by_part.setdefault(lit.args[0], []).append(lit)
    for lit in lits(kb, "NTP"):
        x, y = lit.args
        for nxt in by_part.get(y, ()):
            ch |= kb.add("NTP", (x, nxt.args[1]), ENT, "T-NTP-TRANS",
                         pp(kb, "NTP", x, y) + pp(kb, "NTP", *nxt.args))
    return ch


@rule("T-NTP-EC-O", "theorem",
      "whatever externally connects to a non-tangential part overlaps the whole")
def ntp_ec_o(kb: KB) -> bool:
    ch = False
    for nlit in lits(kb, "NTP"):
        x, y = nlit.args
        for el in lits(kb, "EC"):
            if el.args[0] == x:
                z = el.args[1]
                ch |= kb.add("O", (y, z), ENT, "T-NTP-EC-O",
                             pp(kb, "NTP", x, y) + pp(kb, "EC", x, z))
    return ch


# ----------------------------------------------------------------------
# constructed individuals

@rule("A4.parts", "axiom", "summands are parts of their sum")
def a4_parts(kb: KB) -> bool:
    ch = False
    for s in sum_terms(kb):
        for p in s.parts:
            ch |= kb.add("P", (kb.canon(p), s), ENT, "A4")
    return ch


@rule("A4.neg", "axiom", "nothing connects to a sum unless it connects to a summand")
def a4_neg(kb: KB) -> bool:
    ch = False
    sums = sum_terms(kb)
    if not sums:
        return False
    for s in sums:
        parts = [kb.canon(p) for p in s.parts]
        for u in kb.individuals():
            sts = [st(kb, "C", u, p) for p in parts]
            if all(x is REF for x in sts):
                prem = tuple(q for p in parts for q in pp(kb, "C", u, p))
                ch |= kb.add("C", (u, s), REF, "A4", prem)
    return ch


@rule("T-SUM-LUB", "theorem", "a sum is below any common upper bound")
def t_sum_lub(kb: KB) -> bool:
    ch = False
    for s in sum_terms(kb):
        parts = [kb.canon(p) for p in s.parts]
        uppers: set[Term] | None = None
        for p in parts:
            ups = {l.args[1] for l in kb.lits("P") if l.args[0] == p}
            uppers = ups if uppers is None else (uppers & ups)
        for w in uppers or ():
            prem = tuple(q for p in parts for q in pp(kb, "P", p, w))
            ch |= kb.add("P", (s, w), ENT, "T-SUM-LUB", prem)
    return ch


@rule("T-SUM-SPLIT", "theorem",
      "inside a binary sum and clear of one summand means inside the other")
def t_sum_split(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "P"):
        x, s = lit.args
        if not isinstance(s, Sum) or len(s.parts) != 2:
            continue
        a, b = sorted((kb.canon(p) for p in s.parts), key=term_key)
        prem = pp(kb, "P", x, s)
        if st(kb, "O", x, a) is REF:
            ch |= kb.add("P", (x, b), ENT, "T-SUM-SPLIT",
                         prem + pp(kb, "O", x, a))
        if st(kb, "O", x, b) is REF:
            ch |= kb.add("P", (x, a), ENT, "T-SUM-SPLIT",
                         prem + pp(kb, "O", x, b))
    return ch


@rule("A7.parts", "axiom", "an intersection is part of both operands")
def a7_parts(kb: KB) -> bool:
    ch = False
    for t in list(kb.terms):
        if isinstance(t, Inter) and kb.canon(t) == t:
            ch |= kb.add("P", (t, kb.canon(t.left)), ENT, "A7")
            ch |= kb.add("P", (t, kb.canon(t.right)), ENT, "A7")
    return ch


@rule("A6.disjoint", "axiom", "nothing overlaps its complement")
def a6_disjoint(kb: KB) -> bool:
    ch = False
    for t in list(kb.terms):
        if isinstance(t, Compl) and kb.canon(t) == t:
            ch |= kb.add("O", (kb.canon(t.arg), t), REF, "A6")
    return ch


@rule("A6.in", "axiom", "what is clear of x sits inside the complement of x")
def a6_in(kb: KB) -> bool:
    ch = False
    compls = {kb.canon(t.arg): t for t in list(kb.terms)
              if isinstance(t, Compl) and kb.canon(t) == t}
    if not compls:
        return False
    for lit in lits(kb, "C", REF):
        v, x = lit.args
        for a, b in ((v, x), (x, v)):
            if b in compls:
                ch |= kb.add("P", (a, compls[b]), ENT, "A6",
                             pp(kb, "C", v, x))
    return ch


@rule("A8.open", "axiom", "interiors are open parts")
def a8_open(kb: KB) -> bool:
    ch = False
    for t in list(kb.terms):
        if isinstance(t, Interior) and kb.canon(t) == t:
            ch |= kb.add("P", (t, kb.canon(t.arg)), ENT, "A8")
            ch |= kb.add("OP", (t,), ENT, "A8")
    return ch


@rule("T-CL-EXT", "theorem", "closures are closed and contain their argument")
def t_cl_ext(kb: KB) -> bool:
    ch = False
    for t in list(kb.terms):
        if isinstance(t, Closure) and kb.canon(t) == t:
            ch |= kb.add("P", (kb.canon(t.arg), t), ENT, "T-CL-EXT")
            ch |= kb.add("CL", (t,), ENT, "T-CL-EXT")
    return ch


@rule("T-C-CL", "theorem", "connection lifts to closures")
def t_c_cl(kb: KB) -> bool:
    ch = False
    cls_of = {kb.canon(t.arg): t for t in list(kb.terms)
              if isinstance(t, Closure) and kb.canon(t) == t}
    if not cls_of:
        return False
    for lit in lits(kb, "C"):
        x, y = lit.args
        cx, cy = cls_of.get(x, x), cls_of.get(y, y)
        if (cx, cy) != (x, y):
            ch |= kb.add("C", (cx, cy), ENT, "T-C-CL", pp(kb, "C", x, y))
    return ch


@rule("D8.fwd", "definition", "an open individual equals its interior")
def d8_fwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "OP"):
        x = lit.args[0]
        ch |= kb.merge(x, iint(x), "D8", pp(kb, "OP", x))
    return ch


@rule("D8.bwd", "definition", "equal to its interior means open")
def d8_bwd(kb: KB) -> bool:
    ch = False
    for t in list(kb.terms):
        if isinstance(t, Interior) and kb.canon(t) == kb.canon(t.arg):
            ch |= kb.add("OP", (kb.canon(t.arg),), ENT, "D8")
    return ch


@rule("D9.fwd", "definition", "a closed individual equals its closure")
def d9_fwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "CL"):
        x = lit.args[0]
        if isinstance(kb.canon(x), Univ):
            continue
        ch |= kb.merge(x, iclos(x), "D9", pp(kb, "CL", x))
    return ch


@rule("D9.bwd", "definition", "equal to its closure means closed")
def d9_bwd(kb: KB) -> bool:
    ch = False
    for t in list(kb.terms):
        if isinstance(t, Closure) and kb.canon(t) == kb.canon(t.arg):
            ch |= kb.add("CL", (kb.canon(t.arg),), ENT, "D9")
    return ch


@rule("A10", "axiom", "open individuals have open intersections")
def a10(kb: KB) -> bool:
    ch = False
    for t in list(kb.terms):
        if isinstance(t, Inter) and kb.canon(t) == t:
            a, b = kb.canon(t.left), kb.canon(t.right)
            if st(kb, "OP", a) is ENT and st(kb, "OP", b) is ENT \
                    and st(kb, "O", a, b) is ENT:
                ch |= kb.add("OP", (t,), ENT, "A10",
                             pp(kb, "OP", a) + pp(kb, "OP", b)
                             + pp(kb, "O", a, b))
    return ch


@rule("T-P-I-MONO", "theorem", "inside an interior, one's interior stays inside it")
def t_p_i_mono(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "P"):
        x, y = lit.args
        if isinstance(y, Interior) and not isinstance(x, Interior):
            ch |= kb.add("P", (kb.touch(iint(x)), y), ENT, "T-P-I-MONO",
                         pp(kb, "P", x, y))
    return ch


@rule("T-P-I-RAISE", "theorem", "an interior inside y sits inside the interior of y")
def t_p_i_raise(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "P"):
        x, y = lit.args
        if isinstance(x, Interior) and not isinstance(y, (Interior, Univ)):
            ch |= kb.add("P", (x, kb.touch(iint(y))), ENT, "T-P-I-RAISE",
                         pp(kb, "P", x, y))
    return ch


# ----------------------------------------------------------------------
# separation, contact kinds, connectedness

@rule("D10.fwd", "definition", "disconnected closures mean separation")
def d10_fwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "C", REF):
        x, y = lit.args
        if isinstance(x, Closure) and isinstance(y, Closure):
            ch |= kb.add("Sp", (kb.canon(x.arg), kb.canon(y.arg)), ENT, "D10",
                         pp(kb, "C", x, y))
    return ch


@rule("D10.bwd", "definition", "separated individuals have disconnected closures")
def d10_bwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Sp"):
        x, y = lit.args
        prem = pp(kb, "Sp", x, y)
        ch |= kb.add("C", (kb.touch(iclos(x)), kb.touch(iclos(y))), REF,
                     "D10", prem)
        ch |= kb.add("C", (x, y), REF, "T-SP-C", prem)
    for lit in lits(kb, "C"):
        x, y = lit.args
        if isinstance(x, Closure) and isinstance(y, Closure):
            ch |= kb.add("Sp", (kb.canon(x.arg), kb.canon(y.arg)), REF, "D10",
                         pp(kb, "C", x, y))
    return ch


@rule("D11.bwd", "definition", "a connected individual admits no separated split")
def d11_bwd(kb: KB) -> bool:
    ch = False
    sums = sum_terms(kb)
    for lit in lits(kb, "Con"):
        x = lit.args[0]
        prem = pp(kb, "Con", x)
        for s in sums:
            if kb.canon(s) != x or len(s.parts) != 2:
                continue
            a, b = sorted((kb.canon(p) for p in s.parts), key=term_key)
            ch |= kb.add("Sp", (a, b), REF, "D11", prem)
    return ch


@rule("D11.contra", "definition", "a separated split refutes connectedness")
def d11_contra(kb: KB) -> bool:
    ch = False
    for s in sum_terms(kb):
        if len(s.parts) != 2:
            continue
        a, b = sorted((kb.canon(p) for p in s.parts), key=term_key)
        if st(kb, "Sp", a, b) is ENT:
            ch |= kb.add("Con", (s,), REF, "D11", pp(kb, "Sp", a, b))
    return ch


@rule("D12.fwd", "definition", "closure contact without connection is intermediate contact")
def d12_fwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "C"):
        x, y = lit.args
        if not (isinstance(x, Closure) and isinstance(y, Closure)):
            continue
        bx, by = kb.canon(x.arg), kb.canon(y.arg)
        if st(kb, "C", bx, by) is REF:
            ch |= kb.add("ICont", (bx, by), ENT, "D12",
                         pp(kb, "C", bx, by) + pp(kb, "C", x, y))
    return ch


@rule("D12.bwd", "definition", "unfolding intermediate contact")
def d12_bwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "ICont"):
        x, y = lit.args
        prem = pp(kb, "ICont", x, y)
        ch |= kb.add("C", (x, y), REF, "D12", prem)
        ch |= kb.add("C", (kb.touch(iclos(x)), kb.touch(iclos(y))), ENT,
                     "D12", prem)
    for lit in lits(kb, "C"):
        ch |= kb.add("ICont", lit.args, REF, "D12", pp(kb, "C", *lit.args))
    return ch


@rule("D13.bwd", "definition", "unfolding weak contact")
def d13_bwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "WCont"):
        x, y = lit.args
        prem = pp(kb, "WCont", x, y)
        cx, cy = kb.touch(iclos(x)), kb.touch(iclos(y))
        ch |= kb.add("C", (cx, cy), REF, "D13", prem)
        ch |= kb.add("C", (x, y), REF, "D13", prem)
        for plit in lits(kb, "P"):
            if plit.args[0] == x and st(kb, "OP", plit.args[1]) is ENT:
                z = plit.args[1]
                ch |= kb.add("C", (kb.touch(iclos(z)), y), ENT, "D13",
                             prem + pp(kb, "P", x, z) + pp(kb, "OP", z))
    for lit in lits(kb, "C"):
        x, y = lit.args
        if isinstance(x, Closure) and isinstance(y, Closure):
            ch |= kb.add("WCont", (kb.canon(x.arg), kb.canon(y.arg)), REF,
                         "D13", pp(kb, "C", x, y))
    return ch


@rule("D14.fwd", "definition", "each contact kind is contact")
def d14_fwd(kb: KB) -> bool:
    ch = False
    for rel in ("EC", "ICont", "WCont"):
        for lit in lits(kb, rel):
            ch |= kb.add("Cont", lit.args, ENT, "D14", pp(kb, rel, *lit.args))
    return ch


@rule("D14.bwd", "definition", "contact is one of the three kinds")
def d14_bwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Cont"):
        x, y = lit.args
        if term_key(y) < term_key(x):
            continue
        sts = {rel: st(kb, rel, x, y) for rel in ("EC", "ICont", "WCont")}
        if any(v is ENT for v in sts.values()):
            continue
        ch |= kb.disjoin("D14", [(Lit(rel, (x, y)), ENT)
                                 for rel in ("EC", "ICont", "WCont")],
                         pp(kb, "Cont", x, y))
    for lit in lits(kb, "Cont", REF):
        for rel in ("EC", "ICont", "WCont"):
            ch |= kb.add(rel, lit.args, REF, "D14", pp(kb, "Cont", *lit.args))
    return ch


@rule("D14.neg", "definition", "no contact kind, no contact")
def d14_neg(kb: KB) -> bool:
    ch = False
    seen: set[tuple[Term, Term]] = set()
    for rel in ("EC", "ICont", "WCont"):
        for lit in lits(kb, rel, REF):
            x, y = lit.args
            if (x, y) in seen:
                continue
            seen.add((x, y))
            if all(st(kb, r, x, y) is REF for r in ("EC", "ICont", "WCont")):
                prem = (pp(kb, "EC", x, y) + pp(kb, "ICont", x, y)
                        + pp(kb, "WCont", x, y))
                ch |= kb.add("Cont", (x, y), REF, "D14", prem)
    return ch


# ----------------------------------------------------------------------
# boundary hierarchy

@rule("D16.env", "definition", "envelope facts name the envelope term")
def d16_env(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Env"):
        x, y = lit.args
        ch |= kb.merge(x, ienv(y), "D16", pp(kb, "Env", x, y))
    for t in list(kb.terms):
        if isinstance(t, Env) and kb.canon(t) == t:
            base = kb.canon(t.arg)
            ch |= kb.add("Env", (t, base), ENT, "D16")
            ch |= kb.add("TP", (t, base), ENT, "D15")
    return ch


@rule("D15.mirror", "definition", "an envelope has exactly the external neighbors of its body")
def d15_mirror(kb: KB) -> bool:
    ch = False
    envs = {kb.canon(t.arg): t for t in list(kb.terms)
            if isinstance(t, Env) and kb.canon(t) == t}
    if not envs:
        return False
    for status in (ENT, REF):
        for lit in lits(kb, "EC", status):
            z, y = lit.args
            e = envs.get(y)
            if e is not None and z != e:
                ch |= kb.add("EC", (z, e), status, "D15", pp(kb, "EC", z, y))
            if isinstance(y, Env):
                ch |= kb.add("EC", (z, kb.canon(y.arg)), status, "D15",
                             pp(kb, "EC", z, y))
    return ch


@rule("D17.fwd", "definition", "a tangential part of the envelope is a first-order limit")
def d17_fwd(kb: KB) -> bool:
    ch = False
    env_rel: dict[Term, list[Lit]] = {}
    for lit in lits(kb, "Env"):
        env_rel.setdefault(lit.args[0], []).append(lit)
    for tl in lits(kb, "TP"):
        x, z = tl.args
        for el in env_rel.get(z, ()):
            y = el.args[1]
            ch |= kb.add("Lim1", (x, y), ENT, "D17",
                         pp(kb, "TP", x, z) + pp(kb, "Env", z, y))
    return ch


@rule("D17.bwd", "definition", "a first-order limit sits tangentially in the envelope")
def d17_bwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Lim1"):
        x, y = lit.args
        ch |= kb.add("TP", (x, kb.touch(ienv(y))), ENT, "D17",
                     pp(kb, "Lim1", x, y))
    return ch


@rule("D20.fwd", "definition", "a tangential part of a contour of a limit is a second-order limit")
def d20_fwd(kb: KB) -> bool:
    ch = False
    for cl in lits(kb, "Contour"):
        w, wp = cl.args
        if st(kb, "Lim1", wp, wp) is ENT:
            pass
        for l1 in lits(kb, "Lim1"):
            if l1.args[0] != wp:
                continue
            y = l1.args[1]
            for tl in lits(kb, "TP"):
                if tl.args[1] == w:
                    x = tl.args[0]
                    ch |= kb.add("Lim2", (x, y), ENT, "D20",
                                 pp(kb, "Contour", w, wp)
                                 + pp(kb, "Lim1", wp, y)
                                 + pp(kb, "TP", x, w))
    return ch


@rule("D23.fwd", "definition", "a tangential part of the ends of a second-order limit is a third-order limit")
def d23_fwd(kb: KB) -> bool:
    ch = False
    for el in lits(kb, "Ends"):
        w, wp = el.args
        for l2 in lits(kb, "Lim2"):
            if l2.args[0] != wp:
                continue
            y = l2.args[1]
            for tl in lits(kb, "TP"):
                if tl.args[1] == w:
                    x = tl.args[0]
                    ch |= kb.add("Lim3", (x, y), ENT, "D23",
                                 pp(kb, "Ends", w, wp)
                                 + pp(kb, "Lim2", wp, y)
                                 + pp(kb, "TP", x, w))
    return ch


def _kind_rule(kind: str, lim: str, excl: str | None, rid: str):
    def fwd(kb: KB) -> bool:
        ch = False
        for lit in lits(kb, lim):
            x, y = lit.args
            if st(kb, "Con", x) is not ENT:
                continue
            prem = pp(kb, "Con", x) + pp(kb, lim, x, y)
            if excl is None:
                ch |= kb.add(kind, (x, y), ENT, rid, prem)
            elif st(kb, excl, x, y) is REF:
                ch |= kb.add(kind, (x, y), ENT, rid,
                             prem + pp(kb, excl, x, y))
        for lit in lits(kb, kind):
            x, y = lit.args
            prem = pp(kb, kind, x, y)
            ch |= kb.add("Con", (x,), ENT, rid, prem)
            ch |= kb.add(lim, (x, y), ENT, rid, prem)
            if excl is not None:
                ch |= kb.add(excl, (x, y), REF, rid, prem)
        return ch
    return fwd


rule("D24", "definition", "a surface is a connected first-order limit that is not second-order")(
    _kind_rule("Surface", "Lim1", "Lim2", "D24"))
rule("D25", "definition", "a line is a connected second-order limit that is not third-order")(
    _kind_rule("Line", "Lim2", "Lim3", "D25"))
rule("D26", "definition", "a point is a connected third-order limit")(
    _kind_rule("Point", "Lim3", None, "D26"))


# ----------------------------------------------------------------------
# qualitative distance

@rule("A11", "axiom", "closer-than is strict: never both ways")
def a11(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Closer"):
        x, y, z = lit.args
        ch |= kb.add("Closer", (x, z, y), REF, "A11",
                     pp(kb, "Closer", x, y, z))
    return ch


@rule("A12", "axiom", "the distance order is total (recorded disjunctions)")
def a12(kb: KB) -> bool:
    ch = False
    mentioned: dict[Term, set[Term]] = {}
    for status in (ENT, REF):
        for lit in list(kb.lits("Closer", status)) + list(kb.lits("Equidist", status)):
            mentioned.setdefault(lit.args[0], set()).update(lit.args[1:])
    for lit in lits(kb, "Closer"):
        x, y, z = lit.args
        prem = pp(kb, "Closer", x, y, z)
        for t in sorted(mentioned.get(x, ()), key=term_key):
            if t in (y, z):
                continue
            ch |= kb.disjoin("A12", [(Lit("Closer", (x, y, t)), ENT),
                                     (Lit("Closer", (x, t, z)), ENT)], prem)
    return ch


@rule("A13", "axiom", "first transitivity across viewpoints")
def a13(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Closer"):
        x, y, z = lit.args
        if st(kb, "Closer", z, y, x) is REF:
            ch |= kb.add("Closer", (y, x, z), ENT, "A13",
                         pp(kb, "Closer", x, y, z) + pp(kb, "Closer", z, y, x))
    return ch


@rule("A13.neg", "theorem", "contrapositive image of the viewpoint transitivity")
def a13_neg(kb: KB) -> bool:
    ch = False
    negs = lits(kb, "Closer", REF)
    have = {l.args for l in negs}
    for lit in negs:
        x, y, z = lit.args
        if (z, x, y) in have:
            ch |= kb.add("Closer", (y, x, z), REF, "A13",
                         pp(kb, "Closer", x, y, z) + pp(kb, "Closer", z, x, y))
    return ch


@rule("A14", "axiom", "second transitivity within a viewpoint")
def a14(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Closer"):
        x, y, z = lit.args
        for nlit in lits(kb, "Closer", REF):
            if nlit.args[0] != x or nlit.args[2] != z:
                continue
            t = nlit.args[1]
            ch |= kb.add("Closer", (x, y, t), ENT, "A14",
                         pp(kb, "Closer", x, y, z) + pp(kb, "Closer", x, t, z))
    return ch


@rule("A14.neg", "theorem", "contrapositive image of the in-viewpoint transitivity")
def a14_neg(kb: KB) -> bool:
    ch = False
    negs = lits(kb, "Closer", REF)
    by_x: dict[Term, list[Lit]] = {}
    for lit in negs:
        by_x.setdefault(lit.args[0], []).append(lit)
    for lit in negs:
        x, y, z = lit.args
        for nxt in by_x.get(x, ()):
            if nxt.args[1] == z:
                t = nxt.args[2]
                ch |= kb.add("Closer", (x, y, t), REF, "A14",
                             pp(kb, "Closer", x, y, z)
                             + pp(kb, "Closer", x, z, t))
    return ch


@rule("A15", "axiom", "nothing beats a connected individual on distance")
def a15(kb: KB) -> bool:
    ch = False
    inds = kb.individuals()
    for lit in lits(kb, "C"):
        x, y = lit.args
        prem = pp(kb, "C", x, y)
        for z in inds:
            ch |= kb.add("Closer", (x, z, y), REF, "A15", prem)
    return ch


@rule("A16", "axiom", "connected beats disconnected")
def a16(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "C"):
        x, y = lit.args
        for nlit in lits(kb, "C", REF):
            if nlit.args[0] == x:
                z = nlit.args[1]
                ch |= kb.add("Closer", (x, y, z), ENT, "A16",
                             pp(kb, "C", x, y) + pp(kb, "C", x, z))
            if nlit.args[1] == x:
                z = nlit.args[0]
                ch |= kb.add("Closer", (x, y, z), ENT, "A16",
                             pp(kb, "C", x, y) + pp(kb, "C", z, x))
    return ch


@rule("A17", "axiom", "nothing disconnected beats a weak contact")
def a17(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "WCont"):
        x, y = lit.args
        prem = pp(kb, "WCont", x, y)
        for nlit in lits(kb, "C", REF):
            z = None
            if nlit.args[0] == x:
                z = nlit.args[1]
            elif nlit.args[1] == x:
                z = nlit.args[0]
            if z is not None:
                ch |= kb.add("Closer", (x, z, y), REF, "A17",
                             prem + pp(kb, "C", *nlit.args))
    return ch


@rule("A18", "axiom", "weak contact beats plain disconnection")
def a18(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "WCont"):
        x, y = lit.args
        prem = pp(kb, "WCont", x, y)
        for nlit in lits(kb, "C", REF):
            z = None
            if nlit.args[0] == x:
                z = nlit.args[1]
            elif nlit.args[1] == x:
                z = nlit.args[0]
            if z is not None and st(kb, "WCont", x, z) is REF:
                ch |= kb.add("Closer", (x, y, z), ENT, "A18",
                             prem + pp(kb, "C", *nlit.args)
                             + pp(kb, "WCont", x, z))
    return ch


@rule("A19", "axiom", "nothing is closer to anything than a part is to its whole")
def a19(kb: KB) -> bool:
    ch = False
    inds = kb.individuals()
    for lit in lits(kb, "P"):
        x, y = lit.args
        prem = pp(kb, "P", x, y)
        for z in inds:
            ch |= kb.add("Closer", (z, x, y), REF, "A19", prem)
    return ch


@rule("D27.fwd", "definition", "equidistance from two refuted comparisons")
def d27_fwd(kb: KB) -> bool:
    ch = False
    negs = lits(kb, "Closer", REF)
    have = {l.args for l in negs}
    for lit in negs:
        x, y, z = lit.args
        if (x, z, y) in have:
            ch |= kb.add("Equidist", (x, y, z), ENT, "D27",
                         pp(kb, "Closer", x, y, z) + pp(kb, "Closer", x, z, y))
    return ch


@rule("D27.bwd", "definition", "unfolding equidistance")
def d27_bwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Equidist"):
        x, y, z = lit.args
        prem = pp(kb, "Equidist", x, y, z)
        ch |= kb.add("Closer", (x, y, z), REF, "D27", prem)
        ch |= kb.add("Closer", (x, z, y), REF, "D27", prem)
    for lit in lits(kb, "Closer"):
        x, y, z = lit.args
        ch |= kb.add("Equidist", (x, y, z), REF, "D27",
                     pp(kb, "Closer", x, y, z))
    return ch


@rule("D27.clause", "definition", "refuted equidistance with one side settled decides the other")
def d27_clause(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Equidist", REF):
        x, y, z = lit.args
        prem = pp(kb, "Equidist", x, y, z)
        if st(kb, "Closer", x, y, z) is REF:
            ch |= kb.add("Closer", (x, z, y), ENT, "D27",
                         prem + pp(kb, "Closer", x, y, z))
        if st(kb, "Closer", x, z, y) is REF:
            ch |= kb.add("Closer", (x, y, z), ENT, "D27",
                         prem + pp(kb, "Closer", x, z, y))
    return ch


# ----------------------------------------------------------------------
# direction algebra

@rule("A20", "integrity", "no direction is closer to a direction than to itself")
def a20(kb: KB) -> bool:
    seen = {c.detail for c in kb.conflicts}
    ch = False
    for lit in lits(kb, "Kd"):
        if lit.args[1] == lit.args[2]:
            msg = f"{lit} asserted with equal comparison directions"
            if msg not in seen:
                kb.conflicts.append(Conflict("A20", msg, pp(kb, "Kd", *lit.args)))
                seen.add(msg)
                ch = True
    return ch


@rule("T-KD-ASYM", "theorem", "angular proximity is asymmetric")
def t_kd_asym(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Kd"):
        a, b, c = lit.args
        ch |= kb.add("Kd", (a, c, b), REF, "T-KD-ASYM", pp(kb, "Kd", a, b, c))
    return ch


@rule("A21", "axiom", "angular proximity is transitive")
def a21(kb: KB) -> bool:
    ch = False
    by_head: dict[tuple[Term, Term], list[Lit]] = {}
    for lit in lits(kb, "Kd"):
        by_head.setdefault((lit.args[0], lit.args[1]), []).append(lit)
    for lit in lits(kb, "Kd"):
        a, b, c = lit.args
        for nxt in by_head.get((a, c), ()):
            d = nxt.args[2]
            ch |= kb.add("Kd", (a, b, d), ENT, "A21",
                         pp(kb, "Kd", a, b, c) + pp(kb, "Kd", a, c, d))
    return ch


@rule("A22", "axiom", "second angular transitivity across viewpoints")
def a22(kb: KB) -> bool:
    ch = False
    pos = lits(kb, "Kd")
    have = {l.args for l in pos}
    for lit in pos:
        a, b, c = lit.args
        if (c, a, b) in have:
            ch |= kb.add("Kd", (b, a, c), ENT, "A22",
                         pp(kb, "Kd", a, b, c) + pp(kb, "Kd", c, a, b))
    return ch


@rule("A25", "axiom", "comparisons reflect through opposites of the compared pair")
def a25(kb: KB) -> bool:
    ch = False
    for status in (ENT, REF):
        for lit in lits(kb, "Kd", status):
            a, b, c = lit.args
            ch |= kb.add("Kd", (a, kb.touch(opp(c)), kb.touch(opp(b))),
                         status, "A25", pp(kb, "Kd", a, b, c))
    return ch


@rule("A26", "axiom", "comparisons survive flipping every direction")
def a26(kb: KB) -> bool:
    ch = False
    for status in (ENT, REF):
        for lit in lits(kb, "Kd", status):
            a, b, c = lit.args
            ch |= kb.add("Kd", (kb.touch(opp(a)), kb.touch(opp(b)),
                                kb.touch(opp(c))), status, "A26",
                         pp(kb, "Kd", a, b, c))
    return ch


@rule("D28", "definition", "every direction is closer to anything than to its opposite")
def d28(kb: KB) -> bool:
    ch = False
    dirs = [kb.canon(d) for d in kb.directions()]
    alld = sorted({*dirs, *(kb.canon(opp(d)) for d in dirs)}, key=term_key)
    for d in alld:
        od = kb.canon(opp(d))
        for e in alld:
            if e != od:
                ch |= kb.add("Kd", (d, e, od), ENT, "D28")
    return ch


@rule("A24", "axiom", "three distinct directions compare or sit on the median (recorded)")
def a24(kb: KB) -> bool:
    ch = False
    dirs = sorted({kb.canon(d) for d in kb.directions()}
                  | {kb.canon(opp(d)) for d in kb.directions()}, key=term_key)
    for d1 in dirs:
        for d2 in dirs:
            for d3 in dirs:
                if term_key(d2) >= term_key(d3):
                    continue
                if not (dir_distinct(kb, d1, d2) and dir_distinct(kb, d1, d3)
                        and dir_distinct(kb, d2, d3)):
                    continue
                ch |= kb.disjoin("A24", [
                    (Lit("Kd", (d1, d2, d3)), ENT),
                    (Lit("Kd", (d1, d3, d2)), ENT),
                    (Lit("In-med", (d1, d2, d3)), ENT)])
    return ch


@rule("D29.fwd", "definition", "equidistant from a direction and its opposite means orthogonal")
def d29_fwd(kb: KB) -> bool:
    ch = False
    dirs = sorted({kb.canon(d) for d in kb.directions()}
                  | {kb.canon(opp(d)) for d in kb.directions()}, key=term_key)
    for a in dirs:
        for b in dirs:
            ob = kb.canon(opp(b))
            if st(kb, "Kd", a, b, ob) is REF and st(kb, "Kd", a, ob, b) is REF:
                ch |= kb.add("Ortho", (a, b), ENT, "D29",
                             pp(kb, "Kd", a, b, ob) + pp(kb, "Kd", a, ob, b))
    return ch


@rule("D29.bwd", "definition", "unfolding orthogonality")
def d29_bwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Ortho"):
        a, b = lit.args
        ob = kb.touch(opp(b))
        prem = pp(kb, "Ortho", a, b)
        ch |= kb.add("Kd", (a, b, ob), REF, "D29", prem)
        ch |= kb.add("Kd", (a, ob, b), REF, "D29", prem)
    for lit in lits(kb, "Kd"):
        a, b, c = lit.args
        if kb.canon(opp(b)) == c:
            ch |= kb.add("Ortho", (a, b), REF, "D29", pp(kb, "Kd", a, b, c))
            ch |= kb.add("Ortho", (a, c), REF, "D29", pp(kb, "Kd", a, b, c))
    return ch


@rule("D30.triv", "definition", "a direction is its own median with itself")
def d30_triv(kb: KB) -> bool:
    ch = False
    for d in kb.directions():
        d = kb.canon(d)
        ch |= kb.add("In-med", (d, d, d), ENT, "D30")
    return ch


@rule("D30.fwd", "definition", "equidistant between two distinct directions means median")
def d30_fwd(kb: KB) -> bool:
    ch = False
    negs = lits(kb, "Kd", REF)
    have = {l.args for l in negs}
    for lit in negs:
        d3, d1, d2 = lit.args
        if (d3, d2, d1) in have and dir_distinct(kb, d1, d2):
            ch |= kb.add("In-med", (d3, d1, d2), ENT, "D30",
                         pp(kb, "Kd", d3, d1, d2) + pp(kb, "Kd", d3, d2, d1))
    return ch


@rule("D30.bwd", "definition", "unfolding median membership")
def d30_bwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "In-med"):
        d3, d1, d2 = lit.args
        if not dir_distinct(kb, d1, d2):
            continue
        prem = pp(kb, "In-med", d3, d1, d2)
        ch |= kb.add("Kd", (d3, d1, d2), REF, "D30", prem)
        ch |= kb.add("Kd", (d3, d2, d1), REF, "D30", prem)
    for lit in lits(kb, "Kd"):
        d3, d1, d2 = lit.args
        if dir_distinct(kb, d1, d2):
            ch |= kb.add("In-med", (d3, d1, d2), REF, "D30",
                         pp(kb, "Kd", d3, d1, d2))
    return ch


@rule("A27", "axiom", "median membership chains over a shared endpoint")
def a27(kb: KB) -> bool:
    ch = False
    meds = lits(kb, "In-med")
    for l1 in meds:
        d, d1, d2 = l1.args
        for l2 in meds:
            if l2.args[0] != d:
                continue
            for (a, b) in ((d1, d2), (d2, d1)):
                if l2.args[1] == b:
                    d3 = l2.args[2]
                elif l2.args[2] == b:
                    d3 = l2.args[1]
                else:
                    continue
                if dir_distinct(kb, a, d3):
                    ch |= kb.add("In-med", (d, a, d3), ENT, "A27",
                                 pp(kb, "In-med", *l1.args)
                                 + pp(kb, "In-med", *l2.args))
    return ch


@rule("A28", "axiom", "a sum direction pushes comparisons onto its operands")
def a28(kb: KB) -> bool:
    ch = False
    for sl in lits(kb, "In-sum"):
        d1, d2, d3 = sl.args
        prem = pp(kb, "In-sum", d1, d2, d3)
        for kl in lits(kb, "Kd"):
            d, b, c = kl.args
            if {b, c} != {d2, d3}:
                continue
            if b == d2 and c == d3:
                ch |= kb.add("Kd", (d3, d1, d), ENT, "A28",
                             prem + pp(kb, "Kd", d, d2, d3))
                ch |= kb.add("Kd", (kb.touch(opp(d2)), kb.touch(opp(d1)), d),
                             ENT, "A28", prem + pp(kb, "Kd", d, d2, d3))
    return ch


@rule("D31.bwd", "definition", "a sum direction is a closest median")
def d31_bwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "In-sum"):
        d3, d1, d2 = lit.args
        prem = pp(kb, "In-sum", d3, d1, d2)
        ch |= kb.add("In-med", (d3, d1, d2), ENT, "D31", prem)
        for ml in lits(kb, "In-med"):
            if ml.args[1:] == (d1, d2) or ml.args[1:] == (d2, d1):
                d4 = ml.args[0]
                ch |= kb.add("Kd", (d1, d4, d3), REF, "D31",
                             prem + pp(kb, "In-med", *ml.args))
    return ch


@rule("D31.fwd", "definition",
      "median closest to the operands among all known medians (domain closure)")
def d31_fwd(kb: KB) -> bool:
    ch = False
    dirs = sorted({kb.canon(d) for d in kb.directions()}
                  | {kb.canon(opp(d)) for d in kb.directions()}, key=term_key)
    for ml in lits(kb, "In-med"):
        d3, d1, d2 = ml.args
        ok = True
        prem = pp(kb, "In-med", d3, d1, d2)
        for d4 in dirs:
            s_med = st(kb, "In-med", d4, d1, d2)
            if s_med is UNK:
                ok = False
                break
            if s_med is ENT:
                s_kd = st(kb, "Kd", d1, d4, d3)
                if s_kd is not REF:
                    ok = False
                    break
                prem += pp(kb, "In-med", d4, d1, d2) + pp(kb, "Kd", d1, d4, d3)
        if ok:
            ch |= kb.add("In-sum", (d3, d1, d2), ENT, "D31", prem)
    return ch


# ----------------------------------------------------------------------
# projections along directions

@rule("T-ALLEN-COMP", "theorem", "projection constraints compose along a shared axis")
def t_allen_comp(kb: KB) -> bool:
    ch = False
    by_axis: dict[Term, dict[tuple[Term, Term], frozenset[str]]] = {}
    for x, y, d, rels in kb.allen_pairs():
        cell = by_axis.setdefault(d, {})
        cell[(x, y)] = rels
        cell[(y, x)] = A.converse_set(rels)
    for d, cells in by_axis.items():
        pairs = list(cells)
        for (x, y) in pairs:
            for (y2, z) in pairs:
                if y2 != y or z == x or z == y or x == y:
                    continue
                comp = A.compose_sets(cells[(x, y)], cells[(y2, z)])
                if comp == A.FULL:
                    continue
                ch |= kb.allen_refine(x, z, d, comp, "T-ALLEN-COMP")
    return ch


@rule("T-ALLEN-SEP", "theorem", "strict precedence along an axis refutes connection")
def t_allen_sep(kb: KB) -> bool:
    ch = False
    for x, y, d, rels in kb.allen_pairs():
        if rels and rels <= frozenset({"<", ">"}):
            ch |= kb.add("C", (x, y), REF, "T-ALLEN-SEP")
    return ch


@rule("T-ALLEN-NOTP", "theorem", "a projection outside the whole refutes parthood")
def t_allen_notp(kb: KB) -> bool:
    ch = False
    for x, y, d, rels in kb.allen_pairs():
        if not rels:
            continue
        if not (rels & A.WITHIN):
            ch |= kb.add("P", (x, y), REF, "T-ALLEN-NOTP")
        if not (rels & A.converse_set(A.WITHIN)):
            ch |= kb.add("P", (y, x), REF, "T-ALLEN-NOTP")
    return ch


# ----------------------------------------------------------------------
# extremities

@rule("D32.bwd", "definition", "an extremity is a limit every other part precedes or meets")
def d32_bwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Ext"):
        y, x, d = lit.args
        prem = pp(kb, "Ext", y, x, d)
        ch |= kb.add("Lim1", (y, x), ENT, "D32", prem)
        for plit in lits(kb, "P"):
            if plit.args[1] != x:
                continue
            v = plit.args[0]
            if st(kb, "P", v, y) is REF:
                ch |= kb.allen_refine(v, y, d, BEFORE_OR_MEETS, "D32",
                                      prem + pp(kb, "P", v, x)
                                      + pp(kb, "P", v, y))
    return ch


@rule("D33.fwd", "definition", "paired salient extremities generate a direction")
def d33_fwd(kb: KB) -> bool:
    ch = False
    exts = lits(kb, "Ext")
    for l1 in exts:
        y, x, d = l1.args
        od = kb.canon(opp(d))
        for l2 in exts:
            z, u, d2 = l2.args
            if d2 != od:
                continue
            if st(kb, "P", u, x) is not ENT or st(kb, "P", y, u) is not ENT:
                continue
            if st(kb, "Salient", z, x) is not ENT:
                continue
            z_pt = any(pl.args[0] == z for pl in lits(kb, "Point"))
            y_pt = any(pl.args[0] == y for pl in lits(kb, "Point"))
            if z_pt and y_pt:
                continue
            ch |= kb.add("Exts", (y, z, x, d), ENT, "D33",
                         pp(kb, "Ext", y, x, d) + pp(kb, "P", u, x)
                         + pp(kb, "P", y, u) + pp(kb, "Ext", z, u, od)
                         + pp(kb, "Salient", z, x))
    return ch


@rule("D33.bwd", "definition", "unfolding a paired extremity")
def d33_bwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Exts"):
        y, z, x, d = lit.args
        prem = pp(kb, "Exts", y, z, x, d)
        ch |= kb.add("Ext", (y, x, d), ENT, "D33", prem)
        ch |= kb.add("Salient", (z, x), ENT, "D33", prem)
    return ch


# ----------------------------------------------------------------------
# plural lattice, collections, quantities, ontology

@rule("T-LEQ-REFL", "theorem", "the plural order is reflexive")
def t_leq_refl(kb: KB) -> bool:
    ch = False
    for e in list(kb.entities):
        ch |= kb.add("Leq", (e, e), ENT, "A31")
    return ch


@rule("A30", "axiom", "the plural order is transitive")
def a30(kb: KB) -> bool:
    ch = False
    by_lo: dict[Term, list[Lit]] = {}
    for lit in lits(kb, "Leq"):
        by_lo.setdefault(lit.args[0], []).append(lit)
    for lit in lits(kb, "Leq"):
        x, y = lit.args
        for nxt in by_lo.get(y, ()):
            ch |= kb.add("Leq", (x, nxt.args[1]), ENT, "A30",
                         pp(kb, "Leq", x, y) + pp(kb, "Leq", *nxt.args))
    return ch


@rule("A31", "axiom", "the plural order is antisymmetric")
def a31(kb: KB) -> bool:
    ch = False
    pos = lits(kb, "Leq")
    have = {l.args for l in pos}
    for lit in pos:
        x, y = lit.args
        if x != y and (y, x) in have:
            ch |= kb.merge(x, y, "A31", pp(kb, "Leq", x, y) + pp(kb, "Leq", y, x))
    return ch


@rule("A32.struct", "axiom", "plural sums order by membership")
def a32_struct(kb: KB) -> bool:
    ch = False
    plurs = [t for t in list(kb.entities) if isinstance(t, Plur)]
    for p in plurs:
        for q in plurs:
            if p is not q and p.members < q.members:
                ch |= kb.add("Leq", (p, q), ENT, "A32")
    return ch


@rule("D34", "definition", "below an atom means equal to it")
def d34(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Leq"):
        y, x = lit.args
        if y != x and st(kb, "At", x) is ENT:
            ch |= kb.merge(y, x, "D34", pp(kb, "Leq", y, x) + pp(kb, "At", x))
    return ch


@rule("D35", "definition", "collections: plural, or atoms that collect a plural")
def d35(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "At", REF):
        ch |= kb.add("Coll", lit.args, ENT, "D35", pp(kb, "At", *lit.args))
    for lit in lits(kb, "Is-coll"):
        ch |= kb.add("Coll", (lit.args[0],), ENT, "D35",
                     pp(kb, "Is-coll", *lit.args))
    for lit in lits(kb, "Coll", REF):
        ch |= kb.add("At", lit.args, ENT, "D35", pp(kb, "Coll", *lit.args))
    return ch


@rule("A34", "axiom", "the plural order projects onto spatial inclusion")
def a34(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Leq"):
        x, y = lit.args
        ch |= kb.add("P", (kb.touch(sref(x)), kb.touch(sref(y))), ENT, "A34",
                     pp(kb, "Leq", x, y))
    return ch


@rule("A35", "axiom", "a collector is atomic and collects a plural")
def a35(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Is-coll"):
        x, y = lit.args
        prem = pp(kb, "Is-coll", x, y)
        ch |= kb.add("At", (x,), ENT, "A35", prem)
        ch |= kb.add("At", (y,), REF, "A35", prem)
    return ch


@rule("A36", "axiom", "a collection shares its plural's spatial referent")
def a36(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Is-coll"):
        x, y = lit.args
        ch |= kb.merge(sref(x), sref(y), "A36", pp(kb, "Is-coll", x, y))
    return ch


@rule("A37", "integrity", "one plural per collection")
def a37(kb: KB) -> bool:
    ch = False
    seen = {c.detail for c in kb.conflicts}
    by_x: dict[Term, list[Lit]] = {}
    for lit in lits(kb, "Is-coll"):
        by_x.setdefault(lit.args[0], []).append(lit)
    for x, group in by_x.items():
        plurals = sorted({l.args[1] for l in group}, key=term_key)
        if len(plurals) > 1:
            msg = (f"{render(x)} collects two distinct plurals: "
                   + ", ".join(render(p) for p in plurals))
            if msg not in seen:
                prem = tuple(q for l in group for q in pp(kb, "Is-coll", *l.args))
                kb.conflicts.append(Conflict("A37", msg, prem))
                seen.add(msg)
                ch = True
    return ch


@rule("A38", "axiom", "a quantity is matter, of a substance, spatially inside it")
def a38(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Q"):
        x, y = lit.args
        prem = pp(kb, "Q", x, y)
        ch |= kb.add("Mat", (x,), ENT, "A38", prem)
        ch |= kb.add("Subst", (y,), ENT, "A38", prem)
        ch |= kb.add("P", (kb.touch(sref(x)), kb.touch(sref(y))), ENT, "A38",
                     prem)
    return ch


@rule("A39", "integrity", "one substance per quantity")
def a39(kb: KB) -> bool:
    ch = False
    seen = {c.detail for c in kb.conflicts}
    by_x: dict[Term, list[Lit]] = {}
    for lit in lits(kb, "Q"):
        by_x.setdefault(lit.args[0], []).append(lit)
    for x, group in by_x.items():
        subs = sorted({l.args[1] for l in group}, key=term_key)
        if len(subs) > 1:
            msg = (f"{render(x)} is a quantity of two distinct substances: "
                   + ", ".join(render(s) for s in subs))
            if msg not in seen:
                prem = tuple(q for l in group for q in pp(kb, "Q", *l.args))
                kb.conflicts.append(Conflict("A39", msg, prem))
                seen.add(msg)
                ch = True
    return ch


@rule("A41", "axiom", "co-located same-substance simples are one entity", phase="post")
def a41(kb: KB) -> bool:
    ch = False
    qlits = lits(kb, "Q")
    for i, l1 in enumerate(qlits):
        x, s1 = l1.args
        for l2 in qlits[i + 1:]:
            y, s2 = l2.args
            if s1 != s2 or x == y:
                continue
            if not kb.equal(sref(x), sref(y)):
                continue
            if _provably_non_coll(kb, x) and _provably_non_coll(kb, y):
                prem = (pp(kb, "Q", x, s1) + pp(kb, "Q", y, s2)
                        + pp(kb, "=s", sref(x), sref(y)))
                ch |= kb.merge(x, y, "A41", prem)
    return ch


def _provably_non_coll(kb: KB, e: Term) -> bool:
    """Closed-world non-collection check used by the A41 merge."""
    if st(kb, "Coll", e) is REF:
        return True
    if st(kb, "Coll", e) is ENT:
        return False
    return (st(kb, "At", e) is ENT
            and not any(l.args[0] == e for l in kb.lits("Is-coll")))


@rule("A42", "integrity", "space portions depend on a material entity", phase="post")
def a42(kb: KB) -> bool:
    ch = False
    seen = {c.detail for c in kb.conflicts}
    deps: dict[Term, list[Lit]] = {}
    for lit in lits(kb, "Depend"):
        deps.setdefault(lit.args[0], []).append(lit)
    for lit in lits(kb, "Sp-port"):
        x = lit.args[0]
        ok = any(any_class(kb, d.args[1], "Obj", "Mat", "Loc")
                 for d in deps.get(x, ()))
        if not ok:
            msg = f"space portion {render(x)} has no material Depend target"
            if msg not in seen:
                kb.conflicts.append(Conflict("A42", msg, pp(kb, "Sp-port", x)))
                seen.add(msg)
                ch = True
    return ch


@rule("A43", "integrity", "the five essential classes are exclusive and exhaustive on atoms",
      phase="post")
def a43(kb: KB) -> bool:
    from .kb import CLASSES
    ch = False
    seen = {c.detail for c in kb.conflicts}
    for e in list(kb.entities):
        have = [c for c in CLASSES if st(kb, c, e) is ENT]
        if len(have) > 1:
            msg = f"{render(e)} carries two classes: {', '.join(have)}"
            if msg not in seen:
                prem = tuple(q for c in have for q in pp(kb, c, e))
                kb.conflicts.append(Conflict("A43", msg, prem))
                seen.add(msg)
                ch = True
        if st(kb, "At", e) is ENT and all(st(kb, c, e) is REF for c in CLASSES):
            msg = f"atomic {render(e)} is refused every class"
            if msg not in seen:
                kb.conflicts.append(Conflict("A43", msg, pp(kb, "At", e)))
                seen.add(msg)
                ch = True
    return ch


# ----------------------------------------------------------------------
# meronymy

MERONYMY_KINDS = ("Member", "Subcoll", "Portion", "Subst-Wh", "Component", "Piece")


@rule("D36.fwd", "definition", "each of the six part-whole kinds is a part")
def d36_fwd(kb: KB) -> bool:
    ch = False
    for kind in MERONYMY_KINDS:
        for lit in lits(kb, kind):
            ch |= kb.add("Part", lit.args, ENT, "D36", pp(kb, kind, *lit.args))
    return ch


@rule("D36.bwd", "definition", "a bare part is one of the six kinds (recorded)")
def d36_bwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Part"):
        if any(st(kb, kind, *lit.args) is ENT for kind in MERONYMY_KINDS):
            continue
        ch |= kb.disjoin("D36", [(Lit(kind, lit.args), ENT)
                                 for kind in MERONYMY_KINDS],
                         pp(kb, "Part", *lit.args))
    return ch


@rule("T-PART-P", "theorem", "every part-whole fact includes the referents spatially")
def t_part_p(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Part"):
        x, y = lit.args
        ch |= kb.add("P", (kb.touch(sref(x)), kb.touch(sref(y))), ENT,
                     "T-PART-P", pp(kb, "Part", x, y))
    return ch


@rule("T-PIECE-CON", "theorem", "pieces are connected")
def t_piece_con(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Piece"):
        ch |= kb.add("Con", (kb.touch(sref(lit.args[0])),), ENT,
                     "T-PIECE-CON", pp(kb, "Piece", *lit.args))
    return ch


@rule("MER-MEMBER", "definition", "an atom below a plural is a member")
def mer_member(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Leq"):
        x, y = lit.args
        if x == y:
            continue
        if st(kb, "At", x) is ENT and st(kb, "At", y) is REF:
            ch |= kb.add("Member", (x, y), ENT, "MER-MEMBER",
                         pp(kb, "Leq", x, y) + pp(kb, "At", x)
                         + pp(kb, "At", y))
    return ch


@rule("MER-SUBCOLL", "definition", "a plural below a plural is a subcollection")
def mer_subcoll(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Leq"):
        x, y = lit.args
        if x == y:
            continue
        if st(kb, "At", x) is REF and st(kb, "At", y) is REF:
            ch |= kb.add("Subcoll", (x, y), ENT, "MER-SUBCOLL",
                         pp(kb, "Leq", x, y) + pp(kb, "At", x)
                         + pp(kb, "At", y))
    return ch


@rule("MER-PORTION", "definition", "a smaller quantity of the same substance is a portion")
def mer_portion(kb: KB) -> bool:
    ch = False
    qlits = lits(kb, "Q")
    for l1 in qlits:
        x, s = l1.args
        for l2 in qlits:
            y = l2.args[0]
            if l2.args[1] != s or x == y:
                continue
            if st(kb, "P", sref(x), sref(y)) is ENT:
                ch |= kb.add("Portion", (x, y), ENT, "MER-PORTION",
                             pp(kb, "Q", x, s) + pp(kb, "Q", y, s)
                             + pp(kb, "P", sref(x), sref(y)))
    return ch


@rule("MER-SUBSTWH", "definition", "a quantity inside a whole relates its substance to the whole")
def mer_substwh(kb: KB) -> bool:
    ch = False
    for ql in lits(kb, "Q"):
        z, x = ql.args
        for plit in lits(kb, "Part"):
            if plit.args[0] == z:
                y = plit.args[1]
                ch |= kb.add("Subst-Wh", (x, y), ENT, "MER-SUBSTWH",
                             pp(kb, "Q", z, x) + pp(kb, "Part", z, y))
    return ch


#: filled by meronymy.load_composition_table()
COMPOSITION_TABLE: dict[tuple[str, str], str] = {}


@rule("MER-COMP", "definition", "part-whole kinds compose per the configured table")
def mer_comp(kb: KB) -> bool:
    if not COMPOSITION_TABLE:
        from .meronymy import load_composition_table
        COMPOSITION_TABLE.update(load_composition_table())
    ch = False
    for (k1, k2), k3 in COMPOSITION_TABLE.items():
        by_lo: dict[Term, list[Lit]] = {}
        for lit in lits(kb, k2):
            by_lo.setdefault(lit.args[0], []).append(lit)
        for lit in lits(kb, k1):
            x, y = lit.args
            for nxt in by_lo.get(y, ()):
                z = nxt.args[1]
                if x == z:
                    continue
                ch |= kb.add(k3, (x, z), ENT, "MER-COMP",
                             pp(kb, k1, x, y) + pp(kb, k2, y, z))
    return ch


# ----------------------------------------------------------------------
# intrinsic orientation

@rule("A44.fwd", "axiom", "paired extremities of declared parts generate a direction")
def a44_fwd(kb: KB) -> bool:
    ch = False
    for el in lits(kb, "Exts"):
        sy, sz, sx, d = el.args
        for py in lits(kb, "Part"):
            if kb.canon(sref(py.args[0])) != sy:
                continue
            x = py.args[1]
            if kb.canon(sref(x)) != sx:
                continue
            y = py.args[0]
            for pz in lits(kb, "Part"):
                if pz.args[1] != x or kb.canon(sref(pz.args[0])) != sz:
                    continue
                z = pz.args[0]
                ch |= kb.add("dir-ext", (y, z, x, d), ENT, "A44",
                             pp(kb, "Part", y, x) + pp(kb, "Part", z, x)
                             + pp(kb, "Exts", sy, sz, sx, d))
    return ch


@rule("A44.bwd", "axiom", "a generated direction unfolds to parts and extremities")
def a44_bwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "dir-ext"):
        y, z, x, d = lit.args
        prem = pp(kb, "dir-ext", y, z, x, d)
        ch |= kb.add("Part", (y, x), ENT, "A44", prem)
        ch |= kb.add("Part", (z, x), ENT, "A44", prem)
        ch |= kb.add("Exts", (kb.touch(sref(y)), kb.touch(sref(z)),
                              kb.touch(sref(x)), d), ENT, "A44", prem)
    return ch


@rule("A44.fun", "axiom", "extremity pairs generate at most one direction")
def a44_fun(kb: KB) -> bool:
    ch = False
    by_key: dict[tuple[Term, Term, Term], list[Lit]] = {}
    for lit in lits(kb, "dir-ext"):
        by_key.setdefault(lit.args[:3], []).append(lit)
    for key, group in by_key.items():
        dirs = sorted({l.args[3] for l in group}, key=term_key)
        for d2 in dirs[1:]:
            prem = tuple(q for l in group for q in pp(kb, "dir-ext", *l.args))
            ch |= kb.merge(dirs[0], d2, "A44", prem)
    return ch


@rule("D37.fwd", "definition", "an upward extremity direction orients the entity up")
def d37_fwd(kb: KB) -> bool:
    ch = False
    up = kb.canon(UP)
    for lit in lits(kb, "dir-ext"):
        y, z, x, d = lit.args
        if d != up or st(kb, "Can-Use", x) is not ENT:
            continue
        ch |= kb.add("Orient-haut", (d, x), ENT, "D37",
                     pp(kb, "dir-ext", y, z, x, d) + pp(kb, "Can-Use", x))
    return ch


@rule("D38.fwd", "definition", "a downward extremity direction orients the entity down")
def d38_fwd(kb: KB) -> bool:
    ch = False
    down = kb.canon(opp(UP))
    for lit in lits(kb, "dir-ext"):
        y, z, x, d = lit.args
        if d != down or st(kb, "Can-Use", x) is not ENT:
            continue
        ch |= kb.add("Orient-bas", (d, x), ENT, "D38",
                     pp(kb, "dir-ext", y, z, x, d) + pp(kb, "Can-Use", x))
    return ch


note("D37.dft", "default", "in canonical use the generated direction is assumed gravitational-up")
note("D38.dft", "default", "in canonical use the generated direction is assumed gravitational-down")


@rule("D40", "definition", "general orientation makes a generated direction frontal (kind 1)")
def d40(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "dir-ext"):
        y, z, x, d = lit.args
        if st(kb, "Orient-gen", x, d) is ENT:
            ch |= kb.add("Orient-avant1", (d, x), ENT, "D40",
                         pp(kb, "dir-ext", y, z, x, d)
                         + pp(kb, "Orient-gen", x, d))
    return ch


@rule("D41", "definition", "tandem frontal orientation from canonical users (domain closure)",
      phase="post")
def d41(kb: KB) -> bool:
    return _tandem(kb, mirror=False)


@rule("D42", "definition", "mirror frontal orientation from canonical users (domain closure)",
      phase="post")
def d42(kb: KB) -> bool:
    return _tandem(kb, mirror=True)


def _tandem(kb: KB, mirror: bool) -> bool:
    ch = False
    users: dict[Term, list[Lit]] = {}
    for lit in lits(kb, "Utilise"):
        users.setdefault(lit.args[0], []).append(lit)
    fronts: dict[Term, list[Lit]] = {}
    for lit in lits(kb, "Orient-avant1"):
        fronts.setdefault(lit.args[1], []).append(lit)
    for lit in lits(kb, "dir-ext"):
        y, z, x, d = lit.args
        if st(kb, "Can-Use", x) is not ENT or x not in users:
            continue
        want = kb.canon(opp(d)) if mirror else d
        prem = pp(kb, "dir-ext", y, z, x, d) + pp(kb, "Can-Use", x)
        matched = 0
        ok = True
        for ul in users[x]:
            u = ul.args[1]
            for fl in fronts.get(u, ()):
                if fl.args[0] != want:
                    ok = False
                    break
                matched += 1
                prem += pp(kb, "Utilise", x, u) + pp(kb, "Orient-avant1",
                                                     *fl.args)
            if not ok:
                break
        if ok and matched:
            rel = "Orient-avant3" if mirror else "Orient-avant2"
            ch |= kb.add(rel, (d, x), ENT, "D42" if mirror else "D41", prem)
    return ch


@rule("D43.fwd", "definition", "any of the three frontal kinds is a frontal orientation")
def d43_fwd(kb: KB) -> bool:
    ch = False
    for rel in ("Orient-avant1", "Orient-avant2", "Orient-avant3"):
        for lit in lits(kb, rel):
            ch |= kb.add("Orient-avant", lit.args, ENT, "D43",
                         pp(kb, rel, *lit.args))
    return ch


@rule("D43.bwd", "definition", "a frontal orientation is one of three kinds (recorded)")
def d43_bwd(kb: KB) -> bool:
    ch = False
    kinds = ("Orient-avant1", "Orient-avant2", "Orient-avant3")
    for lit in lits(kb, "Orient-avant"):
        if any(st(kb, k, *lit.args) is ENT for k in kinds):
            continue
        ch |= kb.disjoin("D43", [(Lit(k, lit.args), ENT) for k in kinds],
                         pp(kb, "Orient-avant", *lit.args))
    for lit in lits(kb, "Orient-avant", REF):
        for k in kinds:
            ch |= kb.add(k, lit.args, REF, "D43",
                         pp(kb, "Orient-avant", *lit.args))
    return ch


@rule("A45", "axiom", "front and back are opposite orientations")
def a45(kb: KB) -> bool:
    ch = False
    for status in (ENT, REF):
        for lit in lits(kb, "Orient-avant", status):
            d, x = lit.args
            ch |= kb.add("Orient-arriere", (kb.touch(opp(d)), x), status,
                         "A45", pp(kb, "Orient-avant", d, x))
        for lit in lits(kb, "Orient-arriere", status):
            d, x = lit.args
            ch |= kb.add("Orient-avant", (kb.touch(opp(d)), x), status,
                         "A45", pp(kb, "Orient-arriere", d, x))
    return ch


# ----------------------------------------------------------------------
# devant / derrière

def _entity_pairs_with_cells(kb: KB) -> Iterator[tuple[Term, Term, Term]]:
    """(entity-y, entity-x, direction) combos with a stored projection cell."""
    srefs = {kb.canon(sref(e)): e for e in list(kb.entities)}
    for a, b, d, _ in kb.allen_pairs():
        ya, xb = srefs.get(a), srefs.get(b)
        if ya is None or xb is None:
            continue
        for (y, x) in ((ya, xb), (xb, ya)):
            for axis in (d, kb.canon(opp(d))):
                yield y, x, axis


@rule("D44.fwd", "definition", "projection wholly beyond the site puts the target in its space")
def d44_fwd(kb: KB) -> bool:
    ch = False
    seen: set[tuple[Term, Term, Term]] = set()
    for y, x, d in list(_entity_pairs_with_cells(kb)):
        if (y, x, d) in seen:
            continue
        seen.add((y, x, d))
        if st(kb, "Complex-Shape", x) is ENT:
            continue
        rels = kb.allen_get(sref(y), sref(x), d)
        if rels and rels <= AFTER:
            ch |= kb.add("In-sp", (y, x, d), ENT, "D44")
        elif not (rels & AFTER):
            ch |= kb.add("In-sp", (y, x, d), REF, "D44")
    return ch


@rule("D44.bwd", "definition", "being in the site's directional space constrains the projection")
def d44_bwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "In-sp"):
        y, x, d = lit.args
        ch |= kb.allen_refine(kb.touch(sref(y)), kb.touch(sref(x)), d, AFTER,
                              "D44", pp(kb, "In-sp", y, x, d))
    return ch


@rule("D45.fwd", "definition", "front orientation plus directional space means in front (intrinsic)")
def d45_fwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "In-sp"):
        y, x, d = lit.args
        if st(kb, "Orient-avant", d, x) is ENT:
            ch |= kb.add("Etre-devant-i", (y, x, d), ENT, "D45",
                         pp(kb, "Orient-avant", d, x) + pp(kb, "In-sp", y, x, d))
    return ch


@rule("D45.bwd", "definition", "unfolding intrinsic in-front")
def d45_bwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Etre-devant-i"):
        y, x, d = lit.args
        prem = pp(kb, "Etre-devant-i", y, x, d)
        ch |= kb.add("Orient-avant", (d, x), ENT, "D45", prem)
        ch |= kb.add("In-sp", (y, x, d), ENT, "D45", prem)
    for lit in lits(kb, "In-sp", REF):
        y, x, d = lit.args
        ch |= kb.add("Etre-devant-i", (y, x, d), REF, "D45",
                     pp(kb, "In-sp", y, x, d))
    for lit in lits(kb, "Orient-avant", REF):
        d, x = lit.args
        for il in lits(kb, "In-sp"):
            if il.args[1] == x and il.args[2] == d:
                ch |= kb.add("Etre-devant-i", (il.args[0], x, d), REF, "D45",
                             pp(kb, "Orient-avant", d, x))
    return ch


@rule("D46", "definition", "deictic in-front via a mirror-facing speaker")
def d46(kb: KB) -> bool:
    ch = False
    speakers = [l.args[0] for l in lits(kb, "Speaker")]
    if not speakers:
        return False
    for lit in lits(kb, "In-sp"):
        y, x, d = lit.args
        od = kb.canon(opp(d))
        for s in speakers:
            if s == x or s == y:
                continue
            if st(kb, "Orient-avant", od, s) is not ENT:
                continue
            if st(kb, "Etre-devant-i", x, s, od) is not ENT:
                continue
            ch |= kb.add("Etre-devant-d", (y, x, d), ENT, "D46",
                         pp(kb, "Orient-avant", od, s) + pp(kb, "Speaker", s)
                         + pp(kb, "In-sp", y, x, d)
                         + pp(kb, "Etre-devant-i", x, s, od))
    return ch


@rule("D45r", "reconstruction", "behind (intrinsic): back orientation plus directional space")
def d45r(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "In-sp"):
        y, x, d = lit.args
        if st(kb, "Orient-arriere", d, x) is ENT:
            ch |= kb.add("Etre-derriere-i", (y, x, d), ENT, "D45r",
                         pp(kb, "Orient-arriere", d, x)
                         + pp(kb, "In-sp", y, x, d))
    for lit in lits(kb, "Etre-derriere-i"):
        y, x, d = lit.args
        prem = pp(kb, "Etre-derriere-i", y, x, d)
        ch |= kb.add("Orient-arriere", (d, x), ENT, "D45r", prem)
        ch |= kb.add("In-sp", (y, x, d), ENT, "D45r", prem)
    for lit in lits(kb, "In-sp", REF):
        y, x, d = lit.args
        ch |= kb.add("Etre-derriere-i", (y, x, d), REF, "D45r",
                     pp(kb, "In-sp", y, x, d))
    return ch


@rule("D46r", "reconstruction", "deictic behind: beyond the site the speaker faces")
def d46r(kb: KB) -> bool:
    ch = False
    speakers = [l.args[0] for l in lits(kb, "Speaker")]
    if not speakers:
        return False
    for lit in lits(kb, "In-sp"):
        y, x, d = lit.args
        for s in speakers:
            if s == x or s == y:
                continue
            if st(kb, "Orient-avant", d, s) is not ENT:
                continue
            if st(kb, "Etre-devant-i", x, s, d) is not ENT:
                continue
            ch |= kb.add("Etre-derriere-d", (y, x, d), ENT, "D46r",
                         pp(kb, "Orient-avant", d, s) + pp(kb, "Speaker", s)
                         + pp(kb, "In-sp", y, x, d)
                         + pp(kb, "Etre-devant-i", x, s, d))
    return ch


# ----------------------------------------------------------------------
# support

@rule("ZC.bwd", "definition", "a contact zone sits on the envelope, weakly touching the other body")
def zc_bwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Zonecont"):
        z, x, y = lit.args
        prem = pp(kb, "Zonecont", z, x, y)
        ch |= kb.add("P", (z, kb.touch(ienv(x))), ENT, "ZC", prem)
        ch |= kb.add("WCont", (z, y), ENT, "ZC", prem)
    return ch


@rule("PH", "reconstruction", "higher-than: projection beyond along the vertical")
def ph(kb: KB) -> bool:
    ch = False
    up = kb.canon(UP)
    pairs: set[tuple[Term, Term]] = set()
    for a, b, d, _ in kb.allen_pairs():
        if d == up or kb.canon(opp(d)) == up:
            pairs.add((a, b))
            pairs.add((b, a))
    for (a, b) in sorted(pairs, key=lambda p: (term_key(p[0]), term_key(p[1]))):
        rels = kb.allen_get(a, b, up)
        if rels and rels <= AFTER:
            ch |= kb.add("Plus_haut", (a, b), ENT, "PH")
        elif not (rels & AFTER):
            ch |= kb.add("Plus_haut", (a, b), REF, "PH")
        if rels and rels <= LEVEL:
            ch |= kb.add("Same-level", (a, b), ENT, "SL")
        elif not (rels & LEVEL):
            ch |= kb.add("Same-level", (a, b), REF, "SL")
    return ch


@rule("PH.bwd", "reconstruction", "higher-than constrains the vertical projection")
def ph_bwd(kb: KB) -> bool:
    ch = False
    up = UP
    for lit in lits(kb, "Plus_haut"):
        ch |= kb.allen_refine(lit.args[0], lit.args[1], up, AFTER, "PH",
                              pp(kb, "Plus_haut", *lit.args))
    for lit in lits(kb, "Same-level"):
        ch |= kb.allen_refine(lit.args[0], lit.args[1], up, LEVEL, "SL",
                              pp(kb, "Same-level", *lit.args))
    return ch


def _cont_kind_rule(rel: str, rid: str, zone_rel: str, swap: bool):
    def fn(kb: KB) -> bool:
        ch = False
        zc: dict[tuple[Term, Term], list[Lit]] = {}
        for lit in lits(kb, "Zonecont"):
            zc.setdefault((lit.args[1], lit.args[2]), []).append(lit)
        for lit in lits(kb, "Cont"):
            x, y = lit.args
            for z1l in zc.get((x, y), ()):
                for z2l in zc.get((y, x), ()):
                    z1, z2 = z1l.args[0], z2l.args[0]
                    a, b = (z2, z1) if swap else (z1, z2)
                    if st(kb, zone_rel, a, b) is ENT:
                        ch |= kb.add(rel, (x, y), ENT, rid,
                                     pp(kb, "Cont", x, y)
                                     + pp(kb, "Zonecont", *z1l.args)
                                     + pp(kb, "Zonecont", *z2l.args)
                                     + pp(kb, zone_rel, a, b))
        for lit in lits(kb, rel):
            ch |= kb.add("Cont", lit.args, ENT, rid, pp(kb, rel, *lit.args))
        for lit in lits(kb, "Cont", REF):
            ch |= kb.add(rel, lit.args, REF, rid, pp(kb, "Cont", *lit.args))
        return ch
    return fn


rule("D47", "definition", "support contact: the target's zone is higher")(
    _cont_kind_rule("Cont1", "D47", "Plus_haut", swap=False))
rule("D47b", "reconstruction", "level contact: the zones share the vertical span")(
    _cont_kind_rule("Cont2", "D47b", "Same-level", swap=False))
rule("D47c", "reconstruction", "under-side contact: the site's zone is higher")(
    _cont_kind_rule("Cont3", "D47c", "Plus_haut", swap=True))


@rule("A46", "axiom", "stabilization is transitive")
def a46(kb: KB) -> bool:
    ch = False
    by_lo: dict[Term, list[Lit]] = {}
    for lit in lits(kb, "Stabilise"):
        by_lo.setdefault(lit.args[0], []).append(lit)
    for lit in lits(kb, "Stabilise"):
        x, y = lit.args
        for nxt in by_lo.get(y, ()):
            z = nxt.args[1]
            if z != x:
                ch |= kb.add("Stabilise", (x, z), ENT, "A46",
                             pp(kb, "Stabilise", x, y)
                             + pp(kb, "Stabilise", *nxt.args))
    return ch


@rule("A48", "axiom", "a stabilizing part lifts to its whole")
def a48(kb: KB) -> bool:
    ch = False
    for sl in lits(kb, "Stabilise"):
        z, x = sl.args
        for plit in lits(kb, "Part"):
            if plit.args[0] != z:
                continue
            y = plit.args[1]
            if st(kb, "Part", x, y) is REF:
                ch |= kb.add("Stabilise", (y, x), ENT, "A48",
                             pp(kb, "Part", z, y) + pp(kb, "Part", x, y)
                             + pp(kb, "Stabilise", z, x))
    return ch


@rule("A47", "integrity",
      "a non-intrinsic stabilizer needs a contacting supporter (complete scenes only)",
      phase="post")
def a47(kb: KB) -> bool:
    if "complete-support" not in kb.pragmas:
        return False
    ch = False
    seen = {c.detail for c in kb.conflicts}
    for lit in lits(kb, "Intrinsic-Stab", REF):
        x = lit.args[0]
        ok = False
        for sl in lits(kb, "Stabilise"):
            y = sl.args[0]
            if sl.args[1] != x or y == x:
                continue
            if st(kb, "Cont", sref(y), sref(x)) is ENT:
                ok = True
                break
        if not ok:
            msg = f"{render(x)} is not intrinsically stable and nothing in contact stabilizes it"
            if msg not in seen:
                kb.conflicts.append(Conflict(
                    "A47", msg, pp(kb, "Intrinsic-Stab", x)))
                seen.add(msg)
                ch = True
    return ch


def _side_supporters(kb: KB, x: Term, y: Term) -> list[tuple[Term, tuple[int, ...]]]:
    """Entities z in contact with x, stabilizing x, provably clear of y."""
    out = []
    for sl in lits(kb, "Stabilise"):
        z = sl.args[0]
        if sl.args[1] != x or z == y:
            continue
        if st(kb, "Cont", sref(z), sref(x)) is not ENT:
            continue
        if st(kb, "O", sref(z), sref(y)) is not REF:
            continue
        prem = (pp(kb, "Stabilise", z, x) + pp(kb, "Cont", sref(z), sref(x))
                + pp(kb, "O", sref(z), sref(y)))
        out.append((z, prem))
    return out


@rule("D48.lfp", "definition", "total stabilization as the least fixpoint over side supporters",
      phase="post")
def d48_lfp(kb: KB) -> bool:
    ch = False
    cand = [(l.args[0], l.args[1]) for l in lits(kb, "Stabilise")]
    total: set[tuple[Term, Term]] = {
        (l.args[0], l.args[1]) for l in lits(kb, "Stab_tot")}
    grown = True
    while grown:
        grown = False
        for (y, x) in cand:
            if (y, x) in total:
                continue
            prem = pp(kb, "Stabilise", y, x)
            ok = True
            for z, zprem in _side_supporters(kb, x, y):
                if (y, z) in total:
                    prem += zprem + pp(kb, "Stab_tot", y, z)
                else:
                    ok = False
                    break
            if ok:
                total.add((y, x))
                ch |= kb.add("Stab_tot", (y, x), ENT, "D48", prem)
                grown = True
    return ch


@rule("D48.bwd", "definition", "unfolding total stabilization")
def d48_bwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Stab_tot"):
        y, x = lit.args
        prem = pp(kb, "Stab_tot", y, x)
        ch |= kb.add("Stabilise", (y, x), ENT, "D48", prem)
        for z, zprem in _side_supporters(kb, x, y):
            ch |= kb.add("Stab_tot", (y, z), ENT, "D48", prem + zprem)
    return ch


@rule("D48.neg", "definition", "total stabilization fails with its conjuncts")
def d48_neg(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Stabilise", REF):
        ch |= kb.add("Stab_tot", lit.args, REF, "D48",
                     pp(kb, "Stabilise", *lit.args))
    for lit in lits(kb, "Stab_tot", REF):
        y, z = lit.args
        for sl in lits(kb, "Stabilise"):
            if sl.args[0] != z:
                continue
            x = sl.args[1]
            for z2, zprem in _side_supporters(kb, x, y):
                if z2 == z:
                    ch |= kb.add("Stab_tot", (y, x), REF, "D48",
                                 pp(kb, "Stab_tot", y, z) + zprem)
    return ch


def _sur_rule(k: int):
    rel, cat, cont = f"Sur{k}", f"Catcomp{k}", f"Cont{k}"
    stab = "Stabilise" if k == 1 else "Stab_tot"
    rid = f"D{48 + k}"

    def fn(kb: KB) -> bool:
        ch = False
        for lit in lits(kb, cat):
            x, y = lit.args
            sx, sy = kb.touch(sref(x)), kb.touch(sref(y))
            if st(kb, cont, sx, sy) is ENT and st(kb, stab, y, x) is ENT:
                ch |= kb.add(rel, (x, y), ENT, rid,
                             pp(kb, cat, x, y) + pp(kb, cont, sx, sy)
                             + pp(kb, stab, y, x))
        for lit in lits(kb, rel):
            x, y = lit.args
            prem = pp(kb, rel, x, y)
            ch |= kb.add(cat, (x, y), ENT, rid, prem)
            ch |= kb.add(cont, (kb.touch(sref(x)), kb.touch(sref(y))), ENT,
                         rid, prem)
            ch |= kb.add(stab, (y, x), ENT, rid, prem)
        # refute from any refuted conjunct
        for lit in lits(kb, cat, REF):
            ch |= kb.add(rel, lit.args, REF, rid, pp(kb, cat, *lit.args))
        for lit in lits(kb, stab, REF):
            y, x = lit.args
            ch |= kb.add(rel, (x, y), REF, rid, pp(kb, stab, y, x))
        srefs = {kb.canon(sref(e)): e for e in list(kb.entities)}
        for lit in lits(kb, cont, REF):
            ex, ey = srefs.get(lit.args[0]), srefs.get(lit.args[1])
            if ex is not None and ey is not None:
                ch |= kb.add(rel, (ex, ey), REF, rid, pp(kb, cont, *lit.args))
        return ch
    return fn


rule("D49", "definition", "on-top support: comparable, higher contact, stabilized")(_sur_rule(1))
rule("D50", "definition", "level support: comparable, level contact, totally stabilized")(_sur_rule(2))
rule("D51", "definition", "under-side support: comparable, lower contact, totally stabilized")(_sur_rule(3))


# ----------------------------------------------------------------------
# interiors and containment

@rule("A49.geo", "axiom", "interiors: intermediate contact, mode-specific geometry")
def a49_geo(kb: KB) -> bool:
    ch = False
    for it in interior_entities(kb):
        owner = kb.canon(it.owner)
        info = kb.info(it)
        so, si_ = kb.touch(sref(owner)), kb.touch(sref(it))
        ch |= kb.add("ICont", (so, si_), ENT, "A49")
        mode = info.interior_mode if info is not None else None
        if mode in ("concavity", "outline", "ring"):
            ch |= kb.add("P", (kb.touch(iint(si_)), kb.touch(ipreint(so))),
                         ENT, "A49")
        if mode == "outline":
            ch |= kb.merge(si_, ioutline(so), "A49")
        elif mode == "ring":
            ch |= kb.add("Con-Comp", (si_, kb.touch(icompl(so))), ENT, "A49")
    return ch


@rule("A50", "axiom", "a part's interior sits inside the whole's interior plus the remainder")
def a50(kb: KB) -> bool:
    ch = False
    ints = {kb.canon(t.owner): t for t in interior_entities(kb)}
    rests = [t for t in list(kb.entities) if isinstance(t, RestEnt)]
    for lit in lits(kb, "Part"):
        x, y = lit.args
        t, u = ints.get(x), ints.get(y)
        if t is None or u is None:
            continue
        for r in rests:
            if kb.canon(r.whole) == y and kb.canon(r.part) == x:
                ch |= kb.add("P", (kb.touch(sref(t)),
                                   kb.touch(isum(sref(u), sref(r)))),
                             ENT, "A50", pp(kb, "Part", x, y))
    return ch


@rule("A51", "axiom",
      "an interior reaching into another interior sits inside it up to the owner")
def a51(kb: KB) -> bool:
    ch = False
    ints = {kb.canon(t.owner): t for t in interior_entities(kb)}
    for x, t in ints.items():
        ix = kb.touch(iint(sref(x)))
        for y, u in ints.items():
            if x == y:
                continue
            su = kb.touch(sref(u))
            if st(kb, "P", ix, su) is ENT:
                ch |= kb.add("P", (kb.touch(sref(t)),
                                   kb.touch(isum(su, sref(y)))),
                             ENT, "A51", pp(kb, "P", ix, su))
    return ch


@rule("X-LIEU-SEP", "axiom",
      "postulate: spatial referents of places are separate from those of other entities")
def x_lieu_sep(kb: KB) -> bool:
    if "no-lieu-separation" in kb.pragmas:
        return False
    ch = False
    locs = [l.args[0] for l in lits(kb, "Loc")]
    for w in locs:
        for e in list(kb.entities):
            if st(kb, "Loc", e) is REF:
                ch |= kb.add("O", (kb.touch(sref(e)), kb.touch(sref(w))), REF,
                             "X-LIEU-SEP", pp(kb, "Loc", w) + pp(kb, "Loc", e))
    return ch


def _interior_term(kb: KB, y: Term) -> Term | None:
    """The interior entity of y if y supports one (registers it)."""
    try:
        return kb.ensure_interior(y)
    except Exception:
        return None


@rule("D52.fwd", "definition", "total containment, by class-keyed clause")
def d52_fwd(kb: KB) -> bool:
    ch = False
    ints = {kb.canon(t.owner): t for t in interior_entities(kb)}
    ents = list(kb.entities)
    # clauses 1 and 2: scan P+ facts whose left side is an interior of a sref
    for lit in lits(kb, "P"):
        lhs, rhs = lit.args
        if not (isinstance(lhs, Interior) and isinstance(lhs.arg, Sref)):
            continue
        x = kb.canon(lhs.arg.entity)
        if x not in kb.entities:
            continue
        prem = pp(kb, "P", lhs, rhs)
        if isinstance(rhs, Sref):
            owner = kb.canon(rhs.entity)
            if isinstance(owner, IntEnt):
                y = kb.canon(owner.owner)
                if any_class(kb, x, "Obj", "Mat") \
                        and any_class(kb, y, "Obj", "Mat", "Loc"):
                    ch |= kb.add("TDs", (x, y), ENT, "D52",
                                 prem + class_premises(kb, x, "Obj", "Mat")
                                 + class_premises(kb, y, "Obj", "Mat", "Loc"))
            if st(kb, "Sp-port", owner) is ENT \
                    and any_class(kb, x, "Obj", "Sp-port"):
                ch |= kb.add("TDs", (x, owner), ENT, "D52",
                             prem + class_premises(kb, x, "Obj", "Sp-port")
                             + pp(kb, "Sp-port", owner))
    # clause 3: a space portion that is (a piece of) the site's interior
    for lit in lits(kb, "Piece"):
        x, w = lit.args
        if not isinstance(w, IntEnt):
            continue
        y = kb.canon(w.owner)
        if st(kb, "Sp-port", x) is ENT and any_class(kb, y, "Obj", "Mat"):
            ch |= kb.add("TDs", (x, y), ENT, "D52",
                         pp(kb, "Piece", x, w) + pp(kb, "Sp-port", x)
                         + class_premises(kb, y, "Obj", "Mat"))
    for it in interior_entities(kb):
        y = kb.canon(it.owner)
        if st(kb, "Sp-port", it) is ENT and any_class(kb, y, "Obj", "Mat"):
            ch |= kb.add("TDs", (it, y), ENT, "D52")
    # clause 4: place-in-place enclaves (domain closure over entities)
    ch |= _d52_enclave(kb, ents)
    return ch


def _d52_enclave(kb: KB, ents: list[Term]) -> bool:
    ch = False
    grounds = [l.args[0] for l in lits(kb, "Ground")]
    if not grounds:
        return False
    g = grounds[0]
    locs = [e for e in ents if st(kb, "Loc", e) is ENT]
    for x in locs:
        try:
            ring = kb.touch(iclos(iinter_safe(kb, sref(g), icompl(sref(x)))))
        except TermError:
            continue
        for y in locs:
            if y == x:
                continue
            ok = True
            prem: tuple[int, ...] = pp(kb, "Loc", x) + pp(kb, "Loc", y)
            for z in ents:
                s_ec = st(kb, "EC", sref(z), ring)
                if s_ec is UNK:
                    ok = False
                    break
                if s_ec is ENT:
                    if st(kb, "EC", sref(z), sref(y)) is not ENT:
                        ok = False
                        break
                    prem += (pp(kb, "EC", sref(z), ring)
                             + pp(kb, "EC", sref(z), sref(y)))
            if ok:
                ch |= kb.add("TDs", (x, y), ENT, "D52", prem)
    return ch


def iinter_safe(kb: KB, a: Term, b: Term) -> Term:
    return iinter(kb.canon(a), kb.canon(b))


@rule("D52.bwd", "definition", "unfolding total containment through the surviving clause")
def d52_bwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "TDs"):
        x, y = lit.args
        prem = pp(kb, "TDs", x, y)
        poss = _d52_possible_clauses(kb, x, y)
        if len(poss) != 1:
            continue
        clause = poss[0]
        if clause == 1:
            it = _interior_term(kb, y)
            if it is not None:
                ch |= kb.add("P", (kb.touch(iint(sref(x))),
                                   kb.touch(sref(it))), ENT, "D52", prem)
        elif clause == 2:
            ch |= kb.add("P", (kb.touch(iint(sref(x))), kb.touch(sref(y))),
                         ENT, "D52", prem)
        elif clause == 3:
            it = _interior_term(kb, y)
            if it is not None:
                ch |= kb.disjoin("D52", [
                    (Lit("Piece", (x, it)), ENT),
                    (Lit("=s", (kb.touch(sref(x)), kb.touch(sref(it)))), ENT)],
                    prem)
    return ch


def _d52_possible_clauses(kb: KB, x: Term, y: Term) -> list[int]:
    poss = []
    if not (all_refuted(kb, x, "Obj", "Mat")
            or all_refuted(kb, y, "Obj", "Mat", "Loc")):
        poss.append(1)
    if not (all_refuted(kb, x, "Obj", "Sp-port")
            or st(kb, "Sp-port", y) is REF):
        poss.append(2)
    if not (st(kb, "Sp-port", x) is REF or all_refuted(kb, y, "Obj", "Mat")):
        poss.append(3)
    if not (st(kb, "Loc", x) is REF or st(kb, "Loc", y) is REF):
        poss.append(4)
    return poss


@rule("D53.fwd", "definition", "partial containment: the target's interior overlaps the site's")
def d53_fwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "O"):
        lhs, rhs = lit.args
        if not (isinstance(lhs, Interior) and isinstance(lhs.arg, Sref)):
            continue
        x = kb.canon(lhs.arg.entity)
        if x not in kb.entities or not any_class(kb, x, "Obj", "Mat"):
            continue
        prem = pp(kb, "O", lhs, rhs) + class_premises(kb, x, "Obj", "Mat")
        if isinstance(rhs, Sref):
            owner = kb.canon(rhs.entity)
            if isinstance(owner, IntEnt):
                y = kb.canon(owner.owner)
                if any_class(kb, y, "Obj", "Mat", "Loc"):
                    ch |= kb.add("PDs", (x, y), ENT, "D53",
                                 prem + class_premises(kb, y, "Obj", "Mat",
                                                       "Loc"))
            if st(kb, "Sp-port", owner) is ENT:
                ch |= kb.add("PDs", (x, owner), ENT, "D53",
                             prem + pp(kb, "Sp-port", owner))
    return ch


@rule("D53.bwd", "definition", "unfolding partial containment through the surviving clause")
def d53_bwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "PDs"):
        x, y = lit.args
        prem = pp(kb, "PDs", x, y)
        c1 = not (all_refuted(kb, x, "Obj", "Mat")
                  or all_refuted(kb, y, "Obj", "Mat", "Loc"))
        c2 = not (all_refuted(kb, x, "Obj", "Mat")
                  or st(kb, "Sp-port", y) is REF)
        if c1 and not c2:
            it = _interior_term(kb, y)
            if it is not None:
                ch |= kb.add("O", (kb.touch(iint(sref(x))),
                                   kb.touch(sref(it))), ENT, "D53", prem)
        elif c2 and not c1:
            ch |= kb.add("O", (kb.touch(iint(sref(x))), kb.touch(sref(y))),
                         ENT, "D53", prem)
    return ch


def _contrast_guard(kb: KB, part: Term, whole: Term) -> tuple[bool, tuple[int, ...]]:
    """Does the contrast principle bind this meronymy? (kind + classes)"""
    kind_prem: tuple[int, ...] = ()
    kind_ok = False
    for kind in ("Component", "Piece"):
        if st(kb, kind, part, whole) is ENT:
            kind_ok = True
            kind_prem = pp(kb, kind, part, whole)
            break
    if not kind_ok:
        return False, ()
    if not (any_class(kb, part, "Obj", "Mat")
            and any_class(kb, whole, "Obj", "Mat")):
        return False, ()
    return True, (kind_prem + class_premises(kb, part, "Obj", "Mat")
                  + class_premises(kb, whole, "Obj", "Mat"))


@rule("D54.rest", "definition", "the contrast principle materializes the remainder")
def d54_rest(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Part"):
        x, y = lit.args
        bound, _ = _contrast_guard(kb, x, y)
        if bound and rest_ent(y, x) not in kb.entities:
            kb.ensure_rest(y, x)
            ch = True
    return ch


@rule("D54.fwd", "definition", "part-of containment, gated by the contrast principle")
def d54_fwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Part"):
        x, y = lit.args
        prem = pp(kb, "Part", x, y)
        bound, gprem = _contrast_guard(kb, x, y)
        if not bound:
            # the contrast implication must be provably vacuous
            comp, piece = st(kb, "Component", x, y), st(kb, "Piece", x, y)
            kinds_out = comp is REF and piece is REF
            class_out = (all_refuted(kb, x, "Obj", "Mat")
                         or all_refuted(kb, y, "Obj", "Mat"))
            if kinds_out:
                ch |= kb.add("DPt", (x, y), ENT, "D54",
                             prem + pp(kb, "Component", x, y)
                             + pp(kb, "Piece", x, y))
            elif class_out:
                ch |= kb.add("DPt", (x, y), ENT, "D54", prem)
            continue
        r = rest_ent(y, x)
        if r in kb.entities and st(kb, "TDs", x, kb.canon(r)) is ENT:
            ch |= kb.add("DPt", (x, y), ENT, "D54",
                         prem + gprem + pp(kb, "TDs", x, kb.canon(r)))
    return ch


@rule("D54.whole", "definition", "whole-in-part containment through the contrast principle")
def d54_whole(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "Part"):
        y, x = lit.args  # y is the part (site), x the whole (target)
        bound, gprem = _contrast_guard(kb, y, x)
        if not bound:
            continue
        if rest_ent(x, y) not in kb.entities:
            kb.ensure_rest(x, y)
            ch = True
        r = kb.canon(rest_ent(x, y))
        if st(kb, "TDs", r, y) is ENT:
            ch |= kb.add("DPt", (x, y), ENT, "D54",
                         gprem + pp(kb, "TDs", r, y))
    return ch


@rule("D54.bwd", "definition", "part-of containment comes from a meronymy (recorded)")
def d54_bwd(kb: KB) -> bool:
    ch = False
    for lit in lits(kb, "DPt"):
        x, y = lit.args
        if st(kb, "Part", x, y) is ENT or st(kb, "Component", y, x) is ENT \
                or st(kb, "Piece", y, x) is ENT:
            continue
        ch |= kb.disjoin("D54", [
            (Lit("Part", (x, y)), ENT),
            (Lit("Component", (y, x)), ENT),
            (Lit("Piece", (y, x)), ENT)], pp(kb, "DPt", x, y))
    return ch


# ----------------------------------------------------------------------
# extensionality (domain closure, runs after the fixpoint settles)

@rule("A3", "axiom", "individuals with provably identical connections merge", phase="post")
def a3(kb: KB) -> bool:
    ch = False
    inds = kb.individuals()
    for i, x in enumerate(inds):
        for y in inds[i + 1:]:
            if kb.equal(x, y):
                continue
            same = True
            prem: tuple[int, ...] = ()
            for z in inds:
                sx, sy = st(kb, "C", z, x), st(kb, "C", z, y)
                if sx is UNK or sy is UNK or sx is not sy:
                    same = False
                    break
                prem += pp(kb, "C", z, x) + pp(kb, "C", z, y)
            if same:
                ch |= kb.merge(x, y, "A3", prem[:16])
    return ch


MONOTONE_RULES = [r for r in RULES if r.fn is not None and r.phase == "monotone"]
POST_RULES = [r for r in RULES if r.fn is not None and r.phase == "post"]


def rule_listing() -> list[dict[str, str]]:
    order = {"axiom": 0, "definition": 1, "theorem": 2, "reconstruction": 3,
             "integrity": 4, "default": 5}
    rows = [{"id": r.id, "kind": r.kind, "about": r.about,
             "phase": r.phase} for r in RULES]
    rows.sort(key=lambda r: (order.get(r["kind"], 9), r["id"]))
    return rows
