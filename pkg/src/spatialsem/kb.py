"""Knowledge-base state: entities, literal store, equalities, constraints.

The KB is a single-writer session.  It owns

* the entity registry (atomic entities with one of five exclusive ontological
  classes, plural sums forming a free join-semilattice over atoms, derived
  interior/remainder entities),
* the three-valued literal store (entailed / refuted; absence = unknown) with
  one proof node per stored literal,
* spatial equality ``=s`` as a union-find over terms — structural
  renormalization gives congruence (merging two entities merges their
  referents, merging two directions merges their opposites),
* the projection-constraint store (one canonical cell per pair and axis),
* recorded disjunctions (never case-split; unit propagation only),
* inconsistency records, each naming the rule that was violated.

Derivation happens in :mod:`spatialsem.engine`; this module only guarantees
that whatever is stored stays canonical and conflict-checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from . import allen as A
from .relations import Lit, Status, check_lit
from .terms import (
    UNIVERSAL, UP, Dir, Ent, IntEnt, RestEnt, Term, TermError, children,
    depth, ent, int_ent, isum, opp, plur, rebuild, render, rest_ent, sref,
    term_key,
)

SYMMETRIC = {"C", "O", "EC", "ICont", "Cont", "Sp", "DirEq", "Same-level", "=s"}
#: relations symmetric in their last two arguments only
TAIL_SYMMETRIC = {"Equidist", "In-med", "In-sum"}

CLASSES = ("Obj", "Mat", "Subst", "Loc", "Sp-port")

#: attribute tokens allowed in entity declarations (boolean valued)
FLAG_ATTRS = (
    "Container", "Can-Contain", "Can-Use", "In-Use", "Speaker", "Scattered",
    "Surrounding", "Intrinsic-Stab", "Complex-Shape", "Ground",
)
#: attribute tokens taking a value (a direction or an entity name)
VALUE_ATTRS = ("Orient-gen", "Depend")


class KbError(ValueError):
    """Raised on declaration-shaped violations (bad class, arity, duplicates)."""


@dataclass(frozen=True, slots=True)
class Proof:
    pid: int
    lit: Lit
    status: Status
    rule: str
    premises: tuple[int, ...]
    default: bool = False
    note: str = ""


@dataclass(slots=True)
class Record:
    status: Status
    pid: int


@dataclass(slots=True)
class AllenCell:
    rels: frozenset[str]
    pid: int


@dataclass(frozen=True, slots=True)
class Conflict:
    rule: str
    detail: str
    pids: tuple[int, ...] = ()


@dataclass(slots=True)
class Disjunction:
    did: int
    rule: str
    alts: tuple[tuple[Lit, Status], ...]
    premises: tuple[int, ...]
    resolved: bool = False


@dataclass(slots=True)
class EntityInfo:
    name: str
    term: Term
    cls: str  # one of CLASSES, or "Plural"
    attrs: dict[str, object] = field(default_factory=dict)
    interior_mode: str | None = None


@dataclass(slots=True)
class Limits:
    term_depth: int = 3
    budget: int = 400_000


class KB:
    def __init__(self, limits: Limits | None = None) -> None:
        self.limits = limits or Limits()
        self.entities: dict[Term, EntityInfo] = {}
        self.names: dict[str, Term] = {}
        self.terms: dict[Term, int] = {}
        self.uf: dict[Term, Term] = {}
        self.store: dict[Lit, Record] = {}
        self.proofs: list[Proof] = []
        self.allen: dict[tuple[Term, Term, Term], AllenCell] = {}
        self.disjunctions: list[Disjunction] = []
        self.conflicts: list[Conflict] = []
        #: scene-level defeasible assumptions, in declaration order
        self.assumptions: list[tuple[Lit, Status]] = []
        self.pragmas: set[str] = set()
        self.budget_exhausted = False
        self.touch(UNIVERSAL)
        self.touch(UP)

    # ------------------------------------------------------------------
    # cloning (used by the default layer to trial an assumption)

    def clone(self) -> "KB":
        other = KB.__new__(KB)
        other.limits = self.limits
        other.entities = {
            t: EntityInfo(i.name, i.term, i.cls, dict(i.attrs), i.interior_mode)
            for t, i in self.entities.items()
        }
        other.names = dict(self.names)
        other.terms = dict(self.terms)
        other.uf = dict(self.uf)
        other.store = {lit: Record(r.status, r.pid) for lit, r in self.store.items()}
        other.proofs = list(self.proofs)
        other.allen = {k: AllenCell(c.rels, c.pid) for k, c in self.allen.items()}
        other.disjunctions = [
            Disjunction(d.did, d.rule, d.alts, d.premises, d.resolved)
            for d in self.disjunctions
        ]
        other.conflicts = list(self.conflicts)
        other.assumptions = list(self.assumptions)
        other.pragmas = set(self.pragmas)
        other.budget_exhausted = self.budget_exhausted
        return other

    # ------------------------------------------------------------------
    # terms, canonical forms, spatial equality

    def touch(self, t: Term) -> Term:
        """Register a term (and its subterms); returns its canonical form."""
        t = self.canon(t)
        self._register(t)
        return t

    def _register(self, t: Term) -> None:
        if t in self.terms:
            return
        if depth(t) > self.limits.term_depth:
            raise TermError(
                f"term depth {depth(t)} exceeds limit "
                f"{self.limits.term_depth}: {render(t)}"
            )
        self.terms[t] = len(self.terms)
        for k in children(t):
            self._register(self.canon(k))

    def _root(self, t: Term) -> Term:
        while t in self.uf:
            t = self.uf[t]
        return t

    def canon(self, t: Term) -> Term:
        """Structural canonical form under the current equalities."""
        for _ in range(64):
            kids = children(t)
            new = rebuild(t, tuple(self.canon(k) for k in kids)) if kids else t
            new = self._root(new)
            if new == t:
                return t
            t = new
        raise TermError(f"canonicalization did not converge on {render(t)}")

    def order_index(self, t: Term) -> int:
        if t not in self.terms:
            self._register(t)
        return self.terms[t]

    def merge(self, a: Term, b: Term, rule: str,
              premises: tuple[int, ...] = ()) -> bool:
        """Record a =s b (entity, referent or direction identity)."""
        a = self.touch(a)
        b = self.touch(b)
        if a == b:
            return False
        if a.is_individual():
            lit = self._canon_lit(Lit("=s", (a, b)))
            if lit not in self.store:
                pid = self._new_proof(lit, Status.ENTAILED, rule, premises)
                self.store[lit] = Record(Status.ENTAILED, pid)
        changed = False
        queue = [(a, b)]
        while queue:
            x, y = queue.pop()
            x, y = self.canon(x), self.canon(y)
            if x == y:
                continue
            rx, ry = self._root(x), self._root(y)
            if rx == ry:
                continue
            # deterministic representative: the earlier-registered term
            if self.order_index(ry) < self.order_index(rx):
                rx, ry = ry, rx
            self.uf[ry] = rx
            changed = True
            if x in self.entities or y in self.entities:
                self._merge_entity_info(rx, ry, rule)
            if x.is_direction() and y.is_direction():
                # the union-find holds one side; keep the involution in step
                queue.append((self.touch(opp(x)), self.touch(opp(y))))
        if changed:
            self._renormalize()
        return changed

    def equal(self, a: Term, b: Term) -> bool:
        return self.canon(a) == self.canon(b)

    def _merge_entity_info(self, keep: Term, gone: Term, rule: str) -> None:
        ik = self.entities.get(keep)
        ig = self.entities.get(gone)
        if ig is None:
            return
        if ik is None:
            self.entities[keep] = ig
            return
        if ik.cls != ig.cls:
            self.conflicts.append(Conflict(
                "A43", f"merged entities {ik.name} and {ig.name} carry "
                       f"distinct classes {ik.cls}/{ig.cls} ({rule})"))
        for k, v in ig.attrs.items():
            if k in ik.attrs and ik.attrs[k] != v:
                self.conflicts.append(Conflict(
                    rule, f"attribute {k} disagrees across merged entities "
                          f"{ik.name}/{ig.name}"))
            else:
                ik.attrs.setdefault(k, v)
        if ik.interior_mode is None:
            ik.interior_mode = ig.interior_mode

    def _renormalize(self) -> None:
        """Re-key every structure after a merge; detect collisions."""
        store: dict[Lit, Record] = {}
        for lit, rec in self.store.items():
            clit = self._canon_lit(lit)
            old = store.get(clit)
            if old is None:
                store[clit] = rec
            elif old.status is not rec.status:
                self.conflicts.append(Conflict(
                    "=s", f"{clit} is both entailed and refuted after a merge",
                    (old.pid, rec.pid)))
            elif rec.pid < old.pid:
                store[clit] = rec
        self.store = store
        cells: dict[tuple[Term, Term, Term], AllenCell] = {}
        for (x, y, d), cell in self.allen.items():
            key, flip, swap = self._allen_key(self.canon(x), self.canon(y),
                                              self.canon(d))
            rels = cell.rels
            if swap:
                rels = A.converse_set(rels)
            if flip:
                rels = A.reflect_set(rels)
            old = cells.get(key)
            if old is None:
                cells[key] = AllenCell(rels, cell.pid)
            else:
                joint = old.rels & rels
                if not joint:
                    self.conflicts.append(Conflict(
                        "A29", "projection constraints became incompatible "
                               f"after a merge: {render(key[0])}/{render(key[1])}"
                               f" along {render(key[2])}",
                        (old.pid, cell.pid)))
                cells[key] = AllenCell(joint or old.rels, min(old.pid, cell.pid))
        self.allen = cells
        for dj in self.disjunctions:
            dj.alts = tuple((self._canon_lit(l), s) for l, s in dj.alts)
        self.assumptions = [(self._canon_lit(l), s) for l, s in self.assumptions]
        self.entities = {self.canon(t): i for t, i in self.entities.items()}
        self._check_distinctness()

    def _check_distinctness(self) -> None:
        seen: set[str] = {c.detail for c in self.conflicts}
        for d in [t for t in self.terms if isinstance(t, Dir)]:
            if self.equal(d, opp(d)):
                msg = f"direction {render(self.canon(d))} collapsed onto its opposite"
                if msg not in seen:
                    self.conflicts.append(Conflict("X-OPP-DISTINCT", msg))
                    seen.add(msg)
        for lit, rec in self.store.items():
            if rec.status is Status.REFUTED and lit.rel in ("=s", "DirEq") \
                    and lit.args[0] == lit.args[1]:
                msg = f"{lit} was refuted but its arguments were merged"
                if msg not in seen:
                    self.conflicts.append(Conflict("X-DISTINCT", msg, (rec.pid,)))
                    seen.add(msg)

    # ------------------------------------------------------------------
    # literal store

    def _canon_lit(self, lit: Lit) -> Lit:
        args = tuple(self.canon(a) for a in lit.args)
        if lit.rel in SYMMETRIC and len(args) == 2:
            args = tuple(sorted(args, key=term_key))
        elif lit.rel in TAIL_SYMMETRIC and len(args) == 3:
            args = (args[0], *sorted(args[1:], key=term_key))
        return Lit(lit.rel, args)

    def _new_proof(self, lit: Lit, status: Status, rule: str,
                   premises: tuple[int, ...], default: bool = False,
                   note: str = "") -> int:
        pid = len(self.proofs)
        self.proofs.append(Proof(pid, lit, status, rule, premises, default, note))
        return pid

    def add(self, rel: str, args: tuple[Term, ...], status: Status, rule: str,
            premises: tuple[int, ...] = (), default: bool = False,
            note: str = "") -> bool:
        """Store a literal; returns True when the store changed.

        A status clash is recorded as an inconsistency (both proofs kept);
        the first stored status wins so saturation stays monotone.
        """
        if status is Status.UNKNOWN:
            raise KbError("cannot store an unknown status")
        lit = self._canon_lit(Lit(rel, args))
        check_lit(lit)
        for t in lit.args:
            self.touch(t)
        if lit.rel == "=s":
            if status is Status.ENTAILED:
                return self.merge(lit.args[0], lit.args[1], rule, premises)
            if self.equal(lit.args[0], lit.args[1]):
                pid = self._new_proof(lit, status, rule, premises, default, note)
                self.conflicts.append(Conflict(
                    rule, f"{lit} refuted while both sides are provably equal",
                    (pid,)))
                return True
        old = self.store.get(lit)
        if old is not None:
            if old.status is status:
                return False
            pid = self._new_proof(lit, status, rule, premises, default, note)
            self.conflicts.append(Conflict(
                rule, f"{lit}: derived {status.value} but already "
                      f"{old.status.value}", (old.pid, pid)))
            return True
        pid = self._new_proof(lit, status, rule, premises, default, note)
        self.store[lit] = Record(status, pid)
        if lit.rel == "DirEq" and status is Status.ENTAILED:
            self.merge(lit.args[0], lit.args[1], rule, (pid,))
        self._propagate_units()
        return True

    def status(self, rel: str, args: tuple[Term, ...]) -> Status:
        lit = self._canon_lit(Lit(rel, args))
        if lit.rel in ("=s", "DirEq") and lit.args[0] == lit.args[1]:
            rec = self.store.get(lit)
            if rec is not None and rec.status is Status.REFUTED:
                return Status.REFUTED
            return Status.ENTAILED
        rec = self.store.get(lit)
        return rec.status if rec is not None else Status.UNKNOWN

    def proof_id(self, rel: str, args: tuple[Term, ...]) -> int | None:
        rec = self.store.get(self._canon_lit(Lit(rel, args)))
        return rec.pid if rec is not None else None

    def lits(self, rel: str, status: Status = Status.ENTAILED) -> Iterator[Lit]:
        """All stored literals of a relation; symmetric ones both ways."""
        both = rel in SYMMETRIC
        for lit, rec in list(self.store.items()):
            if lit.rel != rel or rec.status is not status:
                continue
            yield lit
            if both and lit.args[0] != lit.args[1]:
                yield Lit(rel, (lit.args[1], lit.args[0]))

    # ------------------------------------------------------------------
    # disjunctions

    def disjoin(self, rule: str, alts: list[tuple[Lit, Status]],
                premises: tuple[int, ...] = ()) -> bool:
        """Record a disjunction of (literal, status) alternatives."""
        canon = tuple((self._canon_lit(l), s) for l, s in alts)
        for dj in self.disjunctions:
            if dj.alts == canon:
                return False
        self.disjunctions.append(
            Disjunction(len(self.disjunctions), rule, canon, premises))
        self._propagate_units()
        return True

    def _alt_state(self, lit: Lit, want: Status) -> Status:
        """ENTAILED if the alternative already holds, REFUTED if excluded."""
        have = self.status(lit.rel, lit.args)
        if have is Status.UNKNOWN:
            return Status.UNKNOWN
        return Status.ENTAILED if have is want else Status.REFUTED

    def _propagate_units(self) -> None:
        for dj in self.disjunctions:
            if dj.resolved:
                continue
            states = [self._alt_state(l, s) for l, s in dj.alts]
            if Status.ENTAILED in states:
                dj.resolved = True
                continue
            open_alts = [i for i, st in enumerate(states)
                         if st is Status.UNKNOWN]
            if not open_alts:
                dj.resolved = True
                pids = tuple(p for l, s in dj.alts
                             if (p := self.proof_id(l.rel, l.args)) is not None)
                self.conflicts.append(Conflict(
                    dj.rule, "all alternatives of a recorded disjunction were "
                             "refuted: " + " | ".join(
                                 f"{s.value} {l}" for l, s in dj.alts),
                    dj.premises + pids))
            elif len(open_alts) == 1:
                lit, want = dj.alts[open_alts[0]]
                pids = tuple(p for j, (l, s) in enumerate(dj.alts) if j != open_alts[0]
                             and (p := self.proof_id(l.rel, l.args)) is not None)
                dj.resolved = True
                self.add(lit.rel, lit.args, want, dj.rule + ".unit",
                         dj.premises + pids)

    # ------------------------------------------------------------------
    # projection constraints (one canonical cell per pair and axis)

    def _allen_key(self, x: Term, y: Term, d: Term) -> tuple[
            tuple[Term, Term, Term], bool, bool]:
        """Canonical cell key; returns (key, reflect-axis?, swap-args?)."""
        flip = False
        if term_key(opp(d)) < term_key(d):
            d = opp(d)
            flip = True
        swap = term_key(y) < term_key(x)
        if swap:
            x, y = y, x
        return (x, y, d), flip, swap

    def allen_get(self, x: Term, y: Term, d: Term) -> frozenset[str]:
        """Current constraint on x's projection against y's along d.

        Folds in what the mereotopological statuses already force: equal
        referents project equally, parthood confines the projection, and
        connection rules out strict precedence.
        """
        x, y, d = self.canon(x), self.canon(y), self.canon(d)
        if x == y:
            return frozenset({"="})
        key, flip, swap = self._allen_key(x, y, d)
        cell = self.allen.get(key)
        rels = cell.rels if cell is not None else A.FULL
        if swap:
            rels = A.converse_set(rels)
        if flip:
            rels = A.reflect_set(rels)
        if self.status("C", (x, y)) is Status.ENTAILED:
            rels &= A.CONNECTED
        if self.status("P", (x, y)) is Status.ENTAILED:
            rels &= A.WITHIN
        if self.status("P", (y, x)) is Status.ENTAILED:
            rels &= A.converse_set(A.WITHIN)
        return rels

    def allen_refine(self, x: Term, y: Term, d: Term, rels: frozenset[str],
                     rule: str, premises: tuple[int, ...] = ()) -> bool:
        x, y, d = self.touch(x), self.touch(y), self.touch(d)
        if x == y:
            if "=" not in rels:
                pid = self._new_proof(Lit("=s", (x, y)), Status.ENTAILED, rule,
                                      premises)
                self.conflicts.append(Conflict(
                    rule, f"projection of {render(x)} against itself "
                          f"constrained away from equality", (pid,)))
                return True
            return False
        key, flip, swap = self._allen_key(x, y, d)
        if swap:
            rels = A.converse_set(rels)
        if flip:
            rels = A.reflect_set(rels)
        cell = self.allen.get(key)
        old = cell.rels if cell is not None else A.FULL
        new = old & rels
        if new == old:
            return False
        lit = Lit("Allen", (*key,))
        pid = self._new_proof(lit, Status.ENTAILED, rule,
                              premises + ((cell.pid,) if cell else ()),
                              note="{" + ",".join(sorted(new)) + "}")
        self.allen[key] = AllenCell(new, pid)
        if not new:
            self.conflicts.append(Conflict(
                rule, f"no projection relation left between {render(key[0])} "
                      f"and {render(key[1])} along {render(key[2])}", (pid,)))
        return True

    def allen_pairs(self) -> Iterator[tuple[Term, Term, Term, frozenset[str]]]:
        for (x, y, d), cell in list(self.allen.items()):
            yield x, y, d, cell.rels

    # ------------------------------------------------------------------
    # entity registry

    def _fresh_name(self, name: str) -> None:
        if name in self.names:
            raise KbError(f"entity {name!r} is already declared")

    def declare_entity(self, name: str, cls: str,
                       attrs: dict[str, object] | None = None) -> Term:
        """Declare an atomic entity of one of the five exclusive classes."""
        if cls not in CLASSES:
            raise KbError(f"unknown class {cls!r}; expected one of {CLASSES}")
        self._fresh_name(name)
        attrs = dict(attrs or {})
        for k in attrs:
            if k not in FLAG_ATTRS and k not in VALUE_ATTRS:
                raise KbError(f"unknown attribute {k!r} on entity {name!r}")
        if cls == "Sp-port" and "Depend" not in attrs:
            raise KbError(
                f"space portion {name!r} needs a Depend attribute naming "
                "the entity it is the interior or zone of")
        e = ent(name)
        self.names[name] = e
        self.touch(e)
        self.touch(sref(e))
        self.entities[e] = EntityInfo(name, e, cls, attrs)
        self.add(cls, (e,), Status.ENTAILED, "decl")
        for other in CLASSES:
            if other != cls:
                self.add(other, (e,), Status.REFUTED, "A42")
        self.add("At", (e,), Status.ENTAILED, "decl")
        for k, v in attrs.items():
            self._apply_attr(e, k, v)
        return e

    def _apply_attr(self, e: Term, key: str, value: object) -> None:
        if key in FLAG_ATTRS:
            st = Status.ENTAILED if value in (True, "true") else Status.REFUTED
            self.add(key, (e,), st, "decl")
        elif key == "Orient-gen":
            d = self.touch(Dir(str(value)))
            self.add("Orient-gen", (e, d), Status.ENTAILED, "decl")
        elif key == "Depend":
            target = self.names.get(str(value))
            if target is None:
                raise KbError(f"Depend target {value!r} is not declared")
            self.add("Depend", (e, target), Status.ENTAILED, "decl")

    def declare_plural(self, name: str, members: list[str]) -> Term:
        """Declare a plural individual as the sum of declared atoms."""
        self._fresh_name(name)
        terms = []
        for m in members:
            t = self.names.get(m)
            if t is None:
                raise KbError(f"plural {name!r} names undeclared member {m!r}")
            if not isinstance(t, Ent):
                raise KbError(f"plural {name!r} member {m!r} is not atomic")
            terms.append(t)
        if len(terms) < 2:
            raise KbError(f"plural {name!r} needs at least two members")
        p = plur(terms)
        self.names[name] = p
        self.touch(p)
        self.touch(sref(p))
        if p not in self.entities:
            self.entities[p] = EntityInfo(name, p, "Plural")
            self.add("At", (p,), Status.REFUTED, "D34")
            self.add("Coll", (p,), Status.ENTAILED, "D35")
            for m in terms:
                self.add("Leq", (m, p), Status.ENTAILED, "A31")
        return p

    def ensure_interior(self, owner: Term) -> Term:
        """The interior entity of a container, hollow or location entity."""
        owner = self.canon(owner)
        info = self.entities.get(owner)
        if info is None:
            raise KbError(f"interior of undeclared entity {render(owner)}")
        mode = interior_mode(info)
        if mode is None:
            raise KbError(
                f"entity {info.name!r} ({info.cls}) has no interior reading: "
                "expected a Container/Can-Contain, Scattered, Surrounding or "
                "Loc entity")
        it = int_ent(owner)
        if it in self.entities:
            return it
        self.touch(it)
        self.touch(sref(it))
        self.entities[it] = EntityInfo(
            f"int({info.name})", it, "Sp-port", {}, mode)
        info.interior_mode = mode
        self.add("Sp-port", (it,), Status.ENTAILED, "A49")
        for other in CLASSES:
            if other != "Sp-port":
                self.add(other, (it,), Status.REFUTED, "A42")
        self.add("At", (it,), Status.ENTAILED, "decl")
        self.add("Depend", (it, owner), Status.ENTAILED, "A49")
        return it

    def ensure_rest(self, whole: Term, part: Term) -> Term:
        """The remainder entity: whole minus a named part."""
        whole, part = self.canon(whole), self.canon(part)
        wi = self.entities.get(whole)
        pi = self.entities.get(part)
        if wi is None or pi is None:
            raise KbError("remainder needs two declared entities")
        rt = rest_ent(whole, part)
        if rt in self.entities:
            return rt
        self.touch(rt)
        self.touch(sref(rt))
        cls = wi.cls if wi.cls in CLASSES else "Obj"
        self.entities[rt] = EntityInfo(
            f"rest({wi.name},{pi.name})", rt, cls)
        self.add(cls, (rt,), Status.ENTAILED, "decl")
        for other in CLASSES:
            if other != cls:
                self.add(other, (rt,), Status.REFUTED, "A42")
        self.add("At", (rt,), Status.ENTAILED, "decl")
        pid = self.proof_id(cls, (rt,))
        prem = (pid,) if pid is not None else ()
        self.add("P", (sref(rt), sref(whole)), Status.ENTAILED, "rest", prem)
        self.add("P", (sref(part), sref(whole)), Status.ENTAILED, "rest", prem)
        self.add("O", (sref(rt), sref(part)), Status.REFUTED, "rest", prem)
        self.merge(sref(whole), isum(sref(rt), sref(part)), "rest", prem)
        return rt

    def entity_named(self, name: str) -> Term:
        t = self.names.get(name)
        if t is None:
            raise KbError(f"entity {name!r} is not declared")
        return self.canon(t)

    def info(self, t: Term) -> EntityInfo | None:
        return self.entities.get(self.canon(t))

    def atoms(self) -> list[Term]:
        return [t for t in self.entities if isinstance(t, (Ent, IntEnt, RestEnt))]

    def individuals(self) -> list[Term]:
        return [t for t in self.terms if t.is_individual()]

    def directions(self) -> list[Term]:
        out = []
        for t in self.terms:
            if isinstance(t, Dir) and self.canon(t) == t:
                out.append(t)
        return sorted(out, key=term_key)

    # ------------------------------------------------------------------

    def consistent(self) -> bool:
        return not self.conflicts


def interior_mode(info: EntityInfo) -> str | None:
    """Which reading the interior of this entity gets, if any."""
    if info.interior_mode is not None:
        return info.interior_mode
    a = info.attrs
    if a.get("Container") or a.get("Can-Contain"):
        return "concavity"
    if a.get("Scattered"):
        return "outline"
    if a.get("Surrounding"):
        return "ring"
    if info.cls == "Loc":
        return "column"
    return None
