"""Shifting disjunctive heads, head-cycle tests, constraint elimination.

The shift of a rule turns ``a | b :- body`` into one normal rule per head
atom, moving the remaining head atoms into the negative body.  For
head-cycle-free programs the shift preserves (relativized) uniform
equivalence; ``check_shift_safe`` decides when it also preserves
relativized strong equivalence.
"""

from __future__ import annotations

from typing import Optional

from .semantics import check_capacity, submasks
from .syntax import ATOM_RE, Program, Rule, bits
from .se import SEPair, se_models


def shift_rule(r: Rule) -> frozenset[Rule]:
    """One normal rule per head atom; constraints are returned unchanged."""
    if r.head == 0:
        return frozenset([r])
    out = set()
    for i in bits(r.head):
        bit = 1 << i
        out.add(Rule(bit, r.pos, r.neg | (r.head & ~bit)))
    return frozenset(out)


def shift_one(p: Program, r: Rule) -> Program:
    """Shift a single rule of ``p``, leaving the rest untouched."""
    if r not in p.rules:
        raise ValueError("rule is not part of the program")
    return Program((p.rules - {r}) | shift_rule(r), p.universe)


def shift_program(p: Program) -> Program:
    rules: set[Rule] = set()
    for r in p.rules:
        rules |= shift_rule(r)
    return Program(frozenset(rules), p.universe)


def s_r(r: Rule, over: int) -> list[SEPair]:
    """SE-pairs gained by shifting ``r``: X satisfies the positive body, Y
    avoids the negative body and meets the head twice, X misses the head."""
    check_capacity(over)
    out = []
    for y in submasks(over):
        if (y & r.neg) or (r.head & y).bit_count() < 2:
            continue
        for x in submasks(y):
            if (r.pos & ~x) == 0 and (r.head & x) == 0:
                out.append((x, y))
    return sorted(out, key=lambda xy: (xy[1], xy[0]))


def _reach_masks(p: Program, extra_clique: int = 0) -> dict[int, int]:
    """Positive-dependency reachability: for each atom, the mask of atoms
    reachable via body->head edges (plus an optional clique)."""
    var = p.var | extra_clique
    adj: dict[int, int] = {i: 0 for i in bits(var)}
    for r in p.rules:
        for b in bits(r.pos):
            adj.setdefault(b, 0)
            adj[b] |= r.head & ~(1 << b)
    for i in bits(extra_clique):
        adj.setdefault(i, 0)
        adj[i] |= extra_clique & ~(1 << i)
    reach = dict(adj)
    changed = True
    while changed:
        changed = False
        for i, m in reach.items():
            expanded = m
            for j in bits(m):
                expanded |= reach.get(j, 0)
            if expanded != m:
                reach[i] = expanded
                changed = True
    return reach


def _hcf_against(p: Program, reach: dict[int, int]) -> bool:
    for r in p.rules:
        heads = list(bits(r.head))
        for i in range(len(heads)):
            for j in range(i + 1, len(heads)):
                a, b = heads[i], heads[j]
                if reach.get(a, 0) & (1 << b) and reach.get(b, 0) & (1 << a):
                    return False
    return True


def is_hcf(p: Program) -> bool:
    """No positive-dependency cycle through two head atoms of one rule."""
    return _hcf_against(p, _reach_masks(p))


def is_a_hcf(p: Program, a: int) -> bool:
    """Head-cycle freeness on the dependency graph augmented with a clique
    over the alphabet ``a``."""
    return _hcf_against(p, _reach_masks(p, extra_clique=a))


def check_shift_safe(p: Program, r: Rule, a: int) -> bool:
    """Does shifting ``r`` preserve strong equivalence relative to ``a``?

    True iff every SE-model of the shifted program that lies in the gained
    set and whose total part survives the alphabet-minimality test against
    the original program has an alternative non-total witness with the same
    alphabet part.  Gained pairs whose Y already has a strictly smaller
    SE-companion agreeing with it on the alphabet are skipped: such a Y
    contributes relativized SE-models to neither program, so those pairs
    cannot create a difference.
    """
    if r not in p.rules:
        raise ValueError("rule is not part of the program")
    over = p.var | a
    shifted = shift_one(p, r)
    gained = set(s_r(r, over))
    se_p = set(se_models(p, over))
    for x, y in se_models(shifted, over):
        if (x, y) not in gained:
            continue
        if any(
            x2 != y and (x2 & a) == (y & a) and (x2, y) in se_p
            for x2 in submasks(y)
        ):
            continue
        ok = False
        for x2 in submasks(y):
            if x2 == y or x2 == x or (x2 & a) != (x & a):
                continue
            if (x2, y) in se_p:
                ok = True
                break
        if not ok:
            return False
    return True


def _fresh_atom(p: Program) -> str:
    used = set(p.universe.names)
    if "w" not in used:
        return "w"
    n = 1
    while f"w{n}" in used:
        n += 1
    return f"w{n}"


def eliminate_constraints_negation(p: Program, w: Optional[str] = None) -> tuple[Program, int]:
    """Replace each constraint ``:- B`` by ``w :- B, not w``.

    Returns the rewritten program and the recommended alphabet for
    relativized checks: every universe atom except ``w``.
    """
    name = w if w is not None else _fresh_atom(p)
    if not ATOM_RE.fullmatch(name or ""):
        raise ValueError(f"invalid atom name: {name!r}")
    if name in p.universe.index and (p.var >> p.universe.index[name]) & 1:
        raise ValueError(f"{name!r} occurs in the program")
    wid = p.universe.intern(name)
    wbit = 1 << wid
    rules = set()
    for r in p.rules:
        if r.head == 0:
            rules.add(Rule(wbit, r.pos, r.neg | wbit))
        else:
            rules.add(r)
    alphabet = p.universe.full_mask & ~wbit
    return Program(frozenset(rules), p.universe), alphabet


def eliminate_constraints_positive(p: Program, w: Optional[str] = None) -> Program:
    """Positive variant: constraints become ``w :- B`` and every universe
    atom (other than ``w`` itself) gets a rule ``v :- w``, whether or not a
    constraint is present."""
    if any(r.neg for r in p.rules):
        raise ValueError("program is not positive")
    name = w if w is not None else _fresh_atom(p)
    if not ATOM_RE.fullmatch(name or ""):
        raise ValueError(f"invalid atom name: {name!r}")
    if name in p.universe.index and (p.var >> p.universe.index[name]) & 1:
        raise ValueError(f"{name!r} occurs in the program")
    spread = p.universe.full_mask
    wid = p.universe.intern(name)
    wbit = 1 << wid
    rules = set()
    for r in p.rules:
        if r.head == 0:
            rules.add(Rule(wbit, r.pos, 0))
        else:
            rules.add(r)
    for i in bits(spread & ~wbit):
        rules.add(Rule(1 << i, wbit, 0))
    return Program(frozenset(rules), p.universe)
