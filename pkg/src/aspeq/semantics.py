"""Classical satisfaction, reducts, answer sets, Horn least models.

All enumeration is exhaustive over bit masks and guarded by a capacity cap
(24 atoms by default); every function here is pure.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .syntax import Program, Rule, Universe, bits

CAPACITY = 24


class CapacityError(RuntimeError):
    """Raised when an enumeration would exceed the atom cap."""


def check_capacity(mask: int, cap: int = CAPACITY) -> None:
    n = mask.bit_count()
    if n > cap:
        raise CapacityError(f"{n} atoms exceeds the enumeration cap of {cap}")


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask`` in ascending unsigned order."""
    positions = list(bits(mask))
    for i in range(1 << len(positions)):
        s = 0
        for j in bits(i):
            s |= 1 << positions[j]
        yield s


def proper_submasks(mask: int) -> Iterator[int]:
    """All strict subsets of ``mask`` (descending order, for early exits)."""
    if mask == 0:
        return
    s = (mask - 1) & mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def satisfies(i: int, r: Rule) -> bool:
    """Classical satisfaction: body applicable implies head intersected."""
    if (r.pos & ~i) == 0 and (r.neg & i) == 0:
        return (r.head & i) != 0
    return True


def is_model(i: int, p: Program) -> bool:
    return all(satisfies(i, r) for r in p.rules)


def reduct(p: Program, y: int) -> Program:
    """Reduct of ``p`` w.r.t. ``y``: drop rules whose negative body meets
    ``y``, strip the negative body from the rest."""
    out = set()
    for r in p.rules:
        if r.neg & y:
            continue
        out.add(Rule(r.head, r.pos, 0))
    return Program(frozenset(out), p.universe)


def classical_models(p: Program, over: Optional[int] = None) -> list[int]:
    """All models of ``p`` among subsets of ``over`` (default var(p))."""
    if over is None:
        over = p.var
    if p.var & ~over:
        raise ValueError("`over` must cover var(p)")
    check_capacity(over)
    rules = list(p.rules)
    return [i for i in submasks(over) if all(satisfies(i, r) for r in rules)]


def minimal_models(p: Program, over: Optional[int] = None) -> list[int]:
    models = classical_models(p, over)
    model_set = set(models)
    out = []
    for y in models:
        if not any(x in model_set for x in proper_submasks(y)):
            out.append(y)
    return out


def answer_sets(p: Program) -> list[int]:
    """All answer sets of ``p``: minimal models of the reduct, over var(p)."""
    var = p.var
    check_capacity(var)
    out = []
    for y in submasks(var):
        red = [r for r in p.rules if not (r.neg & y)]
        if not all(_sat_pos(y, r) for r in red):
            continue
        if any(all(_sat_pos(x, r) for r in red) for x in proper_submasks(y)):
            continue
        out.append(y)
    return out


def _sat_pos(i: int, r: Rule) -> bool:
    # satisfaction of a rule with the negative body ignored (reduct member)
    return (r.pos & ~i) != 0 or (r.head & i) != 0


def is_horn(p: Program) -> bool:
    return all(r.head.bit_count() <= 1 and r.neg == 0 for r in p.rules)


def horn_least_model(p: Program) -> Optional[int]:
    """Least model of a Horn program, or None if a constraint rejects it."""
    if not is_horn(p):
        raise ValueError("program is not Horn")
    definite = [r for r in p.rules if r.head]
    i = 0
    changed = True
    while changed:
        changed = False
        for r in definite:
            if (r.pos & ~i) == 0 and (r.head & i) == 0:
                i |= r.head
                changed = True
    for r in p.rules:
        if r.head == 0 and (r.pos & ~i) == 0:
            return None
    return i


def horn_satisfiable(p: Program) -> bool:
    return horn_least_model(p) is not None


def horn_entails(p: Program, r: Rule) -> bool:
    """Does Horn ``p`` classically entail the positive rule ``r``?

    Checked by refutation: p + B+(r) as facts + one constraint per head
    atom must be unsatisfiable.
    """
    if r.neg:
        raise ValueError("entailment check only supports positive rules")
    extra = {Rule(1 << i, 0, 0) for i in bits(r.pos)}
    extra |= {Rule(0, 1 << i, 0) for i in bits(r.head)}
    if r.head == 0:
        # a constraint is entailed iff its body is contradictory with p
        return not horn_satisfiable(Program(p.rules | extra, p.universe))
    return not horn_satisfiable(Program(p.rules | extra, p.universe))


def bound_sets(y: int, u: int, universe: Universe) -> tuple[Program, Program, Program]:
    """Constraint programs pinning interpretations against ``y`` inside ``u``.

    Returns (subset, strict_subset, equal): models of the first are the
    subsets of ``y``; adding the big constraint over all of ``y`` excludes
    ``y`` itself (for ``y = 0`` that constraint is bare falsity); adding
    ``y`` as facts pins the model to exactly ``y``.
    """
    if y & ~u:
        raise ValueError("y must be a subset of u")
    outside = frozenset(Rule(0, 1 << i, 0) for i in bits(u & ~y))
    subset = Program(outside, universe)
    strict = Program(outside | {Rule(0, y, 0)}, universe)
    equal = Program(outside | {Rule(1 << i, 0, 0) for i in bits(y)}, universe)
    return subset, strict, equal
