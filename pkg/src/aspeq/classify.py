"""Syntactic program classes used to route the deciders."""

from __future__ import annotations

from dataclasses import dataclass

from .syntax import Program


@dataclass(frozen=True)
class ProgramClass:
    horn: bool
    definite: bool
    unary: bool
    normal: bool
    positive: bool
    hcf: bool
    disjunctive: bool

    @property
    def flags(self) -> frozenset[str]:
        return frozenset(n for n in ("horn", "definite", "unary", "normal", "positive", "hcf", "disjunctive") if getattr(self, n))


def classify(p: Program) -> ProgramClass:
    """Compute all class flags for ``p``.

    Constraints count as normal (head size at most one admits zero) and,
    when negation-free, as Horn.
    """
    from .transforms import is_hcf

    normal = all(r.head.bit_count() <= 1 for r in p.rules)
    positive = all(r.neg == 0 for r in p.rules)
    definite = all(r.head.bit_count() == 1 for r in p.rules)
    horn = normal and positive
    unary = horn and definite and all(r.pos.bit_count() <= 1 for r in p.rules)
    disjunctive = any(r.head.bit_count() >= 2 for r in p.rules)
    return ProgramClass(
        horn=horn,
        definite=definite,
        unary=unary,
        normal=normal,
        positive=positive,
        hcf=is_hcf(p),
        disjunctive=disjunctive,
    )
