"""Syntax: atoms, rules, programs, parsing and rendering.

Atoms are interned into a ``Universe`` which assigns dense integer ids;
interpretations and the three components of a rule are represented as bit
masks over those ids.  Programs are immutable once built, so they are safe
to share between threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

ATOM_RE = re.compile(r"[a-z][A-Za-z0-9_]*")

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>%[^\n]*)
  | (?P<arrow>:-)
  | (?P<pipe>\|)
  | (?P<comma>,)
  | (?P<dot>\.)
  | (?P<word>[A-Za-z_][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)


class ParseError(ValueError):
    """Syntax error with 1-based line/column position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Atom:
    id: int
    name: str


class Universe:
    """Append-only atom table shared by one or more programs."""

    def __init__(self, names: Iterable[str] = ()):  # noqa: D401
        self.names: list[str] = []
        self.index: dict[str, int] = {}
        for n in names:
            self.intern(n)

    def intern(self, name: str) -> int:
        """Return the id of ``name``, adding it if unseen."""
        i = self.index.get(name)
        if i is None:
            if not ATOM_RE.fullmatch(name) or name == "not":
                raise ValueError(f"invalid atom name: {name!r}")
            i = len(self.names)
            self.names.append(name)
            self.index[name] = i
        return i

    def atom(self, i: int) -> Atom:
        return Atom(i, self.names[i])

    def __len__(self) -> int:
        return len(self.names)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.names)) - 1

    def mask_of(self, names: Iterable[str]) -> int:
        m = 0
        for n in names:
            m |= 1 << self.intern(n)
        return m

    def decode(self, mask: int) -> tuple[str, ...]:
        """Atom names in ``mask``, sorted alphabetically."""
        return tuple(sorted(self.names[i] for i in bits(mask)))

    def fmt(self, mask: int) -> str:
        """Render an interpretation as ``{a,b}``; the empty set is ``{}``."""
        return "{" + ",".join(self.decode(mask)) + "}"

    def fmt_pair(self, x: int, y: int) -> str:
        return f"({self.fmt(x)},{self.fmt(y)})"


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Rule:
    """A rule head ; pos_body ; neg_body, each a bit mask over the universe.

    An empty head makes the rule a constraint; empty head and empty body is
    the always-violated constraint (falsity).
    """

    head: int
    pos: int
    neg: int

    @property
    def is_constraint(self) -> bool:
        return self.head == 0

    @property
    def atoms(self) -> int:
        return self.head | self.pos | self.neg


@dataclass(frozen=True)
class Program:
    rules: frozenset[Rule]
    universe: Universe = field(compare=False)

    @property
    def var(self) -> int:
        """Mask of atoms occurring in some rule."""
        m = 0
        for r in self.rules:
            m |= r.atoms
        return m

    def union(self, other: "Program") -> "Program":
        if self.universe is not other.universe:
            raise ValueError("programs must share one universe")
        return Program(self.rules | other.rules, self.universe)

    def with_rules(self, rules: Iterable[Rule]) -> "Program":
        return Program(frozenset(rules), self.universe)

    def __or__(self, other: "Program") -> "Program":
        return self.union(other)


def var_of(p: Program) -> int:
    """Mask of all atoms occurring in ``p``."""
    return p.var


def facts_program(mask: int, universe: Universe) -> Program:
    """The program consisting of one fact per atom in ``mask``."""
    return Program(frozenset(Rule(1 << i, 0, 0) for i in bits(mask)), universe)


def parse_program(text: str, universe: Optional[Universe] = None) -> Program:
    """Parse program text; see the grammar in the README.

    A shared ``universe`` lets two programs be parsed over one atom table
    (ids are stable and extended in first-occurrence order).
    """
    uni = universe if universe is not None else Universe()
    rules: set[Rule] = set()
    tokens = list(_tokenize(text))
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(kind: str):
        nonlocal pos
        tok = peek()
        if tok is None or tok[0] != kind:
            where = tok[2:] if tok else _end_pos(text)
            raise ParseError(f"expected {kind}", *where)
        pos += 1
        return tok

    def atom_id() -> int:
        tok = peek()
        if tok is None or tok[0] != "word":
            where = tok[2:] if tok else _end_pos(text)
            raise ParseError("expected atom", *where)
        name = tok[1]
        if name == "not" or not ATOM_RE.fullmatch(name):
            raise ParseError(f"invalid atom token {name!r}", tok[2], tok[3])
        nonlocal pos
        pos += 1
        return uni.intern(name)

    while peek() is not None:
        head = 0
        body_pos = 0
        body_neg = 0
        tok = peek()
        if tok[0] == "word":
            head |= 1 << atom_id()
            while peek() and peek()[0] == "pipe":
                take("pipe")
                head |= 1 << atom_id()
        if peek() and peek()[0] == "arrow":
            take("arrow")
            while True:
                tok = peek()
                if tok and tok[0] == "word" and tok[1] == "not":
                    take("word")
                    body_neg |= 1 << atom_id()
                else:
                    body_pos |= 1 << atom_id()
                if peek() and peek()[0] == "comma":
                    take("comma")
                else:
                    break
        take("dot")
        rules.add(Rule(head, body_pos, body_neg))
    return Program(frozenset(rules), uni)


def _tokenize(text: str):
    line, col = 1, 1
    i = 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if m is None:
            raise ParseError(f"unexpected character {text[i]!r}", line, col)
        kind = m.lastgroup
        value = m.group()
        if kind not in ("ws", "comment"):
            yield (kind, value, line, col)
        nl = value.count("\n")
        if nl:
            line += nl
            col = len(value) - value.rfind("\n")
        else:
            col += len(value)
        i = m.end()


def _end_pos(text: str) -> tuple[int, int]:
    line = text.count("\n") + 1
    col = len(text) - text.rfind("\n")
    return line, col


def rule_to_str(r: Rule, universe: Universe) -> str:
    head = " | ".join(universe.decode(r.head))
    body = [*universe.decode(r.pos)]
    body += [f"not {n}" for n in universe.decode(r.neg)]
    if body:
        sep = " " if head else ""
        return f"{head}{sep}:- {', '.join(body)}."
    # a bare "." is the always-violated constraint (empty head, empty body)
    return f"{head}." if head else "."


def render(p: Program) -> str:
    """Canonical text form: rules sorted by (head, pos, neg) masks."""
    ordered = sorted(p.rules, key=lambda r: (r.head, r.pos, r.neg))
    return "\n".join(rule_to_str(r, p.universe) for r in ordered)
