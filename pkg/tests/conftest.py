import random

import pytest

from aspeq.harness import GeneratorConfig, random_program
from aspeq.syntax import Program, Rule, Universe, parse_program


# one "[acceptance] criterion N: PASS/FAIL" line per criterion, emitted
# through the terminal reporter so output capturing cannot swallow them
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)


def prog(text: str, universe: Universe) -> Program:
    return parse_program(text, universe)


def pair(text_p: str, text_q: str):
    """Parse two programs over one fresh shared universe."""
    uni = Universe()
    return parse_program(text_p, uni), parse_program(text_q, uni), uni


def fmt_pairs(universe: Universe, pairs):
    """Render (x, y) mask pairs or ASEPairs for golden comparisons."""
    out = []
    for p in pairs:
        if hasattr(p, "x"):
            out.append(universe.fmt_pair(p.x, p.y))
        else:
            out.append(universe.fmt_pair(p[0], p[1]))
    return out


def random_pair(seed: int, atoms: int = 4, max_rules: int = 5, require=()):
    """Deterministic random program pair over one shared universe."""
    rng = random.Random(seed)
    uni = Universe("abcdefgh"[:atoms])
    req = frozenset(require)
    p = random_program(GeneratorConfig(atoms, rng.randint(0, max_rules), seed, req), uni)
    q = random_program(
        GeneratorConfig(atoms, rng.randint(0, max_rules), seed + 900001, req), uni
    )
    return p, q, uni, rng
