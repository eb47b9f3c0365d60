#!/usr/bin/env python3
"""Cross-check the deciders against definitional oracles on random programs.

For each seeded random pair the script compares:

* decide_uniform / decide_rel_uniform against fact-set enumeration,
* decide_rel_strong against the unary-context signature (alphabets of at
  most two atoms),
* the Horn deciders against the generic enumerator on Horn pairs,
* check_shift_safe against deciding equivalence of the shifted program.

Example::

    python3 scripts/random_agreement.py --pairs 200 --atoms 4 --seed 1
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from aspeq.equivalence import (
    brute_force_oracle,
    decide_horn_bounded,
    decide_horn_rel,
    decide_rel_strong,
    decide_rel_uniform,
)
from aspeq.harness import GeneratorConfig, random_program, unary_signature
from aspeq.se import decide_uniform
from aspeq.semantics import submasks
from aspeq.syntax import Universe
from aspeq.transforms import check_shift_safe, shift_one

ATOM_NAMES = "abcdefgh"


def make_pair(seed: int, atoms: int, max_rules: int, require=()):
    rng = random.Random(seed)
    uni = Universe(ATOM_NAMES[:atoms])
    req = frozenset(require)
    p = random_program(GeneratorConfig(atoms, rng.randint(0, max_rules), seed, req), uni)
    q = random_program(
        GeneratorConfig(atoms, rng.randint(0, max_rules), seed + 900001, req), uni
    )
    return p, q, uni, rng


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--pairs", type=int, default=200)
    parser.add_argument("--atoms", type=int, default=4, choices=range(2, 7))
    parser.add_argument("--max-rules", type=int, default=4)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    checks = disagreements = 0
    start = time.perf_counter()
    for i in range(args.pairs):
        seed = args.seed + i

        p, q, uni, rng = make_pair(seed, args.atoms, args.max_rules)
        over = uni.full_mask
        a = rng.randint(0, over)
        uniform = decide_rel_uniform(p, q, a, method="generic").equivalent
        checks += 1
        if uniform != brute_force_oracle(p, q, a, "uniform").equivalent:
            disagreements += 1
            print(f"uniform disagreement at seed {seed}, alphabet {uni.fmt(a)}")
        if a == over:
            checks += 1
            if uniform != decide_uniform(p, q).equivalent:
                disagreements += 1
                print(f"full-alphabet uniform disagreement at seed {seed}")

        small = rng.choice([m for m in submasks(over) if m.bit_count() <= 2])
        checks += 1
        strong = decide_rel_strong(p, q, small, method="generic").equivalent
        if strong != (unary_signature(p, small, over) == unary_signature(q, small, over)):
            disagreements += 1
            print(f"strong disagreement at seed {seed}, alphabet {uni.fmt(small)}")

        hp, hq, huni, hrng = make_pair(seed, args.atoms, args.max_rules, require=["horn"])
        ha = hrng.randint(0, huni.full_mask)
        want = decide_rel_strong(hp, hq, ha, method="generic").equivalent
        for decider in (decide_horn_rel, decide_horn_bounded):
            checks += 1
            if decider(hp, hq, ha).equivalent != want:
                disagreements += 1
                print(f"{decider.__name__} disagreement at seed {seed}")

        sp, _, suni, srng = make_pair(seed, args.atoms, args.max_rules)
        sa = srng.randint(0, suni.full_mask)
        for r in sp.rules:
            if r.head.bit_count() < 2:
                continue
            checks += 1
            safe = check_shift_safe(sp, r, sa)
            if safe != decide_rel_strong(sp, shift_one(sp, r), sa, method="generic").equivalent:
                disagreements += 1
                print(f"shift-safety disagreement at seed {seed}")

    elapsed = time.perf_counter() - start
    print(f"{checks} checks over {args.pairs} seeds in {elapsed:.1f}s, "
          f"{disagreements} disagreements")
    return 1 if disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
