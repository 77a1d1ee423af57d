#!/usr/bin/env python3
"""The implication calculus and the dihedral clique closures.

A 4- or 5-cycle whose sides carry known edge types and whose diagonals all
carry one type forces that type.  Run inside a dihedral orbit, the rule
says: one contained chord makes the whole orbit a clique, for both the
8-gon and the 10-gon.
"""

from cox245.complexgraph import cayley_vertex
from cox245.coxeter import element_of_word, identity
from cox245.edgetypes import type_key_cayley
from cox245.implications import (
    CycleWitness,
    DIHEDRAL_CHORD_LABELS,
    ImplicationState,
    check_elementary,
    dihedral_closure,
)


def ckey(w):
    return type_key_cayley(identity(), element_of_word(w))


def cyc(*words):
    return CycleWitness(tuple(cayley_vertex(element_of_word(w)) for w in words))


state = ImplicationState.initial([ckey(w) for w in ("tr", "tst", "rsr")])
cycle = cyc("", "tr", "tsr", "tst")
derived = check_elementary(state, cycle)
print("from {tr, tst, rsr} the square (e, tr, tsr, tst) forces:", derived.serialize())

state5 = ImplicationState.initial([ckey("trst")])
cycle5 = cyc("", "trst", "trsrst", "tsrt")
print("from {trst} the cycle (e, trst, trsrst, tsrt) forces:",
      check_elementary(state5, cycle5).serialize())

print()
print("dihedral chord closures (every single seed fills the whole orbit):")
for m in (4, 5):
    print(f"  2m-gon with m = {m}; chord classes {DIHEDRAL_CHORD_LABELS[m]}")
    for seed in DIHEDRAL_CHORD_LABELS[m]:
        got = dihedral_closure(m, seed)
        print(f"    seed {seed:>2} -> {sorted(got)}")
