"""Reproduce the classification of non-Kostant modules at small rank.

For each classical type of rank at most 4 (plus one F4 block), list every
singularity set whose block contains elements with a non-exact singular BGG
complex.  Ranks 1 and 2 are silent: every singular complex there is exact.
"""

import time
from itertools import chain, combinations

from singbgg import CartanType, build_group, kl_table, nonkostant_block


def subsets(rank):
    idx = range(1, rank + 1)
    return chain.from_iterable(combinations(idx, k) for k in range(rank + 1))


def show(fam, rank, only=None):
    t0 = time.time()
    g = build_group(CartanType(fam, rank))
    t = kl_table(g)
    print(f"== type {fam}{rank} ({g.order} elements) ==")
    for S in (only if only is not None else subsets(rank)):
        bad = nonkostant_block(g, frozenset(S), t)
        if bad:
            words = " ".join(
                "(" + "".join(map(str, w.reduced_word())) + ")" for w in bad)
            print(f"  S={set(S) or '{}'}: {words}")
    print(f"  [{time.time() - t0:.1f}s]\n")


for fam, rank in [("A", 1), ("A", 2), ("B", 2), ("G", 2),
                  ("A", 3), ("B", 3), ("A", 4), ("B", 4), ("D", 4)]:
    show(fam, rank)

# F4 is larger; a single block keeps the runtime pleasant.
show("F", 4, only=[(2, 3, 4)])
