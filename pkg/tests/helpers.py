"""Shared fixtures-free helpers for the test suite."""

from itertools import chain, combinations

from singbgg import CartanType, build_group, kl_table
from singbgg.weyl import _compose

_GROUPS = {}
_TABLES = {}


def get_group(fam, rank):
    key = (fam, rank)
    if key not in _GROUPS:
        _GROUPS[key] = build_group(CartanType(fam, rank))
    return _GROUPS[key]


def get_table(fam, rank):
    key = (fam, rank)
    if key not in _TABLES:
        _TABLES[key] = kl_table(get_group(fam, rank))
    return _TABLES[key]


def all_singularities(rank):
    idx = range(1, rank + 1)
    return [frozenset(c) for c in chain.from_iterable(
        combinations(idx, k) for k in range(rank + 1))]


RANK_LE_3 = [("A", 1), ("A", 2), ("B", 2), ("G", 2), ("A", 3), ("B", 3),
             ("C", 3), ("D", 3)]


def subword_leq(u, v):
    """Bruhat order oracle: u <= v iff u is a product of a subword of a fixed
    reduced word of v (dynamic programming over prefixes)."""
    g = u.group
    reach = {g.identity_perm}
    for s in v.reduced_word():
        gp = g.generator_perms[s - 1]
        reach |= {_compose(p, gp) for p in reach}
    return u.perm in reach
