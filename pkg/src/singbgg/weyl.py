"""Finite Weyl groups with exact element arithmetic.

Elements act on the set of positive roots with sign flags: an element is
stored as a tuple ``perm`` with ``perm[i] = +-(j+1)`` meaning that the i-th
positive root is mapped to plus or minus the j-th positive root.  This gives
O(N) multiplication for all types uniformly and no floating point anywhere.

Groups of order up to the element budget (default 1152, override with the
``BGG_ELEMENT_BUDGET`` environment variable) are fully enumerated at build
time, with elements indexed by (length, ShortLex reduced word).  Larger
groups (the big E types) still support element arithmetic but refuse
full-table operations.
"""

from __future__ import annotations

import os
from functools import total_ordering

from .cartan import CartanType, RootVector, dot, positive_roots, reflect
from .errors import BudgetError, InputError

DEFAULT_ELEMENT_BUDGET = 1152

Perm = tuple[int, ...]


def _compose(pu: Perm, pv: Perm) -> Perm:
    """Permutation of u*v, where (u*v)(beta) = u(v(beta))."""
    out = []
    for a in pv:
        b = pu[a - 1] if a > 0 else -pu[-a - 1]
        out.append(b)
    return tuple(out)


def _invert(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, a in enumerate(p, start=1):
        if a > 0:
            out[a - 1] = i
        else:
            out[-a - 1] = -i
    return tuple(out)


def _num_inversions(p: Perm) -> int:
    return sum(1 for a in p if a < 0)


def _element_budget() -> int:
    raw = os.environ.get("BGG_ELEMENT_BUDGET")
    if raw is None:
        return DEFAULT_ELEMENT_BUDGET
    try:
        return int(raw)
    except ValueError as exc:
        raise InputError(f"BGG_ELEMENT_BUDGET must be an integer, got {raw!r}") from exc


class WeylGroup:
    """Immutable presentation of a finite Weyl group.

    Use :func:`build_group`; do not construct directly.
    """

    def __init__(self, cartan: CartanType, budget: int | None = None):
        self.cartan = cartan
        self.budget = _element_budget() if budget is None else budget
        self.positive_roots: list[RootVector] = positive_roots(cartan)
        self.rank = cartan.rank
        self.order = cartan.group_order
        n_pos = len(self.positive_roots)

        self.generator_perms: list[Perm] = []
        for i in range(self.rank):
            alpha = self.positive_roots[i]
            self.generator_perms.append(self._root_action_perm(alpha))
        self.identity_perm: Perm = tuple(range(1, n_pos + 1))

        self._enumerated = False
        if self.order <= self.budget:
            self._enumerate()
        # lazily built caches
        self._covers_upper: list[list[int]] | None = None
        self._covers_lower: list[list[int]] | None = None
        self._down_masks: list[int] | None = None
        self._up_masks: list[int] | None = None
        self._blocks: dict[frozenset[int], object] = {}
        self._w0_conj_gens: list[int] | None = None

    # -- construction helpers -------------------------------------------------

    def _root_action_perm(self, alpha: RootVector) -> Perm:
        """Signed permutation of the positive roots induced by s_alpha."""
        index = {r: i for i, r in enumerate(self.positive_roots)}
        out = []
        for beta in self.positive_roots:
            gamma = reflect(beta, alpha)
            if gamma in index:
                out.append(index[gamma] + 1)
            else:
                neg = tuple(-c for c in gamma)
                out.append(-(index[neg] + 1))
        return tuple(out)

    def _enumerate(self) -> None:
        gens = self.generator_perms
        seen = {self.identity_perm}
        frontier = [self.identity_perm]
        while frontier:
            p = frontier.pop()
            for gp in gens:
                q = _compose(p, gp)
                if q not in seen:
                    seen.add(q)
                    frontier.append(q)
        if len(seen) != self.order:
            raise AssertionError(
                f"BFS closure found {len(seen)} elements, expected {self.order}"
            )
        decorated = sorted(
            (_num_inversions(p), self._shortlex_word(p), p) for p in seen
        )
        self._perms: list[Perm] = [p for _, _, p in decorated]
        self._lengths: list[int] = [l for l, _, _ in decorated]
        self._words: list[tuple[int, ...]] = [w for _, w, _ in decorated]
        self._index: dict[Perm, int] = {p: i for i, p in enumerate(self._perms)}
        n = self.order
        self._inv: list[int] = [self._index[_invert(p)] for p in self._perms]
        self._rmul: list[list[int]] = [
            [self._index[_compose(p, gp)] for p in self._perms]
            for gp in gens
        ]
        self._lmul: list[list[int]] = [
            [self._inv[self._rmul[s][self._inv[i]]] for i in range(n)]
            for s in range(self.rank)
        ]
        self._enumerated = True

    def _shortlex_word(self, p: Perm) -> tuple[int, ...]:
        """ShortLex-minimal reduced word: repeatedly strip the smallest left descent."""
        word = []
        cur = p
        while True:
            inv = _invert(cur)
            for i in range(self.rank):
                if inv[i] < 0:  # l(s_i * cur) < l(cur)
                    break
            else:
                break
            word.append(i + 1)
            cur = _compose(self.generator_perms[i], cur)
        return tuple(word)

    # -- basic API ------------------------------------------------------------

    @property
    def enumerated(self) -> bool:
        return self._enumerated

    def require_enumerated(self) -> None:
        if not self._enumerated:
            raise BudgetError(
                f"group {self.cartan} has {self.order} elements, above the "
                f"budget of {self.budget}; raise BGG_ELEMENT_BUDGET to enable "
                f"full-table operations (consider sharding the workload)"
            )

    @property
    def identity(self) -> "Element":
        return Element(self, self.identity_perm)

    def generator(self, i: int) -> "Element":
        """Simple reflection s_i, 1-based."""
        if not 1 <= i <= self.rank:
            raise InputError(f"generator index {i} out of range 1..{self.rank}")
        return Element(self, self.generator_perms[i - 1])

    def from_word(self, word) -> "Element":
        """Product of the listed simple reflections, left to right."""
        p = self.identity_perm
        for i in word:
            if not isinstance(i, int) or not 1 <= i <= self.rank:
                raise InputError(f"generator index {i!r} out of range 1..{self.rank}")
            p = _compose(p, self.generator_perms[i - 1])
        return Element(self, p)

    def longest_element(self) -> "Element":
        """The unique element of maximal length (greedy ascent, no table needed)."""
        p = self.identity_perm
        while True:
            for s, gp in enumerate(self.generator_perms):
                if p[s] > 0:  # l(w s) > l(w): alpha_s not sent negative
                    p = _compose(p, gp)
                    break
            else:
                return Element(self, p)

    def element_by_index(self, i: int) -> "Element":
        self.require_enumerated()
        e = Element(self, self._perms[i])
        e._index = i
        e._length = self._lengths[i]
        e._word = self._words[i]
        return e

    def elements(self):
        """All elements sorted by (length, ShortLex word)."""
        self.require_enumerated()
        return [self.element_by_index(i) for i in range(self.order)]

    def index_of(self, w: "Element") -> int:
        self.require_enumerated()
        return self._index[w.perm]

    def __repr__(self) -> str:
        return f"WeylGroup({self.cartan.family!r}, {self.rank})"

    # -- index-level tables used by the heavier modules -----------------------

    def lmul_index(self, s: int, i: int) -> int:
        """Index of s_{s+1} * w_i (s is 0-based here)."""
        return self._lmul[s][i]

    def rmul_index(self, s: int, i: int) -> int:
        return self._rmul[s][i]


@total_ordering
class Element:
    """A Weyl group element: signed-root permutation with cached length."""

    __slots__ = ("group", "perm", "_length", "_word", "_index")

    def __init__(self, group: WeylGroup, perm: Perm):
        self.group = group
        self.perm = perm
        self._length: int | None = None
        self._word: tuple[int, ...] | None = None
        self._index: int | None = None

    @property
    def length(self) -> int:
        if self._length is None:
            self._length = _num_inversions(self.perm)
        return self._length

    @property
    def index(self) -> int:
        if self._index is None:
            self._index = self.group.index_of(self)
        return self._index

    def reduced_word(self) -> tuple[int, ...]:
        if self._word is None:
            self._word = self.group._shortlex_word(self.perm)
        return self._word

    def __mul__(self, other: "Element") -> "Element":
        if other.group is not self.group:
            raise InputError("cannot multiply elements of different groups")
        return Element(self.group, _compose(self.perm, other.perm))

    def inverse(self) -> "Element":
        return Element(self.group, _invert(self.perm))

    def left_descents(self) -> set[int]:
        """{ s : l(s w) < l(w) }, read off from the signs of w^{-1} on simples."""
        inv = _invert(self.perm)
        return {i + 1 for i in range(self.group.rank) if inv[i] < 0}

    def right_descents(self) -> set[int]:
        return {i + 1 for i in range(self.group.rank) if self.perm[i] < 0}

    def is_identity(self) -> bool:
        return self.perm == self.group.identity_perm

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Element)
            and other.group is self.group
            and other.perm == self.perm
        )

    def __lt__(self, other: "Element") -> bool:
        """Deterministic (length, ShortLex word) order; not the Bruhat order."""
        return (self.length, self.reduced_word()) < (other.length, other.reduced_word())

    def __hash__(self) -> int:
        return hash(self.perm)

    def __repr__(self) -> str:
        word = "".join(str(i) for i in self.reduced_word()) or "e"
        return f"<{word}>"


_GROUP_CACHE: dict[tuple[str, int, int], WeylGroup] = {}


def build_group(cartan: CartanType, budget: int | None = None) -> WeylGroup:
    """Construct (and cache) the Weyl group of the given Cartan type."""
    key = (cartan.family, cartan.rank, _element_budget() if budget is None else budget)
    if key not in _GROUP_CACHE:
        _GROUP_CACHE[key] = WeylGroup(cartan, budget=key[2])
    return _GROUP_CACHE[key]


# Functional aliases mirroring the operation names used throughout the docs.

def from_word(g: WeylGroup, word) -> Element:
    return g.from_word(word)


def reduced_word(w: Element) -> tuple[int, ...]:
    return w.reduced_word()


def multiply(u: Element, v: Element) -> Element:
    return u * v


def inverse(w: Element) -> Element:
    return w.inverse()


def left_descents(w: Element) -> set[int]:
    return w.left_descents()


def longest_element(g: WeylGroup) -> Element:
    return g.longest_element()
