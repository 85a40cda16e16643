"""Möbius functions and graded support sets on the block poset.

The block poset is the set of longest coset representatives with the induced
Bruhat order.  Its Möbius function has a closed form: it vanishes exactly
when the full Bruhat interval between the endpoints leaves the representative
set, and is (-1)^(length difference) otherwise.  A generic recursive Möbius
oracle on explicit posets is provided for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bruhat import interval_mask, iter_indices, leq
from .errors import DomainError
from .parabolic import SingularBlock
from .weyl import Element


def mobius_oracle(elements, order, a, b) -> int:
    """Möbius function of the explicit poset (elements, order), by recursion.

    ``order`` is a binary predicate; returns 0 when a is not below b
    (incomparable-pair convention).  Memoized per call.
    """
    if not order(a, b):
        return 0
    below_b = [z for z in elements if order(z, b)]
    memo: dict = {}

    def mu(z) -> int:
        if z == b:
            return 1
        if z not in memo:
            memo[z] = -sum(mu(t) for t in below_b if order(z, t) and t != z)
        return memo[z]

    return mu(a)


def mobius_lambda(w: Element, x: Element, b: SingularBlock) -> int:
    """Closed-form Möbius value on the block poset.

    Zero if some element strictly between w and x (in the full Bruhat order)
    is not a longest coset representative, otherwise (-1)^(l(x)-l(w)).
    Incomparable pairs give 0.
    """
    for u in (w, x):
        if not b.contains_max_rep(u):
            raise DomainError(f"{u!r} is not a longest coset representative")
    if w == x:
        return 1
    if not leq(w, x):
        return 0
    g = b.group
    wi, xi = w.index, x.index
    interior = interval_mask(g, wi, xi) & ~(1 << wi) & ~(1 << xi)
    if interior & ~b._maxrep_mask:
        return 0
    return -1 if (x.length - w.length) % 2 else 1


@dataclass
class GradedSupport:
    """The support X_w, graded by length above the base element."""

    base: Element
    strata: list[list[Element]]
    block: SingularBlock

    def flatten(self) -> list[Element]:
        return [x for stratum in self.strata for x in stratum]

    def __contains__(self, x) -> bool:
        return any(x in stratum for stratum in self.strata)


def support_X(w: Element, b: SingularBlock) -> GradedSupport:
    """X_w = representatives x >= w with nonvanishing block Möbius value,
    graded by i = l(x) - l(w)."""
    if not b.contains_max_rep(w):
        raise DomainError(f"{w!r} is not a longest coset representative")
    g = b.group
    from .bruhat import up_masks

    candidates = up_masks(g)[w.index] & b._maxrep_mask
    by_level: dict[int, list[Element]] = {}
    for xi in iter_indices(candidates):
        x = g.element_by_index(xi)
        if mobius_lambda(w, x, b) != 0:
            by_level.setdefault(x.length - w.length, []).append(x)
    top = max(by_level)
    strata = []
    for i in range(top + 1):
        if i not in by_level:
            raise AssertionError(f"support of {w!r} has an empty stratum at {i}")
        strata.append(sorted(by_level[i]))
    return GradedSupport(base=w, strata=strata, block=b)
