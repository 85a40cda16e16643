"""Singularity data: parabolic subgroups and coset representatives.

A singularity set S of simple-root indices generates the parabolic subgroup
W_lambda.  The block object carries the minimal coset representatives
(no reduced expression ends in a singular reflection), the longest ones
(minimal representatives times the longest element of W_lambda), and the
right-coset analogues obtained by inversion.
"""

from __future__ import annotations

from fractions import Fraction

from .bruhat import leq
from .cartan import CartanType, dot
from .errors import DomainError, InputError
from .weyl import Element, WeylGroup, _compose


class SingularBlock:
    """Derived data of a parabolic subgroup W_lambda; immutable after build."""

    def __init__(self, g: WeylGroup, S: frozenset[int]):
        g.require_enumerated()
        self.group = g
        self.S = S

        gens0 = sorted(i - 1 for i in S)
        seen = {0}
        frontier = [0]
        while frontier:
            i = frontier.pop()
            for s in gens0:
                j = g.rmul_index(s, i)
                if j not in seen:
                    seen.add(j)
                    frontier.append(j)
        self._wlambda_indices = sorted(seen)
        self._wlambda_mask = 0
        for i in seen:
            self._wlambda_mask |= 1 << i
        self._w0_lambda_idx = max(seen, key=lambda i: g._lengths[i])

        # minimal representatives: no right descent inside S
        minrep = []
        for i, p in enumerate(g._perms):
            if all(p[s] > 0 for s in gens0):
                minrep.append(i)
        self._minrep_indices = minrep
        self._minrep_mask = 0
        for i in minrep:
            self._minrep_mask |= 1 << i

        w0l = g._perms[self._w0_lambda_idx]
        self._maxrep_indices = sorted(
            g._index[_compose(g._perms[i], w0l)] for i in minrep
        )
        self._maxrep_mask = 0
        for i in self._maxrep_indices:
            self._maxrep_mask |= 1 << i

        self._right_min_indices = sorted(g._inv[i] for i in minrep)
        self._right_max_indices = sorted(g._inv[i] for i in self._maxrep_indices)

    # -- element views (sorted by (length, ShortLex word) = index order) ------

    @property
    def W_lambda(self) -> list[Element]:
        return [self.group.element_by_index(i) for i in self._wlambda_indices]

    @property
    def w0_lambda(self) -> Element:
        return self.group.element_by_index(self._w0_lambda_idx)

    @property
    def min_reps(self) -> list[Element]:
        """W^lambda: minimal length representatives of W / W_lambda."""
        return [self.group.element_by_index(i) for i in self._minrep_indices]

    @property
    def max_reps(self) -> list[Element]:
        """The longest coset representatives (min_reps times w0_lambda)."""
        return [self.group.element_by_index(i) for i in self._maxrep_indices]

    @property
    def right_min_reps(self) -> list[Element]:
        """Minimal representatives of the right cosets W_lambda \\ W."""
        return [self.group.element_by_index(i) for i in self._right_min_indices]

    @property
    def right_max_reps(self) -> list[Element]:
        """Longest representatives of the right cosets W_lambda \\ W."""
        return [self.group.element_by_index(i) for i in self._right_max_indices]

    def contains_max_rep(self, w: Element) -> bool:
        return bool(self._maxrep_mask >> w.index & 1)

    def contains_min_rep(self, w: Element) -> bool:
        return bool(self._minrep_mask >> w.index & 1)

    def coset(self, x: Element) -> list[Element]:
        """The coset x W_lambda, as elements."""
        return sorted(x * t for t in self.W_lambda)

    def __repr__(self) -> str:
        return f"SingularBlock({self.group.cartan}, S={sorted(self.S)})"


def make_block(g: WeylGroup, S) -> SingularBlock:
    """Build (and cache per group) the block data for singularity set S."""
    S = frozenset(S)
    for i in S:
        if not isinstance(i, int) or not 1 <= i <= g.rank:
            raise InputError(f"singular index {i!r} out of range 1..{g.rank}")
    if S not in g._blocks:
        g._blocks[S] = SingularBlock(g, S)
    return g._blocks[S]  # type: ignore[return-value]


def kostant_decompose(v: Element, b: SingularBlock) -> tuple[Element, Element]:
    """Unique factorization v = v^lambda * v_lambda with additive lengths."""
    g = b.group
    u = v
    tail = g.identity
    while True:
        rd = u.right_descents() & b.S
        if not rd:
            return u, tail
        s = g.generator(min(rd))
        u = u * s
        tail = s * tail


def coset_extremum(
    w: Element, x: Element, b: SingularBlock, direction: str
) -> Element:
    """Unique maximum of [e,w] ∩ xW_lambda, or unique minimum of [w,w0] ∩ xW_lambda.

    Uniqueness is asserted against the enumerated intersection, never assumed.
    """
    if not b.contains_min_rep(x):
        raise DomainError(f"{x!r} is not a minimal coset representative")
    if direction == "max_below":
        if not leq(x, w):
            raise DomainError(f"max_below requires x <= w; got x={x!r}, w={w!r}")
        members = [z for z in b.coset(x) if leq(z, w)]
        extrema = [z for z in members if not any(leq(z, t) and z != t for t in members)]
    elif direction == "min_above":
        if not leq(w, x):
            raise DomainError(f"min_above requires w <= x; got w={w!r}, x={x!r}")
        members = [z for z in b.coset(x) if leq(w, z)]
        extrema = [z for z in members if not any(leq(t, z) and z != t for t in members)]
    else:
        raise InputError(f"unknown direction {direction!r}")
    if not members:
        raise DomainError("empty intersection")
    if len(extrema) != 1:
        raise AssertionError(
            f"intersection has {len(extrema)} extremal elements, expected 1"
        )
    return extrema[0]


def _intersection_pairs(
    members: list[Element], b: SingularBlock
) -> list[tuple[Element, Element]]:
    """Perfect matching of [w,w0] ∩ xW_lambda into Bruhat-cover pairs.

    The intersection is carried to an interval [y, w0^lambda] in W_lambda via
    the Kostant component of its unique minimum; there it is matched by left
    multiplication with the smallest singular generator ascending from y.
    """
    g = b.group
    minima = [z for z in members if not any(leq(t, z) and z != t for t in members)]
    if len(minima) != 1:
        raise AssertionError("intersection has no unique minimum")
    x_min, y = kostant_decompose(minima[0], b)

    choices = [s for s in sorted(b.S) if (g.generator(s) * y).length > y.length]
    if not choices:
        raise DomainError("intersection is a singleton; nothing to pair")
    s = g.generator(choices[0])

    by_component = {kostant_decompose(z, b)[1]: z for z in members}
    pairs = []
    done = set()
    for t, z in sorted(by_component.items()):
        if t in done:
            continue
        st = s * t
        partner = by_component.get(st)
        if partner is None:
            raise AssertionError("matching partner left the intersection")
        done.add(t)
        done.add(st)
        lo, hi = (z, partner) if z.length < partner.length else (partner, z)
        if hi.length != lo.length + 1:
            raise AssertionError("matched pair is not a cover pair")
        pairs.append((lo, hi))
    pairs.sort(key=lambda p: (p[0].length, p[0].reduced_word()))
    return pairs


def partition_pairs(
    w: Element, x: Element, b: SingularBlock
) -> list[tuple[Element, Element]]:
    """Matching of [w,w0] ∩ xW_lambda into cover pairs (z, z') with z -> z'."""
    if not b.contains_min_rep(x):
        raise DomainError(f"{x!r} is not a minimal coset representative")
    if not leq(w, x):
        raise DomainError(f"partition_pairs requires w <= x; got w={w!r}, x={x!r}")
    members = [z for z in b.coset(x) if leq(w, z)]
    if len(members) <= 1:
        raise DomainError("intersection is a singleton")
    return _intersection_pairs(members, b)


def singularity_from_weight(cartan: CartanType, coords) -> frozenset[int]:
    """Singular simple roots of a dominant weight given as lambda+rho coordinates."""
    if cartan.family not in ("A", "B", "C", "D"):
        raise InputError(
            "weight coordinates are supported for classical families only; "
            "specify the singularity set directly for exceptional types"
        )
    expected_len = cartan.rank + 1 if cartan.family == "A" else cartan.rank
    vec = tuple(Fraction(c) for c in coords)
    if len(vec) != expected_len:
        raise InputError(
            f"type {cartan} expects {expected_len} coordinates, got {len(vec)}"
        )
    simples = cartan.simple_root_vectors()
    S = set()
    for i, alpha in enumerate(simples, start=1):
        pairing = dot(vec, alpha)
        if pairing < 0:
            raise InputError(f"weight is not dominant: <lambda+rho, alpha_{i}> < 0")
        if pairing == 0:
            S.add(i)
    return frozenset(S)


def hat_map(w: Element) -> Element:
    """w |-> w^{-1} w0; restricted to the longest coset representatives this
    is a bijection onto the minimal right-coset representatives."""
    return w.inverse() * w.group.longest_element()


def complementary_singularity(b: SingularBlock) -> frozenset[int]:
    return frozenset(range(1, b.group.rank + 1)) - b.S
