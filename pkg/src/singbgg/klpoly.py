"""Kazhdan-Lusztig polynomials and their singular alternating-sum variants.

The full table is computed bottom-up in length order with the standard
recursion.  Storage is sparse: only polynomials other than 0 and 1 are kept
explicitly; the 0/1 distinction is read off the Bruhat-order bitmasks.  The
singular variants are alternating sums of ordinary entries over a parabolic
subgroup, and the dominant-side wrapper conjugates the singularity set by
the longest element.
"""

from __future__ import annotations

import struct

from .bruhat import down_masks, iter_indices, leq
from .errors import DomainError, InputError
from .parabolic import SingularBlock, make_block
from .weyl import Element, WeylGroup, _compose, _invert

Coeffs = tuple[int, ...]

_ONE: Coeffs = (1,)


class IntPolynomial(tuple):
    """Integer polynomial in q, dense coefficient tuple, no trailing zeros."""

    def __new__(cls, coeffs=()):
        coeffs = tuple(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        return super().__new__(cls, coeffs)

    @property
    def degree(self) -> int:
        """Degree in q; -1 for the zero polynomial."""
        return len(self) - 1

    def __str__(self) -> str:
        if not self:
            return "0"
        terms = []
        for k, c in enumerate(self):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                q = "q" if k == 1 else f"q^{k}"
                if c == 1:
                    terms.append(q)
                elif c == -1:
                    terms.append(f"-{q}")
                else:
                    terms.append(f"{c}{q}")
        return "+".join(terms).replace("+-", "-")

    def __repr__(self) -> str:
        return f"IntPolynomial({str(self)})"


def _padd(a: Coeffs, b: Coeffs) -> Coeffs:
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + y for x, y in zip(a, b)) + a[len(b):]


def _psub(a: Coeffs, b: Coeffs) -> Coeffs:
    n = max(len(a), len(b))
    a = a + (0,) * (n - len(a))
    b = b + (0,) * (n - len(b))
    return tuple(x - y for x, y in zip(a, b))


def _pshift(a: Coeffs, k: int) -> Coeffs:
    return (0,) * k + a if a else ()


def _pscale(a: Coeffs, m: int) -> Coeffs:
    return tuple(m * x for x in a)


def _ptrim(a: Coeffs) -> Coeffs:
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n]


class KLTable:
    """Complete Kazhdan-Lusztig table for a fully enumerated group.

    Entries are keyed by element index pairs (y, w); pairs with y not below w
    read as 0, comparable pairs default to 1 unless stored explicitly.
    """

    def __init__(self, group: WeylGroup, _entries: dict | None = None):
        group.require_enumerated()
        self.group = group
        self._down = down_masks(group)
        if _entries is not None:
            self._poly = _entries
        else:
            self._poly = self._build()

    def _build(self) -> dict[tuple[int, int], Coeffs]:
        g = self.group
        down = self._down
        lengths = g._lengths
        words = g._words
        lmul = g._lmul
        poly: dict[tuple[int, int], Coeffs] = {}
        mu_rows: dict[int, list[tuple[int, int]]] = {}

        def get(yi: int, wi: int) -> Coeffs:
            if yi == wi:
                return _ONE
            if not (down[wi] >> yi & 1):
                return ()
            return poly.get((yi, wi), _ONE)

        for wi in range(g.order):
            lw = lengths[wi]
            if lw == 0:
                continue
            s = words[wi][0] - 1  # smallest left descent of w
            vi = lmul[s][wi]
            sl = lmul[s]
            zmu = [
                (zi, m, (lw - lengths[zi]) // 2)
                for zi, m in mu_rows.get(vi, ())
                if lengths[sl[zi]] < lengths[zi]
            ]
            results: dict[int, Coeffs] = {}
            dmask = down[wi]
            for yi in iter_indices(dmask):
                syi = sl[yi]
                if lengths[syi] > lengths[yi]:
                    continue  # handled by invariance below
                p = _padd(get(syi, vi), _pshift(get(yi, vi), 1))
                for zi, m, shift in zmu:
                    if down[zi] >> yi & 1:
                        q = get(yi, zi)
                        if q:
                            p = _psub(p, _pshift(_pscale(q, m), shift))
                results[yi] = _ptrim(p)
            for yi in iter_indices(dmask):
                syi = sl[yi]
                if lengths[syi] > lengths[yi]:
                    results[yi] = results[syi]
            row_mu = []
            for yi, p in results.items():
                d = lw - lengths[yi]
                if not p or p[0] != 1:
                    raise AssertionError("constant term of a KL polynomial is not 1")
                if yi != wi and 2 * (len(p) - 1) > d - 1:
                    raise AssertionError("KL degree bound violated")
                if p != _ONE:
                    poly[(yi, wi)] = p
                if d % 2 == 1:
                    k = (d - 1) // 2
                    if len(p) > k and p[k]:
                        row_mu.append((yi, p[k]))
            if row_mu:
                mu_rows[wi] = row_mu
        return poly

    # -- reads -----------------------------------------------------------------

    def polynomial_by_index(self, yi: int, wi: int) -> Coeffs:
        if yi == wi:
            return _ONE
        if not (self._down[wi] >> yi & 1):
            return ()
        return self._poly.get((yi, wi), _ONE)

    def polynomial(self, y: Element, w: Element) -> IntPolynomial:
        """P_{y,w}; 0 when y is not below w in Bruhat order."""
        return IntPolynomial(self.polynomial_by_index(y.index, w.index))

    def __len__(self) -> int:
        return len(self._poly)


def kl_table(g: WeylGroup) -> KLTable:
    return KLTable(g)


def mu_coefficient(t: KLTable, y: Element, w: Element) -> int:
    """Coefficient of q^((l(w)-l(y)-1)/2) in P_{y,w}; 0 on even gaps."""
    d = w.length - y.length
    if d <= 0 or d % 2 == 0:
        return 0
    p = t.polynomial_by_index(y.index, w.index)
    k = (d - 1) // 2
    return p[k] if len(p) > k else 0


def klv_polynomial(
    t: KLTable, b_mu: SingularBlock, y: Element, z: Element
) -> IntPolynomial:
    """Alternating sum of P_{y u, z} over u in the parabolic subgroup of b_mu.

    Both arguments must be minimal coset representatives for b_mu.
    """
    g = t.group
    for e in (y, z):
        if not b_mu.contains_min_rep(e):
            raise DomainError(f"{e!r} is not a minimal coset representative")
    zi = z.index
    acc: Coeffs = ()
    for ui in b_mu._wlambda_indices:
        yui = g._index[_compose(y.perm, g._perms[ui])]
        p = t.polynomial_by_index(yui, zi)
        if not p:
            continue
        acc = _padd(acc, p) if g._lengths[ui] % 2 == 0 else _psub(acc, p)
    return IntPolynomial(acc)


def _dominant_side_block(b: SingularBlock) -> SingularBlock:
    """Block for the singularity set conjugated by the longest element."""
    g = b.group
    if g._w0_conj_gens is None:
        w0 = g.longest_element().perm
        table = []
        for gp in g.generator_perms:
            p = _compose(_compose(w0, gp), _invert(w0))
            table.append(next(i for i, hp in enumerate(g.generator_perms) if hp == p))
        g._w0_conj_gens = table
    sigma = g._w0_conj_gens
    return make_block(g, frozenset(sigma[i - 1] + 1 for i in b.S))


def klv_dominant(
    t: KLTable, b: SingularBlock, w: Element, x: Element
) -> IntPolynomial:
    """The exactness-test polynomial for the pair (w, x) of longest
    representatives: the singular polynomial at arguments (x w0, w w0) for
    the conjugated singularity."""
    for e in (w, x):
        if not b.contains_max_rep(e):
            raise DomainError(f"{e!r} is not a longest coset representative")
    if not leq(w, x):
        raise DomainError(f"requires w <= x; got w={w!r}, x={x!r}")
    g = b.group
    w0 = g.longest_element()
    return klv_polynomial(t, _dominant_side_block(b), x * w0, w * w0)


# -- binary cache ---------------------------------------------------------------

_MAGIC = b"KLV1"


def save_table(t: KLTable, path) -> None:
    """Serialize the sparse table; see load_table for the layout."""
    g = t.group
    n = g.order
    out = bytearray()
    out += _MAGIC
    out += g.cartan.family.encode("ascii")
    out += struct.pack("<BI", g.rank, n)
    entries = sorted(t._poly.items())
    out += struct.pack("<I", len(entries))
    for (yi, wi), p in entries:
        out += struct.pack(f"<IIB{len(p)}i", yi, wi, len(p) - 1, *p)
    bits = bytearray((n * n + 7) // 8)
    down = t._down
    for wi in range(n):
        m = down[wi]
        for yi in iter_indices(m):
            pos = yi * n + wi
            bits[pos >> 3] |= 1 << (pos & 7)
    out += bytes(bits)
    with open(path, "wb") as fh:
        fh.write(out)


def load_table(g: WeylGroup, path) -> KLTable:
    """Read a table cache and validate its header and order bitset against g."""
    with open(path, "rb") as fh:
        data = fh.read()
    if data[:4] != _MAGIC:
        raise InputError(f"{path}: not a polynomial table cache")
    fam = data[4:5].decode("ascii")
    rank, n = struct.unpack_from("<BI", data, 5)
    if (fam, rank, n) != (g.cartan.family, g.rank, g.order):
        raise InputError(
            f"{path}: cache is for type {fam}{rank} ({n} elements), "
            f"group is {g.cartan} ({g.order} elements)"
        )
    off = 10
    (n_entries,) = struct.unpack_from("<I", data, off)
    off += 4
    poly: dict[tuple[int, int], Coeffs] = {}
    for _ in range(n_entries):
        yi, wi, deg = struct.unpack_from("<IIB", data, off)
        off += 9
        coeffs = struct.unpack_from(f"<{deg + 1}i", data, off)
        off += 4 * (deg + 1)
        poly[(yi, wi)] = coeffs
    nbytes = (n * n + 7) // 8
    bits = data[off:off + nbytes]
    if len(bits) != nbytes:
        raise InputError(f"{path}: truncated cache file")
    down = down_masks(g)
    for wi in range(n):
        m = down[wi]
        for yi in range(n):
            pos = yi * n + wi
            if bool(bits[pos >> 3] >> (pos & 7) & 1) != bool(m >> yi & 1):
                raise InputError(f"{path}: order bitset does not match the group")
    return KLTable(g, _entries=poly)
