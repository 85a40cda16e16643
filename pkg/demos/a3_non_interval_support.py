"""A singular BGG complex whose support is not a Bruhat interval.

In A3 with the middle root singular, the element w = s3 s1 s2 has a graded
support with strata of sizes (1, 3, 2).  The top of the group, w0, drops
out because the interval from w to w0 leaves the set of longest coset
representatives, killing the Möbius value.  The complex is exact anyway.
"""

from singbgg import (
    CartanType,
    build_group,
    interval,
    is_kostant,
    kl_table,
    make_block,
    mobius_lambda,
    singular_skeleton,
    support_X,
)

g = build_group(CartanType("A", 3))
b = make_block(g, {2})
w = g.from_word([3, 1, 2])

gs = support_X(w, b)
print("strata of X_w for w =", w.reduced_word())
for i, stratum in enumerate(gs.strata):
    print(f"  degree {i}:", [x.reduced_word() for x in stratum])

w0 = g.longest_element()
print("\nw0 =", w0.reduced_word(), "is above w but has Möbius value",
      mobius_lambda(w, w0, b))
leak = [z for z in interval(w, w0) if not b.contains_max_rep(z)]
print("witnesses that the interval exits the representative set:",
      [z.reduced_word() for z in leak][:3], "...")

sk = singular_skeleton(w, b)
print("\nskeleton:", len(sk.vertices), "vertices,", len(sk.edges), "arrows")
for e in sk.edges:
    print("  ", e.source.reduced_word(), "->", e.target.reduced_word())

t = kl_table(g)
print("\nexact?", is_kostant(w, b, t))
