"""Walk through a maximally singular block of B3, end to end.

We pick the singularity {2,3}, so the parabolic subgroup is the full B2
subgroup in the last two coordinates and there are only six cosets.  The
block poset (longest representatives) is a chain, and the most singular
dominant parameter has a two-term BGG complex which turns out to be exact.
"""

from singbgg import (
    CartanType,
    build_group,
    cut_equalities,
    is_kostant,
    kl_table,
    klv_dominant,
    leq,
    make_block,
    mobius_lambda,
    regular_skeleton,
    singular_skeleton,
    support_X,
    translate_skeleton,
)

g = build_group(CartanType("B", 3))
b = make_block(g, {2, 3})
t = kl_table(g)

print("W(B3) has", g.order, "elements;", len(b.min_reps), "cosets for S={2,3}")
print("longest representatives (a chain):")
for x in b.max_reps:
    print("  length", x.length, " word", x.reduced_word())

w = b.w0_lambda
print("\nmost singular dominant parameter: w =", w.reduced_word())

gs = support_X(w, b)
print("support X_w:", [x.reduced_word() for x in gs.flatten()])

sk = singular_skeleton(w, b)
print("singular complex:", len(sk.vertices), "terms,", len(sk.edges), "map(s)")

staged = cut_equalities(translate_skeleton(regular_skeleton(g, w), b))
print("cut-off pipeline gives the same skeleton:",
      staged.vertices == sk.vertices and staged.edges == sk.edges)

print("\nexactness certificates (one per x above w in the block):")
for x in b.max_reps:
    if not leq(w, x):
        continue
    m = mobius_lambda(w, x, b)
    p = klv_dominant(t, b, w, x)
    print(f"  x = {x.reduced_word()}  |mobius| = {abs(m)}  polynomial = {p}")

print("\nis the singular complex exact?", is_kostant(w, b, t))
print("same element in the regular block:",
      is_kostant(w, make_block(g, frozenset()), t))
