"""The colon-ideal calculus: intersection, quotient, saturation, radicals.

These four operations carry the whole linkage story, since over a cyclic
module R/J the module colon IM :_M a is just the ideal quotient (I+J) : a.
"""

from liaison import (
    Ideal,
    PolyRing,
    QQ,
    ideal_quotient,
    intersect_ideals,
    radical_membership,
    radicals_equal,
    saturate,
)

ring = PolyRing(QQ, ["x", "y"])
x, y = ring.gens()

print("# intersection via elimination of an auxiliary variable")
print("(x) cap (y) =", intersect_ideals(Ideal(ring, (x,)), Ideal(ring, (y,))).gens)

print()
print("# colon ideals")
print("(xy) : (x) =", ideal_quotient(Ideal(ring, (x * y,)), Ideal(ring, (x,))).groebner())
print(
    "(x^2, y) : (x, y) =",
    ideal_quotient(Ideal(ring, (x**2, y)), Ideal(ring, (x, y))).groebner(),
)

print()
print("# saturation iterates the quotient to a fixed point")
print(
    "(x^2*y) : (y)^inf =",
    saturate(Ideal(ring, (x**2 * y,)), Ideal(ring, (y,))).groebner(),
)
print(
    "(x^2, x*y) : (x)^inf =",
    saturate(Ideal(ring, (x**2, x * y)), Ideal(ring, (x,))).groebner(),
)

print()
print("# radical membership without computing the radical")
print("x in sqrt(x^2):", radical_membership(x, Ideal(ring, (x**2,))))
print("x in sqrt(y):", radical_membership(x, Ideal(ring, (y,))))
print(
    "sqrt(xy) = sqrt((x) cap (y)):",
    radicals_equal(
        Ideal(ring, (x * y,)),
        intersect_ideals(Ideal(ring, (x,)), Ideal(ring, (y,))),
    ),
)
