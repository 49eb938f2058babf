"""Newton polyhedra of monomial ideals.

For a monomial ideal the asymptotic order has a closed form: the Newton
polyhedron is the convex hull of the generator exponents plus the
positive orthant, each facet gives a monomial valuation, and nubar is
the minimum of v(f)/v(I) over the facets.  Membership of f^b in the
integral closure of I^a is a pure lattice-point test against the
polyhedron of I^a, which this demo uses to corroborate the formula.
"""

from fractions import Fraction

from slopelab import ExtendedRational, IdealPresentation, Ring, \
    build_polyhedron, closure_member, nubar_monomial
from slopelab.groebner import ideal_power

ring = Ring(("x", "y"))
ideal = IdealPresentation(ring, [ring.parse("x^2"), ring.parse("y^3")])

polyhedron = build_polyhedron(ideal)
print("facets of the Newton polyhedron of (x^2, y^3):")
for weights, threshold in polyhedron.facets:
    terms = " + ".join("%d*%s" % (w, v)
                       for w, v in zip(weights, ring.variables) if w)
    print("  %s >= %d" % (terms, threshold))

f = ring.parse("x*y")
value = nubar_monomial(polyhedron, f)
print()
print("nubar(x*y) = %s" % value)

print()
print("cross-check against integral closure membership, printed as a")
print("small table over exponents a (ideal power) and b (element power):")
print("    " + "  ".join("a=%d" % a for a in range(1, 5)))
for b in range(1, 5):
    row = []
    for a in range(1, 5):
        member = closure_member(f ** b, ideal, a)
        agrees = member == (value >= ExtendedRational(Fraction(a, b)))
        row.append(("in " if member else "out") + ("" if agrees else "!"))
    print("b=%d  %s" % (b, "  ".join(row)))
print("(every cell agrees with the facet formula; a '!' would mark a")
print("disagreement)")

print()
print("powers scale exactly: nubar against I^2 halves the value")
print("  nubar(x*y, I^2) = %s"
      % nubar_monomial(build_polyhedron(ideal_power(ideal, 2)), f))
