"""
Gorenstein, almost Gorenstein and nearly Gorenstein
===================================================

``classify`` computes every invariant of a semigroup ring and checks the
known equivalences between them before returning.  A failed cross-check
raises ``TheoremViolation`` with both sides of the broken equality.
"""

from canred import NumericalSemigroup, classify

for gens in ([2, 3], [3, 4, 5], [4, 5, 11], [5, 6, 7], [4, 6, 9]):
    r = classify(NumericalSemigroup(gens))
    print(f"{str(r.semigroup):<14} type={r.cm_type} can_red={r.can_red} e1={r.e1} "
          f"gor={r.gorenstein} ag={r.almost_gorenstein} ng={r.nearly_gorenstein}")

# The trace of the canonical ideal decides nearly Gorensteinness:
# for <4,5,11> it is the whole maximal ideal, even though can_red = 3.
r = classify(NumericalSemigroup([4, 5, 11]))
print("trace of K for <4,5,11>:", r.trace.describe())
