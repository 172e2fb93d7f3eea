"""
Canonical reduction number of a three-generated family
======================================================

For each n the semigroup <n, n+1, n^2-n-1> has two pseudo-Frobenius
numbers, so its ring has type 2.  The canonical ideal is K = {0, 1} + H and
its powers stop growing after exactly n - 1 steps.
"""

from canred import NumericalSemigroup, can_red, canonical_ideal

for n in range(3, 9):
    H = NumericalSemigroup([n, n + 1, n * n - n - 1])
    K = canonical_ideal(H)
    print(f"{str(H):<22} PF={sorted(H.pf)}  K={K.describe()}  can_red={can_red(H)}")

# The powers themselves, for n = 4: each K^j adds the next integer
# until the stable blow-up (here all of Z>=0) is reached.
H = NumericalSemigroup([4, 5, 11])
K = canonical_ideal(H)
for j in range(5):
    print(f"K^{j} = {K.power(j).describe()}")
