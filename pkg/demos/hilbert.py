"""
Hilbert function of the canonical ideal
=======================================

After embedding K into H as an ideal w = e + K, the colength of w^n is
eventually the linear polynomial e0*n - e1.  The index where it becomes
linear is the canonical reduction number, and e1 counts the elements the
blow-up adds to H.
"""

from canred import NumericalSemigroup, hilbert_table

for gens in ([3, 4, 5], [4, 5, 11], [6, 7, 8, 9, 10]):
    H = NumericalSemigroup(gens)
    t = hilbert_table(H, H.multiplicity + 3)
    print(f"{str(H):<18} e0={t.e0} e1={t.e1} stabilizes at n={t.stabilization}")
    for n, v in enumerate(t.values):
        mark = "" if n >= t.stabilization else "   (not yet linear)"
        print(f"    n={n}  HF={v:<4} e0*n-e1={t.e0 * n - t.e1}{mark}")
