"""
Idealizations of a Gorenstein semigroup ring
============================================

Over a symmetric semigroup every over-semigroup B matches a trace ideal
H - B.  Idealizing along such an ideal I gives a ring of type r(R/I) + 2,
which is computed here in two unrelated ways.
"""

from canred import NumericalSemigroup, RelativeIdeal
from canred.errors import GorensteinIdealization
from canred.idealization import (idealization_type, over_semigroups,
                                 verify_trace_extension_bijection)

H = NumericalSemigroup([3, 5])
unit = RelativeIdeal.unit(H)
print(f"over-semigroups of {H}; correspondence holds:",
      verify_trace_extension_bijection(H))
for B in over_semigroups(H):
    I = unit.colon(B)
    try:
        rep = idealization_type(H, I)
        kind = f"type via socle {rep.type_via_socle}, via generators {rep.type_via_mu}"
    except GorensteinIdealization:
        kind = "I = H, the idealization is Gorenstein"
    print(f"  B={B.describe():<18} I={I.describe():<18} {kind}")
