"""Canonical ideal, canonical reduction number and the classification built on them.

Everything is computed on the semigroup side.  With K the fractional
canonical ideal normalized so ``0 = min(K)``, the powers K^0 = H ⊆ K ⊆ K^2 ⊆
... increase to the blow-up B = R[ω/a], an over-semigroup of H.  The canonical
reduction number is the first n with K^n = K^(n+1).
"""

from dataclasses import dataclass, field

from .errors import (BoundExceeded, NMaxTooSmall, NotIntegral,
                     TheoremViolation, ZeroQuotient)
from .relideal import RelativeIdeal
from .semigroup import NumericalSemigroup, pseudo_frobenius

CHECKS = (
    "gorenstein",          # can.red = 0 iff symmetric iff trace = H; never 1
    "trace_dual",          # can.red <= 2 iff trace ≅ H - K
    "hilbert",             # Hilbert function is linear exactly from can.red on
    "multiplicity_bound",  # can.red <= multiplicity - 1
    "ag_routes",           # e1 <= type iff M + K ⊆ H
    "ag_ng_bridge",        # AG iff NG and can.red <= 2 iff NG and R/(R:B) Gorenstein
)


def _stable_cap(H):
    return 2 * H.conductor + H.multiplicity


def canonical_ideal(H):
    """K = {f - c : c in PF(H)} + H, checked against {z : f - z not in H}."""
    f = H.frobenius
    K = RelativeIdeal.from_elements(H, [f - c for c in pseudo_frobenius(H)])
    L = H.window_length
    window = 0
    for z in range(L):
        if not H.contains(f - z):
            window |= 1 << z
    direct = RelativeIdeal(H, 0, window)
    if not K.equals(direct):
        raise TheoremViolation("canonical_ideal", H.generators, K.to_dict(),
                               direct.to_dict(), "two constructions of K differ")
    return K


def canonical_powers(H, K=None):
    """[K^0, K^1, ..., K^c, K^(c+1)] where c = can.red; K^c = K^(c+1).

    Raises BoundExceeded if no stabilization happens by n = multiplicity - 1.
    """
    if K is None:
        K = canonical_ideal(H)
    powers = [RelativeIdeal.unit(H)]
    for n in range(H.multiplicity):
        nxt = powers[-1].add(K)
        powers.append(nxt)
        if nxt.equals(powers[-2]):
            return powers
    raise BoundExceeded(
        f"K^n did not stabilize by n = {H.multiplicity - 1} for {H}")


def can_red(H):
    """Canonical reduction number: least n >= 0 with K^n = K^(n+1)."""
    return len(canonical_powers(H)) - 2


def reduction_number(H, E):
    """Least n with normalize(E^n) = normalize(E^(n+1)).

    From that n on, E^(n+1) = min(E) + E^n, so the monomial of degree min(E)
    is an almost reduction of E.
    """
    return len(_normalized_powers(H, E)) - 2


def _normalized_powers(H, E):
    cap = _stable_cap(H)
    powers = [RelativeIdeal.unit(H)]
    P = powers[0]
    for n in range(cap + 1):
        P = P.add(E)
        nxt = P.normalize()
        powers.append(nxt)
        if nxt.equals(powers[-2]):
            return powers
    raise BoundExceeded(f"powers of {E} did not stabilize by n = {cap}")


def blow_up(H, E):
    """Blow-up R^E: the stable normalized power of E.

    Also computed as E^n - E^n at the stabilization index; the two must agree.
    """
    powers = _normalized_powers(H, E)
    B = powers[-1]
    n = len(powers) - 2
    En = E.power(max(n, 1))
    endo = En.colon(En)
    if not endo.equals(B):
        raise TheoremViolation("blow_up", H.generators, B.to_dict(),
                               endo.to_dict(), "stable power != E^n : E^n")
    return B


def ratliff_rush(H, E):
    """Ratliff-Rush closure ∪_l (E^(l+1) - E^l) ∩ H of an integral ideal E ⊆ H.

    For l past the reduction number r of E the colon is min(E) + blow-up,
    constant in l, so the union is complete at l = max(r, 1).
    """
    unit = RelativeIdeal.unit(H)
    if not E.is_subset(unit):
        raise NotIntegral(f"{E} is not contained in {H}")
    r = reduction_number(H, E)
    last = max(r, 1)
    if last > _stable_cap(H):
        raise BoundExceeded(f"Ratliff-Rush union for {E} ran past the cap")
    closure = E
    Pl = E
    for _ in range(last):
        Pnext = Pl.add(E)
        closure = closure.union(Pnext.colon(Pl).intersect(unit))
        Pl = Pnext
    return closure


@dataclass(frozen=True)
class HilbertTable:
    """ℓ(R/ω^n) for n = 0..n_max, with ω = e + K embedded in H."""

    e0: int
    e1: int
    values: tuple
    stabilization: int

    def to_dict(self):
        return {"e0": self.e0, "e1": self.e1,
                "stabilization": self.stabilization,
                "values": list(self.values)}

    @classmethod
    def from_dict(cls, data):
        return cls(data["e0"], data["e1"], tuple(data["values"]),
                   data["stabilization"])


def _embedding_shifts(H, K):
    """Nonzero elements of H - K in increasing order (lazily)."""
    dual = RelativeIdeal.unit(H).colon(K)
    z = dual.offset
    while True:
        if z > 0 and dual.contains(z):
            yield z
        z += 1


def hilbert_table(H, n_max, shift=None, K=None, B=None):
    """Hilbert function of the canonical ideal ω = e + K ⊆ H.

    ``shift`` picks e; by default it is the smallest nonzero element of
    H - K.  e0 is e and e1 is |B \\ H| for the blow-up B.
    """
    if n_max < H.multiplicity:
        raise NMaxTooSmall(f"n_max = {n_max} < multiplicity {H.multiplicity}")
    if K is None:
        K = canonical_ideal(H)
    if B is None:
        B = blow_up(H, K)
    unit = RelativeIdeal.unit(H)
    e = next(_embedding_shifts(H, K)) if shift is None else shift
    omega = K.shift(e)
    if not omega.is_subset(unit):
        raise NotIntegral(f"{e} + K is not inside {H}")
    e1 = B.colength_in(unit)
    values = []
    P = unit
    for n in range(n_max + 1):
        values.append(unit.colength_in(P))
        P = P.add(omega)
    stab = n_max + 1
    while stab > 0 and values[stab - 1] == e * (stab - 1) - e1:
        stab -= 1
    return HilbertTable(e, e1, tuple(values), stab)


def trace_of_canonical(H, K=None):
    """tr(ω) = K + (H - K), an ideal of H."""
    if K is None:
        K = canonical_ideal(H)
    tr = K.add(RelativeIdeal.unit(H).colon(K))
    if not tr.is_subset(RelativeIdeal.unit(H)):
        raise TheoremViolation("trace", H.generators, tr.to_dict(),
                               "subset of H", "trace not integral")
    return tr


def type_of_quotient(H, C):
    """Socle dimension of R/C for a monomial ideal C ⊊ H."""
    unit = RelativeIdeal.unit(H)
    if not C.is_subset(unit):
        raise NotIntegral(f"{C} is not contained in {H}")
    if C.equals(unit):
        raise ZeroQuotient("R/C is the zero ring")
    return len(quotient_socle(H, C))


def quotient_socle(H, C):
    return [h for h in range(C.end) if H.contains(h) and not C.contains(h)
            and all(C.contains(h + g) for g in H.generators)]


@dataclass(frozen=True)
class ClassificationReport:
    semigroup: NumericalSemigroup
    canonical: RelativeIdeal
    can_red: int
    blow_up: RelativeIdeal
    e0: int
    e1: int
    cm_type: int
    trace: RelativeIdeal
    gorenstein: bool
    almost_gorenstein: bool
    nearly_gorenstein: bool
    canred_le2: bool
    hilbert: HilbertTable
    # independently computed witnesses for the cross-checks
    symmetric: bool
    ag_product_route: bool
    trace_iso_dual: bool
    quotient_gorenstein: bool
    hilbert_alt: HilbertTable = None
    checks: dict = field(default_factory=dict, compare=False)

    @property
    def genus(self):
        return self.semigroup.genus

    @property
    def multiplicity(self):
        return self.semigroup.multiplicity

    def powers(self, n):
        """K^0, ..., K^n."""
        out = [RelativeIdeal.unit(self.semigroup)]
        for _ in range(n):
            out.append(out[-1].add(self.canonical))
        return out

    def to_dict(self):
        return {
            "semigroup": self.semigroup.to_dict(),
            "canonical": self.canonical.to_dict(),
            "can_red": self.can_red,
            "e0": self.e0,
            "e1": self.e1,
            "type": self.cm_type,
            "genus": self.genus,
            "gorenstein": self.gorenstein,
            "almost_gorenstein": self.almost_gorenstein,
            "nearly_gorenstein": self.nearly_gorenstein,
            "canred_le2": self.canred_le2,
            "trace": self.trace.to_dict(),
            "blow_up": self.blow_up.to_dict(),
            "hilbert": self.hilbert.to_dict(),
            "hilbert_alt": self.hilbert_alt.to_dict() if self.hilbert_alt else None,
            "witnesses": {
                "symmetric": self.symmetric,
                "ag_product_route": self.ag_product_route,
                "trace_iso_dual": self.trace_iso_dual,
                "quotient_gorenstein": self.quotient_gorenstein,
            },
            "checks": dict(self.checks),
        }

    @classmethod
    def from_dict(cls, data):
        H = NumericalSemigroup.from_dict(data["semigroup"])
        w = data["witnesses"]
        alt = data.get("hilbert_alt")
        return cls(
            semigroup=H,
            canonical=RelativeIdeal.from_dict(H, data["canonical"]),
            can_red=data["can_red"],
            blow_up=RelativeIdeal.from_dict(H, data["blow_up"]),
            e0=data["e0"], e1=data["e1"], cm_type=data["type"],
            trace=RelativeIdeal.from_dict(H, data["trace"]),
            gorenstein=data["gorenstein"],
            almost_gorenstein=data["almost_gorenstein"],
            nearly_gorenstein=data["nearly_gorenstein"],
            canred_le2=data["canred_le2"],
            hilbert=HilbertTable.from_dict(data["hilbert"]),
            symmetric=w["symmetric"],
            ag_product_route=w["ag_product_route"],
            trace_iso_dual=w["trace_iso_dual"],
            quotient_gorenstein=w["quotient_gorenstein"],
            hilbert_alt=HilbertTable.from_dict(alt) if alt else None,
            checks=data.get("checks", {}),
        )


def compute_report(H, n_max=None):
    """All invariants of H, without raising on failed cross-checks.

    Use :func:`check_report` (or :func:`classify`) to evaluate them.
    """
    unit = RelativeIdeal.unit(H)
    M = RelativeIdeal.maximal(H)
    K = canonical_ideal(H)
    powers = canonical_powers(H, K)
    cr = len(powers) - 2
    B = blow_up(H, K)
    dual = unit.colon(K)
    tr = trace_of_canonical(H, K)
    r = H.cm_type

    if n_max is None:
        n_max = H.multiplicity + 2
    hil = hilbert_table(H, n_max, K=K, B=B)
    shifts = _embedding_shifts(H, K)
    next(shifts)
    hil_alt = hilbert_table(H, n_max, shift=next(shifts), K=K, B=B)

    gor = cr == 0
    if B.equals(unit):
        quotient_gor = True  # R:B = R, nothing to test; covered by gorenstein
    else:
        quotient_gor = type_of_quotient(H, unit.colon(B)) == 1

    return ClassificationReport(
        semigroup=H, canonical=K, can_red=cr, blow_up=B,
        e0=hil.e0, e1=B.colength_in(unit), cm_type=r, trace=tr,
        gorenstein=gor,
        almost_gorenstein=hil.e1 <= r,
        nearly_gorenstein=M.is_subset(tr),
        canred_le2=cr <= 2,
        hilbert=hil,
        symmetric=H.is_symmetric(),
        ag_product_route=M.add(K).is_subset(unit),
        trace_iso_dual=tr.isomorphic(dual),
        quotient_gorenstein=quotient_gor,
        hilbert_alt=hil_alt,
    )


def check_report(rep, checks=CHECKS):
    """Evaluate the selected cross-checks; returns a list of TheoremViolation."""
    H = rep.semigroup
    g = H.generators
    out = []

    def expect(name, lhs, rhs, detail):
        if lhs != rhs:
            out.append(TheoremViolation(name, g, lhs, rhs, detail))

    unit = RelativeIdeal.unit(H)
    for name in checks:
        if name == "gorenstein":
            expect(name, rep.gorenstein, rep.symmetric, "can.red = 0 vs symmetric")
            expect(name, rep.gorenstein, rep.trace.equals(unit), "can.red = 0 vs trace = H")
            expect(name, rep.can_red != 1, True, "can.red = 1")
        elif name == "trace_dual":
            expect(name, rep.canred_le2, rep.trace_iso_dual, "can.red <= 2 vs tr ≅ H - K")
        elif name == "hilbert":
            hil = rep.hilbert
            expect(name, hil.stabilization, rep.can_red, "stabilization vs can.red")
            expect(name, hil.e1, rep.e1, "fitted e1 vs |B \\ H|")
            tail = [hil.e0 * n - hil.e1 for n in range(hil.stabilization, len(hil.values))]
            expect(name, list(hil.values[hil.stabilization:]), tail, "linear part")
            expect(name, rep.e1 == 0, rep.gorenstein, "e1 = 0 vs Gorenstein")
            if rep.hilbert_alt is not None:
                alt = rep.hilbert_alt
                expect(name, alt.stabilization, hil.stabilization,
                       f"stabilization for e = {alt.e0} vs e = {hil.e0}")
                expect(name, alt.e1, hil.e1, f"e1 for e = {alt.e0} vs e = {hil.e0}")
        elif name == "multiplicity_bound":
            expect(name, rep.can_red <= H.multiplicity - 1, True,
                   f"can.red {rep.can_red} > multiplicity - 1 = {H.multiplicity - 1}")
        elif name == "ag_routes":
            expect(name, rep.almost_gorenstein, rep.ag_product_route, "e1 <= r vs M + K ⊆ H")
        elif name == "ag_ng_bridge":
            b = rep.nearly_gorenstein and rep.canred_le2
            c = rep.nearly_gorenstein and rep.quotient_gorenstein
            expect(name, rep.almost_gorenstein, b, "AG vs NG and can.red <= 2")
            expect(name, rep.almost_gorenstein, c, "AG vs NG and R/(R:B) Gorenstein")
        else:
            raise ValueError(f"unknown check {name!r}")
    return out


def classify(H, n_max=None):
    """Full report with every cross-check evaluated; raises the first failure."""
    rep = compute_report(H, n_max)
    violations = check_report(rep)
    if violations:
        raise violations[0]
    rep.checks.update({name: True for name in CHECKS})
    return rep
