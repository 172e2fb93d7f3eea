"""Idealizations A = R ⋉ M over a Gorenstein semigroup ring R = k[[H]].

M ranges over monomial modules of rank one, i.e. relative ideals E of H up to
translation.  Whether every rank-one maximal Cohen-Macaulay module over
k[[H]] has such a representative is not settled here; results are stated for
monomial modules only.  A itself is never built: every conclusion goes
through ideal-theoretic criteria on H.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import (GorensteinIdealization, NotIntegral, NotSymmetric,
                     NotTraceIso, TheoremViolation, TooManyGaps)
from .invariants import type_of_quotient
from .relideal import RelativeIdeal

GAP_GUARD = 24


def _require_symmetric(H):
    if not H.is_symmetric():
        raise NotSymmetric(f"{H} is not symmetric (R is not Gorenstein)")


def is_trace_ideal(H, E):
    """E ⊆ H is a trace ideal iff E - E = H - E."""
    unit = RelativeIdeal.unit(H)
    if not E.is_subset(unit):
        raise NotIntegral(f"{E} is not contained in {H}")
    return E.colon(E).equals(unit.colon(E))


def is_trace_iso(H, E):
    """Whether E is a translate of a trace ideal of H.

    Returns ``(True, I)`` with the trace ideal I = min(H - E) + E, or
    ``(False, None)``.  E - E is an over-semigroup with minimum 0, so the only
    translate that can match is the one moving H - E down to 0.
    """
    _require_symmetric(H)
    unit = RelativeIdeal.unit(H)
    dual = unit.colon(E)
    endo = E.colon(E)
    if not dual.isomorphic(endo):
        return False, None
    return True, E.shift(dual.offset - endo.offset)


@dataclass(frozen=True)
class IdealizationReport:
    semigroup: object
    module: RelativeIdeal
    trace_iso: bool
    witness: RelativeIdeal
    canred_le2: bool
    type_via_socle: int
    type_via_mu: int

    def to_dict(self):
        return {
            "semigroup": self.semigroup.to_dict(),
            "module": self.module.to_dict(),
            "trace_iso": self.trace_iso,
            "canred_le2": self.canred_le2,
            "witness_I": self.witness.to_dict() if self.witness else None,
            "type_via_socle": self.type_via_socle,
            "type_via_mu": self.type_via_mu,
        }

    @classmethod
    def from_dict(cls, data):
        from .semigroup import NumericalSemigroup
        H = NumericalSemigroup.from_dict(data["semigroup"])
        w = data["witness_I"]
        return cls(H, RelativeIdeal.from_dict(H, data["module"]),
                   data["trace_iso"],
                   RelativeIdeal.from_dict(H, w) if w else None,
                   data["canred_le2"], data["type_via_socle"], data["type_via_mu"])


def idealization_type(H, E):
    """Cohen-Macaulay type of R ⋉ E, by two independent routes.

    Socle route: r(R/I) + 2 for the trace ideal I ≅ E.  Generator route:
    ω_A ≅ (R:I) × R, whose minimal number of generators over A is
    μ(H - I) + 1.
    """
    ok, I = is_trace_iso(H, E)
    if not ok:
        raise NotTraceIso(f"{E} is not isomorphic to a trace ideal of {H}")
    unit = RelativeIdeal.unit(H)
    if I.equals(unit):
        raise GorensteinIdealization(H.generators, E)
    via_socle = type_of_quotient(H, I) + 2
    via_mu = len(unit.colon(I).minimal_generators()) + 1
    if via_socle != via_mu:
        raise TheoremViolation("idealization", H.generators, via_socle, via_mu,
                               f"type of R ⋉ {I.describe()}: socle vs μ route")
    return IdealizationReport(H, E, True, I, True, via_socle, via_mu)


def over_semigroups(H, guard=GAP_GUARD):
    """All numerical semigroups B with H ⊆ B, as relative ideals of H.

    Any B ⊋ H contains H ∪ {x} for x = max(B \\ H), and that set is itself a
    semigroup, so unit steps (adjoining a pseudo-Frobenius x with 2x in the
    current semigroup) reach every over-semigroup.  Sorted by the tuple of
    adjoined gaps.
    """
    if H.genus > guard:
        raise TooManyGaps(f"genus {H.genus} > {guard}")
    unit = RelativeIdeal.unit(H)
    L = H.window_length
    seen = {unit.window}
    stack = [unit.window]
    while stack:
        mask = stack.pop()
        for x in range(L):
            if mask >> x & 1:
                continue
            if _adjoinable(mask, x, L):
                nxt = mask | 1 << x
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    gaps = H.gaps

    def key(mask):
        return tuple(z for z in gaps if mask >> z & 1)

    return [RelativeIdeal(H, 0, m) for m in sorted(seen, key=key)]


def _adjoinable(mask, x, L):
    # mask ∪ {x} closed under + iff x + s in it for every nonzero member s and 2x too
    full = mask | ((1 << (2 * L + 2)) - 1) ^ ((1 << L) - 1)
    new = full | 1 << x
    if not new >> (2 * x) & 1:
        return False
    for s in range(1, L):
        if mask >> s & 1 and not new >> (x + s) & 1:
            return False
    return True


def over_semigroups_brute(H, guard=GAP_GUARD):
    """Same set as :func:`over_semigroups`, by testing every subset of gaps."""
    if H.genus > guard:
        raise TooManyGaps(f"genus {H.genus} > {guard}")
    gaps = H.gaps
    unit = RelativeIdeal.unit(H)
    found = []
    for k in range(len(gaps) + 1):
        for extra in combinations(gaps, k):
            members = set(H.elements(H.window_length)) | set(extra)
            if all(a + b in members or a + b >= H.window_length
                   for a in members for b in members):
                window = 0
                for z in members:
                    if z < H.window_length:
                        window |= 1 << z
                found.append((extra, RelativeIdeal(H, 0, window)))
    found.sort(key=lambda t: t[0])
    return [B for _, B in found]


def verify_trace_extension_bijection(H, guard=GAP_GUARD):
    """B ↦ H - B and I ↦ I - I are inverse between over-semigroups and trace ideals."""
    _require_symmetric(H)
    unit = RelativeIdeal.unit(H)
    images = set()
    for B in over_semigroups(H, guard):
        I = unit.colon(B)
        if not is_trace_ideal(H, I):
            return False
        if not I.colon(I).equals(B):
            return False
        images.add((I.offset, I.window))
    return len(images) == len(over_semigroups(H, guard))


def trace_ideals(H, guard=GAP_GUARD):
    """Trace ideals of H (with a nonzerodivisor), via the over-semigroups."""
    unit = RelativeIdeal.unit(H)
    return [unit.colon(B) for B in over_semigroups(H, guard)]


def check_idealization(H, guard=GAP_GUARD):
    """Bijection and two-route type formula for a symmetric H.

    Returns a list of TheoremViolation; empty for non-symmetric H.
    """
    if not H.is_symmetric():
        return []
    out = []
    if not verify_trace_extension_bijection(H, guard):
        out.append(TheoremViolation("idealization", H.generators, False, True,
                                    "over-semigroup / trace ideal round trip"))
    unit = RelativeIdeal.unit(H)
    for I in trace_ideals(H, guard):
        if I.equals(unit):
            continue
        try:
            idealization_type(H, I)
        except TheoremViolation as exc:
            out.append(exc)
    return out
