"""Numerical semigroups H = <a1, ..., al> and their intrinsic invariants."""

import re
from functools import reduce
from math import gcd

from .errors import EmptyInput, GcdNotOne, GeneratorTooLarge, InputError

GENERATOR_CAP = 2 ** 31

_INF = float("inf")


def apery_round_robin(generators):
    """Apéry set of <generators> with respect to ``min(generators)``.

    Returns a list ``w`` of length ``m = min(generators)`` where ``w[r]`` is
    the smallest element of H congruent to ``r`` mod ``m``.  Round-robin
    shortest paths over the residue graph: one pass per generator, walking
    each cycle of ``x -> x + a (mod m)`` starting from its current minimum.
    """
    gens = sorted(set(generators))
    m = gens[0]
    w = [_INF] * m
    w[0] = 0
    for a in gens[1:]:
        d = gcd(a, m)
        for p in range(d):
            best = min(w[q] for q in range(p, m, d))
            if best == _INF:
                continue
            n = best
            for _ in range(m // d - 1):
                n += a
                r = n % m
                if w[r] < n:
                    n = w[r]
                else:
                    w[r] = n
    return [int(x) for x in w]


def parse_generators(text):
    """Parse ``"3,4,5"``, ``"<3,4,5>"`` or ``"⟨3,4,5⟩"`` into a list of ints."""
    stripped = text.strip()
    stripped = stripped.strip("⟨⟩<>()[]{} ")
    if not stripped:
        raise EmptyInput(f"no generators in {text!r}")
    out = []
    for token in re.split(r"[,\s]+", stripped):
        if not token:
            continue
        try:
            out.append(int(token))
        except ValueError:
            raise InputError(f"not an integer: {token!r}") from None
    return out


class NumericalSemigroup:
    """A cofinite additive submonoid of the non-negative integers.

    Stands for the one-dimensional ring R = k[[H]].  Instances are immutable;
    every invariant is computed once at construction.

    >>> H = NumericalSemigroup([3, 4, 5])
    >>> H.frobenius, sorted(H.pf), H.genus
    (2, [1, 2], 2)
    """

    __slots__ = ("generators", "multiplicity", "apery", "frobenius",
                 "conductor", "genus", "pf", "_mask", "_window")

    def __init__(self, raw_generators):
        raw = list(raw_generators)
        if not raw:
            raise EmptyInput("empty generator list")
        for a in raw:
            if not isinstance(a, int) or isinstance(a, bool):
                raise InputError(f"generator {a!r} is not an integer")
            if a <= 0:
                raise EmptyInput(f"generators must be positive, got {a}")
            if a >= GENERATOR_CAP:
                raise GeneratorTooLarge(f"generator {a} exceeds 2^31")
        if reduce(gcd, raw) != 1:
            raise GcdNotOne(f"gcd{tuple(sorted(set(raw)))} = {reduce(gcd, raw)}")

        apery = apery_round_robin(raw)
        m = len(apery)
        self.multiplicity = m
        self.apery = tuple(apery)
        self.frobenius = max(apery) - m
        self.conductor = self.frobenius + 1
        self.genus = sum(w // m for w in apery)

        # window of length max(conductor, 1); bit z set iff z in H
        mask = 0
        for z in range(self._window_len()):
            if z >= apery[z % m]:
                mask |= 1 << z
        self._window = self._window_len()
        self._mask = mask

        self.generators = tuple(self._minimal_generators())
        self.pf = frozenset(self._pf_from_apery())

    def _window_len(self):
        return max(self.frobenius + 1, 1)

    def _minimal_generators(self):
        m = self.multiplicity
        nonzero = sorted(w for w in self.apery if w)
        gens = [m]
        for w in nonzero:
            if not any(self.contains(w - v) for v in nonzero if v < w):
                gens.append(w)
        return sorted(gens)

    def _pf_from_apery(self):
        # maximal Apéry elements under w <= w' iff w' - w in H
        m = self.multiplicity
        ap = self.apery
        return {w - m for w in ap
                if not any(v != w and self.contains(v - w) for v in ap)}

    # -- queries ---------------------------------------------------------

    def contains(self, z):
        if z < 0:
            return False
        if z >= self._window:
            return True
        return bool(self._mask >> z & 1)

    __contains__ = contains

    @property
    def membership(self):
        """Tuple of booleans for ``0 <= z < max(conductor, 1)``."""
        return tuple(bool(self._mask >> z & 1) for z in range(self._window))

    @property
    def window_mask(self):
        return self._mask

    @property
    def window_length(self):
        return self._window

    @property
    def gaps(self):
        return tuple(z for z in range(self.conductor) if not self.contains(z))

    @property
    def cm_type(self):
        return len(self.pf)

    def elements(self, upto):
        """Elements of H that are ``<= upto``."""
        return [z for z in range(upto + 1) if self.contains(z)]

    def pseudo_frobenius(self):
        """PF(H) by direct scan over ``[-1, frobenius]``.

        Independent of the Apéry route used at construction; the two must
        agree.
        """
        return {n for n in range(-1, self.frobenius + 1)
                if not self.contains(n)
                and all(self.contains(n + g) for g in self.generators)}

    def is_symmetric(self):
        return 2 * self.genus == self.frobenius + 1

    def is_trivial(self):
        return self.multiplicity == 1

    # -- value semantics -------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return f"NumericalSemigroup({list(self.generators)})"

    def __str__(self):
        return "<" + ",".join(map(str, self.generators)) + ">"

    def to_dict(self):
        return {
            "generators": list(self.generators),
            "frobenius": self.frobenius,
            "genus": self.genus,
            "multiplicity": self.multiplicity,
            "type": self.cm_type,
            "pf": sorted(self.pf),
        }

    @classmethod
    def from_dict(cls, data):
        return cls(data["generators"])

    @classmethod
    def parse(cls, text):
        return cls(parse_generators(text))


def pseudo_frobenius(H):
    """PF(H), computed twice (direct scan and maximal Apéry elements).

    Raises ``AssertionError`` if the two computations disagree.
    """
    scanned = H.pseudo_frobenius()
    if scanned != H.pf:
        raise AssertionError(f"PF mismatch for {H}: scan {sorted(scanned)} "
                             f"vs Apéry {sorted(H.pf)}")
    return set(scanned)


def is_symmetric(H):
    return H.is_symmetric()
