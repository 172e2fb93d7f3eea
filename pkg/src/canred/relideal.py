"""Relative ideals of a numerical semigroup.

A relative ideal is a set E of integers, bounded below, with E + H ⊆ E.  It
models a monomial fractional ideal of k[[H]]: Minkowski sum is the ideal
product, E - F = {z : z + F ⊆ E} is the colon, translation is
multiplication by a monomial.

Storage is ``(offset, window)``: ``offset = min(E)`` and ``window`` is an
int bitset whose bit ``i`` says whether ``offset + i`` is in E, for
``0 <= i < L`` with ``L = max(conductor(H), 1)``.  Every integer
``>= offset + L`` is a member.  That tail claim is sound for every E: since
``offset`` is in E and E + H ⊆ E, E contains ``offset + c + Z>=0`` where c is
the conductor.  Bit 0 is always set, so the pair is canonical.
"""

from .errors import EmptyGenerators, NotASubset, ParentMismatch


def _ones(n):
    return (1 << n) - 1 if n > 0 else 0


def _popcount(x):
    return bin(x).count("1")


def _bit_positions(x):
    i = 0
    while x:
        if x & 1:
            yield i
        x >>= 1
        i += 1


class RelativeIdeal:
    __slots__ = ("parent", "offset", "window")

    def __init__(self, parent, offset, window):
        # trusted constructor: callers pass canonical data
        self.parent = parent
        self.offset = offset
        self.window = window

    # -- construction ----------------------------------------------------

    @classmethod
    def from_elements(cls, H, gens):
        """The relative ideal ``gens + H``."""
        gens = sorted(set(gens))
        if not gens:
            raise EmptyGenerators("a relative ideal needs at least one generator")
        lo = gens[0]
        return cls(H, lo, _fill_tail_bits(H, gens, lo, H.window_length))

    @classmethod
    def unit(cls, H):
        return cls(H, 0, H.window_mask)

    @classmethod
    def maximal(cls, H):
        """M = H \\ {0}."""
        if H.multiplicity == 1:
            return cls(H, 1, 1)
        return cls.from_elements(H, H.generators)

    @classmethod
    def principal(cls, H, s):
        return cls(H, s, H.window_mask)

    @classmethod
    def from_dict(cls, H, data):
        members = data["members"]
        window = 0
        for i in members:
            window |= 1 << i
        E = cls(H, data["offset"], window)
        if not E._is_valid():
            raise ValueError(f"not a relative ideal of {H}: {data}")
        return E

    # -- basic queries ---------------------------------------------------

    @property
    def length(self):
        return self.parent.window_length

    def contains(self, z):
        d = z - self.offset
        if d < 0:
            return False
        if d >= self.parent.window_length:
            return True
        return bool(self.window >> d & 1)

    __contains__ = contains

    def bits(self, lo, n):
        """Bitset of membership for the integers ``lo, ..., lo + n - 1``."""
        k = lo + n - self.offset
        if k <= 0 or n <= 0:
            return 0
        L = self.parent.window_length
        if k <= L:
            rel = self.window & _ones(k)
        else:
            rel = self.window | (_ones(k) ^ _ones(L))
        shift = self.offset - lo
        if shift >= 0:
            return (rel << shift) & _ones(n)
        return (rel >> -shift) & _ones(n)

    def members_below(self, bound):
        """Sorted members of E that are ``< bound``."""
        return [self.offset + i for i in _bit_positions(self.bits(self.offset, bound - self.offset))]

    def window_members(self):
        return list(_bit_positions(self.window))

    @property
    def end(self):
        """First integer from which every integer is a member."""
        L = self.parent.window_length
        w = self.window
        top = L
        while top > 0 and w >> (top - 1) & 1:
            top -= 1
        return self.offset + top

    def _is_valid(self):
        if not self.window & 1 or self.window >> self.parent.window_length:
            return False
        lo, n = self.offset, 2 * self.parent.window_length + 1
        b = self.bits(lo, n)
        for g in self.parent.generators:
            if (b << g) & _ones(n) & ~b:
                return False
        return True

    # -- arithmetic ------------------------------------------------------

    def _check(self, other):
        if self.parent is not other.parent and self.parent != other.parent:
            raise ParentMismatch(f"{self.parent} vs {other.parent}")

    def add(self, other):
        """Minkowski sum E + F (the product of the monomial ideals)."""
        self._check(other)
        L = self.parent.window_length
        mask = _ones(L)
        a, b = self.window, other.window
        if _popcount(a) < _popcount(b):
            a, b = b, a
        out = 0
        j = 0
        while b:
            if b & 1:
                out |= a << j
            b >>= 1
            j += 1
        # members of either tail only land at positions >= L
        return RelativeIdeal(self.parent, self.offset + other.offset, out & mask)

    __add__ = add

    def colon(self, other):
        """E - F = {z : z + F ⊆ E}."""
        self._check(other)
        L = self.parent.window_length
        # z = min(E) - min(F) + d; d < 0 fails at f = min(F), d >= L always
        # succeeds, and the lowest valid d is <= L
        span = 2 * L + 1
        efull = self.bits(self.offset, span + L)
        valid = _ones(span)
        for j in _bit_positions(other.window):
            valid &= efull >> j
        valid &= _ones(span)
        d0 = (valid & -valid).bit_length() - 1
        window = (valid >> d0) & _ones(L)
        return RelativeIdeal(self.parent, self.offset - other.offset + d0, window)

    __sub__ = colon

    def power(self, n):
        if n < 0:
            raise ValueError("negative power")
        out = RelativeIdeal.unit(self.parent)
        for _ in range(n):
            out = out.add(self)
        return out

    def shift(self, s):
        return RelativeIdeal(self.parent, self.offset + s, self.window)

    def normalize(self):
        """Translate so that the minimum is 0."""
        return RelativeIdeal(self.parent, 0, self.window)

    def intersect(self, other):
        self._check(other)
        lo = min(self.offset, other.offset)
        n = max(self.offset, other.offset) - lo + self.parent.window_length
        b = self.bits(lo, n) & other.bits(lo, n)
        return _from_bits(self.parent, lo, b, n)

    def union(self, other):
        self._check(other)
        lo = min(self.offset, other.offset)
        n = max(self.offset, other.offset) - lo + self.parent.window_length
        b = self.bits(lo, n) | other.bits(lo, n)
        return _from_bits(self.parent, lo, b, n)

    # -- comparisons -----------------------------------------------------

    def equals(self, other):
        self._check(other)
        return self.offset == other.offset and self.window == other.window

    def is_subset(self, other):
        """True iff self ⊆ other."""
        self._check(other)
        if self.offset < other.offset:
            return False
        n = self.offset - other.offset + self.parent.window_length
        lo = other.offset
        mine = self.bits(lo, n)
        return mine & ~other.bits(lo, n) == 0

    def isomorphic(self, other):
        """True iff ``other`` is a translate of ``self``."""
        self._check(other)
        return self.window == other.window

    def minimal_generators(self):
        """E \\ (E + M): the exponents of a minimal monomial generating set."""
        H = self.parent
        if H.multiplicity == 1:
            return [self.offset]
        m = H.multiplicity
        n = H.window_length + m
        e = self.bits(self.offset, n)
        em = self.add(RelativeIdeal.maximal(H)).bits(self.offset, n)
        return [self.offset + i for i in _bit_positions(e & ~em)]

    def colength_in(self, sub):
        """|self \\ sub| for ``sub ⊆ self``."""
        self._check(sub)
        if not sub.is_subset(self):
            raise NotASubset(f"{sub} is not contained in {self}")
        lo = self.offset
        n = max(self.end, sub.end) - lo
        return _popcount(self.bits(lo, n) & ~sub.bits(lo, n))

    def __eq__(self, other):
        if not isinstance(other, RelativeIdeal):
            return NotImplemented
        return (self.offset == other.offset and self.window == other.window
                and self.parent == other.parent)

    def __hash__(self):
        return hash((self.offset, self.window, self.parent.generators))

    def __le__(self, other):
        return self.is_subset(other)

    def __repr__(self):
        gens = ",".join(map(str, self.minimal_generators()))
        return f"RelativeIdeal({{{gens}}} + {self.parent})"

    def describe(self):
        """Short human form: listed members up to the start of the full tail."""
        end = self.end
        members = self.members_below(end)
        head = ",".join(map(str, members))
        return "{" + (head + "," if head else "") + f"{end},->}}"

    def to_dict(self):
        return {"offset": self.offset, "members": self.window_members()}


def _from_bits(H, lo, b, n):
    """Canonicalize a bitset ``b`` over ``[lo, lo + n)`` whose tail is full."""
    if b == 0:
        raise ValueError("empty set")
    d0 = (b & -b).bit_length() - 1
    L = H.window_length
    rel = b >> d0
    width = n - d0
    if width < L:
        rel |= _ones(L) ^ _ones(width)
    return RelativeIdeal(H, lo + d0, rel & _ones(L))


def _fill_tail_bits(H, gens, lo, L):
    window = 0
    hfull = H.window_mask | (_ones(2 * L) ^ _ones(H.window_length))
    for g in gens:
        d = g - lo
        if d < L:
            window |= hfull << d
    return window & _ones(L)


def from_elements(H, gens):
    return RelativeIdeal.from_elements(H, gens)


def add(E, F):
    return E.add(F)


def colon(E, F):
    return E.colon(F)


def power(E, n):
    return E.power(n)


def equals(E, F):
    return E.equals(F)


def is_subset(E, F):
    return E.is_subset(F)


def shift(E, s):
    return E.shift(s)


def isomorphic(E, F):
    return E.isomorphic(F)


def minimal_generators(E):
    return set(E.minimal_generators())


def colength_in(E, F):
    return E.colength_in(F)
