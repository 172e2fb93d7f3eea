"""Exception hierarchy.

Input problems derive from :class:`InputError` (a ``ValueError``); a loop
overrunning a proven bound raises :class:`BoundExceeded`; a failed theorem
cross-check raises :class:`TheoremViolation`.
"""


class CanredError(Exception):
    pass


class InputError(CanredError, ValueError):
    pass


class EmptyInput(InputError):
    pass


class GcdNotOne(InputError):
    pass


class GeneratorTooLarge(InputError):
    pass


class EmptyGenerators(InputError):
    pass


class ParentMismatch(InputError):
    pass


class NotASubset(InputError):
    pass


class NotIntegral(InputError):
    pass


class ZeroQuotient(InputError):
    pass


class NMaxTooSmall(InputError):
    pass


class NotSymmetric(InputError):
    pass


class NotTraceIso(InputError):
    pass


class TooManyGaps(InputError):
    pass


class GuardExceeded(InputError):
    pass


class GorensteinIdealization(CanredError):
    """The module is isomorphic to the ring itself, so ``R ⋉ M`` is Gorenstein.

    Not a failure: the idealization has Cohen-Macaulay type 1, which the
    type formula for non-Gorenstein idealizations does not cover.
    """

    cm_type = 1

    def __init__(self, generators, module):
        self.generators = tuple(generators)
        self.module = module
        super().__init__(
            f"R ⋉ M is Gorenstein for H = <{','.join(map(str, self.generators))}> "
            f"(M ≅ R), type 1")


class BoundExceeded(CanredError):
    """A stabilization loop ran past a bound that is proven to hold."""


class TheoremViolation(CanredError):
    """A cross-check between two independently computed quantities failed.

    Carries enough data to re-check the failure by hand.
    """

    def __init__(self, check, generators, lhs, rhs, detail=""):
        self.check = check
        self.generators = tuple(generators)
        self.lhs = lhs
        self.rhs = rhs
        self.detail = detail
        super().__init__(
            f"[{check}] H = <{','.join(map(str, self.generators))}>: "
            f"{lhs!r} != {rhs!r}" + (f" ({detail})" if detail else ""))

    def to_dict(self):
        return {
            "check": self.check,
            "generators": list(self.generators),
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
            "detail": self.detail,
        }


def _jsonable(value):
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if hasattr(value, "to_dict"):
        return value.to_dict()
    if isinstance(value, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in value]
    return repr(value)
