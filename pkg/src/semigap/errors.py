"""Exception hierarchy.

Everything raised on purpose derives from :class:`SemigapError`.  Errors a
caller can trigger with bad input derive from :class:`InvalidInput`; the
remaining ones signal a bug (a violated invariant the mathematics guarantees).
"""

from __future__ import annotations


class SemigapError(Exception):
    pass


class InvalidInput(SemigapError, ValueError):
    pass


class EmptyInput(InvalidInput):
    pass


class NonPositiveGenerator(InvalidInput):
    pass


class GcdNotOne(InvalidInput):
    def __init__(self, values, divisor):
        self.values = tuple(values)
        self.divisor = divisor
        super().__init__(f"gcd is {divisor}: {self.values} do not generate a numerical semigroup")


class NotMinimal(InvalidInput):
    def __init__(self, values, offender, witness):
        self.values = tuple(values)
        self.offender = offender
        # witness: mapping generator -> multiplicity with sum(g * k) == offender
        self.witness = dict(witness)
        combo = " + ".join(
            f"{k}*{g}" if k > 1 else f"{g}" for g, k in sorted(self.witness.items())
        )
        super().__init__(f"not minimal: {offender} = {combo}")


class NegativeArgument(InvalidInput):
    pass


class OverflowBudgetExceeded(InvalidInput):
    pass


class MirrorDegreeTooSmall(InvalidInput):
    pass


class WrongDimension(InvalidInput):
    pass


class SymmetricInput(InvalidInput):
    pass


class ProductTooSmall(InvalidInput):
    pass


class NotMED(InvalidInput):
    pass


class BadParameters(InvalidInput):
    pass


class InternalInvariantViolation(SemigapError, AssertionError):
    """A computed quantity contradicts an identity that must hold."""

    def __init__(self, check_id: str, detail: str = ""):
        self.check_id = check_id
        self.detail = detail
        super().__init__(f"{check_id}: {detail}" if detail else check_id)


class NotDivisible(InternalInvariantViolation):
    def __init__(self, detail: str = ""):
        super().__init__("poly.exact_division", detail)


class NonUnitCoefficient(InternalInvariantViolation):
    def __init__(self, detail: str = ""):
        super().__init__("h_gaps.unit_coefficients", detail)


class NotPerfectSquare(InternalInvariantViolation):
    def __init__(self, detail: str = ""):
        super().__init__("triple.j_square", detail)


class ParityViolation(InternalInvariantViolation):
    def __init__(self, detail: str = ""):
        super().__init__("triple.parity", detail)


class SweepFailure(SemigapError):
    def __init__(self, index: int, generators, check_id: str, detail: str = ""):
        self.index = index
        self.generators = tuple(generators)
        self.check_id = check_id
        self.detail = detail
        msg = f"tuple #{index} {self.generators}: {check_id}"
        super().__init__(f"{msg} ({detail})" if detail else msg)


def ensure(condition: bool, check_id: str, detail: str = "") -> None:
    if not condition:
        raise InternalInvariantViolation(check_id, detail)
