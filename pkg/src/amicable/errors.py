"""Exception types shared across modules."""


class VerificationError(Exception):
    """A pair claimed amicable failed the direct sigma check."""


class ShapeMismatch(Exception):
    """An identity check was asked to run on a pair of the wrong shape."""


class DivisibilityViolation(Exception):
    """A member minus the totient sum was not divisible by the shared 2-power.

    The identities imply divisibility, so hitting this on a verified pair is
    a reportable finding rather than a plumbing error.
    """

    def __init__(self, member: int, remainder: int, modulus: int):
        self.member = member
        self.remainder = remainder
        self.modulus = modulus
        super().__init__(
            f"{member} - (phi(A)+phi(B)) leaves remainder {remainder} mod {modulus}"
        )


class InsufficientData(Exception):
    """Not enough catalog pairs of a shape to attempt a coefficient fit."""
