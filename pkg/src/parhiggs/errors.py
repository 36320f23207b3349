"""Exception hierarchy.

Every failure the library can signal derives from :class:`ParHiggsError`.
The CLI maps the two families to exit codes: :class:`NonGenericWeights`
(weights sit on a wall) and :class:`ConsistencyError` (an internal
self-check tripped, which always means a bug).
"""


class ParHiggsError(Exception):
    pass


class InvalidInput(ParHiggsError, ValueError):
    """Malformed or out-of-range input (bad weight string, wrong length, ...)."""


class WrongGenus(InvalidInput):
    pass


class InsufficientData(InvalidInput):
    """A decision needs a bundle-level fact the caller did not supply."""


class NonGenericWeights(ParHiggsError):
    pass


class OnWall(NonGenericWeights):
    def __init__(self, wall, message=None):
        self.wall = wall
        super().__init__(message or f"weights lie on wall {wall}")


class NonGeneric(NonGenericWeights):
    pass


class Codim2Collision(NonGenericWeights):
    def __init__(self, param, walls):
        self.param = param
        self.walls = tuple(walls)
        super().__init__(
            f"segment meets {len(self.walls)} walls at parameter {param}; perturb an endpoint")


class ConsistencyError(ParHiggsError):
    pass


class NotDivisible(ConsistencyError, ArithmeticError):
    pass


class NegativeCoefficient(ConsistencyError):
    pass


class IdentityFailure(ConsistencyError):
    pass


class MismatchWithMorse(ConsistencyError):
    pass


class FormulaMismatch(ConsistencyError):
    pass
