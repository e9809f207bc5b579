"""Exception hierarchy.

Two families matter for callers: *no-solution* errors (a well-posed question
whose answer does not exist in the ring, e.g. a ghost vector with no integral
preimage) and *invalid-input* errors (the data violates a precondition).
The CLI maps the former to exit code 3 and the latter to exit code 2; the
HTTP service maps them to 422 and 400.
"""


class WittkitError(Exception):
    """Base class for all library errors."""


# -- no-solution family -------------------------------------------------------

class NoSolutionError(WittkitError):
    """A requested object provably does not exist over the given ring."""


class NonIntegral(NoSolutionError):
    """An exact division failed: the quotient does not lie in the ring."""


class NoIntegralSolution(NoSolutionError):
    """An integer linear system that should be solvable has no solution."""


class PrimeNotFound(NoSolutionError):
    """No prime below the requested bound satisfies the sieve conditions."""


# -- invalid-input family ------------------------------------------------------

class InvalidInputError(WittkitError):
    """The input data violates a documented precondition."""


class RingMismatch(InvalidInputError):
    """Operands belong to different coefficient rings."""


class TruncationMismatch(InvalidInputError):
    """Operands are truncated at different orders."""


class UnassignedVariable(InvalidInputError):
    """A polynomial variable has no value under the given assignment."""


class NotBinomialRing(InvalidInputError):
    """The operation needs binomial coefficients, which this ring lacks."""


class NoLambdaStructure(InvalidInputError):
    """The ring carries no lambda-structure for Adams operations."""


class NotSymmetric(InvalidInputError):
    """The polynomial is not invariant under variable transpositions."""


class TooFewVariables(InvalidInputError):
    """A faithful expansion needs at least as many variables as the degree."""


class UnsupportedDegree(InvalidInputError):
    """Cohomology is only computed in the supported range of degrees."""


class PreconditionViolated(InvalidInputError):
    """A stated arithmetic precondition (e.g. a congruence on s) fails."""


class DerivationNotFactoring(InvalidInputError):
    """The derivation does not vanish on the lattice; the input is invalid."""


class InvalidSubgroup(InvalidInputError):
    """The subgroup is trivial or not a proper cyclic subgroup."""


class SizeBound(InvalidInputError):
    """A brute-force simulation was asked to exceed its configured bound."""


class BudgetExceeded(InvalidInputError):
    """A universal expansion was asked to exceed its configured budget."""


# -- internal guards -----------------------------------------------------------

class InternalIntegrality(WittkitError):
    """A division that functoriality guarantees to be exact failed.

    This is an engine bug (or corrupted table), never a user error.
    """
