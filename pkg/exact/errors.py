"""
Exception hierarchy shared by every package.

All errors raised on purpose derive from ``AlgebraError`` so the CLI can map
them to exit codes without catching unrelated bugs.
"""


class AlgebraError(Exception):
    """Base class for every deliberate failure in the library."""


class SingularMatrix(AlgebraError):
    """A matrix that had to be inverted is singular."""


class SpectrumNotRational(AlgebraError):
    """The rational roots of the characteristic polynomial miss part of the space."""


class DegenerateForm(AlgebraError):
    """A bilinear form that must be nondegenerate is not."""


class NotDiagonalizable(AlgebraError):
    """A Cartan element acts non-semisimply."""


class NotWeightBasis(AlgebraError):
    """A basis vector is not homogeneous for the Cartan (or torus) action."""


class DecomposableAlgebra(AlgebraError):
    """The Casimir operator has more than one eigenvalue."""


class NotCompletelyReducible(AlgebraError):
    """Highest-weight vectors of g_0 do not generate all of g_1."""


class IsotropicSeedInvalid(AlgebraError):
    """A proposed seed for h+ is not isotropic or not inside h."""


class SingularCartanSystem(AlgebraError):
    """The simple-root Gram system defining lambda_s is singular."""


class SpecParseError(AlgebraError):
    """An algebra, torus or label string could not be parsed."""
