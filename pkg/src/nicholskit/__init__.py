"""nicholskit: exact construction and machine verification of Nichols
algebras of diagonal type, their bosonizations over finite abelian groups,
and unrolled Hopf algebras obtained by smashing with enveloping algebras of
Lie algebras of biderivations."""

from .scalars import BACKEND, CycScalar

__version__ = "0.1.0"
__all__ = ["BACKEND", "CycScalar", "__version__"]
