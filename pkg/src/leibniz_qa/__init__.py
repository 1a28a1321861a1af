"""Exact computations with finite-dimensional Leibniz algebras over Q and GF(p)."""
from .core import (Convention, LeibnizAlgebra, build_algebra, centers, ideal_closure,
                   identity_audit, is_ideal, leib, quotient)
from .exactla import GF, QQ, Field, Subspace, rref

__version__ = "0.1.0"

__all__ = ["Convention", "LeibnizAlgebra", "build_algebra", "centers", "ideal_closure", "identity_audit",
           "is_ideal", "leib", "quotient", "GF", "QQ", "Field", "Subspace", "rref", "__version__"]
