"""satlen: saturation lengths of ideal powers in graded quotient rings."""

from .backend import active_backend, available_backends
from .orders import GREVLEX, LEX, Order, elimination
from .poly import QQ, Field, Poly, PolyRing

__version__ = "0.1.0"

__all__ = [
    "Field",
    "GREVLEX",
    "LEX",
    "Order",
    "Poly",
    "PolyRing",
    "QQ",
    "active_backend",
    "available_backends",
    "elimination",
    "__version__",
]
