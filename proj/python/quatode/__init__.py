"""Quaternion linear algebra and linear ODE toolkit.

Permutation determinants over cycle normal forms, double determinants,
right eigenvalue/eigenvector chains through the complex adjoint, symbolic
fundamental matrices, exp(At), and the verification oracles.
"""

try:
    from ._quatode import *  # noqa: F401,F403  (installed package layout)
    from . import _quatode as _ext
except ImportError:  # build-tree layout: extension sits directly on sys.path
    from _quatode import *  # noqa: F401,F403
    import _quatode as _ext

__version__ = "0.1.0"
__all__ = [name for name in dir(_ext) if not name.startswith("_")]
