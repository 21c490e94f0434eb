"""Geometric gate engineering on Kerr-cat qubits."""

try:
    from ._catgate import *  # noqa: F401,F403
    from . import _catgate as _impl
except ImportError:  # extension built outside the package (plain cmake build)
    from _catgate import *  # noqa: F401,F403
    import _catgate as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "0.1.0"
