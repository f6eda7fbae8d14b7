"""rspin package - Public API.

Exact computer algebra for r-spin descendants: the descent calculus, the
KdV_r flows in both variable presentations, and the change of variables
between the two descendant potentials.
"""
from rspin.errors import RSpinError

__version__ = "0.1.0"

__all__ = ["RSpinError", "__version__"]
