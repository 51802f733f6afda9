"""
Homology oracle: boundary matrices, Smith normal form and homology profiles.
"""

from dowkit.complex.simplicial import euler_characteristic  # noqa: F401
from dowkit.homology.boundary import (  # noqa: F401
    BoundaryMatrix,
    boundary_matrix,
    boundary_squared_is_zero,
)
from dowkit.homology.snf import SmithForm, smith_normal_form  # noqa: F401
from dowkit.homology.profile import HomologyProfile, homology, profiles_equal  # noqa: F401
