"""Exact computations in affine Hecke algebras of small rank.

Modules:

* :mod:`.root_data` -- root systems A1, A2, B2, G2, A3 and their Weyl groups
* :mod:`.weyl_affine` -- the extended affine Weyl group, lengths, descents,
  Bruhat order, Y_0 and the lowest two-sided cell
* :mod:`.laurent` -- Laurent polynomials on the weight lattice, exact scalars
* :mod:`.hecke_bernstein` -- the Bernstein presentation
* :mod:`.hecke_im` -- the Iwahori-Matsumoto presentation, KL polynomials
* :mod:`.quotient_ht` -- central-character quotients H_t and their modules
* :mod:`.cli` -- the ``hecke-cell-lab`` verifier
"""

from .kernels import BACKEND
from .root_data import build_root_datum, poincare_polynomial
from .weyl_affine import affine_group
from .laurent import LaurentPoly, ScalarQ, Specialization, TorusPoint
from .hecke_bernstein import bernstein_algebra
from .hecke_im import im_algebra
from .quotient_ht import build_ht, principal_point

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "LaurentPoly",
    "ScalarQ",
    "Specialization",
    "TorusPoint",
    "affine_group",
    "bernstein_algebra",
    "build_ht",
    "build_root_datum",
    "im_algebra",
    "poincare_polynomial",
    "principal_point",
]
