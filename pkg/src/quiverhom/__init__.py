"""quiverhom: exact homological algebra for bound quiver algebras over GF(p).

Computes projective/injective/global/dominant/Gorenstein-projective
dimensions, Ext groups, Auslander-Reiten translates, torsion and cotorsion
pairs, and classifies higher Auslander(-Gorenstein) algebras, with a CLI
that mechanically verifies the classical identities on concrete algebras.
"""

from .algebra import (
    BasedAlgebra, QuiverPresentation, Relation, build_bound_quiver_algebra,
    cyclic_nakayama_presentation, radical_and_powers,
)
from .gorenstein import (
    ClassificationReport, classify, gproj_dim, gproj_dim_general,
    in_gproj_leq, is_gorenstein_projective,
)
from .homology import (
    DEFAULT_BOUND, DimValue, Resolution, approximation, cosyzygy,
    dominant_dim, dominant_dim_algebra, ext_dim, global_dim, in_fac_j,
    in_sub_j, injdim, injective_envelope, is_injective, is_projective,
    min_resolution, mueller_check, pd, projective_cover, syzygy, tau,
    tau_inv, tau_n, tau_n_inv, transpose,
)
from .io import gen_cyclic_example, parse_algebra_file, parse_module_file
from .linalg import BACKEND, DEFAULT_PRIME, GFp, Matrix, Subspace
from .modules import (
    ModuleMap, Representation, decompose, direct_sum, dual,
    endomorphism_algebra, hom_basis, hom_dim, hom_functor, injective,
    is_isomorphic, projective, regular_rep, series, simple, stable_hom_dims,
    standard_modules,
)
from .subcats import (
    ARSequence, IndecList, SubcatSpec, annihilator, ar_sequence,
    cluster_predicates, correspondence_check, ext_injectives,
    ext_projectives, indecomposables, is_cotilting, is_k_tilting, is_tilting,
    realized, relative_ar_sequence, torsion_pair, torsion_radical,
)
from .verify import VerifyReport, run_verify

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
