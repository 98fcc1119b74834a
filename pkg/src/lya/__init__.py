"""Exact computation with finite-dimensional Lie-Yamaguti algebras over Q.

The package is organized in layers: :mod:`lya.exactlin` (rational linear
algebra), :mod:`lya.lyalg` (algebras and constructions), :mod:`lya.maps`
(endomorphisms and automorphisms), :mod:`lya.structure` (center, ideals),
:mod:`lya.derivations` (derivation-type solvers), :mod:`lya.theorems`
(instance verification), and :mod:`lya.cli` (command line).  The most
common entry points are re-exported here.
"""

__version__ = "0.1.0"

from .exactlin import (  # noqa: F401
    Matrix,
    Subspace,
    nullspace,
    rref,
    solve,
    subspace_contains,
    subspace_intersect,
    subspace_sum,
)
from .lyalg import (  # noqa: F401
    LeibnizAlgebra,
    LYAlgebra,
    bracket,
    catalog,
    check_axioms,
    direct_sum,
    from_leibniz,
    from_lie,
    triple,
)
from .maps import (  # noqa: F401
    AutCert,
    LinMap,
    certify_automorphism,
    commutator,
    compose,
    identity_cert,
    inner_derivation,
    restrict_map,
)
from .structure import (  # noqa: F401
    center,
    derived_algebra,
    is_abelian_ideal,
    is_ideal,
    is_perfect,
    is_subalgebra,
)
from .derivations import (  # noqa: F401
    DerSpace,
    QuasiWitness,
    centroid,
    derivation_space,
    dhat,
    g_derivation_space,
    is_quasi_derivation,
    single_twist_space,
    stabilizer_derivations,
)
from .theorems import (  # noqa: F401
    CheckSpec,
    PropReport,
    default_catalog_reports,
    extract_subalgebra,
    reports_pass,
    verify_all,
)
