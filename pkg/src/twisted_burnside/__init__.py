"""Twisted conjugacy classes, Reidemeister numbers, and the twisted
Burnside identity R(phi) = S(phi), computed exactly at desk scale.

Element-level finite groups live in ``groups``; exact character tables and
the dual action in ``chartable``; finitely generated abelian groups and
Smith normal form in ``abelian`` / ``intmat``; the Z^k x| Z lattice
extension family in ``extension``; Mobius congruences and torus maps in
``mobius``.  ``cli`` exposes everything as the ``twb`` command.
"""

from .abelian import (
    AbelianEndo,
    FgAbelianGroup,
    abelian_endo,
    cokernel_order,
    enumerate_abelian_endos,
    reidemeister_abelian,
    reidemeister_abelian_sequence,
    twisted_class_reps_abelian,
)
from .chartable import (
    BurnsideReport,
    CharacterTable,
    ConjugacyData,
    DualAction,
    FixedBy,
    MappedTo,
    Reducible,
    burnside_check,
    character_table,
    conjugacy_data,
    dual_action,
    fixed_points_count,
)
from .cyclotomic import Cyclotomic, cyclotomic_polynomial, euler_phi
from .extension import (
    ExtensionEndo,
    LatticeExtensionGroup,
    fiber_class_reps,
    lattice_extension,
    reidemeister_extension,
    validate_extension_endo,
)
from .groups import (
    EventualImage,
    FiniteGroup,
    GroupMap,
    TwistedPartition,
    abelian_group,
    builtin_group,
    compose,
    cyclic_group,
    dihedral_group,
    direct_product,
    endo_from_image_map,
    endo_from_images,
    enumerate_endomorphisms,
    eventual_image,
    group_from_cayley,
    group_from_permutations,
    identity_map,
    iterate_map,
    quaternion_group,
    reidemeister_number,
    same_group,
    symmetric_group,
    twisted_classes,
)
from .infinite import INFINITE, InfiniteType, is_infinite
from .intmat import IntegerMatrix, SmithDecomposition, smith_normal_form
from .mobius import (
    CongruenceReport,
    ReidemeisterSequence,
    congruence_check,
    finite_group_congruence_suite,
    mobius,
    periodic_class_counts,
    reidemeister_sequence,
    sequence_from_values,
    torus_map_reidemeister,
)

__version__ = "0.1.0"
