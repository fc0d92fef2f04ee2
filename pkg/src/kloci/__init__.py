"""Exact K-ranks, K-Betti numbers and their jump loci over Laurent polynomial rings."""
from .complexes import (
    ChainComplex,
    betti_jump_locus,
    induced_complex,
    k_betti,
    mapping_cone_of_identity,
    minors_outside_augmentation,
    validate_complex,
    verify_betti_locus,
)
from .jumploci import (
    BudgetExceeded,
    JumpLocus,
    VerificationReport,
    brute_force_is_k_module,
    locus_membership,
    module_jump_locus,
    multi_module_jump_locus,
    verify_locus,
)
from .laurent import GroupRing, LaurentPoly, coefficient_ideal, is_k_set, support
from .lattices import GroupHom, Sublattice, hermite_normal_form, kernel_lattice, smith_invariants
from .matrank import (
    PolyMatrix,
    determinant,
    k_rank,
    mccoy_rank,
    mccoy_rank_direct,
    minors,
    rank_drop_locus,
    rank_jump_locus,
)
from .partitions import Partition, SupportTooLarge, enumerate_partitions, partition_subgroup
from .rings import (
    K0,
    K1,
    ZZ,
    Essential,
    FromFilter,
    FromHereditary,
    Ideal,
    Ring,
    StrictSubsetOf,
    StrictSupersetOf,
    SubsetOf,
    SupersetOf,
    Zmod,
)

__version__ = "0.1.0"
