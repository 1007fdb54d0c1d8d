"""Exact quantum seeds for quantized Schubert cell clusters.

The package builds, for a simple Lie type with a chosen parabolic, the
clusters of quantized minors attached to chains of prefixes of one fixed
reduced word, together with their exact symplectic and exchange matrices,
and walks between them by verified exchange-matrix mutations.  All
arithmetic is exact (integers and rationals); every commutation exponent
is derived twice, from the weight formula and from an independent
quasi-polynomial oracle, and any disagreement aborts.
"""

from .errors import (
    ConstructionError,
    GroupTooLargeError,
    InputError,
    OracleMismatchError,
    QschubError,
    VerificationError,
)
from .rootdata import RootDatum, build_root_datum, pairing, reflect
from .weyl import (
    WeylElt,
    bruhat_leq,
    compose,
    enumerate_weyl,
    enumerate_Wp,
    from_word,
    identity,
    inversion_set,
    longest_element,
    weak_left_leq,
)
from .positions import PositionTable, fix_word
from .lusztig import (
    ZMonomial,
    diagonal,
    gamma_sequence,
    oracle_exponent,
    z_commutation_exponent,
)
from .seeds import (
    Cluster,
    MinorLabel,
    QuantumSeed,
    build_cluster,
    build_seed,
    certify_order,
    check_compatible,
    formula_exponent,
    h_monomial,
    b_column,
    is_splitting,
    lambda_matrix,
    make_label,
)
from .mutation import (
    MutationSite,
    SchubertPath,
    bfz_mutate,
    create_annihilate,
    find_sites,
    reachable_chains,
    schubert_mutate,
)
from .serialize import dumps, parse_seed_document, seed_document

__version__ = "0.1.0"
