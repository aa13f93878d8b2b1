"""Dyck path statistics, the Billey-Jockusch-Stanley and Foata-Zeilberger
bijections, and exhaustive checks of the identities that connect them."""
from .bijections import bjs_forward, bjs_inverse, fz_forward, fz_inverse
from .enumeration import (
    catalan,
    enumerate_av321,
    enumerate_bicoloured_motzkin,
    enumerate_dyck,
    enumerate_motzkin,
    enumerate_riordan,
    motzkin_number,
    riordan_number,
)
from .paths import (
    AreaProfile,
    BicolouredMotzkinPath,
    DyckPath,
    MotzkinPath,
    PathError,
    Valley,
    area_profile,
    format_dyck,
    format_motzkin,
    parse_dyck,
    parse_motzkin,
    render_ascii,
    valleys,
)
from .permutations import (
    IndexClassification,
    Kind,
    Permutation,
    classify,
    format_permutation,
    inverse,
    is_321_avoiding,
    parse_permutation,
)
from .statistics import (
    double_centraliser_predicate,
    gorenstein_predicate,
    set_D,
    set_F,
    set_N,
    statistic_double_deficiencies,
)
from .verify import VerificationReport, verify, verify_conjecture1, verify_conjecture2, verify_lemmas

__version__ = "0.1.0"
