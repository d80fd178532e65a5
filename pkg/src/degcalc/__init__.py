"""Degree calculus for transfinite degrees of inaccessibility and Mahloness."""

from .errors import (
    BadParameter,
    CycleError,
    DanglingRef,
    DegreeError,
    Exhausted,
    NotALimit,
    NotInBase,
    NotNameable,
    OutOfFragment,
    OutOfRange,
    ParseError,
    SchemaError,
    UnknownNode,
)
from .kb import kb_implies, kb_load, kb_separations, kb_validate
from .metaordinal import (
    W,
    MetaOrdinal,
    mo_add,
    mo_admissible_at,
    mo_cmp,
    mo_enumerate_below,
    mo_eval_at,
    mo_normalize,
    mo_params,
    mo_parse,
    mo_print,
    mo_succ,
)
from .model import (
    MultOmega,
    VeblenImage,
    apply_I,
    base_class,
    class_of,
    diagonal_const_family,
    diagonal_level_family,
    exact_degree,
    iterate_I,
    least,
    member,
    oracle_member_const,
)
from .names import DegreeName, Kind, name_parse, name_print, name_to_term, term_to_name
from .ordinal import (
    OMEGA,
    ONE,
    ZERO,
    Ordering,
    Ordinal,
    Phi,
    divides_omega_pow,
    fund_seq,
    nat,
    omega_pow,
    ord_add,
    ord_cmp,
    ord_is_limit,
    ord_mul,
    ord_parse,
    ord_print,
    ord_succ,
    veblen,
)

__version__ = "0.1.0"
