"""Chermak-Delgado measure and lattice computations for concrete finite groups."""

from cdlab.errors import (
    BadParameter,
    CdlabError,
    GroupValidationError,
    LatticeViolation,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotClosed,
    NotNormal,
    NotPGroup,
    OrderLimitExceeded,
    ParseError,
    SubgroupBudgetExceeded,
    UnknownFamily,
)
from cdlab.group import (
    DEFAULT_MAX_ORDER,
    Group,
    PermGenSet,
    direct_product,
    exponent,
    from_cayley_table,
    from_permutation_generators,
    quotient,
)
from cdlab.families import named, parse_spec
from cdlab.subgroups import (
    CentralSeries,
    Subgroup,
    SubgroupSet,
    all_subgroups,
    center,
    central_series,
    centralizer,
    closure,
    fitting_subgroup,
    is_extraspecial,
    is_normal,
    is_simple,
    is_subnormal,
    normal_closure,
    permutes_with_conjugates,
)
from cdlab.lattice import CDLattice, CDMeasure, cd_lattice, cd_measure, cd_subgroups, mu
from cdlab.report import TheoremReport

__version__ = "0.1.0"

__all__ = [
    "BadParameter",
    "CDLattice",
    "CDMeasure",
    "CdlabError",
    "CentralSeries",
    "DEFAULT_MAX_ORDER",
    "Group",
    "GroupValidationError",
    "LatticeViolation",
    "NoIdentity",
    "NoInverse",
    "NotAssociative",
    "NotClosed",
    "NotNormal",
    "NotPGroup",
    "OrderLimitExceeded",
    "ParseError",
    "PermGenSet",
    "Subgroup",
    "SubgroupBudgetExceeded",
    "SubgroupSet",
    "TheoremReport",
    "UnknownFamily",
    "all_subgroups",
    "cd_lattice",
    "cd_measure",
    "cd_subgroups",
    "center",
    "central_series",
    "centralizer",
    "closure",
    "direct_product",
    "exponent",
    "fitting_subgroup",
    "from_cayley_table",
    "from_permutation_generators",
    "is_extraspecial",
    "is_normal",
    "is_simple",
    "is_subnormal",
    "mu",
    "named",
    "normal_closure",
    "parse_spec",
    "permutes_with_conjugates",
    "quotient",
]
