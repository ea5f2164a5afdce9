from chaincalc.chains import ChainBuilder, DiracChain, difference, dumps, loads, restrict, support, translate
from chaincalc.convergence import DiskDomain, SquareDomain, parse_domain
from chaincalc.data_types import (
    SCHEMA_VERSION,
    Case,
    ConvergenceRow,
    ConvergenceTable,
    Decomposition,
    DifferencePiece,
    FlowReport,
    FormNormEstimate,
    NormBound,
    OperatorReport,
    RefinementRow,
    Report,
)
from chaincalc.data_types.config import (
    ConvergenceConfig,
    FDConfig,
    FlowConfig,
    VerifyConfig,
)
from chaincalc.exceptions import (
    CertificateViolationError,
    ChainCalcError,
    ChainFormatError,
    DecompositionMismatchError,
    DerivativeBudgetError,
    DimensionMismatchError,
    ExpressionParseError,
    FlowEscapeError,
    GradeMismatchError,
    InvalidMultiIndexError,
    UnknownDemoError,
    UnknownSuiteError,
    UnknownTheoremError,
    UnsupportedOrderError,
)
from chaincalc.exterior import (
    KVector,
    clifford_perp,
    clifford_perp_sign,
    contract,
    inner,
    mass,
    perp,
    perp_involution_sign,
    wedge,
)
from chaincalc.factories import (
    ConvergenceFactory,
    DemoFactory,
    SuiteFactory,
    register_demo,
    register_suite,
    register_theorem,
)
from chaincalc.fields import SmoothMap, SymbolicField, VectorFieldSpec
from chaincalc.flow import (
    TimeForm,
    evolve,
    flow_leibniz_verify,
    ftc_flow_verify,
    leibniz_verify,
    reynolds_verify,
    stokes_flow_verify,
    swept_chain,
    trace_chain,
)
from chaincalc.forms import (
    Form,
    codifferential,
    d,
    flat_wedge,
    integrate,
    interior,
    laplacian,
    lie,
    pullback,
    star,
    wedge_forms,
)
from chaincalc.interfaces import DemoABC, RegionABC, ScalarFieldABC, SuiteABC, TheoremABC
from chaincalc.norms import (
    check_decomposition,
    decompose_pairing,
    decompose_trivial,
    form_norm_estimate,
    inside_check,
    norm_bound,
    norm_lower,
    norm_upper,
)
from chaincalc.operators import (
    anticommutator,
    boundary,
    cobound,
    commutator,
    dir_boundary,
    dirac_op,
    extrude,
    extrude_kvector,
    laplace,
    mult,
    mult_closed_form,
    perp_chain,
    prederiv,
    pushforward,
    retract,
)
from chaincalc.product import cartesian_wedge, lift_form, product_form
from chaincalc.regions import (
    BallRegion,
    BoxRegion,
    HalfSpaceRegion,
    PredicateRegion,
    SlitDiskRegion,
)

try:
    from chaincalc.version import version
except ImportError:  # source checkout without a build
    version = "0.0.0"

__all__ = [
    "BallRegion",
    "BoxRegion",
    "Case",
    "ChainBuilder",
    "CertificateViolationError",
    "ChainCalcError",
    "ChainFormatError",
    "ConvergenceConfig",
    "ConvergenceFactory",
    "ConvergenceRow",
    "ConvergenceTable",
    "Decomposition",
    "DecompositionMismatchError",
    "DemoABC",
    "DemoFactory",
    "DerivativeBudgetError",
    "DifferencePiece",
    "DimensionMismatchError",
    "DiracChain",
    "DiskDomain",
    "ExpressionParseError",
    "FDConfig",
    "FlowConfig",
    "FlowEscapeError",
    "FlowReport",
    "Form",
    "FormNormEstimate",
    "GradeMismatchError",
    "HalfSpaceRegion",
    "InvalidMultiIndexError",
    "KVector",
    "NormBound",
    "OperatorReport",
    "PredicateRegion",
    "RefinementRow",
    "RegionABC",
    "Report",
    "SCHEMA_VERSION",
    "ScalarFieldABC",
    "SlitDiskRegion",
    "SmoothMap",
    "SquareDomain",
    "SuiteABC",
    "SuiteFactory",
    "SymbolicField",
    "TheoremABC",
    "TimeForm",
    "UnknownDemoError",
    "UnknownSuiteError",
    "UnknownTheoremError",
    "UnsupportedOrderError",
    "VectorFieldSpec",
    "VerifyConfig",
    "anticommutator",
    "boundary",
    "cartesian_wedge",
    "check_decomposition",
    "clifford_perp",
    "clifford_perp_sign",
    "cobound",
    "codifferential",
    "commutator",
    "contract",
    "d",
    "decompose_pairing",
    "decompose_trivial",
    "difference",
    "dir_boundary",
    "dirac_op",
    "dumps",
    "evolve",
    "extrude",
    "extrude_kvector",
    "flat_wedge",
    "flow_leibniz_verify",
    "form_norm_estimate",
    "ftc_flow_verify",
    "inner",
    "inside_check",
    "integrate",
    "interior",
    "laplace",
    "laplacian",
    "leibniz_verify",
    "lie",
    "lift_form",
    "loads",
    "mass",
    "mult",
    "mult_closed_form",
    "norm_bound",
    "norm_lower",
    "norm_upper",
    "parse_domain",
    "perp",
    "perp_chain",
    "perp_involution_sign",
    "prederiv",
    "product_form",
    "pullback",
    "pushforward",
    "register_demo",
    "register_suite",
    "register_theorem",
    "restrict",
    "retract",
    "reynolds_verify",
    "star",
    "stokes_flow_verify",
    "support",
    "swept_chain",
    "trace_chain",
    "translate",
    "version",
    "wedge",
    "wedge_forms",
]
