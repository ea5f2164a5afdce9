from .chain import ChainTerm, Degree, Point, TermKey
from .flow import FlowReport, RefinementRow
from .norm import Decomposition, DifferencePiece, FormNormEstimate, NormBound
from .operator import OperatorReport
from .report import SCHEMA_VERSION, Case, ConvergenceRow, ConvergenceTable, Report

__all__ = [
    "Case",
    "ChainTerm",
    "ConvergenceRow",
    "ConvergenceTable",
    "Decomposition",
    "Degree",
    "DifferencePiece",
    "FlowReport",
    "FormNormEstimate",
    "NormBound",
    "OperatorReport",
    "Point",
    "Report",
    "RefinementRow",
    "SCHEMA_VERSION",
    "TermKey",
]
