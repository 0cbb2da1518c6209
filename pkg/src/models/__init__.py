"""
Data models for the core-motzkin library.

Contains Pydantic models used for structured data representation across the system.
"""

from src.models.abacus import BoundaryProfile, ExtendedAbacus
from src.models.errors import (
    ConfigurationError,
    CoreMotzkinError,
    InexactDivisionError,
    InvalidPathError,
    NotACoreError,
    OracleCapExceeded,
    ParameterError
)
from src.models.lattice_path import (
    FreeRationalMotzkinPath,
    GenDyckPath,
    GenDyckStep,
    GenDyckStepKind,
    LabelVector,
    PathKind,
    RationalMotzkinPath,
    Step
)
from src.models.partition import BetaSet, CoreFamily, Partition, ResidueVector
from src.models.results import CountResult, FormulaId, OutputFormat, VerificationRecord, VerificationReport

__all__ = [
    'BoundaryProfile',
    'ExtendedAbacus',
    'ConfigurationError',
    'CoreMotzkinError',
    'InexactDivisionError',
    'InvalidPathError',
    'NotACoreError',
    'OracleCapExceeded',
    'ParameterError',
    'FreeRationalMotzkinPath',
    'GenDyckPath',
    'GenDyckStep',
    'GenDyckStepKind',
    'LabelVector',
    'PathKind',
    'RationalMotzkinPath',
    'Step',
    'BetaSet',
    'CoreFamily',
    'Partition',
    'ResidueVector',
    'CountResult',
    'FormulaId',
    'OutputFormat',
    'VerificationRecord',
    'VerificationReport'
]
