from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field


class FormulaId(str, Enum):
    """Closed formulas and named numbers exposed by the counting module."""
    ANDERSON = "anderson"
    WANG = "wang"
    BNY = "bny"
    MAIN = "main"
    MAINPROP = "mainprop"
    FREEMOTZ = "freemotz"
    FREE_PATHS = "free_paths"
    CORONE = "corone"
    GEN_DYCK = "gen_dyck"
    NARAYANA = "narayana"
    CORNERS = "corners"
    CORNERS_TWO = "corners_two"
    CORNERS_MOTZKIN = "corners_motzkin"
    SC_FMS = "sc_fms"
    SYM_DYCK = "sym_dyck"
    SC_MAIN = "sc_main"
    CATALAN = "catalan"
    MOTZKIN = "motzkin"
    ORACLE = "oracle"


class CountResult(BaseModel):
    """An exact count together with the inputs that produced it."""
    model_config = ConfigDict(frozen=True)

    value: int = Field(ge=0)
    parameters: Dict[str, Any] = Field(default_factory=dict)
    formula_id: FormulaId


class VerificationRecord(BaseModel):
    """One formula-versus-oracle comparison."""
    check: str
    family: Tuple[int, ...]
    formula_value: int
    oracle_value: int
    match: bool
    detail: Optional[str] = None


class VerificationReport(BaseModel):
    """Outcome of a verification run over a parameter grid."""
    grid: Tuple[int, int, int]
    records: List[VerificationRecord] = Field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def mismatches(self) -> List[VerificationRecord]:
        return [record for record in self.records if not record.match]

    @property
    def passed(self) -> bool:
        return not self.mismatches


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"
    SVG = "svg"
