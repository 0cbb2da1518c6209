from math import gcd
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.models.partition import BetaSet


class ExtendedAbacus(BaseModel):
    """The (s+d, d)-abacus of a partition: labels (s+d)i + dj, beads from the beta-set."""
    model_config = ConfigDict(frozen=True)

    s: int = Field(ge=1)
    d: int = Field(ge=1)
    beta: BetaSet = BetaSet()

    @model_validator(mode="after")
    def _coprime(self):
        if gcd(self.s, self.d) != 1:
            raise ValueError(f"s and d must be relatively prime, got s={self.s}, d={self.d}")
        return self

    @property
    def width(self) -> int:
        return self.s + self.d

    def label(self, i: int, j: int) -> int:
        return (self.s + self.d) * i + self.d * j

    def is_bead(self, i: int, j: int) -> bool:
        value = self.label(i, j)
        return value >= 0 and value in self.beta


class BoundaryProfile(BaseModel):
    """
    Per-column row of the smallest nonnegative spacer, f(0..s+d).

    Only the length is enforced on construction; the endpoint, unit-step and
    pattern properties are checked by abacus.verify_profile so that profiles
    of non-cores can still be represented.
    """
    model_config = ConfigDict(frozen=True)

    values: Tuple[int, ...]
    s: int = Field(ge=1)
    d: int = Field(ge=1)

    @model_validator(mode="after")
    def _length(self):
        if len(self.values) != self.s + self.d + 1:
            raise ValueError(f"profile needs {self.s + self.d + 1} values, got {len(self.values)}")
        return self

    def __getitem__(self, j: int) -> int:
        return self.values[j]
