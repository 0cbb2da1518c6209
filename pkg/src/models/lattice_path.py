from enum import Enum
from math import gcd
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class Step(str, Enum):
    """Unit steps of a Motzkin-type path."""
    U = "U"
    F = "F"
    D = "D"


# Lexicographic rank used by every enumerator: U < F < D.
STEP_ORDER = {Step.U.value: 0, Step.F.value: 1, Step.D.value: 2}

STEP_RISE = {Step.U.value: 1, Step.F.value: 0, Step.D.value: -1}


def check_alphabet(word: str) -> str:
    foreign = set(word) - set(STEP_RISE)
    if foreign:
        raise ValueError(f"step word {word!r} contains letters outside U/F/D: {sorted(foreign)}")
    return word


def word_sort_key(word: str) -> Tuple[int, ...]:
    return tuple(STEP_ORDER[letter] for letter in word)


class FreeRationalMotzkinPath(BaseModel):
    """A U/F/D word from (0,0) to (s+d, -d); it may dip below the line."""
    model_config = ConfigDict(frozen=True)

    word: str
    s: int = Field(ge=1)
    d: int = Field(ge=1)

    @field_validator("word")
    @classmethod
    def _alphabet(cls, value: str) -> str:
        return check_alphabet(value)

    @model_validator(mode="after")
    def _shape(self):
        if len(self.word) != self.s + self.d:
            raise ValueError(f"word {self.word!r} must have length s+d={self.s + self.d}")
        if sum(STEP_RISE[letter] for letter in self.word) != -self.d:
            raise ValueError(f"word {self.word!r} must end at height -d={-self.d}")
        return self

    def __str__(self) -> str:
        return self.word


class RationalMotzkinPath(FreeRationalMotzkinPath):
    """A free rational Motzkin path that stays weakly above y = -dx/(s+d)."""

    @model_validator(mode="after")
    def _above_line(self):
        height = 0
        for x, letter in enumerate(self.word, start=1):
            height += STEP_RISE[letter]
            if (self.s + self.d) * height + self.d * x < 0:
                raise ValueError(f"word {self.word!r} goes below the line y=-{self.d}x/{self.s + self.d}")
        return self


class LabelVector(BaseModel):
    """Scaled heights (s+d)*y + d*x along a path of type (s+d, -d)."""
    model_config = ConfigDict(frozen=True)

    values: Tuple[int, ...]
    s: int = Field(ge=1)
    d: int = Field(ge=1)

    @model_validator(mode="after")
    def _closed(self):
        if len(self.values) != self.s + self.d + 1:
            raise ValueError(f"label vector needs {self.s + self.d + 1} entries, got {len(self.values)}")
        if self.values[0] != 0 or self.values[-1] != 0:
            raise ValueError(f"label vector must start and end at 0, got {self.values}")
        if gcd(self.s, self.d) == 1:
            inner = self.values[1:-1]
            if len(set(inner)) != len(inner) or 0 in inner:
                raise ValueError(f"inner labels must be distinct and nonzero, got {self.values}")
        return self

    @property
    def minimum(self) -> int:
        return min(self.values)

    def argmin(self) -> int:
        """Index of the smallest label among positions 0..s+d-1."""
        head = self.values[:-1]
        return head.index(min(head))


class GenDyckStepKind(str, Enum):
    U = "U"
    F = "F"
    D = "D"


GEN_DYCK_KIND_ORDER = {GenDyckStepKind.U: 0, GenDyckStepKind.F: 1, GenDyckStepKind.D: 2}


class GenDyckStep(BaseModel):
    """
    One step of an (s,p)-generalized Dyck path.

    U and D carry size p and move by (0,p) and (p,0); F carries i in 1..p-1
    and moves by (i,i).
    """
    model_config = ConfigDict(frozen=True)

    kind: GenDyckStepKind
    size: int = Field(ge=1)

    @classmethod
    def parse(cls, token: str) -> "GenDyckStep":
        token = token.strip()
        if len(token) < 2 or token[0] not in "UFD" or not token[1:].isdigit():
            raise ValueError(f"generalized Dyck step must look like U4/F2/D4, got {token!r}")
        return cls(kind=GenDyckStepKind(token[0]), size=int(token[1:]))

    @property
    def vector(self) -> Tuple[int, int]:
        if self.kind is GenDyckStepKind.U:
            return (0, self.size)
        if self.kind is GenDyckStepKind.D:
            return (self.size, 0)
        return (self.size, self.size)

    def mirrored(self) -> "GenDyckStep":
        """The step seen after reflecting across the anti-diagonal."""
        swap = {GenDyckStepKind.U: GenDyckStepKind.D, GenDyckStepKind.D: GenDyckStepKind.U}
        return GenDyckStep(kind=swap.get(self.kind, self.kind), size=self.size)

    def sort_key(self) -> Tuple[int, int]:
        return (GEN_DYCK_KIND_ORDER[self.kind], self.size)

    def __str__(self) -> str:
        return f"{self.kind.value}{self.size}"


class GenDyckPath(BaseModel):
    """A path (0,0) -> (s,s) weakly above y = x with steps U_p, D_p, F_1..F_{p-1}."""
    model_config = ConfigDict(frozen=True)

    steps: Tuple[GenDyckStep, ...] = ()
    s: int = Field(ge=0)
    p: int = Field(ge=2)

    @model_validator(mode="after")
    def _valid(self):
        x = y = 0
        for step in self.steps:
            if step.kind is GenDyckStepKind.F:
                if not 1 <= step.size <= self.p - 1:
                    raise ValueError(f"flat step {step} needs size in 1..{self.p - 1}")
            elif step.size != self.p:
                raise ValueError(f"step {step} must have size p={self.p}")
            dx, dy = step.vector
            x, y = x + dx, y + dy
            if y < x:
                raise ValueError(f"path {self} goes below the diagonal at ({x},{y})")
        if (x, y) != (self.s, self.s):
            raise ValueError(f"path {self} ends at ({x},{y}) instead of ({self.s},{self.s})")
        return self

    def __str__(self) -> str:
        return " ".join(str(step) for step in self.steps)

    def sort_key(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(step.sort_key() for step in self.steps)


class PathKind(str, Enum):
    """Path families the exhaustive generator knows about."""
    MOTZKIN = "motzkin"
    RATIONAL_MOTZKIN = "rational_motzkin"
    FREE = "free"
    GEN_DYCK = "gen_dyck"
    DYCK = "dyck"
    SYMMETRIC_MOTZKIN = "symmetric_motzkin"
    SYMMETRIC_DYCK = "symmetric_dyck"
    SYMMETRIC_GEN_DYCK = "symmetric_gen_dyck"
