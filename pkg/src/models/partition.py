from math import gcd
from typing import FrozenSet, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class Partition(BaseModel):
    """An integer partition stored in canonical non-increasing order."""
    model_config = ConfigDict(frozen=True)

    parts: Tuple[int, ...] = ()

    @field_validator("parts", mode="before")
    @classmethod
    def _canonical(cls, value):
        parts = tuple(value)
        if any(not isinstance(part, int) or isinstance(part, bool) for part in parts):
            raise ValueError(f"parts must be integers, got {parts!r}")
        if any(part < 1 for part in parts):
            raise ValueError(f"parts must be positive, got {parts!r}")
        return tuple(sorted(parts, reverse=True))

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(parts=parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "[" + ",".join(str(part) for part in self.parts) + "]"

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Ordering used by every partition listing: size, then parts."""
        return (self.size, self.parts)


class BetaSet(BaseModel):
    """First-column hook lengths of a partition."""
    model_config = ConfigDict(frozen=True)

    elements: FrozenSet[int] = frozenset()

    @field_validator("elements", mode="before")
    @classmethod
    def _positive(cls, value):
        elements = frozenset(value)
        if any(element < 1 for element in elements):
            raise ValueError(f"beta-set elements must be positive, got {sorted(elements)}")
        return elements

    @classmethod
    def of(cls, *elements: int) -> "BetaSet":
        return cls(elements=elements)

    def __contains__(self, item: int) -> bool:
        return item in self.elements

    def descending(self) -> Tuple[int, ...]:
        return tuple(sorted(self.elements, reverse=True))

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self.descending()) + "}"


class CoreFamily(BaseModel):
    """
    The arithmetic progression of core conditions (s, s+d, ..., s+pd).

    gcd(s, d) = 1 is enforced here; p >= 2 is checked by the operations that
    need it (the bijection and the main formula).
    """
    model_config = ConfigDict(frozen=True)

    s: int = Field(ge=1)
    d: int = Field(ge=1)
    p: int = Field(ge=1)

    @model_validator(mode="after")
    def _coprime(self):
        if gcd(self.s, self.d) != 1:
            raise ValueError(f"s and d must be relatively prime, got s={self.s}, d={self.d}")
        return self

    @classmethod
    def parse(cls, text: str) -> "CoreFamily":
        """Parse the CLI form `s,d,p`."""
        pieces = [piece.strip() for piece in text.split(",")]
        if len(pieces) != 3 or not all(piece.lstrip("-").isdigit() for piece in pieces):
            raise ValueError(f"family must look like 's,d,p', got {text!r}")
        s, d, p = (int(piece) for piece in pieces)
        return cls(s=s, d=d, p=p)

    @property
    def moduli(self) -> Tuple[int, ...]:
        return tuple(self.s + k * self.d for k in range(self.p + 1))

    def __str__(self) -> str:
        return "(" + ",".join(str(t) for t in self.moduli) + ")"


class ResidueVector(BaseModel):
    """
    Bead counts per nonzero residue class modulo s.

    counts[r-1] beads sit at r, r+s, ..., r+(counts[r-1]-1)s, so the encoded
    partition is an s-core by construction.
    """
    model_config = ConfigDict(frozen=True)

    s: int = Field(ge=1)
    counts: Tuple[int, ...] = ()

    @model_validator(mode="after")
    def _shape(self):
        if len(self.counts) != self.s - 1:
            raise ValueError(f"residue vector for s={self.s} needs {self.s - 1} counts, got {len(self.counts)}")
        if any(count < 0 for count in self.counts):
            raise ValueError(f"residue counts must be nonnegative, got {self.counts}")
        return self

    def to_beta_set(self) -> BetaSet:
        return BetaSet(elements=(
            residue + level * self.s
            for residue, count in enumerate(self.counts, start=1)
            for level in range(count)
        ))
