"""
Partitions, hook lengths, conjugation, beta-sets and core predicates.

All functions are pure and accept the immutable Partition model, except the
tuple-level helpers (beta_elements, parts_from_beta_elements, has_hook) which
the abacus, the bijections and the oracle call inside tight loops.
"""

import logging
import re
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple

from src.models.errors import ParameterError
from src.models.partition import BetaSet, Partition

logger = logging.getLogger("PartitionCore")

_PARTITION_TEXT = re.compile(r"^\[\s*(\d+(\s*,\s*\d+)*)?\s*\]$")


def parse_partition(text: str) -> Partition:
    """
    Parse the textual form `[5,4,2,1]` (or `[]` for the empty partition).

    Args:
        text: Bracketed, comma-separated parts

    Returns:
        The partition in canonical order
    """
    match = _PARTITION_TEXT.match(text.strip())
    if not match:
        raise ParameterError(f"partition must look like [a,b,c] or [], got {text!r}")
    body = text.strip()[1:-1].strip()
    if not body:
        return Partition()
    parts = [int(piece) for piece in body.split(",")]
    if any(part == 0 for part in parts):
        raise ParameterError(f"partition parts must be positive, got {text!r}")
    return Partition(parts=parts)


def format_partition(partition: Partition) -> str:
    return str(partition)


def _conjugate(parts: Sequence[int]) -> Tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for part in parts if part >= j) for j in range(1, parts[0] + 1))


def _hook_rows(parts: Sequence[int]) -> List[List[int]]:
    columns = _conjugate(parts)
    return [
        [part - j + columns[j - 1] - i + 1 for j in range(1, part + 1)]
        for i, part in enumerate(parts, start=1)
    ]


def hook_lengths(partition: Partition) -> List[List[int]]:
    """
    Hook length of every box, one row per part.

    Entry (i, j) counts the box itself, the boxes to its right and the boxes
    below it.

    Args:
        partition: The partition whose Young diagram is measured

    Returns:
        A ragged matrix with the shape of the Young diagram
    """
    return _hook_rows(partition.parts)


def conjugate(partition: Partition) -> Partition:
    """Transpose the Young diagram."""
    return Partition(parts=_conjugate(partition.parts))


def beta_elements(parts: Sequence[int]) -> Tuple[int, ...]:
    length = len(parts)
    return tuple(part + length - i for i, part in enumerate(parts, start=1))


def beta_set(partition: Partition) -> BetaSet:
    """The set of first-column hook lengths {lambda_i + l - i}."""
    return BetaSet(elements=beta_elements(partition.parts))


def parts_from_beta_elements(elements: Iterable[int]) -> Tuple[int, ...]:
    ordered = sorted(elements, reverse=True)
    length = len(ordered)
    return tuple(x - (length - i) for i, x in enumerate(ordered, start=1))


def partition_from_beta(beta: BetaSet) -> Partition:
    """Inverse of beta_set: the i-th largest element x_i gives part x_i - (l - i)."""
    return Partition(parts=parts_from_beta_elements(beta.elements))


def has_hook(elements: frozenset, t: int) -> bool:
    if t in elements:
        return True
    return any(x > t and x - t not in elements for x in elements)


def is_t_core_by_beta(partition: Partition, t: int) -> bool:
    """
    Beta-set criterion: t is not in beta, and every x > t in beta has x - t in beta.

    Args:
        partition: The partition under test
        t: Positive modulus

    Returns:
        True when the partition has no hook of length t
    """
    _check_modulus(t)
    return not has_hook(frozenset(beta_elements(partition.parts)), t)


def is_t_core(partition: Partition, t: int) -> bool:
    """True iff no box of the Young diagram has hook length t."""
    _check_modulus(t)
    return all(hook != t for row in _hook_rows(partition.parts) for hook in row)


def is_simultaneous_core(partition: Partition, ts: Sequence[int]) -> bool:
    """True iff the partition is a t-core for every t in ts."""
    if not ts:
        raise ParameterError("at least one modulus is required")
    if len(set(ts)) != len(ts):
        raise ParameterError(f"moduli must be distinct, got {list(ts)}")
    for t in ts:
        _check_modulus(t)
    elements = frozenset(beta_elements(partition.parts))
    return not any(has_hook(elements, t) for t in ts)


def t_core_spectrum(partition: Partition, t_max: int) -> List[int]:
    """All t in 1..t_max for which the partition is a t-core."""
    hooks = {hook for row in _hook_rows(partition.parts) for hook in row}
    return [t for t in range(1, t_max + 1) if t not in hooks]


def corner_count(partition: Partition) -> int:
    """Number of outer corners, i.e. distinct part values."""
    return len(set(partition.parts))


def is_self_conjugate(partition: Partition) -> bool:
    return _conjugate(partition.parts) == partition.parts


@lru_cache(maxsize=None)
def _partitions_of(n: int, largest: int) -> Tuple[Tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    result = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_of(n - first, first):
            result.append((first,) + rest)
    return tuple(result)


def generate_partitions(n: int) -> List[Partition]:
    """All partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise ParameterError(f"n must be nonnegative, got {n}")
    partitions = [Partition(parts=parts) for parts in _partitions_of(n, n)]
    logger.debug(f"Generated {len(partitions)} partitions of {n}")
    return partitions


def _check_modulus(t: int) -> None:
    if t < 1:
        raise ParameterError(f"core modulus must be positive, got {t}")
