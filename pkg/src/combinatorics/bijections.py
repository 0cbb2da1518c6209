"""
Bijections between simultaneous cores and lattice paths.

core_to_path / path_to_core connect (s, s+d, ..., s+pd)-cores with rational
Motzkin paths of type (s+d, -d) avoiding U F^i U (i <= p-3). phi / phi_inverse
connect restricted Motzkin paths of length s with (s,p)-generalized Dyck paths
by cutting the Motzkin word into units and replacing each unit by one step.
"""

import logging
from typing import List, Tuple

from src.combinatorics.abacus import boundary_profile, lowest_nonnegative_row, profile_to_word
from src.combinatorics.oracle import enumerate_cores
from src.combinatorics.partition_core import corner_count, is_simultaneous_core, parts_from_beta_elements
from src.combinatorics.paths import count_up_steps, has_forbidden_pattern, heights, is_motzkin
from src.models.errors import InvalidPathError, NotACoreError, ParameterError
from src.models.lattice_path import (
    GenDyckPath,
    GenDyckStep,
    GenDyckStepKind,
    RationalMotzkinPath,
    check_alphabet,
)
from src.models.partition import CoreFamily, Partition

logger = logging.getLogger("Bijections")


def _check_family(fam: CoreFamily) -> None:
    if fam.p < 2:
        raise ParameterError(f"the path bijection needs p >= 2, got family {fam}")


def core_to_path(partition: Partition, fam: CoreFamily) -> RationalMotzkinPath:
    """
    Read the boundary of the spacers on the (s+d, d)-abacus as a path.

    Args:
        partition: An (s, s+d, ..., s+pd)-core
        fam: The core family

    Returns:
        The rational Motzkin path of type (s+d, -d)

    Raises:
        NotACoreError: The partition fails one of the core conditions
    """
    _check_family(fam)
    if not is_simultaneous_core(partition, fam.moduli):
        logger.error(f"{partition} is not a {fam}-core")
        raise NotACoreError(f"{partition} is not a {fam}-core")
    word = profile_to_word(boundary_profile(partition, fam.s, fam.d))
    return RationalMotzkinPath(word=word, s=fam.s, d=fam.d)


def path_to_core(path: RationalMotzkinPath, fam: CoreFamily) -> Partition:
    """
    Rebuild the core whose spacer boundary is the given path.

    Column j (0 <= j < s+d) carries beads on every row from its lowest
    nonnegative row up to, but excluding, the height of the path after j steps.

    Args:
        path: A rational Motzkin path of type (s+d, -d)
        fam: The core family; decides which U F^i U factors are forbidden

    Returns:
        The partition read from the reconstructed beta-set
    """
    _check_family(fam)
    if (path.s, path.d) != (fam.s, fam.d):
        raise ParameterError(f"path of type ({path.s + path.d},-{path.d}) does not match family {fam}")
    if has_forbidden_pattern(path.word, fam.p):
        raise InvalidPathError(f"{path.word} contains U F^i U with i <= {fam.p - 3}")
    width = fam.s + fam.d
    f = heights(path.word)
    elements = [
        width * i + fam.d * j
        for j in range(width)
        for i in range(lowest_nonnegative_row(j, fam.s, fam.d), f[j])
    ]
    return Partition(parts=parts_from_beta_elements(elements))


def _units(word: str, p: int) -> List[Tuple[GenDyckStepKind, int, int]]:
    """Greedy unit decomposition: (kind, size, letters consumed) per unit."""
    units = []
    i = 0
    while i < len(word):
        letter = word[i]
        if letter == "F":
            units.append((GenDyckStepKind.F, 1, 1))
        elif letter == "D":
            units.append((GenDyckStepKind.D, p, 1))
        else:
            flats = 0
            while i + 1 + flats < len(word) and word[i + 1 + flats] == "F":
                flats += 1
            if flats >= p - 2:
                units.append((GenDyckStepKind.U, p, p - 1))
            else:
                closing = i + 1 + flats
                if closing >= len(word) or word[closing] != "D":
                    raise InvalidPathError(f"{word} has no unit decomposition at position {i}")
                units.append((GenDyckStepKind.F, flats + 2, flats + 2))
        i += units[-1][2]
    return units


def phi(word: str, p: int) -> GenDyckPath:
    """
    Map a Motzkin path avoiding U F^i U (i <= p-3) to an (s,p)-generalized Dyck path.

    Units: U F^{p-2} -> U_p, D -> D_p, F -> F_1, U F^{i-2} D -> F_i.
    """
    if p < 2:
        raise ParameterError(f"p must be at least 2, got {p}")
    check_alphabet(word)
    if not is_motzkin(word):
        raise InvalidPathError(f"{word!r} is not a Motzkin path")
    if has_forbidden_pattern(word, p):
        raise InvalidPathError(f"{word!r} contains U F^i U with i <= {p - 3}")
    steps = tuple(GenDyckStep(kind=kind, size=size) for kind, size, _ in _units(word, p))
    return GenDyckPath(steps=steps, s=len(word), p=p)


def phi_inverse(path: GenDyckPath) -> str:
    letters = []
    for step in path.steps:
        if step.kind is GenDyckStepKind.U:
            letters.append("U" + "F" * (path.p - 2))
        elif step.kind is GenDyckStepKind.D:
            letters.append("D")
        elif step.size == 1:
            letters.append("F")
        else:
            letters.append("U" + "F" * (step.size - 2) + "D")
    return "".join(letters)


def corners_equal_upsteps(partition: Partition, fam: CoreFamily) -> bool:
    """Compare the number of corners with the up steps of the image path (d = 1)."""
    if fam.d != 1:
        raise ParameterError(f"corner/up-step equality is only established for d = 1, got family {fam}")
    return corner_count(partition) == count_up_steps(core_to_path(partition, fam).word)


def core_to_gen_dyck(partition: Partition, s: int, p: int) -> GenDyckPath:
    """Compose core_to_path (d = 1), dropping the final D, with phi."""
    path = core_to_path(partition, CoreFamily(s=s, d=1, p=p))
    return phi(path.word[:-1], p)


def gen_dyck_to_core(path: GenDyckPath) -> Partition:
    if path.s < 1:
        raise ParameterError("the generalized Dyck path must have semilength at least 1")
    word = phi_inverse(path) + "D"
    fam = CoreFamily(s=path.s, d=1, p=path.p)
    return path_to_core(RationalMotzkinPath(word=word, s=path.s, d=1), fam)


def corner_upstep_report(s: int, d: int, p: int) -> Tuple[int, int]:
    """
    Count the cores of a family whose corner count equals the up-step count.

    Returns:
        (agree, total) over every core the oracle enumerates
    """
    fam = CoreFamily(s=s, d=d, p=p)
    _check_family(fam)
    cores = enumerate_cores(list(fam.moduli))
    agree = sum(
        1 for core in cores
        if corner_count(core) == count_up_steps(core_to_path(core, fam).word)
    )
    logger.info(f"Corners match up steps for {agree} of {len(cores)} {fam}-cores")
    return agree, len(cores)
