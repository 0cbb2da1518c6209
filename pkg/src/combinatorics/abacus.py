"""
The s-abacus and the (s+d, d)-abacus of a partition.

Position (i, j) of the extended abacus is labeled (s+d)i + dj for every
integer row i and columns 0..s+d; a position with a nonnegative label carries
a bead when the label lies in the beta-set. Column s+d repeats column 0 shifted
by d rows, so reconstruction only ever reads columns 0..s+d-1.
"""

import logging
from math import gcd
from typing import FrozenSet, Optional, Sequence, Tuple

from src.combinatorics.partition_core import beta_elements
from src.models.abacus import BoundaryProfile, ExtendedAbacus
from src.models.errors import InvalidPathError, ParameterError
from src.models.lattice_path import STEP_RISE, check_alphabet
from src.models.partition import BetaSet, Partition
from src.utils.svg import svgcircle, svggroup, svglinelist, svgroot, svgstring, svgtext

logger = logging.getLogger("Abacus")


def _check_pair(s: int, d: int) -> None:
    if s < 1 or d < 1:
        raise ParameterError(f"s and d must be positive, got s={s}, d={d}")
    if gcd(s, d) != 1:
        raise ParameterError(f"s and d must be relatively prime, got s={s}, d={d}")


def label(i: int, j: int, s: int, d: int) -> int:
    """
    Label of position (i, j) on the (s+d, d)-abacus.

    Args:
        i: Row, any integer
        j: Column in 0..s+d
        s: First modulus
        d: Common difference

    Returns:
        (s+d)i + dj
    """
    if not 0 <= j <= s + d:
        raise ParameterError(f"column {j} outside 0..{s + d}")
    return (s + d) * i + d * j


def lowest_nonnegative_row(j: int, s: int, d: int) -> int:
    """ceil(-dj / (s+d)): the first row of column j with a nonnegative label."""
    return -((d * j) // (s + d))


def extended_abacus(partition: Partition, s: int, d: int) -> ExtendedAbacus:
    _check_pair(s, d)
    return ExtendedAbacus(s=s, d=d, beta=BetaSet(elements=beta_elements(partition.parts)))


def _profile(elements: FrozenSet[int], s: int, d: int) -> Tuple[int, ...]:
    width = s + d
    values = []
    for j in range(width + 1):
        i = lowest_nonnegative_row(j, s, d)
        while width * i + d * j in elements:
            i += 1
        values.append(i)
    return tuple(values)


def boundary_profile(partition: Partition, s: int, d: int) -> BoundaryProfile:
    """
    Row of the smallest nonnegative spacer in each column 0..s+d.

    The scan works for any partition; the endpoint and step properties only
    hold for cores of an (s, s+d, ..., s+pd) family and are checked by
    verify_profile.

    Args:
        partition: Any partition
        s: First modulus
        d: Common difference, coprime to s

    Returns:
        The profile f(0), ..., f(s+d)
    """
    _check_pair(s, d)
    values = _profile(frozenset(beta_elements(partition.parts)), s, d)
    return BoundaryProfile(values=values, s=s, d=d)


def verify_profile(profile: BoundaryProfile, p: int) -> bool:
    """
    Check the endpoint, unit-step and pattern properties of a core's profile.

    Args:
        profile: Values f(0..s+d) with their (s, d)
        p: Number of core conditions beyond s (p >= 2)

    Returns:
        True when all three properties hold
    """
    f = profile.values
    if f[0] != 0 or f[-1] != -profile.d:
        return False
    for j in range(1, len(f)):
        if abs(f[j] - f[j - 1]) > 1:
            return False
    if p >= 3:
        for j in range(1, len(f)):
            if f[j - 1] == f[j] - 1:
                if any(f[m] < f[j - 1] for m in range(max(0, j - p + 1), j - 1)):
                    return False
    return True


def profile_to_word(profile: BoundaryProfile) -> str:
    """Read a U/F/D word off consecutive profile values."""
    letters = []
    for j in range(1, len(profile.values)):
        rise = profile.values[j] - profile.values[j - 1]
        if rise == 1:
            letters.append("U")
        elif rise == 0:
            letters.append("F")
        elif rise == -1:
            letters.append("D")
        else:
            logger.error(f"Profile {profile.values} is not a lattice path: jump of {rise} at column {j}")
            raise InvalidPathError(f"profile {profile.values} jumps by {rise} at column {j}")
    return "".join(letters)


def word_to_profile(word: str, s: int, d: int) -> BoundaryProfile:
    """Heights of a U/F/D word, read as a boundary profile."""
    _check_pair(s, d)
    check_alphabet(word)
    if len(word) != s + d:
        raise InvalidPathError(f"word {word!r} must have length s+d={s + d}")
    values = [0]
    for letter in word:
        values.append(values[-1] + STEP_RISE[letter])
    return BoundaryProfile(values=tuple(values), s=s, d=d)


def _default_rows(elements: FrozenSet[int], s: int, d: Optional[int]) -> range:
    top = max(elements, default=0)
    if d is None:
        return range(0, top // s + 2)
    return range(-d, max(top // (s + d) + 2, 2))


def _grid(partition: Partition, s: int, d: Optional[int], rows: Optional[range]):
    elements = frozenset(beta_elements(partition.parts))
    if d is None:
        if s < 1:
            raise ParameterError(f"s must be positive, got {s}")
        columns, row_step, column_step = range(s), s, 1
    else:
        _check_pair(s, d)
        columns, row_step, column_step = range(s + d + 1), s + d, d
    rows = rows if rows is not None else _default_rows(elements, s, d)

    def cell(i: int, j: int) -> int:
        return row_step * i + column_step * j

    return elements, columns, rows, cell


def render_abacus(partition: Partition, s: int, d: Optional[int] = None,
                  rows: Optional[range] = None) -> str:
    """
    Fixed-width text picture of an abacus.

    Beads are printed as `(n)`, spacers as bare `n`. With d omitted the plain
    s-abacus (columns 0..s-1, labels si + j) is drawn; otherwise the
    (s+d, d)-abacus with columns 0..s+d. Rows are printed top to bottom from
    the highest row index.

    Args:
        partition: Partition whose beta-set places the beads
        s: Modulus (or first modulus of the family)
        d: Common difference, or None for the s-abacus
        rows: Row indices to draw

    Returns:
        The grid, one line per row
    """
    elements, columns, rows, cell = _grid(partition, s, d, rows)
    labels = {(i, j): cell(i, j) for i in rows for j in columns}
    width = max((len(str(value)) for value in labels.values()), default=1) + 2

    lines = []
    for i in reversed(rows):
        cells = []
        for j in columns:
            value = labels[(i, j)]
            text = f"({value})" if value >= 0 and value in elements else str(value)
            cells.append(text.rjust(width))
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def render_abacus_svg(partition: Partition, s: int, d: Optional[int] = None,
                      rows: Optional[range] = None) -> str:
    """SVG picture of an abacus: a label per position, a circle per bead and,
    for the extended abacus, the boundary polyline through (j, f(j))."""
    elements, columns, rows, cell = _grid(partition, s, d, rows)
    svg = svgroot(-0.5, rows.start - 0.5, len(columns), len(rows))
    labels = svggroup(svg, id="labels")
    beads = svggroup(svg, id="beads")
    for i in rows:
        for j in columns:
            value = cell(i, j)
            svgtext(labels, (j, i), str(value))
            if value >= 0 and value in elements:
                svgcircle(beads, (j, i), 0.4)
    if d is not None:
        profile = _profile(elements, s, d)
        svglinelist(svggroup(svg, id="boundary"), [(j, profile[j]) for j in columns],
                    stroke="red")
    return svgstring(svg)


def bead_labels(rendered: str) -> Sequence[int]:
    """Labels printed as beads in a render_abacus picture."""
    return sorted(int(token.strip("()")) for token in rendered.split() if token.startswith("("))
