"""
Motzkin, rational Motzkin, free and generalized Dyck paths.

Step words are plain strings over U/F/D. Every enumerator returns its paths in
lexicographic order with U < F < D (generalized Dyck steps: U_p < F_1 < ... <
F_{p-1} < D_p), so listings are reproducible.
"""

import logging
from functools import lru_cache
from math import gcd
from typing import Iterator, List, Optional, Tuple

from src.models.errors import InvalidPathError, ParameterError
from src.models.lattice_path import (
    STEP_RISE,
    FreeRationalMotzkinPath,
    GenDyckPath,
    GenDyckStep,
    GenDyckStepKind,
    LabelVector,
    RationalMotzkinPath,
    check_alphabet,
)
from src.utils.svg import svggroup, svglinelist, svgroot, svgstring

logger = logging.getLogger("Paths")

_SWAP = str.maketrans("UD", "DU")


def _check_pair(s: int, d: int) -> None:
    if s < 1 or d < 1:
        raise ParameterError(f"s and d must be positive, got s={s}, d={d}")
    if gcd(s, d) != 1:
        raise ParameterError(f"s and d must be relatively prime, got s={s}, d={d}")


def _check_p(p: int) -> None:
    if p < 2:
        raise ParameterError(f"p must be at least 2, got {p}")


def parse_word(text: str) -> str:
    """Normalize a step word (case-insensitive) and reject foreign letters."""
    word = text.strip().upper()
    try:
        return check_alphabet(word)
    except ValueError as e:
        raise InvalidPathError(str(e)) from e


def heights(word: str) -> List[int]:
    """Running heights of a word, starting with 0."""
    result = [0]
    for letter in word:
        result.append(result[-1] + STEP_RISE[letter])
    return result


def count_up_steps(word: str) -> int:
    return word.count("U")


def count_factor(word: str, factor: str) -> int:
    """Occurrences of factor in word, overlaps included (UUU holds two UU)."""
    return sum(1 for i in range(len(word) - len(factor) + 1) if word.startswith(factor, i))


def is_motzkin(word: str) -> bool:
    """True for a path that never goes below the x-axis and ends on it."""
    levels = heights(word)
    return min(levels) >= 0 and levels[-1] == 0


def _check_free(word: str, s: int, d: int) -> None:
    _check_pair(s, d)
    check_alphabet(word)
    if len(word) != s + d:
        raise InvalidPathError(f"word {word!r} must have length s+d={s + d}")
    if heights(word)[-1] != -d:
        raise InvalidPathError(f"word {word!r} must end at height -d={-d}")


def label_vector(word: str, s: int, d: int) -> LabelVector:
    """
    Scaled heights of a word of length s+d.

    Each U adds s+2d, each F adds d and each D subtracts s, so entry x equals
    (s+d) * height + d * x.

    Args:
        word: Step word of length s+d
        s: First modulus
        d: Common difference, coprime to s

    Returns:
        The s+d+1 labels
    """
    _check_pair(s, d)
    check_alphabet(word)
    if len(word) != s + d:
        raise InvalidPathError(f"word {word!r} must have length s+d={s + d}")
    increments = {"U": s + 2 * d, "F": d, "D": -s}
    values = [0]
    for letter in word:
        values.append(values[-1] + increments[letter])
    return LabelVector(values=tuple(values), s=s, d=d)


def is_rational(word: str, s: int, d: int) -> bool:
    """True when the free path stays weakly above y = -dx/(s+d)."""
    _check_free(word, s, d)
    return label_vector(word, s, d).minimum >= 0


def has_forbidden_pattern(word: str, p: int, cyclic: bool = False) -> bool:
    """
    Does the word contain a factor U F^i U with 0 <= i <= p-3?

    Args:
        word: Step word
        p: Pattern bound; p = 2 forbids nothing
        cyclic: Let factors wrap around the end of the word

    Returns:
        True when a forbidden factor occurs
    """
    _check_p(p)
    if p == 2 or not word:
        return False
    text = word + word if cyclic else word
    for start in range(len(word) if cyclic else len(text)):
        if text[start] != "U":
            continue
        for flats in range(p - 2):
            end = start + flats + 1
            if end >= len(text):
                break
            if text[end] == "U":
                return True
            if text[end] != "F":
                break
    return False


def cyclic_shift(word: str, j: int) -> str:
    """sigma^j: move the first j steps to the end."""
    if not 0 <= j < len(word):
        raise ParameterError(f"shift {j} outside 0..{len(word) - 1}")
    return word[j:] + word[:j]


def rotation_orbit(word: str) -> List[str]:
    """Distinct rotations of a word in shift order."""
    seen = []
    for j in range(len(word)):
        rotated = word[j:] + word[:j]
        if rotated not in seen:
            seen.append(rotated)
    return seen


def canonicalize(path: FreeRationalMotzkinPath) -> Tuple[int, RationalMotzkinPath]:
    """
    The unique rational rotation of a free path.

    Args:
        path: A free rational Motzkin path with gcd(s, d) = 1

    Returns:
        (j, sigma^j(path)) where j is the position of the smallest label
    """
    _check_pair(path.s, path.d)
    j = label_vector(path.word, path.s, path.d).argmin()
    rotated = cyclic_shift(path.word, j)
    return j, RationalMotzkinPath(word=rotated, s=path.s, d=path.d)


def _words(length: int, target: int, floor_ok, p: int) -> Iterator[str]:
    """
    Depth-first U/F/D words of the given length ending at height target.

    floor_ok(x, height) prunes prefixes; p > 2 also prunes U F^i U factors.
    """
    letters: List[str] = []

    def walk(x: int, height: int, flats_after_up: Optional[int]) -> Iterator[str]:
        if x == length:
            if height == target:
                yield "".join(letters)
            return
        remaining = length - x - 1
        for letter in "UFD":
            new_height = height + STEP_RISE[letter]
            if abs(new_height - target) > remaining or not floor_ok(x + 1, new_height):
                continue
            if letter == "U":
                if p > 2 and flats_after_up is not None and flats_after_up <= p - 3:
                    continue
                state = 0
            elif letter == "F":
                state = None if flats_after_up is None else flats_after_up + 1
            else:
                state = None
            letters.append(letter)
            yield from walk(x + 1, new_height, state)
            letters.pop()

    yield from walk(0, 0, None)


def enumerate_free_rational(s: int, d: int) -> List[FreeRationalMotzkinPath]:
    """All free rational Motzkin paths of type (s+d, -d), lexicographic."""
    _check_pair(s, d)
    words = _words(s + d, -d, lambda x, h: True, 2)
    return [FreeRationalMotzkinPath(word=word, s=s, d=d) for word in words]


def enumerate_rational_motzkin(s: int, d: int, p: int) -> List[RationalMotzkinPath]:
    """
    Rational Motzkin paths of type (s+d, -d) avoiding U F^i U for i <= p-3.

    Args:
        s: First modulus
        d: Common difference, coprime to s
        p: Number of core conditions beyond s, at least 2

    Returns:
        The paths in lexicographic order (U < F < D)
    """
    _check_pair(s, d)
    _check_p(p)
    width = s + d
    words = _words(width, -d, lambda x, h: width * h + d * x >= 0, p)
    paths = [RationalMotzkinPath(word=word, s=s, d=d) for word in words]
    logger.debug(f"Enumerated {len(paths)} rational Motzkin paths for s={s}, d={d}, p={p}")
    return paths


def enumerate_motzkin(length: int, p: int = 2) -> List[str]:
    """Motzkin words of the given length avoiding U F^i U for i <= p-3."""
    if length < 0:
        raise ParameterError(f"length must be nonnegative, got {length}")
    _check_p(p)
    return list(_words(length, 0, lambda x, h: h >= 0, p))


def motzkin_from_rational(path: RationalMotzkinPath) -> str:
    """For d = 1 the last step is D and the rest is a Motzkin path of length s."""
    if path.d != 1:
        raise ParameterError(f"only type (s+1,-1) paths reduce to Motzkin paths, got d={path.d}")
    return path.word[:-1]


def rational_from_motzkin(word: str) -> RationalMotzkinPath:
    if not is_motzkin(word):
        raise InvalidPathError(f"{word!r} is not a Motzkin path")
    if not word:
        raise InvalidPathError("the empty Motzkin path has no rational counterpart with s >= 1")
    return RationalMotzkinPath(word=word + "D", s=len(word), d=1)


def is_symmetric_motzkin(word: str) -> bool:
    """A Motzkin path equal to its reversal with U and D swapped."""
    check_alphabet(word)
    if not is_motzkin(word):
        raise InvalidPathError(f"{word!r} is not a Motzkin path")
    return word[::-1].translate(_SWAP) == word


def _gen_dyck_alphabet(p: int) -> List[GenDyckStep]:
    return (
        [GenDyckStep(kind=GenDyckStepKind.U, size=p)]
        + [GenDyckStep(kind=GenDyckStepKind.F, size=i) for i in range(1, p)]
        + [GenDyckStep(kind=GenDyckStepKind.D, size=p)]
    )


def enumerate_gen_dyck(s: int, p: int) -> List[GenDyckPath]:
    """
    All (s,p)-generalized Dyck paths.

    Args:
        s: Semilength, at least 0
        p: Step size, at least 2

    Returns:
        Paths in lexicographic order U_p < F_1 < ... < F_{p-1} < D_p
    """
    if s < 0:
        raise ParameterError(f"s must be nonnegative, got {s}")
    _check_p(p)
    alphabet = _gen_dyck_alphabet(p)
    found: List[GenDyckPath] = []
    steps: List[GenDyckStep] = []

    def walk(x: int, y: int) -> None:
        if (x, y) == (s, s):
            found.append(GenDyckPath(steps=tuple(steps), s=s, p=p))
            return
        for step in alphabet:
            dx, dy = step.vector
            nx, ny = x + dx, y + dy
            if nx > s or ny > s or ny < nx:
                continue
            steps.append(step)
            walk(nx, ny)
            steps.pop()

    walk(0, 0)
    logger.debug(f"Enumerated {len(found)} generalized Dyck paths for s={s}, p={p}")
    return found


def is_symmetric_gen_dyck(path: GenDyckPath) -> bool:
    """Invariant under reflection in the anti-diagonal: reverse, then swap U_p and D_p."""
    return tuple(step.mirrored() for step in reversed(path.steps)) == path.steps


def gen_dyck_vertices(path: GenDyckPath) -> List[Tuple[int, int]]:
    x = y = 0
    vertices = [(0, 0)]
    for step in path.steps:
        dx, dy = step.vector
        x, y = x + dx, y + dy
        vertices.append((x, y))
    return vertices


def parse_gen_dyck(text: str, p: Optional[int] = None) -> GenDyckPath:
    """
    Parse `U4 F1 F2 D4` into a generalized Dyck path.

    Without an explicit p the size of the U/D steps is used, else the largest
    flat size plus one (p = 2 for an all-F_1 path). s is the endpoint.
    """
    try:
        steps = tuple(GenDyckStep.parse(token) for token in text.split())
    except ValueError as e:
        raise InvalidPathError(str(e)) from e
    if p is None:
        sizes = {step.size for step in steps if step.kind is not GenDyckStepKind.F}
        if len(sizes) > 1:
            raise InvalidPathError(f"U/D steps of {text!r} disagree on p: {sorted(sizes)}")
        flats = [step.size for step in steps if step.kind is GenDyckStepKind.F]
        p = sizes.pop() if sizes else max(flats + [1]) + 1
    s = sum(step.vector[0] for step in steps)
    try:
        return GenDyckPath(steps=steps, s=s, p=p)
    except ValueError as e:
        raise InvalidPathError(str(e)) from e


def format_gen_dyck(path: GenDyckPath) -> str:
    return str(path)


@lru_cache(maxsize=None)
def _gen_dyck_count(s: int, p: int) -> int:
    if s <= 0:
        return 1
    return sum(_gen_dyck_count(k - p, p) * _gen_dyck_count(s - k, p) for k in range(1, s + 1))


def gen_dyck_count_recurrence(s: int, p: int) -> int:
    """
    C_s^(p) = sum_{k=1}^{s} C_{k-p} C_{s-k}, with C_s = 1 for s <= 0.

    The memo table is an lru_cache, so concurrent readers are safe and a
    repeated concurrent write stores the same value.
    """
    _check_p(p)
    for n in range(0, s, 64):
        _gen_dyck_count(n, p)
    return _gen_dyck_count(s, p)


def render_path_text(word: str) -> str:
    """
    ASCII drawing of a U/F/D word: `/` for U, `\\` for D, `_` for F.

    Row r of the drawing is the band between heights r and r+1; rows are
    printed from the highest band down.
    """
    check_alphabet(word)
    if not word:
        return "\n"
    levels = heights(word)
    bands = {}
    for x, letter in enumerate(word):
        h = levels[x]
        if letter == "U":
            bands.setdefault(h, {})[x] = "/"
        elif letter == "D":
            bands.setdefault(h - 1, {})[x] = "\\"
        else:
            bands.setdefault(h, {})[x] = "_"
    lines = []
    for band in range(max(bands), min(bands) - 1, -1):
        row = bands.get(band, {})
        lines.append("".join(row.get(x, " ") for x in range(len(word))).rstrip())
    return "\n".join(lines) + "\n"


def render_path_svg(word: str, s: Optional[int] = None, d: Optional[int] = None) -> str:
    """
    SVG drawing of a U/F/D word, up drawn upward.

    With (s, d) the dotted boundary y = -dx/(s+d) is overlaid; otherwise the
    x-axis is drawn.
    """
    check_alphabet(word)
    levels = heights(word)
    top, bottom = max(levels), min(levels)
    svg = svgroot(-0.5, -top - 0.5, len(word) + 1, top - bottom + 1)
    guide = svggroup(svg, id="guide")
    if s is not None and d is not None:
        svglinelist(guide, [(0, 0), (s + d, d)], stroke="gray", **{"stroke-dasharray": "0.1"})
    else:
        svglinelist(guide, [(0, 0), (len(word), 0)], stroke="gray")
    svglinelist(svggroup(svg, id="path"), [(x, -h) for x, h in enumerate(levels)])
    return svgstring(svg)


def render_gen_dyck_svg(path: GenDyckPath) -> str:
    """SVG drawing of a generalized Dyck path with the diagonal y = x."""
    svg = svgroot(-0.5, -path.s - 0.5, path.s + 1, path.s + 1)
    svglinelist(svggroup(svg, id="guide"), [(0, 0), (path.s, -path.s)], stroke="gray")
    svglinelist(svggroup(svg, id="path"), [(x, -y) for x, y in gen_dyck_vertices(path)])
    return svgstring(svg)
