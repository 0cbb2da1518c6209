"""
Brute-force ground truth for every formula and bijection.

Simultaneous cores are enumerated through residue vectors of the smallest
modulus s: bead counts c_1..c_{s-1} per nonzero residue class, so only
s-cores are ever generated, and partial vectors are pruned against the other
moduli as soon as the residues involved are fixed. Paths are generated by a
plain depth-first search over raw step alphabets.

Nothing here imports the path enumerators, the bijections or the formulas.
"""

import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from math import gcd
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

from src.combinatorics.partition_core import (
    beta_elements,
    generate_partitions,
    is_self_conjugate,
    is_simultaneous_core,
    is_t_core,
    parts_from_beta_elements,
)
from src.models.errors import NotACoreError, OracleCapExceeded, ParameterError
from src.models.lattice_path import PathKind
from src.models.partition import Partition, ResidueVector
from src.utils.config import get_settings

logger = logging.getLogger("Oracle")

Word = Union[str, Tuple[str, ...]]


def _check_moduli(ts: Sequence[int]) -> Tuple[int, ...]:
    ts = tuple(ts)
    if not ts:
        raise ParameterError("at least one modulus is required")
    if any(t < 1 for t in ts):
        raise ParameterError(f"moduli must be positive, got {list(ts)}")
    if any(a >= b for a, b in zip(ts, ts[1:])):
        raise ParameterError(f"moduli must be strictly increasing, got {list(ts)}")
    if ts[0] == 1:
        return ts
    if len(ts) < 2 or gcd(ts[0], ts[1]) != 1:
        raise ParameterError(f"the first two moduli must be coprime for a finite family, got {list(ts)}")
    cap = get_settings().max_core_modulus
    if ts[0] > cap:
        raise OracleCapExceeded(f"smallest modulus {ts[0]} exceeds the cap {cap}")
    return ts


def _consistent(beads: FrozenSet[int], s: int, fixed: int, others: Sequence[int]) -> bool:
    """
    Check every core condition decidable once residues 1..fixed are placed.

    A bead x > t needs x - t to be a bead; that is decidable when x - t has
    residue 0 (never a bead) or a fixed residue. t itself must not be a bead.
    """
    for t in others:
        if t in beads:
            return False
        for x in beads:
            if x > t:
                residue = (x - t) % s
                if (residue == 0 or residue <= fixed) and (x - t) not in beads:
                    return False
    return True


def _search(s: int, others: Tuple[int, ...], bound: int, first: Optional[int]) -> List[Tuple[int, ...]]:
    """All bead sets (as partitions) reachable from an optional fixed c_1."""
    found = []

    def walk(residue: int, beads: FrozenSet[int]) -> None:
        if residue == s:
            found.append(parts_from_beta_elements(beads))
            return
        limit = max(0, -(-(bound - residue) // s))
        counts = range(limit + 1) if residue != 1 or first is None else (first,)
        for count in counts:
            placed = beads | frozenset(residue + level * s for level in range(count))
            if _consistent(placed, s, residue, others):
                walk(residue + 1, placed)

    walk(1, frozenset())
    return found


def enumerate_cores(ts: Sequence[int], bound: Optional[int] = None,
                    workers: Optional[int] = None) -> List[Partition]:
    """
    All partitions that are t-cores for every t in ts.

    Args:
        ts: Strictly increasing moduli; the first two must be coprime
        bound: Beta elements stay below this value (default ts[0] * ts[1])
        workers: Processes to fan out over c_1 (default from settings)

    Returns:
        The cores sorted by size, then parts
    """
    ts = _check_moduli(ts)
    if ts[0] == 1:
        return [Partition()]
    s, others = ts[0], ts[1:]
    bound = bound if bound is not None else ts[0] * ts[1]
    workers = workers if workers is not None else get_settings().workers
    start_time = time.perf_counter()

    if s == 2 or workers <= 1:
        found = _search(s, others, bound, None)
    else:
        firsts = range(max(0, -(-(bound - 1) // s)) + 1)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = pool.map(partial(_search, s, others, bound), firsts)
            found = [parts for chunk in chunks for parts in chunk]

    cores = sorted((Partition(parts=parts) for parts in found), key=Partition.sort_key)
    for core in cores:
        if not is_simultaneous_core(core, ts):
            raise AssertionError(f"oracle produced {core}, which is not a {list(ts)}-core")
    logger.info(f"Enumerated {len(cores)} cores for {list(ts)} in {time.perf_counter() - start_time:.3f}s")
    return cores


def enumerate_sc_cores(ts: Sequence[int], bound: Optional[int] = None,
                       workers: Optional[int] = None) -> List[Partition]:
    return [core for core in enumerate_cores(ts, bound, workers) if is_self_conjugate(core)]


def enumerate_cores_naive(ts: Sequence[int], max_size: int) -> List[Partition]:
    """Scan every partition of size <= max_size; only usable for tiny families."""
    if max_size < 0:
        raise ParameterError(f"max_size must be nonnegative, got {max_size}")
    return sorted(
        (partition for n in range(max_size + 1) for partition in generate_partitions(n)
         if is_simultaneous_core(partition, ts)),
        key=Partition.sort_key,
    )


def residue_vector(partition: Partition, s: int) -> ResidueVector:
    """Bead counts per nonzero residue class of an s-core's beta-set."""
    if s < 1:
        raise ParameterError(f"s must be positive, got {s}")
    if not is_t_core(partition, s):
        raise NotACoreError(f"{partition} is not a {s}-core")
    counts = Counter(x % s for x in beta_elements(partition.parts))
    return ResidueVector(s=s, counts=tuple(counts[r] for r in range(1, s)))


def count_oracle(ts: Sequence[int], self_conjugate: bool = False) -> int:
    if self_conjugate:
        return len(enumerate_sc_cores(ts))
    return len(enumerate_cores(ts))


def corner_histogram(ts: Sequence[int]) -> Dict[int, int]:
    """Number of cores per count of distinct parts, keys ascending."""
    counts = Counter(len(set(core.parts)) for core in enumerate_cores(ts))
    return dict(sorted(counts.items()))


def _dfs(alphabet: Sequence[str], length: int, rise: Dict[str, int],
         keep, accept) -> List[str]:
    found = []
    word: List[str] = []

    def walk(height: int) -> None:
        if len(word) == length:
            if accept(word, height):
                found.append("".join(word))
            return
        for letter in alphabet:
            new_height = height + rise[letter]
            if keep(len(word) + 1, new_height):
                word.append(letter)
                walk(new_height)
                word.pop()

    walk(0)
    return found


def _mirror(word: str) -> str:
    return word[::-1].translate(str.maketrans("UD", "DU"))


def _avoids(word: str, p: int) -> bool:
    return not any("U" + "F" * i + "U" in word for i in range(p - 2))


def _gen_dyck(s: int, p: int) -> List[Tuple[str, ...]]:
    tokens = [("U", 0, p)] + [("F", i, i) for i in range(1, p)] + [("D", p, 0)]
    found = []
    path: List[str] = []

    def walk(x: int, y: int) -> None:
        if x == s and y == s:
            found.append(tuple(path))
            return
        for kind, dx, dy in tokens:
            if x + dx <= s and y + dy <= s and y + dy >= x + dx:
                path.append(f"{kind}{max(dx, dy)}")
                walk(x + dx, y + dy)
                path.pop()

    walk(0, 0)
    return found


def _mirror_tokens(tokens: Tuple[str, ...]) -> Tuple[str, ...]:
    swap = {"U": "D", "D": "U", "F": "F"}
    return tuple(swap[token[0]] + token[1:] for token in reversed(tokens))


def enumerate_paths_exhaustive(kind: PathKind, **params: int) -> List[Word]:
    """
    Generate a path family by depth-first search over its raw step alphabet.

    Kinds and parameters:
        motzkin(length, p=2), symmetric_motzkin(length)
        rational_motzkin(s, d, p=2), free(s, d)
        dyck(order), symmetric_dyck(order)
        gen_dyck(s, p), symmetric_gen_dyck(s, p)

    Step words come back as strings, generalized Dyck paths as token tuples
    such as ("U3", "F2", "D3").
    """
    kind = PathKind(kind)
    cap = get_settings().max_path_length
    p = params.get("p", 2)
    if p < 2:
        raise ParameterError(f"p must be at least 2, got {p}")
    rise = {"U": 1, "F": 0, "D": -1}

    if kind in (PathKind.MOTZKIN, PathKind.SYMMETRIC_MOTZKIN, PathKind.DYCK, PathKind.SYMMETRIC_DYCK):
        dyck = kind in (PathKind.DYCK, PathKind.SYMMETRIC_DYCK)
        length = 2 * params["order"] if dyck else params["length"]
        if length < 0:
            raise ParameterError(f"length must be nonnegative, got {length}")
        if length > cap:
            raise OracleCapExceeded(f"path length {length} exceeds the cap {cap}")
        words = _dfs("UD" if dyck else "UFD", length, rise,
                     lambda x, h: h >= 0, lambda w, h: h == 0 and _avoids("".join(w), p))
        if kind in (PathKind.SYMMETRIC_MOTZKIN, PathKind.SYMMETRIC_DYCK):
            words = [word for word in words if _mirror(word) == word]
        return words

    if kind in (PathKind.GEN_DYCK, PathKind.SYMMETRIC_GEN_DYCK):
        s = params["s"]
        if s > cap:
            raise OracleCapExceeded(f"semilength {s} exceeds the cap {cap}")
        paths = _gen_dyck(s, p)
        if kind is PathKind.SYMMETRIC_GEN_DYCK:
            paths = [path for path in paths if _mirror_tokens(path) == path]
        return paths

    s, d = params["s"], params["d"]
    if s < 1 or d < 1:
        raise ParameterError(f"s and d must be positive, got s={s}, d={d}")
    if s + d > cap:
        raise OracleCapExceeded(f"path length {s + d} exceeds the cap {cap}")

    def keep(x: int, h: int) -> bool:
        return kind is PathKind.FREE or (s + d) * h + d * x >= 0

    return _dfs("UFD", s + d, rise, keep, lambda w, h: h == -d and _avoids("".join(w), p))
