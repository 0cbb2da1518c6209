import logging
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime
from math import gcd
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from src.combinatorics.bijections import core_to_path, corners_equal_upsteps, path_to_core, phi, phi_inverse
from src.combinatorics.counting import (
    count_anderson,
    count_bny,
    count_corners,
    count_corone,
    count_main,
    count_sc_fms,
    count_sc_main,
    count_wang,
    motzkin_recurrence,
)
from src.combinatorics.oracle import (
    corner_histogram,
    count_oracle,
    enumerate_cores,
    enumerate_paths_exhaustive,
)
from src.combinatorics.paths import (
    enumerate_gen_dyck,
    enumerate_motzkin,
    enumerate_rational_motzkin,
    gen_dyck_count_recurrence,
    is_rational,
)
from src.models.lattice_path import PathKind
from src.models.partition import CoreFamily
from src.models.results import VerificationRecord, VerificationReport
from src.utils.config import get_settings

logger = logging.getLogger("Orchestrator")

Grid = Tuple[int, int, int]


def _record(check: str, family: Sequence[int], formula_value: int, oracle_value: int,
            detail: Optional[str] = None) -> VerificationRecord:
    return VerificationRecord(check=check, family=tuple(family), formula_value=formula_value,
                              oracle_value=oracle_value, match=formula_value == oracle_value,
                              detail=detail)


def _check_cores(cell: Tuple[int, int, int]) -> List[VerificationRecord]:
    s, d, p = cell
    fam = CoreFamily(s=s, d=d, p=p)
    return [_record("cores", (s, d, p), count_main(s, d, p), count_oracle(list(fam.moduli)),
                    detail=f"count_main vs oracle on {fam}")]


def _check_anderson(cell: Tuple[int, int]) -> List[VerificationRecord]:
    s, t = cell
    return [_record("anderson", cell, count_anderson(s, t), count_oracle([s, t]))]


def _check_identities(cell: Tuple[int, int, int]) -> List[VerificationRecord]:
    s, d, p = cell
    main = count_main(s, d, p)
    records = []
    if p == 2:
        records.append(_record("identities", cell, main, count_wang(s, d), detail="main vs wang"))
    if p == 3:
        records.append(_record("identities", cell, main, count_bny(s, d), detail="main vs bny"))
    if d == 1:
        records.append(_record("identities", cell, main, count_corone(s, p), detail="main vs corone"))
        records.append(_record("identities", cell, main, gen_dyck_count_recurrence(s, p),
                               detail="main vs generalized Dyck recurrence"))
        if p == 2:
            records.append(_record("identities", cell, main, motzkin_recurrence(s),
                                   detail="main vs Motzkin recurrence"))
    return records


def _check_self_conjugate_pairs(cell: Tuple[int, int]) -> List[VerificationRecord]:
    s, t = cell
    return [_record("self_conjugate_pairs", cell, count_sc_fms(s, t),
                    count_oracle([s, t], self_conjugate=True))]


def _check_self_conjugate(cell: Tuple[int, int]) -> List[VerificationRecord]:
    s, p = cell
    moduli = list(CoreFamily(s=s, d=1, p=p).moduli)
    return [_record("self_conjugate", (s, 1, p), count_sc_main(s, p),
                    count_oracle(moduli, self_conjugate=True))]


def _check_corners(cell: Tuple[int, int]) -> List[VerificationRecord]:
    s, p = cell
    fam = CoreFamily(s=s, d=1, p=p)
    histogram = corner_histogram(list(fam.moduli))
    records = [
        _record("corners", (s, 1, p, k), count_corners(s, p, k), histogram.get(k, 0),
                detail=f"cores with {k} corners")
        for k in range(s // 2 + 1)
    ]
    cores = enumerate_cores(list(fam.moduli))
    agree = sum(1 for core in cores if corners_equal_upsteps(core, fam))
    records.append(_record("corners", (s, 1, p), len(cores), agree, detail="corners equal up steps"))
    return records


def _check_symmetric_motzkin(cell: Tuple[int]) -> List[VerificationRecord]:
    (s,) = cell
    paths = enumerate_paths_exhaustive(PathKind.SYMMETRIC_MOTZKIN, length=s)
    return [_record("symmetric_motzkin", (s, 1, 2), count_sc_main(s, 2), len(paths))]


def _check_cycle_lemma(cell: Tuple[int, int]) -> List[VerificationRecord]:
    s, d = cell
    words = enumerate_paths_exhaustive(PathKind.FREE, s=s, d=d)
    unique = sum(
        1 for word in words
        if sum(1 for j in range(len(word)) if is_rational(word[j:] + word[:j], s, d)) == 1
    )
    return [_record("cycle_lemma", cell, len(words), unique,
                    detail="free words with exactly one rational rotation")]


def _check_round_trips(cell: Tuple[int, int, int]) -> List[VerificationRecord]:
    s, d, p = cell
    fam = CoreFamily(s=s, d=d, p=p)
    cores = enumerate_cores(list(fam.moduli))
    core_trips = sum(1 for core in cores if path_to_core(core_to_path(core, fam), fam) == core)
    paths = enumerate_rational_motzkin(s, d, p)
    path_trips = sum(1 for path in paths if core_to_path(path_to_core(path, fam), fam) == path)
    records = [
        _record("round_trips", cell, len(cores), core_trips, detail="core -> path -> core"),
        _record("round_trips", cell, len(paths), path_trips, detail="path -> core -> path"),
    ]
    if d == 1:
        motzkin = enumerate_motzkin(s, p)
        phi_trips = sum(1 for word in motzkin if phi_inverse(phi(word, p)) == word)
        dyck = enumerate_gen_dyck(s, p)
        inverse_trips = sum(1 for path in dyck if phi(phi_inverse(path), p) == path)
        records.append(_record("round_trips", cell, len(motzkin), phi_trips, detail="phi_inverse(phi(P))"))
        records.append(_record("round_trips", cell, len(dyck), inverse_trips, detail="phi(phi_inverse(Q))"))
        records.append(_record("round_trips", cell, gen_dyck_count_recurrence(s, p), len(motzkin),
                               detail="phi image size"))
    return records


def _families(grid: Grid) -> List[Tuple[int, int, int]]:
    smax, dmax, pmax = grid
    return [(s, d, p) for s in range(1, smax + 1) for d in range(1, dmax + 1) if gcd(s, d) == 1
            for p in range(2, pmax + 1)]


def _pairs(grid: Grid) -> List[Tuple[int, int]]:
    smax, dmax, _ = grid
    tmax = smax + dmax
    return [(s, t) for s in range(1, smax + 1) for t in range(s + 1, tmax + 1) if gcd(s, t) == 1]


def _cells(step: str, grid: Grid) -> List[tuple]:
    smax, dmax, pmax = grid
    if step in ("cores", "identities", "round_trips"):
        return _families(grid)
    if step in ("anderson", "self_conjugate_pairs"):
        return _pairs(grid)
    if step in ("self_conjugate", "corners"):
        return [(s, p) for s in range(1, smax + 1) for p in range(2, pmax + 1)]
    if step == "symmetric_motzkin":
        return [(s,) for s in range(0, smax + 1)]
    if step == "cycle_lemma":
        return [(s, d) for s in range(1, smax + 1) for d in range(1, dmax + 1) if gcd(s, d) == 1]
    raise ValueError(f"Unknown step: {step}")


STEPS: Dict[str, Callable[[tuple], List[VerificationRecord]]] = {
    "cores": _check_cores,
    "anderson": _check_anderson,
    "identities": _check_identities,
    "self_conjugate_pairs": _check_self_conjugate_pairs,
    "self_conjugate": _check_self_conjugate,
    "corners": _check_corners,
    "symmetric_motzkin": _check_symmetric_motzkin,
    "cycle_lemma": _check_cycle_lemma,
    "round_trips": _check_round_trips,
}


class VerificationOrchestrator:
    """
    Orchestrator that compares every closed formula and bijection with the oracle
    over a grid (smax, dmax, pmax) of parameters.
    """

    def __init__(self, workers: Optional[int] = None):
        """Initialize the orchestrator; workers defaults to the configured fan-out."""
        self.workers = workers if workers is not None else get_settings().workers
        logger.info(f"Verification Orchestrator initialized with {self.workers} worker(s)")

    def run_step(self, step: str, grid: Grid) -> List[VerificationRecord]:
        """
        Execute a single verification step over the grid.

        Args:
            step: One of STEPS
            grid: (smax, dmax, pmax)

        Returns:
            The records of every cell, in grid order
        """
        logger.info(f"Executing step: {step} on grid {grid}")
        if step not in STEPS:
            raise ValueError(f"Unknown step: {step}")
        check = STEPS[step]
        cells = _cells(step, grid)
        if self.workers > 1 and len(cells) > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                chunks = list(pool.map(check, cells))
        else:
            chunks = [check(cell) for cell in cells]
        records = [record for chunk in chunks for record in chunk]
        for record in records:
            if not record.match:
                logger.warning(f"Mismatch in {record.check} for {record.family}: "
                               f"{record.formula_value} != {record.oracle_value} ({record.detail})")
            else:
                logger.debug(f"{record.check} {record.family}: {record.formula_value}")
        return records

    def run_pipeline(self, grid: Grid, steps: Optional[Sequence[str]] = None) -> VerificationReport:
        """
        Execute every verification step (or the given subset) over the grid.

        Args:
            grid: (smax, dmax, pmax)
            steps: Steps to run, default all of them in STEPS order

        Returns:
            The verification report
        """
        logger.info(f"Starting verification pipeline on grid {grid}")
        start_time = datetime.now()
        report = VerificationReport(grid=grid)

        try:
            for number, step in enumerate(steps or list(STEPS), start=1):
                logger.info(f"Step {number}: {step}")
                step_records = self.run_step(step, grid)
                logger.info(f"Step {step} produced {len(step_records)} records")
                report.records.extend(step_records)

            report.elapsed_seconds = (datetime.now() - start_time).total_seconds()
            logger.info(f"Pipeline execution completed in {report.elapsed_seconds:.2f} seconds "
                        f"with {len(report.mismatches)} mismatch(es)")
            return report

        except Exception as e:
            logger.error(f"Error executing pipeline: {e}")
            raise
