import re
from math import gcd

import pytest

from src.combinatorics.bijections import (
    core_to_gen_dyck,
    core_to_path,
    corner_upstep_report,
    corners_equal_upsteps,
    gen_dyck_to_core,
    path_to_core,
    phi,
    phi_inverse,
)
from src.combinatorics.counting import count_sc_main
from src.combinatorics.oracle import enumerate_cores, enumerate_sc_cores
from src.combinatorics.partition_core import corner_count
from src.combinatorics.paths import (
    count_up_steps,
    enumerate_gen_dyck,
    enumerate_motzkin,
    enumerate_rational_motzkin,
    gen_dyck_count_recurrence,
    gen_dyck_vertices,
    has_forbidden_pattern,
    is_rational,
    is_symmetric_gen_dyck,
    parse_gen_dyck,
)
from src.models.errors import InvalidPathError, NotACoreError, ParameterError
from src.models.lattice_path import GenDyckStepKind, RationalMotzkinPath
from src.models.partition import CoreFamily, Partition

EXAMPLE = Partition.of(9, 5, 3, 2, 2, 1, 1, 1, 1)
PHI_WORD = "UFFUFFFUDDUFDUFFDD"
PHI_IMAGE = "U4 U4 F1 F2 D4 F3 U4 D4 D4"

GRID = [
    CoreFamily(s=s, d=d, p=p)
    for s in range(1, 8) for d in range(1, 5) if gcd(s, d) == 1
    for p in range(2, 5)
]


def test_core_to_path_examples():
    assert core_to_path(EXAMPLE, CoreFamily(s=5, d=3, p=3)).word == "UFUDDDDD"
    assert core_to_path(Partition(), CoreFamily(s=3, d=2, p=2)).word == "FFDFD"
    assert core_to_path(Partition.of(6, 4, 3, 1, 1, 1, 1), CoreFamily(s=5, d=3, p=2)).word == "UDUFDDDD"


def test_core_to_path_rejects_non_cores():
    with pytest.raises(NotACoreError):
        core_to_path(Partition.of(3), CoreFamily(s=3, d=2, p=2))
    with pytest.raises(ParameterError):
        core_to_path(Partition(), CoreFamily(s=3, d=2, p=1))


def test_path_to_core_examples():
    fam = CoreFamily(s=5, d=3, p=3)
    assert path_to_core(RationalMotzkinPath(word="UFUDDDDD", s=5, d=3), fam) == EXAMPLE
    assert path_to_core(RationalMotzkinPath(word="FFDFD", s=3, d=2), CoreFamily(s=3, d=2, p=2)) == Partition()


def test_figure_paths_give_the_three_five_seven_cores():
    fam = CoreFamily(s=3, d=2, p=2)
    cores = {path_to_core(path, fam) for path in enumerate_rational_motzkin(3, 2, 2)}
    assert cores == {Partition(), Partition.of(1), Partition.of(1, 1), Partition.of(2),
                     Partition.of(2, 1, 1), Partition.of(3, 1)}


def test_path_to_core_rejects_forbidden_pattern():
    with pytest.raises(InvalidPathError):
        path_to_core(RationalMotzkinPath(word="UUDDFD", s=5, d=1), CoreFamily(s=5, d=1, p=3))
    with pytest.raises(ParameterError):
        path_to_core(RationalMotzkinPath(word="FFDFD", s=3, d=2), CoreFamily(s=4, d=1, p=2))


@pytest.mark.parametrize("fam", GRID, ids=str)
def test_round_trips(fam):
    for core in enumerate_cores(list(fam.moduli)):
        path = core_to_path(core, fam)
        assert is_rational(path.word, fam.s, fam.d)
        assert not has_forbidden_pattern(path.word, fam.p)
        assert path_to_core(path, fam) == core
    for path in enumerate_rational_motzkin(fam.s, fam.d, fam.p):
        assert core_to_path(path_to_core(path, fam), fam) == path


def test_phi_examples():
    assert str(phi(PHI_WORD, 4)) == PHI_IMAGE
    assert phi_inverse(parse_gen_dyck(PHI_IMAGE)) == PHI_WORD
    assert str(phi("FFFF", 2)) == "F1 F1 F1 F1"
    assert phi_inverse(parse_gen_dyck("F1 F1 F1")) == "FFF"
    assert str(phi("UFUDD", 3)) == "U3 F2 D3"
    assert phi_inverse(parse_gen_dyck("U3 F2 D3")) == "UFUDD"


def test_phi_rejects_bad_input():
    with pytest.raises(InvalidPathError):
        phi("UUDD", 3)
    with pytest.raises(InvalidPathError):
        phi("DU", 2)
    with pytest.raises(ParameterError):
        phi("F", 1)


@pytest.mark.parametrize("p", [2, 3, 4, 5])
def test_phi_is_a_bijection(p):
    for s in range(11):
        motzkin = enumerate_motzkin(s, p)
        images = [phi(word, p) for word in motzkin]
        assert [phi_inverse(image) for image in images] == motzkin
        assert len(set(images)) == len(motzkin) == gen_dyck_count_recurrence(s, p)
        for path in enumerate_gen_dyck(s, p):
            assert phi(phi_inverse(path), p) == path


@pytest.mark.parametrize("p", [2, 3, 4])
def test_phi_preserves_structure(p):
    for word in enumerate_motzkin(9, p):
        image = phi(word, p)
        kinds = [step.kind for step in image.steps]
        assert image.s == len(word)
        long_ups = len(re.findall("U(?=" + "F" * (p - 2) + ")", word))
        assert kinds.count(GenDyckStepKind.U) == long_ups
        assert kinds.count(GenDyckStepKind.U) == kinds.count(GenDyckStepKind.D)
        assert all(y >= x for x, y in gen_dyck_vertices(image))


def test_corner_example():
    fam = CoreFamily(s=7, d=1, p=2)
    core = Partition.of(9, 3, 3, 3, 1)
    assert corner_count(core) == 3
    assert count_up_steps(core_to_path(core, fam).word) == 3
    assert corners_equal_upsteps(core, fam)
    assert corners_equal_upsteps(Partition(), fam)
    with pytest.raises(ParameterError):
        corners_equal_upsteps(Partition(), CoreFamily(s=3, d=2, p=2))


@pytest.mark.parametrize("s,p", [(s, p) for s in range(1, 9) for p in range(2, 5)])
def test_corners_equal_upsteps_on_grid(s, p):
    fam = CoreFamily(s=s, d=1, p=p)
    assert all(corners_equal_upsteps(core, fam) for core in enumerate_cores(list(fam.moduli)))


def test_corner_upstep_report():
    assert corner_upstep_report(4, 1, 2) == (9, 9)
    agree, total = corner_upstep_report(5, 2, 2)
    assert 0 <= agree <= total


@pytest.mark.parametrize("s,p", [(s, p) for s in range(1, 9) for p in (2, 3)])
def test_self_conjugate_cores_match_symmetric_paths(s, p):
    symmetric = [path for path in enumerate_gen_dyck(s, p) if is_symmetric_gen_dyck(path)]
    sc_cores = enumerate_sc_cores(list(range(s, s + p + 1)))
    assert len(sc_cores) == len(symmetric) == count_sc_main(s, p)


@pytest.mark.parametrize("s,p", [(4, 2), (5, 3), (6, 4)])
def test_core_gen_dyck_composite(s, p):
    fam = CoreFamily(s=s, d=1, p=p)
    for core in enumerate_cores(list(fam.moduli)):
        assert gen_dyck_to_core(core_to_gen_dyck(core, s, p)) == core
