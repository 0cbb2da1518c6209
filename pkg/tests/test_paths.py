from math import gcd

import pytest
from hypothesis import given, strategies as st

from src.combinatorics.counting import count_freemotz, count_main, motzkin_number
from src.combinatorics.oracle import enumerate_paths_exhaustive
from src.combinatorics.paths import (
    canonicalize,
    count_factor,
    count_up_steps,
    cyclic_shift,
    enumerate_free_rational,
    enumerate_gen_dyck,
    enumerate_motzkin,
    enumerate_rational_motzkin,
    format_gen_dyck,
    gen_dyck_count_recurrence,
    gen_dyck_vertices,
    has_forbidden_pattern,
    heights,
    is_motzkin,
    is_rational,
    is_symmetric_gen_dyck,
    is_symmetric_motzkin,
    label_vector,
    motzkin_from_rational,
    parse_gen_dyck,
    parse_word,
    rational_from_motzkin,
    render_path_svg,
    render_path_text,
    rotation_orbit,
)
from src.models.errors import InvalidPathError, ParameterError
from src.models.lattice_path import FreeRationalMotzkinPath, PathKind, RationalMotzkinPath

FIGURE_WORDS = ["UFDDD", "UDFDD", "UDDFD", "FUDDD", "FFFDD", "FFDFD"]

words = st.text(alphabet="UFD", max_size=12)


def _coprime_pairs(limit):
    return [(s, d) for s in range(1, limit) for d in range(1, limit - s + 1) if gcd(s, d) == 1]


def test_parse_word():
    assert parse_word(" ufd ") == "UFD"
    with pytest.raises(InvalidPathError):
        parse_word("UXD")


def test_label_vector():
    assert label_vector("DDFUD", 3, 2).values == (0, -3, -6, -4, 3, 0)
    with pytest.raises(InvalidPathError):
        label_vector("DDF", 3, 2)
    with pytest.raises(ParameterError):
        label_vector("DDDDDD", 4, 2)


def test_is_rational():
    assert is_rational("FFDFD", 3, 2)
    assert not is_rational("DDFUD", 3, 2)
    with pytest.raises(InvalidPathError):
        is_rational("FFFFF", 3, 2)


def test_forbidden_pattern():
    assert has_forbidden_pattern("UUDD", 3)
    assert has_forbidden_pattern("UFUDDDDD", 4)
    assert not has_forbidden_pattern("UFUDDDDD", 3)
    assert not has_forbidden_pattern("UUUU", 2)
    assert not has_forbidden_pattern("UDDU", 3)
    assert has_forbidden_pattern("UDDU", 3, cyclic=True)


def test_cyclic_shift_and_canonicalize():
    assert cyclic_shift("DDFUD", 2) == "FUDDD"
    assert cyclic_shift("DDFUD", 0) == "DDFUD"
    assert cyclic_shift(cyclic_shift("DDFUD", 4), 1) == "DDFUD"
    with pytest.raises(ParameterError):
        cyclic_shift("DDFUD", 5)
    j, path = canonicalize(FreeRationalMotzkinPath(word="DDFUD", s=3, d=2))
    assert (j, path.word) == (2, "FUDDD")
    assert canonicalize(FreeRationalMotzkinPath(word="FFDFD", s=3, d=2))[0] == 0


def test_rotation_orbit():
    assert rotation_orbit("UDUD") == ["UDUD", "DUDU"]
    assert len(rotation_orbit("DDFUD")) == 5


def test_orbits_of_type_five_minus_two():
    free = enumerate_free_rational(3, 2)
    assert len(free) == 30
    orbits = {min(rotation_orbit(path.word)) for path in free}
    assert len(orbits) == 6
    assert sorted(canonicalize(path)[1].word for path in free) == sorted(FIGURE_WORDS * 5)


@pytest.mark.parametrize("s,d", _coprime_pairs(10))
def test_cycle_lemma_exhaustive(s, d):
    for path in enumerate_free_rational(s, d):
        word = path.word
        rational = [
            j for j in range(s + d)
            if min((s + d) * h + d * x for x, h in enumerate(heights(word[j:] + word[:j]))) >= 0
        ]
        assert len(rational) == 1
        assert rational[0] == canonicalize(path)[0]


@pytest.mark.parametrize("s,d", _coprime_pairs(8))
def test_label_vector_entries_distinct(s, d):
    for path in enumerate_free_rational(s, d):
        inner = label_vector(path.word, s, d).values[1:-1]
        assert len(set(inner)) == len(inner) and 0 not in inner


def test_enumerate_rational_motzkin_figure():
    assert [path.word for path in enumerate_rational_motzkin(3, 2, 2)] == FIGURE_WORDS
    for d in range(1, 5):
        assert [path.word for path in enumerate_rational_motzkin(1, d, 2)] == ["F" + "D" * d]
    assert len(enumerate_rational_motzkin(5, 3, 3)) == count_main(5, 3, 3)


@pytest.mark.parametrize("s,d", [(s, d) for s in range(1, 9) for d in range(1, 6) if gcd(s, d) == 1])
def test_rational_paths_by_up_steps(s, d):
    paths = enumerate_rational_motzkin(s, d, 2)
    for k in range(s // 2 + 1):
        assert sum(1 for path in paths if count_up_steps(path.word) == k) == count_freemotz(s, d, k)


@pytest.mark.parametrize("s,d,p", [(4, 1, 3), (5, 2, 3), (6, 1, 4), (7, 3, 4), (5, 3, 5)])
def test_enumerators_match_oracle(s, d, p):
    assert [path.word for path in enumerate_rational_motzkin(s, d, p)] == \
        enumerate_paths_exhaustive(PathKind.RATIONAL_MOTZKIN, s=s, d=d, p=p)
    assert [path.word for path in enumerate_free_rational(s, d)] == \
        enumerate_paths_exhaustive(PathKind.FREE, s=s, d=d)


def test_motzkin_paths():
    assert enumerate_motzkin(0) == [""]
    assert [len(enumerate_motzkin(n)) for n in range(9)] == [motzkin_number(n) for n in range(9)]
    assert enumerate_motzkin(3) == ["UFD", "UDF", "FUD", "FFF"]
    assert all(not has_forbidden_pattern(word, 4) for word in enumerate_motzkin(8, 4))
    assert enumerate_motzkin(7, 3) == enumerate_paths_exhaustive(PathKind.MOTZKIN, length=7, p=3)


def test_motzkin_and_rational_d_one():
    path = RationalMotzkinPath(word="UFDD", s=3, d=1)
    assert motzkin_from_rational(path) == "UFD"
    assert rational_from_motzkin("UFD") == path
    assert [motzkin_from_rational(p) for p in enumerate_rational_motzkin(4, 1, 2)] == enumerate_motzkin(4)
    with pytest.raises(InvalidPathError):
        rational_from_motzkin("DU")


def test_gen_dyck_enumeration():
    assert [str(path) for path in enumerate_gen_dyck(0, 2)] == [""]
    assert len(enumerate_gen_dyck(4, 2)) == 9
    assert [str(path) for path in enumerate_gen_dyck(2, 3)] == ["F1 F1", "F2"]
    assert [tuple(str(step) for step in path.steps) for path in enumerate_gen_dyck(6, 3)] == \
        enumerate_paths_exhaustive(PathKind.GEN_DYCK, s=6, p=3)


def test_gen_dyck_recurrence():
    assert [gen_dyck_count_recurrence(s, 2) for s in range(7)] == [1, 1, 2, 4, 9, 21, 51]
    assert gen_dyck_count_recurrence(-1, 3) == 1
    assert gen_dyck_count_recurrence(2, 3) == 2
    for p in range(2, 6):
        for s in range(11):
            assert gen_dyck_count_recurrence(s, p) == len(enumerate_gen_dyck(s, p))


def test_symmetric_motzkin():
    assert is_symmetric_motzkin("UFD")
    assert not is_symmetric_motzkin("UDF")
    for k in range(5):
        assert is_symmetric_motzkin("UD" * k)
    with pytest.raises(InvalidPathError):
        is_symmetric_motzkin("UU")


def test_symmetric_gen_dyck():
    assert is_symmetric_gen_dyck(parse_gen_dyck("F1 F1 F1 F1"))
    assert is_symmetric_gen_dyck(parse_gen_dyck("U3 F1 D3"))
    assert not is_symmetric_gen_dyck(parse_gen_dyck("U3 D3 F1"))


def test_gen_dyck_serialization():
    text = "U4 U4 F1 F2 D4 F3 U4 D4 D4"
    path = parse_gen_dyck(text)
    assert (path.s, path.p) == (18, 4)
    assert format_gen_dyck(path) == text
    assert parse_gen_dyck("F1 F1").p == 2
    assert gen_dyck_vertices(parse_gen_dyck("U3 F1 D3")) == [(0, 0), (0, 3), (1, 4), (4, 4)]
    with pytest.raises(InvalidPathError):
        parse_gen_dyck("D2 U2")
    with pytest.raises(InvalidPathError):
        parse_gen_dyck("U3 D4")


def test_counting_helpers():
    assert count_up_steps("UFUDDDDD") == 2
    assert count_factor("UUUD", "UU") == 2
    assert heights("UFD") == [0, 1, 1, 0]


def test_render_path_text():
    assert render_path_text("UFD") == " _\n/ \\\n"
    assert render_path_text("") == "\n"


def test_render_path_svg():
    svg = render_path_svg("FFDFD", 3, 2)
    assert svg.startswith("<svg")
    assert svg.count("<polyline") == 2
    assert 'points="0,0 1,0 2,0 3,1 4,1 5,2"' in svg


@given(words)
def test_motzkin_predicate_matches_heights(word):
    levels = heights(word)
    assert is_motzkin(word) == (min(levels) >= 0 and levels[-1] == 0)
    if is_motzkin(word):
        assert is_symmetric_motzkin(word) == (word[::-1].translate(str.maketrans("UD", "DU")) == word)
