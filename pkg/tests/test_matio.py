import math
import random

import pytest
from conftest import mat, vec

from sizedla import matio, matrix, vector
from sizedla.errors import ParseError
from sizedla.size import Size, to_int


def test_vec_round_trip_is_exact(tmp_path):
    rng = random.Random(0)
    xs = [rng.uniform(-1e6, 1e6) for _ in range(50)] + [math.pi, 1e-300, -0.0, 5e-324]
    p = tmp_path / "v.txt"
    matio.savevec(p, vec(xs))
    assert matio.loadvec(p, vector.to_list) == xs


def test_mat_round_trip_is_exact(tmp_path):
    rng = random.Random(1)
    rows = [[rng.gauss(0, 1) for _ in range(4)] for _ in range(3)]
    p = tmp_path / "a.txt"
    matio.savemat(p, mat(rows))
    assert matio.loadmat(p, matrix.to_lists) == rows


def test_low_precision_is_lossy(tmp_path):
    p = tmp_path / "v.txt"
    matio.savevec(p, vec([math.pi]), precision=3)
    assert p.read_text() == "1\n3.14\n"
    assert matio.loadvec(p, vector.to_list) != [math.pi]


def test_empty_shapes(tmp_path):
    p = tmp_path / "a.txt"
    matio.savemat(p, matrix.create(Size(0), Size(3)))
    assert p.read_text() == "0 3\n"
    assert matio.loadmat(p, lambda a: (to_int(matrix.dim1(a)), to_int(matrix.dim2(a)))) == (0, 3)
    q = tmp_path / "v.txt"
    matio.savevec(q, vec([]))
    assert matio.loadvec(q, vector.to_list) == []


def test_tokens_across_lines():
    assert matio.parse_mat("2 2\n1 2 3\n4\n").tolist() == [[1, 2], [3, 4]]
    assert matio.parse_vec("2\n\n1\n2\n").tolist() == [1, 2]


@pytest.mark.parametrize(
    "text",
    ["", "\n1 2\n", "x\n1\n", "-1\n", "2\n1\n", "2\n1 2 3\n", "2\n1 a\n", "1 1\n1\n"],
)
def test_bad_vectors(text):
    with pytest.raises(ParseError):
        matio.parse_vec(text)


@pytest.mark.parametrize("text", ["", "2\n1 2\n", "2 2\n1 2 3\n", "2 -2\n", "1 1 1\n1\n", "1 1\nnope\n"])
def test_bad_matrices(text):
    with pytest.raises(ParseError):
        matio.parse_mat(text)


def test_missing_file(tmp_path):
    with pytest.raises(OSError):
        matio.loadvec(tmp_path / "absent.txt", vector.to_list)


def test_parse_error_names_the_file(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("2\n1\n")
    with pytest.raises(ParseError, match="bad.txt"):
        matio.loadvec(p, vector.to_list)
