import pytest
from conftest import mat

from sizedla import flags, matrix
from sizedla.size import Size, to_int


def test_transpose_flags_at_runtime():
    a = mat([[1, 2, 3], [4, 5, 6]])
    assert matrix.to_lists(flags.normal(a)) == matrix.to_lists(a)
    assert matrix.to_lists(flags.trans(a)) == [[1, 4], [2, 5], [3, 6]]
    assert matrix.to_lists(flags.conjtr(a)) == [[1, 4], [2, 5], [3, 6]]


def test_side_flags_at_runtime():
    m, n = Size(2), Size(5)
    assert [to_int(s) for s in flags.left((m, n))] == [2, 2, 5]
    assert [to_int(s) for s in flags.right((m, n))] == [5, 2, 5]


def test_job_flags_select_their_argument():
    args = ("all", "top", "overwrite", "none")
    assert flags.svd_all(*args) == "all"
    assert flags.svd_top(*args) == "top"
    assert flags.svd_overwrite(*args) == "overwrite"
    assert flags.svd_no(*args) == "none"


@pytest.mark.parametrize("flag,c", [(flags.normal, "N"), (flags.trans, "T"), (flags.conjtr, "C")])
def test_trans_chars(flag, c):
    assert flags.trans_char(flag) == c
    assert flags.trans_of_char(c.lower()) is flag


def test_side_and_job_chars():
    assert flags.side_char(flags.left) == "L"
    assert flags.side_char(flags.right) == "R"
    assert flags.side_of_char("r") is flags.right
    for flag, c in [(flags.svd_all, "A"), (flags.svd_top, "S"), (flags.svd_overwrite, "O"), (flags.svd_no, "N")]:
        assert flags.job_char(flag) == c
        assert flags.job_of_char(c) is flag


def test_wrong_family_is_rejected():
    with pytest.raises(TypeError):
        flags.trans_char(flags.left)
    with pytest.raises(TypeError):
        flags.job_char(flags.trans)
    with pytest.raises(TypeError):
        flags.side_char([])
    with pytest.raises(ValueError):
        flags.trans_of_char("X")


def test_enums():
    assert flags.upper is flags.UpLo.UPPER and flags.upper.value == "U"
    assert flags.lower is flags.UpLo.LOWER
    assert {k.value for k in flags.NormKind} == {"one", "inf", "fro", "max"}
