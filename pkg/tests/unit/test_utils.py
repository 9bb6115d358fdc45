"""
vequil
~~~~~~

Exact verification toolkit for perturbed weak vector equilibrium problems
"""

import pytest

import vequil.utils as utils


@pytest.mark.parametrize(
    "text, expected",
    [
        pytest.param("depth=16 radius=2", {"depth": "16", "radius": "2"}, id="two pairs"),
        pytest.param("  seed=7  ", {"seed": "7"}, id="surrounding blanks"),
        pytest.param("", {}, id="empty"),
    ],
)
def test_parse_key_values(text, expected):
    assert utils.parse_key_values(text) == expected


@pytest.mark.parametrize("text", ["depth", "depth=", "=16"], ids=["no separator", "no value", "no key"])
def test_parse_malformed_key_values(text):
    with pytest.raises(ValueError):
        utils.parse_key_values(text)


@pytest.mark.parametrize(
    "text, expected",
    [
        pytest.param("(1, 2), [3, 4], 5", ["(1, 2)", "[3, 4]", "5"], id="nested delimiters"),
        pytest.param("seq[1,0,2,1]", ["seq[1,0,2,1]"], id="single literal"),
        pytest.param("a,,b", ["a", "", "b"], id="empty part"),
    ],
)
def test_split_top_level(text, expected):
    """
    Test splitting on delimiters outside of parentheses and brackets
    """
    assert utils.split_top_level(text) == expected


def test_recursive_glob(tmp_path):
    """
    Test finding problem files below a directory in sorted order
    """
    # given
    (tmp_path / "nested").mkdir()
    (tmp_path / "b.vq").write_text("")
    (tmp_path / "nested" / "a.vq").write_text("")
    (tmp_path / "notes.txt").write_text("")

    # when
    found = utils.recursive_glob(str(tmp_path), "*.vq")

    # then
    assert found == sorted([str(tmp_path / "b.vq"), str(tmp_path / "nested" / "a.vq")])


def test_failure_of_exception():
    """
    Test that a Failure keeps the name and the reason of the exception
    """
    # given
    try:
        raise ValueError("malformed net literal")
    except ValueError as e:
        # when
        failure = utils.Failure(e)

    # then
    assert failure.name == "ValueError"
    assert failure.reason == "malformed net literal"
    assert failure.line is not None
    assert "ValueError: malformed net literal" in failure.traceback
