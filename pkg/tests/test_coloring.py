import numpy as np
import pytest

from zsramsey.coloring import (
    EdgeColoring,
    affine_coloring,
    constant_coloring,
    edge_sum,
    make_coloring,
    near_constant_coloring,
    parse_coloring,
    two_block_coloring,
    uniform_coloring,
)
from zsramsey.errors import FormatError


def test_edge_sum_examples():
    c = constant_coloring(6, 5, 2)
    assert edge_sum(c, 0, []) == 0
    assert edge_sum(c, 0, [1, 2, 3]) == 1
    c = EdgeColoring.from_function(4, 3, lambda x, y: {(0, 1): 1, (0, 2): 2}.get((x, y), 0))
    assert edge_sum(c, 0, [1, 2]) == 0


def test_edge_sum_rejects_member():
    with pytest.raises(ValueError):
        edge_sum(constant_coloring(4, 3, 1), 1, [1, 2])


def test_generators():
    assert set(constant_coloring(7, 3, 1).upper().tolist()) == {1}
    a = affine_coloring(7, 5)
    assert a(2, 6) == 3
    b = two_block_coloring(6, 3, 2)
    assert b(0, 1) == 0 and b(2, 5) == 0 and b(1, 2) == 1
    assert uniform_coloring(20, 3, 4) == uniform_coloring(20, 3, 4)
    assert uniform_coloring(20, 3, 4) != uniform_coloring(20, 3, 5)


def test_near_constant_degree_bound():
    c = near_constant_coloring(30, 5, 2, 3, 0)
    off = (c.colors != 2).sum(axis=1) - 1  # the zero diagonal counts once
    assert off.max() <= 3


@pytest.mark.parametrize("mode", ["uniform", "constant:2", "affine", "two-block:4", "near-constant:1:2"])
def test_make_coloring_modes(mode):
    c = make_coloring(mode, 9, 3, 1)
    assert c.host_order == 9 and c.modulus == 3


@pytest.mark.parametrize("mode", ["nope", "constant:x", "uniform:3"])
def test_make_coloring_rejects(mode):
    with pytest.raises(ValueError):
        make_coloring(mode, 5, 3, 0)


def test_text_round_trip():
    c = uniform_coloring(9, 5, 2)
    assert parse_coloring(c.to_text()) == c


@pytest.mark.parametrize(
    "text, line",
    [
        ("3 4\n0 1 0\n0 2 0\n1 2 0\n", 1),
        ("3 3\n0 1 0\n0 2 0\n", 3),
        ("3 3\n0 1 0\n1 2 0\n0 2 0\n", 3),
        ("3 3\n0 1 0\n0 2 3\n1 2 0\n", 3),
        ("3 3\n0 1 0\n0 2\n1 2 0\n", 3),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(FormatError) as exc:
        parse_coloring(text)
    assert exc.value.line == line


def test_colors_are_read_only():
    c = uniform_coloring(5, 3, 0)
    with pytest.raises(ValueError):
        c.colors[0, 1] = 2
    assert np.all(np.diag(c.colors) == 0)
