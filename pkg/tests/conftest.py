"""Shared fixtures: worked-example tableaux used across the test modules."""

import pytest

from shifted_kschur.shapes import SkewShape, StrictPartition
from shifted_kschur.tableaux import filling_from_rows


@pytest.fixture(scope="session")
def shape_421():
    return SkewShape(StrictPartition((4, 2, 1)))


@pytest.fixture(scope="session")
def skew_6431_42():
    return SkewShape(StrictPartition((6, 4, 3, 1)), StrictPartition((4, 2)))


def rows(shape, n, family, spec):
    """Build a filling from strings like "1 1 3' | 2 2,3' | 3"."""
    cells = [[cell.split(",") for cell in row.split()]
             for row in spec.split("|")]
    return filling_from_rows(shape, n, family, cells)


# single-valued worked examples under the shifted-tableau rules
@pytest.fixture(scope="session")
def single_valued_examples(shape_421):
    return {
        "T1": rows(shape_421, 3, "P", "1 1 1 2 | 2 2 | 3"),
        "T2": rows(shape_421, 3, "P", "1 1 3' 3 | 2 3' | 3"),
        "T3": rows(shape_421, 3, "Q", "1' 1 1 2' | 2 2 | 3"),
        "T4": rows(shape_421, 3, "Q", "1' 2' 3' 3 | 2' 3' | 3"),
    }


# set-valued worked examples under the set-valued rules
@pytest.fixture(scope="session")
def set_valued_examples(shape_421):
    return {
        "T1": rows(shape_421, 3, "P", "1 1 1 3' | 2 2,3' | 3"),
        "T2": rows(shape_421, 3, "P", "1 2' 2 2,3' | 2 3' | 3"),
        "T3": rows(shape_421, 3, "Q", "1' 1 1 1 | 2' 2 | 3',3"),
        "T4": rows(shape_421, 3, "Q", "1' 1 1 1,2,3 | 2 2 | 3'"),
    }
