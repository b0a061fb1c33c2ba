"""Primed alphabet, cell sets, fillings and their validity rules.

An entry is encoded as an integer code e in 1..2n: code 2k-1 is the primed
letter k', code 2k the unprimed letter k.  Integer order on codes realizes
1' < 1 < 2' < 2 < ... < n' < n, and the numeric value of code e is exactly
e/2 (so k' = k - 1/2 without rational arithmetic).
"""

from __future__ import annotations

from typing import NamedTuple

from .shapes import Box, SkewShape, boxes_row_major

CellSet = tuple[int, ...]  # strictly increasing entry codes, nonempty

FAMILIES = ("P", "Q")


def primed(code: int) -> bool:
    return code % 2 == 1


def letter(code: int) -> int:
    return (code + 1) // 2


def entry_str(code: int) -> str:
    return f"{letter(code)}'" if primed(code) else str(letter(code))


def entry_from_str(text: str) -> int:
    text = text.strip()
    if text.endswith("'"):
        return 2 * int(text[:-1]) - 1
    return 2 * int(text)


def cell_from_strs(entries) -> CellSet:
    return tuple(sorted(entry_from_str(e) for e in entries))


class ValidationResult(NamedTuple):
    ok: bool
    violation: str | None

    def __bool__(self) -> bool:
        return self.ok


class Filling:
    """An assignment of one nonempty cell set to every box of a shape."""

    __slots__ = ("shape", "n", "family", "cells", "_key")

    def __init__(self, shape: SkewShape, n: int, family: str, cells: dict):
        if family not in FAMILIES:
            raise ValueError(f"family must be P or Q, got {family!r}")
        if set(cells) != shape.boxes:
            raise ValueError("cells must cover exactly the boxes of the shape")
        self.shape = shape
        self.n = n
        self.family = family
        self.cells = {box: tuple(sorted(cells[box])) for box in sorted(cells)}
        for box, cell in self.cells.items():
            if not cell:
                raise ValueError(f"empty cell at {box}")
            if len(set(cell)) != len(cell):
                raise ValueError(f"duplicate entries at {box}")
            if not all(1 <= c <= 2 * n for c in cell):
                raise ValueError(f"entry out of range 1..{2 * n} at {box}")
        self._key = (shape.outer.parts, shape.inner.parts, n, family,
                     tuple(self.cells.items()))

    def __eq__(self, other) -> bool:
        return isinstance(other, Filling) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        rows = []
        for i in range(1, self.shape.outer.length + 1):
            cols = self.shape.row_cols(i)
            rows.append(" ".join(
                ",".join(entry_str(c) for c in self.cells[(i, j)]) for j in cols
            ))
        return f"Filling({self.shape}; " + " | ".join(rows) + ")"

    def size(self) -> int:
        """Total number of entries over all boxes, |T|."""
        return sum(len(cell) for cell in self.cells.values())

    def weight(self) -> tuple[int, ...]:
        """Occurrences of k' plus occurrences of k, for each letter k."""
        counts = [0] * self.n
        for cell in self.cells.values():
            for code in cell:
                counts[letter(code) - 1] += 1
        return tuple(counts)

    def is_single_valued(self) -> bool:
        return all(len(cell) == 1 for cell in self.cells.values())

    def with_cell(self, box: Box, cell: CellSet) -> "Filling":
        cells = dict(self.cells)
        cells[box] = cell
        return Filling(self.shape, self.n, self.family, cells)

    def to_json(self) -> dict:
        rows = []
        for i in range(1, self.shape.outer.length + 1):
            rows.append([
                [entry_str(c) for c in self.cells[(i, j)]]
                for j in self.shape.row_cols(i)
            ])
        return {
            "shape": self.shape.to_json(),
            "n": self.n,
            "family": self.family,
            "rows": rows,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Filling":
        from .shapes import StrictPartition

        shape = SkewShape(
            StrictPartition(tuple(data["shape"]["outer"])),
            StrictPartition(tuple(data["shape"]["inner"])),
        )
        cells = {}
        for i, row in enumerate(data["rows"], start=1):
            for j, cell in zip(shape.row_cols(i), row):
                cells[(i, j)] = cell_from_strs(cell)
        return cls(shape, data["n"], data["family"], cells)


def filling_from_rows(shape: SkewShape, n: int, family: str, rows) -> Filling:
    """Build a filling from per-row lists of cells given as entry strings."""
    cells = {}
    for i, row in enumerate(rows, start=1):
        cols = list(shape.row_cols(i))
        if len(cols) != len(row):
            raise ValueError(f"row {i} needs {len(cols)} cells, got {len(row)}")
        for j, cell in zip(cols, row):
            cells[(i, j)] = cell_from_strs(cell)
    return Filling(shape, n, family, cells)


def validate(f: Filling) -> ValidationResult:
    """Check the set-valued tableau rules, reporting the first violation.

    (1) max of a cell <= min of its right and lower neighbors;
    (2) each unprimed letter appears at most once in each column;
    (3) each primed letter appears at most once in each row;
    (4) family P only: diagonal cells contain unprimed entries only.
    """
    shape, cells = f.shape, f.cells
    for box in boxes_row_major(shape):
        i, j = box
        cell = cells[box]
        right = (i, j + 1)
        if right in shape and cell[-1] > cells[right][0]:
            return ValidationResult(
                False, f"max of {box} exceeds min of {right} (rule 1)")
        below = (i + 1, j)
        if below in shape and cell[-1] > cells[below][0]:
            return ValidationResult(
                False, f"max of {box} exceeds min of {below} (rule 1)")
    col_seen: dict[tuple[int, int], Box] = {}
    row_seen: dict[tuple[int, int], Box] = {}
    for box in boxes_row_major(shape):
        i, j = box
        for code in cells[box]:
            if primed(code):
                key = (i, code)
                if key in row_seen:
                    return ValidationResult(
                        False,
                        f"{entry_str(code)} repeats in row {i} "
                        f"({row_seen[key]} and {box}) (rule 3)")
                row_seen[key] = box
            else:
                key = (j, code)
                if key in col_seen:
                    return ValidationResult(
                        False,
                        f"{entry_str(code)} repeats in column {j} "
                        f"({col_seen[key]} and {box}) (rule 2)")
                col_seen[key] = box
    if f.family == "P":
        for box in boxes_row_major(shape):
            if shape.is_diagonal(box) and any(primed(c) for c in cells[box]):
                return ValidationResult(
                    False, f"primed entry on the diagonal at {box} (rule 4)")
    return ValidationResult(True, None)


def validate_single(f: Filling) -> ValidationResult:
    """Single-valued validity: validate plus one entry per cell."""
    for box, cell in f.cells.items():
        if len(cell) != 1:
            return ValidationResult(False, f"cell {box} has {len(cell)} entries")
    return validate(f)
