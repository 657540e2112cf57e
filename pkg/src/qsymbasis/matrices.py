"""Dense integer matrices with labelled rows and columns."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Sequence

from .combinatorics import format_composition


@dataclass
class TransitionMatrix:
    row_labels: list
    col_labels: list
    entries: list[list[int]]

    def __post_init__(self):
        if len(self.entries) != len(self.row_labels):
            raise ValueError("row count does not match row labels")
        if any(len(row) != len(self.col_labels) for row in self.entries):
            raise ValueError("column count does not match column labels")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_labels), len(self.col_labels)

    def is_square(self) -> bool:
        return len(self.row_labels) == len(self.col_labels)

    def first_violation_of_unitriangularity(self) -> tuple[int, int, int] | None:
        """``(row, col, value)`` of the first entry breaking upper-unitriangularity, or None."""
        for i, row in enumerate(self.entries):
            for j, v in enumerate(row):
                if (j == i and v != 1) or (j < i and v != 0):
                    return i, j, v
        return None

    def is_upper_unitriangular(self) -> bool:
        return self.is_square() and self.first_violation_of_unitriangularity() is None

    def determinant(self) -> int:
        return bareiss_determinant(self.entries)

    def _label(self, label) -> str:
        if isinstance(label, tuple):
            return format_composition(label)
        if hasattr(label, "label"):
            return label.label()
        return str(label)

    def to_dict(self) -> dict:
        return {
            "row_labels": [self._label(r) for r in self.row_labels],
            "col_labels": [self._label(c) for c in self.col_labels],
            "entries": [list(r) for r in self.entries],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([""] + [self._label(c) for c in self.col_labels])
        for label, row in zip(self.row_labels, self.entries):
            writer.writerow([self._label(label)] + list(row))
        return buf.getvalue()


def identity(size: int) -> list[list[int]]:
    return [[int(i == j) for j in range(size)] for i in range(size)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    cols = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def invert_upper_unitriangular(u: Sequence[Sequence[int]]) -> list[list[int]]:
    """Integer inverse by back substitution; raises if ``u`` is not upper-unitriangular."""
    size = len(u)
    for i in range(size):
        if u[i][i] != 1 or any(u[i][j] for j in range(i)):
            raise ValueError(f"matrix is not upper-unitriangular at row {i}")
    inv = identity(size)
    for i in range(size - 1, -1, -1):
        for j in range(i + 1, size):
            inv[i][j] = -sum(u[i][m] * inv[m][j] for m in range(i + 1, j + 1))
    return inv


def bareiss_determinant(m: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination; exact for integer matrices."""
    a = [list(row) for row in m]
    size = len(a)
    if size == 0:
        return 1
    if any(len(row) != size for row in a):
        raise ValueError("determinant needs a square matrix")
    sign, prev = 1, 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]
