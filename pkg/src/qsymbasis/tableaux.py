"""Composition tableaux, quasisymmetric Schur expansions and Littlewood-Richardson composition tableaux.

Cells are indexed in matrix notation: row ``i`` from the top, column ``k``
from the left, both 1-based in the docstrings and 0-based in code.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import TYPE_CHECKING, Iterator, Sequence

from .combinatorics import Composition, Partition, ranked_positions, sorted_revlex

if TYPE_CHECKING:
    from .polynomials import QSymExpansion

Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Filling:
    shape: Composition
    rows: Rows

    def __post_init__(self):
        if tuple(len(r) for r in self.rows) != tuple(self.shape):
            raise ValueError(f"rows {self.rows} do not match shape {self.shape}")
        if any(v < 1 for r in self.rows for v in r):
            raise ValueError("filling entries must be positive")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Filling":
        rows = tuple(tuple(r) for r in rows)
        return cls(tuple(len(r) for r in rows), rows)

    def content(self, n: int | None = None) -> tuple[int, ...]:
        """Exponent vector of the weight ``x^T``."""
        counts = Counter(v for r in self.rows for v in r)
        top = max(counts, default=0) if n is None else n
        return tuple(counts.get(i, 0) for i in range(1, top + 1))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


@dataclass(frozen=True)
class LRFilling(Filling):
    base: Composition = ()
    lam: Partition = ()
    embedding: tuple[int, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "rows": [list(r) for r in self.rows],
            "base": list(self.base),
            "lambda": list(self.lam),
            "embedding": list(self.embedding),
        }


# --------------------------------------------------------------------------
# triple rule

def _triple_ok(rows: Rows, lr: bool) -> bool:
    """Triple rule for every pair of cells sharing a column.

    For rows ``i < j`` both reaching column ``k``, with ``a = T(i,k)``,
    ``b = T(j,k)``: if the upper row is at least as long, need ``b < a`` or
    ``T(i,k-1) < b``; otherwise need ``b < a`` or ``a < T(j,k+1)``.

    Column 1 of the first case refers to a missing cell. Composition tableaux
    skip that check (the first-column condition already orders them); LR
    fillings treat the missing cell as failing, so ``b < a`` is forced.
    """
    lengths = [len(r) for r in rows]
    for i in range(len(rows)):
        ri = rows[i]
        for j in range(i + 1, len(rows)):
            rj = rows[j]
            upper_longer = lengths[i] >= lengths[j]
            for k in range(min(lengths[i], lengths[j])):
                a, b = ri[k], rj[k]
                if b < a:
                    continue
                if upper_longer:
                    if k == 0:
                        if lr:
                            return False
                        continue
                    if not ri[k - 1] < b:
                        return False
                else:
                    if not a < rj[k + 1]:
                        return False
    return True


def _rows_weakly_decrease(rows: Rows) -> bool:
    return all(r[c] >= r[c + 1] for r in rows for c in range(len(r) - 1))


def is_composition_tableau(filling: Filling) -> bool:
    rows = filling.rows
    if not _rows_weakly_decrease(rows):
        return False
    if any(rows[i][0] >= rows[i + 1][0] for i in range(len(rows) - 1)):
        return False
    return _triple_ok(rows, lr=False)


# --------------------------------------------------------------------------
# composition tableaux

def _ct_search(alpha: Composition, n: int, packed: bool) -> Iterator[Rows]:
    """Backtrack row by row, cells left to right, candidate values descending."""
    cells = [(i, c) for i, length in enumerate(alpha) for c in range(length)]
    total = len(cells)
    grid = [[0] * length for length in alpha]
    counts = [0] * (n + 2)

    def missing_below(top: int) -> int:
        return sum(1 for v in range(1, top) if counts[v] == 0)

    def rec(idx: int, top: int):
        if idx == total:
            rows = tuple(tuple(r) for r in grid)
            if _triple_ok(rows, lr=False):
                yield rows
            return
        i, c = cells[idx]
        if c == 0:
            hi = n
            lo = grid[i - 1][0] + 1 if i > 0 else 1
        else:
            hi = grid[i][c - 1]
            lo = 1
        for v in range(hi, lo - 1, -1):
            new_top = max(top, v)
            counts[v] += 1
            if not packed or missing_below(new_top) <= total - idx - 1:
                grid[i][c] = v
                # A completed row can be checked against the rows above it.
                if c == len(grid[i]) - 1:
                    if _triple_ok(tuple(tuple(r) for r in grid[: i + 1]), lr=False):
                        yield from rec(idx + 1, new_top)
                else:
                    yield from rec(idx + 1, new_top)
            counts[v] -= 1
        grid[i][c] = 0

    yield from rec(0, 0)


def enumerate_composition_tableaux(alpha: Sequence[int], n: int) -> list[Filling]:
    """All composition tableaux of shape ``alpha`` with entries in ``1..n``."""
    alpha = tuple(alpha)
    if len(alpha) > n:
        return []
    return [Filling(alpha, rows) for rows in _ct_search(alpha, n, packed=False)]


@lru_cache(maxsize=None)
def packed_contents(alpha: Composition) -> dict[Composition, int]:
    """Count composition tableaux of shape ``alpha`` by content, over packed contents only.

    A content is packed when the values used are exactly ``1..m``; these are
    the coefficients ``K[alpha, gamma]`` of the monomial expansion.
    """
    counts: Counter = Counter()
    d = sum(alpha)
    for rows in _ct_search(alpha, max(d, 1), packed=True):
        c = Counter(v for r in rows for v in r)
        top = max(c, default=0)
        counts[tuple(c[v] for v in range(1, top + 1))] += 1
    return dict(counts)


def qschur_weight_sum(alpha: Sequence[int], n: int) -> dict[tuple[int, ...], int]:
    """Monomial expansion of the quasisymmetric Schur polynomial, exponent vector -> coefficient."""
    alpha = tuple(alpha)
    terms: Counter = Counter()
    if len(alpha) > n:
        return {}
    for rows in _ct_search(alpha, n, packed=False):
        exps = [0] * n
        for r in rows:
            for v in r:
                exps[v - 1] += 1
        terms[tuple(exps)] += 1
    return dict(terms)


# --------------------------------------------------------------------------
# Littlewood-Richardson composition tableaux

def base_values(beta: Sequence[int], k: int) -> tuple[int, ...]:
    """Entry of each row of ``beta``: the ``i``-th row from the bottom holds ``k + i``."""
    return tuple(k + len(beta) - idx for idx in range(len(beta)))


def _reading_word(rows: Rows, appended_start: Sequence[int]) -> list[int]:
    width = max((len(r) for r in rows), default=0)
    word = []
    for c in range(width - 1, -1, -1):
        for r, start in zip(rows, appended_start):
            if start <= c < len(r):
                word.append(r[c])
    return word


def is_reverse_lattice(word: Sequence[int], k: int) -> bool:
    """Every prefix has at least as many ``i`` as ``i - 1`` for ``1 < i <= k``."""
    counts = Counter()
    for v in word:
        counts[v] += 1
        for i in range(2, k + 1):
            if counts[i] < counts[i - 1]:
                return False
    return True


def is_LR_tableau(filling: LRFilling) -> bool:
    lam, base, emb, rows = filling.lam, filling.base, filling.embedding, filling.rows
    k = len(lam)
    if len(emb) != len(base) or any(emb[i] >= emb[i + 1] for i in range(len(emb) - 1)):
        return False
    if any(e < 0 or e >= len(rows) for e in emb):
        return False
    starts = [0] * len(rows)
    for b, r, value in zip(base, emb, base_values(base, k)):
        if len(rows[r]) < b or any(v != value for v in rows[r][:b]):
            return False
        starts[r] = b
    appended = [v for r, s in zip(rows, starts) for v in r[s:]]
    if any(v > k for v in appended):
        return False
    if Counter(appended) != Counter({k - i: lam[i] for i in range(k)}):
        return False
    if not _rows_weakly_decrease(rows):
        return False
    if not _triple_ok(rows, lr=True):
        return False
    return is_reverse_lattice(_reading_word(rows, starts), k)


def super_filling(lam: Sequence[int], beta: Sequence[int]) -> LRFilling:
    """Canonical LR filling whose shape is the leading term of ``s_lam * S_beta``."""
    lam, beta = tuple(lam), tuple(beta)
    k = len(lam)
    padded = list(beta) + [0] * max(0, k - len(beta))
    order = ranked_positions(padded)
    extra = [0] * len(padded)
    for part, pos in zip(lam, order):
        extra[pos] = part
    final = [b + e for b, e in zip(padded, extra)]
    # Values among receiving rows: longer final row gets the larger value,
    # the lower of two equal rows gets the smaller one.
    receiving = sorted((pos for pos in range(len(padded)) if extra[pos]), key=lambda p: (-final[p], p))
    value_of = {pos: k - rank for rank, pos in enumerate(receiving)}
    values = base_values(beta, k)
    rows = []
    for pos in range(len(padded)):
        row = [values[pos]] * padded[pos] if pos < len(beta) else []
        row += [value_of.get(pos, 0)] * extra[pos]
        rows.append(tuple(row))
    shape = tuple(final)
    return LRFilling(shape, tuple(rows), base=beta, lam=lam, embedding=tuple(range(len(beta))))


def enumerate_LR_shapes(beta: Sequence[int], lam: Sequence[int], max_rows: int | None = None) -> list[tuple[Composition, tuple[int, ...]]]:
    """Shapes obtained by extending rows of ``beta`` and inserting new rows, with the row embedding.

    New rows may go before, between or after the rows of ``beta``. The number
    of rows is capped at ``l(beta) + l(lam)`` (and at ``max_rows`` if given).
    """
    beta, lam = tuple(beta), tuple(lam)
    size = sum(lam)
    cap = len(beta) + len(lam)
    if max_rows is not None:
        cap = min(cap, max_rows)
    out = []

    def new_rows(cells: int, slots: int) -> Iterator[tuple[int, ...]]:
        # Sequences of positive row lengths using at most ``cells`` cells and ``slots`` rows.
        yield ()
        if slots == 0:
            return
        for first in range(1, cells + 1):
            for rest in new_rows(cells - first, slots - 1):
                yield (first,) + rest

    def rec(idx: int, shape: tuple[int, ...], emb: tuple[int, ...], left: int):
        spare = cap - len(shape) - (len(beta) - idx)
        for block in new_rows(left, spare):
            used = sum(block)
            grown = shape + block
            if idx == len(beta):
                if used == left:
                    out.append((grown, emb))
                continue
            for ext in range(left - used + 1):
                rec(idx + 1, grown + (beta[idx] + ext,), emb + (len(grown),), left - used - ext)

    if len(beta) <= cap:
        rec(0, (), (), size)
    return out


def _lr_fillings_for(shape: Composition, emb: tuple[int, ...], beta: Composition, lam: Partition) -> Iterator[Rows]:
    k = len(lam)
    starts = [0] * len(shape)
    grid = [[0] * length for length in shape]
    for b, r, value in zip(beta, emb, base_values(beta, k)):
        starts[r] = b
        for c in range(b):
            grid[r][c] = value
    # Appended cells in reading order: columns right to left, top to bottom.
    width = max(shape, default=0)
    cells = [(r, c) for c in range(width - 1, -1, -1) for r in range(len(shape)) if starts[r] <= c < shape[r]]
    remaining = [0] * (k + 2)
    for i, part in enumerate(lam):
        remaining[k - i] = part
    used = [0] * (k + 2)

    def rec(idx: int):
        if idx == len(cells):
            rows = tuple(tuple(r) for r in grid)
            if _triple_ok(rows, lr=True):
                yield rows
            return
        r, c = cells[idx]
        hi = k
        lo = grid[r][c + 1] if c + 1 < shape[r] else 1
        for v in range(hi, lo - 1, -1):
            if used[v] >= remaining[v]:
                continue
            if v < k and used[v] + 1 > used[v + 1]:
                continue
            used[v] += 1
            grid[r][c] = v
            yield from rec(idx + 1)
            used[v] -= 1
        grid[r][c] = 0

    yield from rec(0)


def enumerate_LR_tableaux(lam: Sequence[int], beta: Sequence[int], max_rows: int | None = None) -> list[LRFilling]:
    lam, beta = tuple(lam), tuple(beta)
    out = []
    for shape, emb in enumerate_LR_shapes(beta, lam, max_rows):
        for rows in _lr_fillings_for(shape, emb, beta, lam):
            out.append(LRFilling(shape, rows, base=beta, lam=lam, embedding=emb))
    return out


@lru_cache(maxsize=None)
def _lr_expansion(lam: Partition, beta: Composition, max_rows: int | None) -> dict[Composition, int]:
    coeffs: Counter = Counter()
    for shape, emb in enumerate_LR_shapes(beta, lam, max_rows):
        count = sum(1 for _ in _lr_fillings_for(shape, emb, beta, lam))
        if count:
            coeffs[shape] += count
    return {g: coeffs[g] for g in sorted_revlex(coeffs)}


def lr_expansion(lam: Sequence[int], beta: Sequence[int], max_rows: int | None = None) -> dict[Composition, int]:
    """Coefficients of ``S_gamma`` in ``s_lam * S_beta`` (only ``l(gamma) <= max_rows`` if given)."""
    return dict(_lr_expansion(tuple(lam), tuple(beta), max_rows))


def lr_coefficient(gamma: Sequence[int], lam: Sequence[int], beta: Sequence[int]) -> int:
    gamma, lam, beta = tuple(gamma), tuple(lam), tuple(beta)
    if sum(gamma) != sum(lam) + sum(beta):
        raise ValueError(f"size mismatch: |{gamma}| != |{lam}| + |{beta}|")
    return _lr_expansion(lam, beta, None).get(gamma, 0)


def multiply_schur_qschur(lam: Sequence[int], alpha: Sequence[int], n: int | None = None) -> "QSymExpansion":
    """``s_lam * S_alpha`` in the S basis by counting LR composition tableaux.

    In ``n`` variables (default ``|lam| + |alpha|``, where nothing collapses)
    terms with more than ``n`` parts are dropped.
    """
    from .polynomials import QSymExpansion

    lam, alpha = tuple(lam), tuple(alpha)
    if n is None:
        n = sum(lam) + sum(alpha)
    if len(lam) > n or len(alpha) > n:
        return QSymExpansion("S", n, {})
    return QSymExpansion("S", n, _lr_expansion(lam, alpha, n))
