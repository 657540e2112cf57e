"""Compositions, partitions, orders and the inverting/pure machinery.

Compositions and partitions are plain tuples of positive ints; the empty
tuple is the composition ``0``. Permutations are tuples in one-line notation.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Iterator, Sequence

Composition = tuple[int, ...]
Partition = tuple[int, ...]
Permutation = tuple[int, ...]


# --------------------------------------------------------------------------
# construction / validation / serialization

def as_composition(parts: Iterable[int]) -> Composition:
    comp = tuple(int(p) for p in parts)
    if any(p < 1 for p in comp):
        raise ValueError(f"composition parts must be positive: {comp}")
    return comp


def as_partition(parts: Iterable[int]) -> Partition:
    lam = as_composition(parts)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"partition parts must weakly decrease: {lam}")
    return lam


def strip_zeros(weak: Sequence[int]) -> Composition:
    """Drop every zero entry of a weak composition."""
    return tuple(p for p in weak if p != 0)


def format_composition(comp: Sequence[int]) -> str:
    return ",".join(map(str, comp)) if len(comp) else "0"


def parse_composition(text: str) -> Composition:
    """Parse ``"3,1,2"``; ``"0"`` and ``""`` give the empty composition.

    Comma-free digit strings such as ``"312"`` are read one digit per part.
    """
    text = text.strip()
    if text in ("", "0", "()"):
        return ()
    if "," in text or " " in text:
        return as_composition(int(t) for t in text.replace(" ", ",").split(",") if t)
    return as_composition(int(c) for c in text)


def parse_partition(text: str) -> Partition:
    return as_partition(parse_composition(text))


def format_permutation(perm: Sequence[int]) -> str:
    if len(perm) > 9:
        return ",".join(map(str, perm))
    return "".join(map(str, perm))


def parse_permutation(text: str) -> Permutation:
    text = text.strip()
    perm = tuple(int(t) for t in text.split(",")) if "," in text else tuple(int(c) for c in text)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"not a permutation: {text!r}")
    return perm


# --------------------------------------------------------------------------
# generators

def compositions(d: int, max_len: int | None = None) -> Iterator[Composition]:
    """All compositions of ``d`` with at most ``max_len`` parts (no order promised)."""
    if d == 0:
        yield ()
        return
    if max_len is not None and max_len <= 0:
        return
    for first in range(1, d + 1):
        rest_len = None if max_len is None else max_len - 1
        for rest in compositions(d - first, rest_len):
            yield (first,) + rest


def partitions(d: int, max_len: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``d`` in lexicographically decreasing order."""
    if max_part is None:
        max_part = d
    if d == 0:
        yield ()
        return
    if max_len is not None and max_len <= 0:
        return
    for first in range(min(d, max_part), 0, -1):
        rest_len = None if max_len is None else max_len - 1
        for rest in partitions(d - first, rest_len, first):
            yield (first,) + rest


# --------------------------------------------------------------------------
# orders

def sort_to_partition(alpha: Sequence[int]) -> Partition:
    """The partition rearrangement of ``alpha``."""
    return tuple(sorted(alpha, reverse=True))


def revlex_key(alpha: Sequence[int]) -> tuple:
    """Sort key realising revlex on compositions of a fixed size.

    Larger key means larger in revlex. Zeros (weak compositions) are kept, and
    the caller is responsible for padding to a common length.
    """
    return (tuple(p for p in sort_to_partition(alpha) if p), tuple(reversed(alpha)))


def revlex_compare(alpha: Sequence[int], gamma: Sequence[int]) -> int:
    """Return 1, 0 or -1 as ``alpha`` is greater than, equal to or less than ``gamma``.

    Weak compositions of unequal length are padded with zeros at the front.
    """
    if sum(alpha) != sum(gamma):
        raise ValueError(f"revlex compares compositions of equal size, got {tuple(alpha)} and {tuple(gamma)}")
    width = max(len(alpha), len(gamma))
    a = (0,) * (width - len(alpha)) + tuple(alpha)
    g = (0,) * (width - len(gamma)) + tuple(gamma)
    ka, kg = revlex_key(a), revlex_key(g)
    return (ka > kg) - (ka < kg)


def sorted_revlex(comps: Iterable[Composition], descending: bool = True) -> list[Composition]:
    """Canonical order: size ascending, then revlex (descending by default) within a size."""
    comps = list(comps)
    if descending:
        return sorted(comps, key=lambda c: (-sum(c), revlex_key(c)), reverse=True)
    return sorted(comps, key=lambda c: (sum(c), revlex_key(c)))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Dominance order on partitions of equal size."""
    if sum(lam) != sum(mu):
        raise ValueError(f"dominance needs equal sizes, got {tuple(lam)} and {tuple(mu)}")
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def ranked_positions(parts: Sequence[int]) -> list[int]:
    """Indices of ``parts`` from largest to smallest.

    Among equal parts the one further right counts as larger. This is the
    single tie rule shared by the bijection and the super filling.
    """
    return sorted(range(len(parts)), key=lambda i: (parts[i], i), reverse=True)


def contains(gamma: Sequence[int], beta: Sequence[int]) -> bool:
    """Whether the rows of ``beta`` embed, in order, into rows of ``gamma`` at least as long."""
    j = 0
    for g in gamma:
        if j < len(beta) and g >= beta[j]:
            j += 1
    return j == len(beta)


# --------------------------------------------------------------------------
# standardization

def standardize(word: Sequence[int]) -> Permutation:
    if any(w < 1 for w in word):
        raise ValueError(f"standardize needs a positive word, got {tuple(word)}")
    order = sorted(range(len(word)), key=lambda i: (word[i], i))
    perm = [0] * len(word)
    for label, pos in enumerate(order, start=1):
        perm[pos] = label
    return tuple(perm)


def destandardize(sigma: Sequence[int]) -> Composition:
    """Lexicographically least positive word standardizing to ``sigma``."""
    k = len(sigma)
    if k == 0:
        return ()
    where = [0] * (k + 1)
    for pos, value in enumerate(sigma):
        where[value] = pos
    word = [0] * k
    word[where[1]] = 1
    for v in range(2, k + 1):
        prev = word[where[v - 1]]
        word[where[v]] = prev if where[v] > where[v - 1] else prev + 1
    return tuple(word)


def garsia_vector(sigma: Sequence[int]) -> tuple[int, ...]:
    return tuple(p - 1 for p in destandardize(sigma))


# --------------------------------------------------------------------------
# inverting / pure

def is_inverting(alpha: Sequence[int]) -> bool:
    if not alpha:
        return True
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for pos, v in enumerate(alpha):
        first.setdefault(v, pos)
        last[v] = pos
    for i in range(2, max(alpha) + 1):
        if i not in first or (i - 1) not in last or first[i] > last[i - 1]:
            return False
    return True


def non_inverted_parts(beta: Sequence[int]) -> list[int]:
    """Parts ``j > 1`` of ``beta`` with no occurrence of ``j`` before some ``j - 1``."""
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for pos, v in enumerate(beta):
        first.setdefault(v, pos)
        last[v] = pos
    return sorted(j for j in first if j > 1 and ((j - 1) not in last or first[j] > last[j - 1]))


def pure_factorization(alpha: Sequence[int]) -> tuple[Composition, int, tuple[int, ...]]:
    """Factor ``alpha = gamma k^{i_k} ... 2^{i_2} 1^{i_1}`` with ``k`` maximal.

    Returns ``(gamma, k, (i_1, ..., i_k))``.
    """
    alpha = tuple(alpha)
    # Staircase blocks read from the right: (start index, multiplicity) for 1, 2, ...
    blocks: list[tuple[int, int]] = []
    pos = len(alpha)
    value = 1
    while pos > 0 and alpha[pos - 1] == value:
        start = pos
        while start > 0 and alpha[start - 1] == value:
            start -= 1
        blocks.append((start, pos - start))
        pos = start
        value += 1
    for k in range(len(blocks), 0, -1):
        gamma = alpha[: blocks[k - 1][0]]
        if all(g > k for g in gamma):
            return gamma, k, tuple(mult for _, mult in blocks[:k])
    return alpha, 0, ()


def is_pure(alpha: Sequence[int]) -> bool:
    return pure_factorization(alpha)[1] % 2 == 0


def insert_part(alpha: Sequence[int], k: int) -> Composition:
    """Insert ``max({a_i : i <= k} | {1 + a_j : j > k})`` after the first ``k`` parts."""
    alpha = tuple(alpha)
    if not is_inverting(alpha):
        raise ValueError(f"insert_part needs an inverting composition, got {alpha}")
    if not 0 <= k <= len(alpha):
        raise ValueError(f"insertion index {k} out of range for {alpha}")
    candidates = list(alpha[:k]) + [1 + a for a in alpha[k:]]
    m = max(candidates, default=1)
    return alpha[:k] + (m,) + alpha[k:]


@lru_cache(maxsize=None)
def _inverting(n: int) -> tuple[Composition, ...]:
    if n == 0:
        return ((),)
    out = {insert_part(alpha, k) for alpha in _inverting(n - 1) for k in range(n)}
    return tuple(sorted_revlex(out))


def enumerate_inverting(n: int) -> list[Composition]:
    """Inverting compositions of length exactly ``n`` built by part insertion."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_inverting(n))


def destandardizations(n: int) -> list[Composition]:
    return sorted_revlex({destandardize(s) for s in permutations(range(1, n + 1))})


def _add_ones(beta: Sequence[int], n: int) -> Composition:
    padded = tuple(beta) + (0,) * (n - len(beta))
    return tuple(p + 1 for p in padded)


@lru_cache(maxsize=None)
def _b_recursive(n: int) -> frozenset:
    if n == 0:
        return frozenset({()})
    prev = _b_recursive(n - 1)
    shifted = {_add_ones(beta, n) for beta in prev}
    return frozenset(prev | (set(_inverting(n)) - shifted))


@lru_cache(maxsize=None)
def _b_filtered(n: int) -> frozenset:
    # Inverting forces every value up to the maximum to occur, so max part <= length.
    out = set()
    for length in range(n + 1):
        for comp in product(range(1, length + 1), repeat=length):
            if is_inverting(comp) and is_pure(comp):
                out.add(comp)
    return frozenset(out)


def enumerate_B_recursive(n: int) -> list[Composition]:
    return sorted_revlex(_b_recursive(n))


def enumerate_B_filtered(n: int) -> list[Composition]:
    return sorted_revlex(_b_filtered(n))


def enumerate_B(n: int) -> list[Composition]:
    """Pure and inverting compositions with at most ``n`` parts.

    Computed by the recursion on destandardized permutations and by direct
    filtering; the two must agree.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    rec = _b_recursive(n)
    flt = _b_filtered(n)
    if rec != flt:
        raise AssertionError(f"B_{n} routes disagree: {sorted(rec ^ flt)}")
    return sorted_revlex(rec)


def b_set(n: int) -> frozenset:
    return _b_recursive(n)
