"""The bijection between (partition, pure-and-inverting composition) pairs and compositions."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .combinatorics import (
    Composition,
    Partition,
    b_set,
    compositions,
    format_composition,
    is_inverting,
    is_pure,
    non_inverted_parts,
    partitions,
    ranked_positions,
    revlex_key,
    sorted_revlex,
)


@dataclass(frozen=True)
class LambdaBetaPair:
    lam: Partition
    beta: Composition

    def to_dict(self) -> dict:
        return {"lambda": format_composition(self.lam), "beta": format_composition(self.beta)}

    def label(self) -> str:
        """Row label in the style ``s_31 * S_21``."""
        lam = "".join(map(str, self.lam))
        beta = "".join(map(str, self.beta))
        if not self.beta:
            return f"s_{lam}" if lam else "1"
        if not self.lam:
            return f"S_{beta}"
        return f"s_{lam}*S_{beta}"


def phi(lam: Sequence[int], beta: Sequence[int], n: int | None = None) -> Composition:
    """Add ``lam[i]`` to the ``i``-th largest part of ``beta``.

    ``beta`` is padded with trailing zeros when ``lam`` is longer. Ties among
    equal parts go to the rightmost one.
    """
    lam, beta = tuple(lam), tuple(beta)
    if n is not None and (len(lam) > n or len(beta) > n):
        raise ValueError(f"phi needs l(lambda), l(beta) <= n={n}, got {lam}, {beta}")
    padded = list(beta) + [0] * max(0, len(lam) - len(beta))
    for part, pos in zip(lam, ranked_positions(padded)):
        padded[pos] += part
    if 0 in padded:
        raise AssertionError(f"phi produced a zero part from {lam}, {beta}")
    return tuple(padded)


def phi_inverse(alpha: Sequence[int], n: int, trace: list | None = None) -> LambdaBetaPair:
    """Peel a partition off ``alpha`` until a pure and inverting composition remains.

    If ``trace`` is a list, every intermediate ``(lam, beta, j)`` is appended to it.
    """
    alpha = tuple(alpha)
    if len(alpha) > n:
        raise ValueError(f"phi_inverse needs l(alpha) <= n={n}, got {alpha}")
    lam: list[int] = []
    beta = list(alpha)
    largest = max(beta, default=0)
    while True:
        if is_inverting(beta):
            if is_pure(beta):
                return LambdaBetaPair(tuple(lam), tuple(beta))
            ones = len(beta)
            lam += [0] * max(0, ones - len(lam))
            for i in range(ones):
                lam[i] += 1
            beta = [b - 1 for b in beta]
            while beta and beta[-1] == 0:
                beta.pop()
            if 0 in beta:
                raise AssertionError(f"interior zero while inverting {alpha}")
            if not (is_inverting(beta) and is_pure(beta)):
                raise AssertionError(f"step 2 left a non-basis composition {beta} from {alpha}")
            return LambdaBetaPair(tuple(lam), tuple(beta))
        j = non_inverted_parts(beta)[0]
        m = sum(1 for b in beta if b >= j)
        beta = [b - 1 if b >= j else b for b in beta]
        lam += [0] * max(0, m - len(lam))
        for i in range(m):
            lam[i] += 1
        if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
            raise AssertionError(f"lambda {lam} stopped being a partition while inverting {alpha}")
        new_largest = max(beta)
        if new_largest >= largest:
            raise AssertionError(f"largest part failed to decrease while inverting {alpha}")
        largest = new_largest
        if trace is not None:
            trace.append((tuple(lam), tuple(beta), j))


@lru_cache(maxsize=None)
def _pb(n: int, d: int) -> tuple[LambdaBetaPair, ...]:
    basis = b_set(n)
    pairs = []
    for k in range(d + 1):
        betas = [b for b in basis if sum(b) == d - k]
        for lam in partitions(k, max_len=n):
            pairs.extend(LambdaBetaPair(lam, b) for b in betas)
    pairs.sort(key=lambda p: revlex_key(phi(p.lam, p.beta)), reverse=True)
    return tuple(pairs)


def enumerate_PB(n: int, d: int) -> list[LambdaBetaPair]:
    """Pairs ``(lam, beta)`` with ``beta`` in B_n, ordered by descending revlex of their image."""
    return list(_pb(n, d))


def enumerate_C(n: int, d: int) -> list[Composition]:
    """Compositions of ``d`` into at most ``n`` parts, descending revlex."""
    return sorted_revlex(compositions(d, max_len=n))
