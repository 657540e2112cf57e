"""Monomial basis, change of basis to quasisymmetric Schur polynomials, and the product oracle.

The oracle multiplies polynomials monomial by monomial and converts back to
the S basis. It shares nothing with the Littlewood-Richardson tableau count
beyond the definition of composition tableaux, so agreement between the two
is a genuine check.
"""
from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .bijection import enumerate_C
from .combinatorics import Composition, Partition, strip_zeros
from .matrices import TransitionMatrix, invert_upper_unitriangular
from .polynomials import MultivariatePolynomial, QSymExpansion
from .tableaux import packed_contents, qschur_weight_sum


class NotQuasisymmetricError(ValueError):
    """Raised when a polynomial's coefficients depend on more than the exponent pattern."""


def monomial_basis_expand(alpha: Sequence[int], n: int) -> MultivariatePolynomial:
    """``M_alpha(x_1..x_n)``; the zero polynomial when ``alpha`` has more than ``n`` parts."""
    alpha = tuple(alpha)
    terms = {}
    for support in combinations(range(n), len(alpha)):
        exps = [0] * n
        for pos, part in zip(support, alpha):
            exps[pos] = part
        terms[tuple(exps)] = 1
    return MultivariatePolynomial(n, terms)


def polynomial_to_M(poly: MultivariatePolynomial) -> QSymExpansion:
    """Read M-coefficients off the packed monomials and check every other monomial agrees."""
    n = poly.n
    coeffs = {}
    for exps, c in poly.terms.items():
        comp = strip_zeros(exps)
        packed = comp + (0,) * (n - len(comp))
        ref = poly.terms.get(packed, 0)
        if ref != c:
            raise NotQuasisymmetricError(
                f"x^{exps} has coefficient {c} but x^{packed} has {ref}")
        coeffs[comp] = c
    expansion = QSymExpansion("M", n, coeffs)
    # Every increasing support must be present, not only the ones we saw.
    for comp, c in coeffs.items():
        for support in combinations(range(n), len(comp)):
            exps = [0] * n
            for pos, part in zip(support, comp):
                exps[pos] = part
            if poly.terms.get(tuple(exps), 0) != c:
                packed = comp + (0,) * (n - len(comp))
                raise NotQuasisymmetricError(
                    f"x^{tuple(exps)} has coefficient {poly.terms.get(tuple(exps), 0)} but x^{packed} has {c}")
    return expansion


def M_to_polynomial(expansion: QSymExpansion) -> MultivariatePolynomial:
    if expansion.basis != "M":
        expansion = to_M_basis(expansion)
    out = MultivariatePolynomial(expansion.n)
    for comp, c in expansion.coeffs.items():
        out = out + monomial_basis_expand(comp, expansion.n).scale(c)
    return out


def qschur_polynomial(alpha: Sequence[int], n: int) -> MultivariatePolynomial:
    return MultivariatePolynomial(n, qschur_weight_sum(alpha, n))


def qschur_in_M(alpha: Sequence[int], n: int) -> QSymExpansion:
    """Row of K: composition tableaux of shape ``alpha`` counted by (packed) content."""
    alpha = tuple(alpha)
    if len(alpha) > n:
        raise ValueError(f"S_{alpha} needs at least {len(alpha)} variables")
    return QSymExpansion("M", n, {g: c for g, c in packed_contents(alpha).items() if len(g) <= n})


@lru_cache(maxsize=None)
def _k_matrix(n: int, d: int) -> tuple[tuple[Composition, ...], tuple[tuple[int, ...], ...]]:
    labels = tuple(enumerate_C(n, d))
    rows = []
    for alpha in labels:
        counts = packed_contents(alpha)
        rows.append(tuple(counts.get(g, 0) for g in labels))
    return labels, tuple(rows)


@lru_cache(maxsize=None)
def _k_tilde(n: int, d: int) -> tuple[tuple[int, ...], ...]:
    _, rows = _k_matrix(n, d)
    return tuple(tuple(r) for r in invert_upper_unitriangular(rows))


def K_matrix(n: int, d: int) -> TransitionMatrix:
    """``S_alpha = sum_gamma K[alpha, gamma] M_gamma`` over compositions of ``d`` with at most ``n`` parts."""
    labels, rows = _k_matrix(n, d)
    return TransitionMatrix(list(labels), list(labels), [list(r) for r in rows])


def K_tilde(n: int, d: int) -> TransitionMatrix:
    """Inverse of :func:`K_matrix`: ``M_alpha = sum_gamma Kt[alpha, gamma] S_gamma``."""
    labels, _ = _k_matrix(n, d)
    return TransitionMatrix(list(labels), list(labels), [list(r) for r in _k_tilde(n, d)])


def _change_basis(expansion: QSymExpansion, target: str, table) -> QSymExpansion:
    out: dict[Composition, int] = defaultdict(int)
    for comp, c in expansion.coeffs.items():
        d = sum(comp)
        labels, _ = _k_matrix(expansion.n, d)
        row = table(expansion.n, d)[labels.index(comp)]
        for gamma, v in zip(labels, row):
            if v:
                out[gamma] += c * v
    return QSymExpansion(target, expansion.n, out)


def to_S_basis(expansion: QSymExpansion) -> QSymExpansion:
    if expansion.basis == "S":
        return expansion
    return _change_basis(expansion, "S", _k_tilde)


def to_M_basis(expansion: QSymExpansion) -> QSymExpansion:
    if expansion.basis == "M":
        return expansion
    return _change_basis(expansion, "M", lambda n, d: _k_matrix(n, d)[1])


def ssyt(lam: Sequence[int], n: int):
    """Semistandard Young tableaux of shape ``lam`` with entries ``<= n``, as row tuples."""
    lam = tuple(lam)
    cells = [(i, j) for i, length in enumerate(lam) for j in range(length)]
    grid = [[0] * length for length in lam]

    def rec(idx: int):
        if idx == len(cells):
            yield tuple(tuple(r) for r in grid)
            return
        i, j = cells[idx]
        lo = max(grid[i][j - 1] if j else 1, grid[i - 1][j] + 1 if i else 1)
        # Room for the strictly increasing column below this cell.
        below = sum(1 for length in lam[i + 1:] if length > j)
        for v in range(lo, n - below + 1):
            grid[i][j] = v
            yield from rec(idx + 1)
        grid[i][j] = 0

    yield from rec(0)


def schur_in_monomials(lam: Sequence[int], n: int) -> MultivariatePolynomial:
    """Classical Schur polynomial from semistandard tableaux; zero if ``l(lam) > n``."""
    terms: dict = defaultdict(int)
    if len(lam) <= n:
        for t in ssyt(lam, n):
            exps = [0] * n
            for row in t:
                for v in row:
                    exps[v - 1] += 1
            terms[tuple(exps)] += 1
    return MultivariatePolynomial(n, terms)


def oracle_multiply(lam: Sequence[int], beta: Sequence[int], n: int | None = None) -> QSymExpansion:
    """``s_lam * S_beta`` in the S basis via explicit polynomial multiplication.

    Uses ``n = |lam| + |beta|`` variables by default so no S_gamma collapses.
    """
    lam, beta = tuple(lam), tuple(beta)
    if n is None:
        n = sum(lam) + sum(beta)
    product = schur_in_monomials(lam, n) * qschur_polynomial(beta, n)
    return to_S_basis(polynomial_to_M(product))


def oracle_multiply_monomial(lam: Sequence[int], beta: Sequence[int], n: int) -> QSymExpansion:
    """``s_lam * M_beta`` in ``n`` variables, S basis, by polynomial multiplication."""
    product = schur_in_monomials(lam, n) * monomial_basis_expand(beta, n)
    return to_S_basis(polynomial_to_M(product))


def restrict_variable(expansion: QSymExpansion) -> QSymExpansion:
    """Image under ``x_{n+1} -> 0``: drop the terms with ``n+1`` parts.

    Valid in both bases, since ``M_alpha`` and ``S_alpha`` with ``n+1`` parts
    vanish in ``n`` variables and the others are unchanged.
    """
    n = expansion.n - 1
    if n < 0:
        raise ValueError("cannot restrict an expansion in zero variables")
    return QSymExpansion(expansion.basis, n, {c: v for c, v in expansion.coeffs.items() if len(c) <= n})
