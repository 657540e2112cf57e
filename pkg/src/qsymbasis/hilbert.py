"""Integer polynomials in ``q`` and the Hilbert series quotient ``P_n(q)``."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence


@dataclass(frozen=True)
class QPolynomial:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "QPolynomial":
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        return QPolynomial(tuple(self[i] + other[i] for i in range(size)))

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return self + (-other)

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        if not self.coeffs or not other.coeffs:
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(tuple(out))

    def __pow__(self, k: int) -> "QPolynomial":
        out = QPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, q: int) -> int:
        return sum(c * q**i for i, c in enumerate(self.coeffs))

    def truncate(self, d_max: int) -> "QPolynomial":
        return QPolynomial(self.coeffs[: d_max + 1])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms)


ONE = QPolynomial((1,))
Q = QPolynomial((0, 1))


def q_integer(i: int) -> QPolynomial:
    """``1 + q + ... + q^{i-1}``."""
    return QPolynomial((1,) * i)


def q_factorial(n: int) -> QPolynomial:
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = ONE
    for i in range(1, n + 1):
        out = out * q_integer(i)
    return out


def series_divide(num: Sequence[int], den: Sequence[int], d_max: int) -> list[int]:
    """Power-series quotient up to ``q^{d_max}``, checking every step is exact over the integers."""
    if not den or den[0] == 0:
        raise ValueError("denominator must have a nonzero constant term")
    out = []
    for d in range(d_max + 1):
        acc = (num[d] if d < len(num) else 0) - sum(
            den[j] * out[d - j] for j in range(1, min(d, len(den) - 1) + 1))
        c, r = divmod(acc, den[0])
        if r:
            raise ArithmeticError(f"inexact series division at degree {d}")
        out.append(c)
    return out


def qsym_hilbert_series(n: int, d_max: int) -> list[int]:
    """Coefficients of ``sum_{i=0..n} q^i / (1-q)^i``: compositions of ``d`` with at most ``n`` parts."""
    return [1 if d == 0 else sum(comb(d - 1, i - 1) for i in range(1, min(n, d) + 1)) for d in range(d_max + 1)]


def sym_hilbert_series(n: int, d_max: int) -> list[int]:
    """Coefficients of ``prod_{i=1..n} 1 / (1 - q^i)``."""
    coeffs = [1] + [0] * d_max
    for i in range(1, n + 1):
        for d in range(i, d_max + 1):
            coeffs[d] += coeffs[d - i]
    return coeffs


def p_by_division(n: int, d_max: int) -> QPolynomial:
    return QPolynomial(tuple(series_divide(qsym_hilbert_series(n, d_max), sym_hilbert_series(n, d_max), d_max)))


def p_closed_form(n: int) -> QPolynomial:
    prod = ONE
    for i in range(1, n):
        prod = prod * q_integer(i + 1)
    one_minus_q = QPolynomial((1, -1))
    total = QPolynomial()
    for i in range(n + 1):
        total = total + Q**i * one_minus_q ** (n - i)
    return prod * total


def p_recurrence(n: int) -> QPolynomial:
    p = ONE
    for m in range(1, n + 1):
        p = p + Q**m * (q_factorial(m) - p)
    return p


def p_degree_bound(n: int) -> int:
    return n * (n + 1) // 2


class HilbertMismatch(AssertionError):
    def __init__(self, n: int, degree: int, values: dict):
        self.n, self.degree, self.values = n, degree, values
        super().__init__(f"P_{n} routes disagree at q^{degree}: {values}")


def hilbert_quotient_P(n: int, d_max: int | None = None) -> QPolynomial:
    """``P_n(q)`` up to ``q^{d_max}``, computed three ways that must agree."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if d_max is None:
        d_max = p_degree_bound(n)
    routes = {
        "division": p_by_division(n, d_max),
        "closed_form": p_closed_form(n).truncate(d_max),
        "recurrence": p_recurrence(n).truncate(d_max),
    }
    for k in range(d_max + 1):
        values = {name: p[k] for name, p in routes.items()}
        if len(set(values.values())) > 1:
            raise HilbertMismatch(n, k, values)
    return routes["recurrence"]


def degree_census(comps: Iterable[Sequence[int]]) -> QPolynomial:
    counts = Counter(sum(c) for c in comps)
    top = max(counts, default=-1)
    return QPolynomial(tuple(counts.get(k, 0) for k in range(top + 1)))
