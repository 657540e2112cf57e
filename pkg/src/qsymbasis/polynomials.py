"""Sparse integer polynomials and quasisymmetric expansions."""
from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Mapping

from .combinatorics import Composition, format_composition, sorted_revlex

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class MultivariatePolynomial:
    """Polynomial in ``x_1..x_n`` stored as exponent vector -> integer coefficient."""

    n: int
    terms: Mapping[Exponent, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for exps, c in self.terms.items():
            exps = tuple(exps)
            if len(exps) != self.n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for n={self.n}")
            if c:
                clean[exps] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def one(cls, n: int) -> "MultivariatePolynomial":
        return cls(n, {(0,) * n: 1})

    def __add__(self, other: "MultivariatePolynomial") -> "MultivariatePolynomial":
        self._check(other)
        out = defaultdict(int, self.terms)
        for e, c in other.terms.items():
            out[e] += c
        return MultivariatePolynomial(self.n, out)

    def __sub__(self, other: "MultivariatePolynomial") -> "MultivariatePolynomial":
        return self + other.scale(-1)

    def scale(self, c: int) -> "MultivariatePolynomial":
        return MultivariatePolynomial(self.n, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other: "MultivariatePolynomial") -> "MultivariatePolynomial":
        self._check(other)
        out: dict[Exponent, int] = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return MultivariatePolynomial(self.n, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultivariatePolynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"variable counts differ: {self.n} vs {other.n}")

    def substitute_last_zero(self) -> "MultivariatePolynomial":
        """Set ``x_n = 0``."""
        if self.n == 0:
            return self
        return MultivariatePolynomial(self.n - 1, {e[:-1]: c for e, c in self.terms.items() if e[-1] == 0})

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"exponent": list(e), "coeff": c} for e, c in sorted(self.terms.items(), reverse=True)],
        }


@dataclass(frozen=True)
class QSymExpansion:
    """A quasisymmetric polynomial in ``n`` variables written in the M or S basis."""

    basis: str
    n: int
    coeffs: Mapping[Composition, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in ("M", "S"):
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for comp, c in self.coeffs.items():
            comp = tuple(comp)
            if len(comp) > self.n:
                raise ValueError(f"{self.basis}_{comp} has more than n={self.n} parts")
            if c:
                clean[comp] = c
        object.__setattr__(self, "coeffs", clean)

    def __getitem__(self, comp) -> int:
        return self.coeffs.get(tuple(comp), 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSymExpansion):
            return NotImplemented
        return (self.basis, self.n, self.coeffs) == (other.basis, other.n, other.coeffs)

    def __hash__(self):
        return hash((self.basis, self.n, frozenset(self.coeffs.items())))

    def __add__(self, other: "QSymExpansion") -> "QSymExpansion":
        if (self.basis, self.n) != (other.basis, other.n):
            raise ValueError("expansions live in different bases or variable counts")
        out = defaultdict(int, self.coeffs)
        for comp, c in other.coeffs.items():
            out[comp] += c
        return QSymExpansion(self.basis, self.n, out)

    def scale(self, c: int) -> "QSymExpansion":
        return QSymExpansion(self.basis, self.n, {k: c * v for k, v in self.coeffs.items()})

    def ordered_terms(self) -> list[tuple[Composition, int]]:
        """Terms sorted by degree, then descending revlex."""
        return [(comp, self.coeffs[comp]) for comp in sorted_revlex(self.coeffs)]

    def to_dict(self) -> dict:
        return {
            "basis": self.basis,
            "n": self.n,
            "terms": [{"comp": format_composition(c), "coeff": v} for c, v in self.ordered_terms()],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for comp, c in self.ordered_terms():
            name = f"{self.basis}_{''.join(map(str, comp)) or '0'}"
            parts.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(parts)
