"""Transition matrices for the candidate bases and their triangularity certificates."""
from __future__ import annotations

import json
import time
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import K_tilde
from .bijection import LambdaBetaPair, enumerate_C, enumerate_PB, phi
from .combinatorics import b_set, dominates, format_composition, sort_to_partition
from .hilbert import HilbertMismatch, degree_census, hilbert_quotient_P
from .matrices import TransitionMatrix
from .tableaux import enumerate_LR_tableaux, lr_expansion, super_filling

MAX_N = 5
MAX_D = 10
FAMILIES = ("S", "M")
INDEX_SET_NOTE = "the basis index set written Pi_n in the integrality statement is read as B_n"


class ResourceLimitError(ValueError):
    """Requested certificate exceeds the desk-scale guard; pass ``force=True`` to override."""


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: dict | None = None

    def to_dict(self) -> dict:
        out = {"name": self.name, "status": "pass" if self.passed else "fail"}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class CertificateReport:
    params: dict
    checks: list[CheckResult] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self, timings: bool = True) -> dict:
        out = {
            "params": self.params,
            "notes": list(self.notes),
            "checks": [c.to_dict() for c in self.checks],
        }
        if timings:
            out["timings"] = {k: round(v, 6) for k, v in self.timings.items()}
        return out

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def _fmt(comp) -> str:
    return format_composition(comp)


# --------------------------------------------------------------------------
# Hilbert series

def check_pk_counts(n: int) -> CheckResult:
    """``P_n(q)`` coefficients against the degree census of ``B_n``."""
    name = f"hilbert_pk_counts[n={n}]"
    try:
        p = hilbert_quotient_P(n)
    except HilbertMismatch as exc:
        return CheckResult(name, False, {"degree": exc.degree, "routes": exc.values})
    census = degree_census(b_set(n))
    for k in range(max(p.degree, census.degree) + 1):
        if p[k] != census[k]:
            return CheckResult(name, False, {"degree": k, "p_k": p[k], "census": census[k]})
    return CheckResult(name, True)


# --------------------------------------------------------------------------
# transition matrices

def _row(pair: LambdaBetaPair, n: int, family: str) -> dict:
    if family == "S":
        return lr_expansion(pair.lam, pair.beta, max_rows=n)
    if family == "M":
        # s_lam M_beta = sum_gamma Kt[beta, gamma] s_lam S_gamma
        kt = K_tilde(n, sum(pair.beta))
        row = kt.entries[kt.row_labels.index(pair.beta)]
        out: dict = defaultdict(int)
        for gamma, c in zip(kt.col_labels, row):
            if c:
                for alpha, v in lr_expansion(pair.lam, gamma, max_rows=n).items():
                    out[alpha] += c * v
        return {a: v for a, v in out.items() if v}
    raise ValueError(f"unknown family {family!r}; expected 'S' or 'M'")


def build_transition_matrix(n: int, d: int, family: str = "S") -> TransitionMatrix:
    """Rows ``s_lam * S_beta`` (or ``s_lam * M_beta``) for pairs in PB_{n,d}, columns the S basis.

    Rows are ordered by descending revlex of ``phi(lam, beta)``, columns by
    descending revlex.
    """
    pairs = enumerate_PB(n, d)
    cols = enumerate_C(n, d)
    index = {c: j for j, c in enumerate(cols)}
    entries = []
    for pair in pairs:
        row = [0] * len(cols)
        for alpha, v in _row(pair, n, family).items():
            row[index[alpha]] = v
        entries.append(row)
    return TransitionMatrix(list(pairs), cols, entries)


def certify_matrix(matrix: TransitionMatrix, n: int, d: int, family: str) -> list[CheckResult]:
    """Square, leading labels equal phi, upper-unitriangular, determinant one."""
    tag = f"[n={n},d={d},family={family}]"
    checks = []
    pairs: Sequence[LambdaBetaPair] = matrix.row_labels
    checks.append(CheckResult(f"square{tag}", matrix.is_square(),
                              None if matrix.is_square() else {"shape": list(matrix.shape)}))
    images = [phi(p.lam, p.beta, n) for p in pairs]
    dupes = {_fmt(a) for a in images if images.count(a) > 1}
    checks.append(CheckResult(f"phi_injective{tag}", not dupes, {"repeated_images": sorted(dupes)} if dupes else None))
    if not matrix.is_square():
        return checks

    bad_label = None
    for i, (pair, image) in enumerate(zip(pairs, images)):
        lead = next((j for j, v in enumerate(matrix.entries[i]) if v), None)
        if image != matrix.col_labels[i] or lead != i:
            bad_label = {
                "lambda": _fmt(pair.lam), "beta": _fmt(pair.beta), "phi": _fmt(image),
                "leading_column": None if lead is None else _fmt(matrix.col_labels[lead]),
            }
            break
    checks.append(CheckResult(f"leading_label_is_phi{tag}", bad_label is None, bad_label))

    violation = matrix.first_violation_of_unitriangularity()
    witness = None
    if violation is not None:
        i, j, v = violation
        pair = pairs[i]
        witness = {"lambda": _fmt(pair.lam), "beta": _fmt(pair.beta),
                   "gamma": _fmt(matrix.col_labels[j]), "entry": v, "row": list(matrix.entries[i])}
    checks.append(CheckResult(f"upper_unitriangular{tag}", violation is None, witness))

    det = matrix.determinant()
    checks.append(CheckResult(f"determinant_one{tag}", det == 1, None if det == 1 else {"determinant": det}))
    return checks


def check_leading_multiplicity(n: int, d: int) -> CheckResult:
    """The coefficient of ``S_phi(lam, beta)`` comes from a single LR tableau, the super filling."""
    name = f"leading_lr_filling_unique[n={n},d={d}]"
    for pair in enumerate_PB(n, d):
        target = phi(pair.lam, pair.beta, n)
        found = [t for t in enumerate_LR_tableaux(pair.lam, pair.beta, max_rows=n) if t.shape == target]
        expected = super_filling(pair.lam, pair.beta).rows
        if len(found) != 1 or found[0].rows != expected:
            return CheckResult(name, False, {
                "lambda": _fmt(pair.lam), "beta": _fmt(pair.beta), "phi": _fmt(target),
                "fillings": [t.to_json() for t in found],
            })
    return CheckResult(name, True)


def check_dominance_vanishing(n: int, d: int) -> CheckResult:
    """``C^alpha_{lam,beta} = 0`` whenever ``lambda(alpha)`` is not dominated by ``lambda(phi(lam, beta))``."""
    name = f"dominance_vanishing[n={n},d={d}]"
    cols = enumerate_C(n, d)
    for pair in enumerate_PB(n, d):
        top = sort_to_partition(phi(pair.lam, pair.beta, n))
        row = lr_expansion(pair.lam, pair.beta, max_rows=n)
        for alpha in cols:
            if row.get(alpha, 0) and not dominates(top, sort_to_partition(alpha)):
                return CheckResult(name, False, {
                    "lambda": _fmt(pair.lam), "beta": _fmt(pair.beta), "alpha": _fmt(alpha),
                    "coefficient": row[alpha], "phi": _fmt(phi(pair.lam, pair.beta, n)),
                })
    return CheckResult(name, True)


def certify_basis(
    n: int,
    d_max: int,
    families: Sequence[str] = FAMILIES,
    force: bool = False,
    dominance: bool = True,
) -> CertificateReport:
    """Run every certificate for ``d = 0..d_max``."""
    if n < 1 or d_max < 0:
        raise ValueError("need n >= 1 and d_max >= 0")
    if not force and (n > MAX_N or d_max > MAX_D):
        raise ResourceLimitError(f"n={n}, d_max={d_max} exceeds the guard n<={MAX_N}, d_max<={MAX_D}; use force")
    for fam in families:
        if fam not in FAMILIES:
            raise ValueError(f"unknown family {fam!r}")
    report = CertificateReport(
        params={"n": n, "d_max": d_max, "families": list(families)},
        notes=[INDEX_SET_NOTE],
    )

    def timed(key: str, fn, *args):
        start = time.perf_counter()
        result = fn(*args)
        report.timings[key] = report.timings.get(key, 0.0) + time.perf_counter() - start
        return result

    report.checks.append(timed("hilbert", check_pk_counts, n))
    for d in range(d_max + 1):
        size_ok = len(enumerate_PB(n, d)) == len(enumerate_C(n, d))
        report.checks.append(CheckResult(
            f"index_sets_equinumerous[n={n},d={d}]", size_ok,
            None if size_ok else {"PB": len(enumerate_PB(n, d)), "C": len(enumerate_C(n, d))}))
        for fam in families:
            matrix = timed(f"matrix_{fam}", build_transition_matrix, n, d, fam)
            report.checks.extend(timed(f"certify_{fam}", certify_matrix, matrix, n, d, fam))
        if "S" in families:
            report.checks.append(timed("leading_multiplicity", check_leading_multiplicity, n, d))
        if dominance:
            report.checks.append(timed("dominance", check_dominance_vanishing, n, d))
    return report
