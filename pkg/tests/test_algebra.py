import pytest

from qsymbasis.algebra import (
    K_matrix,
    K_tilde,
    M_to_polynomial,
    NotQuasisymmetricError,
    monomial_basis_expand,
    oracle_multiply,
    oracle_multiply_monomial,
    polynomial_to_M,
    qschur_in_M,
    qschur_polynomial,
    restrict_variable,
    schur_in_monomials,
    to_M_basis,
    to_S_basis,
)
from qsymbasis.combinatorics import compositions, partitions, revlex_compare
from qsymbasis.matrices import identity, matmul
from qsymbasis.polynomials import MultivariatePolynomial, QSymExpansion
from qsymbasis.tableaux import multiply_schur_qschur


def test_monomial_basis_examples():
    assert monomial_basis_expand((2, 1), 3).terms == {(2, 1, 0): 1, (2, 0, 1): 1, (0, 2, 1): 1}
    assert monomial_basis_expand((), 2) == MultivariatePolynomial.one(2)
    assert len(monomial_basis_expand((3, 1, 2), 4).terms) == 4
    assert monomial_basis_expand((1, 1, 1), 2).terms == {}


@pytest.mark.parametrize("n", range(1, 5))
def test_polynomial_to_M_roundtrip(n):
    for d in range(5):
        for alpha in compositions(d, n):
            assert polynomial_to_M(monomial_basis_expand(alpha, n)).coeffs == {alpha: 1}


def test_polynomial_to_M_rejects_non_quasisymmetric():
    p = MultivariatePolynomial(3, {(1, 0, 0): 1, (0, 1, 0): 1})
    with pytest.raises(NotQuasisymmetricError):
        polynomial_to_M(p)


def test_qschur_examples():
    assert polynomial_to_M(qschur_polynomial((3, 1, 2), 4)).coeffs == {
        (3, 1, 2): 1, (3, 1, 1, 1): 1, (2, 1, 1, 2): 1, (1, 2, 1, 2): 1}
    assert qschur_in_M((3, 1, 2), 4).coeffs == {
        (3, 1, 2): 1, (3, 1, 1, 1): 1, (2, 1, 1, 2): 1, (1, 2, 1, 2): 1}
    assert qschur_in_M((3, 1, 2), 3).coeffs == {(3, 1, 2): 1}
    assert qschur_in_M((1,), 2).coeffs == {(1,): 1}


@pytest.mark.parametrize("n", range(1, 5))
def test_two_routes_to_K(n):
    for d in range(8):
        for alpha in compositions(d, n):
            assert qschur_in_M(alpha, n) == polynomial_to_M(qschur_polynomial(alpha, n))


@pytest.mark.parametrize("n", range(1, 6))
def test_K_triangular_and_inverse(n):
    for d in range(9):
        k, kt = K_matrix(n, d), K_tilde(n, d)
        assert k.is_upper_unitriangular() and kt.is_upper_unitriangular()
        labels = k.row_labels
        for i, a in enumerate(labels):
            for j, g in enumerate(labels):
                if revlex_compare(a, g) == -1:
                    assert kt.entries[i][j] == 0
        assert matmul(k.entries, kt.entries) == identity(len(labels))


def test_schur_examples():
    assert schur_in_monomials((1,), 2).terms == {(1, 0): 1, (0, 1): 1}
    s31 = to_S_basis(polynomial_to_M(schur_in_monomials((3, 1), 3)))
    assert s31.coeffs == {(1, 3): 1, (3, 1): 1}


def test_basis_change_roundtrip():
    e = QSymExpansion("S", 3, {(2, 1): 2, (1, 1, 1): -1})
    assert to_S_basis(to_M_basis(e)) == e
    assert polynomial_to_M(M_to_polynomial(e)) == to_M_basis(e)


def test_restrict_variable():
    m = QSymExpansion("M", 3, {(2, 1): 1})
    assert restrict_variable(m) == QSymExpansion("M", 2, {(2, 1): 1})
    assert restrict_variable(QSymExpansion("M", 3, {(1, 1, 1): 1})).coeffs == {}
    # Agrees with setting the last variable to zero.
    for alpha in compositions(4, 3):
        s = QSymExpansion("S", 3, {alpha: 1})
        assert M_to_polynomial(restrict_variable(s)) == M_to_polynomial(s).substitute_last_zero()


def test_products_stay_quasisymmetric():
    for a in compositions(3, 3):
        for b in compositions(2, 3):
            polynomial_to_M(monomial_basis_expand(a, 3) * monomial_basis_expand(b, 3))


def test_oracle_examples():
    assert oracle_multiply((1,), (2, 1)).coeffs == {(3, 1): 1, (2, 2): 1, (2, 1, 1): 1}
    assert oracle_multiply((), (1, 3)).coeffs == {(1, 3): 1}
    assert oracle_multiply((2, 1, 1), ()).coeffs == {(1, 1, 2): 1, (1, 2, 1): 1, (2, 1, 1): 1}


@pytest.mark.parametrize("lam", [lam for k in range(4) for lam in partitions(k)])
def test_oracle_agrees_with_tableaux(lam):
    for d in range(5):
        for beta in compositions(d):
            assert multiply_schur_qschur(lam, beta) == oracle_multiply(lam, beta)


@pytest.mark.slow
def test_oracle_agrees_up_to_size_seven():
    for total in range(8):
        for k in range(total + 1):
            for lam in partitions(k):
                for beta in compositions(total - k):
                    assert multiply_schur_qschur(lam, beta) == oracle_multiply(lam, beta)
