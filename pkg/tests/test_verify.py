import random
from fractions import Fraction

import pytest

from casegen import instance
from sexticfield.basis import assemble
from sexticfield.poly import Poly, char_poly_of_element, trinomial
from sexticfield.sextic import normalize, p_integral_basis
from sexticfield.verify import (
    OrderPresentation,
    dedekind_maximal_at_p,
    is_integral,
    lattice_index,
    maximality_test,
)

POWER_ROWS = ((), (0,), (0, 0), (0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0, 0))


def test_is_integral_examples():
    assert is_integral(Poly((0, 0, 0, 0, 0, 1)), 2, trinomial(2, 4))
    assert is_integral(Poly((1, 0, 0, 1)), 2, trinomial(0, 135))
    assert not is_integral(Poly((0, 1)), 2, trinomial(0, 12))


def test_order_presentation_accepts_orders():
    f = trinomial(0, 12)
    OrderPresentation.from_triangular(POWER_ROWS, (1,) * 6, f)
    f = trinomial(4, 4)
    order = OrderPresentation.from_triangular(
        POWER_ROWS, (1, 1, 1, 2, 2, 2), f
    )
    assert order.denominator == 2


def test_order_presentation_rejects_non_ring():
    f = trinomial(0, 12)
    rows = ((), (0,), (0, 0), (0, 0, 0), (0, 0, 0, 0), (1, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        OrderPresentation.from_triangular(rows, (1, 1, 1, 1, 1, 2), f)


def test_pipeline_bases_are_rings():
    rng = random.Random(17)
    for label in ("E13", "E20", "F26", "G6", "H11", "F19"):
        p, field = instance(label, rng)
        pb = p_integral_basis(p, field)
        dens = tuple(p ** k for k in pb.k)
        OrderPresentation.from_triangular(pb.rows, dens, field.f)


def test_lattice_index():
    basis = assemble(normalize(0, 12)).basis
    assert lattice_index(basis) == 2 ** 6
    basis = assemble(normalize(0, 135)).basis
    assert lattice_index(basis) == 2 ** 3 * 3 ** 7
    basis = assemble(normalize(4, 4)).basis
    assert lattice_index(basis) == 2 ** 3

    field = normalize(0, 135)
    pb = p_integral_basis(3, field)
    assert lattice_index(pb) == 3 ** pb.index_valuation


def test_dedekind_criterion():
    assert dedekind_maximal_at_p(trinomial(4, 4), 8539)
    assert not dedekind_maximal_at_p(trinomial(0, 12), 2)
    assert dedekind_maximal_at_p(trinomial(0, 12), 7)
    # v_3(D) = 11 yet the index at 3 is trivial: all eleven 3s are wild
    assert dedekind_maximal_at_p(trinomial(0, 12), 3)
    assert not dedekind_maximal_at_p(trinomial(0, 135), 3)
    assert dedekind_maximal_at_p(trinomial(1, 1), 2)


def test_maximality_oracle_on_worked_examples():
    f = trinomial(4, 4)
    order = OrderPresentation.from_triangular(
        POWER_ROWS, (1, 1, 1, 2, 2, 2), f
    )
    assert maximality_test(order, 2)

    f = trinomial(0, 12)
    power = OrderPresentation.from_triangular(POWER_ROWS, (1,) * 6, f)
    assert not maximality_test(power, 2)

    basis = assemble(normalize(0, 12)).basis
    order = OrderPresentation.from_triangular(
        basis.rows, basis.denominators, f
    )
    assert maximality_test(order, 2)
    assert maximality_test(order, 3)


def test_dedekind_agrees_with_case_tables():
    rng = random.Random(801)
    for label in ("E2", "E17", "F5", "F27", "G8", "G11", "H3", "H12"):
        for _ in range(2):
            p, field = instance(label, rng)
            pb = p_integral_basis(p, field)
            assert dedekind_maximal_at_p(field.f, p) == (pb.index_valuation == 0), \
                (label, field.a, field.b)


def _char_poly_by_matrix(g, t, f):
    # multiplication matrix of g(theta)/t on the power basis, then
    # Faddeev-LeVerrier for its characteristic polynomial
    n = f.degree
    rows = []
    for j in range(n):
        prod = (g * Poly((0,) * j + (1,))).divmod_by(f)[1]
        rows.append([Fraction(prod[k], t) for k in range(n)])
    M = rows
    coeffs = [Fraction(1)]
    A = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        for i in range(n):
            A[i][i] += coeffs[-1]
        A = [[sum(M[i][l] * A[l][j] for l in range(n)) for j in range(n)]
             for i in range(n)]
        c = -sum(A[i][i] for i in range(n)) / k
        coeffs.append(c)
    coeffs.reverse()
    return Poly(tuple(coeffs))


def test_char_poly_matrix_cross_check():
    rng = random.Random(5150)
    for _ in range(12):
        a = rng.randrange(-50, 51)
        b = rng.randrange(-50, 51)
        if b == 0 or 3125 * a ** 6 == 46656 * b ** 5:
            continue
        f = trinomial(a, b)
        g = Poly(tuple(rng.randrange(-6, 7) for _ in range(6)))
        t = rng.choice((1, 2, 3, 4))
        assert _char_poly_by_matrix(g, t, f) == char_poly_of_element(g, t, f)
