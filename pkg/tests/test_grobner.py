import pytest

from schubert import grobner, ideal, perm, pipedream
from schubert.grobner import (
    antidiag_lex_ne,
    antidiag_revlex_nw,
    diag_lex,
    initial_term,
    minor_polynomial,
    mono_cells,
)
from schubert.ideal import Minor


NW3 = minor_polynomial(Minor((1, 2, 3), (1, 2, 3)), 4)


def test_initial_term_antidiagonal():
    for order in (antidiag_revlex_nw(4), antidiag_lex_ne(4)):
        lm, lc = initial_term(NW3, order)
        assert mono_cells(lm, 4) == frozenset([(1, 3), (2, 2), (3, 1)])
        assert lc == -1


def test_initial_term_diagonal():
    lm, lc = initial_term(NW3, diag_lex(4))
    assert mono_cells(lm, 4) == frozenset([(1, 1), (2, 2), (3, 3)])
    assert lc == 1


def test_initial_term_of_monomial_is_itself():
    f = {(1, 0, 0, 0, 0, 0, 0, 0, 0): 5}
    assert initial_term(f, antidiag_revlex_nw(3)) == ((1, 0, 0, 0, 0, 0, 0, 0, 0), 5)


def test_antidiagonal_orders_pick_antidiagonals_of_noncontiguous_minors():
    minor = Minor((1, 3, 4), (2, 3, 5))
    f = minor_polynomial(minor, 5)
    for order in (antidiag_revlex_nw(5), antidiag_lex_ne(5)):
        lm, _ = initial_term(f, order)
        assert mono_cells(lm, 5) == minor.antidiagonal()


def test_minor_polynomial_2x2():
    f = minor_polynomial(Minor((1, 2), (1, 2)), 2)
    # z11 z22 - z12 z21
    assert f == {(1, 0, 0, 1): 1, (0, 1, 1, 0): -1}


def test_2143_minors_are_groebner_for_antidiagonal_orders():
    gens = [
        minor_polynomial(m, 4) for m in ideal.schubert_generators((2, 1, 4, 3))
    ]
    assert grobner.is_groebner_basis(gens, antidiag_revlex_nw(4))
    assert grobner.is_groebner_basis(gens, antidiag_lex_ne(4))


def test_2143_minors_not_groebner_for_diagonal_order():
    gens = [
        minor_polynomial(m, 4) for m in ideal.schubert_generators((2, 1, 4, 3))
    ]
    assert not grobner.is_groebner_basis(gens, diag_lex(4))


def test_monomial_set_is_groebner():
    gens = [{(1, 0, 0, 0): 1}, {(0, 1, 1, 0): 1}]
    assert grobner.is_groebner_basis(gens, antidiag_revlex_nw(2))
    assert grobner.buchberger(gens, antidiag_revlex_nw(2)) == gens


def test_buchberger_completes_diagonal_2143():
    gens = [
        minor_polynomial(m, 4) for m in ideal.schubert_generators((2, 1, 4, 3))
    ]
    order = diag_lex(4)
    basis = grobner.buchberger(gens, order)
    assert len(basis) > len(gens)
    assert grobner.is_groebner_basis(basis, order)


def test_initial_ideal_contains_antidiagonals():
    # J_w is contained in the initial ideal by construction
    for w in [(2, 1, 4, 3), (1, 4, 3, 2)]:
        order = antidiag_revlex_nw(4)
        gens = [minor_polynomial(m, 4) for m in ideal.schubert_generators(w)]
        computed = {mono_cells(m, 4) for m in grobner.initial_ideal(gens, order)}
        assert computed == set(ideal.antidiagonal_ideal(w).generators)


def test_verify_theorem_b_s4():
    for w in perm.all_perms(4):
        assert grobner.verify_theorem_b(w, antidiag_revlex_nw(4))
        assert grobner.verify_theorem_b(w, antidiag_lex_ne(4))


def test_verify_theorem_b_w0_trivial():
    assert grobner.verify_theorem_b(perm.long_element(3), antidiag_revlex_nw(3))


def test_verify_rejects_diagonal_order():
    with pytest.raises(ValueError):
        grobner.verify_theorem_b((2, 1, 4, 3), diag_lex(4))


def test_facet_count_matches_rp_when_verify_passes():
    # the counting shadow of the equal-multidegree argument
    for w in perm.all_perms(4):
        assert grobner.verify_theorem_b(w, antidiag_revlex_nw(4))
        facets = ideal.stanley_reisner_facets(ideal.antidiagonal_ideal(w))
        assert len(facets) == len(pipedream.rp_mitosis(w))


def test_s_polynomial_exactness():
    f = {(2, 0, 0, 0): 3, (0, 1, 1, 0): 1}
    g = {(1, 1, 0, 0): 2, (0, 0, 0, 1): 5}
    order = diag_lex(2)
    s = grobner.s_polynomial(f, g, order)
    assert all(isinstance(c, int) for c in s.values())
    # leading terms cancel
    assert (2, 1, 0, 0) not in s


def test_coefficient_guard():
    f = {(1, 0, 0, 0): 10**6, (0, 0, 0, 1): 1}
    g = {(1, 0, 0, 0): 7, (0, 1, 0, 0): 10**6}
    with pytest.raises(grobner.CoefficientBlowup):
        grobner.top_reduce(
            {(2, 0, 0, 0): 1, (0, 0, 1, 0): 1}, [f, g], diag_lex(2), max_coeff=10
        )
