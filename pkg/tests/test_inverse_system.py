from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from apolar import (
    AlgebraPresentation,
    DependentLeadingForms,
    JetPolynomial,
    algebra_length,
    annihilator_slice,
    annihilator_upto,
    contract,
    derivative_span,
    hilbert_function,
    hilbert_function_of_form,
    is_compressed,
    macaulay_validate,
    monomials,
    monomials_up_to,
    parse_dual,
    parse_jet,
    socle_type,
    type_mismatch_warning,
)
from apolar.catalecticant import compressed_hilbert_function, degree_dimension
from apolar.linalg import RationalMatrix

from conftest import random_form, random_polynomial


def pres(*texts, n=2):
    return AlgebraPresentation.from_strings(n, list(texts))


QUINTIC = pres("y1^3*y2^2 + y2^4")
STRETCHED_B = pres("y1^3*y2 + y2^3")
LEVEL_PAIR = pres("y1^2*y2*y3 + y3^3", "y1*y2^2*y3 + y2*y3^3", n=3)


# ---- validation -------------------------------------------------------------


def test_validate_independent_squares():
    macaulay_validate(pres("y1^2", "y2^2"))


def test_validate_rejects_equal_leading_forms():
    with pytest.raises(DependentLeadingForms) as exc:
        macaulay_validate(pres("y1^2", "y1^2 + y1"))
    relation = exc.value.relation
    assert any(c != 0 for c in relation)


def test_validate_level_pair():
    macaulay_validate(LEVEL_PAIR)


def test_validate_witness_is_a_relation():
    p = pres("y1^2 + y2^2", "y1^2 - y2^2", "y2^2")
    with pytest.raises(DependentLeadingForms) as exc:
        macaulay_validate(p)
    c = exc.value.relation
    combo = sum(
        (g.top_component().scaled(ci) for g, ci in zip(p.generators, c)),
        parse_dual("0", 2),
    )
    assert combo.is_zero()


def test_presentation_rejects_zero_generator():
    with pytest.raises(ValueError):
        AlgebraPresentation(2, (parse_dual("0", 2),))


def test_degenerate_constant_generator():
    # dual module K: the algebra is the field itself
    p = pres("3")
    assert tuple(hilbert_function(p)) == (1,)
    assert tuple(socle_type(p)) == (1,)


# ---- annihilator slices -----------------------------------------------------


def test_annihilator_slice_of_pure_power():
    p = pres("y1^4")
    basis = annihilator_slice(p, 1)
    assert len(basis) == 1
    assert basis[0].terms == {(0, 1): 1}


def test_annihilator_slice_quintic_degree_four():
    basis = annihilator_slice(QUINTIC, 4)
    x1_4 = parse_jet("x1^4", 2, 4)
    assert _in_span(basis, x1_4)


def test_annihilator_slice_quintic_degree_three_empty():
    # brute-force check: no homogeneous cubic annihilates; the mixed cubic
    # element x2^3 - 2 x1^3 x2 only shows up in the inhomogeneous annihilator
    assert annihilator_slice(QUINTIC, 3) == []


def _in_span(basis, f):
    exps = sorted(
        {e for b in basis for e in b.terms} | set(f.terms), key=lambda e: e.sort_key()
    )
    mat = RationalMatrix.from_columns(
        [[b.terms.get(e, Fraction(0)) for e in exps] for b in basis]
    )
    return mat.solve([f.terms.get(e, Fraction(0)) for e in exps]) is not None


def test_annihilator_upto_quintic_contains_both_generators():
    basis = annihilator_upto(QUINTIC, 4)
    assert _in_span(basis, parse_jet("x1^4", 2, 4))
    assert _in_span(basis, parse_jet("x2^3 - 2*x1^3*x2", 2, 4))


def test_annihilator_upto_pure_power():
    s = 4
    p = pres(f"y1^{s}")
    basis = annihilator_upto(p, s)
    count = len([e for e in monomials_up_to(2, s) if e.degree >= 1 and e[1] >= 1])
    assert len(basis) == count
    for k in range(1, s + 1):
        assert not _in_span(basis, parse_jet(f"x1^{k}", 2, s))
    for f in basis:
        assert all(contract(f, g).is_zero() for g in p.generators)


def test_annihilator_upto_almost_stretched():
    basis = annihilator_upto(STRETCHED_B, 4)
    assert _in_span(basis, parse_jet("x1^4", 2, 4))
    assert _in_span(basis, parse_jet("x2^2 - x1^3", 2, 4))


# ---- Hilbert functions ------------------------------------------------------


def test_hilbert_quintic():
    assert tuple(hilbert_function(QUINTIC)) == (1, 2, 3, 3, 2, 1)


def test_hilbert_almost_stretched():
    assert tuple(hilbert_function(STRETCHED_B)) == (1, 2, 2, 2, 1)


def test_hilbert_level_pair():
    assert tuple(hilbert_function(LEVEL_PAIR)) == (1, 3, 6, 6, 2)


# ---- socle types ------------------------------------------------------------


def test_socle_type_pure_power():
    for s in (2, 4):
        E = socle_type(pres(f"y1^{s}"))
        assert tuple(E) == (0,) * s + (1,)


def test_socle_type_level_pair():
    E = socle_type(LEVEL_PAIR)
    assert tuple(E) == (0, 0, 0, 0, 2)
    assert E.type() == 2
    assert type_mismatch_warning(LEVEL_PAIR, E) is None


def test_socle_type_two_monomials():
    # brute-force oracle: in A = R/Ann(y1^2, y2^3) the classes of x1^2 and
    # x2^3 are killed by both variables, and nothing of lower order is
    p = pres("y1^2", "y2^3")
    assert tuple(hilbert_function(p)) == (1, 2, 2, 1)
    assert tuple(socle_type(p)) == (0, 0, 1, 1)
    for f in ("x1^3", "x1^2*x2"):
        assert all(
            contract(parse_jet(f, 2, 4), g).is_zero() for g in p.generators
        )
    assert not contract(parse_jet("x1^2", 2, 3), p.generators[0]).is_zero()


def test_type_mismatch_warning_for_redundant_generator():
    # y1^3 already generates everything y1^2 contributes
    p = pres("y1^3", "y1^2")
    E = socle_type(p)
    assert type_mismatch_warning(p, E) is not None


# ---- compressedness ---------------------------------------------------------


def test_is_compressed_quintic():
    assert is_compressed(QUINTIC) is True


def test_is_compressed_almost_stretched_false():
    # (1,2,2,2,1) falls short of the extremal (1,2,3,2,1)
    assert is_compressed(STRETCHED_B) is False
    assert tuple(compressed_hilbert_function(2, 4, socle_type(STRETCHED_B))) == (1, 2, 3, 2, 1)


def test_is_compressed_level_pair():
    assert is_compressed(LEVEL_PAIR) is True


# ---- cross-module invariants ------------------------------------------------


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_single_form_hilbert_agrees_with_catalecticants(data):
    import random

    rng = random.Random(data.draw(st.integers(0, 10**6)))
    n = data.draw(st.sampled_from([2, 3]))
    s = data.draw(st.integers(1, 4))
    G = random_form(rng, n, s)
    p = AlgebraPresentation(n, (G,))
    assert tuple(hilbert_function(p)) == tuple(hilbert_function_of_form(G))


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_length_matches_quotient_dimension(data):
    import random

    rng = random.Random(data.draw(st.integers(0, 10**6)))
    n = 2
    G = random_polynomial(rng, n, [3, 2])
    if G.is_zero() or G.degree < 1:
        return
    p = AlgebraPresentation(n, (G,))
    total = algebra_length(p)
    dim_r = len(monomials_up_to(n, p.socle_degree))
    assert total == dim_r - len(annihilator_upto(p, p.socle_degree))


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_annihilator_elements_annihilate(data):
    import random

    rng = random.Random(data.draw(st.integers(0, 10**6)))
    n = data.draw(st.sampled_from([2, 3]))
    G = random_polynomial(rng, n, [3, 2, 1])
    if G.is_zero() or G.degree < 1:
        return
    p = AlgebraPresentation(n, (G,))
    for f in annihilator_upto(p, p.socle_degree + 1):
        assert contract(f, G).is_zero()


def test_annihilator_slice_codimension_bounds_hilbert():
    # dim R_d - dim(slice) >= h_d, equality for homogeneous generators
    import random

    rng = random.Random(7)
    for _ in range(10):
        n = rng.choice([2, 3])
        s = rng.randint(2, 4)
        G = random_form(rng, n, s)
        p = AlgebraPresentation(n, (G,))
        hf = hilbert_function(p)
        for d in range(s + 1):
            codim = degree_dimension(n, d) - len(annihilator_slice(p, d))
            assert codim == hf[d]
    G = parse_dual("y1^3*y2 + y2^3", 2)
    p = AlgebraPresentation(2, (G,))
    hf = hilbert_function(p)
    for d in range(5):
        codim = degree_dimension(2, d) - len(annihilator_slice(p, d))
        assert codim >= hf[d]


def test_compressed_presentation_has_compressed_leading_forms():
    # the graded algebra of the leading forms matches the local one
    p = LEVEL_PAIR
    tops = [g.top_component() for g in p.generators]
    graded = AlgebraPresentation(3, tuple(tops))
    assert tuple(hilbert_function(graded)) == tuple(hilbert_function(p))


def test_compressed_random_presentations_match_their_leading_forms(rng):
    # for compressed presentations the local and associated-graded Hilbert
    # functions coincide
    from apolar import is_compressed_level

    found = 0
    while found < 6:
        n = rng.choice([2, 3])
        while True:
            top = random_form(rng, n, 4)
            if is_compressed_level([top]):
                break
        G = top + random_polynomial(rng, n, [3, 2])
        p = AlgebraPresentation(n, (G,))
        if not is_compressed(p):
            continue
        graded = AlgebraPresentation(n, (top,))
        assert tuple(hilbert_function(p)) == tuple(hilbert_function(graded))
        found += 1


def test_socle_bound_inequality_random(rng):
    # h_i <= min(dim R_i, sum_{u >= i} e_u dim R_{u-i})
    for _ in range(8):
        n = rng.choice([2, 3])
        G = random_polynomial(rng, n, [4, 3])
        if G.is_zero() or G.degree != 4:
            continue
        p = AlgebraPresentation(n, (G,))
        E = socle_type(p)
        hf = hilbert_function(p)
        s = p.socle_degree
        for i in range(s + 1):
            bound = sum(E[u] * degree_dimension(n, u - i) for u in range(i, s + 1))
            assert hf[i] <= min(degree_dimension(n, i), bound)
