"""Real roots, multiplicities, the smoothness test, Setup and Simple Moves."""

import random

import pytest

from schubert_a2.alcove import (
    E,
    S0,
    S1,
    S2,
    SIMPLES,
    element_to_word,
    format_word,
    is_spiral,
    length,
    parse_word,
    spiral_factorizations,
    word_to_element,
)
from schubert_a2.bruhat import interval, leq
from schubert_a2.kumar import (
    BETA,
    NotRealRootError,
    SetupHypothesisError,
    element_root_action,
    equivariant_multiplicity,
    is_positive_real_root,
    is_real_root,
    kumar_smooth,
    kumar_smooth_set,
    multiplicity_table,
    psi_set,
    reflection_to_root,
    root_to_reflection,
    setup_move_check,
    simple_root_action,
    smoothness_target,
)
from schubert_a2.loci import elements_of_length_at_most
from schubert_a2.qstat import NotComparableError, q_brute
from schubert_a2.rational import RationalNF, p_const

ELEMENTS = sorted(elements_of_length_at_most(7), key=lambda w: (length(w), format_word(w)))


def test_simple_root_action():
    assert simple_root_action(1, BETA[2]) == (0, 1, 1)  # s1(b2) = b1 + b2
    assert simple_root_action(1, BETA[1]) == (0, -1, 0)
    assert simple_root_action(0, BETA[1]) == (1, 1, 0)


def test_realness():
    assert is_real_root((1, 0, 0)) and is_real_root((0, 1, 1))
    assert not is_real_root((1, 1, 1))  # delta is imaginary
    assert not is_real_root((2, 0, 1))
    assert is_positive_real_root((2, 3, 3))
    assert not is_positive_real_root((0, -1, 0))


def test_inverse_action():
    random.seed(1)
    for _ in range(150):
        w = word_to_element([random.randrange(3) for _ in range(9)])
        r = (random.randrange(-4, 5), random.randrange(-4, 5), random.randrange(-4, 5))
        assert element_root_action(w, element_root_action(w.inverse(), r)) == r


def test_root_reflection_bijection_simples():
    assert root_to_reflection(BETA[1]).element() == S1
    assert root_to_reflection(BETA[2]).element() == S2
    assert root_to_reflection(BETA[0]).element() == S0
    with pytest.raises(NotRealRootError):
        root_to_reflection((1, 1, 1))
    with pytest.raises(NotRealRootError):
        root_to_reflection((0, -1, 0))


def test_bijection_word_conjugation_oracle():
    """The reflection of w(b_i) is w s_i w^{-1}, for every positive real
    root with coefficient sum at most 25."""
    bound = 25
    witnesses = {BETA[i]: (E, i) for i in range(3)}
    frontier = list(witnesses)
    while frontier:
        new = []
        for r in frontier:
            w, i = witnesses[r]
            for j in range(3):
                r2 = simple_root_action(j, r)
                key = r2 if all(c >= 0 for c in r2) else tuple(-c for c in r2)
                if sum(key) <= bound + 3 and key not in witnesses:
                    witnesses[key] = (SIMPLES[j] * w, i)
                    new.append(key)
        frontier = new
    checked = 0
    for r, (w, i) in sorted(witnesses.items()):
        if sum(r) > bound:
            continue
        image = element_root_action(w, BETA[i])
        assert image == r or image == tuple(-c for c in r)
        assert root_to_reflection(r).element() == w * SIMPLES[i] * w.inverse()
        assert reflection_to_root(root_to_reflection(r)) == r
        checked += 1
    expected = sum(1 for r in _all_positive_real_roots(bound))
    assert checked == expected and checked >= 40


def _all_positive_real_roots(bound):
    finite = [(0, 1, 0), (0, 0, 1), (0, 1, 1), (0, -1, 0), (0, 0, -1), (0, -1, -1)]
    for base in finite:
        n = 0
        while True:
            r = tuple(c + n for c in base)
            if sum(r) > bound:
                break
            if all(c >= 0 for c in r) and any(r):
                yield r
            n += 1


def test_psi_examples():
    for i in range(3):
        assert psi_set(SIMPLES[i], E) == {BETA[i]}
    with pytest.raises(NotComparableError):
        psi_set(parse_word("01"), parse_word("21"))


def test_psi_counts_to_length_10():
    """|Psi(w, x)| equals the reflection count q(w, x) + l(w), exhaustively."""
    for w in sorted(elements_of_length_at_most(10), key=length):
        lw = length(w)
        for x in interval(w):
            psis = psi_set(w, x)
            assert all(is_positive_real_root(r) for r in psis)
            assert len(psis) == q_brute(w, x) + lw


def test_trivial_multiplicities():
    assert equivariant_multiplicity(E, E, []) == RationalNF.integer(1)
    for i in range(3):
        val = equivariant_multiplicity(SIMPLES[i], E, [i])
        assert val == RationalNF(p_const(-1), (BETA[i],))
    # x not below w gives zero
    assert equivariant_multiplicity(S1, S2).is_zero()


def test_multiplicity_word_validation():
    with pytest.raises(ValueError):
        equivariant_multiplicity(S1, E, [2])  # wrong element
    with pytest.raises(ValueError):
        multiplicity_table([1, 1])  # not reduced


def test_word_independence_across_canonical_factorizations():
    random.seed(4)
    candidates = [w for w in ELEMENTS if not is_spiral(w) and 3 <= length(w) <= 7]
    for w in random.sample(candidates, 30):
        words = [
            element_to_word(u) + element_to_word(v)
            for u, v in spiral_factorizations(w)
        ]
        t1 = multiplicity_table(words[0])
        t2 = multiplicity_table(words[1])
        assert set(t1) == set(t2)
        for x in t1:
            assert t1[x] == t2[x]


def test_kumar_smooth_basics():
    for w in ELEMENTS:
        if length(w) > 6:
            continue
        assert kumar_smooth(w, w)
        for x in interval(w):
            if length(x) == length(w) - 1:
                assert kumar_smooth(w, x)
    with pytest.raises(NotComparableError):
        kumar_smooth(parse_word("01"), parse_word("21"))


def test_kumar_matches_closed_form_smooth_locus():
    from schubert_a2.loci import smooth_points

    for w in ELEMENTS:
        assert kumar_smooth_set(w) == smooth_points(w), format_word(w)


def test_setup_moves_exhaustive_to_6():
    count = 0
    for w in ELEMENTS:
        if length(w) > 6:
            continue
        for x in interval(w):
            for i in range(3):
                for side in ("right", "left"):
                    try:
                        ok = setup_move_check(w, x, i, side)
                    except SetupHypothesisError:
                        continue
                    assert ok, (format_word(w), format_word(x), i, side)
                    count += 1
    assert count > 1000


def test_setup_hypothesis_errors_name_clause():
    w = parse_word("01")
    with pytest.raises(SetupHypothesisError, match="x <= w"):
        setup_move_check(w, parse_word("21"), 0)
    # w0 > w for the ascent test: choose s with ws < w
    with pytest.raises(SetupHypothesisError, match="w < ws"):
        setup_move_check(w, E, 1)
    # xs <= w violation
    with pytest.raises(SetupHypothesisError, match="xs"):
        setup_move_check(w, E, 0)


def test_setup_psi_identity_directly():
    """Psi(ws, xs) adds exactly the image root x(b_i)."""
    done = 0
    for w in ELEMENTS:
        if length(w) > 5:
            continue
        for x in interval(w):
            for i in range(3):
                s = SIMPLES[i]
                if not (length(w * s) > length(w) and not leq(x * s, w)):
                    continue
                extra = element_root_action(x, BETA[i])
                assert psi_set(w * s, x * s) == psi_set(w, x) | {extra}
                assert extra not in psi_set(w, x)
                # Maximum Principle: xs < ws
                assert leq(x * s, w * s) and length(x * s) == length(x) + 1
                done += 1
    assert done > 300


def test_rationalnf_arithmetic():
    a = RationalNF.reciprocal((0, 1, 0))
    b = RationalNF.reciprocal((1, 1, 0))
    c = RationalNF.reciprocal((1, 2, 1))
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a - a).is_zero()
    # cancellation does not change the value: (f*g)/(f) == g as polynomials
    from schubert_a2.rational import p_mul_form

    num = p_mul_form(p_const(3), (0, 1, 0))
    v = RationalNF(num, ((0, 1, 0),))
    assert v == RationalNF.integer(3)
    # signs are pulled out of negative forms
    neg = RationalNF.reciprocal((0, -1, 0))
    assert neg == -a
    with pytest.raises(ValueError):
        RationalNF.reciprocal((1, -1, 0))


def test_exact_division_handles_degree_gaps():
    """Long division must reach degrees created by its own subtractions."""
    from schubert_a2.rational import form_poly, p_div_form, p_mul

    a = {(3, 0, 0): 1, (0, 3, 0): 1}  # b0^3 + b1^3
    q = p_div_form(a, (1, 1, 0))
    assert q == {(2, 0, 0): 1, (1, 1, 0): -1, (0, 2, 0): 1}
    assert p_mul(q, form_poly((1, 1, 0))) == a
    assert p_div_form({(3, 0, 0): 1, (0, 1, 0): 1}, (1, 1, 0)) is None
    random.seed(5)
    for _ in range(200):
        f = random.choice([(1, 1, 0), (0, 1, 1), (2, 3, 3), (1, 2, 1)])
        q0 = {}
        for _ in range(random.randrange(1, 5)):
            e = (random.randrange(3), random.randrange(3), random.randrange(3))
            q0[e] = q0.get(e, 0) + random.randrange(-4, 5)
        q0 = {e: c for e, c in q0.items() if c}
        prod = p_mul(q0, form_poly(f))
        assert p_div_form(prod, f) == q0


def test_rationalnf_substitution():
    # applying s_i twice is the identity on rational functions
    val = equivariant_multiplicity(parse_word("012"), parse_word("01"))
    images = [simple_root_action(1, b) for b in BETA]
    assert val.substituted(images).substituted(images) == val


def test_printing_format():
    val = equivariant_multiplicity(SIMPLES[1], E, [1])
    assert str(val) == "(-1) / (b1)"
    assert str(RationalNF.integer(0)) == "0"
    assert str(smoothness_target(S1, E)) == "(-1) / (b1)"
