from hypothesis import given, settings
from hypothesis import strategies as st

from qborel.datum import make_datum
from qborel.freeword import FreeElem, skew_bracket
from qborel.shuffle import (BraidedTensor, ShuffleElem, braided_coproduct,
                            comonomial_degree, eval_free, eval_word,
                            shuffle_letter_mul, tensor_of, tensor_project)

C2 = make_datum("C", 2)
C3 = make_datum("C", 3)
C4 = make_datum("C", 4)
D4 = make_datum("D", 4)


def mono(datum, letters, coeff=None):
    return ShuffleElem.comonomial(datum, letters, coeff)


def test_letter_mul_right():
    got = shuffle_letter_mul(C2, "right", mono(C2, (2,)), 1)
    want = mono(C2, (2, 1)) + mono(C2, (1, 2), C2.p_phys_inv(1, 2))
    assert got == want


def test_letter_mul_left():
    got = shuffle_letter_mul(C2, "left", mono(C2, (2,)), 1)
    want = mono(C2, (1, 2)) + mono(C2, (2, 1), C2.p_phys_inv(2, 1))
    assert got == want


def test_letter_mul_empty():
    got = shuffle_letter_mul(C2, "right", ShuffleElem.unit(C2), 2)
    assert got == mono(C2, (2,))


def test_eval_free_examples():
    b = skew_bracket(C2, FreeElem.letter(C2, 1), FreeElem.letter(C2, 2))
    coeff = (C2.q_power(2) - C2.one()) * C2.p_phys(1, 2)
    assert eval_free(C2, b) == mono(C2, (2, 1), coeff)
    # distant letters: the bracket vanishes in the image
    b13 = skew_bracket(C3, FreeElem.letter(C3, 1), FreeElem.letter(C3, 3))
    assert eval_free(C3, b13).is_zero()
    assert eval_free(C3, FreeElem.letter(C3, 1)) == mono(C3, (1,))


def test_folded_letters_share_comonomials():
    # x_5 and x_1 are the same generator at rank 3
    assert eval_word(C3, (5,)) == eval_word(C3, (1,))
    assert mono(C3, (5, 4)) == mono(C3, (1, 2))


def test_braided_coproduct_full():
    got = braided_coproduct(mono(C2, (2, 1)))
    one = C2.one()
    want = BraidedTensor({((2, 1), ()): one, ((), (2, 1)): one,
                          ((2,), (1,)): one})
    assert got == want


def test_braided_coproduct_reduced():
    assert braided_coproduct(mono(C2, (1,)), reduced=True).is_zero()
    got = braided_coproduct(mono(C3, (3, 2, 1)), reduced=True)
    one = C3.one()
    want = BraidedTensor({((3,), (2, 1)): one, ((3, 2), (1,)): one})
    assert got == want


def test_tensor_project_partition():
    t = braided_coproduct(mono(C2, (2, 1)), reduced=True)
    p = tensor_project(t, (1, 0))
    assert p == BraidedTensor({((2,), (1,)): C2.one()})
    assert tensor_project(t, (0, 1)).is_zero()
    # projections over all right degrees reassemble the tensor
    degs = {comonomial_degree(r, 2) for (_, r) in t.terms}
    total = BraidedTensor.zero()
    for deg in degs:
        total = total + tensor_project(t, deg)
    assert total == t


@given(st.lists(st.integers(1, 3), min_size=1, max_size=6))
@settings(max_examples=60)
def test_coassociativity(letters):
    z = tuple(letters)
    elem = mono(C3, z)
    # (delta x id) delta vs (id x delta) delta on the comonomial
    lhs = {}
    for (a, b), c in braided_coproduct(elem).terms.items():
        for i in range(len(a) + 1):
            key = (a[:i], a[i:], b)
            lhs[key] = lhs.get(key, C3.zero()) + c
    rhs = {}
    for (a, b), c in braided_coproduct(elem).terms.items():
        for i in range(len(b) + 1):
            key = (a, b[:i], b[i:])
            rhs[key] = rhs.get(key, C3.zero()) + c
    assert {k: v for k, v in lhs.items() if v} == {k: v for k, v in rhs.items() if v}


@given(st.lists(st.integers(1, 5), min_size=1, max_size=5))
@settings(max_examples=60)
def test_left_right_build_consistency(letters):
    # building the word image left-to-right with right products equals
    # building it right-to-left with left products
    w = tuple(letters)
    right_built = eval_word(C3, w)
    left_built = ShuffleElem.unit(C3)
    for letter in reversed(w):
        left_built = shuffle_letter_mul(C3, "left", left_built, letter)
    assert right_built == left_built


def test_associativity_letter_triples():
    for datum in (C2, D4, C4):
        letters = range(1, datum.max_letter + 1)
        for i in letters:
            for j in letters:
                for k in letters:
                    xi = mono(datum, (i,))
                    ab = shuffle_letter_mul(datum, "right", xi, j)
                    lhs = shuffle_letter_mul(datum, "right", ab, k)
                    bc = shuffle_letter_mul(
                        datum, "right", mono(datum, (j,)), k)
                    rhs = shuffle_letter_mul(datum, "left", bc, i)
                    assert lhs == rhs, (datum.series, i, j, k)


@given(st.lists(st.integers(1, 5), min_size=1, max_size=5))
@settings(max_examples=40)
def test_multidegree_conservation(letters):
    z = tuple(C3.physical(i) for i in letters)
    total = comonomial_degree(z, 3)
    for (a, b), _ in braided_coproduct(mono(C3, letters)).terms.items():
        da = comonomial_degree(a, 3)
        db = comonomial_degree(b, 3)
        assert tuple(x + y for x, y in zip(da, db)) == total


def test_eval_is_multiplicative():
    # the evaluation map is an algebra homomorphism on concatenations
    u = FreeElem.word((1, 2), C3.one())
    v = FreeElem.word((3,), C3.one())
    lhs = eval_free(C3, u * v)
    rhs = eval_word(C3, (1, 2))
    rhs = shuffle_letter_mul(C3, "right", rhs, 3)
    assert lhs == rhs


def test_tensor_of_outer_product():
    l = mono(C2, (1,)) + mono(C2, (2,), C2.q_power(1))
    r = mono(C2, (2,))
    got = tensor_of(l, r)
    assert got.terms[((1,), (2,))] == C2.one()
    assert got.terms[((2,), (2,))] == C2.q_power(1)
