import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zcz import (
    Sequence,
    SequenceSet,
    ShiftSequence,
    associate,
    builtin_perfect,
    cross_correlation,
    interleave,
    left_shift,
    orthogonal_set,
    prop1_correlation,
    sylvester,
)
from zcz.generators import fourier_set, hadamard
from zcz.interleave import shifted_correlation

from conftest import EX2_S0, EX2_S1

EX1_A = SequenceSet([Sequence.binary([1, -1, -1]), Sequence.binary([1, 1, -1])])


def test_associate_example1():
    assert associate(EX1_A) == Sequence.binary([1, 1, -1, 1, -1, -1])


def test_associate_trivial_and_symbolic():
    assert associate(SequenceSet([Sequence.phase([2], 3)])) == Sequence.phase([2], 3)
    u = associate(SequenceSet([Sequence.from_complex([1, 2]), Sequence.from_complex([3, 4])]))
    assert np.array_equal(u.values, [1, 3, 2, 4])


def test_interleave_example1(h2):
    S = interleave(EX1_A, h2)
    assert S[0] == Sequence.binary([1, 1, -1, 1, -1, -1])
    assert S[1] == Sequence.binary([1, -1, -1, -1, -1, 1])


def test_interleave_trivial():
    one = SequenceSet([Sequence.binary([1])])
    assert interleave(one, one) == one


def test_interleave_example2(h2):
    a = builtin_perfect("tri9")
    A = SequenceSet([left_shift(a, 0), left_shift(a, 5)])
    S = interleave(A, h2)
    assert [s.to_string() for s in S] == [EX2_S0, EX2_S1]


def test_interleave_rejects_non_orthogonal():
    B = SequenceSet([Sequence.binary([1, 1]), Sequence.binary([1, 1])])
    with pytest.raises(ValueError):
        interleave(EX1_A, B)


def test_interleave_size_mismatch():
    with pytest.raises(ValueError):
        interleave(EX1_A, orthogonal_set(sylvester(2)))


def test_mixed_phases():
    a = builtin_perfect("tri9")
    A = SequenceSet([a, left_shift(a, 1), left_shift(a, 2), left_shift(a, 3)])
    S = interleave(A, fourier_set(4))
    assert S.order == 12


def test_prop1_examples(h2):
    assert prop1_correlation(EX1_A, h2, 0, 0, 0) == pytest.approx(6)
    a = builtin_perfect("tri9")
    A = SequenceSet([a, left_shift(a, 5)])
    assert abs(prop1_correlation(A, h2, 0, 1, 3)) < 1e-9


def test_prop1_index_errors(h2):
    with pytest.raises(IndexError):
        prop1_correlation(EX1_A, h2, 2, 0, 0)
    with pytest.raises(IndexError):
        prop1_correlation(EX1_A, h2, 0, 0, 6)


def test_prop1_exhaustive_n4_m5():
    rng = np.random.default_rng(42)
    A = SequenceSet([Sequence.from_complex(np.exp(2j * np.pi * rng.random(5))) for _ in range(4)])
    B = orthogonal_set(sylvester(2))
    S = interleave(A, B)
    for h in range(4):
        for k in range(4):
            direct = cross_correlation(S[h], S[k]).values
            oracle = [prop1_correlation(A, B, h, k, t) for t in range(20)]
            assert np.allclose(direct, oracle, atol=1e-9 * 20)


@st.composite
def interleave_inputs(draw):
    n = draw(st.sampled_from([2, 3, 4]))
    m = draw(st.integers(3, 8))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    A = SequenceSet([Sequence.from_complex(np.exp(2j * np.pi * rng.random(m))) for _ in range(n)])
    B = orthogonal_set(sylvester(n.bit_length() - 1)) if n != 3 else fourier_set(3)
    return A, B


@settings(max_examples=30, deadline=None)
@given(interleave_inputs(), st.data())
def test_prop1_matches_direct(inputs, data):
    A, B = inputs
    n = A.M
    S = interleave(A, B)
    h = data.draw(st.integers(0, n - 1))
    k = data.draw(st.integers(0, n - 1))
    direct = cross_correlation(S[h], S[k]).values
    for tau in range(S.N):
        assert abs(prop1_correlation(A, B, h, k, tau) - direct[tau]) <= 1e-9 * S.N


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([("quad16", 4), ("tri9", 2), ("quad8", 8), ("quad16", 12)]), st.data())
def test_shift_specialization(case, data):
    name, n = case
    a = builtin_perfect(name)
    m = a.length
    e = ShiftSequence(data.draw(st.lists(st.integers(0, m - 1), min_size=n, max_size=n)), m)
    B = orthogonal_set(hadamard(n))
    A = SequenceSet([left_shift(a, x) for x in e])
    S = interleave(A, B)
    h = data.draw(st.integers(0, n - 1))
    k = data.draw(st.integers(0, n - 1))
    direct = cross_correlation(S[h], S[k]).values
    for tau in range(S.N):
        assert abs(shifted_correlation(a, e, B, h, k, tau) - direct[tau]) <= 1e-9 * S.N
