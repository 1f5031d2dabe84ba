import pytest

from zcz import builtin_perfect, fourier_set, hadamard12_paper, orthogonal_set, sylvester
from zcz.construct import t1_canonical_shift, theorem1_build, theorem2_build

EX2_S0 = "040004022040004022"
EX2_S1 = "010301052343034325"

EX3_SET1 = [
    "0000012302020321000012302020321000002301020221030000301220201032",
    "0123020203210000012313132103333301232020032122220123313121031111",
    "0202032100000123020210322222301202022103000023010202321022221230",
    "0321000001230202032111112301313103212222012320200321333323011313",
]


@pytest.fixture(scope="session")
def h2():
    return orthogonal_set(sylvester(1))


@pytest.fixture(scope="session")
def b12():
    return orthogonal_set(hadamard12_paper())


@pytest.fixture(scope="session")
def ex2_set(h2):
    S, _ = theorem1_build(builtin_perfect("tri9"), h2, (0, 5))
    return S


@pytest.fixture(scope="session")
def ex3_sets():
    a = builtin_perfect("quad16")
    B = fourier_set(4)
    return [theorem1_build(a, B, t1_canonical_shift(16, 4, "case2", i))[0] for i in range(4)]


@pytest.fixture(scope="session")
def ex4_set(b12):
    S, _ = theorem2_build(builtin_perfect("quad16"), b12)
    return S
