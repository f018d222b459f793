from annseq.bitcore import MAX_NAT, DomainError, phi, psi, is_spike, n_factor, block
from hypothesis import given, strategies as st
import pytest

naturals = st.integers(min_value=1, max_value=10**6)


@pytest.mark.parametrize("n, expected", [
    (1, 1),
    (2, 0),
    (3, 2),
    (5, 1),
    (11, 2),
    (23, 3),
    (4, 0),
    (7, 3),
    (64, 0),
    (MAX_NAT, 64),
])
def test_phi(n, expected):
    assert phi(n) == expected


@pytest.mark.parametrize("n, expected", [
    (1, 1),
    (7, 3),
    (8, 4),
    (255, 8),
    (256, 9),
    (MAX_NAT, 64),
])
def test_psi(n, expected):
    assert psi(n) == expected


@pytest.mark.parametrize("n, expected", [
    (1, True),
    (3, True),
    (7, True),
    (1023, True),
    (5, False),
    (11, False),
    (8, False),
    (1022, False),
])
def test_is_spike(n, expected):
    assert is_spike(n) == expected


@pytest.mark.parametrize("n, n_n, b", [
    (2, 2, 0),
    (5, 2, 0),
    (9, 4, 0),
    (11, 2, 0),
    (19, 4, 0),
    (21, 10, 4),
    (83, 20, 16),
])
def test_decompositions(n, n_n, b):
    assert n_factor(n) == n_n
    assert block(n) == b


@pytest.mark.parametrize("call", [phi, psi, is_spike])
@pytest.mark.parametrize("n", [0, -1, MAX_NAT + 1])
def test_out_of_range(call, n):
    with pytest.raises(DomainError):
        call(n)


def test_block_of_spike_tailed_number():
    assert block(23) == 0


@pytest.mark.parametrize("call", [n_factor, block])
@pytest.mark.parametrize("n", [1, 3, 15, 0])
def test_decomposition_rejects_spikes(call, n):
    with pytest.raises(DomainError):
        call(n)


@given(naturals)
def test_phi_counts_trailing_ones(n):
    p = phi(n)
    low = (1 << p) - 1
    assert n & low == low
    assert (n >> p) & 1 == 0


@given(naturals)
def test_psi_brackets(n):
    assert 1 << (psi(n) - 1) <= n < 1 << psi(n)


@given(naturals)
def test_spike_iff_phi_equals_psi(n):
    assert is_spike(n) == (phi(n) == psi(n))
    assert is_spike(n) == (n == (1 << psi(n)) - 1)


@given(naturals.filter(lambda n: not is_spike(n)))
def test_nonspike_decompositions(n):
    p = phi(n)
    n_n = n_factor(n)
    assert n == (1 << p) * n_n + (1 << p) - 1
    assert n_n >= 2 and n_n % 2 == 0
    b = block(n)
    assert n == (1 << (psi(n) - 1)) + b + (1 << p) - 1
    assert b == 0 or b > 1 << p
