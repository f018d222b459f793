"""Bit arithmetic on positive integers.

Every condition on sequences is phrased through the binary digits of the
entries: ``phi`` (index of the lowest zero bit), ``psi`` (bit length), spikes
(all-ones numbers) and the two decompositions of a non-spike number.
"""

MAX_NAT = 2**64 - 1


class DomainError(ValueError):
    pass


def _require_nat(n: int):
    if not 0 < n <= MAX_NAT:
        raise DomainError(f"{n} is outside the positive 64-bit range.")


def phi(n: int) -> int:
    """Returns the index of the lowest zero bit of n.

    Args:
        n (int): A positive integer.

    Returns:
        int: 0 for even n, t for n = 2^t - 1.
    """
    _require_nat(n)
    # trailing ones of n are the trailing zeros of n + 1
    m = n + 1
    return (m & -m).bit_length() - 1


def psi(n: int) -> int:
    """Returns the bit length of n, the unique t with 2^(t-1) <= n < 2^t."""
    _require_nat(n)
    return n.bit_length()


def is_spike(n: int) -> bool:
    _require_nat(n)
    return n & (n + 1) == 0


def _require_nonspike(n: int):
    if is_spike(n):
        raise DomainError(f"{n} is a spike; the decomposition needs a non-spike.")


def n_factor(n: int) -> int:
    """Returns N_n in n = 2^phi(n) * N_n + 2^phi(n) - 1.

    Args:
        n (int): A positive non-spike integer.

    Returns:
        int: The even cofactor N_n, at least 2.
    """
    _require_nonspike(n)
    p = phi(n)
    return (n + 1 - (1 << p)) >> p


def block(n: int) -> int:
    """Returns B(n) in n = 2^(psi(n)-1) + B(n) + 2^phi(n) - 1.

    B(n) is the value of the bits strictly between positions phi(n) and
    psi(n) - 1. It is either 0 or larger than 2^phi(n).

    Args:
        n (int): A positive non-spike integer.

    Returns:
        int: The middle block of n.
    """
    _require_nonspike(n)
    return n - (1 << (psi(n) - 1)) - (1 << phi(n)) + 1
