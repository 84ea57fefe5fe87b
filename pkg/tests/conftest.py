import numpy as np
import pytest

MEGABYTE = 1 << 20

#: The three fixed 1 MiB corpus files share an identical ones count (half the
#: bits) but differ wildly in structure, which is the point of the corpus.
RANDOM_BITS_SEED = 987654321


@pytest.fixture(scope="session")
def zeros_megabyte() -> bytes:
    return b"\x00" * MEGABYTE


@pytest.fixture(scope="session")
def sorted_megabyte() -> bytes:
    """All ones first, then all zeros; half the bits are ones."""
    return b"\xff" * (MEGABYTE // 2) + b"\x00" * (MEGABYTE // 2)


@pytest.fixture(scope="session")
def periodic_megabyte() -> bytes:
    """Strictly alternating bits; half the bits are ones."""
    return b"\xaa" * MEGABYTE


@pytest.fixture(scope="session")
def balanced_random_megabyte() -> bytes:
    """A random permutation of exactly half ones, packed MSB-first."""
    bits = np.zeros(8 * MEGABYTE, dtype=np.uint8)
    bits[: 4 * MEGABYTE] = 1
    np.random.default_rng(RANDOM_BITS_SEED).shuffle(bits)
    return np.packbits(bits).tobytes()


@pytest.fixture(scope="session")
def random_megabyte() -> bytes:
    """Plain seeded random bytes (ones count close to, not exactly, half)."""
    return np.random.default_rng(20260810).bytes(MEGABYTE)
