"""Thermodynamic analysis of a binary file as a frozen two-level gas.

A file of L bits with p ones and a caller-supplied one-bit energy
``bit_energy`` carries energy Q = p * bit_energy. Its information content is
estimated three ways, none privileged:

- order-0: the binary entropy of the empirical ones fraction (permutation
  invariant, blind to correlations),
- block-k: the entropy rate of overlapping k-bit blocks (sees short-range
  structure),
- compression: bits output by the frozen coder in :mod:`infotherm.lz`
  times ln 2 (an upper bound on the true information; the coder's overhead
  bound on incompressible input is 5%, in practice ~0.4%).

A maximally random file has p = L/2 and information L ln 2, which fixes its
temperature at bit_energy / (2 k_B ln 2) independent of content. Files whose
estimated information falls short of L ln 2 are hotter: the same energy
carries less information. A file is "in equilibrium" when it is
incompressible (equilibrium score >= 0.95).

Bit order within a byte is most-significant-bit first everywhere.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import lz
from .errors import DomainError, EmptyFileError, SampleSizeError, UndefinedTemperatureError
from .quantities import K_B, LN2

#: Block size used for the block-entropy field of a standard report.
DEFAULT_BLOCK_BITS = 8

#: Scores at or above this are reported as "equilibrium (incompressible)".
EQUILIBRIUM_THRESHOLD = 0.95

#: Minimum sample factor for block entropy: need at least 10 * 2^k bits.
_MIN_SAMPLES_PER_STATE = 10


@dataclass(frozen=True)
class FileReport:
    """Per-file analysis; information fields are totals in nats."""

    bit_length: int
    ones_count: int
    bit_energy: float
    energy: float
    info_max: float
    info_order0: float
    info_block_k: float | None
    info_compression: float
    file_temperature: float
    effective_temperature: float
    equilibrium_score: float

    @property
    def is_equilibrium(self) -> bool:
        return self.equilibrium_score >= EQUILIBRIUM_THRESHOLD


def _require_data(data: bytes) -> None:
    if len(data) == 0:
        raise EmptyFileError("cannot analyze an empty byte sequence")


def analyze_counts(data: bytes, bit_energy: float) -> tuple[int, int, float]:
    """(bit length, ones count, energy in J) of a byte sequence."""
    _require_data(data)
    if not bit_energy > 0:
        raise DomainError(f"bit_energy must be > 0, got {bit_energy}")
    bit_length = 8 * len(data)
    ones = int.from_bytes(data, "big").bit_count()
    return bit_length, ones, ones * bit_energy


def max_information(bit_length: int) -> float:
    """Largest information a file of bit_length bits can carry: L ln 2 nats."""
    if bit_length < 1:
        raise EmptyFileError(f"bit_length must be >= 1, got {bit_length}")
    return bit_length * LN2


def file_temperature(bit_energy: float) -> float:
    """Temperature of a maximally random file: bit_energy / (2 k_B ln 2).

    Independent of length and content by construction (the ones fraction of
    a random file is 1/2).
    """
    if not bit_energy > 0:
        raise DomainError(f"bit_energy must be > 0, got {bit_energy}")
    return bit_energy / (2.0 * K_B * LN2)


def shannon_entropy_order0(data: bytes) -> float:
    """Binary entropy of the empirical ones fraction, nats per bit."""
    _require_data(data)
    bit_length = 8 * len(data)
    q = int.from_bytes(data, "big").bit_count() / bit_length
    if q == 0.0 or q == 1.0:
        return 0.0
    return -q * math.log(q) - (1.0 - q) * math.log(1.0 - q)


def block_entropy(data: bytes, block_bits: int) -> float:
    """Entropy rate of overlapping block_bits-bit windows, nats per bit.

    Bits are taken MSB-first. Requires at least 10 * 2^block_bits bits of
    data; undersampled block entropies are biased low, so short inputs are
    rejected rather than silently underestimated.
    """
    _require_data(data)
    if not 1 <= block_bits <= 24:
        raise DomainError(f"block size must be in [1, 24] bits, got {block_bits}")
    bit_length = 8 * len(data)
    needed = _MIN_SAMPLES_PER_STATE * (1 << block_bits)
    if bit_length < needed:
        raise SampleSizeError(
            f"block entropy with k={block_bits} needs at least {needed} bits "
            f"({-(-needed // 8)} bytes), got {bit_length}"
        )
    bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8))
    n_blocks = bit_length - block_bits + 1
    codes = np.zeros(n_blocks, dtype=np.int64)
    for j in range(block_bits):
        codes <<= 1
        codes |= bits[j : j + n_blocks]
    counts = np.bincount(codes, minlength=1 << block_bits)
    probs = counts[counts > 0] / n_blocks
    return float(-(probs * np.log(probs)).sum() / block_bits)


def compression_information(data: bytes) -> float:
    """Information estimate from the frozen coder: compressed bits * ln 2, nats."""
    _require_data(data)
    return lz.compressed_size_bits(data) * LN2


def effective_temperature(energy: float, info_nats: float) -> float:
    """Temperature of a file given its energy and estimated information.

    energy / (k_B * info). Returns +inf when a file carries energy but no
    information (the degenerate fully-ordered limit).
    """
    if energy < 0:
        raise DomainError(f"energy must be >= 0, got {energy}")
    if info_nats < 0:
        raise DomainError(f"information must be >= 0, got {info_nats}")
    if info_nats == 0.0:
        if energy == 0.0:
            raise UndefinedTemperatureError("temperature of zero energy and zero information is undefined")
        return math.inf
    return energy / (K_B * info_nats)


def equilibrium_score(data: bytes) -> float:
    """Compression information over maximum information, clamped to [0, 1]."""
    _require_data(data)
    score = compression_information(data) / max_information(8 * len(data))
    return min(1.0, max(0.0, score))


def analyze(data: bytes, bit_energy: float, block_bits: int = DEFAULT_BLOCK_BITS) -> FileReport:
    """Full report for one byte sequence.

    ``info_block_k`` is None when the input is too short even for 1-bit
    blocks; otherwise the largest feasible block size up to ``block_bits``
    is used. The effective temperature uses the compression estimate, the
    tightest of the three information estimates for correlated files.
    """
    if not 1 <= block_bits <= 24:
        raise DomainError(f"block size must be in [1, 24] bits, got {block_bits}")
    bit_length, ones, energy = analyze_counts(data, bit_energy)
    info_max = max_information(bit_length)
    info_order0 = shannon_entropy_order0(data) * bit_length

    k = block_bits
    while k >= 1 and bit_length < _MIN_SAMPLES_PER_STATE * (1 << k):
        k -= 1
    info_block = block_entropy(data, k) * bit_length if k >= 1 else None

    info_comp = compression_information(data)
    score = min(1.0, max(0.0, info_comp / info_max))
    return FileReport(
        bit_length=bit_length,
        ones_count=ones,
        bit_energy=bit_energy,
        energy=energy,
        info_max=info_max,
        info_order0=info_order0,
        info_block_k=info_block,
        info_compression=info_comp,
        file_temperature=file_temperature(bit_energy),
        effective_temperature=effective_temperature(energy, info_comp),
        equilibrium_score=score,
    )
