"""Sampling and relaxation dynamics for the two-level gas.

Microstates are explicit bit strings. Two samplers cover the two standard
ensembles: uniform over all C(L, p) arrangements at fixed occupation
(``sample_equilibrium``), and independent per-site occupation at a given
temperature (``sample_canonical``). ``h_function`` evaluates the entropy of
an arbitrary, possibly biased, distribution over microstates; it equals
ln(number of microstates) exactly when the distribution is uniform and is
strictly smaller otherwise.

``simulate_transfer`` prepares a gas in equilibrium with a hot bath and then
relaxes it in contact with a cold bath using single-site-flip Metropolis
dynamics: a uniformly chosen site flips down with certainty and flips up
with probability exp(-bit_energy / k_B T_cold). That rule satisfies detailed
balance at the cold temperature, so the gas relaxes to the equilibrium
occupation law. The dynamics are a modeling choice of this package; one RNG
draw for the site and one for the acceptance are consumed every step whether
or not the acceptance value is needed, which pins the exact trajectory for a
given seed.

All randomness comes from numpy's PCG64 generator seeded with the caller's
64-bit seed; identical seeds give bit-identical ledgers.

Bookkeeping (see ``SimLedger``): the run's ``total_entropy_change`` is the
entropy production of the simulated relaxation leg - gas entropy change plus
cold-bath gain. The hot bath's preparation debit (-initial energy / T_hot)
is reported alongside but not summed into the total: its gas-side
counterpart (the entropy the gas acquired while equilibrating hot) lies
outside the simulated leg, and adding the debit alone would misstate the
second-law balance. A full-transfer ledger in the convention of
:func:`infotherm.twolevel.transfer_entropy_delta`, evaluated at the measured
occupations, is also reported for comparison.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidDistributionError
from .quantities import K_B
from .twolevel import multiplicity_ln, transfer_entropy_delta

_PROB_SUM_TOLERANCE = 1e-12


@dataclass(frozen=True)
class Configuration:
    """One microstate: an immutable string of 0/1 site values."""

    bits: bytes

    def __post_init__(self):
        if not set(self.bits) <= {0, 1}:
            raise DomainError("configuration bits must all be 0 or 1")

    def __len__(self) -> int:
        return len(self.bits)

    def ones_count(self) -> int:
        return int(np.frombuffer(self.bits, dtype=np.uint8).sum()) if self.bits else 0

    def as_array(self) -> np.ndarray:
        arr = np.frombuffer(self.bits, dtype=np.uint8)
        arr.flags.writeable = False
        return arr


@dataclass(frozen=True)
class ConfigDistribution:
    """A probability distribution over distinct configurations."""

    support: tuple[tuple[Configuration, float], ...]

    def __post_init__(self):
        object.__setattr__(self, "support", tuple(self.support))
        seen = set()
        for config, prob in self.support:
            if prob < 0:
                raise InvalidDistributionError(f"negative probability {prob}")
            if config.bits in seen:
                raise InvalidDistributionError("support configurations must be distinct")
            seen.add(config.bits)
        total = math.fsum(prob for _, prob in self.support)
        if abs(total - 1.0) > _PROB_SUM_TOLERANCE:
            raise InvalidDistributionError(
                f"probabilities sum to {total!r}, not 1 within {_PROB_SUM_TOLERANCE}"
            )


@dataclass(frozen=True)
class SimLedger:
    """Full accounting of one hot->cold relaxation run.

    Energy conservation is exact: ``heat_to_cold`` is defined as
    ``energy_initial - energy_final`` (net accepted flips times the bit
    energy). ``total_entropy_change`` covers the simulated relaxation leg;
    ``entropy_hot_bath`` and ``entropy_full_transfer`` are reported for the
    broader bookkeeping pictures (module docstring).
    """

    seed: int
    steps: int
    length: int
    t_hot: float
    t_cold: float
    bit_energy: float
    p_initial: int
    p_final: int
    energy_initial: float
    energy_final: float
    heat_to_cold: float
    entropy_hot_bath: float
    entropy_cold_bath: float
    entropy_gas_change: float
    entropy_full_transfer: float | None
    total_entropy_change: float


def _site_probability(temperature: float, bit_energy: float) -> float:
    if not (temperature > 0):
        raise DomainError(f"temperature must be > 0, got {temperature}")
    if not (bit_energy > 0 and math.isfinite(bit_energy)):
        raise DomainError(f"bit_energy must be finite and > 0, got {bit_energy}")
    boltzmann = math.exp(-bit_energy / (K_B * temperature)) if math.isfinite(temperature) else 1.0
    return boltzmann / (1.0 + boltzmann)


def sample_equilibrium(length: int, ones: int, seed: int) -> Configuration:
    """Uniform draw over all C(length, ones) microstates.

    The placement is a Fisher-Yates shuffle (numpy's in-place ``shuffle``) of
    a string with the required ones count, so every arrangement is equally
    likely and the result is fixed by the seed.
    """
    if length < 1:
        raise DomainError(f"length must be >= 1, got {length}")
    if not 0 <= ones <= length:
        raise DomainError(f"ones count must be in [0, {length}], got {ones}")
    arr = np.zeros(length, dtype=np.uint8)
    arr[:ones] = 1
    np.random.default_rng(seed).shuffle(arr)
    return Configuration(arr.tobytes())


def sample_canonical(length: int, temperature: float, bit_energy: float, seed: int) -> Configuration:
    """Independent per-site draw at the given temperature.

    Each site is excited with probability 1 / (1 + exp(bit_energy / k_B T)),
    so the mean ones count matches the equilibrium occupation law.
    """
    if length < 1:
        raise DomainError(f"length must be >= 1, got {length}")
    prob = _site_probability(temperature, bit_energy)
    draws = np.random.default_rng(seed).random(length)
    return Configuration((draws < prob).astype(np.uint8).tobytes())


def h_function(dist: ConfigDistribution) -> float:
    """Entropy of a distribution over microstates: -sum p ln p, in nats.

    Equals ln(support size) iff the distribution is uniform; biased
    distributions always score lower.
    """
    return -math.fsum(p * math.log(p) for _, p in dist.support if p > 0.0)


def _relax_final_state(
    initial: np.ndarray, sites: np.ndarray, accepts: np.ndarray, length: int
) -> np.ndarray:
    """Final state of sequential single-site Metropolis, computed per site.

    Sites do not interact, so each site's trajectory depends only on its own
    hit sequence: a hit always clears an excited site and excites an empty
    site iff its acceptance draw passed. The fold below replays every site's
    hits in temporal order simultaneously and is bit-identical to the naive
    sequential loop.
    """
    steps = len(sites)
    state = initial.astype(bool)
    if steps == 0:
        return state
    order = np.argsort(sites, kind="stable")
    sorted_sites = sites[order]
    sorted_accepts = accepts[order]
    counts = np.bincount(sites, minlength=length)
    max_hits = int(counts.max())
    starts = np.zeros(length, dtype=np.int64)
    np.cumsum(counts[:-1], out=starts[1:])
    hit_index = np.arange(steps, dtype=np.int64) - starts[sorted_sites]

    accept_grid = np.zeros((length, max_hits), dtype=bool)
    hit_grid = np.zeros((length, max_hits), dtype=bool)
    accept_grid[sorted_sites, hit_index] = sorted_accepts
    hit_grid[sorted_sites, hit_index] = True

    for j in range(max_hits):
        hit = hit_grid[:, j]
        state = np.where(hit, accept_grid[:, j] & ~state, state)
    return state


def simulate_transfer(
    length: int,
    t_hot: float,
    t_cold: float,
    bit_energy: float,
    steps: int,
    seed: int,
) -> SimLedger:
    """Prepare a gas hot, relax it cold, and account for the entropy.

    For reliable relaxation use steps >= 100 * length. ``steps = 0`` returns
    the prepared state unchanged.
    """
    if not (t_cold > 0 and t_hot > t_cold):
        raise DomainError(
            f"need t_hot > t_cold > 0, got t_hot={t_hot}, t_cold={t_cold}"
        )
    if steps < 0:
        raise DomainError(f"steps must be >= 0, got {steps}")

    rng = np.random.default_rng(seed)
    prob_hot = _site_probability(t_hot, bit_energy)
    initial = rng.random(length) < prob_hot

    if steps:
        sites = rng.integers(0, length, size=steps)
        accepts = rng.random(steps) < math.exp(-bit_energy / (K_B * t_cold))
        final = _relax_final_state(initial, sites, accepts, length)
    else:
        final = initial

    p_initial = int(initial.sum())
    p_final = int(final.sum())
    energy_initial = p_initial * bit_energy
    energy_final = p_final * bit_energy
    heat_to_cold = energy_initial - energy_final

    entropy_hot_bath = -energy_initial / t_hot
    entropy_cold_bath = heat_to_cold / t_cold
    entropy_gas_change = K_B * (multiplicity_ln(length, p_final) - multiplicity_ln(length, p_initial))

    if 0 < p_initial < length and 0 < p_final < length:
        full_transfer = transfer_entropy_delta(
            length, p_initial, p_final, bit_energy
        ).delta_s_occupation
    else:
        full_transfer = None

    return SimLedger(
        seed=seed,
        steps=steps,
        length=length,
        t_hot=t_hot,
        t_cold=t_cold,
        bit_energy=bit_energy,
        p_initial=p_initial,
        p_final=p_final,
        energy_initial=energy_initial,
        energy_final=energy_final,
        heat_to_cold=heat_to_cold,
        entropy_hot_bath=entropy_hot_bath,
        entropy_cold_bath=entropy_cold_bath,
        entropy_gas_change=entropy_gas_change,
        entropy_full_transfer=full_transfer,
        total_entropy_change=entropy_cold_bath + entropy_gas_change,
    )


def run_ensemble(
    length: int,
    t_hot: float,
    t_cold: float,
    bit_energy: float,
    steps: int,
    seeds: "list[int] | range",
) -> list[SimLedger]:
    """Independent runs over the given seeds, in seed order."""
    return [
        simulate_transfer(length, t_hot, t_cold, bit_energy, steps, seed)
        for seed in sorted(seeds)
    ]


def ensemble_summary(ledgers: list[SimLedger]) -> dict:
    """Means and standard errors of the key per-run quantities."""
    if not ledgers:
        raise DomainError("cannot summarize an empty ensemble")
    totals = np.array([led.total_entropy_change for led in ledgers])
    p_finals = np.array([led.p_final for led in ledgers], dtype=float)
    heats = np.array([led.heat_to_cold for led in ledgers])
    n = len(ledgers)

    def se(values: np.ndarray) -> float:
        return float(values.std(ddof=1) / math.sqrt(n)) if n > 1 else math.inf

    return {
        "runs": n,
        "mean_total_entropy_change": float(totals.mean()),
        "se_total_entropy_change": se(totals),
        "mean_p_final": float(p_finals.mean()),
        "se_p_final": se(p_finals),
        "mean_heat_to_cold": float(heats.mean()),
        "se_heat_to_cold": se(heats),
    }
