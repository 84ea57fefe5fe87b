"""Inequality toolkit: Carnot efficiency, Clausius checks, computing bound.

The Clausius checker is a single bookkeeping engine for

    dS >= sum_i dQ_i / T_i + k_B * dI

with signed heat terms (positive into the books, negative out). With one
positive heat term and dI = 0 this is the classical inequality; with a
(+Q, T_cold), (-Q, T_hot) pair it is the two-bath form; with heat terms and
an information term together it is the generalized form, and with no heat
terms at all it reduces to dS >= k_B dI. The verdict tolerance is relative,
scaled to the largest term, because ledgers here span k_B-sized and
macroscopic entropies alike.
"""

import math
from dataclasses import dataclass

from .errors import DomainError, InvalidQuantityError
from .quantities import K_B, LN2

VERDICT_SATISFIED = "satisfied"
VERDICT_VIOLATED = "violated"
VERDICT_EQUALITY = "equality"

_RELATIVE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class EntropyLedger:
    """A checked Clausius inequality.

    ``slack`` is delta_s minus the heat and information terms; the verdict is
    "equality" when |slack| <= tolerance, "violated" when slack < -tolerance,
    and "satisfied" otherwise.
    """

    delta_s: float  # J/K
    heat_terms: tuple[tuple[float, float], ...]  # (delta_Q in J, T in K) pairs
    info_term: float  # nats
    slack: float  # J/K
    tolerance: float  # J/K
    verdict: str


def carnot_efficiency(t_hot: float, t_cold: float) -> float:
    """Maximum work fraction extractable between two baths: 1 - T_cold/T_hot."""
    if not (t_cold > 0 and math.isfinite(t_cold)):
        raise DomainError(f"t_cold must be finite and > 0, got {t_cold}")
    if not t_hot > t_cold:
        raise DomainError(
            f"no extractable work: t_hot ({t_hot}) must exceed t_cold ({t_cold})"
        )
    return 1.0 - t_cold / t_hot


def clausius_check(
    delta_s: float,
    heat_terms: list[tuple[float, float]] | tuple[tuple[float, float], ...] = (),
    info_term: float = 0.0,
    tolerance: float | None = None,
) -> EntropyLedger:
    """Populate and judge an entropy ledger (see module docstring).

    ``tolerance`` defaults to 1e-12 times the largest of |delta_s|,
    sum |dQ/T| and k_B * info_term.
    """
    if not math.isfinite(delta_s):
        raise DomainError(f"delta_s must be finite, got {delta_s}")
    if info_term < 0 or not math.isfinite(info_term):
        raise InvalidQuantityError(f"info_term must be finite and >= 0, got {info_term}")
    terms = []
    for heat, temp in heat_terms:
        if not (temp > 0 and math.isfinite(temp)):
            raise DomainError(f"every bath temperature must be finite and > 0, got {temp}")
        if not math.isfinite(heat):
            raise DomainError(f"every heat term must be finite, got {heat}")
        terms.append((float(heat), float(temp)))

    heat_over_t = math.fsum(heat / temp for heat, temp in terms)
    info_si = K_B * info_term
    slack = delta_s - heat_over_t - info_si
    if tolerance is None:
        scale = max(abs(delta_s), math.fsum(abs(h) / t for h, t in terms), info_si)
        tolerance = _RELATIVE_TOLERANCE * scale
    elif tolerance < 0:
        raise DomainError(f"tolerance must be >= 0, got {tolerance}")

    if abs(slack) <= tolerance:
        verdict = VERDICT_EQUALITY
    elif slack < -tolerance:
        verdict = VERDICT_VIOLATED
    else:
        verdict = VERDICT_SATISFIED
    return EntropyLedger(
        delta_s=delta_s,
        heat_terms=tuple(terms),
        info_term=info_term,
        slack=slack,
        tolerance=tolerance,
        verdict=verdict,
    )


def max_computing_rate(power: float, noise_temperature: float, margin: float = 10.0) -> float:
    """Upper bound on logical operations per second of a physical device.

    Each elementary act must dissipate at least k_B ln 2 times the operating
    temperature, and the operating temperature must clear the ambient noise
    temperature by ``margin``, so f <= P / (margin k_B ln 2 T_n).
    """
    if not (power > 0 and math.isfinite(power)):
        raise DomainError(f"power must be finite and > 0, got {power}")
    if not (noise_temperature > 0 and math.isfinite(noise_temperature)):
        raise DomainError(f"noise_temperature must be finite and > 0, got {noise_temperature}")
    if not margin >= 1:
        raise DomainError(f"margin must be >= 1, got {margin}")
    return power / (margin * K_B * LN2 * noise_temperature)
