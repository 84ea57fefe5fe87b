"""Physical constants and information-unit conversions.

Conventions used throughout the package:

- Information and statistical entropy are handled internally in *nats*
  (natural-log units). Bits and SI entropy (J/K) appear only at API
  boundaries and in CLI output, so every ln 2 factor in a formula is
  explicit in the code that implements it.
- ``K_B`` is the exact 2019 SI value of the Boltzmann constant.
- This module is the single source for these constants; other modules must
  import them rather than re-typing the literals (convention, enforced by
  review). Test code is exempt: independent oracles deliberately restate
  values.

Unit relations: 1 bit = ln 2 nats, and an amount of information I (nats)
corresponds to an entropy k_B * I in J/K.
"""

import math

from .errors import InvalidQuantityError

#: Boltzmann constant, J/K (exact since the 2019 SI redefinition).
K_B = 1.380649e-23

#: Speed of light in vacuum, m/s (exact).
C_LIGHT = 2.99792458e8

#: ln 2, the nat value of one bit.
LN2 = 0.6931471805599453

#: Units accepted by :func:`convert_information`.
INFORMATION_UNITS = ("nats", "bits", "J/K")


def _check_amount(nats: float) -> float:
    if not math.isfinite(nats):
        raise InvalidQuantityError(f"information amount must be finite, got {nats!r}")
    if nats < 0:
        raise InvalidQuantityError(f"information amount must be >= 0, got {nats!r}")
    return nats


def convert_information(nats: float, target: str) -> float:
    """Convert an information amount given in nats to ``target`` units.

    ``target`` is one of ``"nats"``, ``"bits"`` or ``"J/K"``. nats -> bits
    divides by ln 2; nats -> J/K multiplies by k_B.
    """
    _check_amount(nats)
    if target == "nats":
        return nats
    if target == "bits":
        return nats / LN2
    if target == "J/K":
        return nats * K_B
    raise ValueError(f"unknown information unit {target!r}; expected one of {INFORMATION_UNITS}")


def bits_to_nats(bits: float) -> float:
    """Inverse of the nats -> bits conversion."""
    _check_amount(bits)
    return bits * LN2


def entropy_si_to_nats(entropy_si: float) -> float:
    """Inverse of the nats -> J/K conversion."""
    _check_amount(entropy_si)
    return entropy_si / K_B
