"""Physical parameters of the one-dimensional relativistic oscillator.

Every other module takes its dimensional inputs from OscillatorParams.
The default unit system is natural units (hbar = c = 1 with unit mass);
user-facing energies are dimensionless, Ebar = E / (m c^2).
"""

import math
from dataclasses import dataclass

from .errors import NonPositiveParameter


@dataclass(frozen=True)
class OscillatorParams:
    """Oscillator constants m, omega, hbar, c and their derived ratios.

    lam = m*omega/hbar sets the Gaussian width of the stationary states;
    b = hbar*omega/(m c^2) measures how relativistic the oscillator is.
    """

    mass: float
    omega: float
    hbar: float = 1.0
    c: float = 1.0

    def __post_init__(self):
        for name in ("mass", "omega", "hbar", "c"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise NonPositiveParameter(
                    f"{name} must be positive and finite, got {v!r}")

    @property
    def lam(self) -> float:
        """Inverse squared width m*omega/hbar of the ground state."""
        return self.mass * self.omega / self.hbar

    @property
    def b(self) -> float:
        """Dimensionless strength parameter hbar*omega/(m c^2)."""
        return self.hbar * self.omega / (self.mass * self.c**2)


@dataclass(frozen=True)
class DimensionlessEnergy:
    """Total energy in units of m c^2; at least 1 for any bound state."""

    value: float

    def __post_init__(self):
        if not (math.isfinite(self.value) and self.value >= 1.0):
            raise ValueError(
                f"bound-state energy must be >= 1 in units of m c^2, got {self.value!r}")

    def __float__(self) -> float:
        return self.value


def natural_units() -> OscillatorParams:
    """Params with m = omega = hbar = c = 1, so lam = b = 1."""
    return OscillatorParams(mass=1.0, omega=1.0, hbar=1.0, c=1.0)


def from_b(b: float) -> OscillatorParams:
    """Params with unit mass, hbar and c and omega = b, so that .b == b exactly."""
    if not (isinstance(b, (int, float)) and math.isfinite(b) and b > 0):
        raise NonPositiveParameter(f"b must be positive and finite, got {b!r}")
    return OscillatorParams(mass=1.0, omega=float(b), hbar=1.0, c=1.0)


def k_squared(params: OscillatorParams, energy: float) -> float:
    """Squared wavenumber (E^2 - m^2 c^4) / (c^2 hbar^2).

    Negative below the rest energy; zero exactly at E = m c^2.
    """
    m2c4 = (params.mass * params.c**2) ** 2
    return (energy**2 - m2c4) / (params.c**2 * params.hbar**2)
