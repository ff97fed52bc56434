"""Normalized stationary states psi_n(x) and quadrature checks.

psi_n(x) = N_n exp(-lam x^2 / 2) H_n(sqrt(lam) x) with the constant
N_n = sqrt( sqrt(lam/pi) / (2^n n!) ).  Past n = 30 the product N_n H_n is
carried through a normalised recurrence so the factorially growing
polynomial and the shrinking constant never appear separately.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import GridMismatch, InvalidGrid, NonPositiveParameter
from .specfun import hermite, kummer_m

MAX_FACTORIAL_LEVEL = 170
# direct N_n * H_n product is safe up to here; beyond it the normalised
# recurrence avoids overflow of the separate factors
DIRECT_EVAL_MAX_N = 30


@dataclass(frozen=True)
class GridSpec:
    """Uniform grid with an odd number of points, straddling the origin.

    Odd counts keep x = 0 on the grid and make the point count usable for
    composite Simpson quadrature.  Symmetric grids (x_min = -x_max) are the
    default construction; their nodes are built from signed integer offsets
    so that x = 0 is exact and x_{-i} = -x_i bit for bit.
    """

    x_min: float
    x_max: float
    points: int

    def __post_init__(self):
        if not (math.isfinite(self.x_min) and math.isfinite(self.x_max)):
            raise InvalidGrid("grid bounds must be finite")
        if not (self.x_min < 0.0 < self.x_max):
            raise InvalidGrid(
                f"grid must straddle the origin, got [{self.x_min!r}, {self.x_max!r}]")
        if not isinstance(self.points, int) or self.points < 3 or self.points % 2 == 0:
            raise InvalidGrid(f"points must be an odd integer >= 3, got {self.points!r}")

    @classmethod
    def symmetric(cls, extent: float, points: int) -> "GridSpec":
        return cls(x_min=-float(extent), x_max=float(extent), points=points)

    @property
    def spacing(self) -> float:
        return (self.x_max - self.x_min) / (self.points - 1)

    @property
    def is_symmetric(self) -> bool:
        return self.x_min == -self.x_max

    def nodes(self) -> np.ndarray:
        if self.is_symmetric:
            offsets = np.arange(self.points) - (self.points - 1) // 2
            return offsets * self.spacing
        x = self.x_min + np.arange(self.points) * self.spacing
        x[-1] = self.x_max
        return x


@dataclass(frozen=True, eq=False)
class SampledWavefunction:
    """psi_n sampled at every node of a grid."""

    n: int
    grid: GridSpec
    values: np.ndarray
    lam: float


def default_extent(n: int, lam: float) -> float:
    """Twice the classical turning point of level n plus Gaussian tail padding."""
    return 2.0 * math.sqrt((2.0 * n + 1.0) / lam) + 5.0 / math.sqrt(lam)


def _check_lam(lam: float) -> None:
    if not (isinstance(lam, (int, float)) and math.isfinite(lam) and lam > 0):
        raise NonPositiveParameter(f"lam must be positive and finite, got {lam!r}")


def normalization_constant(n: int, lam: float) -> float:
    """N_n = sqrt( sqrt(lam/pi) / (2^n n!) ), evaluated in log space."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > MAX_FACTORIAL_LEVEL:
        raise OverflowError(
            f"n = {n} is beyond the factorial range (n <= {MAX_FACTORIAL_LEVEL})")
    _check_lam(lam)
    return math.exp(0.25 * math.log(lam / math.pi)
                    - 0.5 * (n * math.log(2.0) + math.lgamma(n + 1.0)))


def _weighted_hermite(n: int, xi: float) -> float:
    """pi^(-1/4) H_n(xi) exp(-xi^2/2) / sqrt(2^n n!) by a stable recurrence."""
    phi_prev = math.pi ** -0.25 * math.exp(-0.5 * xi * xi)
    if n == 0:
        return phi_prev
    phi = math.sqrt(2.0) * xi * phi_prev
    for k in range(1, n):
        phi_prev, phi = phi, (math.sqrt(2.0 / (k + 1.0)) * xi * phi
                              - math.sqrt(k / (k + 1.0)) * phi_prev)
    return phi


def psi(n: int, x: float, lam: float) -> float:
    """Value of the normalised stationary state psi_n at x."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    _check_lam(lam)
    xi = math.sqrt(lam) * x
    if n <= DIRECT_EVAL_MAX_N:
        return normalization_constant(n, lam) * math.exp(-0.5 * lam * x * x) * hermite(n, xi)
    return lam ** 0.25 * _weighted_hermite(n, xi)


def psi_general(x: float, a: float, coeff_even: float, coeff_odd: float,
                lam: float) -> float:
    """Even/odd superposition built directly from the hypergeometric kernel.

    coeff_even * exp(-lam x^2/2) M(a, 1/2, lam x^2)
      + coeff_odd * exp(-lam x^2/2) sqrt(lam) x M(a + 1/2, 3/2, lam x^2)
    """
    _check_lam(lam)
    y = lam * x * x
    gauss = math.exp(-0.5 * y)
    even_part = coeff_even * kummer_m(a, 0.5, y) if coeff_even != 0.0 else 0.0
    odd_part = (coeff_odd * math.sqrt(lam) * x * kummer_m(a + 0.5, 1.5, y)
                if coeff_odd != 0.0 else 0.0)
    return gauss * (even_part + odd_part)


def sample(n: int, grid: GridSpec, lam: float) -> SampledWavefunction:
    """psi_n evaluated at every grid node."""
    values = np.array([psi(n, float(x), lam) for x in grid.nodes()])
    return SampledWavefunction(n=n, grid=grid, values=values, lam=lam)


def inner_product(f: SampledWavefunction, g: SampledWavefunction) -> float:
    """Composite-Simpson quadrature of f*g over the shared grid."""
    if f.grid != g.grid:
        raise GridMismatch("sampled functions live on different grids")
    w = np.ones(f.grid.points)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return float(f.grid.spacing / 3.0 * np.dot(w, f.values * g.values))
