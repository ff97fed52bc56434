"""Closed-form bound-state energies of the relativistic oscillator.

Two square-root laws coexist on purpose.  energy_combined implements the
derived spectrum Ebar_n = sqrt(1 + 2 b (n + 1/2)), which the independent
finite-difference oracle confirms.  table_row carries the alternative
sqrt(1 + 2 b (n + 1)) law that the tabulated reference values follow; it
is exposed (CLI formula "table") so the disagreement stays visible instead
of being silently patched either way.
"""

import math
from dataclasses import dataclass
from typing import Iterable, List

from .errors import EmptyInput, NonPositiveParameter
from .params import DimensionlessEnergy

# plain machine integers; 1 + 2 b (n + 1/2) stays in double range throughout
MAX_LEVEL = 10**6

FORMULA_CHOICES = ("eq21", "table")


def _check_level(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise NonPositiveParameter(f"level index must be an integer, got {n!r}")
    if n < 0 or n > MAX_LEVEL:
        raise NonPositiveParameter(f"level index must be in [0, {MAX_LEVEL}], got {n}")


def _check_b(b: float) -> None:
    if not (isinstance(b, (int, float)) and math.isfinite(b) and b > 0):
        raise NonPositiveParameter(f"b must be positive and finite, got {b!r}")


@dataclass(frozen=True)
class EnergyLevel:
    """One bound level: combined index, parity, energy, binding energy."""

    n: int
    parity: str
    e_dimensionless: DimensionlessEnergy
    binding: float


@dataclass(frozen=True)
class SpectrumRow:
    """One (n, b) table entry: relativistic and first-order columns."""

    n: int
    b: float
    e_rel: float
    e_nr_plus_one: float


def energy_combined(n: int, b: float) -> DimensionlessEnergy:
    """Ebar_n = sqrt(1 + 2 b (n + 1/2)); even and odd states interleaved."""
    _check_level(n)
    _check_b(b)
    return DimensionlessEnergy(math.sqrt(1.0 + 2.0 * b * (n + 0.5)))


def energy_even(n: int, b: float) -> DimensionlessEnergy:
    """n-th even state, sqrt(1 + 2 b (2n + 1/2)); equals energy_combined(2n, b)."""
    _check_level(n)
    return energy_combined(2 * n, b)


def energy_odd(n: int, b: float) -> DimensionlessEnergy:
    """n-th odd state, sqrt(1 + 2 b (2n + 3/2)); equals energy_combined(2n+1, b)."""
    _check_level(n)
    return energy_combined(2 * n + 1, b)


def energy_second_order(n: int, b: float) -> float:
    """Expansion 1 + b (n + 1/2) - b^2 (n + 1/2)^2 / 2 of the combined law."""
    _check_level(n)
    _check_b(b)
    s = n + 0.5
    return 1.0 + b * s - 0.5 * (b * s) ** 2


def binding_energy(n: int, b: float) -> float:
    """Binding energy Ebar_n - 1 in units of m c^2.

    Dividing by b counts oscillator quanta: the ratio tends to n + 1/2 as
    b -> 0, the non-relativistic level.
    """
    return energy_combined(n, b).value - 1.0


def level(n: int, b: float) -> EnergyLevel:
    """EnergyLevel for combined index n (even parity iff n is even)."""
    e = energy_combined(n, b)
    return EnergyLevel(n=n, parity="even" if n % 2 == 0 else "odd",
                       e_dimensionless=e, binding=e.value - 1.0)


def table_row(n: int, b: float) -> SpectrumRow:
    """Row of the reference table.

    e_rel follows sqrt(1 + 2 b (n + 1)), the law the tabulated values
    encode, which differs from energy_combined's (n + 1/2) law.
    e_nr_plus_one is 1 + b (n + 1/2) exactly.
    """
    _check_level(n)
    _check_b(b)
    return SpectrumRow(n=n, b=float(b),
                       e_rel=math.sqrt(1.0 + 2.0 * b * (n + 1.0)),
                       e_nr_plus_one=1.0 + b * (n + 0.5))


def generate_table(b_values: Iterable[float], n_values: Iterable[int],
                   formula: str = "eq21") -> List[SpectrumRow]:
    """Spectrum rows for every (n, b) pair, n-major then b-minor.

    formula selects what fills e_rel: "eq21" the derived (n + 1/2) law,
    "table" the (n + 1) law of table_row.
    """
    if formula not in FORMULA_CHOICES:
        raise ValueError(f"formula must be one of {FORMULA_CHOICES}, got {formula!r}")
    b_list = list(b_values)
    n_list = list(n_values)
    if not b_list or not n_list:
        raise EmptyInput("b_values and n_values must both be non-empty")
    rows = []
    for n in n_list:
        for b in b_list:
            row = table_row(n, b)
            if formula == "eq21":
                row = SpectrumRow(n=row.n, b=row.b,
                                  e_rel=energy_combined(n, b).value,
                                  e_nr_plus_one=row.e_nr_plus_one)
            rows.append(row)
    return rows
