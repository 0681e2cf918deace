"""Exact series coefficients for the pi/2-power expansions.

Two coefficient families are produced here, both exact rationals:

* ``d_coeff(n, k)``: the repeated-integration ladder obtained from the
  tangent Maclaurin coefficients, with base D_n(1) = c_n / (2^(2n-1) * 2n)
  and recurrence D_n(k) = D_n(k-1) / (2n + k - 1).
* ``e_coeff(n, k)``: the coefficients of (pi/2)^(2n+k-1) in the expansions
  of the alternating constants A_k (beta values for even k, eta values for
  odd k).  Odd-index columns form a closed recursion; even-index columns
  depend on the odd ones only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import ResourceLimitError

__all__ = [
    "CoefficientTable",
    "build_table",
    "d_coeff",
    "e_coeff",
    "f_ratio",
    "table_to_csv",
    "table_to_json",
]

MAX_TABLE_CELLS = 2_000_000


def _check_n_k(n: int, k: int) -> None:
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")


@lru_cache(maxsize=None)
def d_coeff(n: int, k: int) -> Fraction:
    """Ladder coefficient D_n(k) = c_n / (2^(2n-1) * (2n)(2n+1)...(2n+k-1))."""
    _check_n_k(n, k)
    from .exact import tangent_coeff

    if k == 1:
        return tangent_coeff(n) / ((1 << (2 * n - 1)) * 2 * n)
    return d_coeff(n, k - 1) / (2 * n + k - 1)


@lru_cache(maxsize=None)
def e_coeff(n: int, k: int) -> Fraction:
    """Series coefficient E_n(k) of (pi/2)^(2n+k-1) in the expansion of A_k."""
    _check_n_k(n, k)
    if k == 1:
        return d_coeff(n, 1)
    if k % 2 == 0:
        j = k // 2
        odd_part = sum(
            (-1) ** r * e_coeff(n, 2 * r + 1) / factorial(2 * (j - r) - 1)
            for r in range(j)
        )
        return Fraction((-1) ** j, 2) * d_coeff(n, k) + (-1) ** (j + 1) * odd_part
    j = (k - 1) // 2
    odd_part = sum(
        (-1) ** r * e_coeff(n, 2 * r + 1) / factorial(2 * (j - r)) for r in range(j)
    )
    numerator = Fraction((-1) ** j, 2) * d_coeff(n, k) + (-1) ** (j + 1) * odd_part
    return numerator / (1 - Fraction(1, 1 << k))


def f_ratio(n: int, k: int) -> Fraction:
    """Normalized coefficient F_n(k) = E_n(k) / D_n(1); F_n(1) = 1."""
    _check_n_k(n, k)
    return e_coeff(n, k) / d_coeff(n, 1)


@dataclass(frozen=True)
class CoefficientTable:
    """Dense immutable grid of E_n(k), 1 <= k <= k_max, 1 <= n <= n_max.

    ``entries[k-1][n-1]`` holds E_n(k); ``d_base[n-1]`` holds D_n(1).
    """

    k_max: int
    n_max: int
    entries: tuple[tuple[Fraction, ...], ...]
    d_base: tuple[Fraction, ...]

    def e(self, n: int, k: int) -> Fraction:
        _check_n_k(n, k)
        if k > self.k_max or n > self.n_max:
            raise IndexError(f"(n={n}, k={k}) outside table ({self.n_max}, {self.k_max})")
        return self.entries[k - 1][n - 1]

    def d1(self, n: int) -> Fraction:
        if not 1 <= n <= self.n_max:
            raise IndexError(f"n={n} outside table (n_max={self.n_max})")
        return self.d_base[n - 1]


def build_table(k_max: int, n_max: int) -> CoefficientTable:
    """Materialize E_n(k) for the full grid; identical inputs give identical tables.

    Odd columns are computed in increasing k first (they close over themselves),
    then even columns, although the memoized point recursion makes any
    evaluation order produce the same exact rationals.
    """
    _check_n_k(n_max, k_max)
    if k_max * n_max > MAX_TABLE_CELLS:
        raise ResourceLimitError(
            f"table of {k_max}x{n_max} cells exceeds ceiling {MAX_TABLE_CELLS}"
        )
    for k in range(1, k_max + 1, 2):  # warm the closed odd-column recursion
        for n in range(1, n_max + 1):
            e_coeff(n, k)
    entries = tuple(
        tuple(e_coeff(n, k) for n in range(1, n_max + 1)) for k in range(1, k_max + 1)
    )
    d_base = tuple(d_coeff(n, 1) for n in range(1, n_max + 1))
    return CoefficientTable(k_max=k_max, n_max=n_max, entries=entries, d_base=d_base)


def table_to_csv(table: CoefficientTable) -> str:
    """CSV dump with header ``k,n,numerator,denominator``, k-major order."""
    lines = ["k,n,numerator,denominator"]
    for k in range(1, table.k_max + 1):
        for n in range(1, table.n_max + 1):
            v = table.e(n, k)
            lines.append(f"{k},{n},{v.numerator},{v.denominator}")
    return "\n".join(lines) + "\n"


def table_to_json(table: CoefficientTable) -> str:
    """JSON array of ``{k, n, value: "num/den"}`` objects, k-major order."""
    rows = [
        {
            "k": k,
            "n": n,
            "value": f"{table.e(n, k).numerator}/{table.e(n, k).denominator}",
        }
        for k in range(1, table.k_max + 1)
        for n in range(1, table.n_max + 1)
    ]
    return json.dumps(rows, indent=None, separators=(",", ":"))
