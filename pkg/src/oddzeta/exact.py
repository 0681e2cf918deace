"""Exact rational arithmetic: Bernoulli numbers and tangent series coefficients.

All coefficients downstream are built from exact ``fractions.Fraction`` values,
so equality assertions are exact and no rounding enters before the final
fixed-point evaluation stage.
"""

from __future__ import annotations

import os
import tempfile
from fractions import Fraction
from math import comb, factorial

from .errors import ResourceLimitError

__all__ = [
    "CACHE_DIR_ENV",
    "BernoulliTable",
    "bernoulli",
    "default_table",
    "reset_default_table",
    "tangent_coeff",
]

#: Environment variable naming the directory that holds the on-disk Bernoulli cache.
CACHE_DIR_ENV = "ODDZETA_CACHE_DIR"
CACHE_FILENAME = "bernoulli.tsv"
DEFAULT_MAX_INDEX = 10_000


class BernoulliTable:
    """Memoized exact Bernoulli numbers B_0, B_1, ... with B_1 = -1/2.

    Entries are produced by the defining recurrence
    ``sum_{j=0}^{m} C(m+1, j) * B_j = 0`` solved for ``B_m``.  The table only
    ever grows (doubling amortization), and entries already stored are never
    recomputed, so repeated queries are deterministic.

    When ``cache_path`` is set, the table is seeded from that file and
    rewritten after every extension.  Format: one ``m<TAB>num/den`` line per
    index, in increasing order of ``m``.
    """

    def __init__(self, max_index: int = DEFAULT_MAX_INDEX, cache_path: str | None = None):
        if max_index < 0:
            raise ValueError("max_index must be >= 0")
        self.max_index = max_index
        self.cache_path = cache_path
        self._values: list[Fraction] = [Fraction(1)]
        if cache_path is not None:
            self._load_cache()

    def __len__(self) -> int:
        return len(self._values)

    def get(self, m: int) -> Fraction:
        if m < 0:
            raise ValueError("Bernoulli index must be >= 0")
        if m > self.max_index:
            raise ResourceLimitError(
                f"Bernoulli index {m} exceeds configured maximum {self.max_index}"
            )
        if m >= len(self._values):
            # double the populated range so long runs of queries amortize
            self._extend_to(min(max(m, 2 * (len(self._values) - 1)), self.max_index))
            if self.cache_path is not None:
                self._save_cache()
        return self._values[m]

    def _extend_to(self, m: int) -> None:
        vals = self._values
        for r in range(len(vals), m + 1):
            if r % 2 == 1 and r > 1:
                b = Fraction(0)
            else:
                acc = Fraction(0)
                for j in range(r):
                    if vals[j]:
                        acc += comb(r + 1, j) * vals[j]
                b = -acc / (r + 1)
                if r >= 2:
                    # B_{2n} alternates in sign starting with B_2 > 0
                    assert (b > 0) == (r % 4 == 2), f"sign anomaly at B_{r}"
            vals.append(b)

    def _load_cache(self) -> None:
        try:
            with open(self.cache_path, "r", encoding="ascii") as fh:
                lines = fh.read().splitlines()
        except OSError:
            return
        loaded: list[Fraction] = []
        try:
            for expect, line in enumerate(lines):
                idx_s, frac_s = line.split("\t")
                if int(idx_s) != expect:
                    break
                num_s, den_s = frac_s.split("/")
                value = Fraction(int(num_s), int(den_s))
                if value.denominator != int(den_s):
                    break  # not in canonical form; distrust the rest
                loaded.append(value)
        except (ValueError, ZeroDivisionError):
            pass  # keep whatever prefix parsed cleanly
        if loaded and loaded[0] == 1:
            self._values = loaded[: self.max_index + 1]

    def _save_cache(self) -> None:
        directory = os.path.dirname(self.cache_path) or "."
        os.makedirs(directory, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="ascii") as fh:
                for m, v in enumerate(self._values):
                    fh.write(f"{m}\t{v.numerator}/{v.denominator}\n")
            os.replace(tmp, self.cache_path)
        except OSError:
            try:
                os.unlink(tmp)
            except OSError:
                pass


_DEFAULT_TABLE: BernoulliTable | None = None


def default_table() -> BernoulliTable:
    """Shared process-wide table; honors the cache directory env variable."""
    global _DEFAULT_TABLE
    if _DEFAULT_TABLE is None:
        cache_dir = os.environ.get(CACHE_DIR_ENV)
        path = os.path.join(cache_dir, CACHE_FILENAME) if cache_dir else None
        _DEFAULT_TABLE = BernoulliTable(cache_path=path)
    return _DEFAULT_TABLE


def reset_default_table() -> None:
    """Drop the shared table (used by tests that toggle the cache env var)."""
    global _DEFAULT_TABLE
    _DEFAULT_TABLE = None


def bernoulli(m: int) -> Fraction:
    """Exact B_m (convention B_1 = -1/2), memoized in the shared table."""
    return default_table().get(m)


def tangent_coeff(n: int) -> Fraction:
    """Maclaurin coefficient c_n of tan, i.e. tan x = sum_{n>=1} c_n x^(2n-1).

    c_n = B_{2n} * (2^(2n) - 1) * 2^(2n) * (-1)^(n+1) / (2n)!; every c_n is
    positive because B_{2n} carries the sign (-1)^(n+1).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    two = 1 << (2 * n)
    value = bernoulli(2 * n) * (two - 1) * two * (-1) ** (n + 1)
    return value / factorial(2 * n)
