"""Named constants assembled from the pi/2-power series engine.

The alternating sums A_k = sum_n E_n(k) (pi/2)^(2n+k-1) give beta(2k) for
even index and eta(2k+1) for odd index; zeta at odd arguments follows from
eta via the exact factor 2^(2k)/(2^(2k)-1), and zeta at even arguments has
the classical Bernoulli closed form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .coeffs import CoefficientTable, build_table
from .errors import UnknownConstantError
from .exact import bernoulli
from .highprec import FixedDecimal, GUARD_DIGITS, compute_pi, estimate_terms, sum_series

__all__ = [
    "ConstantValue",
    "alt_harmonic",
    "apery",
    "beta_even",
    "catalan",
    "compute_constant",
    "eta_odd",
    "parse_constant_name",
    "series_table",
    "valid_name_summary",
    "zeta_even_closed",
    "zeta_odd",
]

SERIES_METHOD = "pi-power-series"
CLOSED_FORM_METHOD = "closed-form"


@dataclass(frozen=True)
class ConstantValue:
    """A computed constant with its provenance.

    ``k`` and ``terms_used`` describe the series evaluation; both are None
    for closed-form values.
    """

    name: str
    value: FixedDecimal
    method: str
    k: int | None = None
    terms_used: int | None = None


@lru_cache(maxsize=32)
def series_table(k: int, digits: int) -> CoefficientTable:
    """Coefficient table sized for summing A_k to ``digits`` digits."""
    return build_table(k, estimate_terms(digits, k))


def _series_constant(name: str, k: int, digits: int) -> ConstantValue:
    result = sum_series(series_table(k, digits), k, digits)
    return ConstantValue(
        name=name, value=result.value, method=SERIES_METHOD, k=k, terms_used=result.terms_used
    )


def beta_even(k: int, digits: int) -> ConstantValue:
    """beta(2k) = 1/1^2k - 1/3^2k + 1/5^2k - ... = A_2k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return _series_constant(f"beta_even({k})", 2 * k, digits)


def eta_odd(k: int, digits: int) -> ConstantValue:
    """eta(2k+1) = 1/1^(2k+1) - 1/2^(2k+1) + ... = A_(2k+1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return _series_constant(f"eta_odd({k})", 2 * k + 1, digits)


def alt_harmonic(digits: int) -> ConstantValue:
    """The alternating harmonic series A_1 (equal to ln 2) via the pi/2 series.

    This is the sharpest single check of the whole coefficient ladder, since
    the target value is universally known.
    """
    return _series_constant("alt_harmonic", 1, digits)


def zeta_odd(k: int, digits: int) -> ConstantValue:
    """zeta(2k+1) = A_(2k+1) / (1 - 2^(-2k)).

    The divisor is applied as the exact rational 2^(2k)/(2^(2k)-1) on the
    working-precision sum, before the final rounding step.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    inner_digits = digits + 2
    result = sum_series(series_table(2 * k + 1, inner_digits), 2 * k + 1, inner_digits)
    factor = Fraction(1 << (2 * k), (1 << (2 * k)) - 1)
    value = result.value.mul_fraction(factor).rescale(digits)
    return ConstantValue(
        name=f"zeta_odd({k})",
        value=value,
        method=SERIES_METHOD,
        k=2 * k + 1,
        terms_used=result.terms_used,
    )


def catalan(digits: int) -> ConstantValue:
    """Catalan's constant, beta(2) = A_2."""
    inner = beta_even(1, digits)
    return ConstantValue(
        name="catalan", value=inner.value, method=inner.method, k=inner.k, terms_used=inner.terms_used
    )


def apery(digits: int) -> ConstantValue:
    """Apery's constant zeta(3) = A_3 / (1 - 2^(-2))."""
    inner = zeta_odd(1, digits)
    return ConstantValue(
        name="apery", value=inner.value, method=inner.method, k=inner.k, terms_used=inner.terms_used
    )


def zeta_even_closed(n: int, digits: int) -> ConstantValue:
    """zeta(2n) = B_2n/2 * (2 pi)^(2n) * (-1)^(n+1) / (2n)!.

    Computed as an exact rational multiplier times pi^(2n), rounded once.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    multiplier = bernoulli(2 * n) * (-1) ** (n + 1) * (1 << (2 * n - 1))
    rational = Fraction(multiplier, factorial(2 * n))
    work = digits + GUARD_DIGITS
    value = compute_pi(work).pow_int(2 * n).mul_fraction(rational).rescale(digits)
    return ConstantValue(name=f"zeta_even({n})", value=value, method=CLOSED_FORM_METHOD)


_PLAIN_NAMES = {
    "catalan": catalan,
    "apery": apery,
    "alt_harmonic": alt_harmonic,
}

_PARAMETRIC_NAMES = {
    "beta_even": beta_even,
    "eta_odd": eta_odd,
    "zeta_odd": zeta_odd,
    "zeta_even": zeta_even_closed,
}

_NAME_RE = re.compile(r"^([a-z_]+)\((\d+)\)$")


def valid_name_summary() -> str:
    plain = sorted(_PLAIN_NAMES)
    parametric = sorted(f"{base}(k)" for base in _PARAMETRIC_NAMES)
    return ", ".join(plain + parametric)


def parse_constant_name(name: str) -> tuple[str, int | None]:
    """Split an identifier like ``zeta_odd(2)`` into base and parameter.

    Raises :class:`UnknownConstantError` (listing the valid identifier set)
    for anything outside the closed name set.
    """
    if name in _PLAIN_NAMES:
        return name, None
    match = _NAME_RE.match(name)
    if match and match.group(1) in _PARAMETRIC_NAMES:
        param = int(match.group(2))
        if param >= 1:
            return match.group(1), param
    raise UnknownConstantError(
        f"unknown constant {name!r}; valid identifiers: {valid_name_summary()}"
    )


def compute_constant(name: str, digits: int) -> ConstantValue:
    """Dispatch a constant identifier to its computation at ``digits`` digits."""
    base, param = parse_constant_name(name)
    if param is None:
        return _PLAIN_NAMES[base](digits)
    return _PARAMETRIC_NAMES[base](param, digits)
