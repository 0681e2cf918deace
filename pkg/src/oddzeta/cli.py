"""Command-line interface: compute, verify, export, and diagnose.

Subcommands:

* ``constant <name> --digits D``  print a constant, correctly rounded
* ``coeffs --k K --n N``          dump exact series coefficients (csv/json)
* ``verify [--name X] --digits D`` compare against the independent oracle
* ``ratio --k K --n N``           term-ratio convergence diagnostic
* ``identity --id S1|S2 ...``     Fourier-identity residual

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
limit.  Data goes to stdout, diagnostics to stderr; plain and csv output is
byte-deterministic, timing appears only in the JSON ``elapsed_ms`` field.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import identities, oracle
from .coeffs import build_table, table_to_csv, table_to_json
from .constants import compute_constant
from .errors import (
    InsufficientTableError,
    ResourceLimitError,
    TailRatioError,
    UnknownConstantError,
)
from .exact import CACHE_DIR_ENV, reset_default_table
from .highprec import term_ratio_sequence

__all__ = ["CliConfig", "build_parser", "main", "run"]

JSON_SCHEMA_VERSION = 1
DIGITS_CEILING = 1000

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


@dataclass(frozen=True)
class CliConfig:
    """Validated invocation parameters, one instance per run."""

    command: str
    digits: int = 30
    k: int | None = None
    n_max: int | None = None
    theta: str | None = None
    fmt: str = "plain"
    cache_dir: str | None = None
    name: str | None = None
    identity_id: str | None = None
    fourier_terms: int | None = None
    series_terms: int | None = None

    def __post_init__(self):
        if not 1 <= self.digits <= DIGITS_CEILING:
            raise ResourceLimitError(
                f"digits must lie in 1..{DIGITS_CEILING}, got {self.digits}"
            )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oddzeta",
        description=(
            "Alternating zeta-family constants (Catalan, Apery, odd zeta values) "
            "from exact-rational series in powers of pi/2, with oracle verification."
        ),
    )
    parser.add_argument("--cache-dir", default=None, help="directory for the Bernoulli cache")
    sub = parser.add_subparsers(dest="command", required=True)

    p_const = sub.add_parser("constant", help="print one constant")
    p_const.add_argument("name")
    p_const.add_argument("--digits", type=int, default=30)
    p_const.add_argument("--format", dest="fmt", choices=("plain", "csv", "json"), default="plain")

    p_coeffs = sub.add_parser("coeffs", help="dump exact coefficients E_n(k)")
    p_coeffs.add_argument("--k", type=int, required=True, help="largest series index k")
    p_coeffs.add_argument("--n", type=int, required=True, help="largest row index n")
    p_coeffs.add_argument("--format", dest="fmt", choices=("csv", "json", "plain"), default="csv")

    p_verify = sub.add_parser("verify", help="compare constants against the oracle")
    p_verify.add_argument("--name", default=None, help="single constant (default: battery)")
    p_verify.add_argument("--digits", type=int, default=30)
    p_verify.add_argument("--format", dest="fmt", choices=("plain", "csv", "json"), default="plain")

    p_ratio = sub.add_parser("ratio", help="term-ratio diagnostic |E_(n+1)/E_n| (pi/2)^2")
    p_ratio.add_argument("--k", type=int, required=True)
    p_ratio.add_argument("--n", type=int, required=True, help="number of ratios to print")
    p_ratio.add_argument("--format", dest="fmt", choices=("plain", "csv", "json"), default="plain")

    p_ident = sub.add_parser("identity", help="Fourier-identity residual")
    p_ident.add_argument("--id", dest="identity_id", choices=identities.IDENTITY_TAGS, required=True)
    p_ident.add_argument("--k", type=int, required=True)
    p_ident.add_argument("--theta", required=True, help='angle in (0, pi); accepts e.g. "1.0" or "pi/2"')
    p_ident.add_argument("--terms", dest="fourier_terms", type=int, default=10_000)
    p_ident.add_argument("--series-terms", dest="series_terms", type=int, default=80)
    p_ident.add_argument("--digits", type=int, default=30)
    p_ident.add_argument("--format", dest="fmt", choices=("plain", "csv", "json"), default="plain")
    return parser


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    return CliConfig(
        command=args.command,
        digits=getattr(args, "digits", 30),
        k=getattr(args, "k", None),
        n_max=getattr(args, "n", None),
        theta=getattr(args, "theta", None),
        fmt=getattr(args, "fmt", "plain"),
        cache_dir=args.cache_dir,
        name=getattr(args, "name", None),
        identity_id=getattr(args, "identity_id", None),
        fourier_terms=getattr(args, "fourier_terms", None),
        series_terms=getattr(args, "series_terms", None),
    )


def _json_doc(command: str, **fields) -> str:
    doc = {"schema": JSON_SCHEMA_VERSION, "command": command}
    doc.update(fields)
    return json.dumps(doc, separators=(",", ":"))


def _cmd_constant(cfg: CliConfig, out) -> int:
    value = compute_constant(cfg.name, cfg.digits)
    if cfg.fmt == "plain":
        print(value.value.to_decimal(), file=out)
    elif cfg.fmt == "csv":
        print("name,digits,value", file=out)
        print(f"{value.name},{cfg.digits},{value.value.to_decimal()}", file=out)
    else:
        print(
            _json_doc(
                "constant",
                name=value.name,
                digits=cfg.digits,
                value=value.value.to_decimal(),
                method=value.method,
                k=value.k,
                terms_used=value.terms_used,
            ),
            file=out,
        )
    return EXIT_OK


def _cmd_coeffs(cfg: CliConfig, out) -> int:
    table = build_table(cfg.k, cfg.n_max)
    if cfg.fmt == "json":
        print(_json_doc("coeffs", entries=json.loads(table_to_json(table))), file=out)
    elif cfg.fmt == "plain":
        for k in range(1, table.k_max + 1):
            for n in range(1, table.n_max + 1):
                v = table.e(n, k)
                print(f"k={k} n={n} E={v.numerator}/{v.denominator}", file=out)
    else:
        out.write(table_to_csv(table))
    return EXIT_OK


def _cmd_verify(cfg: CliConfig, out) -> int:
    names = [cfg.name] if cfg.name else oracle.default_battery()
    reports = [oracle.verify(name, cfg.digits) for name in names]
    all_ok = all(r.matched_digits >= cfg.digits for r in reports)
    if cfg.fmt == "plain":
        for r in reports:
            print(
                f"{r.name}: matched_digits={r.matched_digits} terms_used={r.terms_used} "
                f"computed={r.computed} reference={r.reference}",
                file=out,
            )
        print(f"result: {'ok' if all_ok else 'FAILED'} (required {cfg.digits} digits)", file=out)
    elif cfg.fmt == "csv":
        print("name,computed,reference,matched_digits,terms_used", file=out)
        for r in reports:
            print(
                f"{r.name},{r.computed},{r.reference},{r.matched_digits},{r.terms_used}",
                file=out,
            )
    else:
        print(
            _json_doc(
                "verify",
                digits=cfg.digits,
                all_passed=all_ok,
                reports=[r.to_json_dict() for r in reports],
            ),
            file=out,
        )
    return EXIT_OK if all_ok else EXIT_VERIFY_FAILED


def _cmd_ratio(cfg: CliConfig, out) -> int:
    seq = term_ratio_sequence(cfg.k, cfg.n_max, digits=12)
    if cfg.fmt == "plain":
        for n, value in seq:
            print(f"n={n} ratio={value.to_decimal()}", file=out)
    elif cfg.fmt == "csv":
        print("n,ratio", file=out)
        for n, value in seq:
            print(f"{n},{value.to_decimal()}", file=out)
    else:
        print(
            _json_doc(
                "ratio",
                k=cfg.k,
                ratios=[{"n": n, "value": v.to_decimal()} for n, v in seq],
            ),
            file=out,
        )
    return EXIT_OK


def _cmd_identity(cfg: CliConfig, out) -> int:
    result = identities.check_identity(
        cfg.identity_id,
        cfg.k,
        cfg.theta,
        cfg.fourier_terms,
        cfg.series_terms,
        digits=cfg.digits,
    )
    if cfg.fmt == "plain":
        print(
            f"identity={result.identity} k={result.k} theta={result.theta_token} "
            f"fourier_terms={result.fourier_terms} series_terms={result.series_terms} "
            f"residual={result.residual.to_sci(6)}",
            file=out,
        )
    elif cfg.fmt == "csv":
        out.write(identities.sweep_to_csv([result]))
    else:
        print(
            _json_doc(
                "identity",
                identity=result.identity,
                k=result.k,
                theta=result.theta_token,
                fourier_terms=result.fourier_terms,
                series_terms=result.series_terms,
                residual=result.residual.to_sci(6),
            ),
            file=out,
        )
    return EXIT_OK


_COMMANDS = {
    "constant": _cmd_constant,
    "coeffs": _cmd_coeffs,
    "verify": _cmd_verify,
    "ratio": _cmd_ratio,
    "identity": _cmd_identity,
}


def run(argv, out=None, err=None) -> int:
    """Parse and execute; returns the process exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        cfg = _config_from_args(args)
        if cfg.cache_dir is not None:
            os.environ[CACHE_DIR_ENV] = cfg.cache_dir
            reset_default_table()
        return _COMMANDS[cfg.command](cfg, out)
    except UnknownConstantError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except (ResourceLimitError, InsufficientTableError, TailRatioError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_RESOURCE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
