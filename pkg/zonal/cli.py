"""Command-line front-end.

Subcommands::

    zonal jack      --kappa 2 --alpha 2 --nvars 2 [--at 1,1]
    zonal moment    --ensemble complex --r 1 --x 0.5 --n 1 --sigma identity
    zonal powersum  --ensemble real --k 4 --n 2
    zonal density   --n 20 --sigma1 1.0 --grid 64
    zonal kaneko    --alpha 2 --a=-1/2 --kappa 1 --n 2
    zonal hyper     --a=-2,1/2 --alpha 1 --at 0.3,0.1
    zonal verify    --suite schur-real --n-samples 1000000 --seed 42

Partitions are comma-separated parts; Σ is a JSON file path or the literal
``identity``. Flags override ``ZONAL_*`` settings. Exit codes: 0 when every
verdict passes, 1 on a failed or errored verdict, 2 on usage or config errors.
Parameter lists that start with a minus sign must be written ``--a=-1,2``.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from fractions import Fraction

import numpy as np

from .algebra.cache import jack_cache
from .algebra.jack import jack_poly
from .algebra.partitions import Partition, exact, scalar_to_str
from .algebra.symfunc import eval_exact
from .config import SETTINGS_ERROR, settings
from .ensembles.sigma import FIELDS, load_sigma
from .errors import PartitionError, ZonalError
from .hyper import closed_forms as cf
from .hyper.density import rank1_values
from .hyper.series import HyperSpec, pFq
from .verify import estimators as mc
from .verify.checks import printed_matches
from .verify.report import (
    density_csv,
    discrepancies_json,
    dumps,
    format_table,
    reports_csv,
    reports_json,
    write_output,
)
from .verify.schemas import ComparisonReport
from .verify.suites import SUITE_NAMES

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


# --- argument types -------------------------------------------------------


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except PartitionError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def _scalar(text: str) -> Fraction:
    try:
        return exact(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _scalars(text: str) -> list[Fraction]:
    return [_scalar(tok) for tok in text.split(",")] if text.strip() else []


def _alpha(text: str) -> Fraction:
    value = _scalar(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"alpha must be positive: {text}")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value) or value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return value


def _complex(text: str) -> complex | float:
    try:
        value = complex(text.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    return value.real if value.imag == 0 else value


# --- shared plumbing ------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n-samples", type=_positive_int, default=None, dest="n_samples",
                        help=f"Monte-Carlo sample count (verify default: {settings.N_SAMPLES}).")
    common.add_argument("--seed", type=int, default=settings.SEED, help=f"Master seed (default: {settings.SEED}).")
    common.add_argument("--jobs", type=_positive_int, default=settings.JOBS, help="Worker processes.")
    common.add_argument("--quad-order", type=_positive_int, default=settings.QUAD_ORDER, dest="quad_order",
                        help=f"Gauss-Laguerre order (default: {settings.QUAD_ORDER}).")
    common.add_argument("--jack-cache", default=None, dest="jack_cache", help="Directory for cached Jack tables.")
    common.add_argument("--out", default=None, help="Write output here instead of stdout.")
    common.add_argument("--format", choices=["json", "csv"], default="json", dest="fmt")
    return common


def _sigma(field: str, source: str, n: int | None, embedded: bool = False) -> np.ndarray:
    """Σ for the given field; quaternion Σ comes back in its 2N×2N self-dual form.

    A quaternion Σ file holds the N×N complex matrix to lift, or the
    2N×2N self-dual matrix itself when ``--embedded`` is given.
    """
    if source == "identity":
        if n is None:
            raise argparse.ArgumentTypeError("--sigma identity needs --n")
        return np.eye(2 * n if field == "quaternion" else n)
    sigma = load_sigma(source)
    if field == "quaternion":
        sigma = cf.as_quaternion(sigma, embedded=embedded)
    if n is not None and cf.field_dim(field, sigma) != n:
        raise ZonalError(f"sigma file does not describe an N={n} {field} matrix")
    return sigma


def _emit_reports(reports: list[ComparisonReport], args) -> int:
    text = reports_csv(reports) if args.fmt == "csv" else reports_json(reports)
    write_output(text, args.out)
    return EXIT_FAIL if any(r.failed for r in reports) else EXIT_OK


def _emit_table(reports: list[ComparisonReport], out: str | None) -> None:
    """Human-readable summary next to the machine output: ``<out>.txt`` or stderr."""
    table = format_table(reports)
    if out:
        write_output(table, f"{out}.txt")
    else:
        sys.stderr.write(table)


# --- subcommands ----------------------------------------------------------


def cmd_jack(args) -> int:
    if args.kappa.length > args.nvars:
        raise PartitionError(f"{args.kappa} has more than {args.nvars} parts")
    poly = jack_poly(args.kappa, args.alpha, args.nvars)
    payload = {
        "kappa": args.kappa.to_json(),
        "alpha": scalar_to_str(args.alpha),
        "nvars": args.nvars,
        "coefficients": {str(mu): scalar_to_str(poly.coefficient(mu)) for mu in poly.support()},
    }
    if args.at is not None:
        if len(args.at) != args.nvars:
            raise ZonalError(f"--at needs {args.nvars} values, got {len(args.at)}")
        exact_value = eval_exact(poly, args.at)
        payload["value"] = float(exact_value)
        payload["exact"] = scalar_to_str(exact_value)
    if args.fmt == "csv":
        lines = ["partition,coeff"] + [f'"{mu}",{c}' for mu, c in payload["coefficients"].items()]
        write_output("\n".join(lines) + "\n", args.out)
    else:
        write_output(dumps(payload), args.out)
    return EXIT_OK


def cmd_moment(args) -> int:
    sigma = _sigma(args.ensemble, args.sigma, args.n, args.embedded)
    if args.n_samples:
        report = mc.mc_charpoly_moment(args.ensemble, args.r, args.x, sigma, args.n_samples, args.seed, args.jobs)
        return _emit_reports([report], args)
    payload = {"closed": cf.charpoly_moment(args.ensemble, args.r, args.x, sigma)}
    if args.duality:
        payload["duality"] = cf.charpoly_duality(args.ensemble, args.r, args.x, sigma, args.quad_order)
    write_output(dumps(payload), args.out)
    return EXIT_OK


def cmd_powersum(args) -> int:
    sigma = _sigma(args.ensemble, args.sigma, args.n, args.embedded)
    if args.n_samples:
        derived, printed = mc.mc_power_sum(args.ensemble, args.k, sigma, args.n_samples, args.seed, args.jobs)
        if not printed_matches(args.ensemble, args.k, sigma):
            printed = printed.model_copy(update={"verdict": "info", "note": f"printed form would be {printed.verdict}"})
        return _emit_reports([derived, printed], args)
    payload = {
        "closed": cf.power_sum_closed(args.ensemble, args.k, sigma),
        "printed": cf.power_sum_printed(args.ensemble, args.k, sigma),
    }
    write_output(dumps(payload), args.out)
    return EXIT_OK


def _density_grid(n: int, sigma: float, grid: int) -> list[dict]:
    half = math.sqrt((n + 1) * max(sigma, 1.0)) + 3.0
    axis = np.linspace(-half, half, grid)
    re, im = np.meshgrid(axis, axis, indexing="xy")
    values = rank1_values(re**2 + im**2, n, sigma)
    return [
        {"re": float(x), "im": float(y), "density": float(v)}
        for x, y, v in zip(re.ravel(), im.ravel(), values.ravel())
    ]


def cmd_density(args) -> int:
    if args.n_samples:
        rows = mc.mc_density(args.n, args.sigma1, args.n_samples, args.seed, args.grid, args.jobs)
        reports = mc.density_reports(rows, args.n, args.sigma1, args.seed, args.n_samples)
        records = [row.to_json() for row in rows]
        code = EXIT_FAIL if any(r.failed for r in reports) else EXIT_OK
    else:
        records = _density_grid(args.n, args.sigma1, args.grid)
        code = EXIT_OK
    write_output(density_csv(records) if args.fmt == "csv" else dumps(records), args.out)
    return code


def cmd_kaneko(args) -> int:
    if args.kappa.length > args.n:
        raise PartitionError(f"{args.kappa} has more than {args.n} parts")
    if args.n_samples:
        report = mc.mc_kaneko(args.alpha, args.a, args.kappa, args.n, args.n_samples, args.seed, args.jobs)
        return _emit_reports([report], args)
    closed = cf.kaneko_closed(args.a, args.alpha, args.kappa, args.n)
    write_output(dumps({"closed": float(closed), "exact": scalar_to_str(closed)}), args.out)
    return EXIT_OK


def cmd_hyper(args) -> int:
    spec = HyperSpec(tuple(args.a), tuple(args.b), args.alpha, len(args.at), args.max_weight)
    result = pFq(spec, args.at)
    value = result.value
    payload = {
        "label": spec.label,
        "terminated": result.terminated,
        "terms": result.terms,
        "tail_estimate": result.tail_estimate if math.isfinite(result.tail_estimate) else None,
    }
    if isinstance(value, Fraction):
        payload["value"] = float(value)
        payload["exact"] = scalar_to_str(value)
    elif isinstance(value, complex) and value.imag:
        payload["value"] = {"re": value.real, "im": value.imag}
    else:
        payload["value"] = float(np.real(value))
    write_output(dumps(payload), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .runner import run_verification
    from .verify.checks import RunContext

    ctx = RunContext(
        n_samples=args.n_samples or settings.N_SAMPLES,
        seed=args.seed,
        jobs=args.jobs,
        quad_order=args.quad_order,
    )
    result = run_verification(args.suite, ctx, record=args.record or None)
    _emit_table(result.reports, args.out)
    if args.suite == "errata" and args.fmt == "json":
        write_output(discrepancies_json(result.discrepancies), args.out)
        return EXIT_FAIL if result.failed else EXIT_OK
    return _emit_reports(result.reports, args)


# --- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="zonal", description="Zonal polynomial averages and their Monte-Carlo checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jack", parents=[common], help="Monomial expansion of P_kappa^(alpha).")
    p.add_argument("--kappa", type=_partition, required=True)
    p.add_argument("--alpha", type=_alpha, default=Fraction(1))
    p.add_argument("--nvars", type=_positive_int, required=True)
    p.add_argument("--at", type=_scalars, default=None, help="Evaluation point, comma-separated rationals.")
    p.set_defaults(handler=cmd_jack)

    p = sub.add_parser("moment", parents=[common], help="<|det(x-X)|^{2r}> over a Ginibre ensemble.")
    p.add_argument("--ensemble", choices=FIELDS, required=True)
    p.add_argument("--r", type=_nonnegative_int, required=True)
    p.add_argument("--x", type=_complex, required=True)
    p.add_argument("--n", type=_positive_int, default=None)
    p.add_argument("--sigma", default="identity", help="JSON file or 'identity'.")
    p.add_argument("--embedded", action="store_true", help="Quaternion sigma file is already 2N x 2N self-dual.")
    p.add_argument("--duality", action="store_true", help="Also evaluate the dual r-dimensional integral.")
    p.set_defaults(handler=cmd_moment)

    p = sub.add_parser("powersum", parents=[common], help="Power-sum averages, derived and as printed.")
    p.add_argument("--ensemble", choices=FIELDS, required=True)
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--n", type=_positive_int, default=None)
    p.add_argument("--sigma", default="identity")
    p.add_argument("--embedded", action="store_true", help="Quaternion sigma file is already 2N x 2N self-dual.")
    p.set_defaults(handler=cmd_powersum)

    p = sub.add_parser("density", parents=[common], help="Rank-one deformed complex Ginibre density.")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--sigma1", type=_positive_float, default=1.0)
    p.add_argument("--grid", type=_positive_int, default=64)
    p.set_defaults(handler=cmd_density)

    p = sub.add_parser("kaneko", parents=[common], help="Laguerre average of C_kappa.")
    p.add_argument("--alpha", type=_alpha, required=True)
    p.add_argument("--a", type=_scalar, required=True)
    p.add_argument("--kappa", type=_partition, required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    p.set_defaults(handler=cmd_kaneko)

    p = sub.add_parser("hyper", parents=[common], help="pFq^(alpha) at a point.")
    p.add_argument("--a", type=_scalars, default=[])
    p.add_argument("--b", type=_scalars, default=[])
    p.add_argument("--alpha", type=_alpha, default=Fraction(1))
    p.add_argument("--at", type=_scalars, required=True)
    p.add_argument("--max-weight", type=_positive_int, default=20, dest="max_weight")
    p.set_defaults(handler=cmd_hyper)

    p = sub.add_parser("verify", parents=[common], help="Run a verification suite.")
    p.add_argument("--suite", choices=SUITE_NAMES, default="all")
    p.add_argument("--record", action="store_true", help="Store the run in the report database.")
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    if SETTINGS_ERROR is not None:
        print(f"error: {SETTINGS_ERROR}", file=sys.stderr)
        return EXIT_USAGE
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if args.jack_cache:
        jack_cache.set_directory(args.jack_cache)
    try:
        return args.handler(args)
    except (ZonalError, argparse.ArgumentTypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
