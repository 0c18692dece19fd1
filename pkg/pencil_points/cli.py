"""
Command line driver. Every subcommand builds a JSON-safe record; --format
chooses how it is printed, and --output also writes the run's files.

Coefficients that start with a minus sign are passed as --a=-1,2,3,4.
"""

import argparse
import logging
import sys
from dataclasses import dataclass
from typing import Optional

import pandas as pd

from pencil_points import __version__
from pencil_points.constants import (
    K_DEFAULT,
    M_DEFAULT,
    OUTPUT_FORMATS,
    SEARCH_MIN_POINTS_DEFAULT,
    SEARCH_PRIMES,
    SEARCH_RADIUS_DEFAULT,
    WORKERS_DEFAULT,
)
from pencil_points.config import SUBCOMMANDS, RunConfig
from pencil_points.bounds.IO import (
    bound_table_to_csv,
    bound_table_to_list,
    save_bound_table,
)
from pencil_points.bounds.analysis import bound_table, curve_id
from pencil_points.bounds.mertens import mertens_check
from pencil_points.curve.IO import curve_to_dict
from pencil_points.curve.jacobian import (
    rank_estimate,
    require_nonsingular,
    weierstrass,
)
from pencil_points.curve.pencil import (
    height,
    is_nonsingular,
    is_primitive,
    plucker,
    primitive_reduce,
)
from pencil_points.curve.reduction import (
    bad_prime_product,
    bad_primes,
    good_primes,
)
from pencil_points.detmethod.auxiliary import auxiliary_form
from pencil_points.detmethod.certificates import (
    hadamard_record,
    height_divisibility,
    partition_divisibility,
)
from pencil_points.detmethod.matrices import eval_matrix
from pencil_points.detmethod.primes import (
    choose_prime,
    forced_vanishing,
    prime_threshold,
)
from pencil_points.detmethod.search import (
    STRATEGIES,
    certify_curve,
    class_certificates,
    scan_box,
)
from pencil_points.exceptions import (
    ConfigurationError,
    PencilPointsError,
    TheoremViolationError,
)
from pencil_points.paths import Paths
from pencil_points.points.IO import points_to_csv, points_to_list, save_points
from pencil_points.points.finite_field import (
    count_fp,
    hasse_check,
    jacobian_point_count,
)
from pencil_points.points.rational import enumerate_points
from pencil_points.utils import dumps, json_value, save_json

logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    record: dict
    csv: Optional[str] = None


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors become ConfigurationError, keeping exit codes 1-5
    free for domain errors."""

    def error(self, message):
        raise ConfigurationError(message)


def _curve_parser():
    parser = ArgumentParser(add_help=False, allow_abbrev=False)
    parser.add_argument("--a", help="a0,a1,a2,a3 (use --a=-1,... for signs)")
    parser.add_argument("--b", help="b0,b1,b2,b3")
    parser.add_argument("--curve", help='JSON file {"a": [...], "b": [...]}')
    return parser


def _common_parser():
    parser = ArgumentParser(add_help=False, allow_abbrev=False)
    parser.add_argument(
        "--format", choices=OUTPUT_FORMATS, default="text", dest="format"
    )
    parser.add_argument(
        "--output", help="Also write the run's files to this directory"
    )
    parser.add_argument("--workers", type=int, default=WORKERS_DEFAULT)
    parser.add_argument(
        "--memory-budget",
        type=float,
        dest="memory_budget",
        help="MB available to point enumeration",
    )
    parser.add_argument("--verbose", action="store_true")
    parser.add_argument("--debug", action="store_true")
    return parser


def get_parser():
    parser = ArgumentParser(
        prog="pencil-points",
        description="Rational points on intersections of two diagonal "
        "quadrics in P^3",
        allow_abbrev=False,
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    curve = _curve_parser()
    common = _common_parser()

    def add(name, help_text, with_curve=True):
        parents = [curve, common] if with_curve else [common]
        return subparsers.add_parser(
            name, parents=parents, help=help_text, allow_abbrev=False
        )

    add("analyze", "Plucker data, height, Jacobian and bad primes")

    enumerate_parser = add("enumerate", "Rational points of height <= B")
    enumerate_parser.add_argument("--B", type=int, dest="B", required=True)

    fpcount = add("fpcount", "Point counts over F_p with the Hasse check")
    fpcount.add_argument("--p", type=int, help="A single good prime")
    fpcount.add_argument("--p-limit", type=int, dest="p_limit")

    for name, help_text in (
        ("detverify", "Determinant method certificates"),
        ("auxform", "Auxiliary form through the points of height <= B"),
    ):
        sub = add(name, help_text)
        sub.add_argument("--B", type=int, dest="B", required=True)
        sub.add_argument("--k", type=int, default=K_DEFAULT)

    bounds = add("bounds", "Bound shapes against N(B)")
    bounds.add_argument(
        "--B", type=int, nargs="+", dest="B_values", required=True
    )
    bounds.add_argument("--rank", type=float, help="Known rank of Jac(C)")
    bounds.add_argument("--m", type=int, default=M_DEFAULT)
    bounds.add_argument("--eps", type=float)
    bounds.add_argument("--delta", type=float)
    bounds.add_argument("--c", type=float, help="Rank estimate slope")
    bounds.add_argument("--c0", type=float, help="Rank estimate constant")
    bounds.add_argument(
        "--no-enumerate", action="store_true", dest="no_enumerate"
    )

    search = add("search", "Coefficient box search", with_curve=False)
    search.add_argument("--radius", type=int, default=SEARCH_RADIUS_DEFAULT)
    search.add_argument("--B", type=int, dest="B")
    search.add_argument(
        "--min-points",
        type=int,
        dest="min_points",
        default=SEARCH_MIN_POINTS_DEFAULT,
    )
    search.add_argument("--strategy", choices=STRATEGIES)
    search.add_argument("--k", type=int, default=K_DEFAULT)
    search.add_argument("--seed", type=int, default=0)
    return parser


def _paths(config):
    if config.output_directory is None:
        return None
    paths = Paths(config.output_directory)
    paths.make_directory()
    return paths


def cmd_analyze(config):
    c = config.curve()
    d = plucker(c)
    record = {
        "curve": curve_to_dict(c),
        "plucker": d.as_dict(),
        "content": d.content,
        "height": height(c),
        "primitive": is_primitive(c),
        "nonsingular": is_nonsingular(c),
    }
    if not record["primitive"]:
        record["primitive_model"] = curve_to_dict(primitive_reduce(c))
    if record["nonsingular"]:
        model = weierstrass(c)
        product = bad_prime_product(c)
        record.update(
            {
                "quartic": list(model.quartic),
                "I": model.invI,
                "J": model.invJ,
                "A": model.A,
                "B": model.B,
                "j_invariant": model.j_invariant,
                "discriminant": model.discD,
                "bad_primes": bad_primes(c),
                "bad_prime_product": product,
                "mertens": mertens_check(product),
                "rank_estimate": rank_estimate(
                    model.discD, config.rank_c, config.rank_c0
                ),
            }
        )

    paths = _paths(config)
    if paths is not None:
        save_json(record, paths.analysis_json)
    return CommandResult(record)


def cmd_enumerate(config):
    c = config.curve()
    points = enumerate_points(
        c,
        config.B,
        workers=config.workers,
        memory_budget_mb=config.memory_budget_mb,
    )
    paths = _paths(config)
    if paths is not None:
        save_points(paths.output_directory, points)
    record = {
        "curve": curve_to_dict(c),
        "B": config.B,
        "count": len(points),
        "points": points_to_list(points),
    }
    return CommandResult(record, csv=points_to_csv(points))


def cmd_fpcount(config):
    c = config.curve()
    require_nonsingular(c)
    primes = [config.p] if config.p is not None else None
    if primes is None:
        primes = good_primes(c, config.p_limit)

    rows = []
    for p in primes:
        n_p = count_fp(c, p)
        jacobian = jacobian_point_count(c, p)
        if n_p != jacobian:
            raise TheoremViolationError(
                f"#C(F_{p}) = {n_p} but #Jac(C)(F_{p}) = {jacobian} "
                f"on {c.label()}"
            )
        rows.append(
            {
                "p": p,
                "n_p": n_p,
                "jacobian": jacobian,
                "hasse": hasse_check(n_p, p),
            }
        )
    df = pd.DataFrame(rows, columns=["p", "n_p", "jacobian", "hasse"])
    record = {"curve": curve_to_dict(c), "counts": rows}
    return CommandResult(
        record, csv=df.to_csv(index=False, lineterminator="\n")
    )


def cmd_detverify(config):
    c = config.curve()
    require_nonsingular(c)
    if not is_primitive(c):
        logger.info(f"Replacing {c.label()} by its primitive model")
        c = primitive_reduce(c)
    k = config.k
    points = enumerate_points(
        c,
        config.B,
        workers=config.workers,
        memory_budget_mb=config.memory_budget_mb,
    )
    used = points[: 8 * k]

    certificates = []
    if len(used) == 8 * k:
        M = eval_matrix(c, used, k)
        certificates.append(hadamard_record(M, config.B))
        certificates.append(height_divisibility(c, used, k).as_dict())
        for p in SEARCH_PRIMES:
            if p not in bad_primes(c):
                certificates.append(partition_divisibility(M, p, c).as_dict())
    else:
        logger.info(
            f"Only {len(used)} points of height <= {config.B}; square "
            f"certificates need {8 * k}"
        )
    for certificate in class_certificates(c, used, k, SEARCH_PRIMES):
        certificates.append(certificate.as_dict())

    p = choose_prime(c, k, config.B)
    record = {
        "curve": curve_to_dict(c),
        "B": config.B,
        "k": k,
        "count": len(points),
        "points": points_to_list(used),
        "prime": p,
        "threshold": float(prime_threshold(k, config.B, height(c))),
        "forced_vanishing": forced_vanishing(c, k, config.B, p),
        "certificates": certificates,
    }
    paths = _paths(config)
    if paths is not None:
        save_json(certificates, paths.certificates_json)
    return CommandResult(record)


def cmd_auxform(config):
    c = config.curve()
    require_nonsingular(c)
    points = enumerate_points(
        c,
        config.B,
        workers=config.workers,
        memory_budget_mb=config.memory_budget_mb,
    )
    form = auxiliary_form(c, points, config.k)
    record = {
        "curve": curve_to_dict(c),
        "B": config.B,
        "k": config.k,
        "count": len(points),
        "form": None
        if form is None
        else [[label, value] for label, value in form.terms()],
    }
    return CommandResult(record)


def cmd_bounds(config):
    c = config.curve()
    reports = bound_table(
        c,
        config.B_values,
        workers=config.workers,
        rank=config.rank,
        m=config.m,
        eps=config.eps,
        delta=config.delta,
        rank_c=config.rank_c,
        rank_c0=config.rank_c0,
        run_enumeration=config.run_enumeration,
        memory_budget_mb=config.memory_budget_mb,
    )
    paths = _paths(config)
    if paths is not None:
        save_bound_table(paths.output_directory, reports)
    record = {"curve": curve_id(c), "reports": bound_table_to_list(reports)}
    return CommandResult(record, csv=bound_table_to_csv(reports))


def cmd_search(config):
    candidates = scan_box(
        radius=config.radius,
        B=config.B,
        min_points=config.min_points,
        strategy=config.strategy,
        workers=config.workers,
        seed=config.seed,
    )
    found = []
    for candidate in candidates:
        certificates = certify_curve(
            candidate.curve, candidate.points, config.k
        )
        found.append(
            {
                "curve": curve_to_dict(candidate.curve),
                "height": candidate.height,
                "count": candidate.n_points,
                "certificates": [cert.as_dict() for cert in certificates],
                "verified": all(cert.verified for cert in certificates),
            }
        )
    record = {
        "radius": config.radius,
        "B": config.B,
        "min_points": config.min_points,
        "strategy": config.strategy,
        "candidates": found,
    }
    paths = _paths(config)
    if paths is not None:
        save_json(record, paths.search_json)
    return CommandResult(record)


COMMANDS = {
    "analyze": cmd_analyze,
    "enumerate": cmd_enumerate,
    "fpcount": cmd_fpcount,
    "detverify": cmd_detverify,
    "auxform": cmd_auxform,
    "bounds": cmd_bounds,
    "search": cmd_search,
}
assert set(COMMANDS) == set(SUBCOMMANDS)


def _text_lines(record, indent=""):
    for key, value in record.items():
        if isinstance(value, dict):
            yield f"{indent}{key}:"
            yield from _text_lines(value, indent + "  ")
        elif isinstance(value, list) and value and isinstance(
            value[0], (dict, list)
        ):
            yield f"{indent}{key}:"
            for item in value:
                if isinstance(item, dict):
                    yield f"{indent}  -"
                    yield from _text_lines(item, indent + "    ")
                else:
                    yield f"{indent}  {' '.join(str(v) for v in item)}"
        else:
            yield f"{indent}{key}: {_text_value(value)}"


def _text_value(value):
    if isinstance(value, list):
        return ", ".join(str(v) for v in value)
    if value is None:
        return "-"
    return str(value)


def render(result, output_format):
    if output_format == "json":
        return dumps(result.record) + "\n"
    if output_format == "csv":
        return result.csv
    return "\n".join(_text_lines(json_value(result.record))) + "\n"


def _configure_logging(argv):
    level = logging.WARNING
    if "--verbose" in argv:
        level = logging.INFO
    if "--debug" in argv:
        level = logging.DEBUG
    logging.basicConfig(
        stream=sys.stderr,
        level=level,
        format="%(levelname)s %(name)s: %(message)s",
    )


def main(argv=None):
    """
    Run one subcommand and return its exit code: 0 on success, the
    exception's exit_code for any PencilPointsError.
    """
    argv = sys.argv[1:] if argv is None else list(argv)
    _configure_logging(argv)
    try:
        args = get_parser().parse_args(argv)
        config = RunConfig.from_args(args)
        result = COMMANDS[config.subcommand](config)
    except PencilPointsError as e:
        logger.debug("Run failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    sys.stdout.write(render(result, config.output_format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
