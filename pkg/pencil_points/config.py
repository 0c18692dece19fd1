import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

from pencil_points.constants import (
    DELTA_DEFAULT,
    EPSILON_DEFAULT,
    K_DEFAULT,
    M_DEFAULT,
    MEMORY_BUDGET_ENV,
    MEMORY_BUDGET_MB_DEFAULT,
    OUTPUT_FORMATS,
    P_LIMIT_DEFAULT,
    RANK_C_DEFAULT,
    RANK_C0_DEFAULT,
    SEARCH_B_DEFAULT,
    SEARCH_MIN_POINTS_DEFAULT,
    SEARCH_RADIUS_DEFAULT,
    WORKERS_DEFAULT,
)
from pencil_points.bounds.formulas import DELTA_LIMIT, as_fraction
from pencil_points.curve.IO import load_curve, parse_coefficients
from pencil_points.curve.pencil import DiagonalPencil
from pencil_points.exceptions import ConfigurationError
from pencil_points.kernel.arithmetic import is_prime

SUBCOMMANDS = (
    "analyze",
    "enumerate",
    "fpcount",
    "detverify",
    "auxform",
    "bounds",
    "search",
)
CSV_SUBCOMMANDS = ("enumerate", "fpcount", "bounds")
NEEDS_B = ("enumerate", "detverify", "auxform")


@dataclass
class RunConfig:
    subcommand: str
    a: Optional[Tuple[int, ...]] = None
    b: Optional[Tuple[int, ...]] = None
    curve_path: Optional[Path] = None
    B: Optional[int] = None
    B_values: Tuple[int, ...] = ()
    k: int = K_DEFAULT
    m: int = M_DEFAULT
    p: Optional[int] = None
    p_limit: int = P_LIMIT_DEFAULT
    eps: float = EPSILON_DEFAULT
    delta: float = DELTA_DEFAULT
    rank_c: float = RANK_C_DEFAULT
    rank_c0: float = RANK_C0_DEFAULT
    rank: Optional[float] = None
    run_enumeration: bool = True
    output_format: str = "text"
    workers: int = WORKERS_DEFAULT
    memory_budget_mb: float = MEMORY_BUDGET_MB_DEFAULT
    output_directory: Optional[Path] = None
    radius: int = SEARCH_RADIUS_DEFAULT
    min_points: int = SEARCH_MIN_POINTS_DEFAULT
    strategy: str = "through_points"
    seed: int = 0

    @classmethod
    def from_args(cls, namespace, environ=None):
        """
        Build a config from parsed arguments. The memory budget falls back
        to the environment variable, then to the default.
        """
        environ = os.environ if environ is None else environ
        args = vars(namespace)

        a = b = None
        if args.get("a") is not None:
            a = parse_coefficients(args["a"], "--a")
        if args.get("b") is not None:
            b = parse_coefficients(args["b"], "--b")
        curve_path = args.get("curve")

        memory_budget_mb = args.get("memory_budget")
        if memory_budget_mb is None:
            memory_budget_mb = _budget_from_environ(environ)

        output_directory = args.get("output")
        B_values = args.get("B_values") or ()

        config = cls(
            subcommand=args["subcommand"],
            a=a,
            b=b,
            curve_path=Path(curve_path) if curve_path else None,
            B=args.get("B"),
            B_values=tuple(B_values),
            k=_pick(args, "k", K_DEFAULT),
            m=_pick(args, "m", M_DEFAULT),
            p=args.get("p"),
            p_limit=_pick(args, "p_limit", P_LIMIT_DEFAULT),
            eps=_pick(args, "eps", EPSILON_DEFAULT),
            delta=_pick(args, "delta", DELTA_DEFAULT),
            rank_c=_pick(args, "c", RANK_C_DEFAULT),
            rank_c0=_pick(args, "c0", RANK_C0_DEFAULT),
            rank=args.get("rank"),
            run_enumeration=not args.get("no_enumerate", False),
            output_format=args.get("format") or "text",
            workers=_pick(args, "workers", WORKERS_DEFAULT),
            memory_budget_mb=memory_budget_mb,
            output_directory=Path(output_directory)
            if output_directory
            else None,
            radius=_pick(args, "radius", SEARCH_RADIUS_DEFAULT),
            min_points=_pick(args, "min_points", SEARCH_MIN_POINTS_DEFAULT),
            strategy=args.get("strategy") or "through_points",
            seed=_pick(args, "seed", 0),
        )
        if config.subcommand == "search" and config.B is None:
            config.B = SEARCH_B_DEFAULT
        config.validate()
        return config

    def validate(self):
        """Reject invalid combinations before any computation."""
        if self.subcommand not in SUBCOMMANDS:
            raise ConfigurationError(f"Unknown subcommand {self.subcommand}")
        if self.subcommand != "search":
            self._validate_curve_source()
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigurationError(
                f"--format must be one of {OUTPUT_FORMATS}, "
                f"got {self.output_format!r}"
            )
        if (
            self.output_format == "csv"
            and self.subcommand not in CSV_SUBCOMMANDS
        ):
            raise ConfigurationError(
                f"--format csv is only available for {CSV_SUBCOMMANDS}"
            )

        if self.subcommand in NEEDS_B and self.B is None:
            raise ConfigurationError(f"{self.subcommand} needs --B")
        if self.B is not None and self.B < 1:
            raise ConfigurationError(f"--B must be at least 1, got {self.B}")
        if self.subcommand == "bounds":
            if not self.B_values:
                raise ConfigurationError("bounds needs at least one --B")
            if min(self.B_values) < 1:
                raise ConfigurationError(
                    f"Every --B must be at least 1, got {self.B_values}"
                )
            if not 0 < as_fraction(self.delta) < DELTA_LIMIT:
                raise ConfigurationError(
                    f"--delta must lie in (0, 3/392), got {self.delta}"
                )
            if self.eps <= 0:
                raise ConfigurationError(
                    f"--eps must be positive, got {self.eps}"
                )
            if self.rank is not None and self.rank < 0:
                raise ConfigurationError(
                    f"--rank must be non-negative, got {self.rank}"
                )
            if self.rank_c <= 0:
                raise ConfigurationError(
                    f"--c must be positive, got {self.rank_c}"
                )

        if self.k < 1:
            raise ConfigurationError(f"--k must be at least 1, got {self.k}")
        if self.m < 1:
            raise ConfigurationError(f"--m must be at least 1, got {self.m}")
        if self.p is not None and not is_prime(self.p):
            raise ConfigurationError(f"--p must be a prime, got {self.p}")
        if self.p_limit < 2:
            raise ConfigurationError(
                f"--p-limit must be at least 2, got {self.p_limit}"
            )
        if self.workers < 1:
            raise ConfigurationError(
                f"--workers must be at least 1, got {self.workers}"
            )
        if self.memory_budget_mb <= 0:
            raise ConfigurationError(
                f"--memory-budget must be positive, "
                f"got {self.memory_budget_mb}"
            )
        if self.subcommand == "search":
            if self.radius < 1:
                raise ConfigurationError(
                    f"--radius must be at least 1, got {self.radius}"
                )
            if self.min_points < 1:
                raise ConfigurationError(
                    f"--min-points must be at least 1, got {self.min_points}"
                )

    def _validate_curve_source(self):
        inline = self.a is not None or self.b is not None
        if inline and self.curve_path is not None:
            raise ConfigurationError(
                "Give either --a/--b or --curve, not both"
            )
        if not inline and self.curve_path is None:
            raise ConfigurationError(
                f"{self.subcommand} needs a curve: --a and --b, or --curve"
            )
        if inline and (self.a is None or self.b is None):
            raise ConfigurationError("--a and --b must be given together")

    def curve(self):
        if self.curve_path is not None:
            return load_curve(self.curve_path)
        return DiagonalPencil(self.a, self.b)


def _pick(args, key, default):
    value = args.get(key)
    return default if value is None else value


def _budget_from_environ(environ):
    value = environ.get(MEMORY_BUDGET_ENV)
    if value is None:
        return MEMORY_BUDGET_MB_DEFAULT
    try:
        budget = float(value)
    except ValueError:
        raise ConfigurationError(
            f"{MEMORY_BUDGET_ENV} must be a number of MB, got {value!r}"
        )
    return budget
