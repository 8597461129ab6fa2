# -*- coding: UTF-8 -*-
"""
Run
===
@ Ext Ring: cli

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
The command line `ext` with the sub-commands `group`, `hochschild` and `axioms`.

The exit code is `0` when all computations succeed and all checks pass, `1` when a
check fails, and `2` for a malformed input or invalid options.
"""

import sys
import logging
import argparse

from typing import Optional

try:
    from typing import Sequence
    from typing import Dict, List, Tuple
except ImportError:
    from collections.abc import Sequence
    from builtins import dict as Dict, list as List, tuple as Tuple

import numpy as np

from ..errors import InputError, StructureError
from ..utilities import Timer, get_logger
from ..typehints import CheckResult, ProductEntry, Report
from ..linalg import Field, PrimeField
from ..resolutions import (
    GroupTable,
    AlgebraPresentation,
    group_algebra,
    named_group,
    named_algebra,
)
from ..cohomology import (
    CohomologyContext,
    group_context,
    hochschild_context,
    product_table,
    check_products,
)
from ..monoidal import (
    SuspendedMonoidal,
    ComplexInstance,
    HopfInstance,
    BimoduleInstance,
    random_samples,
    check_axioms,
    graded_end_ring,
)
from ..version import __version__
from .config import DEFAULT_MAX_DEGREE, RunConfig, config_from_args
from .parse import read_field, load_input
from .report import context_basis, make_report, render


__all__ = ("LOG_FORMAT", "build_parser", "setup_logging", "run", "main")

LOG_FORMAT = (
    "%(name)s | %(filename)s - %(funcName)s @ %(asctime)s: %(levelname)s %(message)s"
)

logger = get_logger("cli")


def build_parser() -> argparse.ArgumentParser:
    """The parser of the command line."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--field",
        type=str,
        default=None,
        help="The base field: a prime p, or Q. Defaults to 2.",
    )
    common.add_argument(
        "--max-degree",
        type=int,
        default=DEFAULT_MAX_DEGREE,
        help="The highest degree N (default: %(default)s).",
    )
    common.add_argument(
        "--verify", action="store_true", help="Run the identity checks."
    )
    common.add_argument(
        "--format",
        choices=("json", "csv", "text"),
        default="json",
        help="The report format (default: %(default)s).",
    )
    common.add_argument(
        "--out", type=str, default=None, help="Write the report to this path."
    )
    common.add_argument(
        "--timing", action="store_true", help="Write the timing into the report."
    )
    common.add_argument(
        "--cache-size",
        type=int,
        default=64,
        help="The size of the memo caches (default: %(default)s).",
    )
    common.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log more, -v for info and -vv for debug.",
    )

    parser = argparse.ArgumentParser(
        prog="ext",
        description="Exact cohomology rings of groups and algebras.",
    )
    parser.add_argument(
        "--version", action="version", version="%(prog)s " + __version__
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    group = subparsers.add_parser(
        "group", parents=[common], help="The cohomology ring of a finite group."
    )
    source = group.add_mutually_exclusive_group(required=True)
    source.add_argument("--named", type=str, help="A named group, e.g. cyclic:2.")
    source.add_argument("--input", type=str, help="A JSON input document.")
    group.add_argument(
        "--products",
        type=str,
        default="all",
        help="Comma-separated products among yoneda, cup, composition, star, or "
        "all (default: %(default)s).",
    )

    hochschild = subparsers.add_parser(
        "hochschild",
        parents=[common],
        help="The Hochschild cohomology ring of an algebra.",
    )
    source = hochschild.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "--named", type=str, help="A named algebra, e.g. dualnumbers."
    )
    source.add_argument(
        "--algebra", dest="input", type=str, help="A JSON input document."
    )
    hochschild.add_argument(
        "--products",
        type=str,
        default="all",
        help="Comma-separated products among yoneda, cup, composition, star, or "
        "all (default: %(default)s).",
    )

    axioms = subparsers.add_parser(
        "axioms",
        parents=[common],
        help="Check the suspended monoidal axioms on random objects.",
    )
    axioms.add_argument(
        "--samples",
        type=int,
        default=10,
        help="The number of sampled pairs (default: %(default)s).",
    )
    axioms.add_argument(
        "--seed", type=int, default=0, help="The random seed (default: %(default)s)."
    )
    axioms.add_argument(
        "--instance",
        choices=("complexes", "hopf", "bimodule"),
        default="complexes",
        help="The category to check (default: %(default)s).",
    )
    axioms.add_argument(
        "--named",
        type=str,
        default=None,
        help="The algebra of the hopf or bimodule category.",
    )
    axioms.add_argument(
        "--drop-koszul-sign",
        action="store_true",
        help="Drop the sign of lambda, the expected failure of the negative "
        "control.",
    )
    return parser


def setup_logging(verbose: int = 0) -> None:
    """Install a stderr handler on the package logger."""
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose >= 2:
        level = logging.DEBUG
    root = get_logger()
    for handler in list(root.handlers):
        if getattr(handler, "_ext_ring_cli", False):
            root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    setattr(handler, "_ext_ring_cli", True)
    root.addHandler(handler)
    root.setLevel(level)


def _resolve_field(config: RunConfig) -> Optional[Field]:
    return read_field(config.field) if config.field is not None else None


def _group_subject(
    config: RunConfig, field: Optional[Field]
) -> Tuple[AlgebraPresentation, Field]:
    """The group algebra of the `group` sub-command."""
    if config.input_path is not None:
        obj, field = load_input(config.input_path, field, PrimeField(2))
    else:
        obj = named_group(str(config.named))
        field = PrimeField(2) if field is None else field
    if isinstance(obj, GroupTable):
        return group_algebra(obj, field), field
    if not obj.is_augmented:
        raise InputError(
            "cli: The algebra {0} has no counit to define the trivial "
            "module.".format(obj.name)
        )
    return obj, field


def _algebra_subject(
    config: RunConfig, field: Optional[Field]
) -> Tuple[AlgebraPresentation, Field]:
    """The algebra of the `hochschild` sub-command."""
    if config.input_path is not None:
        obj, field = load_input(config.input_path, field, PrimeField(2))
        if isinstance(obj, GroupTable):
            return group_algebra(obj, field), field
        return obj, field
    field = PrimeField(2) if field is None else field
    return named_algebra(str(config.named), field), field


def _tables(
    context: CohomologyContext, config: RunConfig
) -> Tuple[List[ProductEntry], List[CheckResult]]:
    """The requested multiplication tables, and the checks of the ring."""
    products: List[ProductEntry] = list()
    checks: List[CheckResult] = list()
    ring = None
    for method in config.products:
        if method == "star":
            if ring is None:
                ring = graded_end_ring(context)
            products.extend(ring.product_table("star"))
        else:
            products.extend(product_table(context, method))
    if config.verify:
        checks.extend(
            check_products(
                context, np.random.default_rng(config.seed), config.samples
            )
        )
        if ring is not None:
            checks.extend(ring.check_identities())
    return products, checks


def _axioms_instance(config: RunConfig, field: Field) -> SuspendedMonoidal:
    if config.instance == "hopf":
        algebra = named_algebra(config.named or "group:cyclic:2", field)
        return HopfInstance(
            algebra, koszul_sign=config.koszul_sign, cache_size=config.cache_size
        )
    if config.instance == "bimodule":
        algebra = named_algebra(config.named or "dualnumbers", field)
        return BimoduleInstance(
            algebra, koszul_sign=config.koszul_sign, cache_size=config.cache_size
        )
    return ComplexInstance(
        field, koszul_sign=config.koszul_sign, cache_size=config.cache_size
    )


def run(config: RunConfig) -> Tuple[Report, int]:
    """Run one configuration.

    Returns
    -------
    #1: `Report`
        The report.

    #2: `int`
        The exit code, `0` when every check passes and `1` otherwise.
    """
    timing: Dict[str, float] = dict()

    def _record(name: str, elapsed: float) -> None:
        timing[name] = timing.get(name, 0.0) + elapsed

    field = _resolve_field(config)
    if config.command == "axioms":
        field = PrimeField(2) if field is None else field
        instance = _axioms_instance(config, field)
        rng = np.random.default_rng(config.seed)
        with Timer("axioms", _record):
            samples = random_samples(instance, config.samples, rng)
            checks = check_axioms(instance, samples, rng)
        report = make_report(
            "axioms",
            field.tag,
            instance.name,
            config.max_degree,
            list(),
            list(),
            list(),
            checks,
            timing if config.timing else None,
        )
    else:
        if config.command == "group":
            algebra, field = _group_subject(config, field)
            build = group_context
        else:
            algebra, field = _algebra_subject(config, field)
            build = hochschild_context
        with Timer("resolution", _record):
            context = build(
                algebra,
                max_degree=config.max_degree,
                cache_size=config.cache_size,
                verify=config.verify,
            )
        with Timer("cohomology", _record):
            dims = list(context.dims)
            basis = context_basis(context)
        with Timer("products", _record):
            products, checks = _tables(context, config)
        report = make_report(
            config.command,
            field.tag,
            algebra.name,
            config.max_degree,
            dims,
            basis,
            products,
            checks,
            timing if config.timing else None,
        )
    code = 0 if report["passed"] else 1
    if code:
        failed = next(item for item in report["checks"] if not item["passed"])
        logger.error(
            "The check %s fails (p=%s, q=%s): %s",
            failed["name"],
            failed["p"],
            failed["q"],
            failed["witness"],
        )
    return report, code


def main(argv: Optional[Sequence[str]] = None) -> int:
    """The entry of the command line `ext`."""
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose)
    try:
        config = config_from_args(args)
        report, code = run(config)
        text = render(report, config.output_format)
        if config.out is not None:
            with open(config.out, "w", encoding="utf-8", newline="\n") as fobj:
                fobj.write(text)
        else:
            sys.stdout.write(text)
    except (InputError, StructureError, OSError, ValueError) as err:
        sys.stderr.write("ext: error: {0}\n".format(err))
        return 2
    return code
