# -*- coding: UTF-8 -*-
"""
Config
======
@ Ext Ring: cli

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
The options of one run of the command line.
"""

import argparse
import dataclasses

from typing import Optional

try:
    from typing import Tuple
except ImportError:
    from builtins import tuple as Tuple

from typing_extensions import Literal

from ..errors import InputError
from ..typehints import OutputFormat, ProductMethod


__all__ = (
    "Command",
    "InstanceName",
    "DEFAULT_MAX_DEGREE",
    "PRODUCT_CHOICES",
    "RunConfig",
    "parse_products",
    "config_from_args",
)

Command = Literal["group", "hochschild", "axioms"]
"""The sub-commands."""

InstanceName = Literal["complexes", "hopf", "bimodule"]
"""The categories checked by the `axioms` sub-command."""

DEFAULT_MAX_DEGREE = 6
"""The default degree cap `N`."""

PRODUCT_CHOICES: Tuple[ProductMethod, ...] = ("yoneda", "cup", "composition", "star")
"""The products accepted by `--products`. `all` selects every one of them."""


def parse_products(spec: str) -> Tuple[ProductMethod, ...]:
    """Parse a comma-separated list of products, or `all`."""
    names = [val.strip().lower() for val in str(spec).split(",") if val.strip()]
    if not names:
        return tuple()
    if "all" in names:
        return PRODUCT_CHOICES
    res = list()
    for name in names:
        if name not in PRODUCT_CHOICES:
            raise InputError(
                "cli: Unknown product {0}, use 'all' or some of {1}.".format(
                    name, ", ".join(PRODUCT_CHOICES)
                )
            )
        if name not in res:
            res.append(name)
    return tuple(res)


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """All options of one run.

    The values are checked on construction, and `ValueError` is raised for an
    invalid one.
    """

    command: Command
    """The sub-command."""

    field: Optional[str] = None
    """The field specification. If not given, the input document or `2` is used."""

    max_degree: int = DEFAULT_MAX_DEGREE
    """The highest degree `N`."""

    named: Optional[str] = None
    """The name of a group, an algebra or, for `axioms`, the algebra of the
    instance."""

    input_path: Optional[str] = None
    """The path of a JSON input document."""

    products: Tuple[ProductMethod, ...] = PRODUCT_CHOICES
    """The products to tabulate."""

    output_format: OutputFormat = "json"
    """The format of the report."""

    out: Optional[str] = None
    """The output path. The report is written to stdout if not given."""

    verify: bool = False
    """Run the identity checks."""

    timing: bool = False
    """Write the timing of each stage into the report."""

    cache_size: int = 64
    """The size of the memo caches."""

    samples: int = 10
    """The number of random samples of the axiom checks."""

    seed: int = 0
    """The seed of the random samples."""

    instance: InstanceName = "complexes"
    """The category of the `axioms` sub-command."""

    koszul_sign: bool = True
    """Whether `lambda` carries the Koszul sign. Only for `axioms`."""

    verbose: int = 0
    """The verbosity, `0` for warnings, `1` for info, `2` for debug."""

    def __post_init__(self) -> None:
        if self.command not in ("group", "hochschild", "axioms"):
            raise ValueError("cli: Unknown command {0}.".format(self.command))
        if self.max_degree < 0:
            raise ValueError(
                'cli: The argument "max_degree" needs to be >=0, get {0}.'.format(
                    self.max_degree
                )
            )
        if self.cache_size < 1:
            raise ValueError('cli: The argument "cache_size" needs to be >=1.')
        if self.samples < 0:
            raise ValueError('cli: The argument "samples" needs to be >=0.')
        if self.output_format not in ("json", "csv", "text"):
            raise ValueError(
                "cli: Unknown output format {0}.".format(self.output_format)
            )
        if self.named is not None and self.input_path is not None:
            raise ValueError("cli: Give a named input or an input file, not both.")


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Build the run configuration from the parsed command line."""
    products = getattr(args, "products", "all")
    return RunConfig(
        command=args.command,
        field=args.field,
        max_degree=args.max_degree,
        named=getattr(args, "named", None),
        input_path=getattr(args, "input", None),
        products=parse_products(products),
        output_format=args.format,
        out=args.out,
        verify=args.verify,
        timing=args.timing,
        cache_size=args.cache_size,
        samples=getattr(args, "samples", 10),
        seed=getattr(args, "seed", 0),
        instance=getattr(args, "instance", "complexes"),
        koszul_sign=not getattr(args, "drop_koszul_sign", False),
        verbose=args.verbose,
    )
