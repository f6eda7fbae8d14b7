"""rspin CLI entrypoint.

Provides `main` and `parse_args` for tests and tooling.
"""
import argparse
import sys
from typing import List, Optional

from rspin.bootstrap import create_config_from_args
from rspin.cli.commands import COMMANDS, EXIT_FAILED, EXIT_USAGE
from rspin.cli.ui import CLIInterface
from rspin.errors import FlowOrderError
from rspin.infrastructure.renderers.resolver import RendererResolver


def _register_providers() -> None:
    """Register output renderers with their resolver.

    These imports trigger decorator-based registration.
    """
    import rspin.infrastructure.renderers.providers.text  # noqa: F401
    import rspin.infrastructure.renderers.providers.structured  # noqa: F401


_register_providers()


def main(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand and return its exit code.

    0 on success or a passing check, 1 on a failing check, 2 on usage or
    input errors.
    """
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        config = create_config_from_args(args)
        outcome = COMMANDS[args.command](args, config)
    except FlowOrderError as e:
        CLIInterface.print_error(f"Error: {e}")
        return EXIT_FAILED
    except (OSError, ValueError) as e:
        CLIInterface.print_error(f"Error: {e}")
        return EXIT_USAGE

    renderer = RendererResolver.resolve({"type": config.output_format})
    CLIInterface.print_output(renderer(outcome.document))
    return outcome.exit_code


def _int_list(text: str) -> List[int]:
    try:
        values = [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    return values


def _root_index(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 2:
        raise argparse.ArgumentTypeError(f"r must be >= 2, got {value}")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _positive(text: str) -> int:
    value = _nonnegative(text)
    if value == 0:
        raise argparse.ArgumentTypeError("expected a positive integer, got 0")
    return value


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse command-line arguments."""
    parser = argparse.ArgumentParser(
        prog="rspin",
        description="Descent calculus and KdV_r flows for r-spin descendants",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Square root of the KdV Lax operator
  python -m rspin.cli.cli root --r 2 --depth 3

  # KdV equation in the tilde presentation
  python -m rspin.cli.cli flow --r 2 --tilde-index 2

  # Both flow presentations agree
  python -m rspin.cli.cli check-flows --r 3 --max-a 1

  # Closed-form descent
  python -m rspin.cli.cli descent --r 3 --mtilde 7

  # Change of variables on a seeded table
  python -m rspin.cli.cli seed-table --r 2 --max-points 6 --out wk.tbl
  python -m rspin.cli.cli potential-check --r 2 --order 6 --table wk.tbl
        """,
    )

    parser.add_argument(
        "--config",
        dest="config_base_path",
        type=str,
        default=None,
        help="Directory containing engine.json (default: built-in defaults)",
    )

    parser.add_argument(
        "--format",
        type=str,
        choices=["text", "structured"],
        default=None,
        help="Output format (default: from config, else text)",
    )

    parser.add_argument(
        "--verbose",
        "-v",
        action="store_true",
        help="Log progress to stderr",
    )

    subparsers = parser.add_subparsers(dest="command", required=True)

    root = subparsers.add_parser("root", help="r-th root of the Lax operator")
    root.add_argument("--r", type=_root_index, required=True)
    root.add_argument("--depth", type=_positive, help="Retained orders (default: r + depth offset)")

    flow = subparsers.add_parser("flow", help="Evolution equations of one flow")
    flow.add_argument("--r", type=_root_index, required=True)
    flow.add_argument("--tilde-index", type=_nonnegative, help="Tilde presentation index a*r + m")
    flow.add_argument("--a", type=_nonnegative, help="Standard presentation a")
    flow.add_argument("--m", type=_nonnegative, help="Standard presentation m")
    flow.add_argument("--depth", type=_positive)

    check = subparsers.add_parser("check-flows", help="Compare both flow presentations")
    check.add_argument("--r", type=_root_index, required=True)
    check.add_argument("--max-a", type=_nonnegative, required=True)
    check.add_argument("--depth", type=_positive)

    descent = subparsers.add_parser("descent", help="Closed-form descent factors")
    descent.add_argument("--r", type=_root_index, required=True)
    descent.add_argument("--mtilde", type=_int_list, required=True, help="Comma-separated tilde indices")

    degree = subparsers.add_parser("degree", help="Virtual degree D")
    degree.add_argument("--r", type=_root_index, required=True)
    degree.add_argument("--genus", type=_nonnegative, default=0)
    degree.add_argument("--m", type=_int_list, required=True, help="Comma-separated type entries")

    potential = subparsers.add_parser("potential-check", help="Verify the change of variables")
    potential.add_argument("--r", type=_root_index, required=True)
    potential.add_argument("--order", type=_nonnegative, help="Truncation order (default: from config)")
    potential.add_argument("--max-genus", type=_nonnegative, help="Highest genus for formal tables")
    source = potential.add_mutually_exclusive_group(required=True)
    source.add_argument("--table", type=str, help="Path to a persisted numeric or formal table")
    source.add_argument("--formal", action="store_true", help="Use opaque correlator atoms")

    seed = subparsers.add_parser("seed-table", help="Write a seeded numeric table")
    seed.add_argument("--r", type=_root_index, required=True)
    seed.add_argument("--max-points", type=_nonnegative, help="Largest n (default: from config)")
    seed.add_argument("--out", type=str, required=True)

    return parser.parse_args(argv)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
