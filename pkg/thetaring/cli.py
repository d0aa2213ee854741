from __future__ import annotations

import argparse
import sys
from datetime import datetime
from pathlib import Path
from typing import List

from .report import RunConfig, COMMANDS, FORMATS
from .run import SUITES
from .write import WRITERS
from .aux_funcs import primes_label
from .errors import DomainError
from .version import version_or_git
from . import file_module
from . import msg

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='thetaring',
                description='Exact checks of theta-ring identities, the root of unity obstruction and the height one Lubin-Tate tower.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {version_or_git()}')
    subparsers = parser.add_subparsers(dest='command', required=True)
    for command in COMMANDS:
        sub = subparsers.add_parser(command, help=f"Run the {command} checks")
        sub.add_argument('--primes', type=str, default=None, help="Comma separated primes, e.g. 2,3,5")
        sub.add_argument('--max-level', type=int, default=None, help="Highest level k of zeta_{p^k}")
        sub.add_argument('--summands', type=int, default=None, help="Largest number of summands in the sum formula")
        sub.add_argument('--precision', type=int, default=None, help="Largest N in the p=2 search modulo 2^N")
        sub.add_argument('--monomial-cap', type=int, default=None, help="Symbolic size cap for theta-polynomials")
        sub.add_argument('--seed', type=int, default=None)
        sub.add_argument('--property-cases', type=int, default=None, help="Random cases for the theta-ring axioms")
        sub.add_argument('--format', choices=FORMATS, default=None)
        sub.add_argument('--out', type=str, default=None,
                        help="File (or existing folder) for the report. Defaults to the configured folder, or stdout if there is none.")
        sub.add_argument('--defaults', type=str, default=None, help="Alternative defaults.yml")
        sub.add_argument('--flip-additivity-sign', action='store_true',
                        help="Negative control: use the wrong additivity sign so that checks must fail")
    return parser

def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig.from_defaults(args.command, defaults_file=args.defaults,
                primes=args.primes, max_level=args.max_level, summands=args.summands,
                precision=args.precision, monomial_cap=args.monomial_cap, seed=args.seed,
                property_cases=args.property_cases, format=args.format,
                flip_sign=args.flip_additivity_sign, out=args.out)

def output_path(config: RunConfig, extension: str, time_stamp: datetime) -> Path:
    """--out as given, or the filename template inside it if it is a folder.

    Without --out the template is put in the configured folder. Negative
    control runs get the suffix 'flipped_sign' in templated names.
    """
    if config.out is None:
        folder = Path(config.folder)
    else:
        folder = Path(config.out)
        if not folder.is_dir():
            return folder
    names = {'Command': config.command, 'Primes': primes_label(config.primes),
             'Level': f"k{config.max_level}"}
    template = config.filename
    if config.flip_sign:
        template = file_module.add_suffix(template, 'flipped_sign')
    return file_module.report_filepath(template, str(folder), config.dateformat,
                                       extension, names, time_stamp)

def main(argv: List[str]=None) -> int:
    """Runs a subcommand. Returns 0 if all checks pass, 1 if any fails and 2 on usage errors."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        config = config_from_args(args)
    except DomainError as e:
        print(f"thetaring: error: {e}", file=sys.stderr)
        return 2

    writer = WRITERS[config.format]()
    to_stdout = config.out is None and not config.folder
    msg.silence(to_stdout and config.format == 'json')
    msg.process(f"thetaring {config.command} for primes {config.primes}")
    try:
        report = SUITES[config.command]()(config)
        filename = None
        if not to_stdout:
            filename = output_path(config, writer._extension(), datetime.now())
        text = writer(report, filename)
        if to_stdout:
            print(text)
    finally:
        msg.silence(False)
    return report.exit_code()

def run() -> None:
    sys.exit(main())
