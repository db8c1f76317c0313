# -*- coding: utf-8 -*-
import argparse

from ..quat_core import DEFAULT_Q_CAP

DEFAULT_SWEEP_MIN = 3
DEFAULT_SWEEP_MAX = 200
DEFAULT_SAMPLES = 200
DEFAULT_SWEEP_SAMPLES = 10

COMMANDS = ('params', 'gram', 'c1', 'kernel', 'verify', 'sweep', 'kummer')


def _add_common(parser):
    parser.add_argument(
        "--json",
        action='store_true',
        help="Print a machine-readable JSON document instead of text"
    )
    parser.add_argument(
        "--q-cap",
        type=int,
        default=DEFAULT_Q_CAP,
        help="Upper bound for the auxiliary prime q search"
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=0,
        help="Seed for the randomized invariant checks"
    )
    parser.add_argument(
        "--samples",
        type=int,
        default=DEFAULT_SAMPLES,
        help="Random cases per invariant check"
    )
    parser.add_argument(
        "--verbose",
        action='store_true',
        help="Debug logging on stderr"
    )
    parser.add_argument(
        "--log-file",
        default=None,
        help="Also append log messages to this file"
    )


def _add_prime(parser):
    parser.add_argument(
        "--p",
        type=int,
        required=True,
        help="Characteristic, a prime >= 3"
    )
    parser.add_argument(
        "--q",
        type=int,
        default=None,
        help="Override the auxiliary prime q"
    )
    parser.add_argument(
        "--a",
        type=int,
        default=None,
        help="Override a (requires --q)"
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog='superspecial-verify',
        description="Neron-Severi lattice and Chern class map of a superspecial abelian surface")
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    for name in COMMANDS:
        sub = subparsers.add_parser(name)
        _add_common(sub)
        if name == 'sweep':
            sub.add_argument(
                "--p-min",
                type=int,
                default=DEFAULT_SWEEP_MIN,
                help="Smallest p of the sweep (need not be prime)"
            )
            sub.add_argument(
                "--p-max",
                type=int,
                default=DEFAULT_SWEEP_MAX,
                help="Largest p of the sweep (need not be prime)"
            )
            sub.add_argument(
                "--workers",
                type=int,
                default=1,
                help="Process pool size"
            )
            sub.set_defaults(samples=DEFAULT_SWEEP_SAMPLES)
        else:
            _add_prime(sub)
    return parser


def parse_args_function(argv=None):
    return build_parser().parse_args(argv)
