# -*- coding: utf-8 -*-
"""
Command line interface.

Exit status is 0 on success, 1 when a verification suite finds a
counterexample and 2 on a usage or parse error. Operands starting with ``-``
(sign vectors) must follow a ``--`` separator.
"""

# system imports
import sys
import argparse
import logging

# local imports
from ..algebra.free import FreeElement
from ..algebra.products import phi_star, psi_star
from ..combinat import cube, tree
from ..combinat.perm import parse_permutation
from ..config.main import CONF
from .families import FAMILIES, OPERATIONS, get_family, get_operation
from .hasse import cover_graph, to_dot
from .verify import SUITES, run_suite

logger = logging.getLogger(__name__)

# which -> (operand parser, map)
MAPS = {
    'psi': (parse_permutation, tree.psi),
    'phi': (tree.parse_tree, cube.phi),
    'psistar': (tree.parse_tree, psi_star),
    'phistar': (cube.parse_sign_vector, phi_star),
    'minperm': (tree.parse_tree, tree.min_perm),
    'maxperm': (tree.parse_tree, tree.max_perm),
    'mintree': (cube.parse_sign_vector, cube.min_tree),
    'maxtree': (cube.parse_sign_vector, cube.max_tree),
}

FIBERS = {
    'psi': (tree.parse_tree, tree.fiber),
    'phi': (cube.parse_sign_vector, cube.phi_fiber),
}


def render(value) -> str:
    if isinstance(value, FreeElement):
        return value.render()
    if isinstance(value, (tuple, list)):
        return '\n'.join(str(v) for v in value)
    return str(value)


# =============================================================================
# Commands
# =============================================================================

def cmd_product(args) -> int:
    family = get_family(args.family)
    operation = get_operation(family, args.op)
    print(render(operation(family.parse(args.lhs), family.parse(args.rhs))))
    return 0


def cmd_map(args) -> int:
    parse, func = MAPS[args.which]
    print(render(func(parse(args.arg))))
    return 0


def cmd_interval(args) -> int:
    family = get_family(args.family)
    print(render(family.interval(family.parse(args.low), family.parse(args.high))))
    return 0


def cmd_fiber(args) -> int:
    parse, func = FIBERS[args.which]
    print(render(func(parse(args.arg))))
    return 0


def cmd_hasse(args) -> int:
    if args.format != 'dot':
        raise ValueError('Unsupported format {!r}'.format(args.format))
    print(to_dot(cover_graph(args.family, args.n)))
    return 0


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise ValueError('Unknown suite {!r}, choose from {}'.format(
            args.suite, ', '.join(sorted(SUITES))))
    max_degree = args.max_degree
    if max_degree is None:
        max_degree = CONF.get('Suites', args.suite)
    workers = CONF.get('Verify', 'workers')
    failures, report = run_suite(args.suite, max_degree, workers=workers)
    print('\n'.join(report))
    if failures:
        print('{}: {} failing cell(s)'.format(args.suite, failures))
        return 1
    print('{}: all cells passed up to degree {}'.format(args.suite, max_degree))
    return 0


# =============================================================================
# Parser
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument('--verbose', action='store_true', help='log suite progress')
    verbosity.add_argument('--debug', action='store_true', help='log everything')

    parser = argparse.ArgumentParser(
        prog='weakorder',
        description='Weak orders on permutations, trees and cube vertices, '
                    'and the products of their algebras.')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    product = commands.add_parser('product', parents=[common], help='multiply two basis elements')
    product.add_argument('--family', required=True, choices=sorted(FAMILIES))
    product.add_argument('--op', required=True, choices=OPERATIONS)
    product.add_argument('lhs')
    product.add_argument('rhs')
    product.set_defaults(func=cmd_product)

    maps = commands.add_parser('map', parents=[common], help='apply psi, phi and related maps')
    maps.add_argument('--which', required=True, choices=sorted(MAPS))
    maps.add_argument('arg')
    maps.set_defaults(func=cmd_map)

    interval = commands.add_parser('interval', parents=[common], help='list a weak-order interval')
    interval.add_argument('--family', required=True, choices=sorted(FAMILIES))
    interval.add_argument('low')
    interval.add_argument('high')
    interval.set_defaults(func=cmd_interval)

    fiber = commands.add_parser('fiber', parents=[common], help='list a psi or phi fiber')
    fiber.add_argument('--which', required=True, choices=sorted(FIBERS))
    fiber.add_argument('arg')
    fiber.set_defaults(func=cmd_fiber)

    hasse = commands.add_parser('hasse', parents=[common], help='export a cover graph')
    hasse.add_argument('--family', required=True, choices=sorted(FAMILIES))
    hasse.add_argument('--n', required=True, type=int)
    hasse.add_argument('--format', default='dot', choices=('dot',))
    hasse.set_defaults(func=cmd_hasse)

    verify = commands.add_parser('verify', parents=[common], help='run a verification suite')
    verify.add_argument('--suite', required=True)
    verify.add_argument('--max-degree', type=int, default=None)
    verify.set_defaults(func=cmd_verify)

    return parser


def _configure_logging(args) -> None:
    if args.debug:
        level = logging.DEBUG
    elif args.verbose:
        level = logging.INFO
    else:
        level = getattr(logging, str(CONF.get('Logging', 'level')).upper(), logging.WARNING)
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s')


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args)
    try:
        return args.func(args)
    except ValueError as exc:
        logger.debug('Invalid input', exc_info=True)
        print('error: {}'.format(exc), file=sys.stderr)
        return 2


def run():
    sys.exit(main())


if __name__ == '__main__':
    run()
