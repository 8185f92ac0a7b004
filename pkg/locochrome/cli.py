# -*- coding:utf-8 -*-
"""
Command line entry point ``locochrome``.

Exit codes: 0 success or every claim passed, 1 some claim failed, 2 usage or
input error, 3 budget or enumeration limit exhausted, 4 the solver could not
settle the answer (an undecidable interval comparison or a pivot cap).

"""

import argparse
import json
import logging
import os
import sys
from fractions import Fraction

from . import __version__
from .graphs.core import PartialOrientation, as_digraph
from .graphs.families import complete_graph, cycle_graph, directed_cycle, kneser_graph, path_graph, petersen_graph
from .graphs.independent import max_independent_set
from .graphs.universal import counterexample_certificates, counterexample_graph, universal_directed, \
    universal_multi, universal_undirected
from .inputs import format_graph, graph_hash, read_coloring, read_graph, read_multicoloring, \
    write_coloring, write_fractional
from .solvers.bounds import alpha_universal_directed
from .solvers.coloring import MAX_EXHAUSTIVE_EDGES, chromatic, directed_local_chromatic, \
    directed_local_chromatic_max, enumerate_local_colorings, local_chromatic, locality, \
    verify_orientation_certificate
from .solvers.fractional import METHODS, fractional_chromatic, psi_d_star, verify_ratio
from .solvers.orientation import max_orientation, tight_independent_set
from .solvers.sampler import SamplerConfig, chi_upper_bound_from_sampler, estimate_membership, optimal_gamma
from .utils import DEFAULT_CLASS_CAP, Budget, BudgetExhausted, EnumerationOverflow, SolverError, default_seed
from .verify import RECIPES, jsonable, run_recipe

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_EXHAUSTED, EXIT_UNDECIDED = 0, 1, 2, 3, 4

GENERATORS = {
    'u': (2, universal_undirected),
    'ud': (2, universal_directed),
    'udm': (3, universal_multi),
    'gap1': (0, lambda: counterexample_graph()[0]),
    'cycle': (1, cycle_graph),
    'dcycle': (1, directed_cycle),
    'complete': (1, complete_graph),
    'path': (1, path_graph),
    'petersen': (0, petersen_graph),
    'kneser': (2, kneser_graph),
}


def build_family(family, params):
    """:param family: a key of :data:`GENERATORS`.
    :param params: integer parameters.
    :return: :class:`Graph` or :class:`PartialOrientation`.
    """
    if family not in GENERATORS:
        raise ValueError(' unknown family `{0}`, expected one of {1} '.format(family, sorted(GENERATORS)))
    arity, build = GENERATORS[family]
    if len(params) != arity:
        raise ValueError(' family `{0}` takes {1} parameters, got {2} '.format(family, arity, len(params)))
    return build(*params)


def resolve_graph(source):
    """A graph file path, or a name like ``petersen``, ``gap1``, ``u-5-3``, ``udm-5-4-2`` or ``cycle-5``."""
    if os.path.exists(source):
        return read_graph(source)
    family, _, rest = source.partition('-')
    try:
        params = [int(p) for p in rest.split('-')] if rest else []
    except ValueError:
        raise ValueError(' `{0}` is neither a file nor a graph name '.format(source))
    if family not in GENERATORS:
        raise ValueError(' `{0}` is neither a file nor a graph name '.format(source))
    return build_family(family, params)


def _undirected(g):
    return g.base if isinstance(g, PartialOrientation) else g


def _budget(args):
    if args.budget is not None:
        return Budget(time_ms=args.budget)
    return Budget.from_env()


def _seed(args):
    return default_seed() if args.seed is None else args.seed


def _emit(args, payload):
    if args.format == 'json':
        sys.stdout.write(json.dumps(jsonable(payload), indent=2, sort_keys=True) + '\n')
    else:
        for key in sorted(payload):
            sys.stdout.write('{0}: {1}\n'.format(key, jsonable(payload[key])))


def cmd_generate(args):
    g = build_family(args.family, args.params)
    text = format_graph(g)
    if args.output:
        with open(args.output, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
        logging.info('gen: wrote {0} vertices to {1}'.format(g.n, args.output))
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args):
    params = {}
    if args.theorem == 'ratio-b':
        params = {key: getattr(args, key) for key in ('m', 'k', 'h', 'r') if getattr(args, key) is not None}
    elif args.theorem in ('unicolor',):
        params = {key: getattr(args, key) for key in ('m', 'k') if getattr(args, key) is not None}
    elif args.theorem == 'k1k' and args.k is not None:
        params = {'k': args.k}
    elif args.theorem in ('ize', 'frakceq'):
        params = {'full': args.full}
    elif args.theorem == 'gap1':
        params = {'skip_psi': args.skip_psi}
    elif args.theorem == 'sampler':
        params = {'workers': args.workers}
        if args.trials is not None:
            params['trials'] = args.trials
    report = run_recipe(args.theorem, params, _seed(args), _budget(args), timing=not args.no_timing)
    if args.format == 'json':
        sys.stdout.write(report.to_json() + '\n')
    else:
        sys.stdout.write(report.to_text())
    return report.exit_code


def _write_coloring_witness(args, coloring):
    if args.witness_out:
        write_coloring(args.witness_out, coloring)
    return args.witness_out


def cmd_compute(args):
    g = resolve_graph(args.graph)
    budget = _budget(args)
    payload = {'parameter': args.parameter, 'graph': graph_hash(g), 'n': g.n}
    parameter = args.parameter
    if parameter in ('psi', 'chi'):
        value, witness = (local_chromatic if parameter == 'psi' else chromatic)(_undirected(g), budget)
        payload.update(value=value, witness=_write_coloring_witness(args, witness))
        if parameter == 'psi':
            payload['locality'] = list(locality(_undirected(g), witness).per_vertex)
    elif parameter == 'psid':
        d = as_digraph(g)
        value, witness = directed_local_chromatic(d, budget)
        payload.update(value=value, witness=_write_coloring_witness(args, witness),
                       locality=list(locality(d, witness, directed=True).per_vertex))
    elif parameter in ('chistar', 'psidstar'):
        if parameter == 'chistar':
            result = fractional_chromatic(_undirected(g), method=args.method)
            payload['clique'] = list(result.clique.weights)
        else:
            result = psi_d_star(as_digraph(g), method=args.method)
        if args.witness_out:
            write_fractional(args.witness_out, result.coloring)
        payload.update(value=result.value, witness=args.witness_out, support=len(result.coloring))
    elif parameter == 'alpha':
        value, witness = max_independent_set(_undirected(g))
        payload.update(value=value, witness=witness.tolist())
    elif parameter == 'psidmax':
        base = _undirected(g)
        gap, _ = counterexample_graph()
        if base == gap:
            bounds = directed_local_chromatic_max(base, 'certificates', counterexample_certificates(base), budget)
        elif len(base.edges) <= MAX_EXHAUSTIVE_EDGES:
            bounds = directed_local_chromatic_max(base, 'exhaustive', budget=budget)
        else:
            raise ValueError(' psidmax runs exhaustively on at most {0} edges, or on gap1 with certificates '.format(
                MAX_EXHAUSTIVE_EDGES))
        payload.update(value=bounds.lower if bounds.exact else None, lower=bounds.lower, upper=bounds.upper,
                       gaps=len(bounds.gaps))
    else:
        raise ValueError(' unknown parameter `{0}` '.format(parameter))
    _emit(args, payload)
    return EXIT_OK


def cmd_alias(args):
    args.parameter = args.command
    return cmd_compute(args)


def cmd_enum_local(args):
    g = resolve_graph(args.graph)
    directed = isinstance(g, PartialOrientation)
    max_colors = args.max_colors if args.max_colors is not None else g.n
    classes = enumerate_local_colorings(g, args.k, max_colors, cap=args.cap, budget=_budget(args),
                                        directed=directed)
    _emit(args, {'graph': graph_hash(g), 'k': args.k, 'max_colors': max_colors, 'directed': directed,
                 'count': len(classes), 'colorings': [list(c.colors) for c in classes]})
    return EXIT_OK


def cmd_verify_cert(args):
    g = resolve_graph(args.graph)
    d = g if isinstance(g, PartialOrientation) else PartialOrientation(g)
    coloring = read_coloring(args.coloring, d.n)
    valid = verify_orientation_certificate(d, coloring, args.k)
    _emit(args, {'graph': graph_hash(g), 'k': args.k, 'valid': valid,
                 'locality': list(locality(d, coloring, directed=True, pessimistic=True).per_vertex)})
    return EXIT_OK if valid else EXIT_FAIL


def cmd_verify_ratio(args):
    d = as_digraph(resolve_graph(args.graph))
    report = verify_ratio(d)
    _emit(args, {'graph': graph_hash(d), 'chi_star': report.chi_star, 'psi_d_star': report.psi_d_star,
                 'bound': report.bound.value, 'bound_exact': report.bound.exact, 'holds': report.holds,
                 'slack': report.slack})
    return EXIT_OK if report.holds else EXIT_FAIL


def cmd_alpha_ud(args):
    alpha, l = alpha_universal_directed(args.m, args.k)
    payload = {'m': args.m, 'k': args.k, 'alpha': alpha, 'l': l}
    if args.check:
        computed, _ = max_independent_set(universal_directed(args.m, args.k).base)
        payload.update(computed=computed, match=computed == alpha)
    _emit(args, payload)
    return EXIT_OK if payload.get('match', True) else EXIT_FAIL


def cmd_orient_max(args):
    g = _undirected(resolve_graph(args.graph))
    cert = tight_independent_set(g, args.v0)
    d = max_orientation(g, args.v0, 'lexicographic' if args.policy == 'lex' else 'leave_free', cert)
    text = format_graph(d)
    if args.output:
        with open(args.output, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
    certificate = {'v0': cert.v0, 'a0': cert.a0.tolist(), 'clique': list(cert.clique.weights),
                   'tightness': cert.tightness, 'chi_star': cert.chi_star, 'orientation': args.output,
                   'graph': graph_hash(d)}
    if not args.output:
        certificate['orientation_text'] = text
    _emit(args, certificate)
    return EXIT_OK


def cmd_sample(args):
    d = as_digraph(resolve_graph(args.graph))
    mc = read_multicoloring(args.coloring, d.n)
    gamma = optimal_gamma(mc.h, mc.r) if args.gamma == 'auto' else Fraction(args.gamma)
    cfg = SamplerConfig(gamma, args.trials, _seed(args))
    report = estimate_membership(d, mc, cfg, workers=args.workers)
    payload = dict(report._asdict())
    payload.update(gamma=gamma, seed=cfg.master_seed, graph=graph_hash(d),
                   chi_upper_bound=chi_upper_bound_from_sampler(d, mc, gamma))
    _emit(args, payload)
    return EXIT_OK if report.independent and not report.violations else EXIT_FAIL


def _common(parser):
    parser.add_argument('--format', choices=('json', 'text'), default='json')
    parser.add_argument('--budget', type=int, default=None, help='wall-clock budget in milliseconds')
    parser.add_argument('--seed', type=int, default=None)
    parser.add_argument('-v', '--verbose', action='count', default=0)


def _compute_flags(parser):
    parser.add_argument('--witness-out', default=None, help='file to write the witness to')
    parser.add_argument('--method', choices=METHODS, default='auto')


def build_parser():
    parser = argparse.ArgumentParser(prog='locochrome', description='Exact local chromatic numbers.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    sub = parser.add_subparsers(dest='command')

    p = sub.add_parser('gen', help='write a named graph family')
    p.add_argument('family', choices=sorted(GENERATORS))
    p.add_argument('params', nargs='*', type=int)
    p.add_argument('-o', '--output', default=None)
    _common(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser('verify', help='run a verification recipe')
    p.add_argument('theorem', choices=sorted(RECIPES))
    for flag in ('--m', '--k', '--h', '--r', '--trials'):
        p.add_argument(flag, type=int, default=None)
    p.add_argument('--workers', type=int, default=1)
    p.add_argument('--full', action='store_true', help='include U(5,3) in the ize and frakceq batteries')
    p.add_argument('--skip-psi', action='store_true', help='gap1 without the exact psi search')
    p.add_argument('--no-timing', action='store_true', help='report zero wall time')
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('compute', help='compute one parameter of a graph')
    p.add_argument('parameter', choices=('psi', 'psid', 'chi', 'chistar', 'psidstar', 'alpha', 'psidmax'))
    p.add_argument('graph')
    _compute_flags(p)
    _common(p)
    p.set_defaults(func=cmd_compute)

    for alias in ('psi', 'psid', 'chi', 'chistar', 'psidstar'):
        p = sub.add_parser(alias, help='same as `compute {0}`'.format(alias))
        p.add_argument('graph')
        _compute_flags(p)
        _common(p)
        p.set_defaults(func=cmd_alias)

    p = sub.add_parser('enum-local', help='local k-colorings up to color permutation')
    p.add_argument('graph')
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--max-colors', type=int, default=None)
    p.add_argument('--cap', type=int, default=DEFAULT_CLASS_CAP)
    _common(p)
    p.set_defaults(func=cmd_enum_local)

    p = sub.add_parser('verify-cert', help='check a coloring against every completion of a partial orientation')
    p.add_argument('graph')
    p.add_argument('--coloring', required=True)
    p.add_argument('--k', type=int, required=True)
    _common(p)
    p.set_defaults(func=cmd_verify_cert)

    p = sub.add_parser('verify-ratio', help='check chi* <= k^k/(k-1)^(k-1) for k = psi_d*')
    p.add_argument('graph')
    _common(p)
    p.set_defaults(func=cmd_verify_ratio)

    p = sub.add_parser('alpha-ud', help='independence number of U_d(m,k) by formula')
    p.add_argument('m', type=int)
    p.add_argument('k', type=int)
    p.add_argument('--check', action='store_true', help='also solve the independent set exactly')
    _common(p)
    p.set_defaults(func=cmd_alpha_ud)

    p = sub.add_parser('orient-max', help='orientation with psi_d* = chi*')
    p.add_argument('graph')
    p.add_argument('--v0', type=int, default=0)
    p.add_argument('--policy', choices=('lex', 'free'), default='lex')
    p.add_argument('-o', '--output', default=None, help='file for the oriented graph')
    _common(p)
    p.set_defaults(func=cmd_orient_max)

    p = sub.add_parser('sample', help='Monte Carlo check of the random independent set bound')
    p.add_argument('--graph', required=True)
    p.add_argument('--coloring', required=True, help='multicoloring file')
    p.add_argument('--gamma', default='auto')
    p.add_argument('--trials', type=int, default=10 ** 4)
    p.add_argument('--workers', type=int, default=1)
    _common(p)
    p.set_defaults(func=cmd_sample)
    return parser


def _configure_logging(verbose):
    level = logging.WARNING if verbose == 0 else (logging.INFO if verbose == 1 else logging.DEBUG)
    logging.basicConfig(stream=sys.stderr, level=level, format='%(levelname)s %(message)s')


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, 'func', None):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    _configure_logging(args.verbose)
    try:
        return args.func(args)
    except (BudgetExhausted, EnumerationOverflow) as e:
        payload = {'status': 'exhausted', 'reason': str(e)}
        if isinstance(e, BudgetExhausted):
            payload.update(lower=e.lower, upper=e.upper)
        _emit(args, payload)
        return EXIT_EXHAUSTED
    except SolverError as e:
        _emit(args, {'status': 'undecided', 'reason': str(e)})
        return EXIT_UNDECIDED
    except (ValueError, OSError) as e:
        sys.stderr.write('locochrome: error: {0}\n'.format(str(e).strip()))
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
