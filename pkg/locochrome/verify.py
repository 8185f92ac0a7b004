# -*- coding:utf-8 -*-
"""
Scripted verification recipes.

Each recipe builds its own inputs, runs the live solvers and compares the
results against the claims table :data:`CLAIMS`. Expected values there are
data with a provenance tag: ``stated`` values are asserted outright,
``derived`` ones are formulas evaluated on the recipe parameters or on a second
independent solver.

"""

import json
import logging
import operator
import time
from collections import namedtuple
from decimal import Decimal
from fractions import Fraction

import numpy as np

from .graphs.core import MultiColoring, PartialOrientation, VertexSet
from .graphs.families import complete_graph, cycle_graph, directed_cycle, path_graph, petersen_graph, \
    random_digraph, random_graph
from .graphs.independent import is_independent, max_independent_set
from .graphs.universal import counterexample_certificates, counterexample_graph, kruskal_katona_sweep, \
    natural_coloring, natural_multicoloring, universal_directed, universal_multi, universal_undirected
from .inputs import graph_hash
from .solvers.bounds import alpha_universal_multi_upper_bound, euler, multi_chi_star_lower_bound, ratio_bound, \
    universal_directed_bounds
from .solvers.coloring import directed_local_chromatic, directed_local_chromatic_max, enumerate_local_colorings, \
    local_chromatic, locality, uncovered_patterns, verify_orientation_certificate
from .solvers.fractional import fractional_chromatic, is_local_multicoloring, local_weight, psi_d_star, \
    psi_d_star_upper_from_multicoloring, verify_ratio, vertex_transitive_chi_star
from .solvers.orientation import tight_independent_set, verify_frakceq
from .solvers.sampler import SamplerConfig, chi_upper_bound_from_sampler, estimate_membership, membership_oracle, \
    optimal_gamma
from .utils import BudgetExhausted, EnumerationOverflow, SolverError, default_seed, format_rational

SCHEMA = 'locochrome.report/1'
PASS, FAIL, SKIPPED = 'pass', 'fail', 'skipped'

_RELATIONS = {'eq': operator.eq, 'le': operator.le, 'ge': operator.ge, 'lt': operator.lt, 'gt': operator.gt}
_SYMBOLS = {'eq': '=', 'le': '<=', 'ge': '>=', 'lt': '<', 'gt': '>'}


class Claim(namedtuple('Claim', ['key', 'statement', 'relation', 'expected', 'provenance'])):
    """ Claim
    Args:
        key: ``'<recipe>.<name>'``.
        statement: what is asserted, in words.
        relation: one of ``eq``, ``le``, ``ge``, ``lt``, ``gt``; ``computed <relation> expected`` must hold.
        expected: a value, or ``None`` when the recipe supplies it from the parameters or from an
            independent computation.
        provenance: ``'stated'`` or ``'derived'``.
    """
    __slots__ = ()


Row = namedtuple('Row', ['key', 'statement', 'relation', 'expected', 'computed', 'status', 'reason', 'provenance'])

CLAIMS = {claim.key: claim for claim in [
    Claim('unicolor.classes', 'U(m,k) has one local k-coloring up to color permutation', 'eq', 1, 'stated'),
    Claim('unicolor.natural', 'that coloring is the natural coloring', 'eq', True, 'stated'),
    Claim('k1k.classes', 'U(k+1,k) has k+2 local k-colorings up to color permutation', 'eq', None,
          'stated'),
    Claim('k1k.natural', 'the natural coloring is one of them', 'eq', True, 'stated'),
    Claim('k1k.proper', 'all the others are proper k-colorings', 'eq', True, 'stated'),
    Claim('gap1.psi', 'the gap graph has local chromatic number 4', 'eq', 4, 'stated'),
    Claim('gap1.witness', 'the returned witness is a local 4-coloring', 'le', 4, 'derived'),
    Claim('gap1.cert_xy', 'with x -> y forced, g is a directed local 3-coloring of every completion', 'eq', True,
          'stated'),
    Claim('gap1.cert_yx', "with y -> x forced, g' is a directed local 3-coloring of every completion", 'eq', True,
          'stated'),
    Claim('gap1.cover', 'the two forced arcs cover every orientation', 'eq', 0, 'derived'),
    Claim('gap1.lex', 'the lexicographic orientation needs at least 3 colors', 'ge', 3, 'stated'),
    Claim('gap1.psi_d_max', 'the maximum of psi_d over all orientations is 3', 'eq', 3, 'stated'),
    Claim('ize.tight', 'an independent set through v0 has fractional clique weight exactly 1', 'eq', 1, 'stated'),
    Claim('frakceq.equal', 'the orientation away from A0 has psi_d* equal to chi*', 'eq', None, 'stated'),
    Claim('frakceq.seen', 'some vertex of A0 sees weight at least chi* - 1', 'ge', None, 'stated'),
    Claim('frakceq.outward', 'every vertex of A0 has its whole neighborhood as out-neighborhood', 'eq', True,
          'stated'),
    Claim('ratio-a.bound', 'chi* <= k^k/(k-1)^(k-1) for k = psi_d*', 'le', None, 'stated'),
    Claim('ratio-a.violations', 'no random digraph violates the bound', 'eq', 0, 'stated'),
    Claim('ratio-a.undecided', 'every random digraph is decided at the working precision', 'eq', 0, 'derived'),
    Claim('ratio-b.alpha', 'alpha(U_d(m,k)) = max_l (m-l) C(l,k-1)', 'eq', None, 'stated'),
    Claim('ratio-b.chi_star', 'chi*(U_d(m,k)) = n / alpha', 'eq', None, 'derived'),
    Claim('ratio-b.power', 'chi* >= m(m-1)^(k-1) / max_l (m-l) l^(k-1)', 'ge', None, 'stated'),
    Claim('ratio-b.asymptotic', 'chi* >= (1-1/m)^(k-1) k^k/(k-1)^(k-1)', 'ge', None, 'stated'),
    Claim('ratio-b.upper', 'chi* <= k^k/(k-1)^(k-1)', 'le', None, 'stated'),
    Claim('ratio-b.psi_d', 'psi_d(U_d(m,k)) = k', 'eq', None, 'stated'),
    Claim('ratio-b.multi_local', 'the natural multicoloring of U_d(m,h,r) is h-local', 'eq', True, 'stated'),
    Claim('ratio-b.multi_psi', 'psi_d*(U_d(m,h,r)) <= h/r', 'le', None, 'stated'),
    Claim('ratio-b.multi_alpha', 'alpha(U_d(m,h,r)) <= (h/r-1)^(h/r-1)/(h/r)^(h/r) m^h/(r!(h-r)!)', 'le', None,
          'stated'),
    Claim('ratio-b.multi_lower', 'chi*(U_d(m,h,r)) >= (1-h/m)^h (h/r)^(h/r)/(h/r-1)^(h/r-1)', 'ge', None,
          'stated'),
    Claim('ratio-b.multi_upper', 'chi*(U_d(m,h,r)) <= (h/r)^(h/r)/(h/r-1)^(h/r-1)', 'le', None, 'stated'),
    Claim('sampler.min_exact', 'min_v P[v in I] on U_d(5,3) at gamma = 2/3', 'eq', Fraction(4, 27), 'stated'),
    Claim('sampler.max_exact', 'every vertex has the same membership probability', 'eq', Fraction(4, 27),
          'derived'),
    Claim('sampler.optimal_bound', '(h/r-1)^(h/r-1)/(h/r)^(h/r) at h/r = 3', 'eq', Fraction(4, 27), 'stated'),
    Claim('sampler.oracle', 'closed form equals the enumeration over all selected color sets', 'eq', True,
          'derived'),
    Claim('sampler.outliers', 'no vertex frequency is more than 4 standard errors off', 'eq', 0, 'derived'),
    Claim('sampler.independent', 'every sampled set is independent', 'eq', True, 'stated'),
    Claim('sampler.chi_bound', '1 / min_v P[v in I] >= chi*', 'ge', None, 'stated'),
    Claim('ratio-e.below_e', 'k^k/(k-1)^(k-1) / k < e', 'lt', None, 'stated'),
    Claim('ratio-e.increasing', 'k^k/(k-1)^(k-1) / k is strictly increasing', 'eq', True, 'stated'),
    Claim('ratio-e.close', 'at k = 100 the ratio exceeds 2.70', 'gt', Fraction(27, 10), 'derived'),
    Claim('kk.violations', 'every family of j-sets has shadows at least C(l, r)', 'eq', 0, 'stated'),
    Claim('lp-oracle.chi_star', 'the column-generation chi* equals the one over all maximal independent sets', 'eq',
          None, 'derived'),
    Claim('lp-oracle.psi_d_star', 'the column-generation psi_d* equals the one over all independent sets', 'eq',
          None, 'derived'),
]}


def _exact(value):
    if isinstance(value, (bool, int, Fraction)):
        return value
    if isinstance(value, Decimal):
        return Fraction(value)
    return value


def decide(relation, computed, expected):
    """``computed <relation> expected``; ``expected`` may carry an enclosing interval.

    Objects with ``exact``, ``lower`` and ``upper`` (a :class:`RatioBound` or :class:`Bound`) are compared
    through their interval when inexact.

    :return: True, False, or None when the interval cannot decide.
    """
    if hasattr(expected, 'lower') and hasattr(expected, 'exact'):
        if expected.exact:
            expected = expected.value
        else:
            x = Fraction(computed)
            lower, upper = Fraction(expected.lower), Fraction(expected.upper)
            if relation in ('le', 'lt'):
                return True if x < lower else (False if x > upper else None)
            if relation in ('ge', 'gt'):
                return True if x > upper else (False if x < lower else None)
            return False if x < lower or x > upper else None
    return _RELATIONS[relation](_exact(computed), _exact(expected))


class Bound(namedtuple('Bound', ['value', 'exact', 'lower', 'upper'])):
    __slots__ = ()


def jsonable(value):
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, (Fraction, Decimal)):
        return format_rational(value) if isinstance(value, Fraction) else str(value)
    if hasattr(value, 'lower') and hasattr(value, 'exact'):
        return jsonable(value.value)
    if isinstance(value, VertexSet):
        return value.tolist()
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(item) for item in value]
    if isinstance(value, float):
        return value
    return str(value)


class VerificationReport(object):
    """Rows of one recipe run, plus what is needed to reproduce it.

    :param theorem: recipe name.
    :param params: the recipe parameters.
    :param rows: list of :class:`Row`.
    :param graphs: ``{name: content hash}`` of the main inputs.
    :param seed: master seed.
    :param wall_time_s: elapsed seconds, ``0.0`` when timing is off.
    :param exhausted: whether some row was skipped because a budget or limit ran out.
    """

    def __init__(self, theorem, params, rows, graphs, seed, wall_time_s, exhausted):
        from . import __version__

        self.theorem = theorem
        self.params = params
        self.rows = rows
        self.graphs = graphs
        self.seed = seed
        self.wall_time_s = wall_time_s
        self.exhausted = exhausted
        self.version = __version__

    @property
    def failures(self):
        return [row for row in self.rows if row.status == FAIL]

    @property
    def passed(self):
        return not self.failures and not self.exhausted

    @property
    def exit_code(self):
        if self.failures:
            return 1
        if self.exhausted:
            return 3
        return 0

    def to_dict(self):
        return {
            'schema': SCHEMA,
            'theorem': self.theorem,
            'version': self.version,
            'seed': self.seed,
            'params': jsonable(self.params),
            'graphs': self.graphs,
            'wall_time_s': self.wall_time_s,
            'passed': self.passed,
            'exhausted': self.exhausted,
            'rows': [{
                'claim': row.key,
                'statement': row.statement,
                'relation': row.relation,
                'expected': jsonable(row.expected),
                'computed': jsonable(row.computed),
                'status': row.status,
                'reason': row.reason,
                'provenance': row.provenance,
            } for row in self.rows],
        }

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    def to_text(self):
        lines = ['{0}: {1} ({2} rows, seed {3})'.format(self.theorem, 'PASS' if self.passed else 'FAIL',
                                                        len(self.rows), self.seed)]
        for row in self.rows:
            detail = '{0} {1} {2}'.format(jsonable(row.computed), _SYMBOLS[row.relation], jsonable(row.expected))
            if row.reason:
                detail += ' ({0})'.format(row.reason)
            lines.append('  [{0}] {1}: {2}'.format(row.status, row.key, detail))
        return '\n'.join(lines) + '\n'


class _Recorder(object):

    def __init__(self, budget):
        self.budget = budget
        self.rows = []
        self.graphs = {}
        self.exhausted = False

    def graph(self, name, g):
        self.graphs[name] = graph_hash(g)

    def check(self, key, computed, expected=None, label=None):
        claim = CLAIMS[key]
        if expected is None:
            expected = claim.expected
        row_key = key if label is None else '{0}[{1}]'.format(key, label)
        verdict = decide(claim.relation, computed, expected)
        if verdict is None:
            status, reason = FAIL, 'undecided at the working precision'
        else:
            status, reason = (PASS, None) if verdict else (FAIL, None)
        self.rows.append(Row(row_key, claim.statement, claim.relation, expected, computed, status, reason,
                             claim.provenance))
        return verdict

    def skip(self, key, reason, label=None, exhausted=False):
        claim = CLAIMS[key]
        expected = claim.expected
        row_key = key if label is None else '{0}[{1}]'.format(key, label)
        self.rows.append(Row(row_key, claim.statement, claim.relation, expected, None, SKIPPED, reason,
                             claim.provenance))
        self.exhausted = self.exhausted or exhausted

    def undecided(self, key, reason, label=None):
        """A claim the solver could not settle; it counts as a failure."""
        claim = CLAIMS[key]
        row_key = key if label is None else '{0}[{1}]'.format(key, label)
        self.rows.append(Row(row_key, claim.statement, claim.relation, claim.expected, None, FAIL, reason,
                             claim.provenance))

    def attempt(self, keys, fn, label=None):
        """Run ``fn``; on budget or limit exhaustion mark every claim in ``keys`` skipped."""
        try:
            return fn()
        except (BudgetExhausted, EnumerationOverflow) as e:
            logging.warning('{0}: {1}'.format(keys[0], e))
            for key in keys:
                self.skip(key, str(e), label, exhausted=True)
            return None


def battery(full=False):
    """``(name, graph)`` pairs: paths, cycles, cliques, Petersen and U(4,3); U(5,3) with ``full``."""
    graphs = [('P4', path_graph(4))]
    graphs += [('C{0}'.format(n), cycle_graph(n)) for n in range(4, 10)]
    graphs += [('K{0}'.format(n), complete_graph(n)) for n in range(2, 7)]
    graphs += [('petersen', petersen_graph()), ('U(4,3)', universal_undirected(4, 3))]
    if full:
        graphs.append(('U(5,3)', universal_undirected(5, 3)))
    return graphs


def _vertex_sample(rng, n, count=3):
    return sorted(int(v) for v in rng.choice(n, size=min(count, n), replace=False))


def recipe_unicolor(rec, m=5, k=3, max_colors=None):
    g = universal_undirected(m, k)
    rec.graph('U({0},{1})'.format(m, k), g)
    classes = rec.attempt(['unicolor.classes', 'unicolor.natural'],
                          lambda: enumerate_local_colorings(g, k, max_colors or g.n, budget=rec.budget))
    if classes is None:
        return
    rec.check('unicolor.classes', len(classes))
    natural = natural_coloring(m, k)
    rec.check('unicolor.natural', any(c.same_partition(natural) for c in classes))


def recipe_k1k(rec, k=3):
    m = k + 1
    g = universal_undirected(m, k)
    rec.graph('U({0},{1})'.format(m, k), g)
    classes = rec.attempt(['k1k.classes', 'k1k.natural', 'k1k.proper'],
                          lambda: enumerate_local_colorings(g, k, g.n, budget=rec.budget))
    if classes is None:
        return
    rec.check('k1k.classes', len(classes), k + 2)
    natural = natural_coloring(m, k)
    rec.check('k1k.natural', any(c.same_partition(natural) for c in classes))
    others = [c for c in classes if not c.same_partition(natural)]
    rec.check('k1k.proper', all(c.num_colors == k for c in others))


def recipe_gap1(rec, skip_psi=False):
    g, _ = counterexample_graph()
    rec.graph('gap1', g)
    if skip_psi:
        rec.skip('gap1.psi', 'skipped on request')
        rec.skip('gap1.witness', 'skipped on request')
    else:
        found = rec.attempt(['gap1.psi', 'gap1.witness'], lambda: local_chromatic(g, rec.budget))
        if found is not None:
            psi, witness = found
            rec.check('gap1.psi', psi)
            rec.check('gap1.witness', locality(g, witness).max)
    certificates = counterexample_certificates(g)
    for key, (d, c) in zip(['gap1.cert_xy', 'gap1.cert_yx'], certificates):
        rec.check(key, verify_orientation_certificate(d, c, 3))
    rec.check('gap1.cover', len(uncovered_patterns(g, [d for d, _ in certificates])))
    lex = rec.attempt(['gap1.lex'], lambda: directed_local_chromatic(PartialOrientation.lexicographic(g),
                                                                     rec.budget))
    if lex is not None:
        rec.check('gap1.lex', lex[0])
    bounds = rec.attempt(['gap1.psi_d_max'], lambda: directed_local_chromatic_max(
        g, 'certificates', certificates, rec.budget))
    if bounds is not None:
        rec.check('gap1.psi_d_max', bounds.lower if bounds.exact else (bounds.lower, bounds.upper))


def recipe_ize(rec, seed, full=False):
    rng = np.random.default_rng(seed)
    for name, g in battery(full):
        rec.graph(name, g)
        chi = fractional_chromatic(g)
        for v0 in _vertex_sample(rng, g.n):
            cert = tight_independent_set(g, v0, chi)
            ok = v0 in cert.a0 and is_independent(g, cert.a0) and cert.chi_star == chi.value
            rec.check('ize.tight', cert.tightness if ok else 'malformed certificate',
                      label='{0},v0={1}'.format(name, v0))
    if not full:
        rec.skip('ize.tight', 'U(5,3) runs only with --full', label='U(5,3)')


def recipe_frakceq(rec, seed, full=False):
    rng = np.random.default_rng(seed)
    for name, g in battery(full):
        rec.graph(name, g)
        chi = fractional_chromatic(g)
        for v0 in _vertex_sample(rng, g.n):
            label = '{0},v0={1}'.format(name, v0)
            report = verify_frakceq(g, v0, tight_independent_set(g, v0, chi))
            rec.check('frakceq.equal', report.psi_d_star, report.chi_star, label)
            rec.check('frakceq.seen', report.seen_in_a0, report.chi_star - 1, label)
            rec.check('frakceq.outward', report.outward, label=label)
    if not full:
        for key in ('frakceq.equal', 'frakceq.seen', 'frakceq.outward'):
            rec.skip(key, 'U(5,3) runs only with --full', label='U(5,3)')


def recipe_ratio_a(rec, seed, count=100, max_n=9, density=0.3):
    rng = np.random.default_rng(seed)
    named = [('dC3', directed_cycle(3)), ('dC5', directed_cycle(5))]
    for name, d in named:
        rec.graph(name, d)
        try:
            report = verify_ratio(d)
        except SolverError as e:
            rec.undecided('ratio-a.bound', str(e), name)
            continue
        rec.check('ratio-a.bound', report.chi_star, report.bound, name)
    violations = arcless = undecided = 0
    for i in range(count):
        n = int(rng.integers(2, max_n + 1))
        d = random_digraph(n, density, seed + i)
        if not d.arc_count():
            arcless += 1
            continue
        try:
            holds = verify_ratio(d).holds
        except SolverError as e:
            undecided += 1
            logging.warning('ratio-a: random digraph {0}: {1}'.format(i, e))
            continue
        if not holds:
            violations += 1
            logging.warning('ratio-a: random digraph {0} violates the bound'.format(i))
    logging.info('ratio-a: {0} random digraphs, {1} without arcs'.format(count, arcless))
    rec.check('ratio-a.violations', violations)
    rec.check('ratio-a.undecided', undecided)


def recipe_ratio_b(rec, m=None, k=3, h=None, r=None):
    if h is None and r is None:
        m = 5 if m is None else m
        d = universal_directed(m, k)
        rec.graph('U_d({0},{1})'.format(m, k), d)
        bounds = universal_directed_bounds(m, k)
        alpha, _ = max_independent_set(d.base)
        rec.check('ratio-b.alpha', alpha, bounds.alpha)
        chi_star = fractional_chromatic(d.base).value
        rec.check('ratio-b.chi_star', chi_star, Fraction(bounds.vertices, alpha))
        rec.check('ratio-b.power', chi_star, bounds.power_bound)
        rec.check('ratio-b.asymptotic', chi_star, bounds.asymptotic_bound)
        rec.check('ratio-b.upper', chi_star, bounds.ratio_bound)
        found = rec.attempt(['ratio-b.psi_d'], lambda: directed_local_chromatic(d, rec.budget))
        if found is not None:
            rec.check('ratio-b.psi_d', found[0], k)
        return
    h, r = 5 if h is None else h, 2 if r is None else r
    m = 6 if m is None else m
    d = universal_multi(m, h, r)
    rec.graph('U_d({0},{1},{2})'.format(m, h, r), d)
    mc = natural_multicoloring(m, h, r)
    rec.check('ratio-b.multi_local', is_local_multicoloring(d, mc))
    certificate = psi_d_star_upper_from_multicoloring(d, mc)
    rec.check('ratio-b.multi_psi', local_weight(d, certificate.coloring), certificate.value)
    alpha, _ = max_independent_set(d.base)
    rec.check('ratio-b.multi_alpha', alpha, Bound(*alpha_universal_multi_upper_bound(m, h, r)))
    # every U_d(m,h,r) is vertex-transitive
    chi_star = vertex_transitive_chi_star(d.base)
    rec.check('ratio-b.multi_lower', chi_star, Bound(*multi_chi_star_lower_bound(m, h, r)))
    rec.check('ratio-b.multi_upper', chi_star, ratio_bound(Fraction(h, r)))


def recipe_sampler(rec, seed, trials=10 ** 5, workers=1):
    m, k = 5, 3
    d = universal_directed(m, k)
    rec.graph('U_d({0},{1})'.format(m, k), d)
    mc = MultiColoring.from_coloring(natural_coloring(m, k), k)
    gamma = optimal_gamma(mc.h, mc.r)
    report = estimate_membership(d, mc, SamplerConfig(gamma, trials, seed), workers=workers)
    rec.check('sampler.min_exact', min(report.exact))
    rec.check('sampler.max_exact', max(report.exact))
    rec.check('sampler.optimal_bound', report.optimal_bound)
    rec.check('sampler.oracle', all(membership_oracle(d, mc, gamma, v) == report.exact[v] for v in range(d.n)))
    rec.check('sampler.outliers', len(report.outliers))
    rec.check('sampler.independent', report.independent)
    rec.check('sampler.chi_bound', chi_upper_bound_from_sampler(d, mc, gamma), fractional_chromatic(d.base).value)


def recipe_ratio_e(rec, ks=(2, 3, 5, 10, 100)):
    e = Fraction(euler())
    ratios = []
    for k in ks:
        ratio = Fraction(ratio_bound(k).value) / k
        ratios.append(ratio)
        rec.check('ratio-e.below_e', ratio, e, 'k={0}'.format(k))
    rec.check('ratio-e.increasing', all(a < b for a, b in zip(ratios, ratios[1:])))
    rec.check('ratio-e.close', Fraction(ratio_bound(100).value) / 100)


def recipe_kk(rec, seed, max_ground=8, families_per_size=2000):
    sweep = kruskal_katona_sweep(max_ground, families_per_size, seed)
    logging.info('kk: {0} families, {1} shadow checks'.format(sweep.families, sweep.checks))
    rec.check('kk.violations', len(sweep.violations))


def recipe_lp_oracle(rec, seed, random_count=5, max_n=8):
    rng = np.random.default_rng(seed)
    graphs = [(name, g) for name, g in battery() if g.n <= max_n]
    for i in range(random_count):
        graphs.append(('G{0}'.format(i), random_graph(int(rng.integers(3, max_n + 1)), 0.4, seed + i)))
    for name, g in graphs:
        rec.graph(name, g)
        enumerated = fractional_chromatic(g, method='enumerate').value
        generated = fractional_chromatic(g, method='column_generation').value
        rec.check('lp-oracle.chi_star', generated, enumerated, name)
    digraphs = [('dC5', directed_cycle(5))]
    digraphs += [('lex-' + name, PartialOrientation.lexicographic(g)) for name, g in graphs if g.edges]
    for i in range(random_count):
        digraphs.append(('D{0}'.format(i), random_digraph(int(rng.integers(3, max_n + 1)), 0.3, seed + 100 + i)))
    for name, d in digraphs:
        enumerated = psi_d_star(d, method='enumerate').value
        generated = psi_d_star(d, method='column_generation').value
        rec.check('lp-oracle.psi_d_star', generated, enumerated, name)


RECIPES = {
    'gap1': recipe_gap1,
    'unicolor': recipe_unicolor,
    'k1k': recipe_k1k,
    'ize': recipe_ize,
    'frakceq': recipe_frakceq,
    'ratio-a': recipe_ratio_a,
    'ratio-b': recipe_ratio_b,
    'sampler': recipe_sampler,
    'ratio-e': recipe_ratio_e,
    'kk': recipe_kk,
    'lp-oracle': recipe_lp_oracle,
}

_SEEDED = ('ize', 'frakceq', 'ratio-a', 'sampler', 'kk', 'lp-oracle')


def run_recipe(theorem, params=None, seed=None, budget=None, timing=True):
    """Run one recipe.

    :param theorem: a key of :data:`RECIPES`.
    :param params: keyword arguments for the recipe.
    :param seed: master seed, ``LOCOCHROME_SEED`` or 1024 by default.
    :param budget: :class:`Budget` for the exact searches.
    :param timing: record the wall time; off gives byte-identical reports.
    :return: :class:`VerificationReport`.
    """
    if theorem not in RECIPES:
        raise ValueError(' unknown recipe `{0}`, expected one of {1} '.format(theorem, sorted(RECIPES)))
    params = dict(params or {})
    seed = default_seed() if seed is None else seed
    rec = _Recorder(budget)
    logging.info('verify {0}: params {1}, seed {2}'.format(theorem, params, seed))
    start = time.perf_counter()
    if theorem in _SEEDED:
        RECIPES[theorem](rec, seed, **params)
    else:
        RECIPES[theorem](rec, **params)
    elapsed = round(time.perf_counter() - start, 3) if timing else 0.0
    return VerificationReport(theorem, params, rec.rows, rec.graphs, seed, elapsed, rec.exhausted)
