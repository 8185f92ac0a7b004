# -*- coding:utf-8 -*-
"""
Random independent sets from an h-local r-multi-coloring.

Every color joins the selected set ``C'`` independently with probability
``1 - gamma``. A vertex enters ``I`` when one of its colors is selected and
none of its out-neighbors' colors is. Then ``P[v in I] = (1 - gamma^r) gamma^|S_v|``
with ``S_v`` the colors of the out-neighbors of ``v``, and ``1 / min_v P[v in I]``
bounds χ* from above.

Draws come from a Philox counter-based generator keyed by the master seed,
with the trial index in the high counter words, so any trial can be replayed
alone and chunks of trials run on any number of workers with identical tallies.

"""

import logging
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor
from decimal import Decimal, localcontext
from fractions import Fraction
from math import sqrt

import numpy as np

from .bounds import DEFAULT_PRECISION, to_decimal
from .fractional import FractionalColoring, is_local_multicoloring
from ..graphs.core import VertexSet, as_digraph
from ..utils import default_seed, iter_bits

DEFAULT_CHUNK = 4096
ORACLE_MAX_COLORS = 20
OUTLIER_SIGMAS = 4


class SamplerConfig(namedtuple('SamplerConfig', ['gamma', 'trials', 'master_seed'])):
    """ SamplerConfig
    Args:
        gamma: probability in (0, 1) that a color stays unselected; Fraction or Decimal.
        trials: number of samples, at least 1.
        master_seed: non-negative integer key of the generator, ``LOCOCHROME_SEED`` or 1024 by default.
    """
    __slots__ = ()

    def __new__(cls, gamma, trials=10 ** 4, master_seed=None):
        if not isinstance(gamma, Decimal):
            gamma = Fraction(gamma)
        if not 0 < gamma < 1:
            raise ValueError(' `gamma` must lie strictly between 0 and 1 ')
        if trials < 1:
            raise ValueError(' `trials` must be at least 1 ')
        if master_seed is None:
            master_seed = default_seed()
        if master_seed < 0:
            raise ValueError(' `master_seed` must be non-negative ')
        return super(SamplerConfig, cls).__new__(cls, gamma, trials, master_seed)


class MembershipReport(namedtuple('MembershipReport', ['exact', 'empirical', 'bound', 'optimal_bound', 'stderr',
                                                       'violations', 'outliers', 'trials', 'independent'])):
    """ MembershipReport
    Args:
        exact: per-vertex closed-form P[v in I].
        empirical: per-vertex sample frequency.
        bound: (1 - gamma^r) gamma^(h-r), guaranteed for every vertex.
        optimal_bound: (h/r - 1)^(h/r - 1) / (h/r)^(h/r), the bound at the optimal gamma.
        stderr: per-vertex sqrt(p (1 - p) / trials) at the exact p.
        violations: vertices whose exact probability is below ``bound``.
        outliers: vertices whose frequency is more than 4 standard errors off.
        trials: number of samples.
        independent: whether every sampled set was independent.
    """
    __slots__ = ()


def _integer_root(n, r):
    if n < 0:
        return None
    low, high = 0, 1
    while high ** r <= n:
        high *= 2
    while low < high:
        mid = (low + high + 1) // 2
        if mid ** r <= n:
            low = mid
        else:
            high = mid - 1
    return low if low ** r == n else None


def optimal_gamma(h, r, precision=DEFAULT_PRECISION):
    """``(1 - r/h)^(1/r)``, a Fraction when the root is rational, else a Decimal.

    :param h: locality, greater than ``r``.
    :param r: colors per vertex, at least 1.
    """
    if r < 1 or r >= h:
        raise ValueError(' need 1 <= r < h, got h={0}, r={1} '.format(h, r))
    base = 1 - Fraction(r, h)
    num, den = _integer_root(base.numerator, r), _integer_root(base.denominator, r)
    if num is not None and den is not None:
        return Fraction(num, den)
    with localcontext() as ctx:
        ctx.prec = precision + 10
        value = (to_decimal(base).ln() / r).exp()
    with localcontext() as ctx:
        ctx.prec = precision
        return +value


def trial_generator(master_seed, trial_index):
    """The generator of one trial; draw ``j`` decides color ``j`` of the sorted palette."""
    return np.random.Generator(np.random.Philox(key=master_seed, counter=trial_index << 128))


def _color_uniforms(master_seed, first, count, m):
    return np.stack([trial_generator(master_seed, t).random(m) for t in range(first, first + count)]) \
        if count else np.zeros((0, m))


def _check_multicoloring(d, mc):
    if not is_local_multicoloring(d, mc, strict=True):
        raise ValueError(' multicoloring is not {0}-local with r={1} '.format(mc.h, mc.r))


def independent_set_for(d, mc, selected):
    """``I`` for the selected color set ``selected``."""
    d = as_digraph(d)
    hit = [bool(mc.sets[v] & selected) for v in range(d.n)]
    mask = 0
    for v in range(d.n):
        if hit[v] and not any(hit[w] for w in iter_bits(d.out_mask(v, 'exact'))):
            mask |= 1 << v
    return VertexSet(mask, d.n)


def sample_independent_set(d, mc, cfg, trial_index):
    """The independent set of trial ``trial_index``.

    :param d: fully forced :class:`PartialOrientation`.
    :param mc: h-local r-multi-coloring of ``d``.
    :param cfg: :class:`SamplerConfig`.
    :return: :class:`VertexSet`.
    """
    d = as_digraph(d)
    _check_multicoloring(d, mc)
    palette = mc.palette
    draws = trial_generator(cfg.master_seed, trial_index).random(len(palette))
    threshold = 1 - float(cfg.gamma)
    selected = frozenset(c for c, u in zip(palette, draws) if u < threshold)
    return independent_set_for(d, mc, selected)


def membership_probability_exact(d, mc, gamma, v):
    """``(1 - gamma^r) gamma^|S_v|`` with ``S_v`` the union of the colors of the out-neighbors of ``v``.

    Exact in Fraction when ``gamma`` is a Fraction.
    """
    d = as_digraph(d)
    seen = mc.union_of(d.out_mask(v, 'exact'))
    if seen & mc.sets[v]:
        raise ValueError(' vertex `{0}` shares a color with an out-neighbor '.format(v))
    if isinstance(gamma, Decimal):
        with localcontext() as ctx:
            ctx.prec = DEFAULT_PRECISION + 10
            return (1 - gamma ** mc.r) * gamma ** len(seen)
    gamma = Fraction(gamma)
    return (1 - gamma ** mc.r) * gamma ** len(seen)


def membership_oracle(d, mc, gamma, v):
    """P[v in I] by summing over all ``2^|C|`` selected color sets; at most 20 colors."""
    d = as_digraph(d)
    palette = mc.palette
    if len(palette) > ORACLE_MAX_COLORS:
        raise ValueError(' oracle enumerates at most {0} colors, got {1} '.format(ORACLE_MAX_COLORS, len(palette)))
    gamma = gamma if isinstance(gamma, Decimal) else Fraction(gamma)
    total = gamma * 0
    for code in range(1 << len(palette)):
        selected = frozenset(c for i, c in enumerate(palette) if code >> i & 1)
        if v in independent_set_for(d, mc, selected):
            k = len(selected)
            total += (1 - gamma) ** k * gamma ** (len(palette) - k)
    return total


def _bounds(mc, gamma):
    h, r = mc.h, mc.r
    if isinstance(gamma, Decimal):
        with localcontext() as ctx:
            ctx.prec = DEFAULT_PRECISION + 10
            guaranteed = (1 - gamma ** r) * gamma ** (h - r)
    else:
        guaranteed = (1 - gamma ** r) * gamma ** (h - r)
    q = Fraction(h, r)
    if q == 1:
        return guaranteed, Fraction(1)
    if q.denominator == 1:
        k = q.numerator
        return guaranteed, Fraction((k - 1) ** (k - 1), k ** k)
    with localcontext() as ctx:
        ctx.prec = DEFAULT_PRECISION + 10
        x = to_decimal(q)
        return guaranteed, ((x - 1) * (x - 1).ln() - x * x.ln()).exp()


def _incidence(d, mc):
    palette = mc.palette
    position = {c: i for i, c in enumerate(palette)}
    colors = np.zeros((d.n, len(palette)), dtype=np.int64)
    for v, s in enumerate(mc.sets):
        for c in s:
            colors[v, position[c]] = 1
    out = np.zeros((d.n, d.n), dtype=np.int64)
    adjacency = np.zeros((d.n, d.n), dtype=np.int64)
    for v in range(d.n):
        for w in iter_bits(d.out_mask(v, 'exact')):
            out[v, w] = 1
        for w in iter_bits(d.base.adjacency(v)):
            adjacency[v, w] = 1
    return colors, out, adjacency


def _tally_chunk(args):
    master_seed, first, count, threshold, colors, out, adjacency = args
    selected = (_color_uniforms(master_seed, first, count, colors.shape[1]) < threshold).astype(np.int64)
    hit = (selected @ colors.T) > 0
    blocked = (hit.astype(np.int64) @ out.T) > 0
    members = (hit & ~blocked).astype(np.int64)
    dependent = int(np.count_nonzero(((members @ adjacency) * members).sum(axis=1)))
    return members.sum(axis=0), dependent


def estimate_membership(d, mc, cfg, workers=1, chunk=DEFAULT_CHUNK):
    """Monte Carlo membership frequencies next to the closed form and the bound.

    :param d: fully forced :class:`PartialOrientation`.
    :param mc: h-local r-multi-coloring of ``d``.
    :param cfg: :class:`SamplerConfig`.
    :param workers: threads sampling chunks; the tallies do not depend on it.
    :param chunk: trials per chunk.
    :return: :class:`MembershipReport`.
    """
    d = as_digraph(d)
    _check_multicoloring(d, mc)
    colors, out, adjacency = _incidence(d, mc)
    threshold = 1 - float(cfg.gamma)
    jobs = [(cfg.master_seed, first, min(chunk, cfg.trials - first), threshold, colors, out, adjacency)
            for first in range(0, cfg.trials, chunk)]
    counts = np.zeros(d.n, dtype=np.int64)
    dependent = 0
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        for i, (chunk_counts, chunk_dependent) in enumerate(pool.map(_tally_chunk, jobs)):
            counts += chunk_counts
            dependent += chunk_dependent
            logging.debug('sampler: chunk {0}/{1} done'.format(i + 1, len(jobs)))
    exact = [membership_probability_exact(d, mc, cfg.gamma, v) for v in range(d.n)]
    bound, optimal_bound = _bounds(mc, cfg.gamma)
    empirical = [int(c) / cfg.trials for c in counts]
    stderr = [sqrt(float(p) * (1 - float(p)) / cfg.trials) for p in exact]
    violations = [v for v in range(d.n) if exact[v] < bound]
    outliers = [v for v in range(d.n) if abs(empirical[v] - float(exact[v])) > OUTLIER_SIGMAS * stderr[v]]
    logging.info('sampler: {0} trials, {1} violations, {2} outliers'.format(cfg.trials, len(violations), len(outliers)))
    return MembershipReport(exact, empirical, bound, optimal_bound, stderr, violations, outliers, cfg.trials,
                            dependent == 0)


def chi_upper_bound_from_sampler(d, mc, gamma):
    """``1 / min_v P[v in I]``, an upper bound on χ* of the underlying graph."""
    d = as_digraph(d)
    _check_multicoloring(d, mc)
    lowest = min(membership_probability_exact(d, mc, gamma, v) for v in range(d.n))
    return 1 / lowest


class IndependentSetDistribution(namedtuple('IndependentSetDistribution', ['graph', 'outcomes'])):
    """ IndependentSetDistribution
    Args:
        graph: :class:`Graph`.
        outcomes: list of ``(VertexSet, probability)`` with independent sets and probabilities summing to 1.
    """
    __slots__ = ()

    def membership(self, v):
        return sum((p for s, p in self.outcomes if v in s), Fraction(0))

    def min_membership(self):
        return min(self.membership(v) for v in range(self.graph.n))


def distribution_from_fractional_coloring(fc):
    """``P[I = A] = x_A / total``; every vertex is then in ``I`` with probability at least ``1 / total``."""
    total = fc.total_weight()
    if not total:
        raise ValueError(' fractional coloring has zero total weight ')
    return IndependentSetDistribution(fc.graph, [(s, w / total) for s, w in fc.items()])


def fractional_coloring_from_distribution(dist):
    """``x_A = P[I = A] / min_v P[v in I]``, a fractional coloring of total ``1 / min_v P[v in I]``."""
    lowest = dist.min_membership()
    if not lowest:
        raise ValueError(' some vertex is never in the random independent set ')
    return FractionalColoring(dist.graph, [(s, Fraction(p) / lowest) for s, p in dist.outcomes if s])
