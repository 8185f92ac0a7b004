# -*- coding:utf-8 -*-
"""
Exact rational simplex on a condensed (Tucker) tableau.

Solves ``maximize c.w subject to A w <= b, w >= 0`` over ``Fraction``. Rows
can be appended after a solve and the problem re-solved warm: a new violated
row breaks primal feasibility only, which the dual simplex repairs. Both
directions use Bland's smallest-index rule, so neither cycles.

Variable ids: structural variables are ``0..n-1``; the slack of row ``i`` is ``n + i``.

"""

import logging
from collections import namedtuple
from fractions import Fraction

from ..utils import SolverError

OPTIMAL = 'optimal'
UNBOUNDED = 'unbounded'
INFEASIBLE = 'infeasible'

DEFAULT_MAX_PIVOTS = 10 ** 6


class LPResult(namedtuple('LPResult', ['status', 'value', 'primal', 'duals', 'pivots'])):
    """ LPResult
    Args:
        status: ``'optimal'``, ``'unbounded'`` or ``'infeasible'``.
        value: optimal objective value (Fraction), ``None`` unless optimal.
        primal: list of structural variable values.
        duals: list of row dual values, non-negative at an optimum.
        pivots: pivots performed by the last :meth:`LinearProgram.solve`.
    """
    __slots__ = ()


class LinearProgram(object):
    """``maximize objective.w`` s.t. appended rows ``coeffs.w <= rhs`` and ``w >= 0``.

    :param objective: sequence of structural objective coefficients.
    :param max_pivots: pivot cap per :meth:`solve`; exceeding it raises :class:`SolverError`.
    """

    def __init__(self, objective, max_pivots=DEFAULT_MAX_PIVOTS):
        self.n = len(objective)
        self.max_pivots = max_pivots
        self.c = [Fraction(v) for v in objective]
        self.z = Fraction(0)
        self.A = []
        self.b = []
        self.nb_vars = list(range(self.n))
        self.b_vars = []
        # variable id -> ('basic', row) or ('nonbasic', column)
        self._where = {v: ('nonbasic', j) for j, v in enumerate(self.nb_vars)}

    @property
    def m(self):
        return len(self.b)

    def add_row(self, coeffs, rhs):
        """Append ``coeffs.w <= rhs`` and return its row index.

        :param coeffs: dense sequence of length ``n`` or a sparse ``{variable: coefficient}`` dict.
        :param rhs: right-hand side.
        """
        if isinstance(coeffs, dict):
            items = coeffs.items()
        else:
            if len(coeffs) != self.n:
                raise ValueError(' row has {0} coefficients, expected {1} '.format(len(coeffs), self.n))
            items = enumerate(coeffs)
        row = [Fraction(0)] * self.n
        rhs = Fraction(rhs)
        for var, a in items:
            if not a:
                continue
            a = Fraction(a)
            kind, pos = self._where[var]
            if kind == 'nonbasic':
                row[pos] += a
            else:
                rhs -= a * self.b[pos]
                basic_row = self.A[pos]
                for l in range(self.n):
                    if basic_row[l]:
                        row[l] -= a * basic_row[l]
        # one slack per row ever added, so the next slack id is n + m
        slack = self.n + self.m
        self.A.append(row)
        self.b.append(rhs)
        self.b_vars.append(slack)
        self._where[slack] = ('basic', self.m - 1)
        return slack - self.n

    def pivot(self, i, j):
        A, b, c = self.A, self.b, self.c
        piv = A[i][j]
        delta = c[j] / piv
        row_i = A[i]
        if delta:
            for l in range(self.n):
                if row_i[l]:
                    c[l] -= delta * row_i[l]
            self.z += delta * b[i]
        c[j] = -delta
        for l in range(self.n):
            row_i[l] = 1 / piv if l == j else row_i[l] / piv
        b[i] /= piv
        for k in range(self.m):
            if k == i:
                continue
            f = A[k][j]
            if not f:
                continue
            row_k = A[k]
            for l in range(self.n):
                if l == j:
                    row_k[l] = -f / piv
                elif row_i[l]:
                    row_k[l] -= f * row_i[l]
            b[k] -= f * b[i]
        self.nb_vars[j], self.b_vars[i] = self.b_vars[i], self.nb_vars[j]
        self._where[self.b_vars[i]] = ('basic', i)
        self._where[self.nb_vars[j]] = ('nonbasic', j)

    def _primal_step(self):
        try:
            _, j = min((self.nb_vars[j], j) for j in range(self.n) if self.c[j] > 0)
        except ValueError:
            return OPTIMAL
        try:
            _, _, i = min((self.b[i] / self.A[i][j], self.b_vars[i], i) for i in range(self.m) if self.A[i][j] > 0)
        except ValueError:
            return UNBOUNDED
        self.pivot(i, j)
        return None

    def _dual_step(self):
        try:
            _, i = min((self.b_vars[i], i) for i in range(self.m) if self.b[i] < 0)
        except ValueError:
            return OPTIMAL
        try:
            _, _, j = min((self.c[j] / self.A[i][j], self.nb_vars[j], j) for j in range(self.n) if self.A[i][j] < 0)
        except ValueError:
            return INFEASIBLE
        self.pivot(i, j)
        return None

    def solve(self):
        """Run the primal simplex from a feasible basis, or the dual simplex from a dual feasible one.

        :return: :class:`LPResult`.
        """
        primal_feasible = all(v >= 0 for v in self.b)
        dual_feasible = all(v <= 0 for v in self.c)
        if primal_feasible:
            step = self._primal_step
        elif dual_feasible:
            step = self._dual_step
        else:
            raise SolverError('no feasible starting basis: both primal and dual infeasible')
        pivots = 0
        status = None
        while status is None:
            status = step()
            if status is None:
                pivots += 1
                if pivots > self.max_pivots:
                    raise SolverError('simplex exceeded {0} pivots'.format(self.max_pivots))
        logging.debug('simplex: {0} after {1} pivots on {2} rows x {3} columns'.format(status, pivots, self.m, self.n))
        if status != OPTIMAL:
            return LPResult(status, None, None, None, pivots)
        return LPResult(status, self.z, self.primal_values(), self.dual_values(), pivots)

    def primal_values(self):
        values = [Fraction(0)] * self.n
        for i, v in enumerate(self.b_vars):
            if v < self.n:
                values[v] = self.b[i]
        return values

    def dual_values(self):
        duals = [Fraction(0)] * self.m
        for j, v in enumerate(self.nb_vars):
            if v >= self.n:
                duals[v - self.n] = -self.c[j]
        return duals

    @property
    def value(self):
        return self.z
