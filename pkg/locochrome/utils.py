# -*- coding:utf-8 -*-
"""
Shared plumbing: error types, solver budgets, environment overrides,
rational formatting and the PyPI version check.

"""

import json
import logging
import os
import time
from collections import namedtuple
from fractions import Fraction
from threading import Thread

import requests

try:
    from packaging.version import parse
except ImportError:
    from pip._vendor.packaging.version import parse

DEFAULT_SEED = 1024
DEFAULT_ENUMERATION_LIMIT = 10 ** 7
DEFAULT_CLASS_CAP = 10 ** 6

SEED_ENV = 'LOCOCHROME_SEED'
BUDGET_ENV = 'LOCOCHROME_BUDGET_MS'
NO_VERSION_CHECK_ENV = 'LOCOCHROME_NO_VERSION_CHECK'


class EnumerationOverflow(RuntimeError):
    """Raised when an enumeration produces more items than its ``limit``."""

    def __init__(self, what, limit):
        self.what = what
        self.limit = limit
        super(EnumerationOverflow, self).__init__('{0} exceeded the limit of {1}'.format(what, limit))


class BudgetExhausted(RuntimeError):
    """Raised by an exact solver that ran out of budget.

    The best bounds found so far travel with the exception: the true value lies
    in ``[lower, upper]`` and ``witness`` attains ``upper`` (or is ``None``).
    """

    def __init__(self, what, lower, upper=None, witness=None):
        self.what = what
        self.lower = lower
        self.upper = upper
        self.witness = witness
        super(BudgetExhausted, self).__init__(
            '{0}: budget exhausted, value unknown in [{1}, {2}]'.format(what, lower, '?' if upper is None else upper))


class SolverError(RuntimeError):
    pass


class Budget(namedtuple('Budget', ['time_ms', 'work_units'])):
    """ Budget
    Args:
        time_ms: wall-clock allowance in milliseconds, ``None`` for unlimited.
        work_units: allowance in search nodes, ``None`` for unlimited. Counting
            work units is the reproducible alternative to wall-clock time.
    """
    __slots__ = ()

    def __new__(cls, time_ms=None, work_units=None):
        if time_ms is not None and time_ms <= 0:
            raise ValueError(' `time_ms` must be positive or None ')
        if work_units is not None and work_units <= 0:
            raise ValueError(' `work_units` must be positive or None ')
        return super(Budget, cls).__new__(cls, time_ms, work_units)

    @classmethod
    def from_env(cls):
        value = os.environ.get(BUDGET_ENV)
        if not value:
            return cls()
        return cls(time_ms=int(value))

    def meter(self, what):
        return BudgetMeter(self, what)


UNLIMITED = Budget()


class BudgetMeter(object):
    """Counts search nodes against a :class:`Budget`."""

    _CLOCK_EVERY = 1024

    def __init__(self, budget, what):
        self.budget = budget if budget is not None else UNLIMITED
        self.what = what
        self.nodes = 0
        self._deadline = None
        if self.budget.time_ms is not None:
            self._deadline = time.monotonic() + self.budget.time_ms / 1000.0

    def tick(self):
        """Return ``False`` once the budget is spent."""
        self.nodes += 1
        if self.budget.work_units is not None and self.nodes > self.budget.work_units:
            return False
        if self._deadline is not None and self.nodes % self._CLOCK_EVERY == 0:
            return time.monotonic() < self._deadline
        return True


def default_seed():
    value = os.environ.get(SEED_ENV)
    return int(value) if value else DEFAULT_SEED


def format_rational(value):
    """``Fraction(5, 2)`` -> ``'5/2'``, integers without a denominator."""
    return str(Fraction(value))


def parse_rational(text):
    return Fraction(text.strip())


def iter_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask):
    return bin(mask).count('1')


def check_version(version):
    """Return version of package on pypi.python.org using json."""

    def check(version):
        try:
            url_pattern = 'https://pypi.python.org/pypi/locochrome/json'
            req = requests.get(url_pattern, timeout=5)
            latest_version = parse('0')
            version = parse(version)
            if req.status_code == requests.codes.ok:
                j = json.loads(req.text.encode('utf-8'))
                releases = j.get('releases', [])
                for release in releases:
                    ver = parse(release)
                    if ver.is_prerelease or ver.is_postrelease:
                        continue
                    latest_version = max(latest_version, ver)
                if latest_version > version:
                    logging.warning(
                        '\nlocochrome version {0} detected. Your version is {1}.\nUse `pip install -U locochrome` to upgrade.'.format(
                            latest_version, version))
        except Exception:
            logging.info("Please check the latest version manually on https://pypi.org/project/locochrome/#history")
            return

    if os.environ.get(NO_VERSION_CHECK_ENV):
        return
    thread = Thread(target=check, args=(version,))
    thread.daemon = True
    thread.start()
