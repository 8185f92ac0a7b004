# -*- coding:utf-8 -*-
"""
Line-oriented text formats for graphs, digraphs and colorings.

Graph file::

    c <comment>
    p lcn <n> <m_edges> <m_arcs>
    l <v> <label as compact JSON>
    e <u> <v>
    a <u> <v>

``e`` lines are free edges and ``a`` lines forced arcs; a bidirected pair is
two ``a`` lines. A file without ``a`` lines reads back as a :class:`Graph`,
anything else as a :class:`PartialOrientation`. Colorings use ``v <vertex>
<color>`` lines, multicolorings an ``h <h>`` header plus ``v <vertex> <c1>
<c2> ...`` lines, fractional colorings ``w <weight> <v1> <v2> ...`` lines.

"""

import hashlib
import json

from .graphs.core import Coloring, Graph, MultiColoring, PartialOrientation
from .utils import format_rational, parse_rational

HEADER_TAG = 'lcn'


class GraphFormatError(ValueError):
    """Raised for malformed input files; ``lineno`` is 1-based, or ``None`` for whole-file problems."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        super(GraphFormatError, self).__init__(message if lineno is None else 'line {0}: {1}'.format(lineno, message))


def _as_tuples(value):
    if isinstance(value, list):
        return tuple(_as_tuples(item) for item in value)
    return value


def encode_label(label):
    return json.dumps(label, separators=(',', ':'), ensure_ascii=False)


def decode_label(text):
    return _as_tuples(json.loads(text))


def _records(text):
    """``(lineno, tag, rest)`` for every non-blank, non-comment line."""
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.split(None, 1)[0] == 'c':
            continue
        parts = stripped.split(None, 1)
        yield lineno, parts[0], parts[1] if len(parts) > 1 else ''


def _ints(rest, count, lineno, tag):
    fields = rest.split()
    if count is not None and len(fields) != count:
        raise GraphFormatError('`{0}` line expects {1} fields, got {2}'.format(tag, count, len(fields)), lineno)
    try:
        return [int(field) for field in fields]
    except ValueError:
        raise GraphFormatError('`{0}` line has a non-integer field'.format(tag), lineno)


def _vertex(v, n, lineno):
    if not 0 <= v < n:
        raise GraphFormatError('vertex {0} out of range [0, {1})'.format(v, n), lineno)
    return v


def format_graph(g):
    """Serialize a :class:`Graph` or :class:`PartialOrientation`; equal inputs give identical text."""
    if isinstance(g, PartialOrientation):
        base, arcs = g.base, g.arcs()
        free = g.free_edges()
    else:
        base, arcs, free = g, [], list(g.edges)
    lines = ['p {0} {1} {2} {3}'.format(HEADER_TAG, base.n, len(free), len(arcs))]
    if base.labels != tuple(range(base.n)):
        lines += ['l {0} {1}'.format(v, encode_label(label)) for v, label in enumerate(base.labels)]
    lines += ['e {0} {1}'.format(u, v) for u, v in free]
    lines += ['a {0} {1}'.format(u, v) for u, v in arcs]
    return '\n'.join(lines) + '\n'


def parse_graph(text):
    """Inverse of :func:`format_graph`.

    :return: :class:`Graph` when there are no arcs, else :class:`PartialOrientation`.
    :raises GraphFormatError: with the offending line number.
    """
    header = None
    labels, arcs = {}, []
    free, forced = set(), set()
    for lineno, tag, rest in _records(text):
        if header is None:
            if tag != 'p':
                raise GraphFormatError('expected `p {0} <n> <m_edges> <m_arcs>` header'.format(HEADER_TAG), lineno)
            fields = rest.split()
            if len(fields) != 4 or fields[0] != HEADER_TAG:
                raise GraphFormatError('malformed header, expected `p {0} <n> <m_edges> <m_arcs>`'.format(HEADER_TAG),
                                       lineno)
            header = [lineno] + _ints(' '.join(fields[1:]), 3, lineno, 'p')
            if min(header[1:]) < 0:
                raise GraphFormatError('header counts must be non-negative', lineno)
            continue
        n = header[1]
        if tag == 'p':
            raise GraphFormatError('duplicate header', lineno)
        elif tag == 'l':
            parts = rest.split(None, 1)
            if len(parts) != 2:
                raise GraphFormatError('`l` line expects a vertex and a label', lineno)
            v = _vertex(_ints(parts[0], 1, lineno, 'l')[0], n, lineno)
            if v in labels:
                raise GraphFormatError('vertex {0} labeled twice'.format(v), lineno)
            try:
                labels[v] = decode_label(parts[1])
            except ValueError:
                raise GraphFormatError('label is not valid JSON', lineno)
        elif tag in ('e', 'a'):
            u, v = (_vertex(x, n, lineno) for x in _ints(rest, 2, lineno, tag))
            if u == v:
                raise GraphFormatError('self-loop at vertex {0}'.format(u), lineno)
            edge = (min(u, v), max(u, v))
            if tag == 'e' and edge in free:
                raise GraphFormatError('parallel edge {0}'.format(edge), lineno)
            if tag == 'a' and (u, v) in arcs:
                raise GraphFormatError('duplicate arc ({0}, {1})'.format(u, v), lineno)
            if edge in (forced if tag == 'e' else free):
                raise GraphFormatError('edge {0} is both free and forced'.format(edge), lineno)
            if tag == 'e':
                free.add(edge)
            else:
                forced.add(edge)
                arcs.append((u, v))
        else:
            raise GraphFormatError('unknown line tag `{0}`'.format(tag), lineno)
    if header is None:
        raise GraphFormatError('missing `p {0}` header'.format(HEADER_TAG))
    header_line, n, m_edges, m_arcs = header
    if len(free) != m_edges or len(arcs) != m_arcs:
        raise GraphFormatError('header announces {0} edges and {1} arcs, found {2} and {3}'.format(
            m_edges, m_arcs, len(free), len(arcs)), header_line)
    if labels and len(labels) != n:
        raise GraphFormatError('labels given for {0} of {1} vertices'.format(len(labels), n))
    try:
        base = Graph(n, sorted(free | forced), [labels[v] for v in range(n)] if labels else None)
    except ValueError as e:
        raise GraphFormatError(str(e).strip())
    return PartialOrientation(base, arcs) if arcs else base


def format_coloring(c):
    return ''.join('v {0} {1}\n'.format(v, color) for v, color in enumerate(c.colors))


def _vertex_map(text, tag, n):
    rows = {}
    for lineno, line_tag, rest in _records(text):
        if line_tag != tag:
            continue
        fields = _ints(rest, None, lineno, tag)
        if len(fields) < 2:
            raise GraphFormatError('`{0}` line expects a vertex and its colors'.format(tag), lineno)
        v = fields[0] if n is None else _vertex(fields[0], n, lineno)
        if v in rows:
            raise GraphFormatError('vertex {0} colored twice'.format(v), lineno)
        if any(c < 0 for c in fields[1:]):
            raise GraphFormatError('colors must be non-negative', lineno)
        rows[v] = fields[1:]
    return rows


def _check_total(rows, n):
    count = n if n is not None else len(rows)
    missing = [v for v in range(count) if v not in rows]
    if missing or len(rows) != count:
        raise GraphFormatError('coloring is not total over vertices 0..{0}, e.g. vertex {1} is missing'.format(
            count - 1, missing[0] if missing else count))


def parse_coloring(text, n=None):
    """:param n: vertex count to check against; by default the vertices must be exactly ``0..len-1``.
    :return: :class:`Coloring`.
    """
    for lineno, tag, _ in _records(text):
        if tag != 'v':
            raise GraphFormatError('unknown line tag `{0}`'.format(tag), lineno)
    rows = _vertex_map(text, 'v', n)
    for v, colors in rows.items():
        if len(colors) != 1:
            raise GraphFormatError('vertex {0} has {1} colors, expected 1'.format(v, len(colors)))
    _check_total(rows, n)
    return Coloring(rows[v][0] for v in range(len(rows)))


def format_multicoloring(mc):
    lines = ['h {0}'.format(mc.h)]
    lines += ['v {0} {1}'.format(v, ' '.join(str(c) for c in sorted(s))) for v, s in enumerate(mc.sets)]
    return '\n'.join(lines) + '\n'


def parse_multicoloring(text, n=None):
    """A plain coloring file reads as a 1-multicoloring with ``h`` given by its ``h`` line (default 2).

    :return: :class:`MultiColoring`.
    """
    h = None
    for lineno, tag, rest in _records(text):
        if tag == 'h':
            if h is not None:
                raise GraphFormatError('duplicate `h` line', lineno)
            h = _ints(rest, 1, lineno, 'h')[0]
        elif tag != 'v':
            raise GraphFormatError('unknown line tag `{0}`'.format(tag), lineno)
    rows = _vertex_map(text, 'v', n)
    _check_total(rows, n)
    sizes = set(len(set(colors)) for colors in rows.values())
    if len(sizes) > 1:
        raise GraphFormatError('vertices carry different numbers of colors: {0}'.format(sorted(sizes)))
    r = sizes.pop() if sizes else 1
    try:
        return MultiColoring([rows[v] for v in range(len(rows))], r, h if h is not None else max(2, r))
    except ValueError as e:
        raise GraphFormatError(str(e).strip())


def format_fractional(fc):
    return ''.join('w {0} {1}\n'.format(format_rational(w), ' '.join(str(v) for v in s))
                   for s, w in fc.items())


def parse_fractional(text, graph):
    """:param graph: the :class:`Graph` the weights live on.
    :return: :class:`FractionalColoring`.
    """
    from .solvers.fractional import FractionalColoring

    weights = []
    for lineno, tag, rest in _records(text):
        if tag != 'w':
            raise GraphFormatError('unknown line tag `{0}`'.format(tag), lineno)
        fields = rest.split()
        if not fields:
            raise GraphFormatError('`w` line expects a weight', lineno)
        try:
            weight = parse_rational(fields[0])
        except (ValueError, ZeroDivisionError):
            raise GraphFormatError('weight `{0}` is not a rational'.format(fields[0]), lineno)
        vertices = [_vertex(v, graph.n, lineno) for v in _ints(' '.join(fields[1:]), None, lineno, 'w')]
        weights.append((vertices, weight))
    try:
        return FractionalColoring(graph, weights)
    except ValueError as e:
        raise GraphFormatError(str(e).strip())


def content_hash(text):
    return 'sha256:' + hashlib.sha256(text.encode('utf-8')).hexdigest()


def graph_hash(g):
    """Hash of the canonical serialization, the handle reports use for graphs."""
    return content_hash(format_graph(g))


def _read(path):
    with open(path, 'r', encoding='utf-8') as f:
        return f.read()


def _write(path, text):
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(text)


def read_graph(path):
    return parse_graph(_read(path))


def write_graph(path, g):
    _write(path, format_graph(g))


def read_coloring(path, n=None):
    return parse_coloring(_read(path), n)


def write_coloring(path, c):
    _write(path, format_coloring(c))


def read_multicoloring(path, n=None):
    return parse_multicoloring(_read(path), n)


def write_multicoloring(path, mc):
    _write(path, format_multicoloring(mc))


def read_fractional(path, graph):
    return parse_fractional(_read(path), graph)


def write_fractional(path, fc):
    _write(path, format_fractional(fc))
