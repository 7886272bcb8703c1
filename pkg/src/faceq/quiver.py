"""Finite quivers and their paths.

Paths are read left-to-right: in a path p1 p2 the target of p1 is the
source of p2.  Trivial paths e_i have length zero and carry their vertex.
Path enumeration is lexicographic in the arrow index sequence (and by
vertex index in length zero), which fixes every basis order downstream.
"""

from typing import NamedTuple

from .errors import ParseError


class Arrow(NamedTuple):
    name: str
    source: int
    target: int


class Path(NamedTuple):
    """A path: start vertex plus the sequence of arrow indices."""
    start: int
    arrows: tuple

    @property
    def length(self):
        return len(self.arrows)


class Quiver:
    def __init__(self, vertices, arrows):
        self.vertices = tuple(vertices)
        self.arrows = tuple(Arrow(*a) for a in arrows)
        if len(set(self.vertices)) != len(self.vertices):
            raise ParseError("duplicate vertex labels")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ParseError("duplicate arrow names")
        for a in self.arrows:
            if not (0 <= a.source < len(self.vertices) and 0 <= a.target < len(self.vertices)):
                raise ParseError(f"arrow {a.name} has an endpoint outside the vertex list")
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self.arrow_index = {a.name: i for i, a in enumerate(self.arrows)}
        # outgoing arrow indices per vertex, ascending
        self.out_arrows = [[] for _ in self.vertices]
        for i, a in enumerate(self.arrows):
            self.out_arrows[a.source].append(i)

    def trivial_path(self, vertex):
        return Path(vertex, ())

    def arrow_path(self, arrow_idx):
        return Path(self.arrows[arrow_idx].source, (arrow_idx,))

    def path_source(self, p):
        return p.start

    def path_target(self, p):
        if not p.arrows:
            return p.start
        return self.arrows[p.arrows[-1]].target

    def path_label(self, p):
        """Text form: arrow names joined by '.', or 'e:<label>' when trivial."""
        if not p.arrows:
            return f"e:{self.vertices[p.start]}"
        return ".".join(self.arrows[i].name for i in p.arrows)

    def __eq__(self, other):
        return (isinstance(other, Quiver) and self.vertices == other.vertices
                and self.arrows == other.arrows)

    def __repr__(self):
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"


def parse_quiver(doc):
    """Build a Quiver from a parsed document (dict with vertices/arrows lists).

    Vertex and arrow order is preserved exactly as listed.  Duplicates and
    dangling endpoint references raise ParseError naming the offender.
    """
    if not isinstance(doc, dict):
        raise ParseError("quiver document must be an object")
    if "vertices" not in doc:
        raise ParseError("quiver document is missing 'vertices'")
    vertices = doc["vertices"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ParseError("'vertices' must be a list of strings")
    if len(set(vertices)) != len(vertices):
        dup = next(v for i, v in enumerate(vertices) if v in vertices[:i])
        raise ParseError(f"duplicate vertex label {dup!r}")
    index = {v: i for i, v in enumerate(vertices)}
    arrows = []
    seen = set()
    for entry in doc.get("arrows", []):
        if not isinstance(entry, dict):
            raise ParseError("each arrow must be an object with name/source/target")
        try:
            name, source, target = entry["name"], entry["source"], entry["target"]
        except KeyError as missing:
            raise ParseError(f"arrow entry is missing key {missing}") from None
        if name in seen:
            raise ParseError(f"duplicate arrow name {name!r}")
        seen.add(name)
        if source not in index:
            raise ParseError(f"arrow {name!r} references unknown source vertex {source!r}")
        if target not in index:
            raise ParseError(f"arrow {name!r} references unknown target vertex {target!r}")
        arrows.append((name, index[source], index[target]))
    return Quiver(vertices, arrows)


def enumerate_paths(q, length):
    """All paths of the given length, lexicographic in the arrow sequence."""
    if length == 0:
        return [q.trivial_path(v) for v in range(len(q.vertices))]
    paths = []

    def extend(prefix, at):
        if len(prefix) == length:
            paths.append(Path(q.arrows[prefix[0]].source, tuple(prefix)))
            return
        for nxt in q.out_arrows[at]:
            prefix.append(nxt)
            extend(prefix, q.arrows[nxt].target)
            prefix.pop()

    for first in range(len(q.arrows)):
        extend([first], q.arrows[first].target)
    return paths


def compose_paths(q, a, b):
    """Concatenation ab when t(a) = s(b), else None."""
    if q.path_target(a) != q.path_source(b):
        return None
    return Path(a.start, a.arrows + b.arrows)


def opposite_quiver(q):
    """Same vertices; every arrow reversed and renamed with a '*' suffix."""
    return Quiver(q.vertices, [(a.name + "*", a.target, a.source) for a in q.arrows])


def double_quiver(q):
    """Original arrows followed by their reverses p*."""
    arrows = [tuple(a) for a in q.arrows]
    arrows += [(a.name + "*", a.target, a.source) for a in q.arrows]
    return Quiver(q.vertices, arrows)


def star_path(q, p):
    """Reversal a* = p_l* ... p_1*, read as a path of opposite_quiver(q).

    Arrow indices are shared between q and its opposite, so only the
    sequence flips; the start of a* is the target of a.
    """
    return Path(q.path_target(p), tuple(reversed(p.arrows)))


def adjacency_matrix(q):
    n = len(q.vertices)
    mat = [[0] * n for _ in range(n)]
    for a in q.arrows:
        mat[a.source][a.target] += 1
    return mat


def path_count(q, length):
    """Number of paths of a given length via adjacency matrix powers."""
    n = len(q.vertices)
    if length == 0:
        return n
    mat = adjacency_matrix(q)
    power = [row[:] for row in mat]
    for _ in range(length - 1):
        power = [[sum(power[i][k] * mat[k][j] for k in range(n)) for j in range(n)]
                 for i in range(n)]
    return sum(sum(row) for row in power)
