"""Quiver presentations: the text DSL, compilation to an Algebra, Nakayama algebras.

Paths are written left to right: ``x*y`` means "x, then y". As algebra
elements this path is the product ``y x``, so an arrow ``x: u -> v`` satisfies
``x = e_v x e_u`` and left modules are representations of the quiver.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from algebras.algebra import Algebra, Arrow, Vector
from exactlin import matrix as ml
from exactlin.field import FieldSpec
from exactlin.matrix import Subspace
from utils.utils import (
    DslSyntaxError,
    InvalidKupischSeries,
    NonParallelRelation,
    NotAdmissible,
    UnknownName,
)

logger = logging.getLogger(__name__)

Path = Tuple[str, ...]
Term = Tuple[Fraction, Path]


@dataclass(frozen=True)
class Quiver:
    vertices: Tuple[str, ...]
    arrows: Tuple[Tuple[str, str, str], ...]   # (name, source, target)

    def arrow_map(self) -> Dict[str, Tuple[str, str]]:
        return {name: (s, t) for name, s, t in self.arrows}

    def endpoints(self, path: Path) -> Tuple[str, str]:
        amap = self.arrow_map()
        return amap[path[0]][0], amap[path[-1]][1]


@dataclass(frozen=True)
class RelationSet:
    relations: Tuple[Tuple[Term, ...], ...]

    def __len__(self) -> int:
        return len(self.relations)


@dataclass(frozen=True)
class KupischSeries:
    lengths: Tuple[int, ...]
    shape: str = "linear"   # "linear" or "cyclic"

    def __post_init__(self):
        if self.shape not in ("linear", "cyclic"):
            raise InvalidKupischSeries(f"shape must be 'linear' or 'cyclic', got {self.shape!r}")

    def check(self) -> None:
        """Raise InvalidKupischSeries unless the series is admissible."""
        c = self.lengths
        n = len(c)
        if n == 0:
            raise InvalidKupischSeries("empty Kupisch series")
        if any((not isinstance(x, int)) or x < 1 for x in c):
            raise InvalidKupischSeries(f"entries must be positive integers: {list(c)}")
        if self.shape == "linear":
            if c[-1] != 1:
                raise InvalidKupischSeries(f"linear series must end with 1: {list(c)}")
            for i in range(n - 1):
                if c[i] < 2:
                    raise InvalidKupischSeries(f"entry {i + 1} must be at least 2 in a linear series")
                if c[i] > n - i:
                    raise InvalidKupischSeries(f"entry {i + 1} exceeds the length of the quiver")
                if c[i + 1] < c[i] - 1:
                    raise InvalidKupischSeries(f"entries {i + 1}, {i + 2} violate c_(i+1) >= c_i - 1")
        else:
            for i in range(n):
                if c[i] < 2:
                    raise InvalidKupischSeries(f"entry {i + 1} must be at least 2 in a cyclic series")
                if c[(i + 1) % n] < c[i] - 1:
                    raise InvalidKupischSeries(
                        f"entries {i + 1}, {(i + 1) % n + 1} violate c_(i+1) >= c_i - 1 cyclically"
                    )


# -- DSL parsing ----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<number>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_']*)"
                    r"|(?P<arrow>->)|(?P<sym>[:*+\-,]))")


@dataclass
class _Token:
    kind: str
    text: str
    column: int


def _tokenize(line: str, lineno: int) -> List[_Token]:
    tokens = []
    pos = 0
    stripped = line.rstrip()
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if not m or m.end() == pos:
            col = pos + len(stripped[pos:]) - len(stripped[pos:].lstrip()) + 1
            raise DslSyntaxError(f"unexpected character {stripped[col - 1]!r}", lineno, col)
        kind = m.lastgroup or "sym"
        start = m.start(kind) + 1
        tokens.append(_Token(kind, m.group(kind), start))
        pos = m.end()
    return tokens


class _LineParser:
    def __init__(self, tokens: List[_Token], lineno: int, line: str):
        self.tokens = tokens
        self.pos = 0
        self.lineno = lineno
        self.end_col = len(line.rstrip()) + 1

    def peek(self) -> Optional[_Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, kind: str, text: Optional[str] = None) -> _Token:
        tok = self.peek()
        if tok is None or tok.kind != kind or (text is not None and tok.text != text):
            expected = repr(text) if text else kind
            col = tok.column if tok else self.end_col
            found = repr(tok.text) if tok else "end of line"
            raise DslSyntaxError(f"expected {expected}, found {found}", self.lineno, col)
        self.pos += 1
        return tok

    def at_end(self) -> bool:
        return self.pos >= len(self.tokens)

    def error(self, message: str) -> DslSyntaxError:
        tok = self.peek()
        return DslSyntaxError(message, self.lineno, tok.column if tok else self.end_col)


def _parse_term(p: _LineParser) -> Tuple[Fraction, Path, int]:
    coeff = Fraction(1)
    tok = p.peek()
    column = tok.column if tok else p.end_col
    if tok is not None and tok.kind == "number":
        coeff = Fraction(p.take("number").text)
        p.take("sym", "*")
    path = [p.take("name").text]
    while not p.at_end() and p.peek().kind == "sym" and p.peek().text == "*":
        p.take("sym", "*")
        path.append(p.take("name").text)
    return coeff, tuple(path), column


def parse_quiver_dsl(text: str) -> Tuple[Quiver, RelationSet]:
    """Parse ``vertex``, ``arrow`` and ``relation`` lines.

    Raises:
        DslSyntaxError: malformed line, with 1-based line and column
        UnknownName: a vertex or arrow used before it is declared
        NonParallelRelation: paths of one relation differ in source or target
    """
    vertices: List[str] = []
    arrows: List[Tuple[str, str, str]] = []
    names: Dict[str, str] = {}
    relations: List[Tuple[Term, ...]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = _tokenize(line, lineno)
        if not tokens:
            continue
        p = _LineParser(tokens, lineno, line)
        keyword = p.take("name")
        if keyword.text == "vertex":
            if p.at_end():
                raise p.error("vertex line declares no names")
            while not p.at_end():
                if p.peek().kind == "sym" and p.peek().text == ",":
                    p.take("sym", ",")
                    continue
                tok = p.take("name")
                if tok.text in names:
                    raise DslSyntaxError(f"duplicate name {tok.text!r}", lineno, tok.column)
                names[tok.text] = "vertex"
                vertices.append(tok.text)
        elif keyword.text == "arrow":
            name = p.take("name")
            p.take("sym", ":")
            src = p.take("name")
            p.take("arrow")
            tgt = p.take("name")
            if not p.at_end():
                raise p.error("unexpected text after arrow declaration")
            if name.text in names:
                raise DslSyntaxError(f"duplicate name {name.text!r}", lineno, name.column)
            for end in (src, tgt):
                if names.get(end.text) != "vertex":
                    raise UnknownName(f"line {lineno}, column {end.column}: unknown vertex {end.text!r}")
            names[name.text] = "arrow"
            arrows.append((name.text, src.text, tgt.text))
        elif keyword.text == "relation":
            relations.append(_parse_relation(p, lineno, names, arrows))
        else:
            raise DslSyntaxError(f"unknown keyword {keyword.text!r}", lineno, keyword.column)

    return Quiver(tuple(vertices), tuple(arrows)), RelationSet(tuple(relations))


def _parse_relation(p: _LineParser, lineno: int, names: Dict[str, str],
                    arrows: List[Tuple[str, str, str]]) -> Tuple[Term, ...]:
    amap = {n: (s, t) for n, s, t in arrows}
    terms: Dict[Path, Fraction] = {}
    order: List[Path] = []
    sign = Fraction(1)
    if not p.at_end() and p.peek().kind == "sym" and p.peek().text == "-":
        p.take("sym", "-")
        sign = Fraction(-1)
    endpoints = None
    while True:
        coeff, path, column = _parse_term(p)
        for name in path:
            if names.get(name) != "arrow":
                raise UnknownName(f"line {lineno}, column {column}: unknown arrow {name!r}")
        for a, b in zip(path, path[1:]):
            if amap[a][1] != amap[b][0]:
                raise DslSyntaxError(f"path {'*'.join(path)} is not composable", lineno, column)
        ends = (amap[path[0]][0], amap[path[-1]][1])
        if endpoints is None:
            endpoints = ends
        elif ends != endpoints:
            raise NonParallelRelation(
                f"line {lineno}: {'*'.join(path)} runs {ends[0]} -> {ends[1]}, "
                f"expected {endpoints[0]} -> {endpoints[1]}"
            )
        if path not in terms:
            order.append(path)
            terms[path] = Fraction(0)
        terms[path] += sign * coeff
        if p.at_end():
            break
        op = p.take("sym")
        if op.text not in "+-":
            raise DslSyntaxError(f"expected '+' or '-', found {op.text!r}", lineno, op.column)
        sign = Fraction(1) if op.text == "+" else Fraction(-1)
    result = tuple((terms[path], path) for path in order if terms[path] != 0)
    for _, path in result:
        if len(path) < 2:
            raise DslSyntaxError(f"relation path {'*'.join(path)} has length < 2", lineno, 1)
    return result


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_quiver_dsl(quiver: Quiver, relations: RelationSet) -> str:
    """Canonical DSL text; parsing it gives back the same presentation."""
    lines = [f"vertex {' '.join(quiver.vertices)}"] if quiver.vertices else []
    for name, s, t in quiver.arrows:
        lines.append(f"arrow {name}: {s} -> {t}")
    for rel in relations.relations:
        parts = []
        for k, (c, path) in enumerate(rel):
            body = "*".join(path)
            mag = abs(c)
            text = body if mag == 1 else f"{_format_coeff(mag)}*{body}"
            if k == 0:
                parts.append(text if c > 0 else f"-{text}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {text}")
        lines.append(f"relation {' '.join(parts)}")
    return "\n".join(lines) + "\n"


# -- compilation ----------------------------------------------------------

def _paths_by_length(quiver: Quiver, max_length: int) -> List[List[Path]]:
    """paths[L] = all paths of length L (length 0 paths are ('@v',))."""
    out: List[List[Path]] = [[("@" + v,) for v in quiver.vertices]]
    outgoing: Dict[str, List[Tuple[str, str]]] = {v: [] for v in quiver.vertices}
    for name, s, t in quiver.arrows:
        outgoing[s].append((name, t))
    amap = quiver.arrow_map()
    for length in range(1, max_length + 1):
        layer = []
        if length == 1:
            layer = [(name,) for name, _, _ in quiver.arrows]
        else:
            for path in out[-1]:
                end = amap[path[-1]][1]
                for name, _ in outgoing[end]:
                    layer.append(path + (name,))
        out.append(layer)
    return out


def _path_length(path: Path) -> int:
    return 0 if path[0].startswith("@") else len(path)


def _source(path: Path, amap) -> str:
    return path[0][1:] if path[0].startswith("@") else amap[path[0]][0]


def _target(path: Path, amap) -> str:
    return path[0][1:] if path[0].startswith("@") else amap[path[-1]][1]


def _concat(first: Path, second: Path) -> Path:
    if first[0].startswith("@"):
        return second
    if second[0].startswith("@"):
        return first
    return first + second


def _paths_by_endpoint(quiver: Quiver, paths: List[List[Path]], amap):
    ending: Dict[str, List[Path]] = {v: [] for v in quiver.vertices}
    starting: Dict[str, List[Path]] = {v: [] for v in quiver.vertices}
    for layer in paths:
        for path in layer:
            ending[_target(path, amap)].append(path)
            starting[_source(path, amap)].append(path)
    return ending, starting


def _ideal_generators(quiver: Quiver, relations: RelationSet, field: FieldSpec,
                      paths: List[List[Path]], max_total: int) -> Iterator[Dict[Path, object]]:
    """Elements alpha*rho*beta with all terms truncated to length <= max_total.

    Only valid modulo J^(max_total+1), i.e. once that power is known to lie in I.
    """
    amap = quiver.arrow_map()
    ending, starting = _paths_by_endpoint(quiver, paths, amap)
    for rel in relations.relations:
        if not rel:
            continue
        lo = min(len(path) for _, path in rel)
        s = amap[rel[0][1][0]][0]
        t = amap[rel[0][1][-1]][1]
        for alpha in ending[s]:
            la = _path_length(alpha)
            if la + lo > max_total:
                continue
            for beta in starting[t]:
                lb = _path_length(beta)
                if la + lo + lb > max_total:
                    continue
                element: Dict[Path, object] = {}
                for c, path in rel:
                    full = _concat(_concat(alpha, path), beta)
                    if len(full) <= max_total:
                        element[full] = field.scalar(c)
                if element:
                    yield element


def _exact_ideal_elements(quiver: Quiver, relations: RelationSet, field: FieldSpec,
                          paths: List[List[Path]], outer: int) -> Iterator[Dict[Path, object]]:
    """Elements alpha*rho*beta with len(alpha) + len(beta) <= outer, every term kept."""
    amap = quiver.arrow_map()
    ending, starting = _paths_by_endpoint(quiver, paths[:outer + 1], amap)
    for rel in relations.relations:
        if not rel:
            continue
        s = amap[rel[0][1][0]][0]
        t = amap[rel[0][1][-1]][1]
        for alpha in ending[s]:
            la = _path_length(alpha)
            for beta in starting[t]:
                if la + _path_length(beta) > outer:
                    continue
                yield {_concat(_concat(alpha, path), beta): field.scalar(c) for c, path in rel}


def _longest_relation(relations: RelationSet) -> int:
    return max((len(path) for rel in relations.relations for _, path in rel), default=0)


def compile_presentation(quiver: Quiver, relations: RelationSet, field: FieldSpec,
                         length_cap: Optional[int] = None, name: Optional[str] = None) -> Algebra:
    """Compile KQ/I to structure constants.

    Finds the least L <= length_cap with every path of length L in I, so that
    J^L lies in I, and returns paths of length < L modulo I. Basis: trivial paths, then the
    surviving paths by increasing length.

    Raises:
        NotAdmissible: no such L up to the cap
    """
    if length_cap is None:
        from config.config_loader import get_config
        length_cap = int(get_config().get('caps.path_length', 30))

    for L in range(1, length_cap + 1):
        if _top_layer_in_ideal(quiver, relations, field, L):
            logger.debug(f"Presentation admissible at path length {L}")
            paths = _paths_by_length(quiver, L)
            return _quotient_algebra(quiver, relations, field, paths[:L], L - 1, name)
    raise NotAdmissible(
        f"paths of length {length_cap} survive the relations; the ideal is not admissible within the cap"
    )


def _columns_longest_first(paths: List[List[Path]]) -> List[Path]:
    cols: List[Path] = []
    for layer in reversed(paths):
        cols.extend(layer)
    return cols


def _generator_matrix(quiver, relations, field, paths, max_total):
    cols = _columns_longest_first(paths)
    index = {p: k for k, p in enumerate(cols)}
    rows = {}
    for r, element in enumerate(_ideal_generators(quiver, relations, field, paths, max_total)):
        rows[r] = {index[p]: c for p, c in element.items()}
    mat = ml.from_entries(field, rows, len(rows), len(cols))
    return mat, cols, index


def _top_layer_in_ideal(quiver, relations, field, L) -> bool:
    """Whether every path of length L lies in I.

    Membership is tested against the elements alpha*rho*beta with
    len(alpha) + len(beta) <= L, kept whole; a combination of those equal to
    a path is an exact certificate.
    """
    window = L + _longest_relation(relations)
    paths = _paths_by_length(quiver, window)
    top = paths[L]
    if not top:
        return True
    cols = _columns_longest_first(paths)
    index = {p: k for k, p in enumerate(cols)}
    rows = {r: {index[p]: c for p, c in element.items()}
            for r, element in enumerate(_exact_ideal_elements(quiver, relations, field, paths, L))}
    if not rows:
        return False
    space = Subspace.from_rows(field, len(cols), ml.from_entries(field, rows, len(rows), len(cols)))
    return all(space.contains(ml.unit_column(field, len(cols), index[p])) for p in top)


def _quotient_algebra(quiver: Quiver, relations: RelationSet, field: FieldSpec,
                      paths: List[List[Path]], max_total: int, name: Optional[str]) -> Algebra:
    amap = quiver.arrow_map()
    mat, cols, index = _generator_matrix(quiver, relations, field, paths, max_total)
    space = Subspace.from_rows(field, len(cols), mat) if mat.shape[0] else \
        Subspace.zero(field, len(cols))
    pivot_set = set(space.pivots)
    basis_paths = [p for layer in paths for p in layer if index[p] not in pivot_set]
    bindex = {p: k for k, p in enumerate(basis_paths)}
    reduced = ml.entries(space.rows)

    def reduce_path(path: Path) -> Vector:
        if len(path) > max_total:
            return {}
        if path in bindex:
            return {bindex[path]: field.one}
        col = index[path]
        r = space.pivots.index(col)
        row = reduced.get(r, {})
        return {bindex[cols[c]]: -v for c, v in row.items() if c != col and v}

    products: Dict[Tuple[int, int], Vector] = {}
    for i, u in enumerate(basis_paths):
        for j, v in enumerate(basis_paths):
            # b_u b_v is the path v then u
            if _target(v, amap) != _source(u, amap):
                continue
            res = reduce_path(_concat(v, u))
            if res:
                products[(i, j)] = res

    vindex = {v: k for k, v in enumerate(quiver.vertices)}
    idempotents = [{bindex[("@" + v,)]: field.one} for v in quiver.vertices]
    one = {bindex[("@" + v,)]: field.one for v in quiver.vertices}
    rad_rows = {r: {bindex[p]: field.one}
                for r, p in enumerate(p for p in basis_paths if _path_length(p) >= 1)}
    rad_basis = ml.from_entries(field, rad_rows, len(rad_rows), len(basis_paths))
    arrows = [Arrow(a, {bindex[(a,)]: field.one}, vindex[s], vindex[t])
              for a, s, t in quiver.arrows if (a,) in bindex]
    labels = [f"e_{p[0][1:]}" if _path_length(p) == 0 else "*".join(p) for p in basis_paths]
    return Algebra(field, labels, products, one, idempotents, rad_basis=rad_basis,
                   arrows=arrows, vertex_labels=list(quiver.vertices), name=name)


def compile_dsl(text: str, field: FieldSpec, length_cap: Optional[int] = None,
                name: Optional[str] = None) -> Algebra:
    quiver, relations = parse_quiver_dsl(text)
    return compile_presentation(quiver, relations, field, length_cap, name)


# -- Nakayama algebras ----------------------------------------------------

def kupisch_presentation(series: KupischSeries) -> Tuple[Quiver, RelationSet]:
    series.check()
    c = series.lengths
    n = len(c)
    vertices = tuple(str(i + 1) for i in range(n))
    arrows = []
    for i in range(n if series.shape == "cyclic" else n - 1):
        arrows.append((f"a{i + 1}", vertices[i], vertices[(i + 1) % n]))
    relations = []
    for i in range(n):
        if series.shape == "linear" and i + c[i] > n - 1:
            continue
        path = tuple(f"a{(i + k) % n + 1}" for k in range(c[i]))
        relations.append(((Fraction(1), path),))
    return Quiver(vertices, tuple(arrows)), RelationSet(tuple(relations))


def nakayama(series: KupischSeries, field: FieldSpec) -> Algebra:
    """Nakayama algebra whose projective at vertex i has length c_i.

    Raises:
        InvalidKupischSeries: the series violates the admissibility inequalities
    """
    quiver, relations = kupisch_presentation(series)
    cap = max(series.lengths) + 1
    name = f"nakayama-{series.shape}-{','.join(map(str, series.lengths))}"
    return compile_presentation(quiver, relations, field, cap, name=name)


def parse_kupisch(text: str, shape: str = "linear") -> KupischSeries:
    try:
        lengths = tuple(int(x) for x in text.replace(" ", "").strip("[]").split(",") if x)
    except ValueError:
        raise InvalidKupischSeries(f"not a comma-separated list of integers: {text!r}")
    series = KupischSeries(lengths, shape)
    series.check()
    return series


def path_label_lengths(a: Algebra) -> List[int]:
    """Path length of each basis label of a compiled algebra."""
    return [0 if lab.startswith("e_") else lab.count("*") + 1 for lab in a.labels]


def relation_paths(relations: RelationSet) -> Sequence[Path]:
    return [path for rel in relations.relations for _, path in rel]
