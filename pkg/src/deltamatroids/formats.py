"""Bit-exact text formats for set systems, F2 matrices, ribbon graphs and
chord diagrams.

Every emitter produces output that re-parses to an equal value; parsers
raise ParseError with the 1-based line number of the offending line.
"""

from __future__ import annotations

import re

from .core import SetSystem
from .errors import ParseError
from .f2 import MatrixF2
from .ribbon import ChordDiagram, RibbonGraph


def _lines(text: str) -> list[str]:
    return text.splitlines()


def emit_set_system(s: SetSystem) -> str:
    phi = " ".join(f"{m:#x}" for m in s.masks)
    return f"setsystem n={s.n}\nphi {phi}\n"


def parse_set_system(text: str) -> SetSystem:
    lines = _lines(text)
    if not lines or not re.fullmatch(r"setsystem n=\d+", lines[0].strip()):
        raise ParseError(1, "expected header 'setsystem n=<int>'")
    n = int(lines[0].strip().split("=", 1)[1])
    if len(lines) < 2:
        raise ParseError(2, "expected 'phi <hex> ...'")
    parts = lines[1].strip().split()
    if not parts or parts[0] != "phi" or len(parts) < 2:
        raise ParseError(2, "expected 'phi <hex> ...'")
    masks = []
    for tok in parts[1:]:
        if not re.fullmatch(r"0x[0-9a-f]+", tok):
            raise ParseError(2, f"bad mask {tok!r}: want lowercase hex with 0x prefix")
        masks.append(int(tok, 16))
    if masks != sorted(set(masks)):
        raise ParseError(2, "masks must be strictly increasing")
    if any(m >= 1 << n for m in masks):
        raise ParseError(2, f"mask does not fit n={n}")
    for extra, line in enumerate(lines[2:], start=3):
        if line.strip():
            raise ParseError(extra, f"unexpected trailing line {line!r}")
    return SetSystem(n, masks)


def emit_f2_matrix(m: MatrixF2) -> str:
    body = "\n".join(
        "".join(str(m.entry(i, j)) for j in range(m.cols)) for i in range(m.rows)
    )
    return f"f2matrix n={m.rows}\n{body}\n" if m.rows else f"f2matrix n={m.rows}\n"


def parse_f2_matrix(text: str) -> MatrixF2:
    lines = _lines(text)
    if not lines or not re.fullmatch(r"f2matrix n=\d+", lines[0].strip()):
        raise ParseError(1, "expected header 'f2matrix n=<int>'")
    n = int(lines[0].strip().split("=", 1)[1])
    if len(lines) < 1 + n:
        raise ParseError(len(lines) + 1, f"expected {n} matrix rows")
    bits = []
    for i in range(n):
        row = lines[1 + i].strip()
        if not re.fullmatch(r"[01]*", row) or len(row) != n:
            raise ParseError(2 + i, f"expected {n} characters of 0/1")
        bits.append(sum(1 << j for j, ch in enumerate(row) if ch == "1"))
    for extra, line in enumerate(lines[1 + n :], start=2 + n):
        if line.strip():
            raise ParseError(extra, f"unexpected trailing line {line!r}")
    m = MatrixF2(n, n, bits)
    if not m.is_symmetric():
        raise ParseError(2, "matrix must be symmetric")
    return m


def emit_ribbon(r: RibbonGraph) -> str:
    out = [f"ribbon v={r.n_vertices} e={r.n_edges}"]
    for i, rot in enumerate(r.vertices):
        out.append(f"v {i}: " + " ".join(str(h) for h in rot) if rot else f"v {i}:")
    for j, (h1, h2, sign) in enumerate(r.edges):
        out.append(f"e {j}: ({h1},{h2}) {'+' if sign > 0 else '-'}")
    return "\n".join(out) + "\n"


def parse_ribbon(text: str) -> RibbonGraph:
    lines = _lines(text)
    if not lines or not re.fullmatch(r"ribbon v=\d+ e=\d+", lines[0].strip()):
        raise ParseError(1, "expected header 'ribbon v=<int> e=<int>'")
    head = lines[0].strip().split()
    nv = int(head[1].split("=", 1)[1])
    ne = int(head[2].split("=", 1)[1])
    if len(lines) < 1 + nv + ne:
        raise ParseError(len(lines) + 1, f"expected {nv} vertex and {ne} edge lines")
    vertices = []
    for i in range(nv):
        line = lines[1 + i].strip()
        m = re.fullmatch(rf"v {i}:((?: \d+)*)\s*", line)
        if not m:
            raise ParseError(2 + i, f"expected 'v {i}: <half-edge ids>'")
        vertices.append(tuple(int(t) for t in m.group(1).split()))
    edges = []
    for j in range(ne):
        line = lines[1 + nv + j].strip()
        m = re.fullmatch(rf"e {j}: \((\d+),(\d+)\) ([+-])", line)
        if not m:
            raise ParseError(2 + nv + j, f"expected 'e {j}: (<h>,<h>) <+|->'")
        edges.append((int(m.group(1)), int(m.group(2)), 1 if m.group(3) == "+" else -1))
    for extra, line in enumerate(lines[1 + nv + ne :], start=2 + nv + ne):
        if line.strip():
            raise ParseError(extra, f"unexpected trailing line {line!r}")
    try:
        return RibbonGraph(vertices, edges)
    except ValueError as exc:
        raise ParseError(1, str(exc)) from None


def emit_chords(c: ChordDiagram) -> str:
    word = " ".join(c.labels[i] for i in c.word)
    signs = " ".join(
        f"{lab}={'+' if s > 0 else '-'}" for lab, s in zip(c.labels, c.signs)
    )
    return f"chords: {word}\nsigns: {signs}\n"


def parse_chords(text: str) -> ChordDiagram:
    lines = _lines(text)
    if not lines or not lines[0].strip().startswith("chords:"):
        raise ParseError(1, "expected 'chords: <label> <label> ...'")
    word = lines[0].strip()[len("chords:") :].split()
    if not word:
        raise ParseError(1, "empty chord word")
    signs_map = {}
    rest = 1
    if len(lines) > 1 and lines[1].strip():
        line = lines[1].strip()
        if not line.startswith("signs:"):
            raise ParseError(2, "expected 'signs: <label>=<+|-> ...'")
        for tok in line[len("signs:") :].split():
            m = re.fullmatch(r"([^=\s]+)=([+-])", tok)
            if not m:
                raise ParseError(2, f"bad sign assignment {tok!r}")
            signs_map[m.group(1)] = 1 if m.group(2) == "+" else -1
        rest = 2
    for lineno, line in enumerate(lines[rest:], start=rest + 1):
        if line.strip():
            raise ParseError(lineno, f"unexpected trailing line {line!r}")
    try:
        return ChordDiagram.from_labels(word, signs_map)
    except ValueError as exc:
        raise ParseError(1, str(exc)) from None
