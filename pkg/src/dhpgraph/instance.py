"""Instance files and DOT export.

Text format::

    dhp v1
    # generator: tree
    # seed: 7
    A 4 B 4
    0 0
    0 3
    ...

Blank lines and ``#`` comments are ignored, except ``# key: value``
comments whose key is a known metadata field. Indices are 0-based. A JSON
object ``{"format": "dhp v1", "a_count": .., "b_count": .., "edges": [[a, b], ..]}``
is accepted on input as well.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .errors import GraphError, InstanceFormatError
from .graphs import BipartiteGraph, CycleFamily

FORMAT_TAG = "dhp v1"
METADATA_KEYS = ("generator", "seed", "profile", "tree", "attempts")
_META_RE = re.compile(r"#\s*([A-Za-z_]+)\s*:\s*(.*?)\s*$")


@dataclass(frozen=True)
class InstanceFile:
    graph: BipartiteGraph
    metadata: dict[str, str] = field(default_factory=dict)


def _int_token(tok: str, line: int, col: int, what: str) -> int:
    if not re.fullmatch(r"\d+", tok):
        raise InstanceFormatError(f"expected non-negative integer for {what}, got {tok!r}", line, col)
    return int(tok)


def _tokens(text: str) -> list[tuple[str, int]]:
    """Whitespace-separated tokens with their 1-based columns."""
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", text)]


def _read_json(text: str) -> InstanceFile:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(obj, dict):
        raise InstanceFormatError("JSON instance must be an object", 1)
    if obj.get("format", FORMAT_TAG) != FORMAT_TAG:
        raise InstanceFormatError(f"unsupported format {obj.get('format')!r}", 1)
    try:
        a_count = int(obj["a_count"])
        b_count = int(obj["b_count"])
        edges = [(int(a), int(b)) for a, b in obj.get("edges", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise InstanceFormatError(f"bad JSON instance field: {exc}", 1) from None
    meta = {str(k): str(v) for k, v in (obj.get("metadata") or {}).items()}
    try:
        g = BipartiteGraph.from_edge_list(a_count, b_count, edges)
    except GraphError as exc:
        raise InstanceFormatError(str(exc), 1) from None
    return InstanceFile(g, meta)


def read_instance(text: str) -> InstanceFile:
    if text.lstrip().startswith("{"):
        return _read_json(text)
    meta: dict[str, str] = {}
    state = "tag"
    a_count = b_count = 0
    adj: list[int] = []
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        stripped = raw.strip()
        if stripped.startswith("#"):
            m = _META_RE.fullmatch(stripped)
            if m and m.group(1) in METADATA_KEYS:
                meta[m.group(1)] = m.group(2)
            continue
        body = raw.split("#", 1)[0]
        toks = _tokens(body)
        if not toks:
            continue
        if state == "tag":
            if " ".join(t for t, _ in toks) != FORMAT_TAG:
                raise InstanceFormatError(f"expected header {FORMAT_TAG!r}", lineno, toks[0][1])
            state = "counts"
        elif state == "counts":
            if len(toks) != 4 or toks[0][0] != "A" or toks[2][0] != "B":
                raise InstanceFormatError("expected 'A <n> B <m>'", lineno, toks[0][1])
            a_count = _int_token(toks[1][0], lineno, toks[1][1], "|A|")
            b_count = _int_token(toks[3][0], lineno, toks[3][1], "|B|")
            if a_count < 1:
                raise InstanceFormatError("|A| must be positive", lineno, toks[1][1])
            adj = [0] * b_count
            state = "edges"
        else:
            if len(toks) != 2:
                col = toks[min(2, len(toks) - 1)][1]
                raise InstanceFormatError("expected '<a> <b>'", lineno, col)
            a = _int_token(toks[0][0], lineno, toks[0][1], "a")
            b = _int_token(toks[1][0], lineno, toks[1][1], "b")
            if a >= a_count:
                raise InstanceFormatError(f"a = {a} out of range (|A| = {a_count})", lineno, toks[0][1])
            if b >= b_count:
                raise InstanceFormatError(f"b = {b} out of range (|B| = {b_count})", lineno, toks[1][1])
            if adj[b] >> a & 1:
                raise InstanceFormatError(f"duplicate edge ({a}, {b})", lineno, toks[0][1])
            adj[b] |= 1 << a
    if state != "edges":
        raise InstanceFormatError("missing header or counts line", last_line + 1)
    return InstanceFile(BipartiteGraph(a_count, b_count, tuple(adj)), meta)


def parse_instance(text: str) -> BipartiteGraph:
    return read_instance(text).graph


def _meta_order(meta: dict[str, str]) -> list[str]:
    known = [k for k in METADATA_KEYS if k in meta]
    return known + sorted(k for k in meta if k not in METADATA_KEYS)


def emit_instance(g: BipartiteGraph, metadata: dict[str, object] | None = None) -> str:
    """Canonical text: header, metadata comments, counts, edges sorted by (a, b)."""
    lines = [FORMAT_TAG]
    meta = {k: str(v) for k, v in (metadata or {}).items()}
    for k in _meta_order(meta):
        lines.append(f"# {k}: {meta[k]}")
    lines.append(f"A {g.a_count} B {g.b_count}")
    lines.extend(f"{a} {b}" for a, b in g.edges())
    return "\n".join(lines) + "\n"


def emit_instance_file(inst: InstanceFile) -> str:
    return emit_instance(inst.graph, inst.metadata)


def canonicalize(text: str) -> str:
    return emit_instance_file(read_instance(text))


def instance_to_json(g: BipartiteGraph, metadata: dict[str, object] | None = None) -> dict:
    out = {"format": FORMAT_TAG, "a_count": g.a_count, "b_count": g.b_count,
           "edges": [list(e) for e in g.edges()]}
    if metadata:
        out["metadata"] = {k: str(metadata[k]) for k in _meta_order({k: "" for k in metadata})}
    return out


def export_dot(g: BipartiteGraph, family: CycleFamily | None = None) -> str:
    """Graphviz document; A and B on separate ranks, ``family`` edges highlighted."""
    n = g.a_count
    hi = family.edges() if family is not None else set()
    lines = ["graph dhp {", "  rankdir=LR;", "  node [fontsize=10];"]
    lines.append("  { rank=same; " + " ".join(f"a{i};" for i in range(n)) + " }")
    if g.b_count:
        lines.append("  { rank=same; " + " ".join(f"b{j};" for j in range(g.b_count)) + " }")
    for i in range(n):
        lines.append(f"  a{i} [shape=circle];")
    for j in range(g.b_count):
        lines.append(f"  b{j} [shape=box];")
    for a, b in g.edges():
        u, v = a, n + b
        attrs = " [color=red, penwidth=2.5]" if (u, v) in hi else ""
        lines.append(f"  a{a} -- b{b}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"
