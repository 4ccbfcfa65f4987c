"""Parsers for the two supported diagram source languages.

Both parsers produce the same language-neutral DiagramAst: nodes and directed
edges exactly as written, in declaration order, plus source spans for error
reporting. Everything semantic (tree-ness, arity, child sides) is checked by
the IR compiler, not here.

Supported subsets:

  Mermaid  — a ``flowchart TD|TB|LR`` header followed by node declarations
             (``A((3))`` circle, ``A[37]`` square, bare ``A``) and edge
             chains (``A --> B``, ``A --- B``) with optional ``|L|``/``|R|``
             side labels. Statements may share a line, separated by ``;``.
             ``%%`` comment lines are skipped.

  DOT      — a single ``digraph`` block with node statements
             (``A [label="1"];``), edge chains (``A -> B -> C;``) with an
             optional ``pos="L"|"R"`` attribute, and ``//`` or ``/* */``
             comments. ``graph`` blocks, ``strict``, subgraphs, defaults and
             unknown attributes are rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import (
    DiagramSyntaxError,
    DuplicateNode,
    StructureMismatch,
    UnsupportedConstruct,
)

LANGUAGES = ("mermaid", "dot")
STRUCTURES = ("array", "binary_tree", "linked_list", "two_d_array")
SHAPES = ("circle", "square", "unspecified")


@dataclass(frozen=True)
class SourceSpec:
    """Raw diagram text plus the author's declarations about it.

    The structure type is always author-declared, never inferred from the
    text.
    """

    text: str
    language: str
    structure: str
    title: str | None = None
    description: str | None = None

    def __post_init__(self):
        if self.language not in LANGUAGES:
            raise ValueError(f"unknown language {self.language!r}; expected one of {LANGUAGES}")
        if self.structure not in STRUCTURES:
            raise ValueError(f"unknown structure {self.structure!r}; expected one of {STRUCTURES}")


@dataclass(frozen=True)
class Span:
    """1-based source range of an element, end column exclusive."""

    line: int
    column: int
    end_line: int
    end_column: int


@dataclass(frozen=True)
class AstNode:
    id: str
    label: str
    shape: str


@dataclass(frozen=True)
class AstEdge:
    src: str
    dst: str
    edge_label: str | None = None


@dataclass(frozen=True)
class DiagramAst:
    """Language-neutral parse result, in declaration order.

    ``spans`` maps ("node", node_id) and ("edge", edge_index) to source
    ranges.
    """

    nodes: tuple[AstNode, ...]
    edges: tuple[AstEdge, ...]
    spans: dict = field(default_factory=dict, compare=False)


class _NodeRegistry:
    """Collects node declarations, preserving first-appearance order.

    A bare mention implicitly declares a node (label = id); an explicit
    declaration upgrades it. Conflicting explicit declarations are an error
    rather than last-write-wins: silently relabeling a node would corrupt
    every accessible output downstream.
    """

    def __init__(self):
        self._order: list[str] = []
        self._entries: dict[str, dict] = {}
        self.spans: dict = {}

    def mention(self, node_id: str, span: Span):
        if node_id not in self._entries:
            self._order.append(node_id)
            self._entries[node_id] = {
                "label": node_id,
                "shape": "unspecified",
                "label_explicit": False,
                "shape_explicit": False,
            }
            self.spans[("node", node_id)] = span

    def declare(self, node_id: str, span: Span, *, label: str | None = None, shape: str | None = None):
        self.mention(node_id, span)
        entry = self._entries[node_id]
        if label is not None:
            if entry["label_explicit"] and entry["label"] != label:
                raise DuplicateNode(
                    f"node {node_id!r} redeclared with label {label!r} (was {entry['label']!r})",
                    line=span.line,
                    column=span.column,
                )
            entry["label"] = label
            entry["label_explicit"] = True
        if shape is not None:
            if entry["shape_explicit"] and entry["shape"] != shape:
                raise DuplicateNode(
                    f"node {node_id!r} redeclared with shape {shape!r} (was {entry['shape']!r})",
                    line=span.line,
                    column=span.column,
                )
            entry["shape"] = shape
            entry["shape_explicit"] = True

    def nodes(self, default_shape: str = "unspecified") -> tuple[AstNode, ...]:
        out = []
        for node_id in self._order:
            entry = self._entries[node_id]
            shape = entry["shape"]
            if shape == "unspecified" and not entry["shape_explicit"]:
                shape = default_shape
            out.append(AstNode(id=node_id, label=entry["label"], shape=shape))
        return tuple(out)


def _strip_quotes(label: str) -> str:
    label = label.strip()
    if len(label) >= 2 and label[0] == '"' and label[-1] == '"':
        return label[1:-1]
    return label


# ---------------------------------------------------------------------------
# Mermaid
# ---------------------------------------------------------------------------

_MERMAID_HEADER_RE = re.compile(r"^flowchart(?:\s+(?P<dir>\S+))?\s*$")
_MERMAID_ID_RE = re.compile(r"[A-Za-z0-9_]+")
# Directed links are 2+ dashes ending in '>'; undirected links are 3+ bare
# dashes. Either may carry a |text| side label.
_MERMAID_LINK_RE = re.compile(r"(?P<arrow>-{2,}>|-{3,})(?:\s*\|(?P<label>[^|]*)\|)?")
_MERMAID_UNSUPPORTED_KEYWORDS = (
    "subgraph",
    "end",
    "style",
    "classDef",
    "class",
    "click",
    "linkStyle",
    "direction",
)


def _split_statements(line: str) -> list[tuple[int, str]]:
    """Split one physical line on semicolons outside any bracket nesting.

    Returns (0-based start column, statement text) pairs.
    """

    parts: list[tuple[int, str]] = []
    depth = 0
    start = 0
    for i, ch in enumerate(line):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth = max(0, depth - 1)
        elif ch == ";" and depth == 0:
            parts.append((start, line[start:i]))
            start = i + 1
    parts.append((start, line[start:]))
    out = []
    for col, text in parts:
        stripped = text.strip()
        if stripped:
            out.append((col + (len(text) - len(text.lstrip())), stripped))
    return out


class _MermaidStatementParser:
    """Parses a single node-or-edge-chain statement."""

    def __init__(self, text: str, line_no: int, col0: int, registry: _NodeRegistry):
        self.text = text
        self.line_no = line_no
        self.col0 = col0  # 0-based column of text[0] in the physical line
        self.pos = 0
        self.registry = registry

    def _column(self, pos: int | None = None) -> int:
        return self.col0 + (self.pos if pos is None else pos) + 1

    def _error(self, message: str, pos: int | None = None):
        raise DiagramSyntaxError(message, line=self.line_no, column=self._column(pos))

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _span(self, start: int, end: int) -> Span:
        return Span(self.line_no, self.col0 + start + 1, self.line_no, self.col0 + end + 1)

    def parse_operand(self) -> str:
        self._skip_ws()
        m = _MERMAID_ID_RE.match(self.text, self.pos)
        if not m:
            self._error("expected a node identifier")
        node_id = m.group(0)
        start = self.pos
        self.pos = m.end()
        rest = self.text[self.pos :]
        if rest.startswith("(("):
            close = self.text.find("))", self.pos + 2)
            if close < 0:
                self._error("unterminated '((' node shape")
            label = _strip_quotes(self.text[self.pos + 2 : close])
            self.pos = close + 2
            self.registry.declare(node_id, self._span(start, self.pos), label=label, shape="circle")
        elif rest.startswith("[["):
            raise UnsupportedConstruct(
                "subroutine shape '[[...]]' is not supported; use '((label))' or '[label]'",
                line=self.line_no,
                column=self._column(),
            )
        elif rest.startswith("["):
            close = self.text.find("]", self.pos + 1)
            if close < 0:
                self._error("unterminated '[' node shape")
            label = _strip_quotes(self.text[self.pos + 1 : close])
            self.pos = close + 1
            self.registry.declare(node_id, self._span(start, self.pos), label=label, shape="square")
        elif rest[:1] in ("(", "{", ">"):
            raise UnsupportedConstruct(
                f"node shape starting with {rest[0]!r} is not supported; use '((label))' or '[label]'",
                line=self.line_no,
                column=self._column(),
            )
        else:
            self.registry.mention(node_id, self._span(start, self.pos))
        return node_id

    def parse(self) -> list[tuple[str, str, str | None, Span]]:
        """Returns the statement's edges as (src, dst, label, span) tuples."""

        stmt_start = self.pos
        edges = []
        src = self.parse_operand()
        while True:
            self._skip_ws()
            if self.pos >= len(self.text):
                break
            if self.text[self.pos] == "&":
                raise UnsupportedConstruct(
                    "multi-target edges ('&') are not supported",
                    line=self.line_no,
                    column=self._column(),
                )
            m = _MERMAID_LINK_RE.match(self.text, self.pos)
            if not m:
                self._error("expected an edge ('-->' or '---') or end of statement")
            label = m.group("label")
            if label is not None:
                label = label.strip()
            self.pos = m.end()
            dst = self.parse_operand()
            edges.append((src, dst, label, self._span(stmt_start, self.pos)))
            src = dst
        return edges


def parse_mermaid(spec: SourceSpec) -> DiagramAst:
    """Parse a Mermaid flowchart subset into a DiagramAst."""

    if spec.language != "mermaid":
        raise ValueError(f"parse_mermaid called with language {spec.language!r}")

    registry = _NodeRegistry()
    edges: list[tuple[str, str, str | None, Span]] = []
    saw_header = False

    for line_no, raw_line in enumerate(spec.text.splitlines(), start=1):
        stripped = raw_line.strip()
        if not stripped or stripped.startswith("%%"):
            continue
        for col0, stmt in _split_statements(raw_line):
            if not saw_header:
                m = _MERMAID_HEADER_RE.match(stmt)
                if not m:
                    raise DiagramSyntaxError(
                        "expected a 'flowchart <direction>' header as the first statement",
                        line=line_no,
                        column=col0 + 1,
                    )
                direction = m.group("dir")
                if direction is None:
                    raise DiagramSyntaxError(
                        "flowchart header is missing its direction token",
                        line=line_no,
                        column=col0 + 1,
                    )
                if direction not in ("TD", "TB", "LR"):
                    raise UnsupportedConstruct(
                        f"flowchart direction {direction!r} is not supported (use TD, TB, or LR)",
                        line=line_no,
                        column=col0 + 1,
                    )
                saw_header = True
                continue
            keyword = stmt.split(None, 1)[0]
            if keyword in _MERMAID_UNSUPPORTED_KEYWORDS:
                raise UnsupportedConstruct(
                    f"'{keyword}' statements are not supported",
                    line=line_no,
                    column=col0 + 1,
                )
            edges.extend(_MermaidStatementParser(stmt, line_no, col0, registry).parse())

    if not saw_header:
        raise DiagramSyntaxError("source contains no statements", line=1, column=1)

    return _assemble(registry, edges, default_shape="unspecified")


# ---------------------------------------------------------------------------
# DOT
# ---------------------------------------------------------------------------

_DOT_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<name>[A-Za-z0-9_]+)
  | (?P<string>"[^"]*")
  | (?P<arrow>->)
  | (?P<undirected>--)
  | (?P<punct>[\[\]{}=,;])
    """,
    re.VERBOSE,
)

_DOT_SHAPE_MAP = {
    "circle": "circle",
    "ellipse": "circle",
    "oval": "circle",
    "box": "square",
    "rect": "square",
    "rectangle": "square",
    "square": "square",
}


@dataclass(frozen=True)
class _Token:
    kind: str  # name | string | arrow | punct | eof
    text: str
    line: int
    column: int


def _blank_dot_comments(text: str) -> str:
    """Replace // and /* */ comment bodies with spaces, preserving layout."""

    out = list(text)
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == '"':
            i += 1
            while i < n and text[i] != '"':
                i += 1
            i += 1
        elif text.startswith("//", i):
            while i < n and text[i] != "\n":
                out[i] = " "
                i += 1
        elif text.startswith("/*", i):
            end = text.find("*/", i + 2)
            end = n if end < 0 else end + 2
            while i < end:
                if out[i] != "\n":
                    out[i] = " "
                i += 1
        else:
            i += 1
    return "".join(out)


def _tokenize_dot(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line = 1
    line_start = 0
    pos = 0
    n = len(text)
    while pos < n:
        m = _DOT_TOKEN_RE.match(text, pos)
        if not m:
            raise DiagramSyntaxError(
                f"unexpected character {text[pos]!r}",
                line=line,
                column=pos - line_start + 1,
            )
        kind = m.lastgroup
        chunk = m.group(0)
        if kind != "ws":
            col = pos - line_start + 1
            if kind == "punct":
                tokens.append(_Token("punct", chunk, line, col))
            elif kind == "string":
                tokens.append(_Token("string", chunk[1:-1], line, col))
            elif kind == "undirected":
                tokens.append(_Token("undirected", chunk, line, col))
            else:
                tokens.append(_Token(kind, chunk, line, col))
        for i, ch in enumerate(chunk):
            if ch == "\n":
                line += 1
                line_start = pos + i + 1
        pos = m.end()
    last_line = line
    tokens.append(_Token("eof", "", last_line, n - line_start + 1))
    return tokens


class _DotParser:
    def __init__(self, tokens: list[_Token], registry: _NodeRegistry):
        self.tokens = tokens
        self.pos = 0
        self.registry = registry
        self.edges: list[tuple[str, str, str | None, Span]] = []

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def _error(self, message: str, tok: _Token | None = None):
        tok = tok or self.peek()
        raise DiagramSyntaxError(message, line=tok.line, column=tok.column)

    def _unsupported(self, message: str, tok: _Token):
        raise UnsupportedConstruct(message, line=tok.line, column=tok.column)

    def expect_punct(self, text: str) -> _Token:
        tok = self.next()
        if tok.kind != "punct" or tok.text != text:
            self._error(f"expected {text!r}", tok)
        return tok

    def parse(self) -> None:
        tok = self.next()
        if tok.kind == "name" and tok.text == "strict":
            self._unsupported("'strict' graphs are not supported", tok)
        if tok.kind == "name" and tok.text == "graph":
            self._unsupported("undirected 'graph' blocks are not supported; use 'digraph'", tok)
        if tok.kind != "name" or tok.text != "digraph":
            self._error("expected a 'digraph' block", tok)
        if self.peek().kind in ("name", "string"):
            self.next()  # optional graph name
        self.expect_punct("{")
        while True:
            tok = self.peek()
            if tok.kind == "eof":
                self._error("unterminated 'digraph' block (missing '}')", tok)
            if tok.kind == "punct" and tok.text == "}":
                self.next()
                break
            self.parse_statement()
        tok = self.peek()
        if tok.kind != "eof":
            self._error("unexpected content after 'digraph' block", tok)

    def parse_statement(self) -> None:
        tok = self.peek()
        if tok.kind == "punct" and tok.text == ";":
            self.next()
            return
        if tok.kind == "punct" and tok.text == "{":
            self._unsupported("nested blocks (subgraphs, rank groups) are not supported", tok)
        if tok.kind == "name" and tok.text == "subgraph":
            self._unsupported("subgraphs are not supported", tok)
        if tok.kind == "name" and tok.text in ("node", "edge", "graph"):
            self._unsupported(f"'{tok.text}' attribute defaults are not supported", tok)
        if tok.kind not in ("name", "string"):
            self._error("expected a node identifier", tok)

        first = self.next()
        nxt = self.peek()
        if nxt.kind == "punct" and nxt.text == "=":
            # graph attribute statement (rankdir=..., rank=same, ...)
            self._unsupported("graph attribute statements are not supported", first)
        if nxt.kind == "undirected":
            self._error("'--' edges are not valid in a digraph; use '->'", nxt)

        if nxt.kind == "arrow":
            chain = [first]
            while self.peek().kind == "arrow":
                self.next()
                tok = self.next()
                if tok.kind not in ("name", "string"):
                    self._error("expected a node identifier after '->'", tok)
                chain.append(tok)
            attrs = self.parse_attrs(context="edge")
            label = attrs.get("pos")
            for a, b in zip(chain, chain[1:]):
                span = Span(a.line, a.column, b.line, b.column + len(b.text))
                self.registry.mention(a.text, Span(a.line, a.column, a.line, a.column + len(a.text)))
                self.registry.mention(b.text, Span(b.line, b.column, b.line, b.column + len(b.text)))
                self.edges.append((a.text, b.text, label, span))
            self._end_statement()
            return

        attrs = self.parse_attrs(context="node")
        span = Span(first.line, first.column, first.line, first.column + len(first.text))
        self.registry.declare(
            first.text,
            span,
            label=attrs.get("label"),
            shape=attrs.get("shape"),
        )
        self._end_statement()

    def _end_statement(self) -> None:
        if self.peek().kind == "punct" and self.peek().text == ";":
            self.next()

    def parse_attrs(self, *, context: str) -> dict:
        tok = self.peek()
        if not (tok.kind == "punct" and tok.text == "["):
            return {}
        open_tok = self.next()
        attrs: dict = {}
        while True:
            tok = self.peek()
            if tok.kind == "eof":
                self._error("unterminated attribute list", open_tok)
            if tok.kind == "punct" and tok.text == "]":
                self.next()
                return attrs
            if tok.kind == "punct" and tok.text in (",", ";"):
                self.next()
                continue
            name_tok = self.next()
            if name_tok.kind != "name":
                self._error("expected an attribute name", name_tok)
            self.expect_punct("=")
            value_tok = self.next()
            if value_tok.kind not in ("name", "string"):
                self._error("expected an attribute value", value_tok)
            self._record_attr(context, name_tok, value_tok, attrs)

    def _record_attr(self, context: str, name_tok: _Token, value_tok: _Token, attrs: dict) -> None:
        name = name_tok.text
        value = value_tok.text
        if context == "node":
            if name == "label":
                attrs["label"] = value
                return
            if name == "shape":
                shape = _DOT_SHAPE_MAP.get(value.lower())
                if shape is None:
                    self._unsupported(f"node shape {value!r} is not supported", value_tok)
                attrs["shape"] = shape
                return
        else:
            if name == "pos":
                attrs["pos"] = value
                return
        self._unsupported(f"attribute {name!r} is not supported on {context}s", name_tok)


def parse_dot(spec: SourceSpec) -> DiagramAst:
    """Parse a Graphviz DOT subset into a DiagramAst."""

    if spec.language != "dot":
        raise ValueError(f"parse_dot called with language {spec.language!r}")
    if spec.structure == "array":
        raise StructureMismatch(
            "arrays must be written in Mermaid; DOT has no block-style array convention",
            line=1,
            column=1,
        )
    if not spec.text.strip():
        raise DiagramSyntaxError("source contains no statements", line=1, column=1)

    registry = _NodeRegistry()
    tokens = _tokenize_dot(_blank_dot_comments(spec.text))
    parser = _DotParser(tokens, registry)
    parser.parse()
    # Graphviz draws nodes as ellipses by default, which tree diagrams render
    # as circles; square only when the author asks for a box shape.
    return _assemble(registry, parser.edges, default_shape="circle")


def _assemble(registry, edge_tuples, *, default_shape: str) -> DiagramAst:
    spans = dict(registry.spans)
    edges = []
    for i, (src, dst, label, span) in enumerate(edge_tuples):
        edges.append(AstEdge(src=src, dst=dst, edge_label=label))
        spans[("edge", i)] = span
    return DiagramAst(nodes=registry.nodes(default_shape), edges=tuple(edges), spans=spans)


def parse(spec: SourceSpec) -> DiagramAst:
    """Parse a SourceSpec with the parser its language declares."""

    if spec.language == "mermaid":
        return parse_mermaid(spec)
    return parse_dot(spec)
