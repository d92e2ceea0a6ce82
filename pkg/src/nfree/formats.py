"""Poset documents: a line-oriented text format, its JSON twin, and DOT output.

Text format::

    # comment
    name P4
    elements a b c d
    order a<c b<c b<d

``order`` tokens are ``x<y`` or chains ``x<y<z``; keywords may repeat and
accumulate.  Dummy vertices are written ``_d.<lower>.<upper>.<round>``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .errors import InvalidLabel, ParseError, PosetError, UnknownElement
from .poset import DUMMY_PREFIX, Dummy, Original, Poset, VertexId, from_relation

_TOKEN = re.compile(r"\S+")
META_KEYS = ("name", "comment")


@dataclass
class PosetDocument:
    elements: list[str] = field(default_factory=list)
    order: list[tuple[str, str]] = field(default_factory=list)
    meta: dict[str, str] = field(default_factory=dict)

    def to_poset(self) -> Poset:
        resolved = _resolve_names(self.elements)
        pairs = []
        for x, y in self.order:
            for name in (x, y):
                if name not in resolved:
                    raise UnknownElement(f"order mentions undeclared element {name!r}")
            pairs.append((resolved[x], resolved[y]))
        return from_relation([resolved[name] for name in self.elements], pairs)


def _resolve_names(names: list[str]) -> dict[str, VertexId]:
    declared = set(names)
    cache: dict[str, VertexId] = {}

    def resolve(name: str) -> VertexId:
        if name in cache:
            return cache[name]
        if not name.startswith(DUMMY_PREFIX):
            try:
                v = Original(name)
            except InvalidLabel as exc:
                raise ParseError(str(exc)) from None
        else:
            body, _, rnd = name[len(DUMMY_PREFIX):].rpartition(".")
            if not rnd.isdigit() or int(rnd) < 1:
                raise ParseError(f"dummy name {name!r} lacks a positive round number")
            splits = [
                (body[:k], body[k + 1:])
                for k, ch in enumerate(body)
                if ch == "." and body[:k] in declared and body[k + 1:] in declared
            ]
            if len(splits) != 1:
                what = "ambiguous" if splits else "does not name two declared elements"
                raise ParseError(f"dummy name {name!r} {what}")
            lo, hi = splits[0]
            v = Dummy(resolve(lo), resolve(hi), int(rnd))
        cache[name] = v
        return v

    return {name: resolve(name) for name in names}


def parse_poset(text: str) -> PosetDocument:
    doc = PosetDocument()
    seen_elements = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]
        if not tokens:
            continue
        keyword, col = tokens[0]
        rest = tokens[1:]
        if keyword == "elements":
            seen_elements = True
            for label, c in rest:
                if "<" in label:
                    raise ParseError(f"element label {label!r} contains '<'", lineno, c)
                doc.elements.append(label)
        elif keyword == "order":
            for token, c in rest:
                parts = token.split("<")
                if len(parts) < 2 or not all(parts):
                    raise ParseError(f"malformed order token {token!r}, expected x<y", lineno, c)
                doc.order.extend(zip(parts, parts[1:]))
        elif keyword in META_KEYS:
            if not rest:
                raise ParseError(f"{keyword!r} needs a value", lineno, col)
            doc.meta[keyword] = line[rest[0][1] - 1:].strip()
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno, col)
    if not seen_elements:
        raise ParseError("missing 'elements' line")
    return doc


def parse_poset_json(text: str) -> PosetDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict) or "elements" not in data:
        raise ParseError("JSON poset must be an object with an 'elements' field")
    elements = data["elements"]
    if not isinstance(elements, list) or not all(isinstance(x, str) for x in elements):
        raise ParseError("'elements' must be a list of strings")
    order = []
    for item in data.get("relations", []):
        if isinstance(item, str):
            parts = item.split("<")
            if len(parts) < 2 or not all(parts):
                raise ParseError(f"malformed relation {item!r}")
            order.extend(zip(parts, parts[1:]))
        elif isinstance(item, list) and len(item) == 2 and all(isinstance(x, str) for x in item):
            order.append((item[0], item[1]))
        else:
            raise ParseError(f"malformed relation {item!r}")
    meta = data.get("meta", {})
    if not isinstance(meta, dict):
        raise ParseError("'meta' must be an object")
    return PosetDocument(list(elements), order, {str(k): str(v) for k, v in meta.items()})


def _check_printable(p: Poset) -> None:
    names = [str(v) for v in p.vertices]
    if len(set(names)) != len(names):
        raise PosetError("dotted labels make two dummy names coincide; the poset cannot be written")


def serialize_poset(p: Poset, meta: dict[str, str] | None = None) -> str:
    _check_printable(p)
    meta = meta or {}
    lines = [f"{key} {meta[key]}" for key in META_KEYS if meta.get(key)]
    lines.append(" ".join(["elements", *map(str, p.vertices)]))
    lines.append(" ".join(["order", *map(str, p.covers)]))
    return "\n".join(lines) + "\n"


def poset_to_json(p: Poset, meta: dict[str, str] | None = None) -> dict:
    _check_printable(p)
    data = {
        "elements": [str(v) for v in p.vertices],
        "relations": [[str(e.lower), str(e.upper)] for e in p.covers],
    }
    if meta:
        data["meta"] = dict(meta)
    return data


def serialize_poset_json(p: Poset, meta: dict[str, str] | None = None) -> str:
    return json.dumps(poset_to_json(p, meta), indent=2) + "\n"


def load_poset(text: str, *, json_format: bool = False) -> Poset:
    doc = parse_poset_json(text) if json_format else parse_poset(text)
    return doc.to_poset()


def _dot_id(v) -> str:
    return '"' + str(v).replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(p: Poset, name: str = "poset") -> str:
    """Graphviz digraph of the diagram, drawn bottom-up; dummies become points."""
    _check_printable(p)
    out = [f"digraph {_dot_id(name)} {{", "  rankdir=BT;"]
    for v in p.vertices:
        if isinstance(v, Dummy):
            out.append(f'  {_dot_id(v)} [shape=point, width=0.08];')
        else:
            out.append(f"  {_dot_id(v)} [shape=box, label={_dot_id(v)}];")
    for e in p.covers:
        out.append(f"  {_dot_id(e.lower)} -> {_dot_id(e.upper)};")
    out.append("}")
    return "\n".join(out) + "\n"

