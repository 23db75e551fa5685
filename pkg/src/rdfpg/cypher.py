"""Textual openCypher import script for a property graph.

The export is a plain script, one statement per element: first a CREATE per
node, then a MATCH...CREATE per edge. Each node receives a synthetic
`_rdfpg_id` property (its canonical index) so edge statements can find their
endpoints without relying on data properties being unique. Statement order
follows the canonical element order used by the JSON serializer, so the
script is deterministic. See docs/cypher-export.md for the dialect notes.
"""

from __future__ import annotations

import re

from .pg_graph import PgValue, PropertyGraph

NODE_ID_KEY = "_rdfpg_id"

_IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_INT_LEXICAL = re.compile(r"^[+-]?[0-9]+$")
_FLOAT_LEXICAL = re.compile(r"^[+-]?([0-9]+\.[0-9]*|\.[0-9]+|[0-9]+)([eE][+-]?[0-9]+)?$")


def _name(text: str) -> str:
    """Bare if it is a plain identifier, backtick-quoted otherwise."""
    if _IDENTIFIER.match(text):
        return text
    return "`" + text.replace("`", "``") + "`"


def _string(text: str) -> str:
    escaped = (
        text.replace("\\", "\\\\")
        .replace("'", "\\'")
        .replace("\n", "\\n")
        .replace("\r", "\\r")
        .replace("\t", "\\t")
    )
    return f"'{escaped}'"


def _value(value: PgValue) -> str:
    kind = value.datatype.kind
    lexical = value.lexical
    if kind in ("Integer", "Int") and _INT_LEXICAL.match(lexical):
        return lexical
    if kind in ("Decimal", "Double") and _FLOAT_LEXICAL.match(lexical):
        return lexical
    if kind == "Boolean" and lexical.lower() in ("true", "false"):
        return lexical.lower()
    return _string(lexical)


def _property_map(pairs: list[tuple[str, str]]) -> str:
    inner = ", ".join(f"{_name(key)}: {rendered}" for key, rendered in pairs)
    return "{" + inner + "}"


def export_import_script(graph: PropertyGraph) -> str:
    """CREATE statements for every node, then every edge. Empty graph, empty script."""
    statements: list[str] = []
    index_of: dict[int, int] = {}
    for i, n in enumerate(graph.nodes_sorted()):
        index_of[n] = i
        pairs = [(NODE_ID_KEY, str(i))]
        pairs += [(k, _value(v)) for k, v in graph.properties_of(n)]
        statements.append(f"CREATE (:{_name(graph.label[n])} {_property_map(pairs)});")
    for e in graph.edges_sorted():
        src, dst = graph.ends[e]
        pairs = [(k, _value(v)) for k, v in graph.properties_of(e)]
        props = f" {_property_map(pairs)}" if pairs else ""
        statements.append(
            f"MATCH (a {{{_name(NODE_ID_KEY)}: {index_of[src]}}}), "
            f"(b {{{_name(NODE_ID_KEY)}: {index_of[dst]}}}) "
            f"CREATE (a)-[:{_name(graph.label[e])}{props}]->(b);"
        )
    return "\n".join(statements) + ("\n" if statements else "")
