"""Property graphs and property graph schemas.

A property graph holds labeled nodes and directed labeled edges, each owning
a set of key-value properties. Values carry an explicit datatype so that a
string "46" and an integer "46" stay distinguishable; nothing is inferred
from lexical forms.

Schemas declare node types, edge types (with fixed endpoint node types) and
the property types allowed on each. Property types constrain what may appear,
they do not make properties mandatory.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Mapping

from .errors import AmbiguousCanonicalKey
from .report import ValidationReport, Violation

DATATYPE_KINDS = (
    "String",
    "Integer",
    "Int",
    "Decimal",
    "Double",
    "Boolean",
    "Date",
    "DateTime",
)

# Label of the node property that stores a converted resource's IRI. The
# label is reserved for the conversion machinery: real RDF property IRIs are
# absolute and can never collide with it.
IRI_PROPERTY_KEY = "iri"


@dataclass(frozen=True)
class PgDatatype:
    """A property-graph datatype. Custom carries the IRI of an unmapped RDF datatype."""

    kind: str
    custom_iri: str | None = None

    def __post_init__(self) -> None:
        if self.kind == "Custom":
            if not self.custom_iri:
                raise ValueError("Custom datatype requires an IRI")
        elif self.kind not in DATATYPE_KINDS:
            raise ValueError(f"unknown datatype kind {self.kind!r}")
        elif self.custom_iri is not None:
            raise ValueError("only Custom datatypes carry an IRI")

    def token(self) -> str:
        """Serialized form. Custom datatypes appear as their IRI."""
        return self.custom_iri if self.kind == "Custom" else self.kind

    @classmethod
    def from_token(cls, token: str) -> "PgDatatype":
        if token in DATATYPE_KINDS:
            return cls(token)
        return cls("Custom", token)

    def __str__(self) -> str:
        return self.token()


STRING = PgDatatype("String")
INTEGER = PgDatatype("Integer")
INT = PgDatatype("Int")
DECIMAL = PgDatatype("Decimal")
DOUBLE = PgDatatype("Double")
BOOLEAN = PgDatatype("Boolean")
DATE = PgDatatype("Date")
DATETIME = PgDatatype("DateTime")


def custom_datatype(iri: str) -> PgDatatype:
    return PgDatatype("Custom", iri)


@dataclass(frozen=True)
class PgValue:
    lexical: str
    datatype: PgDatatype

    def __str__(self) -> str:
        return f"{self.lexical!r}:{self.datatype}"


def type_of_value(value: PgValue) -> PgDatatype:
    """Datatype of a value. Values carry their type, so this is an accessor."""
    return value.datatype


@dataclass(frozen=True, eq=False)
class PropertyGraph:
    """Compare with pg_equal, not ==; internal ids are arbitrary."""

    nodes: frozenset[int]
    edges: frozenset[int]
    properties: frozenset[int]
    label: Mapping[int, str]
    prop: Mapping[int, tuple[str, PgValue]]
    ends: Mapping[int, tuple[int, int]]
    attach: Mapping[int, frozenset[int]]

    def is_empty(self) -> bool:
        return not (self.nodes or self.edges)

    def properties_of(self, owner: int) -> list[tuple[str, PgValue]]:
        pids = self.attach.get(owner, frozenset())
        return sorted(
            (self.prop[p] for p in pids),
            key=lambda kv: (kv[0], kv[1].lexical, kv[1].datatype.token()),
        )

    def node_canonical_key(self, n: int) -> tuple:
        props = tuple(
            (k, v.lexical, v.datatype.token()) for k, v in self.properties_of(n)
        )
        return (self.label[n], props)

    def edge_canonical_key(self, e: int) -> tuple:
        src, dst = self.ends[e]
        props = tuple(
            (k, v.lexical, v.datatype.token()) for k, v in self.properties_of(e)
        )
        return (self.node_canonical_key(src), self.label[e], props, self.node_canonical_key(dst))

    def nodes_sorted(self) -> list[int]:
        return sorted(self.nodes, key=lambda n: (self.node_canonical_key(n), n))

    def edges_sorted(self) -> list[int]:
        return sorted(self.edges, key=lambda e: (self.edge_canonical_key(e), e))

    def describe(self, element: int) -> str:
        if element in self.nodes:
            props = ", ".join(f"{k}={v}" for k, v in self.properties_of(element))
            return f"node {self.label[element]}{{{props}}}"
        src, dst = self.ends[element]
        return (
            f"edge {self.label[src]} --{self.label[element]}--> {self.label[dst]}"
        )


@dataclass(frozen=True, eq=False)
class PropertyGraphSchema:
    """Compare with pg_schema_equal, not ==."""

    node_types: frozenset[int]
    edge_types: frozenset[int]
    property_types: frozenset[int]
    label: Mapping[int, str]
    ptype: Mapping[int, tuple[str, PgDatatype]]
    ends: Mapping[int, tuple[int, int]]
    attach: Mapping[int, frozenset[int]]

    def is_empty(self) -> bool:
        return not (self.node_types or self.edge_types)

    def property_types_of(self, owner: int) -> list[tuple[str, PgDatatype]]:
        pts = self.attach.get(owner, frozenset())
        return sorted((self.ptype[pt] for pt in pts), key=lambda kv: (kv[0], kv[1].token()))

    def node_type_key(self, nt: int) -> tuple:
        props = tuple((k, dt.token()) for k, dt in self.property_types_of(nt))
        return (self.label[nt], props)

    def edge_type_key(self, et: int) -> tuple:
        src, dst = self.ends[et]
        props = tuple((k, dt.token()) for k, dt in self.property_types_of(et))
        return (self.label[et], self.label[src], self.label[dst], props)

    def node_types_sorted(self) -> list[int]:
        return sorted(self.node_types, key=lambda nt: (self.node_type_key(nt), nt))

    def edge_types_sorted(self) -> list[int]:
        return sorted(self.edge_types, key=lambda et: (self.edge_type_key(et), et))


class PropertyGraphBuilder:
    def __init__(self) -> None:
        self._ids = itertools.count()
        self._nodes: dict[int, str] = {}
        self._edges: dict[int, tuple[str, int, int]] = {}
        self._props: dict[int, tuple[str, PgValue]] = {}
        self._attach: dict[int, list[int]] = defaultdict(list)

    def add_node(self, label: str) -> int:
        n = next(self._ids)
        self._nodes[n] = label
        return n

    def add_edge(self, label: str, src: int, dst: int) -> int:
        if src not in self._nodes or dst not in self._nodes:
            raise ValueError("edge endpoints must be existing nodes")
        e = next(self._ids)
        self._edges[e] = (label, src, dst)
        return e

    def add_property(self, owner: int, key: str, value: PgValue) -> int:
        if owner not in self._nodes and owner not in self._edges:
            raise ValueError("property owner must be an existing node or edge")
        p = next(self._ids)
        self._props[p] = (key, value)
        self._attach[owner].append(p)
        return p

    def build(self) -> PropertyGraph:
        labels: dict[int, str] = dict(self._nodes)
        ends: dict[int, tuple[int, int]] = {}
        for e, (label, src, dst) in self._edges.items():
            labels[e] = label
            ends[e] = (src, dst)
        return PropertyGraph(
            nodes=frozenset(self._nodes),
            edges=frozenset(self._edges),
            properties=frozenset(self._props),
            label=labels,
            prop=dict(self._props),
            ends=ends,
            attach={o: frozenset(ps) for o, ps in self._attach.items() if ps},
        )


class PropertyGraphSchemaBuilder:
    def __init__(self) -> None:
        self._ids = itertools.count()
        self._node_types: dict[int, str] = {}
        self._edge_types: dict[int, tuple[str, int, int]] = {}
        self._ptypes: dict[int, tuple[str, PgDatatype]] = {}
        self._attach: dict[int, list[int]] = defaultdict(list)

    def add_node_type(self, label: str) -> int:
        if label in self._node_types.values():
            raise ValueError(f"duplicate node type label {label!r}")
        nt = next(self._ids)
        self._node_types[nt] = label
        return nt

    def add_edge_type(self, label: str, src: int, dst: int) -> int:
        if src not in self._node_types or dst not in self._node_types:
            raise ValueError("edge type endpoints must be existing node types")
        et = next(self._ids)
        self._edge_types[et] = (label, src, dst)
        return et

    def add_property_type(self, owner: int, key: str, datatype: PgDatatype) -> int:
        if owner not in self._node_types and owner not in self._edge_types:
            raise ValueError("property type owner must be a node or edge type")
        pt = next(self._ids)
        self._ptypes[pt] = (key, datatype)
        self._attach[owner].append(pt)
        return pt

    def build(self) -> PropertyGraphSchema:
        labels: dict[int, str] = dict(self._node_types)
        ends: dict[int, tuple[int, int]] = {}
        for et, (label, src, dst) in self._edge_types.items():
            labels[et] = label
            ends[et] = (src, dst)
        return PropertyGraphSchema(
            node_types=frozenset(self._node_types),
            edge_types=frozenset(self._edge_types),
            property_types=frozenset(self._ptypes),
            label=labels,
            ptype=dict(self._ptypes),
            ends=ends,
            attach={o: frozenset(ps) for o, ps in self._attach.items() if ps},
        )


def validate_pg(graph: PropertyGraph, schema: PropertyGraphSchema) -> ValidationReport:
    """Check a property graph against a schema. Reports, never raises.

    P1a: node label names a node type. P1b: each node property matches an
    allowed property type by key and datatype. P2a: edge label plus endpoint
    labels name an edge type. P2b: each edge property matches the edge type.

    The reserved string-typed "iri" node property is always allowed: the
    conversion machinery stamps it on every node it creates, and schemas
    derived from RDF schemas have no place to declare it.
    """
    nt_by_label = {schema.label[nt]: nt for nt in schema.node_types}
    allowed: dict[int, set[tuple[str, str]]] = {}
    for owner in list(schema.node_types) + list(schema.edge_types):
        allowed[owner] = {
            (k, dt.token()) for k, dt in schema.property_types_of(owner)
        }
    et_by_signature: dict[tuple[str, str, str], list[int]] = defaultdict(list)
    for et in schema.edge_types_sorted():
        src, dst = schema.ends[et]
        et_by_signature[(schema.label[et], schema.label[src], schema.label[dst])].append(et)

    violations: list[Violation] = []

    for n in graph.nodes_sorted():
        nt = nt_by_label.get(graph.label[n])
        if nt is None:
            violations.append(
                Violation("P1a", graph.describe(n), f"no node type labeled {graph.label[n]!r}")
            )
            continue
        for key, value in graph.properties_of(n):
            if key == IRI_PROPERTY_KEY and value.datatype == STRING:
                continue
            if (key, value.datatype.token()) not in allowed[nt]:
                violations.append(
                    Violation(
                        "P1b",
                        graph.describe(n),
                        f"property {key!r} with type {value.datatype} is not declared "
                        f"for node type {graph.label[n]!r}",
                    )
                )

    for e in graph.edges_sorted():
        src, dst = graph.ends[e]
        signature = (graph.label[e], graph.label[src], graph.label[dst])
        candidates = et_by_signature.get(signature, [])
        if not candidates:
            violations.append(
                Violation(
                    "P2a",
                    graph.describe(e),
                    f"no edge type labeled {signature[0]!r} from {signature[1]!r} "
                    f"to {signature[2]!r}",
                )
            )
            continue
        props = graph.properties_of(e)
        best_unmatched: list[tuple[str, PgValue]] | None = None
        for et in candidates:
            unmatched = [
                (k, v) for k, v in props if (k, v.datatype.token()) not in allowed[et]
            ]
            if best_unmatched is None or len(unmatched) < len(best_unmatched):
                best_unmatched = unmatched
            if not unmatched:
                break
        for key, value in best_unmatched or []:
            violations.append(
                Violation(
                    "P2b",
                    graph.describe(e),
                    f"property {key!r} with type {value.datatype} is not declared "
                    f"for edge type {signature[0]!r}",
                )
            )

    return ValidationReport(tuple(violations))


def pg_equal(a: PropertyGraph, b: PropertyGraph) -> bool:
    """Identity-free equality of property graphs.

    Nodes must be distinguishable by (label, properties); graphs produced by
    the mappings always are, since every node carries an identifying
    property. Raises AmbiguousCanonicalKey otherwise.
    """

    def canonical(graph: PropertyGraph):
        node_keys = [graph.node_canonical_key(n) for n in graph.nodes]
        dupes = [k for k, c in Counter(node_keys).items() if c > 1]
        if dupes:
            raise AmbiguousCanonicalKey(repr(dupes[0]))
        edge_keys = Counter(graph.edge_canonical_key(e) for e in graph.edges)
        return frozenset(node_keys), edge_keys

    return canonical(a) == canonical(b)


def pg_schema_equal(a: PropertyGraphSchema, b: PropertyGraphSchema) -> bool:
    """Identity-free equality of property graph schemas."""

    def canonical(schema: PropertyGraphSchema):
        node_keys = frozenset(schema.node_type_key(nt) for nt in schema.node_types)
        edge_keys = Counter(schema.edge_type_key(et) for et in schema.edge_types)
        return node_keys, edge_keys

    return canonical(a) == canonical(b)
