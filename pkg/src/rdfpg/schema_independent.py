"""Schema-independent conversion: any RDF graph into a property graph.

Instead of deriving a schema, this route targets one fixed generic schema:
Resource and Literal node types, ObjectProperty and DatatypeProperty edge
types, each carrying string-typed bookkeeping properties ("iri", "type",
"value"). Every RDF node and edge becomes its own PG element, so inputs the
schema-dependent route rejects (multi-valued properties, untyped resources,
odd datatypes) all pass through losslessly.

The output always conforms to the generic schema, and the inverse mapping
recovers the original RDF graph exactly.
"""

from __future__ import annotations

from .errors import MissingRequiredProperty, SchemaViolation
from .pg_graph import (
    PgValue,
    PropertyGraph,
    PropertyGraphBuilder,
    PropertyGraphSchema,
    PropertyGraphSchemaBuilder,
    STRING,
    validate_pg,
)
from .rdf_graph import RdfGraph, RdfGraphBuilder
from .terms import Iri

RESOURCE_LABEL = "Resource"
LITERAL_LABEL = "Literal"
OBJECT_PROPERTY_LABEL = "ObjectProperty"
DATATYPE_PROPERTY_LABEL = "DatatypeProperty"

IRI_KEY = "iri"
TYPE_KEY = "type"
VALUE_KEY = "value"


def generic_schema() -> PropertyGraphSchema:
    """The fixed schema every converted graph conforms to.

    Each call builds a fresh, structurally identical instance.
    """
    builder = PropertyGraphSchemaBuilder()
    resource = builder.add_node_type(RESOURCE_LABEL)
    builder.add_property_type(resource, IRI_KEY, STRING)
    builder.add_property_type(resource, TYPE_KEY, STRING)
    literal = builder.add_node_type(LITERAL_LABEL)
    builder.add_property_type(literal, VALUE_KEY, STRING)
    builder.add_property_type(literal, TYPE_KEY, STRING)
    object_property = builder.add_edge_type(OBJECT_PROPERTY_LABEL, resource, resource)
    builder.add_property_type(object_property, TYPE_KEY, STRING)
    datatype_property = builder.add_edge_type(DATATYPE_PROPERTY_LABEL, resource, literal)
    builder.add_property_type(datatype_property, TYPE_KEY, STRING)
    return builder.build()


def map_graph(graph: RdfGraph) -> PropertyGraph:
    """RDF graph to a property graph over the generic schema.

    Class labels and datatypes are preserved in "type" properties; all
    property values are plain strings.
    """
    builder = PropertyGraphBuilder()
    node_of: dict[int, int] = {}

    for r in graph.resources_sorted():
        n = builder.add_node(RESOURCE_LABEL)
        builder.add_property(n, IRI_KEY, PgValue(graph.resource_nodes[r].value, STRING))
        builder.add_property(n, TYPE_KEY, PgValue(graph.class_label[r].value, STRING))
        node_of[r] = n
    for lit in graph.literals_sorted():
        n = builder.add_node(LITERAL_LABEL)
        builder.add_property(n, TYPE_KEY, PgValue(graph.class_label[lit].value, STRING))
        builder.add_property(n, VALUE_KEY, PgValue(graph.literal_nodes[lit], STRING))
        node_of[lit] = n

    for dp in graph.datatype_edges_sorted():
        src, lit = graph.datatype_edges[dp]
        e = builder.add_edge(DATATYPE_PROPERTY_LABEL, node_of[src], node_of[lit])
        builder.add_property(e, TYPE_KEY, PgValue(graph.class_label[dp].value, STRING))
    for op in graph.object_edges_sorted():
        src, dst = graph.object_edges[op]
        e = builder.add_edge(OBJECT_PROPERTY_LABEL, node_of[src], node_of[dst])
        builder.add_property(e, TYPE_KEY, PgValue(graph.class_label[op].value, STRING))
    return builder.build()


def map_database(graph: RdfGraph) -> tuple[PropertyGraphSchema, PropertyGraph]:
    """Pair the generic schema with the converted graph.

    Conformance holds for every input by construction; it is asserted here
    because a failure would be a bug in the mapping.
    """
    schema = generic_schema()
    pg = map_graph(graph)
    report = validate_pg(pg, schema)
    if not report.valid:
        raise AssertionError("generic-schema conformance broken:\n" + report.summary())
    return schema, pg


def _single(graph: PropertyGraph, element: int, key: str) -> str:
    values = [v.lexical for k, v in graph.properties_of(element) if k == key]
    if len(values) != 1:
        raise MissingRequiredProperty(graph.describe(element), key, len(values))
    return values[0]


def invert_graph(pg: PropertyGraph) -> RdfGraph:
    """Property graph over the generic schema back to an RDF graph."""
    report = validate_pg(pg, generic_schema())
    if not report.valid:
        raise SchemaViolation(report.summary())

    builder = RdfGraphBuilder()
    element_of: dict[int, int] = {}
    for n in pg.nodes_sorted():
        if pg.label[n] == RESOURCE_LABEL:
            iri = _single(pg, n, IRI_KEY)
            type_iri = _single(pg, n, TYPE_KEY)
            element_of[n] = builder.add_resource(Iri(iri), Iri(type_iri))
        else:
            value = _single(pg, n, VALUE_KEY)
            type_iri = _single(pg, n, TYPE_KEY)
            element_of[n] = builder.add_literal(value, Iri(type_iri))

    for e in pg.edges_sorted():
        src, dst = pg.ends[e]
        type_iri = Iri(_single(pg, e, TYPE_KEY))
        if pg.label[e] == OBJECT_PROPERTY_LABEL:
            builder.add_object_edge(element_of[src], element_of[dst], type_iri)
        else:
            builder.add_datatype_edge(element_of[src], element_of[dst], type_iri)
    return builder.build()
