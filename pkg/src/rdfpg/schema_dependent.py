"""Schema-dependent conversion between RDF databases and PG databases.

The forward direction turns an RDF graph schema into a property graph schema
and an RDF graph into a property graph:

  * every user class becomes a node type (datatype classes and reserved
    vocabulary terms are excluded),
  * a property whose range is a datatype becomes a property type on the
    domain's node type,
  * any other property becomes an edge type,
  * every resource becomes a node labeled with its class, holding an "iri"
    property plus one property per datatype edge,
  * every object edge becomes a PG edge.

The inverse direction reverses each rule, recovering the original database
exactly. Datatypes cross the boundary through a fixed one-to-one table;
unmapped RDF datatypes ride along as custom PG datatypes so nothing is lost.
"""

from __future__ import annotations

import warnings

from .errors import (
    DuplicatePropertyLabel,
    MissingEndpointType,
    MissingIriProperty,
    NonIriLabel,
    ValidityWarning,
)
from .pg_graph import (
    BOOLEAN,
    DATE,
    DATETIME,
    DECIMAL,
    DOUBLE,
    INT,
    INTEGER,
    IRI_PROPERTY_KEY,
    PgDatatype,
    PgValue,
    PropertyGraph,
    PropertyGraphBuilder,
    PropertyGraphSchema,
    PropertyGraphSchemaBuilder,
    STRING,
    custom_datatype,
    validate_pg,
)
from .rdf_graph import (
    RdfGraph,
    RdfGraphBuilder,
    RdfGraphSchema,
    RdfGraphSchemaBuilder,
    validate_rdf,
)
from .terms import (
    Iri,
    SUPPORTED_DATATYPES,
    VOCABULARY_TERMS,
    XSD_BOOLEAN,
    XSD_DATE,
    XSD_DATETIME,
    XSD_DECIMAL,
    XSD_DOUBLE,
    XSD_INT,
    XSD_INTEGER,
    XSD_STRING,
)

IRI_KEY = IRI_PROPERTY_KEY

# Class IRIs that never become node types: datatype classes turn into
# property types instead, and vocabulary terms never name classes at all.
EXCLUDED_CLASS_IRIS = frozenset(SUPPORTED_DATATYPES | VOCABULARY_TERMS)


class DatatypeCorrespondence:
    """One-to-one map between RDF datatype IRIs and PG datatypes.

    Datatypes outside the table map to Custom carrying the IRI, which keeps
    the correspondence invertible over everything it ever produces.
    """

    def __init__(self, table: dict[Iri, PgDatatype]):
        self._forward = dict(table)
        self._backward = {dt: iri for iri, dt in table.items()}
        if len(self._backward) != len(self._forward):
            raise ValueError("datatype correspondence must be one-to-one")

    def to_pg(self, datatype: Iri) -> PgDatatype:
        mapped = self._forward.get(datatype)
        return mapped if mapped is not None else custom_datatype(datatype.value)

    def to_rdf(self, datatype: PgDatatype) -> Iri:
        if datatype.kind == "Custom":
            return Iri(datatype.custom_iri)
        iri = self._backward.get(datatype)
        if iri is None:
            raise KeyError(f"no RDF datatype corresponds to {datatype}")
        return iri


DEFAULT_CORRESPONDENCE = DatatypeCorrespondence(
    {
        XSD_STRING: STRING,
        XSD_INTEGER: INTEGER,
        XSD_INT: INT,
        XSD_DECIMAL: DECIMAL,
        XSD_DOUBLE: DOUBLE,
        XSD_BOOLEAN: BOOLEAN,
        XSD_DATE: DATE,
        XSD_DATETIME: DATETIME,
    }
)

assert set(DEFAULT_CORRESPONDENCE._forward) == SUPPORTED_DATATYPES


def map_schema(
    schema: RdfGraphSchema,
    correspondence: DatatypeCorrespondence = DEFAULT_CORRESPONDENCE,
) -> PropertyGraphSchema:
    """RDF graph schema to property graph schema."""
    builder = PropertyGraphSchemaBuilder()
    node_type_of: dict[int, int] = {}
    for rc in schema.classes_sorted():
        iri = schema.class_nodes[rc]
        if iri not in EXCLUDED_CLASS_IRIS:
            node_type_of[rc] = builder.add_node_type(iri.value)

    for pc in schema.properties_sorted():
        prop_iri = schema.property_edges[pc]
        rc1, rc2 = schema.endpoints[pc]
        domain_nt = node_type_of.get(rc1)
        if domain_nt is None:
            raise MissingEndpointType(
                prop_iri.value, schema.class_nodes[rc1].value, "domain"
            )
        range_iri = schema.class_nodes[rc2]
        if range_iri in SUPPORTED_DATATYPES:
            builder.add_property_type(
                domain_nt, prop_iri.value, correspondence.to_pg(range_iri)
            )
        else:
            range_nt = node_type_of.get(rc2)
            if range_nt is None:
                raise MissingEndpointType(prop_iri.value, range_iri.value, "range")
            builder.add_edge_type(prop_iri.value, domain_nt, range_nt)
    return builder.build()


def map_graph(
    graph: RdfGraph,
    correspondence: DatatypeCorrespondence = DEFAULT_CORRESPONDENCE,
) -> PropertyGraph:
    """RDF graph to property graph.

    Node properties are keyed by label, so a resource holding two values for
    the same datatype property cannot be represented here; that case needs
    the schema-independent mapping.
    """
    builder = PropertyGraphBuilder()
    node_of: dict[int, int] = {}
    for r in graph.resources_sorted():
        n = builder.add_node(graph.class_label[r].value)
        builder.add_property(n, IRI_KEY, PgValue(graph.resource_nodes[r].value, STRING))
        node_of[r] = n

    seen: set[tuple[int, str]] = set()
    for dp in graph.datatype_edges_sorted():
        src, lit = graph.datatype_edges[dp]
        key = graph.class_label[dp].value
        if (src, key) in seen:
            raise DuplicatePropertyLabel(graph.resource_nodes[src].value, key)
        seen.add((src, key))
        value = PgValue(
            graph.literal_nodes[lit], correspondence.to_pg(graph.class_label[lit])
        )
        builder.add_property(node_of[src], key, value)

    for op in graph.object_edges_sorted():
        src, dst = graph.object_edges[op]
        builder.add_edge(graph.class_label[op].value, node_of[src], node_of[dst])
    return builder.build()


def map_database(
    schema: RdfGraphSchema,
    graph: RdfGraph,
    correspondence: DatatypeCorrespondence = DEFAULT_CORRESPONDENCE,
) -> tuple[PropertyGraphSchema, PropertyGraph]:
    """Convert a whole RDF database.

    An invalid input database is still converted, with a warning. For valid
    input within the mapping's domain, the produced graph is checked against
    the produced schema; a failure there would be a bug in the mapping, so
    it raises. Resources whose class is a datatype or vocabulary IRI are
    formally valid but have no node type on the PG side; they convert, with
    a warning, and the output check is skipped.
    """
    input_report = validate_rdf(graph, schema)
    if not input_report.valid:
        warnings.warn(
            f"input RDF database is invalid ({len(input_report.violations)} violation(s)); "
            "converting anyway",
            ValidityWarning,
            stacklevel=2,
        )
    excluded_classed = sorted(
        graph.resource_nodes[r].value
        for r in graph.resource_nodes
        if graph.class_label[r] in EXCLUDED_CLASS_IRIS
    )
    if excluded_classed:
        warnings.warn(
            f"{len(excluded_classed)} resource(s) are classed with datatype or "
            f"vocabulary IRIs (e.g. {excluded_classed[0]}) and will not match any "
            "node type",
            ValidityWarning,
            stacklevel=2,
        )
    pg_schema = map_schema(schema, correspondence)
    pg = map_graph(graph, correspondence)
    if input_report.valid and not excluded_classed:
        output_report = validate_pg(pg, pg_schema)
        if not output_report.valid:
            raise AssertionError(
                "mapping broke validity:\n" + output_report.summary()
            )
    return pg_schema, pg


def invert_schema(
    pg_schema: PropertyGraphSchema,
    correspondence: DatatypeCorrespondence = DEFAULT_CORRESPONDENCE,
) -> RdfGraphSchema:
    """Property graph schema back to an RDF graph schema."""
    builder = RdfGraphSchemaBuilder()
    class_of_label: dict[str, int] = {}

    def class_for(iri: Iri) -> int:
        rc = builder.add_class(iri)
        class_of_label[iri.value] = rc
        return rc

    for nt in pg_schema.node_types_sorted():
        class_for(Iri(pg_schema.label[nt]))
    datatypes = sorted(
        {dt for _, dt in pg_schema.ptype.values()}, key=lambda dt: dt.token()
    )
    for dt in datatypes:
        class_for(correspondence.to_rdf(dt))

    for et in pg_schema.edge_types_sorted():
        src, dst = pg_schema.ends[et]
        builder.add_property(
            Iri(pg_schema.label[et]),
            class_of_label[pg_schema.label[src]],
            class_of_label[pg_schema.label[dst]],
        )
    for nt in pg_schema.node_types_sorted():
        domain = class_of_label[pg_schema.label[nt]]
        for key, dt in pg_schema.property_types_of(nt):
            builder.add_property(
                Iri(key), domain, class_of_label[correspondence.to_rdf(dt).value]
            )
    return builder.build()


def invert_graph(
    pg: PropertyGraph,
    correspondence: DatatypeCorrespondence = DEFAULT_CORRESPONDENCE,
) -> RdfGraph:
    """Property graph back to an RDF graph.

    Every node must hold exactly one "iri" property; node labels, edge labels
    and property keys must be usable as IRIs. Edge properties have no RDF
    counterpart under this mapping and are dropped with a warning.
    """
    builder = RdfGraphBuilder()
    resource_of: dict[int, int] = {}
    for n in pg.nodes_sorted():
        props = pg.properties_of(n)
        iri_values = [v for k, v in props if k == IRI_KEY]
        if len(iri_values) != 1:
            raise MissingIriProperty(pg.describe(n))
        try:
            label = Iri(pg.label[n])
        except ValueError:
            raise NonIriLabel(pg.describe(n), pg.label[n]) from None
        resource_of[n] = builder.add_resource(Iri(iri_values[0].lexical), label)
        for key, value in props:
            if key == IRI_KEY:
                continue
            try:
                prop_iri = Iri(key)
            except ValueError:
                raise NonIriLabel(pg.describe(n), key) from None
            lit = builder.add_literal(value.lexical, correspondence.to_rdf(value.datatype))
            builder.add_datatype_edge(resource_of[n], lit, prop_iri)

    dropped = 0
    for e in pg.edges_sorted():
        src, dst = pg.ends[e]
        try:
            label = Iri(pg.label[e])
        except ValueError:
            raise NonIriLabel(pg.describe(e), pg.label[e]) from None
        builder.add_object_edge(resource_of[src], resource_of[dst], label)
        dropped += len(pg.attach.get(e, ()))
    if dropped:
        warnings.warn(
            f"{dropped} edge propert{'y' if dropped == 1 else 'ies'} have no RDF "
            "counterpart and were dropped",
            stacklevel=2,
        )
    return builder.build()


def invert_database(
    pg_schema: PropertyGraphSchema,
    pg: PropertyGraph,
    correspondence: DatatypeCorrespondence = DEFAULT_CORRESPONDENCE,
) -> tuple[RdfGraphSchema, RdfGraph]:
    return invert_schema(pg_schema, correspondence), invert_graph(pg, correspondence)
