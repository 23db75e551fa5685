"""Property graph model: typing, validity, canonical equality."""

from __future__ import annotations

import pytest

from conftest import build_company_pg

from rdfpg.errors import AmbiguousCanonicalKey
from rdfpg.generator import GeneratorConfig, gen_rdf_graph
from rdfpg.pg_graph import (
    DATE,
    INTEGER,
    PgDatatype,
    PgValue,
    PropertyGraphBuilder,
    PropertyGraphSchemaBuilder,
    STRING,
    custom_datatype,
    pg_equal,
    pg_schema_equal,
    type_of_value,
    validate_pg,
)
from rdfpg.schema_independent import map_graph as indep_map_graph


def test_type_of_value_examples():
    assert type_of_value(PgValue("46", INTEGER)) == INTEGER
    assert type_of_value(PgValue("", STRING)) == STRING
    assert type_of_value(PgValue("2003-07-01", DATE)) == DATE


def test_datatype_tokens():
    assert PgDatatype.from_token("Date") == DATE
    weird = PgDatatype.from_token("http://dt.example/blend")
    assert weird == custom_datatype("http://dt.example/blend")
    assert weird.token() == "http://dt.example/blend"
    with pytest.raises(ValueError):
        PgDatatype("Nope")
    with pytest.raises(ValueError):
        PgDatatype("Custom")


# -- validity -----------------------------------------------------------------


def test_company_example_is_valid(company_pg, company_pg_schema):
    assert validate_pg(company_pg, company_pg_schema).valid


def test_empty_graph_is_vacuously_valid(company_pg_schema):
    empty = PropertyGraphBuilder().build()
    assert validate_pg(empty, company_pg_schema).valid


def test_retyped_value_violates_p1b(company_pg_schema):
    mutated = build_company_pg(age_type=STRING)
    report = validate_pg(mutated, company_pg_schema)
    assert report.rules_violated() == {"P1b"}


def test_unknown_node_label_violates_p1a(company_pg_schema):
    mutated = build_company_pg(person_label="Company")
    report = validate_pg(mutated, company_pg_schema)
    assert "P1a" in report.rules_violated()
    # the edge's endpoint label no longer matches the edge type either
    assert "P2a" in report.rules_violated()


def test_unknown_edge_label_violates_p2a(company_pg_schema):
    mutated = build_company_pg(edge_label="boss")
    assert validate_pg(mutated, company_pg_schema).rules_violated() == {"P2a"}


def test_undeclared_property_violates_p1b(company_pg_schema):
    mutated = build_company_pg(extra_person_prop=("nickname", PgValue("E", STRING)))
    assert validate_pg(mutated, company_pg_schema).rules_violated() == {"P1b"}


def test_undeclared_edge_property_violates_p2b(company_pg_schema):
    mutated = build_company_pg(edge_prop=("weight", PgValue("1", INTEGER)))
    assert validate_pg(mutated, company_pg_schema).rules_violated() == {"P2b"}


def test_node_without_properties_is_valid(company_pg_schema):
    b = PropertyGraphBuilder()
    b.add_node("Person")
    assert validate_pg(b.build(), company_pg_schema).valid


def test_reserved_iri_property_always_allowed(company_pg_schema):
    allowed = build_company_pg(extra_person_prop=("iri", PgValue("http://x.example/p", STRING)))
    assert validate_pg(allowed, company_pg_schema).valid
    # only the string-typed form is reserved
    retyped = build_company_pg(extra_person_prop=("iri", PgValue("1", INTEGER)))
    assert validate_pg(retyped, company_pg_schema).rules_violated() == {"P1b"}


def test_validation_is_monotone_under_element_removal(company_pg_schema):
    # same invalid node with and without the (also invalid) edge present
    def graph(with_edge: bool):
        b = PropertyGraphBuilder()
        org = b.add_node("Organisation")
        person = b.add_node("Person")
        b.add_property(person, "age", PgValue("46", STRING))
        if with_edge:
            b.add_edge("boss", org, person)
        return b.build()

    full = {(v.rule, v.element) for v in validate_pg(graph(True), company_pg_schema).violations}
    reduced = {(v.rule, v.element) for v in validate_pg(graph(False), company_pg_schema).violations}
    assert reduced <= full


# -- pg_equal -----------------------------------------------------------------


def test_pg_equal_ignores_construction_order(company_pg):
    b = PropertyGraphBuilder()
    person = b.add_node("Person")
    b.add_property(person, "age", PgValue("46", INTEGER))
    b.add_property(person, "birthName", PgValue("Elon Musk", STRING))
    org = b.add_node("Organisation")
    b.add_property(org, "creation", PgValue("2003-07-01", DATE))
    b.add_property(org, "name", PgValue("Tesla, Inc.", STRING))
    edge = b.add_edge("ceo", org, person)
    b.add_property(edge, "since", PgValue("2003", DATE))
    assert pg_equal(company_pg, b.build())


def test_pg_equal_detects_missing_edge_property(company_pg):
    assert not pg_equal(company_pg, build_company_pg(edge_prop=None))


def test_pg_equal_requires_distinguishable_nodes():
    b = PropertyGraphBuilder()
    b.add_node("Person")
    b.add_node("Person")
    twins = b.build()
    with pytest.raises(AmbiguousCanonicalKey):
        pg_equal(twins, twins)


def test_pg_equal_same_conversion_twice():
    graph = gen_rdf_graph(GeneratorConfig(seed=11))
    assert pg_equal(indep_map_graph(graph), indep_map_graph(graph))


def test_pg_equal_is_an_equivalence_on_converted_graphs():
    graphs = [
        indep_map_graph(gen_rdf_graph(GeneratorConfig(seed=s))) for s in range(6)
    ]
    copies = [
        indep_map_graph(gen_rdf_graph(GeneratorConfig(seed=s))) for s in range(6)
    ]
    for g, c in zip(graphs, copies):
        assert pg_equal(g, g)
        assert pg_equal(g, c) == pg_equal(c, g)
    for a in graphs[:3]:
        for b in copies[:3]:
            for c in graphs[:3]:
                if pg_equal(a, b) and pg_equal(b, c):
                    assert pg_equal(a, c)


# -- pg_schema_equal -----------------------------------------------------------


def test_pg_schema_equal_ignores_construction_order(company_pg_schema):
    b = PropertyGraphSchemaBuilder()
    person = b.add_node_type("Person")
    org = b.add_node_type("Organisation")
    b.add_property_type(person, "age", INTEGER)
    b.add_property_type(org, "name", STRING)
    b.add_property_type(org, "creation", DATE)
    b.add_property_type(person, "birthName", STRING)
    ceo = b.add_edge_type("ceo", org, person)
    b.add_property_type(ceo, "since", DATE)
    assert pg_schema_equal(company_pg_schema, b.build())


def test_pg_schema_equal_detects_missing_property_type(company_pg_schema):
    b = PropertyGraphSchemaBuilder()
    org = b.add_node_type("Organisation")
    b.add_property_type(org, "name", STRING)
    b.add_property_type(org, "creation", DATE)
    person = b.add_node_type("Person")
    b.add_property_type(person, "birthName", STRING)
    b.add_property_type(person, "age", INTEGER)
    b.add_edge_type("ceo", org, person)  # no "since"
    assert not pg_schema_equal(company_pg_schema, b.build())


def test_duplicate_node_type_labels_rejected():
    b = PropertyGraphSchemaBuilder()
    b.add_node_type("Person")
    with pytest.raises(ValueError):
        b.add_node_type("Person")


def test_property_ownership_is_disjoint(company_pg):
    owners = list(company_pg.attach.items())
    for i, (_, props_a) in enumerate(owners):
        for _, props_b in owners[i + 1:]:
            assert not (props_a & props_b)
    attached = frozenset().union(*company_pg.attach.values())
    assert attached <= company_pg.properties
