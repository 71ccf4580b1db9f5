#include <doctest.h>

#include "samatch/ontology_io.hpp"
#include "support.hpp"

using namespace samatch;

TEST_CASE("json ontology: minimal document") {
    const auto onto = parse_ontology_json(R"({
        "id": "t",
        "entities": [{"iri": "http://x#A", "kind": "class"}],
        "labels": [{"iri": "http://x#A", "text": "Paper"}],
        "edges": []
    })");
    CHECK(onto.size() == 1);
    const EntityId a = onto.require("http://x#A");
    CHECK(onto.kind(a) == EntityKind::Class);
    CHECK(onto.labels(a) == std::vector<std::string>{"Paper"});
    CHECK(onto.entity_name(a) == "Paper");
}

TEST_CASE("json ontology: malformed and empty inputs") {
    CHECK_THROWS_AS(parse_ontology_json("{not json"), MalformedInput);
    CHECK_THROWS_AS(parse_ontology_json(R"({"id":"t","entities":[]})"), EmptyOntology);
    CHECK_THROWS_AS(parse_ontology_json(R"({
        "entities": [{"iri": "http://x#p", "kind": "object_property"}]
    })"),
                    EmptyOntology);
    // edges must reference declared entities
    CHECK_THROWS_AS(parse_ontology_json(R"({
        "entities": [{"iri": "http://x#A", "kind": "class"}],
        "edges": [{"type": "subClassOf", "from": "http://x#A", "to": "http://x#B"}]
    })"),
                    MalformedInput);
}

TEST_CASE("json ontology: subclass cycles are rejected") {
    CHECK_THROWS_AS(parse_ontology_json(R"({
        "entities": [{"iri": "http://x#A", "kind": "class"},
                     {"iri": "http://x#B", "kind": "class"}],
        "edges": [{"type": "subClassOf", "from": "http://x#A", "to": "http://x#B"},
                  {"type": "subClassOf", "from": "http://x#B", "to": "http://x#A"}]
    })"),
                    CyclicHierarchy);
    // self-loop
    CHECK_THROWS_AS(parse_ontology_json(R"({
        "entities": [{"iri": "http://x#A", "kind": "class"}],
        "edges": [{"type": "subClassOf", "from": "http://x#A", "to": "http://x#A"}]
    })"),
                    CyclicHierarchy);
}

TEST_CASE("entity_name: label precedence, fragment, final segment") {
    Ontology::Builder b("t");
    b.add_entity("http://x.org/onto#hasAuthor", EntityKind::ObjectProperty);
    b.add_entity("http://x.org/onto/PaperAbstract", EntityKind::Class);
    b.add_entity("http://x.org/onto#Doc", EntityKind::Class);
    b.add_label("http://x.org/onto#Doc", "conference paper");
    b.add_label("http://x.org/onto#Doc", "second label");
    const Ontology onto = b.build();
    CHECK(onto.entity_name(onto.require("http://x.org/onto#hasAuthor")) == "hasAuthor");
    CHECK(onto.entity_name(onto.require("http://x.org/onto/PaperAbstract")) == "PaperAbstract");
    CHECK(onto.entity_name(onto.require("http://x.org/onto#Doc")) == "conference paper");
    CHECK(onto.labels(onto.require("http://x.org/onto#Doc")).size() == 2);
}

TEST_CASE("superclasses: root, direct edge, diamond") {
    const Ontology onto = testsupport::class_ontology(
        "t", {{"A"}, {"B", {"A"}}, {"C", {"A", "B"}}});
    const EntityId a = onto.require("http://t.test#A");
    const EntityId b = onto.require("http://t.test#B");
    const EntityId c = onto.require("http://t.test#C");
    CHECK(onto.superclasses(a).empty());
    CHECK(onto.superclasses(b) == std::vector<EntityId>{a});
    CHECK(onto.superclasses(c).size() == 2);
    CHECK(onto.subclasses(a).size() == 2);
    CHECK_THROWS_AS(onto.superclasses(99), UnknownEntity);
}

TEST_CASE("superclasses: kind mismatch") {
    const Ontology onto = parse_ontology_json(R"({
        "id": "t",
        "entities": [{"iri": "http://x#A", "kind": "class"},
                     {"iri": "http://x#p", "kind": "object_property"}]
    })");
    CHECK_THROWS_AS(onto.superclasses(onto.require("http://x#p")), KindMismatch);
    CHECK_THROWS_AS(onto.property_signature(onto.require("http://x#A")), KindMismatch);
}

TEST_CASE("property_signature") {
    const Ontology onto = load_ontology_file(testsupport::fixture("confA.json"));
    const auto sig = onto.property_signature(onto.require("http://a.example/onto#hasAuthor"));
    REQUIRE(sig.domains.size() == 1);
    CHECK(onto.iri(sig.domains[0]) == "http://a.example/onto#Paper");
    REQUIRE(sig.range_classes.size() == 1);
    CHECK(onto.iri(sig.range_classes[0]) == "http://a.example/onto#Author");
    CHECK(sig.range_datatypes.empty());

    const auto dsig = onto.property_signature(onto.require("http://a.example/onto#hasTitle"));
    CHECK(dsig.range_classes.empty());
    CHECK(dsig.range_datatypes == std::vector<std::string>{"http://www.w3.org/2001/XMLSchema#string"});

    // no declarations -> empty sets
    const Ontology bare = parse_ontology_json(R"({
        "id": "t",
        "entities": [{"iri": "http://x#A", "kind": "class"},
                     {"iri": "http://x#p", "kind": "object_property"}]
    })");
    const auto empty_sig = bare.property_signature(bare.require("http://x#p"));
    CHECK(empty_sig.domains.empty());
    CHECK(empty_sig.range_classes.empty());
}

TEST_CASE("rdf/xml: subset loading") {
    ParseReport report;
    const Ontology onto = parse_ontology_rdfxml(read_file(testsupport::fixture("confA.rdf")),
                                                "confA", &report);
    CHECK(onto.ontology_iri() == "http://a.example/onto");
    CHECK(report.classes == 6);
    CHECK(report.object_properties == 1);
    CHECK(report.data_properties == 1);

    const EntityId accepted = onto.require("http://a.example/onto#AcceptedPaper");
    const EntityId paper = onto.require("http://a.example/onto#Paper");
    CHECK(onto.superclasses(accepted) == std::vector<EntityId>{paper});
    // the owl:Restriction superclass must be skipped and counted
    CHECK(report.skipped.count("restriction or anonymous superclass") == 1);
    // nested named class object works
    const EntityId author = onto.require("http://a.example/onto#Author");
    REQUIRE(onto.superclasses(author).size() == 1);
    CHECK(onto.iri(onto.superclasses(author)[0]) == "http://a.example/onto#Person");
}

TEST_CASE("rdf/xml: single subclass axiom via rdf:Description typing") {
    ParseReport report;
    const Ontology onto = parse_ontology_rdfxml(R"(<?xml version="1.0"?>
<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
         xmlns:rdfs="http://www.w3.org/2000/01/rdf-schema#"
         xmlns:owl="http://www.w3.org/2002/07/owl#"
         xml:base="http://x.example/o">
  <rdf:Description rdf:about="#A">
    <rdf:type rdf:resource="http://www.w3.org/2002/07/owl#Class"/>
  </rdf:Description>
  <owl:Class rdf:about="#B">
    <rdfs:subClassOf rdf:resource="#A"/>
  </owl:Class>
</rdf:RDF>)",
                                                "t", &report);
    const EntityId a = onto.require("http://x.example/o#A");
    const EntityId b = onto.require("http://x.example/o#B");
    CHECK(onto.superclasses(b) == std::vector<EntityId>{a});
    CHECK(report.subclass_axioms == 1);
}

TEST_CASE("rdf/xml: undeclared subclass object is declared implicitly") {
    const Ontology onto = parse_ontology_rdfxml(R"(<?xml version="1.0"?>
<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
         xmlns:rdfs="http://www.w3.org/2000/01/rdf-schema#"
         xmlns:owl="http://www.w3.org/2002/07/owl#"
         xml:base="http://x.example/o">
  <owl:Class rdf:about="#B">
    <rdfs:subClassOf rdf:resource="#External"/>
  </owl:Class>
</rdf:RDF>)");
    CHECK(onto.find("http://x.example/o#External").has_value());
    CHECK(onto.size() == 2);
}

TEST_CASE("rdf/xml: cyclic hierarchy rejected, non-rdf root rejected") {
    CHECK_THROWS_AS(parse_ontology_rdfxml(R"(<?xml version="1.0"?>
<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
         xmlns:rdfs="http://www.w3.org/2000/01/rdf-schema#"
         xmlns:owl="http://www.w3.org/2002/07/owl#" xml:base="http://x">
  <owl:Class rdf:about="#A"><rdfs:subClassOf rdf:resource="#B"/></owl:Class>
  <owl:Class rdf:about="#B"><rdfs:subClassOf rdf:resource="#A"/></owl:Class>
</rdf:RDF>)"),
                    CyclicHierarchy);
    CHECK_THROWS_AS(parse_ontology_rdfxml("<html></html>"), MalformedInput);
}

TEST_CASE("json round-trip: parse(serialize(o)) == o") {
    for (const char* file : {"confA.json", "confB.json"}) {
        const Ontology onto = load_ontology_file(testsupport::fixture(file));
        const Ontology again = parse_ontology_json(serialize_ontology_json(onto));
        CHECK(onto == again);
        // serialization is canonical, so a second round trip is byte-stable
        CHECK(serialize_ontology_json(onto) == serialize_ontology_json(again));
    }
}

TEST_CASE("rdf -> value-equivalent json fixture") {
    const Ontology from_rdf = load_ontology_file(testsupport::fixture("confA.rdf"));
    const Ontology from_json = load_ontology_file(testsupport::fixture("confA.json"));
    // same entities and edges (ids differ; labels differ only where the RDF
    // carries extra labels)
    CHECK(from_rdf.size() == from_json.size());
    for (EntityId e = 0; e < from_rdf.size(); ++e)
        CHECK(from_json.find(from_rdf.iri(e)).has_value());
}

TEST_CASE("parse_ontology dispatcher") {
    const std::string json = read_file(testsupport::fixture("confA.json"));
    CHECK(parse_ontology(json, OntologyFormat::JsonInterchange).size() == 8);
    const std::string rdf = read_file(testsupport::fixture("confA.rdf"));
    CHECK(parse_ontology(rdf, OntologyFormat::OwlRdfXml).size() == 8);
}
