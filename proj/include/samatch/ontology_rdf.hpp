#pragma once

// RDF/XML reader for the OWL subset the matcher consumes: owl:Class,
// owl:ObjectProperty, owl:DatatypeProperty, rdfs:subClassOf with named
// objects, rdfs:domain, rdfs:range, rdfs:label. Everything else (restrictions,
// unions, imports, annotations, anonymous nodes) is skipped and counted.

#include <cctype>
#include <string>
#include <string_view>

#include "samatch/errors.hpp"
#include "samatch/ontology.hpp"
#include "samatch/xml.hpp"

namespace samatch {

namespace rdf_detail {

constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
constexpr std::string_view kXml = "http://www.w3.org/XML/1998/namespace";

inline bool has_scheme(std::string_view iri) {
    if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri[0]))) return false;
    for (std::size_t i = 1; i < iri.size(); ++i) {
        const char c = iri[i];
        if (c == ':') return true;
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
            return false;
    }
    return false;
}

struct Reader {
    Ontology::Builder builder;
    ParseReport& report;
    std::string base;

    Reader(std::string id, ParseReport& rep) : builder(std::move(id)), report(rep) {}

    std::string resolve(std::string_view ref) const {
        if (ref.empty()) return base;
        if (has_scheme(ref)) return std::string(ref);
        if (ref[0] == '#') return base + std::string(ref);
        return base + "#" + std::string(ref);
    }

    // rdf:about / rdf:ID, resolved against the document base
    std::string subject_iri(const xml::Element& e) const {
        if (const auto* about = e.attr(kRdf, "about")) return resolve(*about);
        if (const auto* id = e.attr(kRdf, "ID")) return base + "#" + *id;
        return {};
    }

    void ensure_class(const std::string& iri) {
        if (!builder.has(iri)) builder.add_entity(iri, EntityKind::Class);
    }

    bool declared_as_class(const std::string& iri) const {
        return builder.has(iri) &&
               builder.kind_of(builder.resolve(iri, "lookup")) == EntityKind::Class;
    }

    // The named class an axiom element points to: an rdf:resource attribute
    // or a nested owl:Class with a subject IRI. Empty when anonymous.
    std::string named_class_object(const xml::Element& axiom) const {
        if (const auto* res = axiom.attr(kRdf, "resource")) return resolve(*res);
        if (const auto* nested = axiom.child(kOwl, "Class")) return subject_iri(*nested);
        return {};
    }

    void declare(const xml::Element& node) {
        std::string iri = subject_iri(node);
        if (node.ns == kOwl && node.local == "Class") {
            if (iri.empty()) { report.skip("anonymous class"); return; }
            builder.add_entity(iri, EntityKind::Class);
        } else if (node.ns == kOwl && node.local == "ObjectProperty") {
            if (iri.empty()) { report.skip("anonymous property"); return; }
            builder.add_entity(iri, EntityKind::ObjectProperty);
        } else if (node.ns == kOwl && node.local == "DatatypeProperty") {
            if (iri.empty()) { report.skip("anonymous property"); return; }
            builder.add_entity(iri, EntityKind::DataProperty);
        } else if (node.ns == kOwl && node.local == "Ontology") {
            builder.set_ontology_iri(iri);
            for (const auto& c : node.children)
                if (c.ns == kOwl && c.local == "imports") report.skip("imports");
        } else if (node.ns == kRdf && node.local == "Description") {
            for (const auto& c : node.children) {
                if (c.ns != kRdf || c.local != "type") continue;
                const auto* res = c.attr(kRdf, "resource");
                if (!res) continue;
                if (iri.empty()) { report.skip("anonymous node"); return; }
                if (*res == std::string(kOwl) + "Class")
                    builder.add_entity(iri, EntityKind::Class);
                else if (*res == std::string(kOwl) + "ObjectProperty")
                    builder.add_entity(iri, EntityKind::ObjectProperty);
                else if (*res == std::string(kOwl) + "DatatypeProperty")
                    builder.add_entity(iri, EntityKind::DataProperty);
            }
        } else {
            report.skip("node " + node.local);
        }
    }

    void read_axioms(const xml::Element& node) {
        const std::string iri = subject_iri(node);
        if (iri.empty() || !builder.has(iri)) return;
        const EntityKind kind = builder.kind_of(builder.resolve(iri, "subject"));

        for (const auto& c : node.children) {
            if (c.ns == kRdfs && c.local == "label") {
                builder.add_label(iri, c.trimmed_text());
                ++report.labels;
            } else if (c.ns == kRdfs && c.local == "subClassOf") {
                if (kind != EntityKind::Class) { report.skip("subClassOf on property"); continue; }
                const std::string super = named_class_object(c);
                if (super.empty()) { report.skip("restriction or anonymous superclass"); continue; }
                ensure_class(super);
                if (!declared_as_class(super)) { report.skip("subClassOf non-class object"); continue; }
                builder.add_subclass_of(iri, super);
                ++report.subclass_axioms;
            } else if (c.ns == kRdfs && c.local == "domain") {
                if (kind == EntityKind::Class) { report.skip("domain on class"); continue; }
                const std::string dom = named_class_object(c);
                if (dom.empty()) { report.skip("anonymous domain"); continue; }
                ensure_class(dom);
                if (!declared_as_class(dom)) { report.skip("domain non-class object"); continue; }
                builder.add_domain(iri, dom);
                ++report.domain_axioms;
            } else if (c.ns == kRdfs && c.local == "range") {
                if (kind == EntityKind::Class) { report.skip("range on class"); continue; }
                if (kind == EntityKind::ObjectProperty) {
                    const std::string rng = named_class_object(c);
                    if (rng.empty()) { report.skip("anonymous range"); continue; }
                    ensure_class(rng);
                    if (!declared_as_class(rng)) { report.skip("range non-class object"); continue; }
                    builder.add_range_class(iri, rng);
                } else {
                    const auto* res = c.attr(kRdf, "resource");
                    if (!res || res->empty()) { report.skip("anonymous datatype range"); continue; }
                    builder.add_range_datatype(iri, resolve(*res));
                }
                ++report.range_axioms;
            } else if (c.ns == kRdf && c.local == "type") {
                // consumed during declaration
            } else {
                report.skip(c.local);
            }
        }
    }
};

}  // namespace rdf_detail

inline Ontology parse_ontology_rdfxml(std::string_view bytes, std::string id = "ontology",
                                      ParseReport* report = nullptr) {
    using namespace rdf_detail;
    const xml::Element root = xml::parse(bytes);
    if (root.ns != kRdf || root.local != "RDF")
        throw MalformedInput("rdf/xml: root element is not rdf:RDF");

    ParseReport local;
    ParseReport& rep = report ? *report : local;

    Reader reader(std::move(id), rep);
    if (const auto* b = root.attr(kXml, "base")) reader.base = *b;

    for (const auto& node : root.children) reader.declare(node);
    for (const auto& node : root.children) reader.read_axioms(node);

    Ontology onto = reader.builder.build();
    for (EntityId e = 0; e < onto.size(); ++e) {
        switch (onto.kind(e)) {
            case EntityKind::Class: ++rep.classes; break;
            case EntityKind::ObjectProperty: ++rep.object_properties; break;
            case EntityKind::DataProperty: ++rep.data_properties; break;
        }
    }
    return onto;
}

}  // namespace samatch
