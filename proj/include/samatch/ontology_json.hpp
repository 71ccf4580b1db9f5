#pragma once

// JSON interchange format for ontologies. Schema (documented in
// docs/formats.md): an object with "id", optional "ontology_iri", and three
// arrays: "entities" [{iri, kind}], "labels" [{iri, text}], and "edges"
// [{type, from, to}] with type one of subClassOf | domain | range.

#include <string>
#include <string_view>

#include <json.hpp>

#include "samatch/errors.hpp"
#include "samatch/ontology.hpp"

namespace samatch {

namespace json_detail {

inline EntityKind kind_from_string(const std::string& s) {
    if (s == "class") return EntityKind::Class;
    if (s == "object_property") return EntityKind::ObjectProperty;
    if (s == "data_property") return EntityKind::DataProperty;
    throw MalformedInput("json ontology: unknown entity kind \"" + s + "\"");
}

}  // namespace json_detail

inline Ontology parse_ontology_json(std::string_view bytes, ParseReport* report = nullptr) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInput(std::string("json ontology: ") + e.what());
    }

    ParseReport local;
    ParseReport& rep = report ? *report : local;

    try {
        Ontology::Builder b(doc.value("id", "ontology"));
        if (doc.contains("ontology_iri")) b.set_ontology_iri(doc.at("ontology_iri").get<std::string>());

        for (const auto& e : doc.value("entities", nlohmann::json::array())) {
            const auto kind = json_detail::kind_from_string(e.at("kind").get<std::string>());
            b.add_entity(e.at("iri").get<std::string>(), kind);
            switch (kind) {
                case EntityKind::Class: ++rep.classes; break;
                case EntityKind::ObjectProperty: ++rep.object_properties; break;
                case EntityKind::DataProperty: ++rep.data_properties; break;
            }
        }
        for (const auto& l : doc.value("labels", nlohmann::json::array())) {
            b.add_label(l.at("iri").get<std::string>(), l.at("text").get<std::string>());
            ++rep.labels;
        }
        for (const auto& edge : doc.value("edges", nlohmann::json::array())) {
            const std::string type = edge.at("type").get<std::string>();
            const std::string from = edge.at("from").get<std::string>();
            const std::string to = edge.at("to").get<std::string>();
            if (type == "subClassOf") {
                b.add_subclass_of(from, to);
                ++rep.subclass_axioms;
            } else if (type == "domain") {
                b.add_domain(from, to);
                ++rep.domain_axioms;
            } else if (type == "range") {
                // class-valued for object properties, datatype IRI for data properties
                const EntityId p = b.resolve(from, "range subject");
                if (b.kind_of(p) == EntityKind::ObjectProperty) {
                    b.add_range_class(from, to);
                } else {
                    b.add_range_datatype(from, to);
                }
                ++rep.range_axioms;
            } else {
                throw MalformedInput("json ontology: unknown edge type \"" + type + "\"");
            }
        }
        return b.build();
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInput(std::string("json ontology: ") + e.what());
    }
}

// Canonical serialization: entities sorted by IRI, labels grouped per entity
// in declaration order, edges sorted. parse(serialize(o)) == o.
inline std::string serialize_ontology_json(const Ontology& o) {
    nlohmann::json doc;
    doc["id"] = o.id();
    if (!o.ontology_iri().empty()) doc["ontology_iri"] = o.ontology_iri();

    std::vector<EntityId> order(o.size());
    for (EntityId e = 0; e < o.size(); ++e) order[e] = e;
    std::sort(order.begin(), order.end(),
              [&](EntityId a, EntityId b) { return o.iri(a) < o.iri(b); });

    auto entities = nlohmann::json::array();
    auto labels = nlohmann::json::array();
    std::vector<std::tuple<std::string, std::string, std::string>> edges;
    for (EntityId e : order) {
        entities.push_back({{"iri", o.iri(e)}, {"kind", std::string(kind_name(o.kind(e)))}});
        for (const auto& l : o.labels(e)) labels.push_back({{"iri", o.iri(e)}, {"text", l}});
        if (o.is_class(e)) {
            for (EntityId s : o.superclasses(e)) edges.emplace_back("subClassOf", o.iri(e), o.iri(s));
        } else {
            for (EntityId d : o.domains(e)) edges.emplace_back("domain", o.iri(e), o.iri(d));
            for (EntityId r : o.range_classes(e)) edges.emplace_back("range", o.iri(e), o.iri(r));
            for (const auto& dt : o.range_datatypes(e)) edges.emplace_back("range", o.iri(e), dt);
        }
    }
    std::sort(edges.begin(), edges.end());

    auto edges_json = nlohmann::json::array();
    for (const auto& [type, from, to] : edges)
        edges_json.push_back({{"type", type}, {"from", from}, {"to", to}});

    doc["entities"] = std::move(entities);
    doc["labels"] = std::move(labels);
    doc["edges"] = std::move(edges_json);
    return doc.dump(2) + "\n";
}

}  // namespace samatch
