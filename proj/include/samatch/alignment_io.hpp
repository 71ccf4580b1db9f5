#pragma once

// Alignment-format RDF/XML (INRIA Alignment API level 0): <Alignment> with
// <map><Cell> children carrying entity1/entity2/relation/measure.

#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>

#include "samatch/alignment.hpp"
#include "samatch/errors.hpp"
#include "samatch/xml.hpp"

namespace samatch {

namespace alignment_io_detail {

constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";

inline std::string format_measure(double m) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", m);
    return buf;
}

inline void collect_cells(const xml::Element& elem, std::vector<const xml::Element*>& out) {
    if (elem.local == "Cell") {
        out.push_back(&elem);
        return;
    }
    for (const auto& c : elem.children) collect_cells(c, out);
}

inline const xml::Element* find_local(const xml::Element& elem, std::string_view local) {
    for (const auto& c : elem.children)
        if (c.local == local) return &c;
    return nullptr;
}

inline std::string onto_ref(const xml::Element& alignment, std::string_view local) {
    const xml::Element* o = find_local(alignment, local);
    if (!o) return {};
    if (const auto* res = o->attr(kRdf, "resource")) return *res;
    for (const auto& c : o->children) {
        if (const auto* about = c.attr(kRdf, "about")) return *about;
        if (const auto* loc = find_local(c, "location")) return loc->trimmed_text();
    }
    return o->trimmed_text();
}

inline const xml::Element* find_alignment(const xml::Element& elem) {
    if (elem.local == "Alignment") return &elem;
    for (const auto& c : elem.children)
        if (const auto* found = find_alignment(c)) return found;
    return nullptr;
}

}  // namespace alignment_io_detail

// Byte-stable writer: cells sorted by (entity1, entity2), measures printed
// with six decimal digits.
inline std::string write_alignment(const Alignment& alignment) {
    using alignment_io_detail::format_measure;

    Alignment sorted = alignment;
    sorted.sort_by_entities();

    std::string out;
    out += "<?xml version='1.0' encoding='utf-8' standalone='no'?>\n";
    out += "<rdf:RDF xmlns='http://knowledgeweb.semanticweb.org/heterogeneity/alignment'\n";
    out += "         xmlns:rdf='http://www.w3.org/1999/02/22-rdf-syntax-ns#'\n";
    out += "         xmlns:xsd='http://www.w3.org/2001/XMLSchema#'>\n";
    out += "<Alignment>\n";
    out += "<xml>yes</xml>\n";
    out += "<level>0</level>\n";
    out += "<type>11</type>\n";
    if (!sorted.onto1.empty())
        out += "<onto1>" + xml::escape(sorted.onto1) + "</onto1>\n";
    if (!sorted.onto2.empty())
        out += "<onto2>" + xml::escape(sorted.onto2) + "</onto2>\n";
    for (const auto& c : sorted.correspondences()) {
        out += "<map>\n";
        out += "  <Cell>\n";
        out += "    <entity1 rdf:resource='" + xml::escape(c.entity1) + "'/>\n";
        out += "    <entity2 rdf:resource='" + xml::escape(c.entity2) + "'/>\n";
        out += "    <relation>" + xml::escape(c.relation) + "</relation>\n";
        out += "    <measure rdf:datatype='http://www.w3.org/2001/XMLSchema#float'>" +
               format_measure(c.measure) + "</measure>\n";
        out += "  </Cell>\n";
        out += "</map>\n";
    }
    out += "</Alignment>\n";
    out += "</rdf:RDF>\n";
    return out;
}

// Reads the level-0 subset. Missing <measure> defaults to 1.0, missing
// <relation> to "=". Duplicate (entity1, entity2) cells are an error.
inline Alignment read_alignment(std::string_view bytes) {
    using namespace alignment_io_detail;

    const xml::Element root = xml::parse(bytes);
    const xml::Element* alignment_elem = find_alignment(root);
    if (!alignment_elem) throw MalformedInput("alignment: no <Alignment> element");

    Alignment out;
    out.onto1 = onto_ref(*alignment_elem, "onto1");
    out.onto2 = onto_ref(*alignment_elem, "onto2");

    std::vector<const xml::Element*> cells;
    for (const auto& c : alignment_elem->children) collect_cells(c, cells);

    for (const auto* cell : cells) {
        Correspondence c;
        const xml::Element* e1 = find_local(*cell, "entity1");
        const xml::Element* e2 = find_local(*cell, "entity2");
        if (!e1 || !e2) throw MalformedInput("alignment: cell without entity1/entity2");
        const std::string* r1 = e1->attr(kRdf, "resource");
        const std::string* r2 = e2->attr(kRdf, "resource");
        c.entity1 = r1 ? *r1 : e1->trimmed_text();
        c.entity2 = r2 ? *r2 : e2->trimmed_text();
        if (c.entity1.empty() || c.entity2.empty())
            throw MalformedInput("alignment: cell with empty entity IRI");
        if (const auto* rel = find_local(*cell, "relation")) {
            c.relation = rel->trimmed_text();
            if (c.relation.empty()) c.relation = "=";
        }
        if (const auto* measure = find_local(*cell, "measure")) {
            const std::string text = measure->trimmed_text();
            try {
                c.measure = std::stod(text);
            } catch (const std::exception&) {
                throw MalformedInput("alignment: bad measure \"" + text + "\"");
            }
            if (!(c.measure >= 0.0 && c.measure <= 1.0))
                throw MalformedInput("alignment: measure out of [0,1]: " + text);
        }
        out.add(std::move(c));
    }
    return out;
}

}  // namespace samatch
