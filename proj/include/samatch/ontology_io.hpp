#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "samatch/errors.hpp"
#include "samatch/ontology.hpp"
#include "samatch/ontology_json.hpp"
#include "samatch/ontology_rdf.hpp"

namespace samatch {

enum class OntologyFormat { OwlRdfXml, JsonInterchange };

inline Ontology parse_ontology(std::string_view bytes, OntologyFormat format,
                               std::string id = "ontology", ParseReport* report = nullptr) {
    switch (format) {
        case OntologyFormat::OwlRdfXml: return parse_ontology_rdfxml(bytes, std::move(id), report);
        case OntologyFormat::JsonInterchange: return parse_ontology_json(bytes, report);
    }
    throw ConfigError("unknown ontology format");
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Format chosen by extension: .json loads the interchange format, anything
// else is treated as RDF/XML. The file stem becomes the ontology id.
inline Ontology load_ontology_file(const std::filesystem::path& path, ParseReport* report = nullptr) {
    const std::string bytes = read_file(path);
    const auto format = path.extension() == ".json" ? OntologyFormat::JsonInterchange
                                                    : OntologyFormat::OwlRdfXml;
    return parse_ontology(bytes, format, path.stem().string(), report);
}

}  // namespace samatch
