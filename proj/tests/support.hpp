#pragma once

// Shared test helpers: fixture paths and tiny ontology builders.

#include <cstdlib>
#include <filesystem>
#include <string>

#include "samatch/ontology.hpp"
#include "samatch/text_pipeline.hpp"

#ifndef SAMATCH_FIXTURE_DIR
#define SAMATCH_FIXTURE_DIR "tests/fixtures"
#endif
#ifndef SAMATCH_DATA_DIR
#define SAMATCH_DATA_DIR "data"
#endif

namespace testsupport {

inline std::filesystem::path fixture(const std::string& name) {
    return std::filesystem::path(SAMATCH_FIXTURE_DIR) / name;
}

inline std::filesystem::path data_file(const std::string& name) {
    return std::filesystem::path(SAMATCH_DATA_DIR) / name;
}

// Builds a class-only ontology from (name, parents) pairs; IRIs are
// http://<id>.test#<name>.
struct ClassSpec {
    std::string name;
    std::vector<std::string> parents{};
};

inline samatch::Ontology class_ontology(const std::string& id,
                                        const std::vector<ClassSpec>& classes) {
    samatch::Ontology::Builder b(id);
    auto iri = [&](const std::string& n) { return "http://" + id + ".test#" + n; };
    for (const auto& c : classes) b.add_entity(iri(c.name), samatch::EntityKind::Class);
    for (const auto& c : classes)
        for (const auto& p : c.parents) b.add_subclass_of(iri(c.name), iri(p));
    return b.build();
}

inline samatch::TokenBag bag(std::vector<std::string> tokens) {
    samatch::TokenBag out;
    out.tokens = tokens;
    out.surfaces = std::move(tokens);
    return out;
}

inline samatch::TokenBag bag(std::vector<std::string> stems, std::vector<std::string> surfaces) {
    samatch::TokenBag out;
    out.tokens = std::move(stems);
    out.surfaces = std::move(surfaces);
    return out;
}

}  // namespace testsupport
