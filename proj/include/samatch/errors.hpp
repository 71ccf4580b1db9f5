#pragma once

#include <stdexcept>
#include <string>

namespace samatch {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntactically invalid input document (XML/JSON/WordNet/stop list).
struct MalformedInput : Error {
    explicit MalformedInput(const std::string& msg) : Error(msg) {}
};

// Subclass cycle detected while loading an ontology.
struct CyclicHierarchy : Error {
    explicit CyclicHierarchy(const std::string& msg) : Error(msg) {}
};

// Ontology contains zero classes.
struct EmptyOntology : Error {
    explicit EmptyOntology(const std::string& msg) : Error(msg) {}
};

// Entity not present in the ontology it was looked up in.
struct UnknownEntity : Error {
    explicit UnknownEntity(const std::string& msg) : Error(msg) {}
};

// Operation applied to an entity of the wrong kind (class vs property).
struct KindMismatch : Error {
    explicit KindMismatch(const std::string& msg) : Error(msg) {}
};

// Raw name was empty or tokenized to nothing.
struct EmptyName : Error {
    explicit EmptyName(const std::string& msg) : Error(msg) {}
};

// Token bag handed to a metric was empty.
struct EmptyBag : Error {
    explicit EmptyBag(const std::string& msg) : Error(msg) {}
};

// Alignment file declares the same (entity1, entity2) cell twice.
struct DuplicateCell : Error {
    explicit DuplicateCell(const std::string& msg) : Error(msg) {}
};

// Search state admits no move (empty state over an empty candidate set).
struct NoMoveAvailable : Error {
    explicit NoMoveAvailable(const std::string& msg) : Error(msg) {}
};

// Invalid run configuration (bad paths, out-of-range parameters).
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Track task directory is missing its reference alignment.
struct MissingReference : Error {
    explicit MissingReference(const std::string& msg) : Error(msg) {}
};

}  // namespace samatch
