#pragma once

// Typed entity store for one ontology: classes, object/data properties,
// labels, subsumption edges, property domains and ranges. Immutable after
// build; safe for concurrent reads.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "samatch/errors.hpp"

namespace samatch {

enum class EntityKind : std::uint8_t { Class, ObjectProperty, DataProperty };

inline std::string_view kind_name(EntityKind k) {
    switch (k) {
        case EntityKind::Class: return "class";
        case EntityKind::ObjectProperty: return "object_property";
        case EntityKind::DataProperty: return "data_property";
    }
    return "unknown";
}

using EntityId = std::uint32_t;

struct EntityRef {
    std::string iri;
    EntityKind kind;

    friend bool operator==(const EntityRef&, const EntityRef&) = default;
};

// Local fragment of an IRI: the part after '#', else after the final '/'.
inline std::string iri_local_fragment(std::string_view iri) {
    const auto hash = iri.find('#');
    if (hash != std::string_view::npos) return std::string(iri.substr(hash + 1));
    const auto slash = iri.rfind('/');
    if (slash != std::string_view::npos) return std::string(iri.substr(slash + 1));
    return std::string(iri);
}

// Counters describing what a parse consumed and what it skipped.
struct ParseReport {
    std::size_t classes = 0;
    std::size_t object_properties = 0;
    std::size_t data_properties = 0;
    std::size_t labels = 0;
    std::size_t subclass_axioms = 0;
    std::size_t domain_axioms = 0;
    std::size_t range_axioms = 0;
    std::map<std::string, std::size_t> skipped;

    void skip(const std::string& what) { ++skipped[what]; }

    std::size_t skipped_total() const {
        std::size_t n = 0;
        for (const auto& [_, c] : skipped) n += c;
        return n;
    }

    std::string summary() const {
        std::ostringstream os;
        os << "classes=" << classes << " object_properties=" << object_properties
           << " data_properties=" << data_properties << " labels=" << labels
           << " subclass_axioms=" << subclass_axioms << " domain_axioms=" << domain_axioms
           << " range_axioms=" << range_axioms << " skipped=" << skipped_total();
        for (const auto& [what, count] : skipped) os << " [" << what << " x" << count << "]";
        return os.str();
    }
};

struct PropertySignature {
    std::vector<EntityId> domains;
    std::vector<EntityId> range_classes;      // object properties
    std::vector<std::string> range_datatypes; // data properties
};

class Ontology {
public:
    class Builder;

    const std::string& id() const { return id_; }
    const std::string& ontology_iri() const { return ontology_iri_; }

    std::size_t size() const { return iris_.size(); }

    EntityKind kind(EntityId e) const { return kinds_[check(e)]; }
    const std::string& iri(EntityId e) const { return iris_[check(e)]; }
    const std::vector<std::string>& labels(EntityId e) const { return labels_[check(e)]; }

    EntityRef ref(EntityId e) const { return {iris_[check(e)], kinds_[e]}; }

    std::optional<EntityId> find(std::string_view iri) const {
        auto it = by_iri_.find(std::string(iri));
        if (it == by_iri_.end()) return std::nullopt;
        return it->second;
    }

    EntityId require(std::string_view iri) const {
        auto e = find(iri);
        if (!e) throw UnknownEntity("unknown entity <" + std::string(iri) + "> in ontology " + id_);
        return *e;
    }

    bool is_class(EntityId e) const { return kind(e) == EntityKind::Class; }
    bool is_property(EntityId e) const { return kind(e) != EntityKind::Class; }

    // First declared label, else the IRI local fragment.
    const std::string& entity_name(EntityId e) const {
        check(e);
        return names_[e];
    }

    // Direct superclasses only; empty for hierarchy roots.
    const std::vector<EntityId>& superclasses(EntityId e) const {
        require_kind(e, EntityKind::Class, "superclasses");
        return superclasses_[e];
    }

    // Direct subclasses (inverse of superclasses).
    const std::vector<EntityId>& subclasses(EntityId e) const {
        require_kind(e, EntityKind::Class, "subclasses");
        return subclasses_[e];
    }

    // Declared domains and ranges of a property; empty sets when undeclared.
    PropertySignature property_signature(EntityId e) const {
        check(e);
        if (!is_property(e))
            throw KindMismatch("property_signature: <" + iris_[e] + "> is a class");
        return {domains_[e], range_classes_[e], range_datatypes_[e]};
    }

    const std::vector<EntityId>& domains(EntityId e) const { check(e); return domains_[e]; }
    const std::vector<EntityId>& range_classes(EntityId e) const { check(e); return range_classes_[e]; }
    const std::vector<std::string>& range_datatypes(EntityId e) const { check(e); return range_datatypes_[e]; }

    std::vector<EntityId> entities_of_kind(EntityKind k) const {
        std::vector<EntityId> out;
        for (EntityId e = 0; e < size(); ++e)
            if (kinds_[e] == k) out.push_back(e);
        return out;
    }

    // Object properties grouped by domain class, for property-driven class
    // similarity. Classes without anchored properties map to empty lists.
    const std::vector<EntityId>& object_properties_with_domain(EntityId cls) const {
        require_kind(cls, EntityKind::Class, "object_properties_with_domain");
        return props_by_domain_[cls];
    }

    // Value equality independent of internal entity numbering.
    friend bool operator==(const Ontology& a, const Ontology& b) {
        return a.canonical() == b.canonical();
    }

private:
    friend class Builder;

    EntityId check(EntityId e) const {
        if (e >= size()) throw UnknownEntity("entity id out of range in ontology " + id_);
        return e;
    }

    void require_kind(EntityId e, EntityKind k, const char* op) const {
        check(e);
        if (kinds_[e] != k)
            throw KindMismatch(std::string(op) + ": <" + iris_[e] + "> is a " +
                               std::string(kind_name(kinds_[e])));
    }

    using Canonical = std::map<std::string, std::tuple<EntityKind, std::vector<std::string>,
                                                       std::set<std::string>, std::set<std::string>,
                                                       std::set<std::string>, std::set<std::string>>>;

    Canonical canonical() const {
        Canonical c;
        for (EntityId e = 0; e < size(); ++e) {
            std::set<std::string> supers, doms, rngs, dts;
            for (EntityId s : superclasses_[e]) supers.insert(iris_[s]);
            for (EntityId d : domains_[e]) doms.insert(iris_[d]);
            for (EntityId r : range_classes_[e]) rngs.insert(iris_[r]);
            for (const auto& d : range_datatypes_[e]) dts.insert(d);
            c[iris_[e]] = {kinds_[e], labels_[e], supers, doms, rngs, dts};
        }
        return c;
    }

    std::string id_;
    std::string ontology_iri_;
    std::vector<std::string> iris_;
    std::vector<EntityKind> kinds_;
    std::vector<std::vector<std::string>> labels_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, EntityId> by_iri_;
    std::vector<std::vector<EntityId>> superclasses_;
    std::vector<std::vector<EntityId>> subclasses_;
    std::vector<std::vector<EntityId>> domains_;
    std::vector<std::vector<EntityId>> range_classes_;
    std::vector<std::vector<std::string>> range_datatypes_;
    std::vector<std::vector<EntityId>> props_by_domain_;
};

class Ontology::Builder {
public:
    explicit Builder(std::string id) { onto_.id_ = std::move(id); }

    void set_ontology_iri(std::string iri) { onto_.ontology_iri_ = std::move(iri); }

    EntityId add_entity(const std::string& iri, EntityKind kind) {
        if (iri.empty()) throw MalformedInput("entity with empty IRI in ontology " + onto_.id_);
        if (auto it = onto_.by_iri_.find(iri); it != onto_.by_iri_.end()) {
            if (onto_.kinds_[it->second] != kind)
                throw MalformedInput("entity <" + iri + "> declared with two kinds");
            return it->second;
        }
        const EntityId e = static_cast<EntityId>(onto_.iris_.size());
        onto_.iris_.push_back(iri);
        onto_.kinds_.push_back(kind);
        onto_.labels_.emplace_back();
        onto_.by_iri_[iri] = e;
        return e;
    }

    bool has(const std::string& iri) const { return onto_.by_iri_.count(iri) > 0; }

    EntityKind kind_of(EntityId e) const { return onto_.kinds_[e]; }

    EntityId resolve(const std::string& iri, const char* role) const {
        auto it = onto_.by_iri_.find(iri);
        if (it == onto_.by_iri_.end())
            throw MalformedInput(std::string(role) + " references undeclared entity <" + iri + ">");
        return it->second;
    }

    void add_label(const std::string& iri, std::string text) {
        onto_.labels_[resolve(iri, "label")].push_back(std::move(text));
    }

    void add_subclass_of(const std::string& sub, const std::string& super) {
        const EntityId s = resolve(sub, "subClassOf subject");
        const EntityId p = resolve(super, "subClassOf object");
        require_kind(s, EntityKind::Class, "subClassOf subject");
        require_kind(p, EntityKind::Class, "subClassOf object");
        subclass_edges_.emplace_back(s, p);
    }

    void add_domain(const std::string& prop, const std::string& cls) {
        const EntityId p = resolve(prop, "domain subject");
        const EntityId c = resolve(cls, "domain object");
        require_property(p, "domain subject");
        require_kind(c, EntityKind::Class, "domain object");
        domain_edges_.emplace_back(p, c);
    }

    void add_range_class(const std::string& prop, const std::string& cls) {
        const EntityId p = resolve(prop, "range subject");
        const EntityId c = resolve(cls, "range object");
        if (onto_.kinds_[p] != EntityKind::ObjectProperty)
            throw MalformedInput("class-valued range on non-object property <" + onto_.iris_[p] + ">");
        require_kind(c, EntityKind::Class, "range object");
        range_class_edges_.emplace_back(p, c);
    }

    void add_range_datatype(const std::string& prop, std::string datatype_iri) {
        const EntityId p = resolve(prop, "range subject");
        if (onto_.kinds_[p] != EntityKind::DataProperty)
            throw MalformedInput("datatype range on non-data property <" + onto_.iris_[p] + ">");
        datatype_edges_.emplace_back(p, std::move(datatype_iri));
    }

    // Validates all type invariants and freezes the ontology.
    Ontology build() {
        const std::size_t n = onto_.iris_.size();

        std::size_t class_count = 0;
        for (auto k : onto_.kinds_)
            if (k == EntityKind::Class) ++class_count;
        if (class_count == 0)
            throw EmptyOntology("ontology " + onto_.id_ + " declares no classes");

        onto_.superclasses_.assign(n, {});
        onto_.subclasses_.assign(n, {});
        onto_.domains_.assign(n, {});
        onto_.range_classes_.assign(n, {});
        onto_.range_datatypes_.assign(n, {});
        onto_.props_by_domain_.assign(n, {});

        for (auto [sub, super] : subclass_edges_) onto_.superclasses_[sub].push_back(super);
        for (auto [p, c] : domain_edges_) onto_.domains_[p].push_back(c);
        for (auto [p, c] : range_class_edges_) onto_.range_classes_[p].push_back(c);
        for (auto& [p, d] : datatype_edges_) onto_.range_datatypes_[p].push_back(d);

        for (std::size_t e = 0; e < n; ++e) {
            dedupe(onto_.superclasses_[e]);
            dedupe(onto_.domains_[e]);
            dedupe(onto_.range_classes_[e]);
            auto& dts = onto_.range_datatypes_[e];
            std::sort(dts.begin(), dts.end());
            dts.erase(std::unique(dts.begin(), dts.end()), dts.end());
        }

        for (EntityId e = 0; e < n; ++e)
            for (EntityId s : onto_.superclasses_[e]) onto_.subclasses_[s].push_back(e);
        for (EntityId p = 0; p < n; ++p)
            if (onto_.kinds_[p] == EntityKind::ObjectProperty)
                for (EntityId c : onto_.domains_[p]) onto_.props_by_domain_[c].push_back(p);

        check_acyclic();

        onto_.names_.resize(n);
        for (EntityId e = 0; e < n; ++e) {
            if (!onto_.labels_[e].empty()) {
                onto_.names_[e] = onto_.labels_[e].front();
            } else {
                onto_.names_[e] = iri_local_fragment(onto_.iris_[e]);
            }
            if (onto_.names_[e].empty())
                throw MalformedInput("entity <" + onto_.iris_[e] +
                                     "> has neither a label nor an IRI fragment");
        }

        return std::move(onto_);
    }

private:
    void require_kind(EntityId e, EntityKind k, const char* role) const {
        if (onto_.kinds_[e] != k)
            throw MalformedInput(std::string(role) + " <" + onto_.iris_[e] + "> is not a " +
                                 std::string(kind_name(k)));
    }

    void require_property(EntityId e, const char* role) const {
        if (onto_.kinds_[e] == EntityKind::Class)
            throw MalformedInput(std::string(role) + " <" + onto_.iris_[e] + "> is not a property");
    }

    static void dedupe(std::vector<EntityId>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    // Kahn's algorithm over subclass edges; leftovers mean a cycle.
    void check_acyclic() const {
        const std::size_t n = onto_.iris_.size();
        std::vector<std::size_t> pending(n, 0);
        for (EntityId e = 0; e < n; ++e) pending[e] = onto_.superclasses_[e].size();
        std::vector<EntityId> ready;
        for (EntityId e = 0; e < n; ++e)
            if (pending[e] == 0) ready.push_back(e);
        std::size_t seen = 0;
        while (!ready.empty()) {
            const EntityId e = ready.back();
            ready.pop_back();
            ++seen;
            for (EntityId child : onto_.subclasses_[e])
                if (--pending[child] == 0) ready.push_back(child);
        }
        if (seen != n) {
            std::string cycle_members;
            for (EntityId e = 0; e < n; ++e)
                if (pending[e] > 0) {
                    if (!cycle_members.empty()) cycle_members += ", ";
                    cycle_members += "<" + onto_.iris_[e] + ">";
                }
            throw CyclicHierarchy("subclass cycle in ontology " + onto_.id_ +
                                  " involving " + cycle_members);
        }
    }

    Ontology onto_;
    std::vector<std::pair<EntityId, EntityId>> subclass_edges_;
    std::vector<std::pair<EntityId, EntityId>> domain_edges_;
    std::vector<std::pair<EntityId, EntityId>> range_class_edges_;
    std::vector<std::pair<EntityId, std::string>> datatype_edges_;
};

}  // namespace samatch
