#pragma once

// Sparse cross-ontology entity-similarity store. Kind-partitioned: classes
// are only scored against classes, object properties against object
// properties, data properties against data properties. Entries below the
// configured floor are not stored.

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "samatch/errors.hpp"
#include "samatch/ontology.hpp"

namespace samatch {

class SimilarityMatrix {
public:
    struct Entry {
        EntityId e1, e2;
        double score;
    };

    SimilarityMatrix(const Ontology& o1, const Ontology& o2, double floor = 0.05)
        : floor_(floor), candidates1_(o1.size()), candidates2_(o2.size()) {
        kinds1_.reserve(o1.size());
        kinds2_.reserve(o2.size());
        for (EntityId e = 0; e < o1.size(); ++e) kinds1_.push_back(o1.kind(e));
        for (EntityId e = 0; e < o2.size(); ++e) kinds2_.push_back(o2.kind(e));
    }

    double floor() const { return floor_; }
    std::size_t size() const { return entries_.size(); }

    // Stores one scored pair; drops scores below the floor.
    void set(EntityId e1, EntityId e2, double score) {
        if (e1 >= kinds1_.size() || e2 >= kinds2_.size())
            throw UnknownEntity("similarity matrix: entity id out of range");
        if (kinds1_[e1] != kinds2_[e2])
            throw KindMismatch("similarity matrix: cross-kind entry rejected");
        if (score < 0.0 || score > 1.0 + 1e-12)
            throw Error("similarity matrix: score out of [0,1]");
        if (score < floor_) return;
        auto [it, inserted] = entries_.try_emplace(key(e1, e2), score);
        if (!inserted) {
            it->second = score;
            return;
        }
        candidates1_[e1].push_back(e2);
        candidates2_[e2].push_back(e1);
    }

    bool contains(EntityId e1, EntityId e2) const { return entries_.count(key(e1, e2)) > 0; }

    // Stored score, or 0 for dropped/absent pairs.
    double get(EntityId e1, EntityId e2) const {
        auto it = entries_.find(key(e1, e2));
        return it == entries_.end() ? 0.0 : it->second;
    }

    const std::vector<EntityId>& candidates_for1(EntityId e1) const { return candidates1_.at(e1); }
    const std::vector<EntityId>& candidates_for2(EntityId e2) const { return candidates2_.at(e2); }

    std::vector<Entry> entries_sorted() const {
        std::vector<Entry> out;
        out.reserve(entries_.size());
        for (const auto& [k, score] : entries_)
            out.push_back({static_cast<EntityId>(k >> 32),
                           static_cast<EntityId>(k & 0xffffffffu), score});
        std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) {
            if (a.e1 != b.e1) return a.e1 < b.e1;
            return a.e2 < b.e2;
        });
        return out;
    }

    // Candidate pairs ordered best-first for greedy seeding.
    std::vector<Entry> entries_by_score_desc() const {
        std::vector<Entry> out = entries_sorted();
        std::stable_sort(out.begin(), out.end(),
                         [](const Entry& a, const Entry& b) { return a.score > b.score; });
        return out;
    }

private:
    static std::uint64_t key(EntityId e1, EntityId e2) {
        return (static_cast<std::uint64_t>(e1) << 32) | e2;
    }

    double floor_;
    std::vector<EntityKind> kinds1_, kinds2_;
    std::unordered_map<std::uint64_t, double> entries_;
    std::vector<std::vector<EntityId>> candidates1_, candidates2_;
};

}  // namespace samatch
