#pragma once

// Search state: a one-to-one partial matching between the entities of two
// ontologies, with a per-pair fitness cache and the cached total.

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "samatch/errors.hpp"
#include "samatch/ontology.hpp"

namespace samatch {

class AlignmentState {
public:
    struct Pair {
        EntityId e1, e2;
        double fitness = 0.0;
    };

    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }
    const std::vector<Pair>& pairs() const { return pairs_; }
    const Pair& pair_at(std::size_t idx) const { return pairs_.at(idx); }

    bool matched1(EntityId e1) const { return slot1_.count(e1) > 0; }
    bool matched2(EntityId e2) const { return slot2_.count(e2) > 0; }

    std::optional<std::size_t> index_of1(EntityId e1) const {
        auto it = slot1_.find(e1);
        if (it == slot1_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<std::size_t> index_of2(EntityId e2) const {
        auto it = slot2_.find(e2);
        if (it == slot2_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<EntityId> partner_of1(EntityId e1) const {
        auto idx = index_of1(e1);
        if (!idx) return std::nullopt;
        return pairs_[*idx].e2;
    }

    std::optional<EntityId> partner_of2(EntityId e2) const {
        auto idx = index_of2(e2);
        if (!idx) return std::nullopt;
        return pairs_[*idx].e1;
    }

    // Adds a pair, rejecting anything that would break injectivity.
    std::size_t add(EntityId e1, EntityId e2, double fitness = 0.0) {
        if (matched1(e1) || matched2(e2))
            throw Error("alignment state: entity already matched");
        const std::size_t idx = pairs_.size();
        pairs_.push_back({e1, e2, fitness});
        slot1_[e1] = idx;
        slot2_[e2] = idx;
        total_ += fitness;
        return idx;
    }

    // Swap-remove; the previously last pair moves into idx.
    Pair remove_at(std::size_t idx) {
        const Pair removed = pairs_.at(idx);
        total_ -= removed.fitness;
        slot1_.erase(removed.e1);
        slot2_.erase(removed.e2);
        const std::size_t last = pairs_.size() - 1;
        if (idx != last) {
            pairs_[idx] = pairs_[last];
            slot1_[pairs_[idx].e1] = idx;
            slot2_[pairs_[idx].e2] = idx;
        }
        pairs_.pop_back();
        return removed;
    }

    void set_fitness(std::size_t idx, double fitness) {
        total_ += fitness - pairs_.at(idx).fitness;
        pairs_[idx].fitness = fitness;
    }

    double cached_fitness() const { return total_; }

    // Re-sums the per-pair cache, clearing accumulated float drift.
    void resum() {
        double t = 0.0;
        for (const auto& p : pairs_) t += p.fitness;
        total_ = t;
    }

    // Both-ways injectivity and cache/total consistency.
    bool invariants_hold() const {
        if (slot1_.size() != pairs_.size() || slot2_.size() != pairs_.size()) return false;
        for (std::size_t i = 0; i < pairs_.size(); ++i) {
            auto it1 = slot1_.find(pairs_[i].e1);
            auto it2 = slot2_.find(pairs_[i].e2);
            if (it1 == slot1_.end() || it1->second != i) return false;
            if (it2 == slot2_.end() || it2->second != i) return false;
        }
        return true;
    }

private:
    std::vector<Pair> pairs_;
    std::unordered_map<EntityId, std::size_t> slot1_, slot2_;
    double total_ = 0.0;
};

}  // namespace samatch
