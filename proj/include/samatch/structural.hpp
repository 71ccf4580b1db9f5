#pragma once

// Structural similarity: subsumption-propagated class similarity over the
// current alignment, property similarity from names/domains/ranges, and
// property-driven class similarity. Also hosts the SimilarityCache that
// precomputes weighted token bags shared by all Soft TF-IDF calls, and
// build_similarity_matrix.

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "samatch/alignment_state.hpp"
#include "samatch/ontology.hpp"
#include "samatch/similarity_matrix.hpp"
#include "samatch/soft_tfidf.hpp"
#include "samatch/text_pipeline.hpp"
#include "samatch/wordnet.hpp"

namespace samatch {

// Preprocessed, TF-IDF-weighted token bags for every entity of both
// ontologies, plus the concatenated domain/range bags of properties, all
// weighted against one shared corpus. Token-pair base similarities are
// memoized. Immutable after construction apart from the memo.
class SimilarityCache {
public:
    SimilarityCache(const Ontology& o1, const Ontology& o2, const StopList& stops,
                    const WordNetTaxonomy& wn)
        : o1_(o1), o2_(o2), stops_(stops), wn_(wn) {
        raw1_ = preprocess_all(o1);
        raw2_ = preprocess_all(o2);
        for (const auto& b : raw1_)
            if (b) stats_.add_document(*b);
        for (const auto& b : raw2_)
            if (b) stats_.add_document(*b);

        name1_ = weigh_all(raw1_);
        name2_ = weigh_all(raw2_);
        domain1_ = weigh_concat(o1, raw1_, Part::Domain);
        domain2_ = weigh_concat(o2, raw2_, Part::Domain);
        range1_ = weigh_concat(o1, raw1_, Part::Range);
        range2_ = weigh_concat(o2, raw2_, Part::Range);
    }

    const Ontology& o1() const { return o1_; }
    const Ontology& o2() const { return o2_; }
    const StopList& stops() const { return stops_; }
    const WordNetTaxonomy& wordnet() const { return wn_; }
    const CorpusStats& stats() const { return stats_; }

    // Weighted name bag; nullptr when the entity name yields no tokens.
    const WeightedBag* name_bag(int side, EntityId e) const {
        const auto& bags = side == 1 ? name1_ : name2_;
        return bags[e] ? &*bags[e] : nullptr;
    }

    // Concatenated preprocessed names of the property's domain classes.
    const WeightedBag* domain_bag(int side, EntityId p) const {
        const auto& bags = side == 1 ? domain1_ : domain2_;
        return bags[p] ? &*bags[p] : nullptr;
    }

    // Concatenated range-class names; object properties only.
    const WeightedBag* range_bag(int side, EntityId p) const {
        const auto& bags = side == 1 ? range1_ : range2_;
        return bags[p] ? &*bags[p] : nullptr;
    }

    // Memoized thresholded base token similarity.
    double token_sim(const std::string& s1, const std::string& f1, const std::string& s2,
                     const std::string& f2) const {
        const bool flip = std::tie(s2, f2) < std::tie(s1, f1);
        std::string key;
        if (flip)
            key = s2 + '\x1f' + f2 + '\x1f' + s1 + '\x1f' + f1;
        else
            key = s1 + '\x1f' + f1 + '\x1f' + s2 + '\x1f' + f2;
        {
            std::lock_guard<std::mutex> lock(memo_mutex_);
            auto it = token_memo_.find(key);
            if (it != token_memo_.end()) return it->second;
        }
        const double v = base_token_similarity(s1, f1, s2, f2, wn_);
        std::lock_guard<std::mutex> lock(memo_mutex_);
        token_memo_.emplace(std::move(key), v);
        return v;
    }

    // Soft TF-IDF over two weighted bags; 0 when either is missing.
    double soft(const WeightedBag* a, const WeightedBag* b) const {
        if (!a || !b) return 0.0;
        return soft_tfidf_weighted(*a, *b,
                                   [this](const std::string& s1, const std::string& f1,
                                          const std::string& s2, const std::string& f2) {
                                       return token_sim(s1, f1, s2, f2);
                                   });
    }

private:
    enum class Part { Domain, Range };

    std::vector<std::optional<TokenBag>> preprocess_all(const Ontology& o) const {
        std::vector<std::optional<TokenBag>> out(o.size());
        for (EntityId e = 0; e < o.size(); ++e) {
            try {
                out[e] = preprocess(o.entity_name(e), stops_);
            } catch (const EmptyName&) {
                out[e] = std::nullopt;  // unmatchable, skipped by scoring
            }
        }
        return out;
    }

    std::vector<std::optional<WeightedBag>> weigh_all(
        const std::vector<std::optional<TokenBag>>& raw) const {
        std::vector<std::optional<WeightedBag>> out(raw.size());
        for (std::size_t e = 0; e < raw.size(); ++e)
            if (raw[e]) out[e] = weigh(*raw[e], stats_);
        return out;
    }

    // Domain/range bags: concatenation of the class name bags in IRI order.
    std::vector<std::optional<WeightedBag>> weigh_concat(
        const Ontology& o, const std::vector<std::optional<TokenBag>>& raw, Part part) const {
        std::vector<std::optional<WeightedBag>> out(o.size());
        for (EntityId p = 0; p < o.size(); ++p) {
            if (o.kind(p) == EntityKind::Class) continue;
            if (part == Part::Range && o.kind(p) != EntityKind::ObjectProperty) continue;
            std::vector<EntityId> classes =
                part == Part::Domain ? o.domains(p) : o.range_classes(p);
            std::sort(classes.begin(), classes.end(),
                      [&](EntityId a, EntityId b) { return o.iri(a) < o.iri(b); });
            TokenBag concat;
            for (const EntityId c : classes) {
                if (!raw[c]) continue;
                concat.tokens.insert(concat.tokens.end(), raw[c]->tokens.begin(),
                                     raw[c]->tokens.end());
                concat.surfaces.insert(concat.surfaces.end(), raw[c]->surfaces.begin(),
                                       raw[c]->surfaces.end());
            }
            if (!concat.tokens.empty()) out[p] = weigh(concat, stats_);
        }
        return out;
    }

    const Ontology& o1_;
    const Ontology& o2_;
    const StopList& stops_;
    const WordNetTaxonomy& wn_;
    CorpusStats stats_;
    std::vector<std::optional<TokenBag>> raw1_, raw2_;
    std::vector<std::optional<WeightedBag>> name1_, name2_;
    std::vector<std::optional<WeightedBag>> domain1_, domain2_;
    std::vector<std::optional<WeightedBag>> range1_, range2_;
    mutable std::mutex memo_mutex_;
    mutable std::unordered_map<std::string, double> token_memo_;
};

struct StructuralContext {
    const SimilarityCache& cache;
    const SimilarityMatrix* sims = nullptr;
    const AlignmentState* current = nullptr;
};

// Maximum fitness over matched direct-superclass pairs in the current
// alignment; 0 when no superclass pair is matched.
inline double subsumption_boost(EntityId c1, EntityId c2, const StructuralContext& ctx) {
    if (!ctx.current) return 0.0;
    const auto& sup1 = ctx.cache.o1().superclasses(c1);
    const auto& sup2 = ctx.cache.o2().superclasses(c2);  // sorted
    double best = 0.0;
    for (const EntityId s1 : sup1) {
        const auto idx = ctx.current->index_of1(s1);
        if (!idx) continue;
        const auto& pair = ctx.current->pair_at(*idx);
        if (std::binary_search(sup2.begin(), sup2.end(), pair.e2))
            best = std::max(best, pair.fitness);
    }
    return best;
}

inline double mean_of_top_two(double a, double b, double c) {
    std::array<double, 3> v{a, b, c};
    std::sort(v.begin(), v.end());
    return (v[1] + v[2]) / 2.0;
}

// Object properties: Soft TF-IDF over names, concatenated domains, and
// concatenated ranges; the mean of the two largest scores wins. Missing
// domain/range declarations contribute 0.
inline double object_property_similarity(EntityId p1, EntityId p2, const StructuralContext& ctx) {
    const SimilarityCache& c = ctx.cache;
    const double names = c.soft(c.name_bag(1, p1), c.name_bag(2, p2));
    const double domains = c.soft(c.domain_bag(1, p1), c.domain_bag(2, p2));
    const double ranges = c.soft(c.range_bag(1, p1), c.range_bag(2, p2));
    return mean_of_top_two(names, domains, ranges);
}

// Data properties: mean of the name score and the domain score.
inline double data_property_similarity(EntityId p1, EntityId p2, const StructuralContext& ctx) {
    const SimilarityCache& c = ctx.cache;
    const double names = c.soft(c.name_bag(1, p1), c.name_bag(2, p2));
    const double domains = c.soft(c.domain_bag(1, p1), c.domain_bag(2, p2));
    return (names + domains) / 2.0;
}

// Property-driven class similarity: over object-property pairs anchored at
// the two classes (via their domains), the best mean of range similarity and
// property-name similarity. 0 when either class anchors no object property.
inline double class_similarity_from_properties(EntityId e1, EntityId e2,
                                               const StructuralContext& ctx) {
    const SimilarityCache& c = ctx.cache;
    double best = 0.0;
    for (const EntityId op1 : c.o1().object_properties_with_domain(e1)) {
        for (const EntityId op2 : c.o2().object_properties_with_domain(e2)) {
            const double ranges = c.soft(c.range_bag(1, op1), c.range_bag(2, op2));
            const double names = c.soft(c.name_bag(1, op1), c.name_bag(2, op2));
            best = std::max(best, (ranges + names) / 2.0);
        }
    }
    return best;
}

// State-independent part of the combined similarity.
inline double static_similarity(EntityId e1, EntityId e2, const SimilarityCache& cache) {
    if (cache.o1().kind(e1) != cache.o2().kind(e2))
        throw KindMismatch("combined similarity: <" + cache.o1().iri(e1) + "> and <" +
                           cache.o2().iri(e2) + "> have different kinds");
    const StructuralContext ctx{cache, nullptr, nullptr};
    switch (cache.o1().kind(e1)) {
        case EntityKind::Class: {
            const double lexical = cache.soft(cache.name_bag(1, e1), cache.name_bag(2, e2));
            return std::max(lexical, class_similarity_from_properties(e1, e2, ctx));
        }
        case EntityKind::ObjectProperty:
            return object_property_similarity(e1, e2, ctx);
        case EntityKind::DataProperty:
            return data_property_similarity(e1, e2, ctx);
    }
    return 0.0;
}

// Lexical and structural similarity combined: componentwise max for classes
// (lexical, subsumption boost, property-driven), property operations for
// properties.
inline double combined_similarity(EntityId e1, EntityId e2, const StructuralContext& ctx) {
    if (ctx.cache.o1().kind(e1) != ctx.cache.o2().kind(e2))
        throw KindMismatch("combined similarity: <" + ctx.cache.o1().iri(e1) + "> and <" +
                           ctx.cache.o2().iri(e2) + "> have different kinds");
    double score = static_similarity(e1, e2, ctx.cache);
    if (ctx.cache.o1().kind(e1) == EntityKind::Class)
        score = std::max(score, subsumption_boost(e1, e2, ctx));
    return score;
}

// Scores every same-kind cross-ontology pair: classes by lexical similarity,
// properties by their structural property operation. Entries below the floor
// are dropped.
inline SimilarityMatrix build_similarity_matrix(const SimilarityCache& cache, double floor = 0.05) {
    SimilarityMatrix m(cache.o1(), cache.o2(), floor);
    const StructuralContext ctx{cache, &m, nullptr};
    for (EntityId e1 = 0; e1 < cache.o1().size(); ++e1) {
        const EntityKind k = cache.o1().kind(e1);
        for (EntityId e2 = 0; e2 < cache.o2().size(); ++e2) {
            if (cache.o2().kind(e2) != k) continue;
            double score = 0.0;
            switch (k) {
                case EntityKind::Class:
                    score = cache.soft(cache.name_bag(1, e1), cache.name_bag(2, e2));
                    break;
                case EntityKind::ObjectProperty:
                    score = object_property_similarity(e1, e2, ctx);
                    break;
                case EntityKind::DataProperty:
                    score = data_property_similarity(e1, e2, ctx);
                    break;
            }
            m.set(e1, e2, score);
        }
    }
    return m;
}

}  // namespace samatch
