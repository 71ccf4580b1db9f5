#pragma once

// Token-level base similarity (thresholded max of Jaro-Winkler and Wu-Palmer)
// and its Soft TF-IDF aggregation over token bags.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "samatch/errors.hpp"
#include "samatch/ontology.hpp"
#include "samatch/string_metrics.hpp"
#include "samatch/text_pipeline.hpp"
#include "samatch/wordnet.hpp"

namespace samatch {

// Base metric thresholds: sub-threshold scores truncate to zero.
inline constexpr double kJaroWinklerThreshold = 0.9;
inline constexpr double kWuPalmerThreshold = 0.95;

// TF-IDF document statistics over the preprocessed entity-name bags of both
// ontologies. Documents are bags; frequencies count distinct stems per bag.
struct CorpusStats {
    std::size_t doc_count = 0;
    std::unordered_map<std::string, std::size_t> doc_freq;

    void add_document(const TokenBag& bag) {
        ++doc_count;
        std::vector<std::string_view> seen;
        for (const auto& t : bag.tokens) {
            if (std::find(seen.begin(), seen.end(), t) == seen.end()) {
                seen.push_back(t);
                ++doc_freq[t];
            }
        }
    }

    // log(N/df); unseen tokens use df = 1
    double idf(const std::string& token) const {
        if (doc_count == 0) return 0.0;
        const auto it = doc_freq.find(token);
        const std::size_t df = it == doc_freq.end() ? 1 : it->second;
        return std::log(static_cast<double>(doc_count) / static_cast<double>(df));
    }
};

// Jaro-Winkler on the stemmed forms, Wu-Palmer on the surface forms (falling
// back to the stemmed form when the surface is not in WordNet); each is
// truncated below its threshold and the maximum of the two survivors wins.
inline double base_token_similarity(const std::string& stem1, const std::string& surface1,
                                    const std::string& stem2, const std::string& surface2,
                                    const WordNetTaxonomy& wn) {
    double jw = jaro_winkler(stem1, stem2);
    if (jw < kJaroWinklerThreshold) jw = 0.0;
    if (jw >= 1.0) return 1.0;

    double wp = 0.0;
    if (!wn.empty()) {
        const std::string& w1 = wn.has_word(surface1) ? surface1 : stem1;
        const std::string& w2 = wn.has_word(surface2) ? surface2 : stem2;
        wp = wn.wu_palmer(w1, w2);
        if (wp < kWuPalmerThreshold) wp = 0.0;
    }
    return std::max(jw, wp);
}

inline double base_token_similarity(const std::string& t1, const std::string& t2,
                                    const WordNetTaxonomy& wn) {
    return base_token_similarity(t1, t1, t2, t2, wn);
}

struct WeightedToken {
    std::string stem;
    std::string surface;
    double weight = 0.0;  // L2-normalized tf-idf
};

using WeightedBag = std::vector<WeightedToken>;

// Folds duplicate stems into tf counts (first surface wins) and L2-normalizes
// tf*idf weights. A bag whose every idf is zero falls back to plain tf
// weights so that identical bags still score 1.
inline WeightedBag weigh(const TokenBag& bag, const CorpusStats& stats) {
    WeightedBag out;
    std::vector<double> tf;
    for (std::size_t i = 0; i < bag.tokens.size(); ++i) {
        const auto& stem = bag.tokens[i];
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const WeightedToken& w) { return w.stem == stem; });
        if (it == out.end()) {
            out.push_back({stem, bag.surfaces[i], 0.0});
            tf.push_back(1.0);
        } else {
            tf[static_cast<std::size_t>(it - out.begin())] += 1.0;
        }
    }
    double norm2 = 0.0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i].weight = tf[i] * stats.idf(out[i].stem);
        norm2 += out[i].weight * out[i].weight;
    }
    if (norm2 == 0.0) {
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i].weight = tf[i];
            norm2 += tf[i] * tf[i];
        }
    }
    const double norm = std::sqrt(norm2);
    for (auto& w : out) w.weight /= norm;
    return out;
}

// Core of Soft TF-IDF over pre-weighted bags. Each distinct token is matched
// to at most one partner, greedily by descending similarity; the score is the
// sum of weight(t) * weight(u) * sim(t, u) over matched pairs.
template <class TokenSim>
double soft_tfidf_weighted(const WeightedBag& wa, const WeightedBag& wb, TokenSim&& sim) {
    struct ClosePair {
        std::size_t i, j;
        double sim;
    };
    std::vector<ClosePair> close;
    for (std::size_t i = 0; i < wa.size(); ++i)
        for (std::size_t j = 0; j < wb.size(); ++j) {
            const double s = sim(wa[i].stem, wa[i].surface, wb[j].stem, wb[j].surface);
            if (s > 0.0) close.push_back({i, j, s});
        }
    std::sort(close.begin(), close.end(), [](const ClosePair& x, const ClosePair& y) {
        if (x.sim != y.sim) return x.sim > y.sim;
        if (x.i != y.i) return x.i < y.i;
        return x.j < y.j;
    });

    std::vector<bool> used_a(wa.size(), false), used_b(wb.size(), false);
    double score = 0.0;
    for (const auto& c : close) {
        if (used_a[c.i] || used_b[c.j]) continue;
        used_a[c.i] = true;
        used_b[c.j] = true;
        score += wa[c.i].weight * wb[c.j].weight * c.sim;
    }
    return std::clamp(score, 0.0, 1.0);
}

template <class TokenSim>
double soft_tfidf_with(const TokenBag& bagA, const TokenBag& bagB, const CorpusStats& stats,
                       TokenSim&& sim) {
    if (bagA.empty() || bagB.empty()) throw EmptyBag("soft_tfidf: empty token bag");
    return soft_tfidf_weighted(weigh(bagA, stats), weigh(bagB, stats),
                               std::forward<TokenSim>(sim));
}

inline double soft_tfidf(const TokenBag& bagA, const TokenBag& bagB, const CorpusStats& stats,
                         const WordNetTaxonomy& wn) {
    return soft_tfidf_with(bagA, bagB, stats,
                           [&wn](const std::string& s1, const std::string& f1,
                                 const std::string& s2, const std::string& f2) {
                               return base_token_similarity(s1, f1, s2, f2, wn);
                           });
}

// Entity-level lexical similarity: Soft TF-IDF over the preprocessed names.
inline double lexical_similarity(EntityId e1, EntityId e2, const Ontology& o1, const Ontology& o2,
                                 const CorpusStats& stats, const WordNetTaxonomy& wn,
                                 const StopList& stops) {
    if (o1.kind(e1) != o2.kind(e2))
        throw KindMismatch("lexical_similarity: <" + o1.iri(e1) + "> and <" + o2.iri(e2) +
                           "> have different kinds");
    return soft_tfidf(preprocess(o1.entity_name(e1), stops), preprocess(o2.entity_name(e2), stops),
                      stats, wn);
}

}  // namespace samatch
