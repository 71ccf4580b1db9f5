#include <doctest.h>

#include <fstream>
#include <map>

#include "oracles.hpp"
#include "samatch/ontology_json.hpp"
#include "samatch/soft_tfidf.hpp"
#include "samatch/structural.hpp"
#include "support.hpp"

using namespace samatch;
using testsupport::bag;

namespace {

WordNetTaxonomy toy_wn() {
    std::ifstream in(testsupport::fixture("toy_wordnet.tsv"));
    REQUIRE(in.good());
    return WordNetTaxonomy::from_tsv(in);
}

// four-document toy corpus shared by the oracle comparisons
std::vector<TokenBag> toy_corpus() {
    return {bag({"accept", "paper"}), bag({"accept", "review"}), bag({"paper"}),
            bag({"confer", "paper", "review"})};
}

CorpusStats stats_of(const std::vector<TokenBag>& docs) {
    CorpusStats stats;
    for (const auto& d : docs) stats.add_document(d);
    return stats;
}

std::map<std::string, std::size_t> df_of(const CorpusStats& stats) {
    return {stats.doc_freq.begin(), stats.doc_freq.end()};
}

}  // namespace

TEST_CASE("base_token_similarity: thresholds and branches") {
    const WordNetTaxonomy wn = toy_wn();
    CHECK(base_token_similarity("paper", "paper", wn) == 1.0);
    // below both thresholds -> 0  (jw("paper","pepper") ~ 0.84)
    CHECK(jaro_winkler("paper", "pepper") < 0.9);
    CHECK(base_token_similarity("paper", "pepper", wn) == 0.0);
    // wordnet synonym branch: jw("author","writer") is tiny, same synset
    CHECK(jaro_winkler("author", "writer") < 0.9);
    CHECK(base_token_similarity("author", "writer", wn) == 1.0);
    // jw branch just over the threshold
    CHECK(jaro_winkler("paper", "papers") >= 0.9);
    CHECK(base_token_similarity("paper", "papers", wn) ==
          doctest::Approx(jaro_winkler("paper", "papers")));
    // wu-palmer below 0.95 truncates: dog/cat = 2/3
    CHECK(base_token_similarity("dog", "cat", wn) == 0.0);
}

TEST_CASE("base_token_similarity: surface-first wordnet lookup with stem fallback") {
    const WordNetTaxonomy wn = toy_wn();
    // stems "auto" and "car" differ lexically; surfaces are in the taxonomy
    CHECK(base_token_similarity("auto", "autos", "car", "car", wn) == 0.0);  // surface 'autos' missing -> falls back to stem 'auto'
    CHECK(base_token_similarity("auto", "auto", "car", "car", wn) == 1.0);
    // surface known, stem unknown
    CHECK(base_token_similarity("automobil", "automobile", "car", "car", wn) == 1.0);
}

TEST_CASE("soft_tfidf: trivial cases") {
    const WordNetTaxonomy wn = toy_wn();
    const auto docs = toy_corpus();
    const CorpusStats stats = stats_of(docs);
    CHECK(soft_tfidf(docs[0], docs[0], stats, wn) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(soft_tfidf(bag({"paper"}), bag({"confer"}), stats, wn) == 0.0);
    CHECK_THROWS_AS(soft_tfidf(TokenBag{}, docs[0], stats, wn), EmptyBag);
}

TEST_CASE("soft_tfidf: identical single-token bags in an all-shared corpus") {
    // both documents are {"paper"}: idf = log(1) = 0 everywhere, so the tf
    // fallback has to keep identical bags at 1
    CorpusStats stats;
    stats.add_document(bag({"paper"}));
    stats.add_document(bag({"paper"}));
    const WordNetTaxonomy wn;
    CHECK(soft_tfidf(bag({"paper"}), bag({"paper"}), stats, wn) == doctest::Approx(1.0));
}

TEST_CASE("soft_tfidf: toy-corpus value matches the exhaustive oracle") {
    const WordNetTaxonomy wn = toy_wn();
    const auto docs = toy_corpus();
    const CorpusStats stats = stats_of(docs);
    const auto df = df_of(stats);

    const oracle::TokenSimFn sim = [&](const std::string& s1, const std::string& f1,
                                       const std::string& s2, const std::string& f2) {
        return base_token_similarity(s1, f1, s2, f2, wn);
    };

    const TokenBag a = bag({"accept", "paper"});
    const TokenBag b = bag({"accept", "review"});
    const double engine = soft_tfidf(a, b, stats, wn);
    const double exhaustive = oracle::soft_tfidf_exhaustive(a, b, stats.doc_count, df, sim);
    CHECK(engine == doctest::Approx(exhaustive).epsilon(1e-9));

    // spot value computed by the frozen oracle: only "accept" matches itself
    CHECK(engine == doctest::Approx(oracle::soft_tfidf_greedy(a, b, stats.doc_count, df, sim))
                        .epsilon(1e-12));
    CHECK(engine > 0.0);
    CHECK(engine < 1.0);
}

TEST_CASE("soft_tfidf: engine equals exhaustive oracle on all small fixture bags") {
    const WordNetTaxonomy wn = toy_wn();
    const std::vector<TokenBag> bags = {
        bag({"accept", "paper"}),
        bag({"accept", "review"}),
        bag({"paper"}),
        bag({"confer", "paper", "review"}),
        bag({"author", "name"}, {"author", "name"}),
        bag({"writer", "name"}, {"writer", "name"}),
        bag({"paper", "paper", "review"}),  // duplicate stems fold into tf
        bag({"car"}, {"car"}),
        bag({"auto"}, {"auto"}),
        bag({"program", "committe", "member"}),
        bag({"committe", "member"}),
        bag({"extern", "review"}),
    };
    CorpusStats stats;
    for (const auto& d : bags) stats.add_document(d);
    const auto df = df_of(stats);
    const oracle::TokenSimFn sim = [&](const std::string& s1, const std::string& f1,
                                       const std::string& s2, const std::string& f2) {
        return base_token_similarity(s1, f1, s2, f2, wn);
    };

    std::size_t discrepancies = 0;
    for (const auto& a : bags)
        for (const auto& b : bags) {
            const double engine = soft_tfidf(a, b, stats, wn);
            const double exhaustive = oracle::soft_tfidf_exhaustive(a, b, stats.doc_count, df, sim);
            if (std::abs(engine - exhaustive) > 1e-9) {
                ++discrepancies;
                // any gap must be exactly the documented greedy rule
                CHECK(engine ==
                      doctest::Approx(oracle::soft_tfidf_greedy(a, b, stats.doc_count, df, sim))
                          .epsilon(1e-12));
                CHECK(engine <= exhaustive + 1e-12);
            }
        }
    CHECK(discrepancies == 0);
}

TEST_CASE("soft_tfidf: symmetry and range over fixture bags") {
    const WordNetTaxonomy wn = toy_wn();
    const auto docs = toy_corpus();
    const CorpusStats stats = stats_of(docs);
    for (const auto& a : docs)
        for (const auto& b : docs) {
            const double ab = soft_tfidf(a, b, stats, wn);
            const double ba = soft_tfidf(b, a, stats, wn);
            CHECK(ab == doctest::Approx(ba).epsilon(1e-12));
            CHECK(ab >= 0.0);
            CHECK(ab <= 1.0);
        }
}

TEST_CASE("lexical_similarity over entities") {
    const Ontology o1 = parse_ontology_json(R"({
        "id": "l1",
        "entities": [{"iri": "http://x#Paper", "kind": "class"},
                     {"iri": "http://x#acceptedPaper", "kind": "class"},
                     {"iri": "http://x#p", "kind": "object_property"}]
    })");
    const Ontology o2 = parse_ontology_json(R"({
        "id": "l2",
        "entities": [{"iri": "http://y#Paper", "kind": "class"},
                     {"iri": "http://y#Accepted_papers", "kind": "class"},
                     {"iri": "http://y#Document", "kind": "class"}]
    })");
    const StopList stops({"has", "of", "the"});
    const WordNetTaxonomy wn;  // no wordnet: pure string route

    SimilarityCache cache(o1, o2, stops, wn);
    const CorpusStats& stats = cache.stats();

    const EntityId paper1 = o1.require("http://x#Paper");
    const EntityId paper2 = o2.require("http://y#Paper");
    const EntityId acc1 = o1.require("http://x#acceptedPaper");
    const EntityId acc2 = o2.require("http://y#Accepted_papers");
    const EntityId doc2 = o2.require("http://y#Document");

    CHECK(lexical_similarity(paper1, paper2, o1, o2, stats, wn, stops) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lexical_similarity(acc1, acc2, o1, o2, stats, wn, stops) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lexical_similarity(paper1, doc2, o1, o2, stats, wn, stops) == 0.0);
    CHECK_THROWS_AS(
        lexical_similarity(o1.require("http://x#p"), paper2, o1, o2, stats, wn, stops),
        KindMismatch);
}
