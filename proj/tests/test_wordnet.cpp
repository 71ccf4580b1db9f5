#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "samatch/wordnet.hpp"
#include "support.hpp"

using samatch::WordNetTaxonomy;

namespace {

WordNetTaxonomy load_toy() {
    std::ifstream in(testsupport::fixture("toy_wordnet.tsv"));
    REQUIRE(in.good());
    return WordNetTaxonomy::from_tsv(in);
}

}  // namespace

TEST_CASE("wordnet tsv: toy taxonomy closed-form values") {
    const WordNetTaxonomy wn = load_toy();
    // root=1, animal=2, dog=cat=3; lcs(dog,cat)=animal
    CHECK(wn.wu_palmer("dog", "cat") == doctest::Approx(2.0 * 2 / (3 + 3)).epsilon(1e-12));
    CHECK(wn.wu_palmer("dog", "dog") == 1.0);
    CHECK(wn.wu_palmer("car", "automobile") == 1.0);  // same synset
    CHECK(wn.wu_palmer("dog", "vehicle") == doctest::Approx(2.0 * 1 / (3 + 2)).epsilon(1e-12));
    CHECK(wn.wu_palmer("paper", "article") == 1.0);
    CHECK(wn.wu_palmer("author", "writer") == 1.0);
    CHECK(wn.wu_palmer("paper", "document") == doctest::Approx(2.0 * 2 / (3 + 3)).epsilon(1e-12));
}

TEST_CASE("wordnet: out-of-vocabulary scores 0 and counts misses") {
    const WordNetTaxonomy wn = load_toy();
    const auto misses_before = wn.lookup_misses();
    CHECK(wn.wu_palmer("dog", "zzzz-unknown") == 0.0);
    CHECK(wn.lookup_misses() == misses_before + 1);
    CHECK_FALSE(wn.has_word("zzzz-unknown"));
    CHECK(wn.has_word("dog"));
}

TEST_CASE("wordnet: symmetry and range on all toy pairs") {
    const WordNetTaxonomy wn = load_toy();
    const std::vector<std::string> words = {"dog", "cat", "animal", "vehicle", "car",
                                            "paper", "document", "person", "author"};
    for (const auto& a : words)
        for (const auto& b : words) {
            const double wp = wn.wu_palmer(a, b);
            CHECK(wp >= 0.0);
            CHECK(wp <= 1.0);
            CHECK(wp == doctest::Approx(wn.wu_palmer(b, a)).epsilon(1e-15));
        }
}

TEST_CASE("wordnet: chain monotonicity") {
    std::istringstream tsv("root\t\tr\n"
                           "a\troot\ta\n"
                           "b\ta\tb\n"
                           "c\tb\tc\n");
    const WordNetTaxonomy wn = WordNetTaxonomy::from_tsv(tsv);
    CHECK(wn.wu_palmer("b", "c") > wn.wu_palmer("a", "c"));
}

TEST_CASE("wordnet: multiple roots glued under a virtual root") {
    std::istringstream tsv("r1\t\talpha\n"
                           "r2\t\tbeta\n"
                           "x\tr1\tx\n");
    const WordNetTaxonomy wn = WordNetTaxonomy::from_tsv(tsv);
    // r1, r2 sit at depth 2 under the virtual root (depth 1)
    CHECK(wn.wu_palmer("alpha", "beta") == doctest::Approx(2.0 * 1 / (2 + 2)).epsilon(1e-12));
    CHECK(wn.wu_palmer("alpha", "x") == doctest::Approx(2.0 * 2 / (2 + 3)).epsilon(1e-12));
}

TEST_CASE("wordnet: min-hop depth with multiple parents") {
    // d has parents b (depth 2) and c (depth 3): depth(d) = 3 via b
    std::istringstream tsv("root\t\tr\n"
                           "b\troot\tb\n"
                           "c\tb\tc\n"
                           "d\tb,c\td\n");
    const WordNetTaxonomy wn = WordNetTaxonomy::from_tsv(tsv);
    // wp(d, b): lcs = b at depth 2, depths 3 and 2
    CHECK(wn.wu_palmer("d", "b") == doctest::Approx(2.0 * 2 / (3 + 2)).epsilon(1e-12));
}

TEST_CASE("wordnet: malformed tsv rejected") {
    std::istringstream missing_parent("a\tnope\ta\n");
    CHECK_THROWS_AS(WordNetTaxonomy::from_tsv(missing_parent), samatch::MalformedInput);
    std::istringstream short_line("justone\n");
    CHECK_THROWS_AS(WordNetTaxonomy::from_tsv(short_line), samatch::MalformedInput);
    std::istringstream cyclic("a\tb\ta\nb\ta\tb\n");
    CHECK_THROWS_AS(WordNetTaxonomy::from_tsv(cyclic), samatch::MalformedInput);
}

TEST_CASE("wordnet princeton: sample mirrors the toy taxonomy") {
    const WordNetTaxonomy tsv = load_toy();
    const WordNetTaxonomy wn =
        WordNetTaxonomy::from_princeton_dir(testsupport::fixture("wn_princeton").string());
    CHECK(wn.synset_count() == 11);
    const std::vector<std::string> words = {"dog", "cat", "animal", "vehicle", "car",
                                            "auto", "paper", "article", "document",
                                            "person", "author", "writer", "entity"};
    for (const auto& a : words)
        for (const auto& b : words) {
            CAPTURE(a);
            CAPTURE(b);
            CHECK(wn.wu_palmer(a, b) == doctest::Approx(tsv.wu_palmer(a, b)).epsilon(1e-12));
        }
}

TEST_CASE("wordnet: empty taxonomy") {
    const WordNetTaxonomy wn;
    CHECK(wn.empty());
    CHECK_FALSE(wn.has_word("dog"));
}
