#include <doctest.h>

#include <fstream>
#include <sstream>
#include <vector>

#include "samatch/porter.hpp"
#include "support.hpp"

using samatch::porter_stem;

namespace {

struct LexiconRow {
    std::string word, stem, restem;
};

std::vector<LexiconRow> load_lexicon() {
    std::ifstream in(testsupport::fixture("porter_lexicon.tsv"));
    REQUIRE(in.good());
    std::vector<LexiconRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        LexiconRow r;
        REQUIRE(static_cast<bool>(std::getline(is, r.word, '\t')));
        REQUIRE(static_cast<bool>(std::getline(is, r.stem, '\t')));
        REQUIRE(static_cast<bool>(std::getline(is, r.restem, '\t')));
        rows.push_back(r);
    }
    return rows;
}

}  // namespace

TEST_CASE("porter: published step examples") {
    CHECK(porter_stem("caresses") == "caress");
    CHECK(porter_stem("ponies") == "poni");
    CHECK(porter_stem("ties") == "ti");
    CHECK(porter_stem("cats") == "cat");
    CHECK(porter_stem("feed") == "feed");
    CHECK(porter_stem("agreed") == "agree");
    CHECK(porter_stem("plastered") == "plaster");
    CHECK(porter_stem("bled") == "bled");
    CHECK(porter_stem("motoring") == "motor");
    CHECK(porter_stem("sing") == "sing");
    CHECK(porter_stem("hopping") == "hop");
    CHECK(porter_stem("falling") == "fall");
    CHECK(porter_stem("hissing") == "hiss");
    CHECK(porter_stem("filing") == "file");
    CHECK(porter_stem("failing") == "fail");
    CHECK(porter_stem("happy") == "happi");
    CHECK(porter_stem("sky") == "sky");
    CHECK(porter_stem("relational") == "relate");
    CHECK(porter_stem("rational") == "rational");
    CHECK(porter_stem("triplicate") == "triplic");
    CHECK(porter_stem("formative") == "form");
    CHECK(porter_stem("hopeful") == "hope");
    CHECK(porter_stem("goodness") == "good");
    CHECK(porter_stem("revival") == "reviv");
    CHECK(porter_stem("adoption") == "adopt");
    CHECK(porter_stem("probate") == "probat");
    CHECK(porter_stem("rate") == "rate");
    CHECK(porter_stem("cease") == "ceas");
    CHECK(porter_stem("controll") == "control");
    CHECK(porter_stem("roll") == "roll");
}

TEST_CASE("porter: words of length <= 2 pass through") {
    CHECK(porter_stem("a") == "a");
    CHECK(porter_stem("as") == "as");
    CHECK(porter_stem("is") == "is");
    CHECK(porter_stem("") == "");
}

TEST_CASE("porter: full agreement with the frozen lexicon") {
    const auto rows = load_lexicon();
    REQUIRE(rows.size() >= 200);
    std::size_t mismatches = 0;
    for (const auto& r : rows) {
        if (porter_stem(r.word) != r.stem) {
            ++mismatches;
            CAPTURE(r.word);
            CHECK(porter_stem(r.word) == r.stem);
        }
        if (porter_stem(r.stem) != r.restem) {
            ++mismatches;
            CAPTURE(r.stem);
            CHECK(porter_stem(r.stem) == r.restem);
        }
    }
    CHECK(mismatches == 0);
}

TEST_CASE("porter: idempotent on the oracle-verified subset") {
    for (const auto& r : load_lexicon()) {
        if (r.stem == r.restem) {
            CAPTURE(r.word);
            CHECK(porter_stem(porter_stem(r.word)) == porter_stem(r.word));
        }
    }
}
