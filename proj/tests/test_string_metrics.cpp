#include <doctest.h>

#include <string>
#include <vector>

#include "samatch/annealer.hpp"  // Rng
#include "samatch/string_metrics.hpp"

using samatch::jaro;
using samatch::jaro_winkler;

TEST_CASE("jaro: hand-evaluated example") {
    // martha/marhta: m = 6, t = 1 -> (1 + 1 + 5/6) / 3 = 17/18
    CHECK(jaro("martha", "marhta") == doctest::Approx(17.0 / 18.0).epsilon(1e-12));
    CHECK(jaro("martha", "marhta") == doctest::Approx(0.9444).epsilon(1e-4));
}

TEST_CASE("jaro: edges") {
    CHECK(jaro("", "") == 1.0);
    CHECK(jaro("abc", "") == 0.0);
    CHECK(jaro("", "abc") == 0.0);
    CHECK(jaro("paper", "paper") == 1.0);
    CHECK(jaro("abc", "xyz") == 0.0);
}

TEST_CASE("jaro_winkler: prefix bonus") {
    const double j = 17.0 / 18.0;
    CHECK(jaro_winkler("martha", "marhta") == doctest::Approx(j + 3 * 0.1 * (1 - j)).epsilon(1e-12));
    CHECK(jaro_winkler("martha", "marhta") == doctest::Approx(0.9611).epsilon(1e-4));
    CHECK(jaro_winkler("paper", "paper") == 1.0);
    CHECK(jaro_winkler("abc", "xyz") == 0.0);
    // prefix length caps at 4
    CHECK(jaro_winkler("abcdef", "abcdex") ==
          doctest::Approx(jaro("abcdef", "abcdex") + 4 * 0.1 * (1 - jaro("abcdef", "abcdex"))));
}

namespace {

std::string random_word(samatch::Rng& rng) {
    static const std::string alphabet = "abcdefghij";
    const std::size_t len = rng.index(12);
    std::string w;
    for (std::size_t i = 0; i < len; ++i) w += alphabet[rng.index(alphabet.size())];
    return w;
}

}  // namespace

TEST_CASE("jaro/jaro_winkler: sampled properties") {
    samatch::Rng rng(7);
    for (int k = 0; k < 2000; ++k) {
        const std::string a = random_word(rng);
        const std::string b = random_word(rng);
        const double j = jaro(a, b);
        const double jw = jaro_winkler(a, b);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(j >= 0.0);
        CHECK(j <= 1.0);
        CHECK(jw >= 0.0);
        CHECK(jw <= 1.0);
        CHECK(jw == doctest::Approx(jaro_winkler(b, a)).epsilon(1e-15));
        CHECK(j == doctest::Approx(jaro(b, a)).epsilon(1e-15));
        CHECK(jw >= j - 1e-15);
        CHECK(jaro_winkler(a, a) == 1.0);
    }
}
