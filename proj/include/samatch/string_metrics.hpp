#pragma once

// Jaro and Jaro-Winkler string similarity.

#include <algorithm>
#include <string_view>
#include <vector>

namespace samatch {

// Standard Jaro similarity. Matches are equal characters no further apart
// than floor(max(|s1|,|s2|)/2)-1; transpositions are matched characters that
// disagree in order, counted in halves. Two empty strings score 1, one empty
// string scores 0.
inline double jaro(std::string_view s1, std::string_view s2) {
    const auto len1 = static_cast<long>(s1.size());
    const auto len2 = static_cast<long>(s2.size());
    if (len1 == 0 && len2 == 0) return 1.0;
    if (len1 == 0 || len2 == 0) return 0.0;

    const long window = std::max(0L, std::max(len1, len2) / 2 - 1);
    std::vector<bool> matched1(s1.size(), false);
    std::vector<bool> matched2(s2.size(), false);

    long matches = 0;
    for (long i = 0; i < len1; ++i) {
        const long lo = std::max(0L, i - window);
        const long hi = std::min(len2 - 1, i + window);
        for (long j = lo; j <= hi; ++j) {
            if (matched2[j] || s1[i] != s2[j]) continue;
            matched1[i] = true;
            matched2[j] = true;
            ++matches;
            break;
        }
    }
    if (matches == 0) return 0.0;

    long out_of_order = 0;
    long j = 0;
    for (long i = 0; i < len1; ++i) {
        if (!matched1[i]) continue;
        while (!matched2[j]) ++j;
        if (s1[i] != s2[j]) ++out_of_order;
        ++j;
    }
    const double m = static_cast<double>(matches);
    const double t = out_of_order / 2.0;
    return (m / len1 + m / len2 + (m - t) / m) / 3.0;
}

// Jaro plus the Winkler common-prefix bonus: j + l * p * (1 - j) with the
// prefix length l capped at 4 and p = 0.1.
inline double jaro_winkler(std::string_view s1, std::string_view s2) {
    const double j = jaro(s1, s2);
    std::size_t prefix = 0;
    const std::size_t cap = std::min({std::size_t{4}, s1.size(), s2.size()});
    while (prefix < cap && s1[prefix] == s2[prefix]) ++prefix;
    constexpr double p = 0.1;
    return j + static_cast<double>(prefix) * p * (1.0 - j);
}

}  // namespace samatch
