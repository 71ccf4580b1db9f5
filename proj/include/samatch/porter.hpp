#pragma once

// Porter stemmer (1980), steps 1a-5b as published. Operates on lowercase
// tokens; words of length <= 2 pass through unchanged.

#include <array>
#include <string>
#include <string_view>
#include <utility>

namespace samatch {
namespace porter_detail {

inline bool is_consonant(std::string_view w, std::size_t i) {
    const char c = w[i];
    if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return false;
    if (c == 'y') return i == 0 ? true : !is_consonant(w, i - 1);
    return true;
}

// m in [C](VC){m}[V]
inline int measure(std::string_view stem) {
    int m = 0;
    bool prev_vowel = false;
    for (std::size_t i = 0; i < stem.size(); ++i) {
        const bool vowel = !is_consonant(stem, i);
        if (prev_vowel && !vowel) ++m;
        prev_vowel = vowel;
    }
    return m;
}

inline bool has_vowel(std::string_view stem) {
    for (std::size_t i = 0; i < stem.size(); ++i)
        if (!is_consonant(stem, i)) return true;
    return false;
}

inline bool ends_double_consonant(std::string_view w) {
    const auto n = w.size();
    return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

// *o: stem ends consonant-vowel-consonant, final consonant not w, x or y
inline bool ends_cvc(std::string_view w) {
    const auto n = w.size();
    if (n < 3) return false;
    if (!is_consonant(w, n - 3) || is_consonant(w, n - 2) || !is_consonant(w, n - 1)) return false;
    const char last = w[n - 1];
    return last != 'w' && last != 'x' && last != 'y';
}

inline bool ends_with(std::string_view w, std::string_view suffix) {
    return w.size() >= suffix.size() && w.substr(w.size() - suffix.size()) == suffix;
}

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
};

// Longest matching suffix wins; if its m-condition fails, the step is a no-op.
template <std::size_t N>
void apply_rule_list(std::string& w, const std::array<Rule, N>& rules, int min_m) {
    const Rule* best = nullptr;
    for (const auto& r : rules)
        if (ends_with(w, r.suffix) && (!best || r.suffix.size() > best->suffix.size())) best = &r;
    if (!best) return;
    std::string_view stem = std::string_view(w).substr(0, w.size() - best->suffix.size());
    if (measure(stem) >= min_m) w = std::string(stem) + std::string(best->replacement);
}

inline void step1a(std::string& w) {
    if (ends_with(w, "sses")) { w.erase(w.size() - 2); return; }
    if (ends_with(w, "ies"))  { w.erase(w.size() - 2); return; }
    if (ends_with(w, "ss")) return;
    if (ends_with(w, "s")) w.pop_back();
}

inline void step1b(std::string& w) {
    if (ends_with(w, "eed")) {
        if (measure(std::string_view(w).substr(0, w.size() - 3)) > 0) w.pop_back();
        return;
    }
    bool stripped = false;
    if (ends_with(w, "ed") && has_vowel(std::string_view(w).substr(0, w.size() - 2))) {
        w.erase(w.size() - 2);
        stripped = true;
    } else if (ends_with(w, "ing") && has_vowel(std::string_view(w).substr(0, w.size() - 3))) {
        w.erase(w.size() - 3);
        stripped = true;
    }
    if (!stripped) return;
    if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
        w += 'e';
    } else if (ends_double_consonant(w) && w.back() != 'l' && w.back() != 's' && w.back() != 'z') {
        w.pop_back();
    } else if (measure(w) == 1 && ends_cvc(w)) {
        w += 'e';
    }
}

inline void step1c(std::string& w) {
    if (ends_with(w, "y") && has_vowel(std::string_view(w).substr(0, w.size() - 1)))
        w.back() = 'i';
}

inline void step2(std::string& w) {
    static constexpr std::array<Rule, 20> rules{{
        {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"}, {"anci", "ance"},
        {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},   {"entli", "ent"},
        {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
        {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
        {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},   {"biliti", "ble"},
    }};
    apply_rule_list(w, rules, 1);
}

inline void step3(std::string& w) {
    static constexpr std::array<Rule, 7> rules{{
        {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
        {"ical", "ic"},  {"ful", ""},   {"ness", ""},
    }};
    apply_rule_list(w, rules, 1);
}

inline void step4(std::string& w) {
    static constexpr std::array<std::string_view, 19> suffixes{
        "al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement",
        "ment", "ent", "ion", "ou", "ism", "ate", "iti", "ous", "ive", "ize"};
    std::string_view best;
    for (const auto s : suffixes)
        if (ends_with(w, s) && s.size() > best.size()) best = s;
    if (best.empty()) return;
    std::string_view stem = std::string_view(w).substr(0, w.size() - best.size());
    if (measure(stem) <= 1) return;
    if (best == "ion" && !(ends_with(stem, "s") || ends_with(stem, "t"))) return;
    w.erase(stem.size());
}

inline void step5a(std::string& w) {
    if (!ends_with(w, "e")) return;
    std::string_view stem = std::string_view(w).substr(0, w.size() - 1);
    const int m = measure(stem);
    if (m > 1 || (m == 1 && !ends_cvc(stem))) w.pop_back();
}

inline void step5b(std::string& w) {
    if (measure(w) > 1 && ends_double_consonant(w) && w.back() == 'l') w.pop_back();
}

}  // namespace porter_detail

inline std::string porter_stem(std::string word) {
    using namespace porter_detail;
    if (word.size() <= 2) return word;
    step1a(word);
    step1b(word);
    step1c(word);
    step2(word);
    step3(word);
    step4(word);
    step5a(word);
    step5b(word);
    return word;
}

}  // namespace samatch
