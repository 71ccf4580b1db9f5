#pragma once

// Name cleaning: tokenization, stop word removal, stemming.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "samatch/errors.hpp"
#include "samatch/porter.hpp"

namespace samatch {

// Ordered bag of cleaned tokens for one raw entity name. `tokens` holds the
// stemmed forms; `surfaces` the pre-stem forms at matching positions (WordNet
// lookups go through the surface form first).
struct TokenBag {
    std::vector<std::string> tokens;
    std::vector<std::string> surfaces;
    std::string source;

    bool empty() const { return tokens.empty(); }
    std::size_t size() const { return tokens.size(); }

    friend bool operator==(const TokenBag& a, const TokenBag& b) {
        return a.tokens == b.tokens;
    }
};

class StopList {
public:
    StopList() = default;

    explicit StopList(std::initializer_list<std::string> words) {
        for (const auto& w : words) add(w);
    }

    // One token per line; lines starting with '#' are comments.
    static StopList from_stream(std::istream& in) {
        StopList s;
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == '\n' ||
                                     line.back() == ' ' || line.back() == '\t'))
                line.pop_back();
            std::size_t start = line.find_first_not_of(" \t");
            if (start == std::string::npos) continue;
            if (line[start] == '#') continue;
            s.add(line.substr(start));
        }
        return s;
    }

    static StopList from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw MalformedInput("cannot open stop list file: " + path);
        return from_stream(in);
    }

    void add(std::string word) {
        std::transform(word.begin(), word.end(), word.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        words_.insert(std::move(word));
    }

    bool contains(const std::string& token) const { return words_.count(token) > 0; }
    std::size_t size() const { return words_.size(); }

private:
    std::unordered_set<std::string> words_;
};

// Splits a raw name on whitespace and punctuation ('-', '_', '.', '/', and any
// other non-alphanumeric byte), on lower-to-upper camelCase boundaries, at the
// end of an acronym run (uppercase followed by lowercase), and between letter
// and digit runs. Tokens come out lowercased, in source order.
inline TokenBag tokenize(const std::string& raw) {
    if (raw.empty()) throw EmptyName("tokenize: empty raw name");

    TokenBag bag;
    bag.source = raw;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            bag.tokens.push_back(cur);
            cur.clear();
        }
    };

    const auto n = raw.size();
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned char c = raw[i];
        if (!std::isalnum(c)) {
            flush();
            continue;
        }
        if (!cur.empty()) {
            const unsigned char prev = raw[i - 1];
            const bool boundary =
                (std::islower(prev) && std::isupper(c)) ||
                (std::isdigit(prev) != std::isdigit(c)) ||
                // acronym run ends before its last uppercase: "NCIThesaurus"
                (std::isupper(prev) && std::isupper(c) && i + 1 < n &&
                 std::islower(static_cast<unsigned char>(raw[i + 1])));
            if (boundary) flush();
        }
        cur += static_cast<char>(std::tolower(c));
    }
    flush();

    if (bag.tokens.empty()) throw EmptyName("tokenize: no tokens in \"" + raw + "\"");
    bag.surfaces = bag.tokens;
    return bag;
}

// Drops stop word tokens. If every token is a stop word the bag is returned
// unchanged so the entity stays matchable.
inline TokenBag remove_stopwords(const TokenBag& bag, const StopList& stops) {
    TokenBag out;
    out.source = bag.source;
    for (std::size_t i = 0; i < bag.tokens.size(); ++i) {
        if (!stops.contains(bag.tokens[i])) {
            out.tokens.push_back(bag.tokens[i]);
            out.surfaces.push_back(bag.surfaces[i]);
        }
    }
    if (out.tokens.empty()) return bag;
    return out;
}

inline std::string stem(const std::string& token) { return porter_stem(token); }

// tokenize -> remove_stopwords -> stem. Surfaces keep the pre-stem forms.
inline TokenBag preprocess(const std::string& raw, const StopList& stops) {
    TokenBag bag = remove_stopwords(tokenize(raw), stops);
    for (auto& t : bag.tokens) t = porter_stem(t);
    return bag;
}

}  // namespace samatch
