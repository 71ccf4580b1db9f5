#pragma once

// Noun hypernym taxonomy with Wu-Palmer similarity. Loads either Princeton
// WordNet 3.x data.noun/index.noun files or a simplified TSV taxonomy
// (synset_id <TAB> comma-list of parent ids <TAB> comma-list of words).
//
// Depth is the minimum hop count from the root, with depth(root) = 1. When
// the loaded graph has several roots they are glued under one virtual root.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdint>
#include <deque>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "samatch/errors.hpp"

namespace samatch {

class WordNetTaxonomy {
public:
    using SynsetId = std::uint32_t;

    WordNetTaxonomy() = default;
    WordNetTaxonomy(WordNetTaxonomy&& other) noexcept { *this = std::move(other); }
    WordNetTaxonomy& operator=(WordNetTaxonomy&& other) noexcept {
        hypernyms_ = std::move(other.hypernyms_);
        depth_ = std::move(other.depth_);
        ancestors_ = std::move(other.ancestors_);
        word_index_ = std::move(other.word_index_);
        root_ = other.root_;
        lookup_misses_.store(other.lookup_misses_.load());
        return *this;
    }

    bool empty() const { return word_index_.empty(); }
    std::size_t synset_count() const { return hypernyms_.size(); }
    std::uint64_t lookup_misses() const { return lookup_misses_.load(); }

    bool has_word(const std::string& word) const { return word_index_.count(word) > 0; }

    std::uint32_t depth(SynsetId s) const { return depth_.at(s); }

    // max over synset pairs of 2*depth(lcs) / (depth(a) + depth(b)); 0 when
    // either word is out of vocabulary (counted as a lookup miss).
    double wu_palmer(const std::string& w1, const std::string& w2) const {
        const auto* s1 = find_synsets(w1);
        const auto* s2 = find_synsets(w2);
        if (!s1 || !s2) return 0.0;
        double best = 0.0;
        for (const SynsetId a : *s1)
            for (const SynsetId b : *s2) {
                const double wp = wu_palmer_synsets(a, b);
                if (wp > best) best = wp;
            }
        return best;
    }

    double wu_palmer_synsets(SynsetId a, SynsetId b) const {
        const std::uint32_t lcs = lcs_depth(a, b);
        if (lcs == 0) return 0.0;
        return 2.0 * lcs / (static_cast<double>(depth_[a]) + static_cast<double>(depth_[b]));
    }

    // depth of the deepest common hypernym ancestor; 0 when disjoint
    std::uint32_t lcs_depth(SynsetId a, SynsetId b) const {
        const auto& anc_a = ancestors_[a];
        const auto& anc_b = ancestors_[b];
        std::unordered_set<SynsetId> in_b(anc_b.begin(), anc_b.end());
        for (const SynsetId s : anc_a)  // sorted by depth, deepest first
            if (in_b.count(s)) return depth_[s];
        return 0;
    }

    static WordNetTaxonomy from_tsv(std::istream& in) {
        std::vector<std::string> ids;
        std::vector<std::vector<std::string>> parents;
        std::vector<std::vector<std::string>> words;
        std::unordered_map<std::string, SynsetId> index;

        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            std::vector<std::string> cols = split(line, '\t');
            if (cols.size() < 3)
                throw MalformedInput("wordnet tsv: expected 3 columns at line " +
                                     std::to_string(lineno));
            if (index.count(cols[0]))
                throw MalformedInput("wordnet tsv: duplicate synset id '" + cols[0] + "'");
            index[cols[0]] = static_cast<SynsetId>(ids.size());
            ids.push_back(cols[0]);
            parents.push_back(split(cols[1], ','));
            words.push_back(split(cols[2], ','));
        }

        WordNetTaxonomy wn;
        wn.hypernyms_.resize(ids.size());
        for (SynsetId s = 0; s < ids.size(); ++s) {
            for (const auto& p : parents[s]) {
                auto it = index.find(p);
                if (it == index.end())
                    throw MalformedInput("wordnet tsv: unknown parent '" + p + "' of '" +
                                         ids[s] + "'");
                wn.hypernyms_[s].push_back(it->second);
            }
            for (const auto& w : words[s]) {
                if (!w.empty()) wn.word_index_[lower(w)].push_back(s);
            }
        }
        wn.finalize();
        return wn;
    }

    static WordNetTaxonomy from_tsv_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw MalformedInput("cannot open wordnet tsv: " + path);
        return from_tsv(in);
    }

    // Princeton WN 3.x. data.noun carries synset members and hypernym
    // pointers ('@' and '@i'); index.noun adds lemma-to-synset entries.
    static WordNetTaxonomy from_princeton(std::istream& data_noun, std::istream* index_noun = nullptr) {
        struct RawSynset {
            std::vector<std::string> words;
            std::vector<std::string> hypernym_offsets;
        };
        std::unordered_map<std::string, RawSynset> raw;
        std::vector<std::string> order;

        std::string line;
        while (std::getline(data_noun, line)) {
            if (line.empty() || line[0] == ' ') continue;  // license preamble
            std::istringstream is(line);
            std::string offset, lex_filenum, ss_type;
            is >> offset >> lex_filenum >> ss_type;
            if (offset.empty()) continue;
            int w_cnt = 0;
            {
                std::string w_cnt_hex;
                is >> w_cnt_hex;
                w_cnt = static_cast<int>(std::stoul(w_cnt_hex, nullptr, 16));
            }
            RawSynset syn;
            for (int i = 0; i < w_cnt; ++i) {
                std::string word, lex_id;
                is >> word >> lex_id;
                syn.words.push_back(lower(word));
            }
            int p_cnt = 0;
            is >> p_cnt;
            for (int i = 0; i < p_cnt; ++i) {
                std::string symbol, target, pos, source_target;
                is >> symbol >> target >> pos >> source_target;
                if ((symbol == "@" || symbol == "@i") && pos == "n")
                    syn.hypernym_offsets.push_back(target);
            }
            if (!raw.count(offset)) order.push_back(offset);
            raw[offset] = std::move(syn);
        }
        if (raw.empty()) throw MalformedInput("wordnet data.noun: no synsets found");

        std::unordered_map<std::string, SynsetId> index;
        WordNetTaxonomy wn;
        wn.hypernyms_.resize(order.size());
        for (SynsetId s = 0; s < order.size(); ++s) index[order[s]] = s;
        for (SynsetId s = 0; s < order.size(); ++s) {
            const RawSynset& syn = raw[order[s]];
            for (const auto& h : syn.hypernym_offsets) {
                auto it = index.find(h);
                if (it != index.end()) wn.hypernyms_[s].push_back(it->second);
            }
            for (const auto& w : syn.words) wn.word_index_[w].push_back(s);
        }

        if (index_noun) {
            while (std::getline(*index_noun, line)) {
                if (line.empty() || line[0] == ' ') continue;
                std::istringstream is(line);
                std::string lemma, pos;
                int synset_cnt = 0, p_cnt = 0;
                is >> lemma >> pos >> synset_cnt >> p_cnt;
                for (int i = 0; i < p_cnt; ++i) {
                    std::string sym;
                    is >> sym;
                }
                int sense_cnt = 0, tagsense_cnt = 0;
                is >> sense_cnt >> tagsense_cnt;
                auto& entry = wn.word_index_[lower(lemma)];
                for (int i = 0; i < synset_cnt; ++i) {
                    std::string offset;
                    is >> offset;
                    auto it = index.find(offset);
                    if (it != index.end() &&
                        std::find(entry.begin(), entry.end(), it->second) == entry.end())
                        entry.push_back(it->second);
                }
            }
        }
        wn.finalize();
        return wn;
    }

    static WordNetTaxonomy from_princeton_dir(const std::string& dir) {
        std::ifstream data(dir + "/data.noun");
        if (!data) throw MalformedInput("cannot open " + dir + "/data.noun");
        std::ifstream idx(dir + "/index.noun");
        if (idx) return from_princeton(data, &idx);
        return from_princeton(data, nullptr);
    }

private:
    const std::vector<SynsetId>* find_synsets(const std::string& word) const {
        auto it = word_index_.find(word);
        if (it == word_index_.end()) {
            lookup_misses_.fetch_add(1, std::memory_order_relaxed);
            return nullptr;
        }
        return &it->second;
    }

    static std::string lower(std::string s) {
        std::transform(s.begin(), s.end(), s.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        return s;
    }

    static std::vector<std::string> split(const std::string& s, char sep) {
        std::vector<std::string> out;
        std::string cur;
        for (char c : s) {
            if (c == sep) {
                if (!cur.empty()) out.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) out.push_back(cur);
        return out;
    }

    // Glue roots under a single root, compute min-hop depths, then per-synset
    // ancestor lists sorted deepest-first for LCS queries.
    void finalize() {
        const std::size_t n = hypernyms_.size();
        std::vector<SynsetId> roots;
        for (SynsetId s = 0; s < n; ++s)
            if (hypernyms_[s].empty()) roots.push_back(s);
        if (roots.empty() && n > 0)
            throw MalformedInput("wordnet: hypernym graph has no root (cycle)");

        if (roots.size() == 1) {
            root_ = roots.front();
        } else {
            root_ = static_cast<SynsetId>(n);
            hypernyms_.emplace_back();
            for (const SynsetId r : roots) hypernyms_[r].push_back(root_);
        }

        const std::size_t total = hypernyms_.size();
        std::vector<std::vector<SynsetId>> children(total);
        for (SynsetId s = 0; s < total; ++s)
            for (const SynsetId h : hypernyms_[s]) children[h].push_back(s);

        depth_.assign(total, 0);
        std::deque<SynsetId> queue;
        depth_[root_] = 1;
        queue.push_back(root_);
        while (!queue.empty()) {
            const SynsetId s = queue.front();
            queue.pop_front();
            for (const SynsetId c : children[s]) {
                if (depth_[c] == 0) {
                    depth_[c] = depth_[s] + 1;
                    queue.push_back(c);
                }
            }
        }
        for (SynsetId s = 0; s < total; ++s)
            if (depth_[s] == 0)
                throw MalformedInput("wordnet: synset unreachable from root (cycle)");

        ancestors_.assign(total, {});
        for (SynsetId s = 0; s < total; ++s) {
            std::unordered_set<SynsetId> seen;
            std::deque<SynsetId> up{s};
            seen.insert(s);
            while (!up.empty()) {
                const SynsetId cur = up.front();
                up.pop_front();
                ancestors_[s].push_back(cur);
                for (const SynsetId h : hypernyms_[cur])
                    if (seen.insert(h).second) up.push_back(h);
            }
            std::sort(ancestors_[s].begin(), ancestors_[s].end(), [&](SynsetId x, SynsetId y) {
                if (depth_[x] != depth_[y]) return depth_[x] > depth_[y];
                return x < y;
            });
        }

        for (auto& [_, synsets] : word_index_) {
            std::sort(synsets.begin(), synsets.end());
            synsets.erase(std::unique(synsets.begin(), synsets.end()), synsets.end());
        }
    }

    std::vector<std::vector<SynsetId>> hypernyms_;
    std::vector<std::uint32_t> depth_;
    std::vector<std::vector<SynsetId>> ancestors_;
    std::unordered_map<std::string, std::vector<SynsetId>> word_index_;
    SynsetId root_ = 0;
    mutable std::atomic<std::uint64_t> lookup_misses_{0};
};

}  // namespace samatch
