#pragma once

// Final alignment output: a list of correspondences between entity IRIs.

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "samatch/errors.hpp"

namespace samatch {

struct Correspondence {
    std::string entity1;
    std::string entity2;
    std::string relation = "=";
    double measure = 1.0;

    friend bool operator==(const Correspondence&, const Correspondence&) = default;
};

class Alignment {
public:
    std::string onto1;
    std::string onto2;

    void add(Correspondence c) {
        if (c.entity1.empty() || c.entity2.empty())
            throw MalformedInput("correspondence with empty entity IRI");
        if (c.measure < 0.0 || c.measure > 1.0)
            throw MalformedInput("correspondence measure out of [0,1]");
        if (!keys_.insert({c.entity1, c.entity2}).second)
            throw DuplicateCell("duplicate correspondence (" + c.entity1 + ", " + c.entity2 + ")");
        cells_.push_back(std::move(c));
    }

    bool contains(const std::string& e1, const std::string& e2) const {
        return keys_.count({e1, e2}) > 0;
    }

    const std::vector<Correspondence>& correspondences() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    void sort_by_entities() {
        std::sort(cells_.begin(), cells_.end(), [](const Correspondence& a, const Correspondence& b) {
            if (a.entity1 != b.entity1) return a.entity1 < b.entity1;
            return a.entity2 < b.entity2;
        });
    }

    // Order-insensitive value equality.
    friend bool operator==(const Alignment& a, const Alignment& b) {
        if (a.onto1 != b.onto1 || a.onto2 != b.onto2 || a.size() != b.size()) return false;
        auto ca = a.cells_;
        auto cb = b.cells_;
        auto byKey = [](const Correspondence& x, const Correspondence& y) {
            return std::tie(x.entity1, x.entity2) < std::tie(y.entity1, y.entity2);
        };
        std::sort(ca.begin(), ca.end(), byKey);
        std::sort(cb.begin(), cb.end(), byKey);
        return ca == cb;
    }

private:
    std::vector<Correspondence> cells_;
    std::set<std::pair<std::string, std::string>> keys_;
};

}  // namespace samatch
