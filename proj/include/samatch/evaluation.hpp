#pragma once

// Precision / recall / F-measure of a system alignment against a reference,
// and per-task track reports.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "samatch/alignment.hpp"

namespace samatch {

struct PrfScore {
    double precision = 0.0;
    double recall = 0.0;
    double f_measure = 0.0;
    std::size_t correct = 0;
    std::size_t produced = 0;
    std::size_t reference_size = 0;
};

// Correspondences match on (entity1, entity2) with relation "=" on both
// sides; measures are ignored. Degenerate conventions: an empty system scores
// P = 1, an empty reference scores R = 1, and F = 0 when P + R = 0.
inline PrfScore evaluate(const Alignment& system, const Alignment& reference) {
    std::set<std::pair<std::string, std::string>> ref_keys;
    for (const auto& c : reference.correspondences())
        if (c.relation == "=") ref_keys.insert({c.entity1, c.entity2});

    PrfScore score;
    score.produced = system.size();
    score.reference_size = reference.size();
    for (const auto& c : system.correspondences())
        if (c.relation == "=" && ref_keys.count({c.entity1, c.entity2})) ++score.correct;

    score.precision = score.produced == 0
                          ? 1.0
                          : static_cast<double>(score.correct) / static_cast<double>(score.produced);
    score.recall = score.reference_size == 0
                       ? 1.0
                       : static_cast<double>(score.correct) / static_cast<double>(score.reference_size);
    const double pr = score.precision + score.recall;
    score.f_measure = pr == 0.0 ? 0.0 : 2.0 * score.precision * score.recall / pr;
    return score;
}

struct EvaluationReport {
    struct Row {
        std::string task;
        PrfScore score;
    };

    std::vector<Row> per_task;
    std::vector<std::string> skipped_tasks;

    // Arithmetic means over task rows (macro average).
    double average_precision() const { return mean([](const Row& r) { return r.score.precision; }); }
    double average_recall() const { return mean([](const Row& r) { return r.score.recall; }); }
    double average_f_measure() const { return mean([](const Row& r) { return r.score.f_measure; }); }

    std::string to_text() const {
        std::ostringstream os;
        os << pad("task", 24) << pad("prec", 8) << pad("recall", 8) << pad("f", 8)
           << pad("correct", 9) << pad("produced", 10) << "reference\n";
        for (const auto& row : per_task) {
            os << pad(row.task, 24) << pad(fmt(row.score.precision), 8)
               << pad(fmt(row.score.recall), 8) << pad(fmt(row.score.f_measure), 8)
               << pad(std::to_string(row.score.correct), 9)
               << pad(std::to_string(row.score.produced), 10) << row.score.reference_size << "\n";
        }
        os << pad("average", 24) << pad(fmt(average_precision()), 8)
           << pad(fmt(average_recall()), 8) << pad(fmt(average_f_measure()), 8) << "\n";
        if (!skipped_tasks.empty()) {
            os << "skipped:";
            for (const auto& t : skipped_tasks) os << " " << t;
            os << "\n";
        }
        return os.str();
    }

    std::string to_csv() const {
        std::ostringstream os;
        os << "task,precision,recall,f_measure,correct,produced,reference_size\n";
        for (const auto& row : per_task) {
            os << row.task << "," << fmt(row.score.precision) << "," << fmt(row.score.recall)
               << "," << fmt(row.score.f_measure) << "," << row.score.correct << ","
               << row.score.produced << "," << row.score.reference_size << "\n";
        }
        os << "average," << fmt(average_precision()) << "," << fmt(average_recall()) << ","
           << fmt(average_f_measure()) << ",,,\n";
        return os.str();
    }

private:
    template <class F>
    double mean(F&& get) const {
        if (per_task.empty()) return 0.0;
        double sum = 0.0;
        for (const auto& row : per_task) sum += get(row);
        return sum / static_cast<double>(per_task.size());
    }

    static std::string fmt(double v) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%.3f", v);
        return buf;
    }

    static std::string pad(std::string s, std::size_t width) {
        if (s.size() < width) s.append(width - s.size(), ' ');
        return s;
    }
};

}  // namespace samatch
