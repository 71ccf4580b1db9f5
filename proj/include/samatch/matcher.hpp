#pragma once

// End-to-end pipeline: parse ontologies, build the similarity matrix, anneal,
// extract the alignment. Also the track runner used by the evaluation
// harness.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "samatch/alignment_io.hpp"
#include "samatch/annealer.hpp"
#include "samatch/evaluation.hpp"
#include "samatch/ontology_io.hpp"
#include "samatch/structural.hpp"

namespace samatch {

struct MatchOptions {
    SAConfig sa;
    double floor = 0.05;
};

struct MatchDiagnostics {
    ParseReport parse1, parse2;
    std::size_t entities1 = 0, entities2 = 0;
    std::size_t candidate_pairs = 0;
    std::uint64_t wordnet_misses = 0;
    std::size_t state_pairs = 0;
    double final_fitness = 0.0;
    std::size_t extracted = 0;
    double wall_seconds = 0.0;

    std::string summary() const {
        std::ostringstream os;
        os << "onto1: " << parse1.summary() << "\n";
        os << "onto2: " << parse2.summary() << "\n";
        os << "entities: " << entities1 << " x " << entities2
           << ", candidate pairs: " << candidate_pairs
           << ", wordnet misses: " << wordnet_misses << "\n";
        os << "state pairs: " << state_pairs << ", fitness: " << final_fitness
           << ", extracted: " << extracted << ", wall: " << wall_seconds << "s";
        return os.str();
    }
};

struct MatchResult {
    Alignment alignment;
    MatchDiagnostics diagnostics;
};

inline MatchResult run_match(const Ontology& o1, const Ontology& o2, const StopList& stops,
                             const WordNetTaxonomy& wn, const MatchOptions& options) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t misses_before = wn.lookup_misses();

    SimilarityCache cache(o1, o2, stops, wn);
    const SimilarityMatrix sims = build_similarity_matrix(cache, options.floor);
    const AlignmentState state = anneal(cache, sims, options.sa);
    MatchResult result;
    result.alignment = extract_alignment(state, cache, options.sa.extraction_threshold);

    auto& d = result.diagnostics;
    d.entities1 = o1.size();
    d.entities2 = o2.size();
    d.candidate_pairs = sims.size();
    d.wordnet_misses = wn.lookup_misses() - misses_before;
    d.state_pairs = state.size();
    d.final_fitness = state.cached_fitness();
    d.extracted = result.alignment.size();
    d.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

namespace track_detail {

inline std::optional<std::filesystem::path> find_onto(const std::filesystem::path& dir,
                                                      const std::string& stem) {
    for (const char* ext : {".rdf", ".json", ".owl", ".xml"}) {
        const auto p = dir / (stem + ext);
        if (std::filesystem::exists(p)) return p;
    }
    return std::nullopt;
}

struct TaskResult {
    std::string name;
    bool ok = false;
    PrfScore score;
    std::string error;
};

inline TaskResult run_task(const std::filesystem::path& task_dir, const StopList& stops,
                           const WordNetTaxonomy& wn, const MatchOptions& options) {
    TaskResult result;
    result.name = task_dir.filename().string();
    try {
        const auto p1 = find_onto(task_dir, "onto1");
        const auto p2 = find_onto(task_dir, "onto2");
        if (!p1 || !p2)
            throw ConfigError("task " + result.name + ": missing onto1/onto2 file");
        const auto ref_path = task_dir / "reference.rdf";
        if (!std::filesystem::exists(ref_path))
            throw MissingReference("task " + result.name + ": missing reference.rdf");

        const Ontology o1 = load_ontology_file(*p1);
        const Ontology o2 = load_ontology_file(*p2);
        const Alignment reference = read_alignment(read_file(ref_path));
        const MatchResult match = run_match(o1, o2, stops, wn, options);
        result.score = evaluate(match.alignment, reference);
        result.ok = true;
    } catch (const std::exception& e) {
        result.error = e.what();
    }
    return result;
}

}  // namespace track_detail

// Runs the pipeline over every task subdirectory (onto1.*, onto2.*,
// reference.rdf), scoring each against its reference. Failing tasks are
// skipped and reported, not fatal. Tasks run concurrently; the report order
// is by task name.
inline EvaluationReport evaluate_track(const std::filesystem::path& track_dir,
                                       const StopList& stops, const WordNetTaxonomy& wn,
                                       const MatchOptions& options, bool parallel = true) {
    if (!std::filesystem::is_directory(track_dir))
        throw ConfigError("track directory does not exist: " + track_dir.string());

    std::vector<std::filesystem::path> tasks;
    for (const auto& entry : std::filesystem::directory_iterator(track_dir))
        if (entry.is_directory()) tasks.push_back(entry.path());
    std::sort(tasks.begin(), tasks.end());

    std::vector<track_detail::TaskResult> results(tasks.size());
    if (parallel && tasks.size() > 1) {
        std::vector<std::future<track_detail::TaskResult>> futures;
        futures.reserve(tasks.size());
        for (const auto& t : tasks)
            futures.push_back(std::async(std::launch::async, track_detail::run_task, t,
                                         std::cref(stops), std::cref(wn), std::cref(options)));
        for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            results[i] = track_detail::run_task(tasks[i], stops, wn, options);
    }

    EvaluationReport report;
    for (const auto& r : results) {
        if (r.ok)
            report.per_task.push_back({r.name, r.score});
        else
            report.skipped_tasks.push_back(r.name + " (" + r.error + ")");
    }
    return report;
}

// WordNet loader dispatch: a directory means Princeton data.noun/index.noun,
// a file means the simplified TSV taxonomy.
inline WordNetTaxonomy load_wordnet(const std::filesystem::path& path) {
    if (std::filesystem::is_directory(path)) return WordNetTaxonomy::from_princeton_dir(path.string());
    return WordNetTaxonomy::from_tsv_file(path.string());
}

}  // namespace samatch
