// samatch command line: match two ontologies, evaluate an alignment against a
// reference, or run a whole track directory.
//
// Exit codes: 0 success, 1 runtime failure, 2 configuration failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "samatch/samatch.hpp"

namespace fs = std::filesystem;

namespace {

struct RunConfig {
    std::string onto1, onto2, wordnet, stoplist, out, config;
    std::string format = "text";
    std::string csv_out;
    double temperature = 1.0;
    double cooling = 0.95;
    std::size_t iters_per_temp = 0;  // 0 = auto
    double min_temp = 1e-4;
    std::uint64_t seed = 42;
    std::size_t restarts = 3;
    double threshold = 0.5;
    double floor = 0.05;
    bool sequential = false;

    samatch::MatchOptions match_options() const {
        samatch::MatchOptions opt;
        opt.sa.initial_temperature = temperature;
        opt.sa.cooling_rate = cooling;
        opt.sa.iterations_per_temperature = iters_per_temp;
        opt.sa.min_temperature = min_temp;
        opt.sa.seed = seed;
        opt.sa.restarts = restarts;
        opt.sa.extraction_threshold = threshold;
        opt.floor = floor;
        return opt;
    }
};

// Config file values sit between built-in defaults and CLI/env flags.
void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw samatch::ConfigError("cannot open config file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw samatch::ConfigError("config file " + path + ": " + e.what());
    }
    auto get = [&](const char* key, auto& into) {
        if (doc.contains(key)) doc.at(key).get_to(into);
    };
    get("onto1", cfg.onto1);
    get("onto2", cfg.onto2);
    get("wordnet", cfg.wordnet);
    get("stoplist", cfg.stoplist);
    get("out", cfg.out);
    get("format", cfg.format);
    get("temperature", cfg.temperature);
    get("cooling", cfg.cooling);
    get("iters-per-temp", cfg.iters_per_temp);
    get("min-temp", cfg.min_temp);
    get("seed", cfg.seed);
    get("restarts", cfg.restarts);
    get("threshold", cfg.threshold);
    get("floor", cfg.floor);
}

void require_readable(const std::string& path, const char* what) {
    if (path.empty()) return;
    if (!fs::exists(path))
        throw samatch::ConfigError(std::string(what) + " path does not exist: " + path);
}

samatch::StopList load_stops(const RunConfig& cfg) {
    if (cfg.stoplist.empty()) return samatch::StopList{};
    return samatch::StopList::from_file(cfg.stoplist);
}

samatch::WordNetTaxonomy load_wn(const RunConfig& cfg) {
    if (cfg.wordnet.empty()) return samatch::WordNetTaxonomy{};
    return samatch::load_wordnet(cfg.wordnet);
}

int cmd_match(const RunConfig& cfg) {
    require_readable(cfg.onto1, "onto1");
    require_readable(cfg.onto2, "onto2");
    require_readable(cfg.wordnet, "wordnet");
    require_readable(cfg.stoplist, "stoplist");
    if (cfg.out.empty()) throw samatch::ConfigError("match requires --out");
    cfg.match_options().sa.validate();

    samatch::ParseReport rep1, rep2;
    const samatch::Ontology o1 = samatch::load_ontology_file(cfg.onto1, &rep1);
    const samatch::Ontology o2 = samatch::load_ontology_file(cfg.onto2, &rep2);
    const samatch::StopList stops = load_stops(cfg);
    const samatch::WordNetTaxonomy wn = load_wn(cfg);

    samatch::MatchResult result = samatch::run_match(o1, o2, stops, wn, cfg.match_options());
    result.diagnostics.parse1 = rep1;
    result.diagnostics.parse2 = rep2;

    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write output file: " + cfg.out);
    out << samatch::write_alignment(result.alignment);
    out.close();

    std::cerr << result.diagnostics.summary() << "\n";
    return 0;
}

int cmd_eval(const std::string& system_path, const std::string& reference_path) {
    const samatch::Alignment system = samatch::read_alignment(samatch::read_file(system_path));
    const samatch::Alignment reference =
        samatch::read_alignment(samatch::read_file(reference_path));
    const samatch::PrfScore s = samatch::evaluate(system, reference);
    std::printf("%.3f %.3f %.3f\n", s.precision, s.recall, s.f_measure);
    return 0;
}

int cmd_track(const RunConfig& cfg, const std::string& track_dir) {
    require_readable(track_dir, "track");
    require_readable(cfg.wordnet, "wordnet");
    require_readable(cfg.stoplist, "stoplist");
    cfg.match_options().sa.validate();

    const samatch::StopList stops = load_stops(cfg);
    const samatch::WordNetTaxonomy wn = load_wn(cfg);
    const samatch::EvaluationReport report =
        samatch::evaluate_track(track_dir, stops, wn, cfg.match_options(), !cfg.sequential);

    if (report.per_task.empty())
        throw std::runtime_error("no tasks loaded from " + track_dir);

    if (cfg.format == "csv")
        std::cout << report.to_csv();
    else
        std::cout << report.to_text();
    if (!cfg.csv_out.empty()) {
        std::ofstream csv(cfg.csv_out, std::ios::binary);
        if (!csv) throw std::runtime_error("cannot write csv file: " + cfg.csv_out);
        csv << report.to_csv();
    }
    std::cerr << "tasks: " << report.per_task.size()
              << ", skipped: " << report.skipped_tasks.size() << "\n";
    for (const auto& s : report.skipped_tasks) std::cerr << "  skipped " << s << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;

    // --config is honored before flag parsing so flags and env override it
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        try {
            if (arg == "--config" && i + 1 < argc) {
                apply_config_file(cfg, argv[i + 1]);
            } else if (arg.rfind("--config=", 0) == 0) {
                apply_config_file(cfg, arg.substr(9));
            }
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }

    CLI::App app{"ontology matcher: lexical + structural similarity with "
                 "simulated annealing search"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--wordnet", cfg.wordnet,
                        "WordNet: Princeton dir (data.noun/index.noun) or TSV taxonomy")
            ->envname("SAMATCH_WORDNET");
        cmd->add_option("--stoplist", cfg.stoplist, "stop word file, one token per line")
            ->envname("SAMATCH_STOPLIST");
        cmd->add_option("--seed", cfg.seed, "search seed")->envname("SAMATCH_SEED");
        cmd->add_option("--threshold", cfg.threshold, "extraction threshold")
            ->envname("SAMATCH_THRESHOLD");
        cmd->add_option("--temperature", cfg.temperature, "initial temperature")
            ->envname("SAMATCH_TEMPERATURE");
        cmd->add_option("--cooling", cfg.cooling, "cooling rate in (0,1)")
            ->envname("SAMATCH_COOLING");
        cmd->add_option("--iters-per-temp", cfg.iters_per_temp,
                        "moves per temperature level (0 = 50 * max ontology size)")
            ->envname("SAMATCH_ITERS_PER_TEMP");
        cmd->add_option("--min-temp", cfg.min_temp, "stop temperature")
            ->envname("SAMATCH_MIN_TEMP");
        cmd->add_option("--restarts", cfg.restarts, "independent annealing chains")
            ->envname("SAMATCH_RESTARTS");
        cmd->add_option("--floor", cfg.floor, "similarity floor for candidate pairs")
            ->envname("SAMATCH_FLOOR");
        cmd->add_option("--config", cfg.config, "JSON config file (keys mirror flag names)");
    };

    CLI::App* match = app.add_subcommand("match", "align two ontologies");
    match->add_option("--onto1", cfg.onto1, "first ontology (.rdf/.owl/.xml or .json)")
        ->required();
    match->add_option("--onto2", cfg.onto2, "second ontology")->required();
    match->add_option("--out", cfg.out, "output alignment file")->required();
    add_common(match);

    CLI::App* eval = app.add_subcommand("eval", "score an alignment against a reference");
    std::string system_path, reference_path;
    eval->add_option("system", system_path, "system alignment file")->required();
    eval->add_option("reference", reference_path, "reference alignment file")->required();

    CLI::App* track = app.add_subcommand("track", "run and score every task in a directory");
    std::string track_dir;
    track->add_option("dir", track_dir, "track directory of task subdirectories")->required();
    track->add_option("--format", cfg.format, "report format on stdout: text or csv")
        ->check(CLI::IsMember({"text", "csv"}))
        ->envname("SAMATCH_FORMAT");
    track->add_option("--csv", cfg.csv_out, "also write the CSV report to this file");
    track->add_flag("--sequential", cfg.sequential, "run tasks one at a time");
    add_common(track);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (match->parsed()) return cmd_match(cfg);
        if (eval->parsed()) return cmd_eval(system_path, reference_path);
        if (track->parsed()) return cmd_track(cfg, track_dir);
    } catch (const samatch::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
