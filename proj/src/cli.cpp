#include "showprof/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

#include "showprof/errors.hpp"
#include "showprof/ingest.hpp"
#include "showprof/log.hpp"
#include "showprof/report.hpp"
#include "showprof/retrieval.hpp"
#include "showprof/synth.hpp"
#include "showprof/validate.hpp"

namespace showprof {

namespace {

Dataset load_dataset(const std::string& dir) {
    return parse_dataset(DatasetPaths::in_dir(dir));
}

// --corpora accepts either one corpus file or a directory of *.jsonl files.
std::vector<ShowCorpus> load_corpora(const std::string& path) {
    std::filesystem::path p(path);
    if (std::filesystem::is_directory(p)) {
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(p))
            if (entry.path().extension() == ".jsonl") files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        if (files.empty()) throw DataError("no *.jsonl corpus files in " + path);
        std::map<std::string, ShowCorpus> merged;
        for (const auto& f : files)
            for (auto& c : read_corpora(f)) {
                ShowCorpus& dst = merged[c.show_id];
                if (dst.show_id.empty()) {
                    dst = std::move(c);
                } else {
                    dst.members.insert(c.members.begin(), c.members.end());
                    for (auto& [mid, tags] : c.provenance)
                        dst.provenance[mid].insert(tags.begin(), tags.end());
                }
            }
        std::vector<ShowCorpus> out;
        for (auto& [_, c] : merged) out.push_back(std::move(c));
        return out;
    }
    return read_corpora(p);
}

void write_section_file(const std::string& aspect, const Json& params, Json section,
                        const std::filesystem::path& out) {
    Json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["section"] = aspect;
    doc["parameters"] = params;
    doc["data"] = std::move(section);
    write_file_atomic(out, doc.dump(2) + "\n");
}

struct GenerateArgs {
    std::string out_dir;
    std::string spec_file;
    bool preset_demo = false;
    std::optional<std::uint64_t> seed;
    std::optional<int> users, shows, microblogs, clusters;
    std::vector<double> mix;
};

int cmd_generate(const GenerateArgs& a) {
    SyntheticSpec spec;
    if (a.preset_demo) spec = demo_spec();
    if (!a.spec_file.empty()) {
        std::ifstream in(a.spec_file);
        if (!in) throw DataError("cannot open spec file " + a.spec_file);
        Json j;
        try {
            j = Json::parse(in);
        } catch (const Json::parse_error& e) {
            throw DataError("spec file " + a.spec_file + ": " + e.what());
        }
        spec = SyntheticSpec::from_json(j);
    }
    if (a.seed) spec.seed = *a.seed;
    if (a.users) spec.n_users = *a.users;
    if (a.shows) spec.n_shows = *a.shows;
    if (a.microblogs) spec.n_microblogs = *a.microblogs;
    if (a.clusters) spec.planted_clusters = *a.clusters;
    if (!a.mix.empty()) {
        if (a.mix.size() != 3) throw UsageError("--mix needs three probabilities");
        spec.sentiment_mix = {a.mix[0], a.mix[1], a.mix[2]};
    }
    write_synthetic(spec, a.out_dir);
    write_file_atomic(std::filesystem::path(a.out_dir) / "synthetic_spec.json",
                      spec.to_json().dump(2) + "\n");
    std::cout << "generated " << spec.n_microblogs << " microblogs over " << spec.n_shows
              << " shows into " << a.out_dir << "\n";
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args) {
    CLI::App app{"TV show profiling from microblog traces"};
    app.require_subcommand(1);

    // ingest
    auto* ingest = app.add_subcommand("ingest", "parse and validate a dataset directory");
    std::string in_dataset;
    bool lenient = false;
    ingest->add_option("--dataset", in_dataset, "dataset directory")->required();
    ingest->add_flag("--lenient", lenient, "skip and count bad lines instead of failing");

    // generate
    auto* generate = app.add_subcommand("generate", "write a synthetic dataset with ground truth");
    GenerateArgs gen;
    generate->add_option("--out", gen.out_dir, "output directory")->required();
    generate->add_option("--spec", gen.spec_file, "synthetic spec JSON file");
    generate->add_flag("--preset-demo", gen.preset_demo, "start from the bundled demo fixture");
    std::uint64_t gseed = 0;
    int gusers = 0, gshows = 0, gmicroblogs = 0, gclusters = 0;
    auto* oseed = generate->add_option("--seed", gseed, "random seed");
    auto* ousers = generate->add_option("--users", gusers, "user count");
    auto* oshows = generate->add_option("--shows", gshows, "show count");
    auto* omb = generate->add_option("--microblogs", gmicroblogs, "microblog count");
    auto* oclusters = generate->add_option("--clusters", gclusters, "planted cluster count");
    generate->add_option("--mix", gen.mix, "sentiment mix p_pos p_neg p_neu")->expected(3);

    // retrieve
    auto* retrieve = app.add_subcommand("retrieve", "build per-show corpora");
    std::string r_dataset, r_show, r_out;
    bool r_all = false;
    retrieve->add_option("--dataset", r_dataset, "dataset directory")->required();
    retrieve->add_option("--show", r_show, "show id to retrieve");
    retrieve->add_flag("--all", r_all, "retrieve every show");
    retrieve->add_option("--out", r_out, "corpus JSON-lines output file")->required();

    // profile
    auto* profile = app.add_subcommand("profile", "run one profiler aspect");
    profile->require_subcommand(1);
    std::string p_dataset, p_corpora, p_out, p_lexicon, p_focus;
    std::uint64_t p_seed = 7;
    int p_k = 3;
    std::size_t p_threshold = 1;
    std::int64_t p_window = 86400;
    bool p_strict = false;
    std::int64_t p_windows_from = 0;
    int p_windows_count = 1;
    auto add_common = [&](CLI::App* sub, bool corpus_file) {
        sub->add_option("--dataset", p_dataset, "dataset directory")->required();
        sub->add_option(corpus_file ? "--corpus" : "--corpora", p_corpora,
                        "corpus file (or directory of *.jsonl)")
            ->required();
        sub->add_option("--out", p_out, "output JSON file")->required();
    };
    auto* puser = profile->add_subcommand("user", "demographics, PI, preference clusters");
    add_common(puser, true);
    puser->add_option("--k", p_k, "cluster count");
    puser->add_option("--seed", p_seed, "random seed");
    auto* pcontent = profile->add_subcommand("content", "sentiment and the show network");
    add_common(pcontent, false);
    pcontent->add_option("--lexicon", p_lexicon, "lexicon JSON file (default: built-in)");
    pcontent->add_option("--threshold", p_threshold, "min common users per network edge");
    pcontent->add_option("--seed", p_seed, "random seed");
    auto* psocial = profile->add_subcommand("social", "viewer topology and actor influence");
    add_common(psocial, false);
    auto* pprop = profile->add_subcommand("propagation", "round overlap and user flow");
    add_common(pprop, false);
    pprop->add_option("--window", p_window, "transition window in seconds");
    pprop->add_flag("--strict-attribution", p_strict, "drop multi-show posts");
    auto* ofrom = pprop->add_option("--windows-from", p_windows_from,
                                    "start epoch of the per-window outflow report");
    pprop->add_option("--windows-count", p_windows_count, "number of consecutive windows");
    pprop->add_option("--focus", p_focus, "focus show for the outflow report");

    // report
    auto* report = app.add_subcommand("report", "run the full pipeline");
    std::string rep_config;
    PipelineConfig cfg;
    std::string rep_dataset, rep_out, rep_lexicon, rep_focus, rep_aspects;
    std::uint64_t rep_seed = 0;
    int rep_k = 0, rep_threads = 0, rep_windows_count = 0;
    std::size_t rep_threshold = 0;
    std::int64_t rep_window = 0, rep_windows_from = 0;
    bool rep_strict = false;
    report->add_option("--config", rep_config, "key=value config file");
    auto* od = report->add_option("--dataset", rep_dataset, "dataset directory");
    auto* oo = report->add_option("--out", rep_out, "output directory");
    auto* os = report->add_option("--seed", rep_seed, "random seed");
    auto* ok = report->add_option("--k", rep_k, "cluster count");
    auto* ot = report->add_option("--threshold", rep_threshold, "show-network edge threshold");
    auto* ow = report->add_option("--window", rep_window, "propagation window seconds");
    auto* ol = report->add_option("--lexicon", rep_lexicon, "lexicon JSON file");
    auto* oa = report->add_option("--aspects", rep_aspects,
                                  "comma list of user,content,social,propagation");
    auto* oth = report->add_option("--threads", rep_threads, "worker count (0 = default)");
    auto* ostrict = report->add_flag("--strict-attribution", rep_strict, "drop multi-show posts");
    auto* ofocus = report->add_option("--focus", rep_focus, "focus show for the outflow report");
    auto* owf = report->add_option("--windows-from", rep_windows_from, "outflow windows start");
    auto* owc = report->add_option("--windows-count", rep_windows_count, "outflow window count");

    // export
    auto* exp = app.add_subcommand("export", "emit figure-analog CSV files from a report");
    std::string e_report, e_select, e_out;
    exp->add_option("--report", e_report, "report.json path")->required();
    exp->add_option("--select", e_select, "figure selector or 'all'")->required();
    exp->add_option("--out", e_out, "CSV file (or directory for 'all')")->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);

        if (*ingest) {
            DatasetPaths paths = DatasetPaths::in_dir(in_dataset);
            if (lenient) {
                ParseResult res = parse_dataset_lenient(paths);
                std::cout << "parsed " << res.dataset.microblogs.size() << " microblogs, "
                          << res.dataset.users.size() << " users, " << res.dataset.follows.size()
                          << " follows, " << res.dataset.shows.size() << " shows ("
                          << res.stats.total_skipped() << " bad lines skipped, "
                          << res.stats.synthesized_users << " stub profiles)\n";
            } else {
                Dataset d = parse_dataset(paths);
                std::cout << "parsed " << d.microblogs.size() << " microblogs, "
                          << d.users.size() << " users, " << d.follows.size() << " follows, "
                          << d.shows.size() << " shows; validation clean\n";
            }
            return 0;
        }
        if (*generate) {
            if (*oseed) gen.seed = gseed;
            if (*ousers) gen.users = gusers;
            if (*oshows) gen.shows = gshows;
            if (*omb) gen.microblogs = gmicroblogs;
            if (*oclusters) gen.clusters = gclusters;
            return cmd_generate(gen);
        }
        if (*retrieve) {
            if (r_all == !r_show.empty())
                throw UsageError("retrieve: pass exactly one of --show or --all");
            Dataset dataset = load_dataset(r_dataset);
            std::vector<ShowCorpus> corpora;
            if (r_all) {
                corpora = retrieve_all_corpora(dataset);
            } else {
                const TvShow* show = nullptr;
                for (const auto& s : dataset.shows)
                    if (s.show_id == r_show) show = &s;
                if (!show) throw DataError("retrieve: unknown show id " + r_show);
                corpora.push_back(retrieve_show_corpus(*show, dataset));
            }
            write_corpora(corpora, r_out);
            std::size_t members = 0;
            for (const auto& c : corpora) members += c.members.size();
            std::cout << "retrieved " << members << " corpus entries for " << corpora.size()
                      << " show(s) into " << r_out << "\n";
            return 0;
        }
        if (*profile) {
            Dataset dataset = load_dataset(p_dataset);
            std::vector<ShowCorpus> corpora = load_corpora(p_corpora);
            Json params;
            params["seed"] = p_seed;
            if (*puser) {
                params["k"] = p_k;
                write_section_file("user", params,
                                   build_user_section(dataset, corpora, p_k, p_seed), p_out);
            } else if (*pcontent) {
                SentimentLexicons lex = p_lexicon.empty() ? SentimentLexicons::builtin()
                                                          : SentimentLexicons::from_file(p_lexicon);
                params["threshold"] = p_threshold;
                write_section_file(
                    "content", params,
                    build_content_section(dataset, corpora, lex, p_threshold, p_seed), p_out);
            } else if (*psocial) {
                write_section_file("social", params, build_social_section(dataset, corpora),
                                   p_out);
            } else if (*pprop) {
                params["window"] = p_window;
                params["strict_attribution"] = p_strict;
                std::optional<std::int64_t> from;
                if (*ofrom) from = p_windows_from;
                write_section_file(
                    "propagation", params,
                    build_propagation_section(dataset, corpora, p_window, p_strict, p_focus,
                                              from, p_windows_count),
                    p_out);
            }
            std::cout << "profile written to " << p_out << "\n";
            return 0;
        }
        if (*report) {
            if (!rep_config.empty()) cfg = PipelineConfig::from_file(rep_config);
            if (*od) cfg.dataset_dir = rep_dataset;
            if (*oo) cfg.out_dir = rep_out;
            if (*os) cfg.seed = rep_seed;
            if (*ok) cfg.k = rep_k;
            if (*ot) cfg.threshold = rep_threshold;
            if (*ow) cfg.window = rep_window;
            if (*ol) cfg.lexicon = rep_lexicon;
            if (*oa) {
                cfg.aspects.clear();
                std::stringstream ss(rep_aspects);
                std::string item;
                while (std::getline(ss, item, ','))
                    if (!item.empty()) cfg.aspects.push_back(item);
            }
            if (*oth) cfg.threads = rep_threads;
            if (*ostrict) cfg.strict_attribution = rep_strict;
            if (*ofocus) cfg.focus_show = rep_focus;
            if (*owf) cfg.windows_from = rep_windows_from;
            if (*owc) cfg.windows_count = rep_windows_count;
            PipelineResult res = run_pipeline(cfg);
            std::cout << "report written to " << res.report_path.string() << "\n";
            return 0;
        }
        if (*exp) {
            std::ifstream in(e_report);
            if (!in) throw DataError("cannot open report " + e_report);
            Json rep;
            try {
                rep = Json::parse(in);
            } catch (const Json::parse_error& e) {
                throw DataError(std::string("report parse error: ") + e.what());
            }
            export_plot_data(rep, e_select, e_out);
            std::cout << "exported '" << e_select << "' to " << e_out << "\n";
            return 0;
        }
        throw UsageError("no subcommand given");
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace showprof
