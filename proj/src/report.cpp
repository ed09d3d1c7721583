#include "showprof/report.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "showprof/errors.hpp"
#include "showprof/graphkit.hpp"
#include "showprof/ingest.hpp"
#include "showprof/log.hpp"
#include "showprof/profile_propagation.hpp"
#include "showprof/profile_social.hpp"
#include "showprof/profile_user.hpp"
#include "showprof/rng.hpp"
#include "showprof/validate.hpp"

namespace showprof {

namespace {

const std::set<std::string> kAspects = {"user", "content", "social", "propagation"};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

}  // namespace

void PipelineConfig::apply_kv(const std::string& key, const std::string& value) {
    if (key == "dataset") dataset_dir = value;
    else if (key == "out") out_dir = value;
    else if (key == "seed") seed = std::stoull(value);
    else if (key == "k") k = std::stoi(value);
    else if (key == "threshold") threshold = static_cast<std::size_t>(std::stoull(value));
    else if (key == "window") window = std::stoll(value);
    else if (key == "lexicon") lexicon = value;
    else if (key == "aspects") aspects = split_csv_list(value);
    else if (key == "strict_attribution") strict_attribution = (value == "true" || value == "1");
    else if (key == "threads") threads = std::stoi(value);
    else if (key == "focus") focus_show = value;
    else if (key == "windows_from") windows_from = std::stoll(value);
    else if (key == "windows_count") windows_count = std::stoi(value);
    else throw UsageError("unknown config key: " + key);
}

PipelineConfig PipelineConfig::from_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw DataError("cannot open config file " + file.string());
    PipelineConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw UsageError(file.string() + ":" + std::to_string(lineno) +
                             ": expected key=value");
        try {
            cfg.apply_kv(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
        } catch (const std::invalid_argument&) {
            throw UsageError(file.string() + ":" + std::to_string(lineno) + ": bad value");
        }
    }
    return cfg;
}

void PipelineConfig::validate() const {
    if (dataset_dir.empty()) throw UsageError("config: dataset directory required");
    if (out_dir.empty()) throw UsageError("config: output directory required");
    if (aspects.empty()) throw UsageError("config: at least one aspect required");
    for (const auto& a : aspects)
        if (!kAspects.contains(a)) throw UsageError("config: unknown aspect '" + a + "'");
    if (window <= 0) throw UsageError("config: window must be positive");
    if (windows_count < 1) throw UsageError("config: windows_count must be >= 1");
    if (threads < 0) throw UsageError("config: threads must be >= 0");
}

std::string files_fingerprint(const std::vector<std::filesystem::path>& files) {
    std::uint64_t h = kFnvOffset;
    for (const auto& path : files) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw DataError("fingerprint: cannot open " + path.string());
        std::string name = path.filename().string();
        h = fnv1a64(name, h);
        char buf[1 << 16];
        while (in) {
            in.read(buf, sizeof(buf));
            h = fnv1a64_bytes(buf, static_cast<std::size_t>(in.gcount()), h);
        }
    }
    char hex[17];
    std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + hex;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& bytes) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DataError("cannot write " + tmp.string());
        out << bytes;
        if (!out) throw DataError("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

namespace {

std::set<std::string> all_corpus_authors(const Dataset& dataset,
                                         const std::vector<ShowCorpus>& corpora) {
    std::unordered_map<std::string, const std::string*> author_of;
    for (const auto& m : dataset.microblogs) author_of[m.id] = &m.author_id;
    std::set<std::string> authors;
    for (const auto& c : corpora)
        for (const auto& mid : c.members)
            if (auto it = author_of.find(mid); it != author_of.end()) authors.insert(*it->second);
    return authors;
}

Json edges_to_json(const SocialGraph& g) {
    Json arr = Json::array();
    for (const auto& [a, b, w] : g.sorted_edges()) arr.push_back(Json::array({a, b, w}));
    return arr;
}

Json row_to_json(const SentimentRow& row) {
    return {{"positive", row.positive},
            {"negative", row.negative},
            {"non_sentiment", row.non_sentiment}};
}

std::vector<TvShow> sorted_shows(const Dataset& dataset) {
    std::vector<TvShow> shows = dataset.shows;
    std::sort(shows.begin(), shows.end(),
              [](const TvShow& a, const TvShow& b) { return a.show_id < b.show_id; });
    return shows;
}

}  // namespace

Json build_user_section(const Dataset& dataset, const std::vector<ShowCorpus>& corpora,
                        int k, std::uint64_t seed) {
    Json section;
    auto users = all_corpus_authors(dataset, corpora);

    AgeHistogram ages = age_histogram(users, dataset);
    Json age;
    Json counts = Json::object();
    for (const auto& [a, c] : ages.counts) counts[std::to_string(a)] = c;
    age["counts"] = counts;
    age["known_count"] = ages.known_count;
    age["unknown_count"] = ages.unknown_count;
    if (ages.mean_age) age["mean_age"] = *ages.mean_age;
    else age["mean_age"] = nullptr;
    age["denominator"] = "corpus authors with a known age";
    section["age_histogram"] = age;

    Json pi;
    auto regions = region_counts(users, dataset);
    try {
        auto rows = participation_index(regions);
        pi["defined"] = true;
        Json arr = Json::array();
        for (const auto& r : rows)
            arr.push_back({{"region", r.region}, {"user_count", r.user_count}, {"pi", r.pi}});
        pi["rows"] = arr;
        pi["denominator"] =
            "UN_10 = user count of the 10th-ranked region (descending count, ties by region id)";
    } catch (const DataError& e) {
        pi["defined"] = false;
        pi["reason"] = e.what();
    }
    section["participation_index"] = pi;

    Json clusters;
    auto vectors = all_label_vectors(corpora, dataset);
    if (vectors.empty()) {
        clusters["defined"] = false;
        clusters["reason"] = "no users with attributed posts";
    } else {
        KmeansResult km = kmeans_cluster(vectors, k, seed);
        clusters["defined"] = true;
        clusters["k"] = k;
        clusters["iterations"] = km.iterations;
        clusters["converged"] = km.converged;
        clusters["objective_history"] = km.objective_history;
        Json assign = Json::object();
        std::map<int, std::set<std::string>> members;
        for (const auto& [user, c] : km.assignment.community) {
            assign[user] = c;
            members[c].insert(user);
        }
        clusters["assignments"] = assign;
        Json sizes = Json::object();
        for (const auto& [c, m] : members) sizes[std::to_string(c)] = m.size();
        clusters["sizes"] = sizes;
        Json cohesion = Json::array();
        for (const auto& [c, m] : members) {
            CohesionStats stats = cluster_cohesion(m, dataset);
            Json entry;
            entry["cluster"] = c;
            entry["size"] = stats.size;
            entry["intra_edges"] = stats.intra_edges;
            if (stats.density) entry["density"] = *stats.density;
            else entry["density"] = nullptr;
            entry["average_clustering"] = stats.average_clustering;
            Json vips = Json::array();
            for (const auto& v : stats.vip_follows)
                vips.push_back({{"vip_id", v.vip_id},
                                {"vip_in_cluster", v.vip_in_cluster},
                                {"follower_fraction", v.follower_fraction}});
            entry["vip_follows"] = vips;
            entry["density_denominator"] = "size*(size-1)/2 potential undirected pairs";
            cohesion.push_back(std::move(entry));
        }
        clusters["cohesion"] = cohesion;
    }
    section["clusters"] = clusters;
    return section;
}

Json build_content_section(const Dataset& dataset, const std::vector<ShowCorpus>& corpora,
                           const SentimentLexicons& lex, std::size_t threshold,
                           std::uint64_t seed) {
    Json section;
    auto labels = classify_dataset(dataset, lex);
    auto shows = sorted_shows(dataset);

    Json sentiment;
    Json per_show = Json::array();
    ShowCorpus union_corpus;
    union_corpus.show_id = "ALL";
    std::map<std::string, const ShowCorpus*> by_show;
    for (const auto& c : corpora) by_show[c.show_id] = &c;
    for (const auto& [sid, corpus] : by_show) {
        SentimentSummary s = sentiment_summary(*corpus, dataset, labels);
        per_show.push_back({{"show_id", sid},
                            {"initial", row_to_json(s.initial)},
                            {"response", row_to_json(s.response)},
                            {"emotional_fraction_initial", s.initial.emotional_fraction()},
                            {"emotional_fraction_response", s.response.emotional_fraction()}});
        for (const auto& mid : corpus->members) union_corpus.members.insert(mid);
    }
    sentiment["per_show"] = per_show;
    SentimentSummary overall = sentiment_summary(union_corpus, dataset, labels);
    sentiment["overall"] = {{"initial", row_to_json(overall.initial)},
                            {"response", row_to_json(overall.response)},
                            {"emotional_fraction_initial", overall.initial.emotional_fraction()},
                            {"emotional_fraction_response", overall.response.emotional_fraction()}};
    sentiment["denominator"] =
        "counts over corpus members; emotional fraction = (positive+negative)/row total";
    section["sentiment"] = sentiment;

    Json pf;
    Json rows = Json::array();
    for (const auto& e : positive_fraction_table(shows, corpora, labels)) {
        Json r;
        r["show_id"] = e.show_id;
        if (e.view_count) r["view_count"] = *e.view_count;
        else r["view_count"] = nullptr;
        r["positive"] = e.positive;
        r["negative"] = e.negative;
        if (e.positive_fraction) r["positive_fraction"] = *e.positive_fraction;
        else r["positive_fraction"] = nullptr;
        r["ranked"] = e.ranked;
        rows.push_back(std::move(r));
    }
    pf["rows"] = rows;
    pf["denominator"] = "positive/(positive+negative) over sentiment-bearing posts";
    section["positive_fraction"] = pf;

    ShowNetwork net = build_show_network(shows, corpora, dataset, threshold);
    ShowNetworkProfile prof = show_network_profile(net, seed);
    Json network;
    network["threshold"] = threshold;
    network["seed"] = seed;
    network["nodes"] = net.graph.nodes();
    network["edges"] = edges_to_json(net.graph);
    Json degree;
    Json hist = Json::object();
    for (const auto& [d, c] : prof.degrees.counts) hist[std::to_string(d)] = c;
    degree["histogram"] = hist;
    Json cdf = Json::array();
    for (const auto& [d, f] : prof.degrees.cdf) cdf.push_back(Json::array({d, f}));
    degree["cdf"] = cdf;
    degree["mean"] = prof.degrees.mean;
    network["degree"] = degree;
    network["fraction_degree_above_40"] = prof.fraction_degree_above_40;
    Json ccdf = Json::array();
    for (const auto& [c, f] : prof.clustering_cdf) ccdf.push_back(Json::array({c, f}));
    network["clustering_cdf"] = ccdf;
    network["average_clustering"] = prof.average_clustering;
    network["average_path_length"] = prof.paths.average_path_length;
    network["diameter"] = prof.paths.diameter;
    Json communities;
    communities["q"] = prof.modularity_q;
    communities["count"] = prof.partition.community_count;
    Json assignment = Json::object();
    for (const auto& [node, c] : prof.partition.community) assignment[node] = c;
    communities["assignment"] = assignment;
    network["communities"] = communities;
    network["degree_fit"] = {{"a", prof.degree_fit.a},
                             {"b", prof.degree_fit.b},
                             {"c", prof.degree_fit.c},
                             {"r_squared", prof.degree_fit.r_squared}};
    network["random_baseline_clustering"] = prof.random_baseline_clustering;
    network["path_denominator"] = "ordered pairs of distinct mutually reachable nodes";
    section["show_network"] = network;
    return section;
}

Json build_social_section(const Dataset& dataset, const std::vector<ShowCorpus>& corpora) {
    Json section;
    auto shows = sorted_shows(dataset);
    std::map<std::string, const ShowCorpus*> by_show;
    for (const auto& c : corpora) by_show[c.show_id] = &c;

    Json topology = Json::array();
    Json skipped = Json::array();
    for (const auto& show : shows) {
        auto it = by_show.find(show.show_id);
        if (it == by_show.end() || it->second->members.empty()) {
            skipped.push_back(show.show_id);
            continue;
        }
        ViewerTopologyStats stats = viewer_topology_stats(*it->second, dataset);
        Json sizes = Json::object();
        for (const auto& [size, count] : stats.component_sizes)
            sizes[std::to_string(size)] = count;
        topology.push_back({{"show_id", show.show_id},
                            {"authors", stats.author_count},
                            {"isolated", stats.isolated_count},
                            {"isolated_fraction", stats.isolated_fraction},
                            {"connected_fraction", stats.connected_fraction},
                            {"component_sizes", sizes}});
    }
    section["viewer_topology"] = topology;
    section["skipped_empty_corpora"] = skipped;

    SocialGraph copost = actor_copost_graph(shows, corpora, dataset);
    SocialGraph follow = actor_follow_graph(dataset, shows);
    SocialGraph both = graph_intersection(copost, follow);
    Json graphs;
    graphs["nodes"] = copost.nodes();
    graphs["copost_edges"] = edges_to_json(copost);
    graphs["follow_edges"] = edges_to_json(follow);
    graphs["intersection_edges"] = edges_to_json(both);
    section["actor_graphs"] = graphs;

    Json influence = Json::array();
    Json missing = Json::array();
    std::vector<InfluenceRecord> all_records;
    for (const auto& show : shows) {
        auto it = by_show.find(show.show_id);
        if (it == by_show.end() || it->second->members.empty()) continue;
        ActorInfluence inf = actor_influence(show, *it->second, dataset);
        for (const auto& r : inf.records) {
            influence.push_back({{"show_id", r.show_id},
                                 {"actor", r.actor},
                                 {"actor_fraction", r.actor_fraction},
                                 {"fan_fraction", r.fan_fraction}});
            all_records.push_back(r);
        }
        if (!inf.actors_without_accounts.empty())
            missing.push_back(
                {{"show_id", show.show_id}, {"actors", inf.actors_without_accounts}});
    }
    section["influence"] = influence;
    section["influence_missing_accounts"] = missing;
    section["influence_denominator"] = "fractions over |corpus| of the show";

    Json stats = Json::array();
    for (const auto& s : actor_influence_stats(all_records, dataset))
        stats.push_back({{"actor", s.actor},
                         {"mean_influence", s.mean_influence},
                         {"variance_influence", s.variance_influence},
                         {"fan_count", s.fan_count}});
    section["actor_stats"] = stats;
    return section;
}

Json build_propagation_section(const Dataset& dataset, const std::vector<ShowCorpus>& corpora,
                               std::int64_t window, bool strict_attribution,
                               const std::string& focus_show,
                               std::optional<std::int64_t> windows_from, int windows_count) {
    Json section;
    section["window"] = window;
    section["strict_attribution"] = strict_attribution;
    auto shows = sorted_shows(dataset);
    std::map<std::string, const ShowCorpus*> by_show;
    for (const auto& c : corpora) by_show[c.show_id] = &c;

    Json overlaps = Json::array();
    Json skipped = Json::array();
    for (const auto& show : shows) {
        auto it = by_show.find(show.show_id);
        if (show.rounds.size() < 2 || it == by_show.end()) {
            skipped.push_back(show.show_id);
            continue;
        }
        RoundOverlap ro = round_overlap(show, *it->second, dataset);
        overlaps.push_back({{"show_id", ro.show_id},
                            {"only_first", ro.only_first},
                            {"only_second", ro.only_second},
                            {"both", ro.both}});
    }
    section["round_overlap"] = overlaps;
    section["round_overlap_skipped"] = skipped;

    PropagationGraph graph =
        propagation_graph(shows, corpora, dataset, window, strict_attribution);
    Json g;
    g["nodes"] = graph.graph.nodes();
    g["edges"] = edges_to_json(graph.graph);
    Json indeg = Json::object();
    for (const auto& [sid, d] : graph.in_degree) indeg[sid] = d;
    g["in_degree"] = indeg;
    section["graph"] = g;

    Json event;
    if (!focus_show.empty() && windows_from) {
        std::vector<WindowedGraph> windows;
        for (int i = 0; i < windows_count; ++i) {
            std::int64_t start = *windows_from + static_cast<std::int64_t>(i) * window;
            std::int64_t end = start + window;
            windows.push_back(
                {start, end,
                 propagation_graph(shows, corpora, dataset, window, strict_attribution, start,
                                   end)});
        }
        auto flows = propagation_event_report(windows, focus_show);
        event["defined"] = true;
        event["focus_show"] = focus_show;
        std::map<std::string, const TvShow*> show_by_id;
        for (const auto& s : shows) show_by_id[s.show_id] = &s;
        Json arr = Json::array();
        for (const auto& f : flows) {
            Json w;
            w["start"] = f.window_start;
            w["end"] = f.window_end;
            Json ranking = Json::array();
            for (const auto& e : f.ranking) {
                Json entry;
                entry["dst"] = e.dst;
                entry["weight"] = e.weight;
                // destination categories, so same-genre flows are visible
                if (auto it = show_by_id.find(e.dst); it != show_by_id.end())
                    entry["dst_labels"] = it->second->labels;
                else
                    entry["dst_labels"] = Json::array();
                ranking.push_back(std::move(entry));
            }
            w["ranking"] = ranking;
            if (f.top_destination) w["top_destination"] = *f.top_destination;
            else w["top_destination"] = nullptr;
            if (f.top_share) w["top_share"] = *f.top_share;
            else w["top_share"] = nullptr;
            w["no_outflow"] = f.no_outflow;
            arr.push_back(std::move(w));
        }
        event["windows"] = arr;
    } else {
        event["defined"] = false;
        event["reason"] = "set focus and windows_from to enable the per-window outflow report";
    }
    section["event_report"] = event;
    return section;
}

namespace {

[[noreturn]] void stage_fail(const char* stage, const std::exception& e) {
    throw DataError(std::string(stage) + ": " + e.what());
}

}  // namespace

PipelineResult run_pipeline(const PipelineConfig& config) {
    config.validate();
    if (config.threads >= 1) omp_set_num_threads(config.threads);

    DatasetPaths paths = DatasetPaths::in_dir(config.dataset_dir);

    Dataset dataset;
    try {
        dataset = parse_dataset(paths);
    } catch (const DataError& e) {
        stage_fail("ingest", e);
    }

    std::vector<ShowCorpus> corpora;
    try {
        corpora = retrieve_all_corpora(dataset);
    } catch (const DataError& e) {
        stage_fail("retrieval", e);
    }

    SentimentLexicons lex = config.lexicon.empty() ? SentimentLexicons::builtin()
                                                   : SentimentLexicons::from_file(config.lexicon);

    Json report;
    report["schema_version"] = kReportSchemaVersion;
    report["dataset_fingerprint"] =
        files_fingerprint({paths.microblogs, paths.users, paths.follows, paths.shows});
    Json params;
    params["seed"] = config.seed;
    params["k"] = config.k;
    params["threshold"] = config.threshold;
    params["window"] = config.window;
    if (config.lexicon.empty()) {
        std::string blob;
        for (const auto& e : lex.positive) blob += e + "\n";
        blob += "--\n";
        for (const auto& e : lex.negative) blob += e + "\n";
        char hex[17];
        std::snprintf(hex, sizeof(hex), "%016llx",
                      static_cast<unsigned long long>(fnv1a64(blob)));
        params["lexicon_hash"] = std::string("fnv1a64:") + hex + " (builtin)";
    } else {
        params["lexicon_hash"] = files_fingerprint({config.lexicon});
    }
    params["aspects"] = config.aspects;
    params["strict_attribution"] = config.strict_attribution;
    params["focus_show"] = config.focus_show;
    if (config.windows_from) params["windows_from"] = *config.windows_from;
    else params["windows_from"] = nullptr;
    params["windows_count"] = config.windows_count;
    report["parameters"] = params;
    Json show_ids = Json::array();
    for (const auto& s : sorted_shows(dataset)) show_ids.push_back(s.show_id);
    report["shows"] = show_ids;

    Json sections;
    for (const auto& aspect : config.aspects) {
        try {
            if (aspect == "user")
                sections["user"] = build_user_section(dataset, corpora, config.k, config.seed);
            else if (aspect == "content")
                sections["content"] =
                    build_content_section(dataset, corpora, lex, config.threshold, config.seed);
            else if (aspect == "social")
                sections["social"] = build_social_section(dataset, corpora);
            else if (aspect == "propagation")
                sections["propagation"] = build_propagation_section(
                    dataset, corpora, config.window, config.strict_attribution,
                    config.focus_show, config.windows_from, config.windows_count);
        } catch (const DataError& e) {
            stage_fail(("profile_" + aspect).c_str(), e);
        }
    }
    report["sections"] = sections;

    PipelineResult result;
    result.report = report;
    result.report_path = config.out_dir / "report.json";
    write_file_atomic(result.report_path, report.dump(2) + "\n");
    log::info("report written to %s", result.report_path.string().c_str());
    return result;
}

namespace {

std::string fmt_double(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, p);
}

std::string fmt_number(const Json& v) {
    if (v.is_number_float()) return fmt_double(v.get<double>());
    return v.dump();
}

const Json& need_section(const Json& report, const char* name) {
    const Json& sections = report.at("sections");
    auto it = sections.find(name);
    if (it == sections.end())
        throw DataError(std::string("report lacks the '") + name + "' section");
    return *it;
}

std::string csv_age(const Json& report) {
    const Json& age = need_section(report, "user").at("age_histogram");
    std::string out = "age,count\n";
    std::vector<std::pair<int, std::uint64_t>> rows;
    for (const auto& [k, v] : age.at("counts").items())
        rows.emplace_back(std::stoi(k), v.get<std::uint64_t>());
    std::sort(rows.begin(), rows.end());
    for (const auto& [a, c] : rows) out += std::to_string(a) + "," + std::to_string(c) + "\n";
    return out;
}

std::string csv_pi(const Json& report) {
    const Json& pi = need_section(report, "user").at("participation_index");
    if (!pi.at("defined").get<bool>())
        throw DataError("participation index undefined in this report: " +
                        pi.at("reason").get<std::string>());
    std::string out = "region,UN,PI\n";
    for (const auto& row : pi.at("rows"))
        out += row.at("region").get<std::string>() + "," + fmt_number(row.at("user_count")) +
               "," + fmt_number(row.at("pi")) + "\n";
    return out;
}

std::string csv_sentiment(const Json& report) {
    const Json& sentiment = need_section(report, "content").at("sentiment");
    std::string out = "show_id,row,positive,negative,non_sentiment\n";
    auto emit = [&](const std::string& sid, const Json& summary) {
        for (const char* row : {"initial", "response"}) {
            const Json& r = summary.at(row);
            out += sid + "," + row + "," + fmt_number(r.at("positive")) + "," +
                   fmt_number(r.at("negative")) + "," + fmt_number(r.at("non_sentiment")) + "\n";
        }
    };
    emit("ALL", sentiment.at("overall"));
    for (const auto& s : sentiment.at("per_show"))
        emit(s.at("show_id").get<std::string>(), s);
    return out;
}

std::string csv_degree_cdf(const Json& report) {
    const Json& degree = need_section(report, "content").at("show_network").at("degree");
    std::string out = "degree,cdf\n";
    for (const auto& point : degree.at("cdf"))
        out += fmt_number(point[0]) + "," + fmt_number(point[1]) + "\n";
    return out;
}

std::string csv_clustering_cdf(const Json& report) {
    const Json& cdf = need_section(report, "content").at("show_network").at("clustering_cdf");
    std::string out = "coefficient,cdf\n";
    for (const auto& point : cdf) out += fmt_number(point[0]) + "," + fmt_number(point[1]) + "\n";
    return out;
}

std::string csv_influence(const Json& report) {
    const Json& influence = need_section(report, "social").at("influence");
    std::vector<double> actor_vals, fan_vals;
    for (const auto& r : influence) {
        actor_vals.push_back(r.at("actor_fraction").get<double>());
        fan_vals.push_back(r.at("fan_fraction").get<double>());
    }
    std::sort(actor_vals.begin(), actor_vals.end());
    std::sort(fan_vals.begin(), fan_vals.end());
    std::string out = "kind,value,cdf\n";
    auto emit = [&](const char* kind, const std::vector<double>& vals) {
        for (std::size_t i = 0; i < vals.size(); ++i)
            out += std::string(kind) + "," + fmt_double(vals[i]) + "," +
                   fmt_double(static_cast<double>(i + 1) / static_cast<double>(vals.size())) +
                   "\n";
    };
    emit("actor", actor_vals);
    emit("fan", fan_vals);
    return out;
}

std::string csv_round_overlap(const Json& report) {
    const Json& overlaps = need_section(report, "propagation").at("round_overlap");
    std::string out = "show_id,only_first,only_second,both\n";
    for (const auto& r : overlaps)
        out += r.at("show_id").get<std::string>() + "," + fmt_number(r.at("only_first")) + "," +
               fmt_number(r.at("only_second")) + "," + fmt_number(r.at("both")) + "\n";
    return out;
}

std::string csv_propagation(const Json& report) {
    const Json& edges = need_section(report, "propagation").at("graph").at("edges");
    std::string out = "src,dst,weight\n";
    for (const auto& e : edges)
        out += e[0].get<std::string>() + "," + e[1].get<std::string>() + "," + fmt_number(e[2]) +
               "\n";
    return out;
}

using CsvFn = std::string (*)(const Json&);

const std::vector<std::pair<std::string, CsvFn>>& selector_table() {
    static const std::vector<std::pair<std::string, CsvFn>> table = {
        {"age", csv_age},
        {"pi", csv_pi},
        {"sentiment", csv_sentiment},
        {"degree_cdf", csv_degree_cdf},
        {"clustering_cdf", csv_clustering_cdf},
        {"influence", csv_influence},
        {"round_overlap", csv_round_overlap},
        {"propagation", csv_propagation},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& export_selectors() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, _] : selector_table()) out.push_back(name);
        return out;
    }();
    return names;
}

void export_plot_data(const Json& report, const std::string& selector,
                      const std::filesystem::path& out) {
    if (selector == "all") {
        std::filesystem::create_directories(out);
        for (const auto& [name, fn] : selector_table()) {
            try {
                write_file_atomic(out / (name + ".csv"), fn(report));
            } catch (const DataError&) {
                // section not in this report; skip the figure
            }
        }
        return;
    }
    for (const auto& [name, fn] : selector_table()) {
        if (name == selector) {
            write_file_atomic(out, fn(report));
            return;
        }
    }
    throw UsageError("unknown export selector: " + selector);
}

}  // namespace showprof
