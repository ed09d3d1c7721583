#include "showprof/profile_content.hpp"

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include "showprof/errors.hpp"
#include "showprof/json.hpp"
#include "showprof/rng.hpp"
#include "showprof/synth.hpp"
#include "showprof/textnorm.hpp"

namespace showprof {

SentimentLexicons SentimentLexicons::builtin() {
    return {builtin_positive_lexicon(), builtin_negative_lexicon()};
}

SentimentLexicons SentimentLexicons::from_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw DataError("cannot open lexicon file " + file.string());
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw DataError("lexicon file " + file.string() + ": " + e.what());
    }
    SentimentLexicons lex;
    for (const auto& e : j.at("positive")) lex.positive.push_back(e.get<std::string>());
    for (const auto& e : j.at("negative")) lex.negative.push_back(e.get<std::string>());
    lex.validate();
    return lex;
}

void SentimentLexicons::validate() const {
    if (positive.empty() || negative.empty())
        throw DataError("sentiment lexicons must both be nonempty");
    std::unordered_set<std::string> pos;
    for (const auto& e : positive) pos.insert(normalize_fold(e));
    for (const auto& e : negative)
        if (pos.contains(normalize_fold(e)))
            throw DataError("lexicons overlap on entry '" + e + "'");
}

namespace {

struct PreparedLexicons {
    std::vector<std::string> positive;
    std::vector<std::string> negative;

    explicit PreparedLexicons(const SentimentLexicons& lex)
        : positive(prepare_entries(lex.positive)), negative(prepare_entries(lex.negative)) {}
};

SentimentLabel classify_norm(const std::string& content_norm, const PreparedLexicons& prep) {
    std::size_t pos = count_lexicon_hits(content_norm, prep.positive);
    std::size_t neg = count_lexicon_hits(content_norm, prep.negative);
    if (pos > neg) return SentimentLabel::positive;
    if (neg > pos) return SentimentLabel::negative;
    return SentimentLabel::non_sentiment;
}

std::map<std::string, SentimentLabel> classify_dataset_impl(const Dataset& dataset,
                                                            const SentimentLexicons& lex,
                                                            bool parallel) {
    lex.validate();
    PreparedLexicons prep(lex);
    const int n = static_cast<int>(dataset.microblogs.size());
    std::vector<SentimentLabel> labels(static_cast<std::size_t>(n));
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 256)
        for (int i = 0; i < n; ++i)
            labels[static_cast<std::size_t>(i)] = classify_norm(
                normalize_fold(dataset.microblogs[static_cast<std::size_t>(i)].content), prep);
    } else {
        for (int i = 0; i < n; ++i)
            labels[static_cast<std::size_t>(i)] = classify_norm(
                normalize_fold(dataset.microblogs[static_cast<std::size_t>(i)].content), prep);
    }
    std::map<std::string, SentimentLabel> out;
    for (int i = 0; i < n; ++i)
        out[dataset.microblogs[static_cast<std::size_t>(i)].id] =
            labels[static_cast<std::size_t>(i)];
    return out;
}

}  // namespace

SentimentLabel classify_sentiment(const std::string& content, const SentimentLexicons& lex) {
    lex.validate();
    PreparedLexicons prep(lex);
    return classify_norm(normalize_fold(content), prep);
}

std::map<std::string, SentimentLabel> classify_dataset(const Dataset& dataset,
                                                       const SentimentLexicons& lex) {
    return classify_dataset_impl(dataset, lex, true);
}

namespace ref {

std::map<std::string, SentimentLabel> classify_dataset(const Dataset& dataset,
                                                       const SentimentLexicons& lex) {
    return classify_dataset_impl(dataset, lex, false);
}

}  // namespace ref

double SentimentRow::emotional_fraction() const {
    std::size_t t = total();
    if (t == 0) return 0.0;
    return static_cast<double>(positive + negative) / static_cast<double>(t);
}

SentimentSummary sentiment_summary(const ShowCorpus& corpus, const Dataset& dataset,
                                   const std::map<std::string, SentimentLabel>& labels) {
    std::unordered_map<std::string, const Microblog*> posts;
    for (const auto& m : dataset.microblogs) posts[m.id] = &m;
    SentimentSummary summary;
    for (const auto& mid : corpus.members) {
        auto pit = posts.find(mid);
        if (pit == posts.end())
            throw DataError("sentiment_summary: corpus member " + mid + " not in dataset");
        auto lit = labels.find(mid);
        if (lit == labels.end())
            throw DataError("sentiment_summary: no label for " + mid);
        SentimentRow& row = pit->second->root_id ? summary.response : summary.initial;
        switch (lit->second) {
            case SentimentLabel::positive: ++row.positive; break;
            case SentimentLabel::negative: ++row.negative; break;
            case SentimentLabel::non_sentiment: ++row.non_sentiment; break;
        }
    }
    return summary;
}

SentimentSummary sentiment_summary(const ShowCorpus& corpus, const Dataset& dataset,
                                   const SentimentLexicons& lex) {
    return sentiment_summary(corpus, dataset, classify_dataset(dataset, lex));
}

std::vector<PositiveFractionEntry> positive_fraction_table(
    const std::vector<TvShow>& shows, const std::vector<ShowCorpus>& corpora,
    const Dataset& dataset, const SentimentLexicons& lex) {
    return positive_fraction_table(shows, corpora, classify_dataset(dataset, lex));
}

std::vector<PositiveFractionEntry> positive_fraction_table(
    const std::vector<TvShow>& shows, const std::vector<ShowCorpus>& corpora,
    const std::map<std::string, SentimentLabel>& labels) {
    std::unordered_map<std::string, const ShowCorpus*> by_show;
    for (const auto& c : corpora) by_show[c.show_id] = &c;

    std::vector<PositiveFractionEntry> out;
    for (const auto& show : shows) {
        PositiveFractionEntry e;
        e.show_id = show.show_id;
        e.view_count = show.view_count;
        if (auto it = by_show.find(show.show_id); it != by_show.end()) {
            for (const auto& mid : it->second->members) {
                auto lit = labels.find(mid);
                if (lit == labels.end()) continue;
                if (lit->second == SentimentLabel::positive) ++e.positive;
                if (lit->second == SentimentLabel::negative) ++e.negative;
            }
        }
        std::size_t bearing = e.positive + e.negative;
        if (bearing > 0)
            e.positive_fraction = static_cast<double>(e.positive) / static_cast<double>(bearing);
        e.ranked = e.view_count.has_value() && bearing > 0;
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(),
              [](const PositiveFractionEntry& a, const PositiveFractionEntry& b) {
                  if (a.ranked != b.ranked) return a.ranked;
                  if (a.ranked && *a.view_count != *b.view_count)
                      return *a.view_count > *b.view_count;
                  return a.show_id < b.show_id;
              });
    return out;
}

ShowNetwork build_show_network(const std::vector<TvShow>& shows,
                               const std::vector<ShowCorpus>& corpora, const Dataset& dataset,
                               std::size_t min_common_users) {
    std::unordered_map<std::string, const std::string*> author_of;
    for (const auto& m : dataset.microblogs) author_of[m.id] = &m.author_id;
    std::unordered_map<std::string, const ShowCorpus*> by_show;
    for (const auto& c : corpora) by_show[c.show_id] = &c;

    std::vector<std::string> ids;
    for (const auto& s : shows) ids.push_back(s.show_id);
    std::sort(ids.begin(), ids.end());

    std::map<std::string, std::unordered_set<std::string>> authors;
    for (const auto& sid : ids) {
        auto& set = authors[sid];
        if (auto it = by_show.find(sid); it != by_show.end())
            for (const auto& mid : it->second->members)
                if (auto ait = author_of.find(mid); ait != author_of.end())
                    set.insert(*ait->second);
    }

    ShowNetwork net;
    net.min_common_users = min_common_users;
    for (const auto& sid : ids) net.graph.add_node(sid);

    const int n = static_cast<int>(ids.size());
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    std::vector<std::size_t> weights(pairs.size(), 0);
#pragma omp parallel for schedule(dynamic, 4)
    for (int p = 0; p < static_cast<int>(pairs.size()); ++p) {
        const auto& a = authors[ids[static_cast<std::size_t>(pairs[static_cast<std::size_t>(p)].first)]];
        const auto& b = authors[ids[static_cast<std::size_t>(pairs[static_cast<std::size_t>(p)].second)]];
        const auto& small = a.size() <= b.size() ? a : b;
        const auto& large = a.size() <= b.size() ? b : a;
        std::size_t common = 0;
        for (const auto& u : small)
            if (large.contains(u)) ++common;
        weights[static_cast<std::size_t>(p)] = common;
    }
    for (std::size_t p = 0; p < pairs.size(); ++p)
        if (weights[p] >= min_common_users && weights[p] > 0)
            net.graph.add_edge(ids[static_cast<std::size_t>(pairs[p].first)],
                               ids[static_cast<std::size_t>(pairs[p].second)],
                               static_cast<double>(weights[p]));
    return net;
}

ShowNetworkProfile show_network_profile(const ShowNetwork& net, std::uint64_t seed) {
    const SocialGraph& g = net.graph;
    if (g.node_count() == 0) throw DataError("show_network_profile: empty network");

    ShowNetworkProfile prof;
    prof.seed = seed;
    prof.threshold = net.min_common_users;

    auto dist = degree_distribution(g);
    prof.degrees = *dist.undirected;

    const int n = static_cast<int>(g.node_count());
    int above = 0;
    for (int i = 0; i < n; ++i)
        if (g.degree(i) > 40) ++above;
    prof.fraction_degree_above_40 = static_cast<double>(above) / n;

    auto coeffs = local_clustering_all(g);
    std::vector<double> sorted_coeffs = coeffs;
    std::sort(sorted_coeffs.begin(), sorted_coeffs.end());
    std::size_t i = 0;
    while (i < sorted_coeffs.size()) {
        std::size_t j = i;
        while (j < sorted_coeffs.size() && sorted_coeffs[j] == sorted_coeffs[i]) ++j;
        prof.clustering_cdf.emplace_back(sorted_coeffs[i],
                                         static_cast<double>(j) /
                                             static_cast<double>(sorted_coeffs.size()));
        i = j;
    }
    double sum = 0.0;
    for (double c : coeffs) sum += c;
    prof.average_clustering = sum / static_cast<double>(coeffs.size());

    prof.paths = path_stats(g);

    auto [partition, q] = louvain_communities(g, seed);
    prof.partition = std::move(partition);
    prof.modularity_q = q;

    // degree-rank points in the plotted form: x = rank, y = degree,
    // nodes ranked by ascending degree (ties by node id)
    std::vector<std::pair<int, std::string>> ranked;
    for (int idx = 0; idx < n; ++idx) ranked.emplace_back(g.degree(idx), g.node_id(idx));
    std::sort(ranked.begin(), ranked.end());
    std::vector<std::pair<double, double>> points;
    for (std::size_t r = 0; r < ranked.size(); ++r)
        points.emplace_back(static_cast<double>(r + 1), static_cast<double>(ranked[r].first));
    prof.degree_fit = fit_shifted_power(points);

    SocialGraph er = erdos_renyi(n, g.edge_count(), stage_seed(seed, "er_baseline"));
    prof.random_baseline_clustering =
        er.node_count() == 0 ? 0.0 : average_clustering_coefficient(er);
    return prof;
}

}  // namespace showprof
