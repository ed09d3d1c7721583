#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "showprof/graph.hpp"
#include "showprof/graphkit.hpp"
#include "showprof/retrieval.hpp"
#include "showprof/types.hpp"

// Content-aspect profiling: lexicon sentiment tabulation and the TV-show
// co-user network.

namespace showprof {

struct SentimentLexicons {
    std::vector<std::string> positive;
    std::vector<std::string> negative;

    static SentimentLexicons builtin();
    // JSON file: {"positive": [...], "negative": [...]}
    static SentimentLexicons from_file(const std::filesystem::path& file);

    // Throws DataError when either side is empty or the sets overlap
    // after normalization.
    void validate() const;
};

// Counts substring hits of each lexicon (normalized, longest-match,
// non-overlapping); positive iff pos > neg, negative iff neg > pos,
// non_sentiment on ties (including 0-0).
SentimentLabel classify_sentiment(const std::string& content, const SentimentLexicons& lex);

// Batch classification for a whole dataset, microblog id -> label (OpenMP).
std::map<std::string, SentimentLabel> classify_dataset(const Dataset& dataset,
                                                       const SentimentLexicons& lex);

namespace ref {
// Serial twin of classify_dataset for tests and the benchmark.
std::map<std::string, SentimentLabel> classify_dataset(const Dataset& dataset,
                                                       const SentimentLexicons& lex);
}  // namespace ref

struct SentimentRow {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t non_sentiment = 0;

    std::size_t total() const { return positive + negative + non_sentiment; }
    // (pos + neg) / total; 0 for an empty row
    double emotional_fraction() const;
};

// initial = no root_id; response = repost/comment. Cells sum to |corpus|.
struct SentimentSummary {
    SentimentRow initial;
    SentimentRow response;
};

SentimentSummary sentiment_summary(const ShowCorpus& corpus, const Dataset& dataset,
                                   const SentimentLexicons& lex);
SentimentSummary sentiment_summary(const ShowCorpus& corpus, const Dataset& dataset,
                                   const std::map<std::string, SentimentLabel>& labels);

struct PositiveFractionEntry {
    std::string show_id;
    std::optional<std::uint64_t> view_count;
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::optional<double> positive_fraction;  // pos/(pos+neg); absent when pos+neg = 0
    bool ranked = false;
};

// Ranked shows (view_count present, >= 1 sentiment-bearing post) sorted by
// descending view_count; flagged entries follow, sorted by show id.
std::vector<PositiveFractionEntry> positive_fraction_table(
    const std::vector<TvShow>& shows, const std::vector<ShowCorpus>& corpora,
    const Dataset& dataset, const SentimentLexicons& lex);
std::vector<PositiveFractionEntry> positive_fraction_table(
    const std::vector<TvShow>& shows, const std::vector<ShowCorpus>& corpora,
    const std::map<std::string, SentimentLabel>& labels);

struct ShowNetwork {
    SocialGraph graph{false};  // show ids; weight = common corpus users
    std::size_t min_common_users = 1;
};

// weight(u, v) = |authors(corpus_u) ∩ authors(corpus_v)|; the edge is kept
// iff weight >= min_common_users.
ShowNetwork build_show_network(const std::vector<TvShow>& shows,
                               const std::vector<ShowCorpus>& corpora, const Dataset& dataset,
                               std::size_t min_common_users = 1);

struct ShowNetworkProfile {
    DegreeHistogram degrees;
    double fraction_degree_above_40 = 0.0;
    std::vector<std::pair<double, double>> clustering_cdf;  // coefficient, cumulative fraction
    double average_clustering = 0.0;
    PathStats paths;
    Partition partition;
    double modularity_q = 0.0;
    CurveFit degree_fit;  // over (rank, degree), nodes ranked by ascending degree
    double random_baseline_clustering = 0.0;  // Erdos-Renyi with matched n, m
    std::uint64_t seed = 0;
    std::size_t threshold = 1;
};

// Throws DataError on an empty network (and propagates kernel errors, e.g.
// a network where no two shows are connected).
ShowNetworkProfile show_network_profile(const ShowNetwork& net, std::uint64_t seed);

}  // namespace showprof
