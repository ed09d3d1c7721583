#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "showprof/graph.hpp"
#include "showprof/retrieval.hpp"
#include "showprof/types.hpp"

// Propagation profiling: audience overlap across broadcast rounds and
// user flow between shows within a time window.

namespace showprof {

struct RoundOverlap {
    std::string show_id;
    std::size_t only_first = 0;
    std::size_t only_second = 0;
    std::size_t both = 0;
};

// A user is "in" a round iff they authored >= 1 corpus post timestamped
// inside that round's [start, end); posts outside all rounds are ignored.
// Uses the show's first two rounds; throws DataError with < 2 rounds.
RoundOverlap round_overlap(const TvShow& show, const ShowCorpus& corpus,
                           const Dataset& dataset);

struct PropagationGraph {
    SocialGraph graph{true};                // directed over show ids; weight = distinct users
    std::map<std::string, int> in_degree;   // node annotation
    std::int64_t window = 86400;
    bool strict_attribution = false;
};

// A transition A->B is a user's consecutive pair of attributed posts on
// different shows with time gap <= window (posts ordered by timestamp
// then id). Posts attributed to several shows contribute every ordered
// pair unless strict_attribution drops them. Edge weight counts distinct
// users. Optional [from, until) restricts the posts considered.
PropagationGraph propagation_graph(const std::vector<TvShow>& shows,
                                   const std::vector<ShowCorpus>& corpora,
                                   const Dataset& dataset, std::int64_t window,
                                   bool strict_attribution = false,
                                   std::optional<std::int64_t> from = std::nullopt,
                                   std::optional<std::int64_t> until = std::nullopt);

struct OutflowEntry {
    std::string dst;
    double weight = 0.0;
};

struct WindowOutflow {
    std::int64_t window_start = 0;
    std::int64_t window_end = 0;
    std::vector<OutflowEntry> ranking;  // weight descending, ties by show id
    std::optional<std::string> top_destination;
    std::optional<double> top_share;  // top weight / total outflow
    bool no_outflow = false;
};

struct WindowedGraph {
    std::int64_t start = 0;
    std::int64_t end = 0;
    PropagationGraph graph;
};

// Per-window outflow ranking of focus_show. Throws DataError when the
// focus show is not a node of some window's graph.
std::vector<WindowOutflow> propagation_event_report(const std::vector<WindowedGraph>& windows,
                                                    const std::string& focus_show);

namespace ref {
// Serial twin of the per-user transition extraction inside
// propagation_graph, for tests and the benchmark.
PropagationGraph propagation_graph(const std::vector<TvShow>& shows,
                                   const std::vector<ShowCorpus>& corpora,
                                   const Dataset& dataset, std::int64_t window,
                                   bool strict_attribution = false,
                                   std::optional<std::int64_t> from = std::nullopt,
                                   std::optional<std::int64_t> until = std::nullopt);
}  // namespace ref

}  // namespace showprof
