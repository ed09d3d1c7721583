#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "showprof/json.hpp"
#include "showprof/types.hpp"

// Synthetic dataset generator with planted ground truth. Content is built
// from a closed token vocabulary (topic tokens, sentiment lexicon tokens,
// filler tokens) so retrieval and sentiment results are exactly
// predictable from the plants.

namespace showprof {

struct PlantedTransition {
    std::string user_id;
    std::string show_from;
    std::string show_to;
    std::int64_t gap_seconds = 3600;

    auto operator<=>(const PlantedTransition&) const = default;
};

struct PlantedRoundOverlap {
    std::string show_id;
    int only_first = 0;
    int only_second = 0;
    int both = 0;

    auto operator<=>(const PlantedRoundOverlap&) const = default;
};

struct SyntheticSpec {
    std::uint64_t seed = 1;
    int n_users = 100;
    int n_shows = 4;
    int n_microblogs = 1000;
    int planted_clusters = 2;
    std::vector<PlantedTransition> planted_transitions;
    // (p_positive, p_negative, p_non_sentiment), must sum to 1
    std::array<double, 3> sentiment_mix{0.3, 0.2, 0.5};
    std::vector<PlantedRoundOverlap> planted_round_overlaps;
    // fraction of each show's authors wired into the follow graph
    double connected_author_fraction = 0.24;
    int fan_follows_per_actor = 3;

    static SyntheticSpec from_json(const Json& j);
    Json to_json() const;
};

struct RoundOverlapCounts {
    int only_first = 0;
    int only_second = 0;
    int both = 0;

    auto operator<=>(const RoundOverlapCounts&) const = default;
};

struct TopologyCounts {
    int isolated = 0;
    int connected = 0;

    auto operator<=>(const TopologyCounts&) const = default;
};

struct GroundTruth {
    // microblog id -> shows it truly belongs to
    std::map<std::string, std::set<std::string>> attribution;
    // user id -> planted preference cluster (users with >= 1 attributed post)
    std::map<std::string, int> user_cluster;
    std::vector<PlantedTransition> transitions;
    // microblog id -> planted sentiment label
    std::map<std::string, SentimentLabel> sentiment;
    std::map<std::string, RoundOverlapCounts> round_overlap;
    // show id -> isolated/connected author counts in the induced follow subgraph
    std::map<std::string, TopologyCounts> viewer_topology;
    // every non-planted pair of cross-show posts by one user is at least
    // this many seconds apart, so any window below it sees only the plants
    std::int64_t noise_gap_floor = 0;

    Json to_json() const;
    static GroundTruth from_json(const Json& j);
};

// Deterministic: the same spec yields byte-identical serialized output.
// Throws DataError on an infeasible spec.
std::pair<Dataset, GroundTruth> generate_synthetic(const SyntheticSpec& spec);

// Writes the four dataset files plus ground_truth.json into dir.
void write_synthetic(const SyntheticSpec& spec, const std::filesystem::path& dir);

GroundTruth load_ground_truth(const std::filesystem::path& file);

// Built-in test lexicons; the generator draws sentiment tokens from these.
const std::vector<std::string>& builtin_positive_lexicon();
const std::vector<std::string>& builtin_negative_lexicon();

// The bundled demo fixture used by documentation and the determinism tests.
SyntheticSpec demo_spec();

}  // namespace showprof
