#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "showprof/graph.hpp"
#include "showprof/retrieval.hpp"
#include "showprof/types.hpp"

// Social-relationship profiling: viewer topology, actor graphs and
// actor/fan influence.

namespace showprof {

struct ViewerTopologyStats {
    std::size_t author_count = 0;
    std::size_t isolated_count = 0;  // degree 0 within the induced follow subgraph
    double isolated_fraction = 0.0;
    double connected_fraction = 0.0;
    std::map<std::size_t, std::size_t> component_sizes;  // size -> component count
};

// Undirected follow subgraph induced on the corpus authors. Throws
// DataError on an empty corpus.
ViewerTopologyStats viewer_topology_stats(const ShowCorpus& corpus, const Dataset& dataset);

// Undirected edge {a1, a2} iff some show v casts a2 and a1's account
// authored a corpus(v) microblog, a1 != a2. Nodes are all actor names of
// the given shows.
SocialGraph actor_copost_graph(const std::vector<TvShow>& shows,
                               const std::vector<ShowCorpus>& corpora, const Dataset& dataset);

// Undirected view of follow edges between actor accounts, over the same
// actor-name universe.
SocialGraph actor_follow_graph(const Dataset& dataset, const std::vector<TvShow>& shows);

struct InfluenceRecord {
    std::string actor;
    std::string show_id;
    double actor_fraction = 0.0;  // posts by the actor's account / |corpus|
    double fan_fraction = 0.0;    // posts by followers of the account (actor excluded) / |corpus|
};

struct ActorInfluence {
    std::vector<InfluenceRecord> records;  // per cast actor with an account
    std::vector<std::string> actors_without_accounts;  // coverage note
};

// Throws DataError on an empty corpus.
ActorInfluence actor_influence(const TvShow& show, const ShowCorpus& corpus,
                               const Dataset& dataset);

struct ActorSummary {
    std::string actor;
    double mean_influence = 0.0;
    double variance_influence = 0.0;  // population variance over the actor's shows
    std::size_t fan_count = 0;        // direct followers of the actor's account
};

std::vector<ActorSummary> actor_influence_stats(const std::vector<InfluenceRecord>& records,
                                                const Dataset& dataset);

}  // namespace showprof
