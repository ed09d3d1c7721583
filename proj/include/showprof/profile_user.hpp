#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "showprof/graph.hpp"
#include "showprof/retrieval.hpp"
#include "showprof/types.hpp"

// User-aspect profiling: demographics, the top-10 participation index,
// preference label vectors, K-means clustering and cluster cohesion.

namespace showprof {

struct AgeHistogram {
    std::map<int, std::size_t> counts;  // age -> user count (known ages only)
    std::size_t known_count = 0;
    std::size_t unknown_count = 0;
    std::optional<double> mean_age;  // absent when no age is known
};

AgeHistogram age_histogram(const std::set<std::string>& corpus_users, const Dataset& dataset);

struct RegionCount {
    std::string region;
    std::uint64_t user_count = 0;
};

struct RegionPi {
    std::string region;
    std::uint64_t user_count = 0;
    double pi = 0.0;
};

// PI_i = (UN_i - UN_10) / UN_10 where UN_10 is the user count of the
// 10th-ranked region (descending count, ties by ascending region id).
// Every region gets a PI, in rank order; the rank-10 region's PI is
// exactly 0. Throws DataError with fewer than 10 regions or UN_10 = 0.
std::vector<RegionPi> participation_index(const std::vector<RegionCount>& region_counts);

// Region counts over users with a known region.
std::vector<RegionCount> region_counts(const std::set<std::string>& corpus_users,
                                       const Dataset& dataset);

struct LabelVector {
    std::string user_id;
    std::map<std::string, double> weights;  // sums to 1 when nonempty
};

// Each corpus post by the user adds 1/3 to each of that show's 3 labels;
// the result is normalized to sum 1. Throws DataError when the user
// authored no corpus post.
LabelVector user_label_vector(const std::string& user_id,
                              const std::vector<ShowCorpus>& corpora, const Dataset& dataset);

// Vectors for every user with >= 1 corpus post, sorted by user id.
std::vector<LabelVector> all_label_vectors(const std::vector<ShowCorpus>& corpora,
                                           const Dataset& dataset);

struct KmeansResult {
    Partition assignment;                       // user -> cluster
    std::vector<std::string> dimensions;        // label order of the centroids
    std::vector<std::vector<double>> centroids;
    std::vector<double> objective_history;      // after each assignment step
    int iterations = 0;
    bool converged = false;
    bool degenerate_duplicates = false;  // an empty cluster could not be re-seeded apart
};

// Lloyd iterations with Euclidean distance, k-means++ initialization from
// the seed, ties broken toward the lowest centroid index, empty clusters
// re-seeded with the farthest point, at most 300 iterations. Input order
// does not matter: points are canonically pre-sorted by user id.
KmeansResult kmeans_cluster(const std::vector<LabelVector>& vectors, int k, std::uint64_t seed);

struct VipFollowStats {
    std::string vip_id;
    bool vip_in_cluster = false;
    double follower_fraction = 0.0;  // cluster members following this VIP / cluster size
};

struct CohesionStats {
    std::size_t size = 0;
    std::size_t intra_edges = 0;                // undirected view
    std::optional<double> density;              // absent for singleton clusters
    double average_clustering = 0.0;
    std::vector<VipFollowStats> vip_follows;
};

CohesionStats cluster_cohesion(const std::set<std::string>& cluster_users,
                               const Dataset& dataset);

}  // namespace showprof
