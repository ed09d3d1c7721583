#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "showprof/graph.hpp"

// Graph and statistics kernels. The hot loops (per-node triangle counts,
// all-pairs BFS, batch classification) are OpenMP-parallel with
// deterministic reductions: workers fill per-index slots and a serial pass
// folds them, so results are identical for any thread count. Serial
// reference twins live in showprof::ref for tests and the benchmark.

namespace showprof {

struct DegreeHistogram {
    std::map<int, std::size_t> counts;            // degree -> node count
    std::vector<std::pair<int, double>> cdf;      // ascending degree, cumulative fraction
    double mean = 0.0;
};

struct DegreeDistribution {
    std::optional<DegreeHistogram> undirected;
    std::optional<DegreeHistogram> in;
    std::optional<DegreeHistogram> out;
};

// Undirected graphs fill `undirected`; directed graphs report in/out
// separately. Empty graphs yield empty histograms.
DegreeDistribution degree_distribution(const SocialGraph& g);

// Fraction of neighbor pairs of `node` that are themselves connected;
// nodes with degree < 2 return 0. Throws DataError on unknown node.
double local_clustering_coefficient(const SocialGraph& g, const std::string& node);

// Coefficients for all nodes in dense-index order (OpenMP).
std::vector<double> local_clustering_all(const SocialGraph& g);

// Mean of local coefficients over all nodes; degree-<2 nodes contribute 0.
double average_clustering_coefficient(const SocialGraph& g);

struct PathStats {
    double average_path_length = 0.0;  // mean BFS distance over reachable ordered pairs
    int diameter = 0;                  // max eccentricity over reachable pairs
    std::uint64_t reachable_pairs = 0;
};

// BFS from every node (OpenMP over sources; integer distance sums, so the
// result is exact and thread-count independent). Throws DataError when no
// two nodes are mutually reachable.
PathStats path_stats(const SocialGraph& g);
double average_path_length(const SocialGraph& g);

// Newman modularity, weighted form when weights differ from 1. Throws
// DataError on an empty-edge graph or a non-total partition.
double modularity(const SocialGraph& g, const Partition& p);

// Fast-unfolding heuristic with deterministic tie-breaking (equal-gain
// moves pick the lower community id) and seeded restarts; the returned Q
// equals modularity(g, partition) and never falls below the all-singletons
// baseline.
std::pair<Partition, double> louvain_communities(const SocialGraph& g, std::uint64_t seed);

// Least squares for f(x) = a*x^b + c: outer golden-section search over
// b in [-5, 5] (grid-bracketed, tolerance 1e-6) with closed-form inner
// solve for (a, c). All-identical y returns (0, 0, mean) with R^2 = 1 by
// convention. Throws DataError with < 3 points or < 3 distinct x.
CurveFit fit_shifted_power(const std::vector<std::pair<double, double>>& points);

// Uniform random graph with exactly n_edges distinct edges; the baseline
// used when comparing clustering levels against a random network.
SocialGraph erdos_renyi(int n_nodes, std::size_t n_edges, std::uint64_t seed);

namespace ref {

// Serial reference implementations (identical contracts), kept for the
// parallel-vs-serial equality tests and the benchmark target.
std::vector<double> local_clustering_all(const SocialGraph& g);
PathStats path_stats(const SocialGraph& g);

}  // namespace ref

}  // namespace showprof
