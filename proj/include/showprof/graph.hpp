#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace showprof {

// Graph over opaque string ids with optional nonnegative edge weights
// (default 1). Undirected edges are stored canonically (smaller id
// first); self-loops are rejected. Nodes keep dense indices in insertion
// order so kernels can run over flat arrays.
class SocialGraph {
public:
    explicit SocialGraph(bool directed = false) : directed_(directed) {}

    bool directed() const { return directed_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    // Idempotent; returns the node's dense index.
    int add_node(const std::string& id);
    // Adds (or overwrites the weight of) an edge; endpoints are added as
    // needed. Throws DataError on self-loops or negative weights.
    void add_edge(const std::string& a, const std::string& b, double weight = 1.0);

    bool has_node(const std::string& id) const { return index_.contains(id); }
    bool has_edge(const std::string& a, const std::string& b) const;
    std::optional<double> edge_weight(const std::string& a, const std::string& b) const;

    int index_of(const std::string& id) const;  // throws DataError if unknown
    const std::string& node_id(int idx) const { return nodes_[static_cast<std::size_t>(idx)]; }
    const std::vector<std::string>& nodes() const { return nodes_; }

    // Neighbors by dense index. For directed graphs these are out-edges;
    // in_neighbors covers the reverse direction.
    const std::vector<std::pair<int, double>>& neighbors(int idx) const {
        return adjacency_[static_cast<std::size_t>(idx)];
    }
    const std::vector<std::pair<int, double>>& in_neighbors(int idx) const;

    int degree(int idx) const { return static_cast<int>(neighbors(idx).size()); }
    int in_degree(int idx) const;
    double weighted_degree(int idx) const;
    double total_edge_weight() const;  // sum over stored edges

    // Edges sorted by endpoint ids, canonical orientation.
    std::vector<std::tuple<std::string, std::string, double>> sorted_edges() const;

    // Same node universe in both graphs required; keeps edges present in
    // both with the smaller weight.
    friend SocialGraph graph_intersection(const SocialGraph& g1, const SocialGraph& g2);

private:
    std::pair<int, int> canonical(int u, int v) const;

    bool directed_;
    std::vector<std::string> nodes_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<std::pair<int, double>>> adjacency_;      // out for directed
    std::vector<std::vector<std::pair<int, double>>> in_adjacency_;   // directed only
    std::map<std::pair<int, int>, double> edges_;
};

SocialGraph graph_intersection(const SocialGraph& g1, const SocialGraph& g2);

// Total assignment node -> community id, ids renumbered 0..k-1 by first
// appearance over nodes sorted by id.
struct Partition {
    std::map<std::string, int> community;
    int community_count = 0;

    static Partition from_map(const std::map<std::string, int>& raw);
};

struct CurveFit {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double r_squared = 0.0;
};

}  // namespace showprof
