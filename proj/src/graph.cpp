#include "showprof/graph.hpp"

#include <algorithm>

#include "showprof/errors.hpp"

namespace showprof {

int SocialGraph::add_node(const std::string& id) {
    auto [it, inserted] = index_.try_emplace(id, static_cast<int>(nodes_.size()));
    if (inserted) {
        nodes_.push_back(id);
        adjacency_.emplace_back();
        if (directed_) in_adjacency_.emplace_back();
    }
    return it->second;
}

std::pair<int, int> SocialGraph::canonical(int u, int v) const {
    if (directed_) return {u, v};
    return node_id(u) <= node_id(v) ? std::pair{u, v} : std::pair{v, u};
}

void SocialGraph::add_edge(const std::string& a, const std::string& b, double weight) {
    if (a == b) throw DataError("self-loop rejected: " + a);
    if (weight < 0.0) throw DataError("negative edge weight rejected");
    int u = add_node(a);
    int v = add_node(b);
    auto key = canonical(u, v);
    auto [it, inserted] = edges_.try_emplace(key, weight);
    if (!inserted) {
        // overwrite: update the adjacency copies in place
        it->second = weight;
        auto update = [&](std::vector<std::pair<int, double>>& adj, int target) {
            for (auto& [n, w] : adj)
                if (n == target) w = weight;
        };
        update(adjacency_[static_cast<std::size_t>(u)], v);
        if (directed_)
            update(in_adjacency_[static_cast<std::size_t>(v)], u);
        else
            update(adjacency_[static_cast<std::size_t>(v)], u);
        return;
    }
    adjacency_[static_cast<std::size_t>(u)].push_back({v, weight});
    if (directed_)
        in_adjacency_[static_cast<std::size_t>(v)].push_back({u, weight});
    else
        adjacency_[static_cast<std::size_t>(v)].push_back({u, weight});
}

bool SocialGraph::has_edge(const std::string& a, const std::string& b) const {
    return edge_weight(a, b).has_value();
}

std::optional<double> SocialGraph::edge_weight(const std::string& a, const std::string& b) const {
    auto ia = index_.find(a);
    auto ib = index_.find(b);
    if (ia == index_.end() || ib == index_.end()) return std::nullopt;
    auto it = edges_.find(canonical(ia->second, ib->second));
    if (it == edges_.end()) return std::nullopt;
    return it->second;
}

int SocialGraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw DataError("unknown node id: " + id);
    return it->second;
}

const std::vector<std::pair<int, double>>& SocialGraph::in_neighbors(int idx) const {
    if (!directed_) return adjacency_[static_cast<std::size_t>(idx)];
    return in_adjacency_[static_cast<std::size_t>(idx)];
}

int SocialGraph::in_degree(int idx) const {
    return static_cast<int>(in_neighbors(idx).size());
}

double SocialGraph::weighted_degree(int idx) const {
    double sum = 0.0;
    for (const auto& [_, w] : neighbors(idx)) sum += w;
    return sum;
}

double SocialGraph::total_edge_weight() const {
    double sum = 0.0;
    for (const auto& [_, w] : edges_) sum += w;
    return sum;
}

std::vector<std::tuple<std::string, std::string, double>> SocialGraph::sorted_edges() const {
    std::vector<std::tuple<std::string, std::string, double>> out;
    out.reserve(edges_.size());
    for (const auto& [key, w] : edges_)
        out.emplace_back(node_id(key.first), node_id(key.second), w);
    std::sort(out.begin(), out.end());
    return out;
}

SocialGraph graph_intersection(const SocialGraph& g1, const SocialGraph& g2) {
    if (g1.directed_ != g2.directed_)
        throw DataError("graph_intersection: directedness mismatch");
    if (g1.node_count() != g2.node_count())
        throw DataError("graph_intersection: node universes differ");
    for (const auto& id : g1.nodes_)
        if (!g2.has_node(id)) throw DataError("graph_intersection: node universes differ");

    SocialGraph out(g1.directed_);
    for (const auto& id : g1.nodes_) out.add_node(id);
    for (const auto& [key, w1] : g1.edges_) {
        const std::string& a = g1.node_id(key.first);
        const std::string& b = g1.node_id(key.second);
        if (auto w2 = g2.edge_weight(a, b)) out.add_edge(a, b, std::min(w1, *w2));
    }
    return out;
}

Partition Partition::from_map(const std::map<std::string, int>& raw) {
    Partition p;
    std::map<int, int> renumber;
    for (const auto& [node, c] : raw) {
        auto [it, inserted] = renumber.try_emplace(c, static_cast<int>(renumber.size()));
        p.community[node] = it->second;
    }
    p.community_count = static_cast<int>(renumber.size());
    return p;
}

}  // namespace showprof
