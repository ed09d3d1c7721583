#include "showprof/profile_propagation.hpp"

#include <omp.h>

#include <algorithm>
#include <set>
#include <unordered_map>

#include "showprof/errors.hpp"

namespace showprof {

RoundOverlap round_overlap(const TvShow& show, const ShowCorpus& corpus,
                           const Dataset& dataset) {
    if (show.rounds.size() < 2)
        throw DataError("round_overlap: show " + show.show_id + " has fewer than 2 rounds");
    const Round& r1 = show.rounds[0];
    const Round& r2 = show.rounds[1];

    std::unordered_map<std::string, const Microblog*> posts;
    for (const auto& m : dataset.microblogs) posts[m.id] = &m;

    std::set<std::string> first, second;
    for (const auto& mid : corpus.members) {
        auto it = posts.find(mid);
        if (it == posts.end()) continue;
        const Microblog& m = *it->second;
        if (m.timestamp >= r1.start && m.timestamp < r1.end) first.insert(m.author_id);
        if (m.timestamp >= r2.start && m.timestamp < r2.end) second.insert(m.author_id);
    }

    RoundOverlap out;
    out.show_id = show.show_id;
    for (const auto& u : first)
        second.contains(u) ? ++out.both : ++out.only_first;
    for (const auto& u : second)
        if (!first.contains(u)) ++out.only_second;
    return out;
}

namespace {

struct AttributedPost {
    std::int64_t timestamp;
    const std::string* id;
    std::vector<const std::string*> shows;  // sorted attribution
};

PropagationGraph propagation_impl(const std::vector<TvShow>& shows,
                                  const std::vector<ShowCorpus>& corpora,
                                  const Dataset& dataset, std::int64_t window,
                                  bool strict_attribution, std::optional<std::int64_t> from,
                                  std::optional<std::int64_t> until, bool parallel) {
    if (window <= 0) throw DataError("propagation_graph: window must be positive");

    // microblog id -> sorted show ids
    std::unordered_map<std::string, std::vector<const std::string*>> attribution;
    for (const auto& c : corpora)
        for (const auto& mid : c.members) attribution[mid].push_back(&c.show_id);
    for (auto& [_, v] : attribution)
        std::sort(v.begin(), v.end(),
                  [](const std::string* a, const std::string* b) { return *a < *b; });

    // per-user attributed timelines, users in sorted order
    std::map<std::string, std::vector<AttributedPost>> timelines;
    for (const auto& m : dataset.microblogs) {
        auto it = attribution.find(m.id);
        if (it == attribution.end()) continue;
        if (from && m.timestamp < *from) continue;
        if (until && m.timestamp >= *until) continue;
        if (strict_attribution && it->second.size() > 1) continue;
        timelines[m.author_id].push_back({m.timestamp, &m.id, it->second});
    }

    std::vector<std::vector<AttributedPost>*> users;
    users.reserve(timelines.size());
    for (auto& [_, tl] : timelines) users.push_back(&tl);

    const int n_users = static_cast<int>(users.size());
    std::vector<std::set<std::pair<std::string, std::string>>> per_user(
        static_cast<std::size_t>(n_users));

    auto extract = [&](int u) {
        auto& tl = *users[static_cast<std::size_t>(u)];
        std::sort(tl.begin(), tl.end(), [](const AttributedPost& a, const AttributedPost& b) {
            if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
            return *a.id < *b.id;
        });
        auto& trans = per_user[static_cast<std::size_t>(u)];
        for (std::size_t i = 0; i + 1 < tl.size(); ++i) {
            if (tl[i + 1].timestamp - tl[i].timestamp > window) continue;
            for (const std::string* a : tl[i].shows)
                for (const std::string* b : tl[i + 1].shows)
                    if (*a != *b) trans.insert({*a, *b});
        }
    };

    if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (int u = 0; u < n_users; ++u) extract(u);
    } else {
        for (int u = 0; u < n_users; ++u) extract(u);
    }

    // deterministic merge: users are already in sorted-id order
    std::map<std::pair<std::string, std::string>, std::size_t> weights;
    for (const auto& trans : per_user)
        for (const auto& edge : trans) ++weights[edge];

    PropagationGraph out;
    out.window = window;
    out.strict_attribution = strict_attribution;
    std::vector<std::string> ids;
    for (const auto& s : shows) ids.push_back(s.show_id);
    std::sort(ids.begin(), ids.end());
    for (const auto& sid : ids) out.graph.add_node(sid);
    for (const auto& [edge, w] : weights)
        out.graph.add_edge(edge.first, edge.second, static_cast<double>(w));
    for (const auto& sid : ids)
        out.in_degree[sid] = out.graph.in_degree(out.graph.index_of(sid));
    return out;
}

}  // namespace

PropagationGraph propagation_graph(const std::vector<TvShow>& shows,
                                   const std::vector<ShowCorpus>& corpora,
                                   const Dataset& dataset, std::int64_t window,
                                   bool strict_attribution, std::optional<std::int64_t> from,
                                   std::optional<std::int64_t> until) {
    return propagation_impl(shows, corpora, dataset, window, strict_attribution, from, until,
                            true);
}

namespace ref {

PropagationGraph propagation_graph(const std::vector<TvShow>& shows,
                                   const std::vector<ShowCorpus>& corpora,
                                   const Dataset& dataset, std::int64_t window,
                                   bool strict_attribution, std::optional<std::int64_t> from,
                                   std::optional<std::int64_t> until) {
    return propagation_impl(shows, corpora, dataset, window, strict_attribution, from, until,
                            false);
}

}  // namespace ref

std::vector<WindowOutflow> propagation_event_report(const std::vector<WindowedGraph>& windows,
                                                    const std::string& focus_show) {
    std::vector<WindowOutflow> out;
    for (const auto& w : windows) {
        if (!w.graph.graph.has_node(focus_show))
            throw DataError("propagation_event_report: focus show " + focus_show +
                            " absent from graph");
        WindowOutflow flow;
        flow.window_start = w.start;
        flow.window_end = w.end;
        int idx = w.graph.graph.index_of(focus_show);
        for (const auto& [j, weight] : w.graph.graph.neighbors(idx))
            flow.ranking.push_back({w.graph.graph.node_id(j), weight});
        std::sort(flow.ranking.begin(), flow.ranking.end(),
                  [](const OutflowEntry& a, const OutflowEntry& b) {
                      if (a.weight != b.weight) return a.weight > b.weight;
                      return a.dst < b.dst;
                  });
        if (flow.ranking.empty()) {
            flow.no_outflow = true;
        } else {
            double total = 0.0;
            for (const auto& e : flow.ranking) total += e.weight;
            flow.top_destination = flow.ranking.front().dst;
            flow.top_share = flow.ranking.front().weight / total;
        }
        out.push_back(std::move(flow));
    }
    return out;
}

}  // namespace showprof
