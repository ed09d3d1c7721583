#include "showprof/profile_social.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "showprof/errors.hpp"

namespace showprof {

namespace {

std::unordered_map<std::string, const std::string*> author_index(const Dataset& dataset) {
    std::unordered_map<std::string, const std::string*> idx;
    for (const auto& m : dataset.microblogs) idx[m.id] = &m.author_id;
    return idx;
}

std::set<std::string> corpus_authors(const ShowCorpus& corpus, const Dataset& dataset) {
    auto idx = author_index(dataset);
    std::set<std::string> authors;
    for (const auto& mid : corpus.members)
        if (auto it = idx.find(mid); it != idx.end()) authors.insert(*it->second);
    return authors;
}

}  // namespace

ViewerTopologyStats viewer_topology_stats(const ShowCorpus& corpus, const Dataset& dataset) {
    if (corpus.members.empty())
        throw DataError("viewer_topology_stats: empty corpus for " + corpus.show_id);
    auto authors = corpus_authors(corpus, dataset);

    // induced undirected adjacency
    std::unordered_map<std::string, std::vector<const std::string*>> adj;
    for (const auto& f : dataset.follows) {
        if (!authors.contains(f.follower) || !authors.contains(f.followee)) continue;
        adj[f.follower].push_back(&f.followee);
        adj[f.followee].push_back(&f.follower);
    }

    ViewerTopologyStats stats;
    stats.author_count = authors.size();
    std::unordered_set<std::string> visited;
    for (const auto& a : authors) {
        if (!adj.contains(a)) {
            ++stats.isolated_count;
            ++stats.component_sizes[1];
            continue;
        }
        if (visited.contains(a)) continue;
        // BFS over the induced component
        std::vector<const std::string*> queue{&a};
        visited.insert(a);
        std::size_t size = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            ++size;
            for (const std::string* nb : adj[*queue[head]])
                if (visited.insert(*nb).second) queue.push_back(nb);
        }
        ++stats.component_sizes[size];
    }
    stats.isolated_fraction =
        static_cast<double>(stats.isolated_count) / static_cast<double>(stats.author_count);
    stats.connected_fraction = 1.0 - stats.isolated_fraction;
    return stats;
}

namespace {

std::vector<std::string> actor_universe(const std::vector<TvShow>& shows) {
    std::set<std::string> names;
    for (const auto& s : shows)
        for (const auto& a : s.actors) names.insert(a);
    return {names.begin(), names.end()};
}

// account user_id -> actor names (an account may back several credits)
std::unordered_map<std::string, std::vector<std::string>> account_to_actor(
    const std::vector<TvShow>& shows) {
    std::map<std::string, std::set<std::string>> acc;
    for (const auto& s : shows)
        for (const auto& [name, account] : s.actor_accounts)
            if (account) acc[*account].insert(name);
    std::unordered_map<std::string, std::vector<std::string>> out;
    for (const auto& [account, names] : acc) out[account] = {names.begin(), names.end()};
    return out;
}

}  // namespace

SocialGraph actor_copost_graph(const std::vector<TvShow>& shows,
                               const std::vector<ShowCorpus>& corpora, const Dataset& dataset) {
    SocialGraph g(false);
    for (const auto& name : actor_universe(shows)) g.add_node(name);
    auto by_account = account_to_actor(shows);
    auto authors = author_index(dataset);
    std::unordered_map<std::string, const TvShow*> show_idx;
    for (const auto& s : shows) show_idx[s.show_id] = &s;

    for (const auto& corpus : corpora) {
        auto sit = show_idx.find(corpus.show_id);
        if (sit == show_idx.end()) continue;
        const TvShow& show = *sit->second;
        std::set<std::string> posters;  // actor names whose account posted in this corpus
        for (const auto& mid : corpus.members) {
            auto ait = authors.find(mid);
            if (ait == authors.end()) continue;
            auto bit = by_account.find(*ait->second);
            if (bit == by_account.end()) continue;
            for (const auto& name : bit->second) posters.insert(name);
        }
        for (const auto& poster : posters)
            for (const auto& cast : show.actors)
                if (poster != cast) g.add_edge(poster, cast);
    }
    return g;
}

SocialGraph actor_follow_graph(const Dataset& dataset, const std::vector<TvShow>& shows) {
    SocialGraph g(false);
    for (const auto& name : actor_universe(shows)) g.add_node(name);
    auto by_account = account_to_actor(shows);
    std::unordered_set<std::string> accounts;
    for (const auto& [acc, _] : by_account) accounts.insert(acc);
    for (const auto& f : dataset.follows) {
        if (!accounts.contains(f.follower) || !accounts.contains(f.followee)) continue;
        for (const auto& a : by_account[f.follower])
            for (const auto& b : by_account[f.followee])
                if (a != b) g.add_edge(a, b);
    }
    return g;
}

ActorInfluence actor_influence(const TvShow& show, const ShowCorpus& corpus,
                               const Dataset& dataset) {
    if (corpus.members.empty())
        throw DataError("actor_influence: empty corpus for " + show.show_id);
    auto authors = author_index(dataset);
    std::unordered_map<std::string, std::set<std::string>> followers;  // followee -> followers
    for (const auto& f : dataset.follows) followers[f.followee].insert(f.follower);

    const double corpus_size = static_cast<double>(corpus.members.size());
    ActorInfluence out;
    for (const auto& actor : show.actors) {
        auto ait = show.actor_accounts.find(actor);
        if (ait == show.actor_accounts.end() || !ait->second) {
            out.actors_without_accounts.push_back(actor);
            continue;
        }
        const std::string& account = *ait->second;
        const std::set<std::string>* fans = nullptr;
        if (auto fit = followers.find(account); fit != followers.end()) fans = &fit->second;

        std::size_t own = 0, by_fans = 0;
        for (const auto& mid : corpus.members) {
            auto uit = authors.find(mid);
            if (uit == authors.end()) continue;
            const std::string& author = *uit->second;
            if (author == account) {
                ++own;
            } else if (fans && fans->contains(author)) {
                ++by_fans;
            }
        }
        out.records.push_back({actor, show.show_id, static_cast<double>(own) / corpus_size,
                               static_cast<double>(by_fans) / corpus_size});
    }
    std::sort(out.records.begin(), out.records.end(),
              [](const InfluenceRecord& a, const InfluenceRecord& b) { return a.actor < b.actor; });
    std::sort(out.actors_without_accounts.begin(), out.actors_without_accounts.end());
    return out;
}

std::vector<ActorSummary> actor_influence_stats(const std::vector<InfluenceRecord>& records,
                                                const Dataset& dataset) {
    std::map<std::string, std::vector<double>> grouped;
    for (const auto& r : records) grouped[r.actor].push_back(r.actor_fraction);

    // actor name -> account, from the catalog (first show in id order wins)
    std::map<std::string, std::string> account_of;
    std::vector<const TvShow*> shows;
    for (const auto& s : dataset.shows) shows.push_back(&s);
    std::sort(shows.begin(), shows.end(),
              [](const TvShow* a, const TvShow* b) { return a->show_id < b->show_id; });
    for (const TvShow* s : shows)
        for (const auto& [name, account] : s->actor_accounts)
            if (account) account_of.try_emplace(name, *account);

    std::map<std::string, std::size_t> follower_count;
    for (const auto& f : dataset.follows) ++follower_count[f.followee];

    std::vector<ActorSummary> out;
    for (const auto& [actor, fractions] : grouped) {
        ActorSummary s;
        s.actor = actor;
        double sum = 0.0;
        for (double f : fractions) sum += f;
        s.mean_influence = sum / static_cast<double>(fractions.size());
        double var = 0.0;
        for (double f : fractions) {
            double d = f - s.mean_influence;
            var += d * d;
        }
        s.variance_influence = var / static_cast<double>(fractions.size());
        if (auto it = account_of.find(actor); it != account_of.end())
            if (auto fit = follower_count.find(it->second); fit != follower_count.end())
                s.fan_count = fit->second;
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace showprof
