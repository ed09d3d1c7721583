#include "showprof/profile_user.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "showprof/errors.hpp"
#include "showprof/graphkit.hpp"
#include "showprof/rng.hpp"

namespace showprof {

AgeHistogram age_histogram(const std::set<std::string>& corpus_users, const Dataset& dataset) {
    std::unordered_map<std::string, const UserProfile*> profiles;
    for (const auto& u : dataset.users) profiles[u.user_id] = &u;
    AgeHistogram h;
    double sum = 0.0;
    for (const auto& id : corpus_users) {
        auto it = profiles.find(id);
        if (it == profiles.end() || !it->second->age) {
            ++h.unknown_count;
            continue;
        }
        ++h.counts[*it->second->age];
        ++h.known_count;
        sum += *it->second->age;
    }
    if (h.known_count > 0) h.mean_age = sum / static_cast<double>(h.known_count);
    return h;
}

std::vector<RegionCount> region_counts(const std::set<std::string>& corpus_users,
                                       const Dataset& dataset) {
    std::unordered_map<std::string, const UserProfile*> profiles;
    for (const auto& u : dataset.users) profiles[u.user_id] = &u;
    std::map<std::string, std::uint64_t> counts;
    for (const auto& id : corpus_users) {
        auto it = profiles.find(id);
        if (it != profiles.end() && it->second->region) ++counts[*it->second->region];
    }
    std::vector<RegionCount> out;
    for (const auto& [region, n] : counts) out.push_back({region, n});
    return out;
}

std::vector<RegionPi> participation_index(const std::vector<RegionCount>& region_counts) {
    if (region_counts.size() < 10)
        throw DataError("participation_index: needs at least 10 regions, got " +
                        std::to_string(region_counts.size()));
    std::vector<RegionCount> ranked = region_counts;
    std::sort(ranked.begin(), ranked.end(), [](const RegionCount& a, const RegionCount& b) {
        if (a.user_count != b.user_count) return a.user_count > b.user_count;
        return a.region < b.region;
    });
    const double un10 = static_cast<double>(ranked[9].user_count);
    if (ranked[9].user_count == 0) throw DataError("participation_index: UN_10 is zero");
    std::vector<RegionPi> out;
    out.reserve(ranked.size());
    for (const auto& r : ranked)
        out.push_back({r.region, r.user_count,
                       (static_cast<double>(r.user_count) - un10) / un10});
    return out;
}

namespace {

std::unordered_map<std::string, const TvShow*> show_index(const Dataset& dataset) {
    std::unordered_map<std::string, const TvShow*> idx;
    for (const auto& s : dataset.shows) idx[s.show_id] = &s;
    return idx;
}

// Unnormalized per-user label weights accumulated over all corpora.
std::map<std::string, std::map<std::string, double>> accumulate_weights(
    const std::vector<ShowCorpus>& corpora, const Dataset& dataset) {
    std::unordered_map<std::string, const std::string*> author_of;
    for (const auto& m : dataset.microblogs) author_of[m.id] = &m.author_id;
    auto shows = show_index(dataset);

    std::map<std::string, std::map<std::string, double>> weights;
    for (const auto& corpus : corpora) {
        auto sit = shows.find(corpus.show_id);
        if (sit == shows.end())
            throw DataError("label vectors: unknown show " + corpus.show_id);
        const TvShow& show = *sit->second;
        for (const auto& mid : corpus.members) {
            auto ait = author_of.find(mid);
            if (ait == author_of.end()) continue;  // corpus of another dataset
            auto& w = weights[*ait->second];
            for (const auto& label : show.labels) w[label] += 1.0 / 3.0;
        }
    }
    return weights;
}

LabelVector normalized(const std::string& user, std::map<std::string, double> w) {
    double total = 0.0;
    for (const auto& [_, v] : w) total += v;
    for (auto& [_, v] : w) v /= total;
    return {user, std::move(w)};
}

}  // namespace

LabelVector user_label_vector(const std::string& user_id,
                              const std::vector<ShowCorpus>& corpora, const Dataset& dataset) {
    auto weights = accumulate_weights(corpora, dataset);
    auto it = weights.find(user_id);
    if (it == weights.end() || it->second.empty())
        throw DataError("user_label_vector: user " + user_id + " has no attributed posts");
    return normalized(user_id, it->second);
}

std::vector<LabelVector> all_label_vectors(const std::vector<ShowCorpus>& corpora,
                                           const Dataset& dataset) {
    auto weights = accumulate_weights(corpora, dataset);
    std::vector<LabelVector> out;
    out.reserve(weights.size());
    for (auto& [user, w] : weights)
        if (!w.empty()) out.push_back(normalized(user, w));
    return out;  // map iteration: already sorted by user id
}

namespace {

double dist2(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

}  // namespace

KmeansResult kmeans_cluster(const std::vector<LabelVector>& vectors, int k, std::uint64_t seed) {
    const int n = static_cast<int>(vectors.size());
    if (k < 1 || k > n)
        throw DataError("kmeans_cluster: k must be in [1, " + std::to_string(n) + "]");

    // canonical point order and dimension order
    std::vector<const LabelVector*> pts(vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) pts[i] = &vectors[i];
    std::sort(pts.begin(), pts.end(),
              [](const LabelVector* a, const LabelVector* b) { return a->user_id < b->user_id; });
    std::map<std::string, std::size_t> dim_index;
    for (const auto* v : pts)
        for (const auto& [label, _] : v->weights) dim_index.try_emplace(label, 0);
    std::size_t next_dim = 0;
    for (auto& [_, idx] : dim_index) idx = next_dim++;
    const std::size_t dims = dim_index.size();

    std::vector<std::vector<double>> x(static_cast<std::size_t>(n),
                                       std::vector<double>(dims, 0.0));
    for (int i = 0; i < n; ++i)
        for (const auto& [label, w] : pts[static_cast<std::size_t>(i)]->weights)
            x[static_cast<std::size_t>(i)][dim_index[label]] = w;

    // k-means++ seeding
    Rng rng(stage_seed(seed, "kmeans"));
    std::vector<std::vector<double>> centroids;
    centroids.reserve(static_cast<std::size_t>(k));
    centroids.push_back(x[rng.uniform_u64(static_cast<std::uint64_t>(n))]);
    std::vector<double> d2(static_cast<std::size_t>(n));
    while (static_cast<int>(centroids.size()) < k) {
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            double best = dist2(x[static_cast<std::size_t>(i)], centroids[0]);
            for (std::size_t c = 1; c < centroids.size(); ++c)
                best = std::min(best, dist2(x[static_cast<std::size_t>(i)], centroids[c]));
            d2[static_cast<std::size_t>(i)] = best;
            total += best;
        }
        std::size_t pick;
        if (total <= 0.0) {
            pick = rng.uniform_u64(static_cast<std::uint64_t>(n));  // all points coincide
        } else {
            pick = rng.weighted_index(d2);
        }
        centroids.push_back(x[pick]);
    }

    KmeansResult res;
    std::vector<int> assign(static_cast<std::size_t>(n), -1);
    std::vector<double> best_d(static_cast<std::size_t>(n), 0.0);
    constexpr int kMaxIter = 300;
    for (int iter = 0; iter < kMaxIter; ++iter) {
        bool changed = false;
#pragma omp parallel for schedule(static) reduction(|| : changed)
        for (int i = 0; i < n; ++i) {
            int best_c = 0;
            double best = dist2(x[static_cast<std::size_t>(i)], centroids[0]);
            for (int c = 1; c < k; ++c) {
                double d = dist2(x[static_cast<std::size_t>(i)],
                                 centroids[static_cast<std::size_t>(c)]);
                if (d < best) {  // strict: ties keep the lowest centroid index
                    best = d;
                    best_c = c;
                }
            }
            if (assign[static_cast<std::size_t>(i)] != best_c) changed = true;
            assign[static_cast<std::size_t>(i)] = best_c;
            best_d[static_cast<std::size_t>(i)] = best;
        }
        double objective = 0.0;
        for (int i = 0; i < n; ++i) objective += best_d[static_cast<std::size_t>(i)];
        res.objective_history.push_back(objective);
        res.iterations = iter + 1;
        if (!changed) {
            res.converged = true;
            break;
        }

        // centroid update in point order (deterministic fp accumulation)
        std::vector<std::vector<double>> sums(static_cast<std::size_t>(k),
                                              std::vector<double>(dims, 0.0));
        std::vector<std::size_t> counts(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < n; ++i) {
            auto c = static_cast<std::size_t>(assign[static_cast<std::size_t>(i)]);
            ++counts[c];
            for (std::size_t d = 0; d < dims; ++d) sums[c][d] += x[static_cast<std::size_t>(i)][d];
        }
        for (int c = 0; c < k; ++c) {
            if (counts[static_cast<std::size_t>(c)] == 0) continue;
            for (std::size_t d = 0; d < dims; ++d)
                centroids[static_cast<std::size_t>(c)][d] =
                    sums[static_cast<std::size_t>(c)][d] /
                    static_cast<double>(counts[static_cast<std::size_t>(c)]);
        }

        // re-seed empty clusters with the farthest point from its centroid
        std::vector<bool> moved(static_cast<std::size_t>(n), false);
        for (int c = 0; c < k; ++c) {
            if (counts[static_cast<std::size_t>(c)] > 0) continue;
            int far = -1;
            double far_d = -1.0;
            for (int i = 0; i < n; ++i) {
                if (moved[static_cast<std::size_t>(i)]) continue;
                auto ci = static_cast<std::size_t>(assign[static_cast<std::size_t>(i)]);
                if (counts[ci] <= 1) continue;  // do not empty another cluster
                double d = dist2(x[static_cast<std::size_t>(i)], centroids[ci]);
                if (d > far_d) {
                    far_d = d;
                    far = i;
                }
            }
            if (far < 0 || far_d <= 0.0) {
                res.degenerate_duplicates = true;  // duplicates: nothing to spread apart
                continue;
            }
            centroids[static_cast<std::size_t>(c)] = x[static_cast<std::size_t>(far)];
            --counts[static_cast<std::size_t>(assign[static_cast<std::size_t>(far)])];
            assign[static_cast<std::size_t>(far)] = c;
            ++counts[static_cast<std::size_t>(c)];
            moved[static_cast<std::size_t>(far)] = true;
        }
    }

    std::map<std::string, int> raw;
    for (int i = 0; i < n; ++i)
        raw[pts[static_cast<std::size_t>(i)]->user_id] = assign[static_cast<std::size_t>(i)];
    res.assignment.community = raw;
    res.assignment.community_count = k;
    std::move(centroids.begin(), centroids.end(), std::back_inserter(res.centroids));
    for (const auto& [label, _] : dim_index) res.dimensions.push_back(label);
    return res;
}

CohesionStats cluster_cohesion(const std::set<std::string>& cluster_users,
                               const Dataset& dataset) {
    if (cluster_users.empty()) throw DataError("cluster_cohesion: empty cluster");
    CohesionStats stats;
    stats.size = cluster_users.size();

    SocialGraph induced(false);
    for (const auto& u : cluster_users) induced.add_node(u);
    std::set<std::pair<std::string, std::string>> intra;
    for (const auto& f : dataset.follows) {
        if (!cluster_users.contains(f.follower) || !cluster_users.contains(f.followee)) continue;
        auto key = std::minmax(f.follower, f.followee);
        if (intra.insert({key.first, key.second}).second)
            induced.add_edge(f.follower, f.followee);
    }
    stats.intra_edges = intra.size();
    if (stats.size >= 2) {
        double possible = static_cast<double>(stats.size) * (static_cast<double>(stats.size) - 1) / 2.0;
        stats.density = static_cast<double>(stats.intra_edges) / possible;
    }
    stats.average_clustering = average_clustering_coefficient(induced);

    // per-VIP: fraction of cluster members following the VIP
    std::map<std::string, std::size_t> vip_followers;
    std::set<std::string> vips;
    for (const auto& u : dataset.users)
        if (u.is_vip) vips.insert(u.user_id);
    for (const auto& f : dataset.follows)
        if (vips.contains(f.followee) && cluster_users.contains(f.follower))
            ++vip_followers[f.followee];
    for (const auto& vip : vips) {
        VipFollowStats v;
        v.vip_id = vip;
        v.vip_in_cluster = cluster_users.contains(vip);
        auto it = vip_followers.find(vip);
        v.follower_fraction =
            it == vip_followers.end()
                ? 0.0
                : static_cast<double>(it->second) / static_cast<double>(stats.size);
        stats.vip_follows.push_back(std::move(v));
    }
    return stats;
}

}  // namespace showprof
