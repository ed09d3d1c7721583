#include "showprof/graphkit.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

#include "showprof/errors.hpp"
#include "showprof/rng.hpp"

namespace showprof {

namespace {

DegreeHistogram make_histogram(const std::vector<int>& degrees, double mean) {
    DegreeHistogram h;
    h.mean = mean;
    for (int d : degrees) ++h.counts[d];
    std::size_t cum = 0;
    for (const auto& [deg, cnt] : h.counts) {
        cum += cnt;
        h.cdf.emplace_back(deg, static_cast<double>(cum) / static_cast<double>(degrees.size()));
    }
    return h;
}

}  // namespace

DegreeDistribution degree_distribution(const SocialGraph& g) {
    DegreeDistribution out;
    const int n = static_cast<int>(g.node_count());
    if (n == 0) {
        if (g.directed()) {
            out.in = DegreeHistogram{};
            out.out = DegreeHistogram{};
        } else {
            out.undirected = DegreeHistogram{};
        }
        return out;
    }
    if (!g.directed()) {
        std::vector<int> degrees(n);
        for (int i = 0; i < n; ++i) degrees[static_cast<std::size_t>(i)] = g.degree(i);
        double mean = 2.0 * static_cast<double>(g.edge_count()) / n;
        out.undirected = make_histogram(degrees, mean);
        return out;
    }
    std::vector<int> in_deg(n), out_deg(n);
    for (int i = 0; i < n; ++i) {
        in_deg[static_cast<std::size_t>(i)] = g.in_degree(i);
        out_deg[static_cast<std::size_t>(i)] = g.degree(i);
    }
    double mean = static_cast<double>(g.edge_count()) / n;
    out.in = make_histogram(in_deg, mean);
    out.out = make_histogram(out_deg, mean);
    return out;
}

namespace {

// Sorted neighbor-index lists for triangle lookups.
std::vector<std::vector<int>> sorted_neighbor_lists(const SocialGraph& g) {
    const int n = static_cast<int>(g.node_count());
    std::vector<std::vector<int>> lists(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto& l = lists[static_cast<std::size_t>(i)];
        l.reserve(g.neighbors(i).size());
        for (const auto& [j, _] : g.neighbors(i)) l.push_back(j);
        std::sort(l.begin(), l.end());
    }
    return lists;
}

double clustering_of(const std::vector<std::vector<int>>& lists, int node) {
    const auto& nb = lists[static_cast<std::size_t>(node)];
    const int d = static_cast<int>(nb.size());
    if (d < 2) return 0.0;
    std::size_t links = 0;
    for (int a = 0; a < d; ++a) {
        const auto& la = lists[static_cast<std::size_t>(nb[static_cast<std::size_t>(a)])];
        for (int b = a + 1; b < d; ++b)
            if (std::binary_search(la.begin(), la.end(), nb[static_cast<std::size_t>(b)]))
                ++links;
    }
    return 2.0 * static_cast<double>(links) / (static_cast<double>(d) * (d - 1));
}

void require_undirected(const SocialGraph& g, const char* op) {
    if (g.directed()) throw DataError(std::string(op) + ": undirected graph required");
}

}  // namespace

double local_clustering_coefficient(const SocialGraph& g, const std::string& node) {
    require_undirected(g, "local_clustering_coefficient");
    int idx = g.index_of(node);
    return clustering_of(sorted_neighbor_lists(g), idx);
}

std::vector<double> local_clustering_all(const SocialGraph& g) {
    require_undirected(g, "local_clustering_all");
    const int n = static_cast<int>(g.node_count());
    auto lists = sorted_neighbor_lists(g);
    std::vector<double> out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 64)
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = clustering_of(lists, i);
    return out;
}

double average_clustering_coefficient(const SocialGraph& g) {
    if (g.node_count() == 0)
        throw DataError("average_clustering_coefficient: empty graph");
    auto coeffs = local_clustering_all(g);
    double sum = 0.0;
    for (double c : coeffs) sum += c;  // fixed index order: thread-count independent
    return sum / static_cast<double>(coeffs.size());
}

namespace {

struct BfsAccum {
    std::uint64_t dist_sum = 0;
    std::uint64_t pairs = 0;
    int ecc = 0;
};

BfsAccum bfs_from(const SocialGraph& g, int source, std::vector<int>& dist,
                  std::vector<int>& queue) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    dist[static_cast<std::size_t>(source)] = 0;
    queue.push_back(source);
    BfsAccum acc;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        int du = dist[static_cast<std::size_t>(u)];
        if (du > 0) {
            acc.dist_sum += static_cast<std::uint64_t>(du);
            ++acc.pairs;
            acc.ecc = std::max(acc.ecc, du);
        }
        for (const auto& [v, _] : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = du + 1;
                queue.push_back(v);
            }
        }
    }
    return acc;
}

PathStats path_stats_impl(const SocialGraph& g, bool parallel) {
    require_undirected(g, "path_stats");
    const int n = static_cast<int>(g.node_count());
    std::vector<BfsAccum> per_source(static_cast<std::size_t>(n));
    if (parallel) {
#pragma omp parallel
        {
            std::vector<int> dist(static_cast<std::size_t>(n));
            std::vector<int> queue;
            queue.reserve(static_cast<std::size_t>(n));
#pragma omp for schedule(dynamic, 16)
            for (int s = 0; s < n; ++s)
                per_source[static_cast<std::size_t>(s)] = bfs_from(g, s, dist, queue);
        }
    } else {
        std::vector<int> dist(static_cast<std::size_t>(n));
        std::vector<int> queue;
        queue.reserve(static_cast<std::size_t>(n));
        for (int s = 0; s < n; ++s)
            per_source[static_cast<std::size_t>(s)] = bfs_from(g, s, dist, queue);
    }
    PathStats stats;
    std::uint64_t total = 0;
    for (const auto& acc : per_source) {   // integer fold, order-independent anyway
        total += acc.dist_sum;
        stats.reachable_pairs += acc.pairs;
        stats.diameter = std::max(stats.diameter, acc.ecc);
    }
    if (stats.reachable_pairs == 0)
        throw DataError("average_path_length: no two mutually reachable nodes");
    stats.average_path_length =
        static_cast<double>(total) / static_cast<double>(stats.reachable_pairs);
    return stats;
}

}  // namespace

PathStats path_stats(const SocialGraph& g) { return path_stats_impl(g, true); }

double average_path_length(const SocialGraph& g) { return path_stats(g).average_path_length; }

namespace ref {

std::vector<double> local_clustering_all(const SocialGraph& g) {
    require_undirected(g, "local_clustering_all");
    auto lists = sorted_neighbor_lists(g);
    std::vector<double> out(g.node_count());
    for (int i = 0; i < static_cast<int>(g.node_count()); ++i)
        out[static_cast<std::size_t>(i)] = clustering_of(lists, i);
    return out;
}

PathStats path_stats(const SocialGraph& g) { return path_stats_impl(g, false); }

}  // namespace ref

double modularity(const SocialGraph& g, const Partition& p) {
    require_undirected(g, "modularity");
    if (g.edge_count() == 0) throw DataError("modularity: graph has no edges");
    const double two_m = 2.0 * g.total_edge_weight();
    std::map<int, double> intra;   // sum of A_ij over ordered intra pairs
    std::map<int, double> totals;  // sum of weighted degrees
    const int n = static_cast<int>(g.node_count());
    std::vector<int> comm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto it = p.community.find(g.node_id(i));
        if (it == p.community.end())
            throw DataError("modularity: partition missing node " + g.node_id(i));
        comm[static_cast<std::size_t>(i)] = it->second;
        totals[it->second] += g.weighted_degree(i);
    }
    for (const auto& [a, b, w] : g.sorted_edges()) {
        int ca = comm[static_cast<std::size_t>(g.index_of(a))];
        int cb = comm[static_cast<std::size_t>(g.index_of(b))];
        if (ca == cb) intra[ca] += 2.0 * w;
    }
    double q = 0.0;
    for (const auto& [c, tot] : totals) {
        double in_c = 0.0;
        if (auto it = intra.find(c); it != intra.end()) in_c = it->second;
        double frac = tot / two_m;
        q += in_c / two_m - frac * frac;
    }
    return q;
}

namespace {

// Internal weighted graph for the unfolding passes; self-loops carry the
// (doubled) intra weight accumulated by aggregation.
struct FoldGraph {
    std::vector<std::vector<std::pair<int, double>>> adj;  // j != i, both directions
    std::vector<double> self_w;                            // ordered-pair form (doubled)
    std::vector<double> k;                                 // weighted degree incl. self_w
    double w2 = 0.0;                                       // sum of k

    int size() const { return static_cast<int>(adj.size()); }

    void finish_degrees() {
        k.assign(adj.size(), 0.0);
        for (std::size_t i = 0; i < adj.size(); ++i) {
            double sum = self_w[i];
            for (const auto& [_, w] : adj[i]) sum += w;
            k[i] = sum;
        }
        w2 = std::accumulate(k.begin(), k.end(), 0.0);
    }
};

FoldGraph fold_from(const SocialGraph& g) {
    FoldGraph f;
    const int n = static_cast<int>(g.node_count());
    f.adj.resize(static_cast<std::size_t>(n));
    f.self_w.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
        for (const auto& [j, w] : g.neighbors(i)) f.adj[static_cast<std::size_t>(i)].push_back({j, w});
    f.finish_degrees();
    return f;
}

// One pass of local moves; returns true if any node changed community.
bool one_level(const FoldGraph& f, std::vector<int>& node_comm, Rng& rng) {
    const int n = f.size();
    std::vector<double> tot(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) tot[static_cast<std::size_t>(node_comm[static_cast<std::size_t>(i)])] += f.k[static_cast<std::size_t>(i)];

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);

    constexpr double kTol = 1e-12;
    bool any_move = false;
    bool improved = true;
    while (improved) {
        improved = false;
        for (int idx : order) {
            const int c_old = node_comm[static_cast<std::size_t>(idx)];
            const double ki = f.k[static_cast<std::size_t>(idx)];
            tot[static_cast<std::size_t>(c_old)] -= ki;

            std::map<int, double> links;  // community -> edge weight from idx
            links[c_old];                 // staying is always a candidate
            for (const auto& [j, w] : f.adj[static_cast<std::size_t>(idx)])
                links[node_comm[static_cast<std::size_t>(j)]] += w;

            int best_c = c_old;
            double best_gain = links[c_old] - tot[static_cast<std::size_t>(c_old)] * ki / f.w2;
            for (const auto& [c, l] : links) {  // ascending id: equal gain keeps the lower
                if (c == c_old) continue;
                double gain = l - tot[static_cast<std::size_t>(c)] * ki / f.w2;
                if (gain > best_gain + kTol) {
                    best_gain = gain;
                    best_c = c;
                }
            }
            node_comm[static_cast<std::size_t>(idx)] = best_c;
            tot[static_cast<std::size_t>(best_c)] += ki;
            if (best_c != c_old) {
                improved = true;
                any_move = true;
            }
        }
    }
    return any_move;
}

// Renumber communities 0..C-1 (ascending old id) and build the quotient.
FoldGraph aggregate(const FoldGraph& f, std::vector<int>& node_comm) {
    std::map<int, int> renumber;
    for (int c : node_comm) renumber.try_emplace(c, 0);
    int next = 0;
    for (auto& [_, v] : renumber) v = next++;
    for (int& c : node_comm) c = renumber[c];

    FoldGraph out;
    out.adj.resize(static_cast<std::size_t>(next));
    out.self_w.assign(static_cast<std::size_t>(next), 0.0);
    std::map<std::pair<int, int>, double> between;
    for (int i = 0; i < f.size(); ++i) {
        int ci = node_comm[static_cast<std::size_t>(i)];
        out.self_w[static_cast<std::size_t>(ci)] += f.self_w[static_cast<std::size_t>(i)];
        for (const auto& [j, w] : f.adj[static_cast<std::size_t>(i)]) {
            int cj = node_comm[static_cast<std::size_t>(j)];
            if (ci == cj)
                out.self_w[static_cast<std::size_t>(ci)] += w;  // ordered pair, already one direction
            else
                between[{ci, cj}] += w;
        }
    }
    for (const auto& [key, w] : between)
        out.adj[static_cast<std::size_t>(key.first)].push_back({key.second, w});
    out.finish_degrees();
    return out;
}

// Kernighan-Lin style refinement sweep: every node moves at most once,
// the globally best single move is applied even when its interim gain is
// negative, and the best prefix of the move sequence is kept. Escapes the
// pairing optima that strict-positive local moves cannot leave. Fully
// deterministic: ties prefer the earlier node, then the lower community.
bool kl_refine(const FoldGraph& f, std::vector<int>& comm, int max_sweeps) {
    const int n = f.size();
    if (n < 3) return false;
    constexpr double kTol = 1e-12;
    bool improved_any = false;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        // dense renumber so community ids stay below 2n
        {
            std::map<int, int> renumber;
            for (int c : comm) renumber.try_emplace(c, 0);
            int next = 0;
            for (auto& [_, v] : renumber) v = next++;
            for (int& c : comm) c = renumber[c];
        }
        int used = 0;
        for (int c : comm) used = std::max(used, c + 1);
        std::vector<double> tot(static_cast<std::size_t>(2 * n + 2), 0.0);
        for (int i = 0; i < n; ++i)
            tot[static_cast<std::size_t>(comm[static_cast<std::size_t>(i)])] +=
                f.k[static_cast<std::size_t>(i)];

        struct Move {
            int node;
            int from;
            int to;
        };
        std::vector<Move> seq;
        std::vector<double> cum_gain;
        std::vector<char> frozen(static_cast<std::size_t>(n), 0);
        double cum = 0.0;

        for (int step = 0; step < n; ++step) {
            double best_gain = -std::numeric_limits<double>::infinity();
            int best_node = -1, best_target = -1;
            const int empty_id = used;
            for (int u = 0; u < n; ++u) {
                if (frozen[static_cast<std::size_t>(u)]) continue;
                const int cu = comm[static_cast<std::size_t>(u)];
                const double ku = f.k[static_cast<std::size_t>(u)];
                tot[static_cast<std::size_t>(cu)] -= ku;
                std::map<int, double> links;
                links[cu];
                for (const auto& [j, w] : f.adj[static_cast<std::size_t>(u)])
                    links[comm[static_cast<std::size_t>(j)]] += w;
                const double score_old =
                    links[cu] - tot[static_cast<std::size_t>(cu)] * ku / f.w2;
                auto consider = [&](int target, double score) {
                    double gain = score - score_old;
                    if (gain > best_gain + kTol) {
                        best_gain = gain;
                        best_node = u;
                        best_target = target;
                    }
                };
                for (const auto& [c, l] : links) {
                    if (c == cu) continue;
                    consider(c, l - tot[static_cast<std::size_t>(c)] * ku / f.w2);
                }
                consider(empty_id, 0.0);  // splitting off is always a candidate
                tot[static_cast<std::size_t>(cu)] += ku;
            }
            if (best_node < 0) break;
            const double k_best = f.k[static_cast<std::size_t>(best_node)];
            tot[static_cast<std::size_t>(comm[static_cast<std::size_t>(best_node)])] -= k_best;
            seq.push_back({best_node, comm[static_cast<std::size_t>(best_node)], best_target});
            comm[static_cast<std::size_t>(best_node)] = best_target;
            tot[static_cast<std::size_t>(best_target)] += k_best;
            frozen[static_cast<std::size_t>(best_node)] = 1;
            if (best_target == empty_id) ++used;
            cum += best_gain;
            cum_gain.push_back(cum);
        }

        // keep the best prefix, if it improves at all
        int best_prefix = -1;
        double best_cum = kTol;
        for (std::size_t i = 0; i < cum_gain.size(); ++i)
            if (cum_gain[i] > best_cum) {
                best_cum = cum_gain[i];
                best_prefix = static_cast<int>(i);
            }
        for (int i = static_cast<int>(seq.size()) - 1; i > best_prefix; --i)
            comm[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)].node)] =
                seq[static_cast<std::size_t>(i)].from;
        if (best_prefix < 0) return improved_any;
        improved_any = true;
    }
    return improved_any;
}

std::map<std::string, int> louvain_once(const SocialGraph& g, std::uint64_t stream_seed) {
    Rng rng(stream_seed);
    const int n = static_cast<int>(g.node_count());
    FoldGraph base = fold_from(g);
    std::vector<int> membership(static_cast<std::size_t>(n));
    std::iota(membership.begin(), membership.end(), 0);

    // alternate node-level refinement on the original graph with the
    // multilevel folding until neither moves anything
    constexpr int kKlSizeCap = 512;  // KL sweeps are quadratic; skip on big graphs
    bool improved = true;
    int rounds = 0;
    while (improved && rounds++ < 20) {
        improved = false;

        std::vector<int> comm = membership;
        if (one_level(base, comm, rng)) improved = true;
        if (n <= kKlSizeCap && kl_refine(base, comm, 4)) improved = true;
        FoldGraph fold = aggregate(base, comm);  // renumbers comm to dense quotient ids
        membership = comm;

        while (true) {
            std::vector<int> super_comm(static_cast<std::size_t>(fold.size()));
            std::iota(super_comm.begin(), super_comm.end(), 0);
            if (!one_level(fold, super_comm, rng)) break;
            improved = true;
            FoldGraph next = aggregate(fold, super_comm);
            for (int& m : membership) m = super_comm[static_cast<std::size_t>(m)];
            if (next.size() == fold.size()) break;
            fold = std::move(next);
        }
    }

    std::map<std::string, int> result;
    for (int i = 0; i < n; ++i) result[g.node_id(i)] = membership[static_cast<std::size_t>(i)];
    return result;
}

}  // namespace

std::pair<Partition, double> louvain_communities(const SocialGraph& g, std::uint64_t seed) {
    require_undirected(g, "louvain_communities");
    if (g.edge_count() == 0) throw DataError("louvain_communities: graph has no edges");

    constexpr int kRestarts = 8;
    Partition best;
    double best_q = -std::numeric_limits<double>::infinity();
    for (int r = 0; r < kRestarts; ++r) {
        auto raw = louvain_once(g, stage_seed(seed, "louvain") + static_cast<std::uint64_t>(r));
        Partition p = Partition::from_map(raw);
        double q = modularity(g, p);
        if (q > best_q) {
            best_q = q;
            best = std::move(p);
        }
    }

    // never report worse than the all-singletons baseline
    std::map<std::string, int> singletons;
    int next = 0;
    for (const auto& id : g.nodes()) singletons[id] = next++;
    Partition base = Partition::from_map(singletons);
    double base_q = modularity(g, base);
    if (base_q > best_q) return {base, base_q};
    return {best, best_q};
}

namespace {

struct LinearSolve {
    double a = 0.0;
    double c = 0.0;
    double sse = std::numeric_limits<double>::infinity();
};

// Closed-form least squares for y = a*u + c with u = x^b.
LinearSolve solve_linear(const std::vector<std::pair<double, double>>& pts, double b) {
    const double n = static_cast<double>(pts.size());
    double su = 0.0, suu = 0.0, sy = 0.0, suy = 0.0;
    for (const auto& [x, y] : pts) {
        double u = std::pow(x, b);
        su += u;
        suu += u * u;
        sy += y;
        suy += u * y;
    }
    LinearSolve out;
    double det = n * suu - su * su;
    if (!std::isfinite(det) || std::abs(det) < 1e-12 * std::max(1.0, n * suu)) {
        out.a = 0.0;
        out.c = sy / n;
    } else {
        out.a = (n * suy - su * sy) / det;
        out.c = (suu * sy - su * suy) / det;
    }
    double sse = 0.0;
    for (const auto& [x, y] : pts) {
        double r = y - out.a * std::pow(x, b) - out.c;
        sse += r * r;
    }
    out.sse = std::isfinite(sse) ? sse : std::numeric_limits<double>::infinity();
    return out;
}

}  // namespace

CurveFit fit_shifted_power(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) throw DataError("fit_shifted_power: need at least 3 points");
    std::vector<double> xs;
    for (const auto& [x, y] : points) {
        if (x <= 0.0) throw DataError("fit_shifted_power: x values must be positive");
        xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    if (xs.size() < 3) throw DataError("fit_shifted_power: need at least 3 distinct x");

    double y_min = points[0].second, y_max = points[0].second, y_sum = 0.0;
    for (const auto& [_, y] : points) {
        y_min = std::min(y_min, y);
        y_max = std::max(y_max, y);
        y_sum += y;
    }
    const double y_mean = y_sum / static_cast<double>(points.size());
    if (y_min == y_max) return {0.0, 0.0, y_mean, 1.0};  // documented convention

    constexpr double kLo = -5.0, kHi = 5.0;
    constexpr int kGrid = 201;
    double best_b = kLo;
    double best_sse = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kGrid; ++i) {
        double b = kLo + (kHi - kLo) * i / (kGrid - 1);
        double sse = solve_linear(points, b).sse;
        if (sse < best_sse) {
            best_sse = sse;
            best_b = b;
        }
    }
    const double step = (kHi - kLo) / (kGrid - 1);
    double lo = std::max(kLo, best_b - step);
    double hi = std::min(kHi, best_b + step);

    // golden-section to tolerance 1e-6 on b
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = solve_linear(points, x1).sse;
    double f2 = solve_linear(points, x2).sse;
    while (hi - lo > 1e-6) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = solve_linear(points, x1).sse;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = solve_linear(points, x2).sse;
        }
    }
    double b = 0.5 * (lo + hi);
    LinearSolve lin = solve_linear(points, b);

    double ss_tot = 0.0;
    for (const auto& [_, y] : points) ss_tot += (y - y_mean) * (y - y_mean);
    CurveFit fit;
    fit.a = lin.a;
    fit.b = b;
    fit.c = lin.c;
    fit.r_squared = 1.0 - lin.sse / ss_tot;
    return fit;
}

SocialGraph erdos_renyi(int n_nodes, std::size_t n_edges, std::uint64_t seed) {
    if (n_nodes < 0) throw DataError("erdos_renyi: negative node count");
    const std::size_t max_edges =
        static_cast<std::size_t>(n_nodes) * static_cast<std::size_t>(std::max(0, n_nodes - 1)) / 2;
    if (n_edges > max_edges) throw DataError("erdos_renyi: too many edges requested");
    SocialGraph g(false);
    int width = static_cast<int>(std::to_string(std::max(1, n_nodes)).size());
    auto name = [&](int i) {
        std::string digits = std::to_string(i);
        return "er" + std::string(static_cast<std::size_t>(width) - digits.size(), '0') + digits;
    };
    for (int i = 0; i < n_nodes; ++i) g.add_node(name(i));
    Rng rng(stage_seed(seed, "erdos_renyi"));
    if (max_edges > 0 && n_edges > max_edges / 2) {
        // dense request: shuffle the full pair list
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(max_edges);
        for (int u = 0; u < n_nodes; ++u)
            for (int v = u + 1; v < n_nodes; ++v) pairs.push_back({u, v});
        rng.shuffle(pairs);
        for (std::size_t i = 0; i < n_edges; ++i)
            g.add_edge(name(pairs[i].first), name(pairs[i].second));
    } else {
        std::size_t added = 0;
        while (added < n_edges) {
            int u = static_cast<int>(rng.uniform_u64(static_cast<std::uint64_t>(n_nodes)));
            int v = static_cast<int>(rng.uniform_u64(static_cast<std::uint64_t>(n_nodes)));
            if (u == v) continue;
            const std::string& a = g.node_id(std::min(u, v));
            const std::string& b = g.node_id(std::max(u, v));
            if (g.has_edge(a, b)) continue;
            g.add_edge(a, b);
            ++added;
        }
    }
    return g;
}

}  // namespace showprof
