#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "showprof/errors.hpp"
#include "showprof/graphkit.hpp"
#include "showprof/rng.hpp"

using namespace showprof;
using oracles::complete_graph;
using oracles::gnp_graph;
using oracles::node_name;

TEST_CASE("degree distribution on K_5 and an edgeless graph") {
    SocialGraph k5 = complete_graph(5);
    auto dist = degree_distribution(k5);
    REQUIRE(dist.undirected.has_value());
    CHECK(dist.undirected->counts == std::map<int, std::size_t>{{4, 5}});
    CHECK(dist.undirected->mean == doctest::Approx(4.0));
    REQUIRE(dist.undirected->cdf.size() == 1);
    CHECK(dist.undirected->cdf[0] == std::pair<int, double>{4, 1.0});

    SocialGraph edgeless(false);
    for (int i = 0; i < 10; ++i) edgeless.add_node(node_name(i));
    auto d2 = degree_distribution(edgeless);
    CHECK(d2.undirected->counts == std::map<int, std::size_t>{{0, 10}});
    CHECK(d2.undirected->mean == 0.0);

    SocialGraph empty(false);
    CHECK(degree_distribution(empty).undirected->counts.empty());
}

TEST_CASE("degree histogram equals brute-force neighbor counts on random graphs") {
    Rng rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        SocialGraph g = gnp_graph(30, 0.2, rng);
        auto dist = degree_distribution(g);
        std::map<int, std::size_t> expected;
        std::size_t total = 0;
        for (int i = 0; i < 30; ++i) {
            ++expected[static_cast<int>(g.neighbors(i).size())];
            total += g.neighbors(i).size();
        }
        CHECK(dist.undirected->counts == expected);
        CHECK(dist.undirected->mean ==
              doctest::Approx(static_cast<double>(total) / 30.0).epsilon(1e-12));
    }
}

TEST_CASE("directed graphs report in and out separately") {
    SocialGraph g(true);
    g.add_edge("a", "b");
    g.add_edge("a", "c");
    g.add_edge("b", "c");
    auto dist = degree_distribution(g);
    REQUIRE(dist.in.has_value());
    REQUIRE(dist.out.has_value());
    CHECK(!dist.undirected.has_value());
    CHECK(dist.out->counts == std::map<int, std::size_t>{{0, 1}, {1, 1}, {2, 1}});
    CHECK(dist.in->counts == std::map<int, std::size_t>{{0, 1}, {1, 1}, {2, 1}});
}

TEST_CASE("local clustering: triangle, star, and brute force on random graphs") {
    SocialGraph tri = complete_graph(3);
    CHECK(local_clustering_coefficient(tri, node_name(0)) == 1.0);

    SocialGraph star(false);
    for (int i = 1; i <= 4; ++i) star.add_edge("hub", "leaf" + std::to_string(i));
    CHECK(local_clustering_coefficient(star, "hub") == 0.0);
    CHECK(local_clustering_coefficient(star, "leaf1") == 0.0);  // degree < 2

    CHECK_THROWS_AS(local_clustering_coefficient(star, "nope"), DataError);

    Rng rng(5);
    SocialGraph g = gnp_graph(20, 0.3, rng);
    auto all = local_clustering_all(g);
    for (int i = 0; i < 20; ++i)
        CHECK(all[static_cast<std::size_t>(i)] ==
              doctest::Approx(oracles::brute_local_clustering(g, i)).epsilon(1e-12));
}

TEST_CASE("average clustering and path length on landmark graphs") {
    for (int n : {2, 3, 5, 8}) {
        SocialGraph g = complete_graph(n);
        CHECK(average_clustering_coefficient(g) == doctest::Approx(n >= 3 ? 1.0 : 0.0));
        CHECK(average_path_length(g) == 1.0);  // exact for every K_n
    }

    SocialGraph path(false);
    path.add_edge("a", "b");
    path.add_edge("b", "c");
    CHECK(average_path_length(path) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));

    // two disconnected triangles: clustering 1.0, within-component distance 1
    SocialGraph two(false);
    for (auto [a, b] : {std::pair{"a", "b"}, {"b", "c"}, {"a", "c"},
                        {"x", "y"}, {"y", "z"}, {"x", "z"}})
        two.add_edge(a, b);
    CHECK(average_clustering_coefficient(two) == doctest::Approx(1.0));
    auto stats = path_stats(two);
    CHECK(stats.average_path_length == doctest::Approx(1.0));
    CHECK(stats.diameter == 1);
    CHECK(stats.reachable_pairs == 12);
}

TEST_CASE("path length errors when no two nodes are mutually reachable") {
    SocialGraph lonely(false);
    lonely.add_node("a");
    CHECK_THROWS_AS(average_path_length(lonely), DataError);
    lonely.add_node("b");  // still edgeless
    CHECK_THROWS_AS(average_path_length(lonely), DataError);
}

TEST_CASE("parallel kernels match the serial reference") {
    Rng rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        SocialGraph g = gnp_graph(40, 0.15, rng);
        CHECK(local_clustering_all(g) == ref::local_clustering_all(g));
        auto par = path_stats(g);
        auto ser = ref::path_stats(g);
        CHECK(par.average_path_length == ser.average_path_length);
        CHECK(par.diameter == ser.diameter);
        CHECK(par.reachable_pairs == ser.reachable_pairs);
    }
}

TEST_CASE("clustering and path metrics match brute force on random graphs") {
    Rng rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 5 + static_cast<int>(rng.uniform_u64(26));
        SocialGraph g = gnp_graph(n, 0.25, rng);
        auto coeffs = local_clustering_all(g);
        double mean = 0.0;
        for (int i = 0; i < n; ++i) {
            double brute = oracles::brute_local_clustering(g, i);
            CHECK(std::abs(coeffs[static_cast<std::size_t>(i)] - brute) <= 1e-12);
            mean += brute;
        }
        mean /= n;
        CHECK(std::abs(average_clustering_coefficient(g) - mean) <= 1e-12);

        auto oracle = oracles::path_oracle(g);
        if (oracle.pairs == 0) continue;
        auto stats = path_stats(g);
        CHECK(std::abs(stats.average_path_length - oracle.average) <= 1e-12);
        CHECK(stats.diameter == oracle.diameter);
        CHECK(stats.reachable_pairs == oracle.pairs);
    }
}

namespace {

Partition single_community(const SocialGraph& g) {
    std::map<std::string, int> m;
    for (const auto& id : g.nodes()) m[id] = 0;
    return Partition::from_map(m);
}

Partition singletons(const SocialGraph& g) {
    std::map<std::string, int> m;
    int next = 0;
    for (const auto& id : g.nodes()) m[id] = next++;
    return Partition::from_map(m);
}

SocialGraph two_triangles() {
    SocialGraph g(false);
    for (auto [a, b] : {std::pair{"a", "b"}, {"b", "c"}, {"a", "c"},
                        {"x", "y"}, {"y", "z"}, {"x", "z"}})
        g.add_edge(a, b);
    return g;
}

}  // namespace

TEST_CASE("modularity landmarks") {
    SUBCASE("single community is exactly zero") {
        Rng rng(3);
        for (int trial = 0; trial < 10; ++trial) {
            SocialGraph g = gnp_graph(12, 0.3, rng);
            if (g.edge_count() == 0) continue;
            CHECK(modularity(g, single_community(g)) == 0.0);
        }
    }
    SUBCASE("two disconnected triangles split by component give exactly 0.5") {
        SocialGraph g = two_triangles();
        std::map<std::string, int> split{{"a", 0}, {"b", 0}, {"c", 0},
                                          {"x", 1}, {"y", 1}, {"z", 1}};
        CHECK(modularity(g, Partition::from_map(split)) == 0.5);
    }
    SUBCASE("singletons formula holds") {
        Rng rng(9);
        for (int trial = 0; trial < 10; ++trial) {
            SocialGraph g = gnp_graph(10, 0.4, rng);
            if (g.edge_count() == 0) continue;
            double two_m = 2.0 * g.total_edge_weight();
            double expected = 0.0;
            for (int i = 0; i < 10; ++i) {
                double frac = g.weighted_degree(i) / two_m;
                expected -= frac * frac;
            }
            double q = modularity(g, singletons(g));
            CHECK(q == doctest::Approx(expected).epsilon(1e-12));
            CHECK(q <= 0.0);
        }
    }
    SUBCASE("empty-edge graph is an error") {
        SocialGraph g(false);
        g.add_node("a");
        g.add_node("b");
        CHECK_THROWS_AS(modularity(g, single_community(g)), DataError);
    }
    SUBCASE("partition must be total") {
        SocialGraph g = two_triangles();
        std::map<std::string, int> partial{{"a", 0}};
        Partition p;
        p.community = partial;
        p.community_count = 1;
        CHECK_THROWS_AS(modularity(g, p), DataError);
    }
}

TEST_CASE("modularity equals the brute-force double sum on small random graphs") {
    Rng rng(123);
    int tested = 0;
    while (tested < 25) {
        int n = 3 + static_cast<int>(rng.uniform_u64(6));  // n in [3, 8]
        SocialGraph g = gnp_graph(n, 0.5, rng);
        if (g.edge_count() == 0) continue;
        // random partition
        std::map<std::string, int> assign;
        for (const auto& id : g.nodes())
            assign[id] = static_cast<int>(rng.uniform_u64(3));
        Partition p = Partition::from_map(assign);
        CHECK(modularity(g, p) == doctest::Approx(oracles::brute_modularity(g, p)).epsilon(1e-12));
        ++tested;
    }
}

TEST_CASE("weighted modularity matches the brute sum") {
    Rng rng(321);
    SocialGraph g(false);
    for (int i = 0; i < 7; ++i) g.add_node(node_name(i));
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
            if (rng.bernoulli(0.5)) g.add_edge(node_name(i), node_name(j), 1.0 + rng.uniform_double() * 4.0);
    REQUIRE(g.edge_count() > 0);
    std::map<std::string, int> assign;
    for (const auto& id : g.nodes()) assign[id] = static_cast<int>(rng.uniform_u64(2));
    Partition p = Partition::from_map(assign);
    CHECK(modularity(g, p) == doctest::Approx(oracles::brute_modularity(g, p)).epsilon(1e-12));
}

TEST_CASE("metrics are invariant under node relabeling") {
    Rng rng(55);
    SocialGraph g = gnp_graph(15, 0.3, rng);
    // relabel by permuting names and inserting in a different order
    std::vector<int> perm(15);
    for (int i = 0; i < 15; ++i) perm[static_cast<std::size_t>(i)] = i;
    rng.shuffle(perm);
    SocialGraph h(false);
    for (int i = 14; i >= 0; --i) h.add_node(node_name(perm[static_cast<std::size_t>(i)]));
    for (const auto& [a, b, w] : g.sorted_edges())
        h.add_edge(node_name(perm[static_cast<std::size_t>(g.index_of(a))]),
                   node_name(perm[static_cast<std::size_t>(g.index_of(b))]), w);

    auto cg = local_clustering_all(g);
    for (int i = 0; i < 15; ++i) {
        double hv = local_clustering_coefficient(
            h, node_name(perm[static_cast<std::size_t>(i)]));
        CHECK(cg[static_cast<std::size_t>(i)] == doctest::Approx(hv).epsilon(1e-15));
    }
    if (g.edge_count() > 0) {
        CHECK(average_clustering_coefficient(g) ==
              doctest::Approx(average_clustering_coefficient(h)).epsilon(1e-15));
        CHECK(average_path_length(g) == doctest::Approx(average_path_length(h)).epsilon(1e-15));
    }
}

TEST_CASE("louvain finds the planted structure") {
    SUBCASE("two disconnected triangles: exactly the component split, Q = 0.5") {
        SocialGraph g = two_triangles();
        auto [p, q] = louvain_communities(g, 1);
        CHECK(q == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(p.community_count == 2);
        CHECK(p.community.at("a") == p.community.at("b"));
        CHECK(p.community.at("a") == p.community.at("c"));
        CHECK(p.community.at("x") == p.community.at("y"));
        CHECK(p.community.at("x") == p.community.at("z"));
        CHECK(p.community.at("a") != p.community.at("x"));
        // matches the exhaustive optimum at this size
        CHECK(q == doctest::Approx(oracles::best_modularity_exhaustive(g)).epsilon(1e-12));
    }
    SUBCASE("complete graph: Q = 0 is the best achievable") {
        SocialGraph g = complete_graph(6);
        auto [p, q] = louvain_communities(g, 1);
        double best = oracles::best_modularity_exhaustive(g);
        CHECK(best == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(q <= 0.0 + 1e-12);
        CHECK(q >= best - 1e-12);
    }
    SUBCASE("ring of four 5-cliques with single bridges recovers the cliques") {
        SocialGraph g(false);
        auto member = [](int clique, int i) {
            return "c" + std::to_string(clique) + "_" + std::to_string(i);
        };
        for (int c = 0; c < 4; ++c)
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j) g.add_edge(member(c, i), member(c, j));
        for (int c = 0; c < 4; ++c) g.add_edge(member(c, 0), member((c + 1) % 4, 1));

        auto [p, q] = louvain_communities(g, 3);
        CHECK(p.community_count == 4);
        for (int c = 0; c < 4; ++c)
            for (int i = 1; i < 5; ++i)
                CHECK(p.community.at(member(c, i)) == p.community.at(member(c, 0)));
        CHECK(q > 0.6);  // the planted split scores (4*10)/44 - 4*(23/88)^2
    }
    SUBCASE("returned Q always equals modularity of the returned partition") {
        Rng rng(8);
        for (int trial = 0; trial < 10; ++trial) {
            SocialGraph g = gnp_graph(12, 0.3, rng);
            if (g.edge_count() == 0) continue;
            auto [p, q] = louvain_communities(g, trial);
            CHECK(q == modularity(g, p));
            CHECK(q >= modularity(g, singletons(g)) - 1e-12);
        }
    }
    SUBCASE("deterministic for a fixed seed") {
        Rng rng(17);
        SocialGraph g = gnp_graph(25, 0.2, rng);
        auto [p1, q1] = louvain_communities(g, 42);
        auto [p2, q2] = louvain_communities(g, 42);
        CHECK(p1.community == p2.community);
        CHECK(q1 == q2);
    }
}

TEST_CASE("shifted power fit recovers the reference curve") {
    SUBCASE("noiseless samples recover (a, b, c) within 1e-3") {
        std::vector<std::pair<double, double>> pts;
        for (int x = 1; x <= 60; ++x)
            pts.emplace_back(x, -52.0 * std::pow(x, -0.5) + 58.0);
        CurveFit fit = fit_shifted_power(pts);
        CHECK(std::abs(fit.a - (-52.0)) < 1e-3);
        CHECK(std::abs(fit.b - (-0.5)) < 1e-3);
        CHECK(std::abs(fit.c - 58.0) < 1e-3);
        CHECK(fit.r_squared >= 0.999);
    }
    SUBCASE("constant y hits the documented convention") {
        std::vector<std::pair<double, double>> pts = {{1, 7}, {2, 7}, {3, 7}, {4, 7}};
        CurveFit fit = fit_shifted_power(pts);
        CHECK(fit.a == 0.0);
        CHECK(fit.b == 0.0);
        CHECK(fit.c == doctest::Approx(7.0));
        CHECK(fit.r_squared == 1.0);
    }
    SUBCASE("noisy samples stay near the reference exponent") {
        Rng rng(1234);
        int ok_b = 0, ok_r2 = 0;
        const int runs = 30;
        for (int run = 0; run < runs; ++run) {
            std::vector<std::pair<double, double>> pts;
            for (int x = 1; x <= 60; ++x)
                pts.emplace_back(x, -52.0 * std::pow(x, -0.5) + 58.0 + rng.normal(0.0, 0.5));
            CurveFit fit = fit_shifted_power(pts);
            if (fit.b >= -0.55 && fit.b <= -0.45) ++ok_b;
            if (fit.r_squared >= 0.98) ++ok_r2;
        }
        CHECK(ok_b >= runs - 1);
        CHECK(ok_r2 >= runs - 1);
    }
    SUBCASE("errors on degenerate inputs") {
        CHECK_THROWS_AS(fit_shifted_power({{1, 2}, {2, 3}}), DataError);
        CHECK_THROWS_AS(fit_shifted_power({{1, 2}, {1, 3}, {1, 4}, {2, 5}}), DataError);
        CHECK_THROWS_AS(fit_shifted_power({{0.0, 2}, {1, 3}, {2, 4}}), DataError);
        CHECK_THROWS_AS(fit_shifted_power({{-1.0, 2}, {1, 3}, {2, 4}}), DataError);
    }
    SUBCASE("returned b is locally optimal") {
        Rng rng(77);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<std::pair<double, double>> pts;
            double a = -10.0 - rng.uniform_double() * 50.0;
            double b = -1.5 + rng.uniform_double();
            double c = rng.uniform_double() * 40.0;
            for (int x = 1; x <= 40; ++x)
                pts.emplace_back(x, a * std::pow(x, b) + c + rng.normal(0, 0.1));
            CurveFit fit = fit_shifted_power(pts);
            auto sse_at = [&](double bb) {
                // independent inner solve: plain normal equations
                double n = static_cast<double>(pts.size());
                double su = 0, suu = 0, sy = 0, suy = 0;
                for (auto [x, y] : pts) {
                    double u = std::pow(x, bb);
                    su += u;
                    suu += u * u;
                    sy += y;
                    suy += u * y;
                }
                double det = n * suu - su * su;
                double aa = (n * suy - su * sy) / det;
                double cc = (suu * sy - su * suy) / det;
                double sse = 0;
                for (auto [x, y] : pts) {
                    double r = y - aa * std::pow(x, bb) - cc;
                    sse += r * r;
                }
                return sse;
            };
            double at = sse_at(fit.b);
            CHECK(at <= sse_at(fit.b + 1e-4) + 1e-9);
            CHECK(at <= sse_at(fit.b - 1e-4) + 1e-9);
        }
    }
}

TEST_CASE("erdos-renyi baseline has the requested size") {
    SocialGraph g = erdos_renyi(30, 60, 5);
    CHECK(g.node_count() == 30);
    CHECK(g.edge_count() == 60);
    CHECK_THROWS_AS(erdos_renyi(4, 100, 5), DataError);
    SocialGraph dense = erdos_renyi(10, 44, 5);  // close to the 45 maximum
    CHECK(dense.edge_count() == 44);
}

TEST_CASE("graph intersection semantics") {
    SocialGraph g1(false), g2(false);
    for (const char* n : {"a", "b", "c", "d"}) {
        g1.add_node(n);
        g2.add_node(n);
    }
    g1.add_edge("a", "b");
    g1.add_edge("b", "c");
    g2.add_edge("b", "c");
    g2.add_edge("c", "d");

    SocialGraph i12 = graph_intersection(g1, g2);
    CHECK(i12.edge_count() == 1);
    CHECK(i12.has_edge("b", "c"));

    SUBCASE("identity") {
        SocialGraph ii = graph_intersection(g1, g1);
        CHECK(ii.sorted_edges() == g1.sorted_edges());
    }
    SUBCASE("commutative") {
        CHECK(graph_intersection(g1, g2).sorted_edges() ==
              graph_intersection(g2, g1).sorted_edges());
    }
    SUBCASE("disjoint edge sets intersect to nothing") {
        SocialGraph g3(false);
        for (const char* n : {"a", "b", "c", "d"}) g3.add_node(n);
        g3.add_edge("a", "d");
        CHECK(graph_intersection(g1, g3).edge_count() == 0);
    }
    SUBCASE("universe mismatch is an error") {
        SocialGraph g4(false);
        g4.add_node("a");
        CHECK_THROWS_AS(graph_intersection(g1, g4), DataError);
    }
}

TEST_CASE("self-loops and negative weights are rejected") {
    SocialGraph g(false);
    CHECK_THROWS_AS(g.add_edge("a", "a"), DataError);
    CHECK_THROWS_AS(g.add_edge("a", "b", -1.0), DataError);
}
