#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "showprof/errors.hpp"
#include "showprof/profile_propagation.hpp"
#include "showprof/retrieval.hpp"
#include "showprof/rng.hpp"
#include "showprof/synth.hpp"

using namespace showprof;

namespace {

ShowCorpus corpus_of(const std::string& sid, const std::vector<std::string>& mids) {
    ShowCorpus c;
    c.show_id = sid;
    for (const auto& m : mids) {
        c.members.insert(m);
        c.provenance[m].insert({Provenance::Kind::topic_match, "t"});
    }
    return c;
}

}  // namespace

TEST_CASE("round overlap is plain set algebra over round authors") {
    Dataset d;
    for (const char* u : {"a", "b", "c"}) d.users.push_back(fixtures::user(u));
    TvShow show = fixtures::show("s", {"x", "y", "z"}, {"t"}, {},
                                 {{100, 200}, {300, 400}});
    d.shows = {show};
    d.microblogs = {
        fixtures::post("m1", "a", 150, "t"),   // round 1
        fixtures::post("m2", "b", 160, "t"),   // round 1
        fixtures::post("m3", "b", 350, "t"),   // round 2
        fixtures::post("m4", "c", 360, "t"),   // round 2
        fixtures::post("m5", "c", 999, "t"),   // outside all rounds: ignored
    };
    ShowCorpus c = corpus_of("s", {"m1", "m2", "m3", "m4", "m5"});
    RoundOverlap ro = round_overlap(show, c, d);
    CHECK(ro.only_first == 1);   // a
    CHECK(ro.only_second == 1);  // c
    CHECK(ro.both == 1);         // b

    SUBCASE("identical author sets overlap fully") {
        d.microblogs = {fixtures::post("m1", "a", 150, "t"),
                        fixtures::post("m2", "a", 350, "t"),
                        fixtures::post("m3", "b", 160, "t"),
                        fixtures::post("m4", "b", 360, "t")};
        RoundOverlap full = round_overlap(show, corpus_of("s", {"m1", "m2", "m3", "m4"}), d);
        CHECK(full.only_first == 0);
        CHECK(full.only_second == 0);
        CHECK(full.both == 2);
    }
    SUBCASE("interval boundaries are half-open") {
        d.microblogs = {fixtures::post("m1", "a", 200, "t"),   // = end of round 1: out
                        fixtures::post("m2", "b", 300, "t")};  // = start of round 2: in
        RoundOverlap edge = round_overlap(show, corpus_of("s", {"m1", "m2"}), d);
        CHECK(edge.only_first == 0);
        CHECK(edge.only_second == 1);
        CHECK(edge.both == 0);
    }
    SUBCASE("fewer than two rounds errors") {
        TvShow single = fixtures::show("s2", {"x", "y", "z"}, {"t"}, {}, {{100, 200}});
        CHECK_THROWS_AS(round_overlap(single, c, d), DataError);
    }
    SUBCASE("counts are permutation-invariant") {
        Rng rng(4);
        for (int i = 0; i < 5; ++i) {
            Dataset shuffled = d;
            rng.shuffle(shuffled.microblogs);
            RoundOverlap again = round_overlap(show, c, shuffled);
            CHECK(again.only_first == ro.only_first);
            CHECK(again.only_second == ro.only_second);
            CHECK(again.both == ro.both);
        }
    }
}

TEST_CASE("generator-planted round overlap is recovered exactly") {
    SyntheticSpec spec;
    spec.seed = 12;
    spec.n_users = 150;
    spec.n_shows = 3;
    spec.n_microblogs = 1200;
    spec.planted_clusters = 3;
    spec.planted_round_overlaps = {{"s01", 100, 80, 15}, {"s02", 5, 0, 3}};
    auto [d, gt] = generate_synthetic(spec);
    auto corpora = retrieve_all_corpora(d);
    std::map<std::string, const ShowCorpus*> by_show;
    for (const auto& c : corpora) by_show[c.show_id] = &c;
    for (const auto& show : d.shows) {
        if (!gt.round_overlap.contains(show.show_id)) continue;
        RoundOverlap ro = round_overlap(show, *by_show.at(show.show_id), d);
        const RoundOverlapCounts& want = gt.round_overlap.at(show.show_id);
        CHECK(ro.only_first == static_cast<std::size_t>(want.only_first));
        CHECK(ro.only_second == static_cast<std::size_t>(want.only_second));
        CHECK(ro.both == static_cast<std::size_t>(want.both));
    }
}

namespace {

Dataset two_show_dataset() {
    Dataset d;
    d.users = {fixtures::user("u1"), fixtures::user("u2")};
    d.shows = {fixtures::show("sA", {"a", "b", "c"}, {"ta"}),
               fixtures::show("sB", {"a", "b", "c"}, {"tb"})};
    return d;
}

}  // namespace

TEST_CASE("propagation graph counts windowed consecutive transitions") {
    Dataset d = two_show_dataset();
    d.microblogs = {fixtures::post("m1", "u1", 1000, "ta x"),
                    fixtures::post("m2", "u1", 1500, "tb x")};
    auto corpora = retrieve_all_corpora(d);

    SUBCASE("gap below the window creates the edge") {
        PropagationGraph g = propagation_graph(d.shows, corpora, d, 600);
        CHECK(g.graph.edge_count() == 1);
        CHECK(*g.graph.edge_weight("sA", "sB") == 1.0);
        CHECK(g.in_degree.at("sB") == 1);
        CHECK(g.in_degree.at("sA") == 0);
    }
    SUBCASE("gap above the window creates no edge") {
        PropagationGraph g = propagation_graph(d.shows, corpora, d, 400);
        CHECK(g.graph.edge_count() == 0);
    }
    SUBCASE("gap equal to the window counts") {
        PropagationGraph g = propagation_graph(d.shows, corpora, d, 500);
        CHECK(g.graph.edge_count() == 1);
    }
    SUBCASE("same-show consecutive posts never form an edge") {
        d.microblogs[1].content = "ta again";
        auto c2 = retrieve_all_corpora(d);
        PropagationGraph g = propagation_graph(d.shows, c2, d, 600);
        CHECK(g.graph.edge_count() == 0);
    }
    SUBCASE("each user contributes at most one to an edge weight") {
        d.microblogs.push_back(fixtures::post("m3", "u1", 1800, "ta x"));
        d.microblogs.push_back(fixtures::post("m4", "u1", 1900, "tb x"));
        auto c2 = retrieve_all_corpora(d);
        PropagationGraph g = propagation_graph(d.shows, c2, d, 600);
        CHECK(*g.graph.edge_weight("sA", "sB") == 1.0);  // two A->B hops, one user
    }
    SUBCASE("nonpositive window is rejected") {
        CHECK_THROWS_AS(propagation_graph(d.shows, corpora, d, 0), DataError);
    }
}

TEST_CASE("multi-show posts fan out unless strict mode drops them") {
    Dataset d = two_show_dataset();
    // m1 matches both shows; m2 matches only sB
    d.microblogs = {fixtures::post("m1", "u1", 1000, "ta tb both"),
                    fixtures::post("m2", "u1", 1200, "tb only")};
    auto corpora = retrieve_all_corpora(d);

    PropagationGraph loose = propagation_graph(d.shows, corpora, d, 600, false);
    CHECK(loose.graph.edge_count() == 1);  // sA->sB (sB->sB is no edge)
    CHECK(*loose.graph.edge_weight("sA", "sB") == 1.0);

    PropagationGraph strict = propagation_graph(d.shows, corpora, d, 600, true);
    CHECK(strict.graph.edge_count() == 0);  // the ambiguous post is dropped
    CHECK(strict.strict_attribution);
}

TEST_CASE("generator-planted transition scripts are recovered exactly") {
    SyntheticSpec spec;
    spec.seed = 9;
    spec.n_users = 120;
    spec.n_shows = 4;
    spec.n_microblogs = 900;
    spec.planted_clusters = 2;
    spec.planted_transitions = {
        {"u00001", "s01", "s02", 3600}, {"u00002", "s01", "s02", 7200},
        {"u00003", "s02", "s03", 1800}, {"u00004", "s03", "s04", 60},
        {"u00005", "s01", "s04", 90000},  // beyond the default window
    };
    auto [d, gt] = generate_synthetic(spec);
    auto corpora = retrieve_all_corpora(d);
    const std::int64_t window = 86400;
    PropagationGraph g = propagation_graph(d.shows, corpora, d, window);

    // oracle: aggregate the planted script for this window
    std::map<std::pair<std::string, std::string>, std::set<std::string>> expected;
    for (const auto& t : gt.transitions)
        if (t.gap_seconds <= window) expected[{t.show_from, t.show_to}].insert(t.user_id);
    CHECK(g.graph.edge_count() == expected.size());
    for (const auto& [edge, users] : expected) {
        auto w = g.graph.edge_weight(edge.first, edge.second);
        REQUIRE(w.has_value());
        CHECK(*w == static_cast<double>(users.size()));
    }

    SUBCASE("parallel extraction matches the serial reference") {
        PropagationGraph s = ref::propagation_graph(d.shows, corpora, d, window);
        CHECK(s.graph.sorted_edges() == g.graph.sorted_edges());
        CHECK(s.in_degree == g.in_degree);
    }
}

TEST_CASE("widening the window is edge-monotone on random fixtures") {
    Rng rng(246);
    for (int trial = 0; trial < 50; ++trial) {
        Dataset d;
        int n_shows = 3;
        d.shows = {fixtures::show("sA", {"a", "b", "c"}, {"ta"}),
                   fixtures::show("sB", {"a", "b", "c"}, {"tb"}),
                   fixtures::show("sC", {"a", "b", "c"}, {"tc"})};
        int n_users = 4 + static_cast<int>(rng.uniform_u64(4));
        for (int u = 0; u < n_users; ++u)
            d.users.push_back(fixtures::user("u" + std::to_string(u)));
        int mid = 0;
        for (int u = 0; u < n_users; ++u) {
            std::int64_t t = 1000;
            int posts = 2 + static_cast<int>(rng.uniform_u64(5));
            for (int p = 0; p < posts; ++p) {
                const char* topics[] = {"ta", "tb", "tc"};
                d.microblogs.push_back(fixtures::post(
                    "m" + std::to_string(mid++), "u" + std::to_string(u), t,
                    std::string(topics[rng.uniform_u64(n_shows)]) + " post"));
                t += 100 + static_cast<std::int64_t>(rng.uniform_u64(2000));
            }
        }
        auto corpora = retrieve_all_corpora(d);
        std::int64_t w1 = 200 + static_cast<std::int64_t>(rng.uniform_u64(800));
        std::int64_t w2 = w1 + static_cast<std::int64_t>(rng.uniform_u64(1500));
        PropagationGraph g1 = propagation_graph(d.shows, corpora, d, w1);
        PropagationGraph g2 = propagation_graph(d.shows, corpora, d, w2);
        for (const auto& [a, b, w] : g1.graph.sorted_edges()) {
            auto w_wide = g2.graph.edge_weight(a, b);
            REQUIRE(w_wide.has_value());
            CHECK(*w_wide >= w);  // weights are non-decreasing in the window
        }
    }
}

TEST_CASE("per-window outflow ranking") {
    Dataset d;
    d.users = {fixtures::user("u1")};
    d.shows = {fixtures::show("v2", {"a", "b", "c"}, {"t2"}),
               fixtures::show("v1", {"a", "b", "c"}, {"t1"}),
               fixtures::show("v4", {"a", "b", "c"}, {"t4"}),
               fixtures::show("v5", {"a", "b", "c"}, {"t5"})};

    auto graph_with = [&](std::vector<std::tuple<std::string, std::string, double>> edges) {
        PropagationGraph g;
        for (const auto& s : d.shows) g.graph.add_node(s.show_id);
        for (const auto& [a, b, w] : edges) g.graph.add_edge(a, b, w);
        return g;
    };

    SUBCASE("single outgoing edge has share 1") {
        std::vector<WindowedGraph> windows;
        windows.push_back({0, 100, graph_with({{"v2", "v1", 5.0}})});
        auto flows = propagation_event_report(windows, "v2");
        REQUIRE(flows.size() == 1);
        CHECK(*flows[0].top_destination == "v1");
        CHECK(*flows[0].top_share == 1.0);
    }
    SUBCASE("outflows 60/20/20 rank v1 first with share 0.6") {
        std::vector<WindowedGraph> windows;
        windows.push_back(
            {0, 100, graph_with({{"v2", "v1", 60.0}, {"v2", "v4", 20.0}, {"v2", "v5", 20.0}})});
        auto flows = propagation_event_report(windows, "v2");
        CHECK(*flows[0].top_destination == "v1");
        CHECK(*flows[0].top_share == doctest::Approx(0.6));
        REQUIRE(flows[0].ranking.size() == 3);
        CHECK(flows[0].ranking[1].dst == "v4");  // tie 20/20 broken by show id
        CHECK(flows[0].ranking[2].dst == "v5");
    }
    SUBCASE("zero outflow is flagged, not an error") {
        std::vector<WindowedGraph> windows;
        windows.push_back({0, 100, graph_with({{"v1", "v2", 3.0}})});
        auto flows = propagation_event_report(windows, "v2");
        CHECK(flows[0].no_outflow);
        CHECK(!flows[0].top_destination.has_value());
    }
    SUBCASE("missing focus show is an error") {
        std::vector<WindowedGraph> windows;
        windows.push_back({0, 100, graph_with({})});
        CHECK_THROWS_AS(propagation_event_report(windows, "nope"), DataError);
    }
}

TEST_CASE("windowed graphs only see posts inside their window") {
    Dataset d = two_show_dataset();
    d.microblogs = {fixtures::post("m1", "u1", 1000, "ta x"),
                    fixtures::post("m2", "u1", 1100, "tb x"),
                    fixtures::post("m3", "u2", 5000, "ta x"),
                    fixtures::post("m4", "u2", 5100, "tb x")};
    auto corpora = retrieve_all_corpora(d);
    PropagationGraph early = propagation_graph(d.shows, corpora, d, 600, false, 0, 2000);
    PropagationGraph late = propagation_graph(d.shows, corpora, d, 600, false, 2000, 9000);
    CHECK(*early.graph.edge_weight("sA", "sB") == 1.0);
    CHECK(*late.graph.edge_weight("sA", "sB") == 1.0);
    PropagationGraph all = propagation_graph(d.shows, corpora, d, 600);
    CHECK(*all.graph.edge_weight("sA", "sB") == 2.0);
}
