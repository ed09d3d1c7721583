#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "showprof/errors.hpp"
#include "showprof/ingest.hpp"
#include "showprof/synth.hpp"
#include "showprof/textnorm.hpp"
#include "showprof/validate.hpp"

using namespace showprof;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("showprof_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

void write(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

DatasetPaths minimal_paths(const TempDir& dir, const std::string& microblogs) {
    write(dir.path / "microblogs.jsonl", microblogs);
    write(dir.path / "users.jsonl",
          R"({"user_id":"u01","age":20,"region":"r01","is_vip":false})"
          "\n");
    write(dir.path / "follows.jsonl", "");
    write(dir.path / "shows.jsonl",
          R"({"show_id":"s01","title":"t","labels":["a","b","c"],"actors":[],"topics":["t"],"rounds":[]})"
          "\n");
    return DatasetPaths::in_dir(dir.path);
}

std::string file_bytes(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("three well-formed lines parse into three microblogs") {
    TempDir dir;
    auto paths = minimal_paths(
        dir,
        R"({"id":"m01","author_id":"u01","author_name":"n","author_ip":"ip","timestamp":10,"content":"x"})"
        "\n"
        R"({"id":"m02","author_id":"u01","author_name":"n","author_ip":"ip","timestamp":20,"content":"y"})"
        "\n"
        R"({"id":"m03","author_id":"u01","author_name":"n","author_ip":"ip","timestamp":30,"root_id":"m01","content":"z"})"
        "\n");
    Dataset d = parse_dataset(paths);
    REQUIRE(d.microblogs.size() == 3);
    CHECK(d.microblogs[2].root_id == "m01");
    CHECK(validate_dataset(d).clean());
}

TEST_CASE("missing content field names line and field") {
    TempDir dir;
    auto paths = minimal_paths(
        dir,
        R"({"id":"m01","author_id":"u01","author_name":"n","author_ip":"ip","timestamp":10,"content":"x"})"
        "\n"
        R"({"id":"m02","author_id":"u01","author_name":"n","author_ip":"ip","timestamp":20})"
        "\n");
    try {
        parse_dataset(paths);
        FAIL("expected DataError");
    } catch (const DataError& e) {
        std::string msg = e.what();
        CHECK(msg.find("microblogs.jsonl:2") != std::string::npos);
        CHECK(msg.find("content") != std::string::npos);
    }
}

TEST_CASE("duplicate microblog id reports both line numbers") {
    TempDir dir;
    auto paths = minimal_paths(
        dir,
        R"({"id":"m01","author_id":"u01","author_name":"n","author_ip":"ip","timestamp":10,"content":"x"})"
        "\n"
        R"({"id":"m01","author_id":"u01","author_name":"n","author_ip":"ip","timestamp":20,"content":"y"})"
        "\n");
    try {
        parse_dataset(paths);
        FAIL("expected DataError");
    } catch (const DataError& e) {
        std::string msg = e.what();
        CHECK(msg.find(":2") != std::string::npos);      // failing line
        CHECK(msg.find("line 1") != std::string::npos);  // first occurrence
        CHECK(msg.find("duplicate") != std::string::npos);
    }
}

TEST_CASE("unparseable timestamp is rejected by name") {
    TempDir dir;
    auto paths = minimal_paths(
        dir,
        R"({"id":"m01","author_id":"u01","author_name":"n","author_ip":"ip","timestamp":"soon","content":"x"})"
        "\n");
    CHECK_THROWS_WITH_AS(parse_dataset(paths),
                         doctest::Contains("timestamp"), DataError);
}

TEST_CASE("lenient mode skips and counts bad lines") {
    TempDir dir;
    auto paths = minimal_paths(
        dir,
        R"({"id":"m01","author_id":"u01","author_name":"n","author_ip":"ip","timestamp":10,"content":"x"})"
        "\n"
        "not json at all\n"
        R"({"id":"m03","author_id":"u01","author_name":"n","author_ip":"ip","timestamp":-4,"content":"y"})"
        "\n");
    ParseResult res = parse_dataset_lenient(paths);
    CHECK(res.dataset.microblogs.size() == 1);
    CHECK(res.stats.skipped_lines.at("microblogs.jsonl") == 2);
}

TEST_CASE("unknown authors get synthetic stubs") {
    TempDir dir;
    auto paths = minimal_paths(
        dir,
        R"({"id":"m01","author_id":"ghost","author_name":"n","author_ip":"ip","timestamp":10,"content":"x"})"
        "\n");
    Dataset d = parse_dataset(paths);
    bool found = false;
    for (const auto& u : d.users)
        if (u.user_id == "ghost") {
            found = true;
            CHECK(u.synthetic);
        }
    CHECK(found);
    CHECK(validate_dataset(d).clean());
}

TEST_CASE("dataset round-trips through serialization") {
    auto [d, gt] = generate_synthetic(SyntheticSpec{});
    TempDir dir;
    write_dataset(d, dir.path);
    Dataset reparsed = parse_dataset(DatasetPaths::in_dir(dir.path));
    CHECK(reparsed == d);
}

TEST_CASE("hand fixture round-trips through serialization") {
    Dataset d = fixtures::basic_dataset();
    // parse_dataset returns records sorted by id; sort the fixture the same way
    TempDir dir;
    write_dataset(d, dir.path);
    Dataset reparsed = parse_dataset(DatasetPaths::in_dir(dir.path));
    TempDir dir2;
    write_dataset(reparsed, dir2.path);
    for (const char* f : {"microblogs.jsonl", "users.jsonl", "follows.jsonl", "shows.jsonl"})
        CHECK(file_bytes(dir.path / f) == file_bytes(dir2.path / f));
}

TEST_CASE("generator is byte-identical for a fixed seed") {
    SyntheticSpec spec;
    spec.seed = 1;
    spec.n_users = 120;
    spec.n_shows = 4;
    spec.n_microblogs = 800;
    spec.planted_clusters = 2;
    spec.planted_transitions = {{"u00003", "s01", "s02", 3600}};
    spec.planted_round_overlaps = {{"s02", 7, 5, 2}};

    TempDir a, b;
    write_synthetic(spec, a.path);
    write_synthetic(spec, b.path);
    for (const char* f : {"microblogs.jsonl", "users.jsonl", "follows.jsonl", "shows.jsonl",
                          "ground_truth.json"})
        CHECK(file_bytes(a.path / f) == file_bytes(b.path / f));

    // different seed, different bytes
    spec.seed = 2;
    TempDir c;
    write_synthetic(spec, c.path);
    CHECK(file_bytes(a.path / "microblogs.jsonl") != file_bytes(c.path / "microblogs.jsonl"));
}

TEST_CASE("generated datasets validate cleanly") {
    for (std::uint64_t seed : {1ULL, 7ULL, 99ULL}) {
        SyntheticSpec spec;
        spec.seed = seed;
        spec.n_users = 150;
        spec.n_shows = 5;
        spec.n_microblogs = 1200;
        spec.planted_clusters = 2;
        auto [d, gt] = generate_synthetic(spec);
        CHECK(validate_dataset(d).clean());
        CHECK(d.microblogs.size() == spec.n_microblogs);
    }
}

TEST_CASE("planted transition is realized verbatim") {
    SyntheticSpec spec;
    spec.n_users = 60;
    spec.n_shows = 3;
    spec.n_microblogs = 300;
    spec.planted_clusters = 2;
    spec.planted_transitions = {{"u00001", "s01", "s02", 3600}};
    auto [d, gt] = generate_synthetic(spec);

    std::vector<const Microblog*> by_user;
    for (const auto& m : d.microblogs)
        if (m.author_id == "u00001") by_user.push_back(&m);
    REQUIRE(by_user.size() == 2);
    CHECK(by_user[1]->timestamp - by_user[0]->timestamp == 3600);
    CHECK(gt.attribution.at(by_user[0]->id).contains("s01"));
    CHECK(gt.attribution.at(by_user[1]->id).contains("s02"));
    // the planted topic string is literally contained
    bool has_topic = false;
    for (const auto& t : d.shows[0].topics)
        if (by_user[0]->content.find(t) != std::string::npos) has_topic = true;
    CHECK(has_topic);
}

TEST_CASE("degenerate sentiment mix plants only positive tokens") {
    SyntheticSpec spec;
    spec.n_users = 50;
    spec.n_shows = 2;
    spec.n_microblogs = 250;
    spec.planted_clusters = 2;
    spec.sentiment_mix = {1.0, 0.0, 0.0};
    auto [d, gt] = generate_synthetic(spec);

    auto contains_any = [](const std::string& content, const std::vector<std::string>& lex) {
        for (const auto& e : lex)
            if (content.find(e) != std::string::npos) return true;
        return false;
    };
    for (const auto& m : d.microblogs) {
        CHECK(contains_any(m.content, builtin_positive_lexicon()));
        CHECK(!contains_any(m.content, builtin_negative_lexicon()));
        CHECK(gt.sentiment.at(m.id) == SentimentLabel::positive);
    }
}

TEST_CASE("infeasible specs are rejected") {
    SyntheticSpec spec;
    spec.n_users = 10;
    spec.n_shows = 2;
    spec.n_microblogs = 100;

    SUBCASE("clusters above user count") {
        spec.planted_clusters = 11;
        CHECK_THROWS_AS(generate_synthetic(spec), DataError);
    }
    SUBCASE("clusters above show count") {
        spec.planted_clusters = 3;
        spec.n_shows = 2;
        CHECK_THROWS_AS(generate_synthetic(spec), DataError);
    }
    SUBCASE("mix does not sum to 1") {
        spec.sentiment_mix = {0.5, 0.2, 0.2};
        CHECK_THROWS_AS(generate_synthetic(spec), DataError);
    }
    SUBCASE("transition user outside population") {
        spec.planted_transitions = {{"u09999", "s01", "s02", 60}};
        CHECK_THROWS_AS(generate_synthetic(spec), DataError);
    }
    SUBCASE("plants exceed the post budget") {
        spec.planted_round_overlaps = {{"s01", 80, 80, 80}};
        CHECK_THROWS_AS(generate_synthetic(spec), DataError);
    }
}

TEST_CASE("ground truth serialization round-trips") {
    SyntheticSpec spec;
    spec.n_users = 60;
    spec.n_shows = 3;
    spec.n_microblogs = 400;
    spec.planted_clusters = 3;
    spec.planted_transitions = {{"u00002", "s02", "s03", 120}};
    spec.planted_round_overlaps = {{"s01", 4, 3, 2}};
    auto [d, gt] = generate_synthetic(spec);
    GroundTruth reparsed = GroundTruth::from_json(gt.to_json());
    CHECK(reparsed.attribution == gt.attribution);
    CHECK(reparsed.user_cluster == gt.user_cluster);
    CHECK(reparsed.sentiment == gt.sentiment);
    CHECK(reparsed.round_overlap == gt.round_overlap);
    CHECK(reparsed.viewer_topology == gt.viewer_topology);
    CHECK(reparsed.transitions == gt.transitions);
    CHECK(reparsed.noise_gap_floor == gt.noise_gap_floor);
}

TEST_CASE("normalization folds case and composes NFC") {
    CHECK(normalize_fold("MAFUYA") == "mafuya");
    CHECK(normalize_fold("Cafe\xCC\x81") == normalize_fold("Caf\xC3\xA9"));  // e+combining vs é
    CHECK(contains_norm(normalize_fold("Watching MAFUYA now"), normalize_fold("mafuya")));
}
