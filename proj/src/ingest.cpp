#include "showprof/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "showprof/errors.hpp"
#include "showprof/log.hpp"
#include "showprof/validate.hpp"

namespace showprof {

DatasetPaths DatasetPaths::in_dir(const std::filesystem::path& dir) {
    return {dir / "microblogs.jsonl", dir / "users.jsonl", dir / "follows.jsonl",
            dir / "shows.jsonl"};
}

std::size_t ParseStats::total_skipped() const {
    std::size_t n = 0;
    for (const auto& [_, c] : skipped_lines) n += c;
    return n;
}

namespace {

struct LineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] void fail_field(const std::string& field, const std::string& why) {
    throw LineError("field '" + field + "': " + why);
}

const Json& require(const Json& j, const char* field) {
    auto it = j.find(field);
    if (it == j.end()) fail_field(field, "missing");
    return *it;
}

std::string require_string(const Json& j, const char* field) {
    const Json& v = require(j, field);
    if (!v.is_string()) fail_field(field, "expected a string");
    return v.get<std::string>();
}

std::int64_t require_timestamp(const Json& j, const char* field) {
    const Json& v = require(j, field);
    if (!v.is_number_integer()) fail_field(field, "unparseable timestamp (integer epoch seconds required)");
    return v.get<std::int64_t>();
}

Microblog parse_microblog(const Json& j) {
    Microblog m;
    m.id = require_string(j, "id");
    m.author_id = require_string(j, "author_id");
    m.author_name = require_string(j, "author_name");
    m.author_ip = require_string(j, "author_ip");
    m.timestamp = require_timestamp(j, "timestamp");
    if (m.timestamp < 0) fail_field("timestamp", "negative");
    if (auto it = j.find("root_id"); it != j.end() && !it->is_null()) {
        if (!it->is_string()) fail_field("root_id", "expected a string");
        m.root_id = it->get<std::string>();
        if (*m.root_id == m.id) fail_field("root_id", "equals id");
    }
    m.content = require_string(j, "content");
    return m;
}

UserProfile parse_user(const Json& j) {
    UserProfile u;
    u.user_id = require_string(j, "user_id");
    if (auto it = j.find("age"); it != j.end() && !it->is_null()) {
        if (!it->is_number_integer()) fail_field("age", "expected an integer");
        u.age = it->get<int>();
        if (*u.age < 1 || *u.age > 120) fail_field("age", "outside [1, 120]");
    }
    if (auto it = j.find("region"); it != j.end() && !it->is_null()) {
        if (!it->is_string()) fail_field("region", "expected a string");
        u.region = it->get<std::string>();
    }
    if (auto it = j.find("is_vip"); it != j.end() && !it->is_null()) {
        if (!it->is_boolean()) fail_field("is_vip", "expected a boolean");
        u.is_vip = it->get<bool>();
    }
    if (auto it = j.find("synthetic"); it != j.end() && !it->is_null()) {
        if (!it->is_boolean()) fail_field("synthetic", "expected a boolean");
        u.synthetic = it->get<bool>();
    }
    return u;
}

FollowEdge parse_follow(const Json& j) {
    FollowEdge f;
    f.follower = require_string(j, "follower");
    f.followee = require_string(j, "followee");
    if (f.follower == f.followee) fail_field("followee", "equals follower");
    return f;
}

TvShow parse_show(const Json& j) {
    TvShow s;
    s.show_id = require_string(j, "show_id");
    s.title = require_string(j, "title");
    const Json& labels = require(j, "labels");
    if (!labels.is_array()) fail_field("labels", "expected an array");
    for (const auto& l : labels) {
        if (!l.is_string()) fail_field("labels", "expected strings");
        s.labels.push_back(l.get<std::string>());
    }
    if (s.labels.size() != 3)
        fail_field("labels", "expected exactly 3 labels, got " + std::to_string(s.labels.size()));
    const Json& actors = require(j, "actors");
    if (!actors.is_array()) fail_field("actors", "expected an array");
    for (const auto& a : actors) s.actors.push_back(a.get<std::string>());
    if (auto it = j.find("actor_accounts"); it != j.end() && !it->is_null()) {
        if (!it->is_object()) fail_field("actor_accounts", "expected an object");
        for (const auto& [name, v] : it->items()) {
            if (std::find(s.actors.begin(), s.actors.end(), name) == s.actors.end())
                fail_field("actor_accounts", "key '" + name + "' not in actor list");
            if (v.is_null())
                s.actor_accounts[name] = std::nullopt;
            else if (v.is_string())
                s.actor_accounts[name] = v.get<std::string>();
            else
                fail_field("actor_accounts", "values must be string or null");
        }
    }
    const Json& topics = require(j, "topics");
    if (!topics.is_array()) fail_field("topics", "expected an array");
    for (const auto& t : topics) s.topics.push_back(t.get<std::string>());
    const Json& rounds = require(j, "rounds");
    if (!rounds.is_array()) fail_field("rounds", "expected an array");
    for (const auto& r : rounds) {
        if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() ||
            !r[1].is_number_integer())
            fail_field("rounds", "each round must be an integer pair [start, end)");
        Round round{r[0].get<std::int64_t>(), r[1].get<std::int64_t>()};
        if (round.start >= round.end) fail_field("rounds", "empty or inverted interval");
        s.rounds.push_back(round);
    }
    for (std::size_t i = 1; i < s.rounds.size(); ++i)
        if (s.rounds[i - 1].end > s.rounds[i].start)
            fail_field("rounds", "rounds overlap or are out of order");
    if (auto it = j.find("view_count"); it != j.end() && !it->is_null()) {
        if (!it->is_number_integer() || it->get<std::int64_t>() < 0)
            fail_field("view_count", "expected a nonnegative integer");
        s.view_count = it->get<std::uint64_t>();
    }
    return s;
}

// Parses one JSON-lines file. `key` extracts the record id used for
// duplicate detection; in strict mode any problem throws DataError with
// file, line and (when known) field.
template <typename T, typename ParseFn, typename KeyFn>
std::vector<T> parse_file(const std::filesystem::path& path, ParseFn parse, KeyFn key,
                          bool lenient, ParseStats& stats) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path.string());
    std::vector<T> out;
    std::unordered_map<std::string, std::size_t> seen;  // id -> line number
    std::string line;
    std::size_t lineno = 0;
    const std::string fname = path.filename().string();
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            Json j = Json::parse(line);
            if (!j.is_object()) throw LineError("record is not a JSON object");
            T rec = parse(j);
            auto [it, inserted] = seen.try_emplace(key(rec), lineno);
            if (!inserted)
                throw LineError("duplicate id '" + key(rec) + "' (first seen at line " +
                                std::to_string(it->second) + ")");
            out.push_back(std::move(rec));
        } catch (const Json::parse_error& e) {
            if (!lenient)
                throw DataError(fname + ":" + std::to_string(lineno) + ": malformed JSON: " +
                                e.what());
            ++stats.skipped_lines[fname];
        } catch (const LineError& e) {
            if (!lenient)
                throw DataError(fname + ":" + std::to_string(lineno) + ": " + e.what());
            ++stats.skipped_lines[fname];
        }
    }
    return out;
}

ParseResult parse_impl(const DatasetPaths& paths, bool lenient) {
    ParseResult res;
    Dataset& d = res.dataset;
    d.microblogs = parse_file<Microblog>(
        paths.microblogs, parse_microblog, [](const Microblog& m) { return m.id; }, lenient,
        res.stats);
    d.users = parse_file<UserProfile>(
        paths.users, parse_user, [](const UserProfile& u) { return u.user_id; }, lenient,
        res.stats);
    d.follows = parse_file<FollowEdge>(
        paths.follows, parse_follow,
        [](const FollowEdge& f) { return f.follower + "\x1f" + f.followee; }, lenient,
        res.stats);
    d.shows = parse_file<TvShow>(
        paths.shows, parse_show, [](const TvShow& s) { return s.show_id; }, lenient, res.stats);

    // Stub profiles so graph operations never dangle on unknown users.
    std::unordered_set<std::string> known;
    for (const auto& u : d.users) known.insert(u.user_id);
    std::set<std::string> missing;
    for (const auto& m : d.microblogs)
        if (!known.contains(m.author_id)) missing.insert(m.author_id);
    for (const auto& f : d.follows) {
        if (!known.contains(f.follower)) missing.insert(f.follower);
        if (!known.contains(f.followee)) missing.insert(f.followee);
    }
    for (const auto& id : missing) {
        UserProfile stub;
        stub.user_id = id;
        stub.synthetic = true;
        d.users.push_back(std::move(stub));
        ++res.stats.synthesized_users;
    }

    // Deterministic assembly regardless of file order.
    std::sort(d.microblogs.begin(), d.microblogs.end(),
              [](const Microblog& a, const Microblog& b) { return a.id < b.id; });
    std::sort(d.users.begin(), d.users.end(),
              [](const UserProfile& a, const UserProfile& b) { return a.user_id < b.user_id; });
    std::sort(d.follows.begin(), d.follows.end());
    std::sort(d.shows.begin(), d.shows.end(),
              [](const TvShow& a, const TvShow& b) { return a.show_id < b.show_id; });

    ValidationReport rep = validate_dataset(d);
    if (!rep.clean())
        throw DataError("dataset fails validation: " + rep.violations.front().locator + " [" +
                        rep.violations.front().rule + "] " + rep.violations.front().message);
    if (res.stats.total_skipped() > 0)
        log::warn("lenient parse skipped %zu bad line(s)", res.stats.total_skipped());
    return res;
}

}  // namespace

Dataset parse_dataset(const DatasetPaths& paths) { return parse_impl(paths, false).dataset; }

ParseResult parse_dataset_lenient(const DatasetPaths& paths) { return parse_impl(paths, true); }

Json microblog_to_json(const Microblog& m) {
    Json j;
    j["id"] = m.id;
    j["author_id"] = m.author_id;
    j["author_name"] = m.author_name;
    j["author_ip"] = m.author_ip;
    j["timestamp"] = m.timestamp;
    if (m.root_id) j["root_id"] = *m.root_id;
    j["content"] = m.content;
    return j;
}

Json user_to_json(const UserProfile& u) {
    Json j;
    j["user_id"] = u.user_id;
    if (u.age) j["age"] = *u.age;
    if (u.region) j["region"] = *u.region;
    j["is_vip"] = u.is_vip;
    if (u.synthetic) j["synthetic"] = true;
    return j;
}

Json follow_to_json(const FollowEdge& f) {
    Json j;
    j["follower"] = f.follower;
    j["followee"] = f.followee;
    return j;
}

Json show_to_json(const TvShow& s) {
    Json j;
    j["show_id"] = s.show_id;
    j["title"] = s.title;
    j["labels"] = s.labels;
    j["actors"] = s.actors;
    Json accounts = Json::object();
    for (const auto& [name, acc] : s.actor_accounts) {
        if (acc)
            accounts[name] = *acc;
        else
            accounts[name] = nullptr;
    }
    j["actor_accounts"] = accounts;
    j["topics"] = s.topics;
    Json rounds = Json::array();
    for (const auto& r : s.rounds) rounds.push_back(Json::array({r.start, r.end}));
    j["rounds"] = rounds;
    if (s.view_count) j["view_count"] = *s.view_count;
    return j;
}

void write_dataset(const Dataset& dataset, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    Dataset d = dataset;
    std::sort(d.microblogs.begin(), d.microblogs.end(),
              [](const Microblog& a, const Microblog& b) { return a.id < b.id; });
    std::sort(d.users.begin(), d.users.end(),
              [](const UserProfile& a, const UserProfile& b) { return a.user_id < b.user_id; });
    std::sort(d.follows.begin(), d.follows.end());
    std::sort(d.shows.begin(), d.shows.end(),
              [](const TvShow& a, const TvShow& b) { return a.show_id < b.show_id; });

    auto write_lines = [&](const std::filesystem::path& path, auto&& records, auto&& to_json) {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw DataError("cannot write " + path.string());
        for (const auto& r : records) out << to_json(r).dump() << '\n';
    };
    write_lines(dir / "microblogs.jsonl", d.microblogs, microblog_to_json);
    write_lines(dir / "users.jsonl", d.users, user_to_json);
    write_lines(dir / "follows.jsonl", d.follows, follow_to_json);
    write_lines(dir / "shows.jsonl", d.shows, show_to_json);
}

}  // namespace showprof
