#include "showprof/validate.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace showprof {

namespace {

void add(ValidationReport& rep, std::string locator, const char* rule, std::string message) {
    rep.violations.push_back({std::move(locator), rule, std::move(message)});
}

}  // namespace

ValidationReport validate_dataset(const Dataset& dataset) {
    ValidationReport rep;

    std::unordered_set<std::string> user_ids;
    std::set<std::string> duplicate_users;
    for (const auto& u : dataset.users) {
        if (!user_ids.insert(u.user_id).second) duplicate_users.insert(u.user_id);
        if (u.age && (*u.age < 1 || *u.age > 120))
            add(rep, "user:" + u.user_id, rules::user_age_range,
                "age " + std::to_string(*u.age) + " outside [1, 120]");
    }
    for (const auto& id : duplicate_users)
        add(rep, "user:" + id, rules::user_duplicate_id, "user_id appears more than once");

    std::unordered_set<std::string> mb_ids;
    std::set<std::string> duplicate_mbs;
    for (const auto& m : dataset.microblogs) {
        if (!mb_ids.insert(m.id).second) duplicate_mbs.insert(m.id);
        if (m.root_id && *m.root_id == m.id)
            add(rep, "microblog:" + m.id, rules::microblog_self_root, "root_id equals id");
        if (m.timestamp < 0)
            add(rep, "microblog:" + m.id, rules::microblog_negative_timestamp,
                "timestamp is negative");
        if (!user_ids.contains(m.author_id))
            add(rep, "microblog:" + m.id, rules::microblog_unknown_author,
                "author " + m.author_id + " has no UserProfile");
    }
    for (const auto& id : duplicate_mbs)
        add(rep, "microblog:" + id, rules::microblog_duplicate_id, "id appears more than once");

    std::set<std::pair<std::string, std::string>> follow_pairs;
    std::set<std::pair<std::string, std::string>> duplicate_follows;
    for (const auto& f : dataset.follows) {
        std::string loc = "follow:" + f.follower + "->" + f.followee;
        if (f.follower == f.followee)
            add(rep, loc, rules::follow_self, "follower equals followee");
        if (!follow_pairs.insert({f.follower, f.followee}).second)
            duplicate_follows.insert({f.follower, f.followee});
        if (!user_ids.contains(f.follower))
            add(rep, loc, rules::follow_unknown_endpoint,
                "follower " + f.follower + " has no UserProfile");
        if (!user_ids.contains(f.followee))
            add(rep, loc, rules::follow_unknown_endpoint,
                "followee " + f.followee + " has no UserProfile");
    }
    for (const auto& [a, b] : duplicate_follows)
        add(rep, "follow:" + a + "->" + b, rules::follow_duplicate,
            "ordered pair appears more than once");

    std::unordered_set<std::string> show_ids;
    std::set<std::string> duplicate_shows;
    for (const auto& s : dataset.shows) {
        if (!show_ids.insert(s.show_id).second) duplicate_shows.insert(s.show_id);
        std::string loc = "show:" + s.show_id;
        if (s.labels.size() != 3)
            add(rep, loc, rules::show_label_count,
                "expected exactly 3 labels, got " + std::to_string(s.labels.size()));
        for (const auto& r : s.rounds)
            if (r.start >= r.end)
                add(rep, loc, rules::show_round_interval,
                    "round [" + std::to_string(r.start) + ", " + std::to_string(r.end) +
                        ") is empty or inverted");
        for (std::size_t i = 1; i < s.rounds.size(); ++i)
            if (s.rounds[i - 1].end > s.rounds[i].start)
                add(rep, loc, rules::show_rounds_order,
                    "rounds overlap or are out of order at index " + std::to_string(i));
        for (const auto& [actor, account] : s.actor_accounts)
            if (std::find(s.actors.begin(), s.actors.end(), actor) == s.actors.end())
                add(rep, loc, rules::show_unknown_account_actor,
                    "actor_accounts key '" + actor + "' not in actor list");
    }
    for (const auto& id : duplicate_shows)
        add(rep, "show:" + id, rules::show_duplicate_id, "show_id appears more than once");

    // Canonical order so permuting input records yields an identical report.
    std::sort(rep.violations.begin(), rep.violations.end());
    return rep;
}

}  // namespace showprof
