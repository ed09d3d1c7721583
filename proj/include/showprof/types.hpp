#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Domain types shared by the whole pipeline. All types are immutable after
// construction by convention and safe to share read-only across workers.

namespace showprof {

struct Microblog {
    std::string id;
    std::string author_id;
    std::string author_name;
    std::string author_ip;  // retained verbatim, used by no metric
    std::int64_t timestamp = 0;  // seconds since epoch, UTC
    std::optional<std::string> root_id;  // original post if this is a repost/comment
    std::string content;

    auto operator<=>(const Microblog&) const = default;
};

struct UserProfile {
    std::string user_id;
    std::optional<int> age;             // years, absent when unknown
    std::optional<std::string> region;  // absent when unknown
    bool is_vip = false;                // institutional account flag
    bool synthetic = false;             // stub created by ingest for an unknown author

    auto operator<=>(const UserProfile&) const = default;
};

struct FollowEdge {
    std::string follower;
    std::string followee;

    auto operator<=>(const FollowEdge&) const = default;
};

// Half-open broadcast interval [start, end).
struct Round {
    std::int64_t start = 0;
    std::int64_t end = 0;

    auto operator<=>(const Round&) const = default;
};

struct TvShow {
    std::string show_id;
    std::string title;
    std::vector<std::string> labels;  // exactly 3 category labels
    std::vector<std::string> actors;
    // actor name -> microblogging account user_id, when the actor has one
    std::map<std::string, std::optional<std::string>> actor_accounts;
    std::vector<std::string> topics;  // keywords: title, role names, ...
    std::vector<Round> rounds;        // non-overlapping, sorted
    std::optional<std::uint64_t> view_count;

    auto operator<=>(const TvShow&) const = default;
};

struct Dataset {
    std::vector<Microblog> microblogs;
    std::vector<UserProfile> users;
    std::vector<FollowEdge> follows;
    std::vector<TvShow> shows;

    auto operator<=>(const Dataset&) const = default;
};

enum class SentimentLabel { positive, negative, non_sentiment };

inline const char* to_string(SentimentLabel s) {
    switch (s) {
        case SentimentLabel::positive: return "positive";
        case SentimentLabel::negative: return "negative";
        default: return "non_sentiment";
    }
}

}  // namespace showprof
