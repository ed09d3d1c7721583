#pragma once

#include <string>
#include <vector>

#include "showprof/types.hpp"

namespace showprof {

// One invariant breach. `locator` points at the offending record
// ("microblog:m001", "show:s02", ...), `rule` is a stable rule id.
struct Violation {
    std::string locator;
    std::string rule;
    std::string message;

    auto operator<=>(const Violation&) const = default;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool clean() const { return violations.empty(); }
};

// Checks every type invariant. Violations are data, not failures: the
// report is empty iff the dataset is well-formed. Never mutates the input,
// and the violation multiset does not depend on record order.
ValidationReport validate_dataset(const Dataset& dataset);

// Rule ids emitted by validate_dataset.
namespace rules {
inline constexpr const char* microblog_duplicate_id = "microblog.id.duplicate";
inline constexpr const char* microblog_self_root = "microblog.root.self";
inline constexpr const char* microblog_negative_timestamp = "microblog.timestamp.negative";
inline constexpr const char* microblog_unknown_author = "microblog.author.unknown";
inline constexpr const char* user_duplicate_id = "user.id.duplicate";
inline constexpr const char* user_age_range = "user.age.range";
inline constexpr const char* follow_self = "follow.self";
inline constexpr const char* follow_duplicate = "follow.pair.duplicate";
inline constexpr const char* follow_unknown_endpoint = "follow.endpoint.unknown";
inline constexpr const char* show_duplicate_id = "show.id.duplicate";
inline constexpr const char* show_label_count = "show.labels.count";
inline constexpr const char* show_round_interval = "show.rounds.interval";
inline constexpr const char* show_rounds_order = "show.rounds.order";
inline constexpr const char* show_unknown_account_actor = "show.actor_accounts.unknown_actor";
}  // namespace rules

}  // namespace showprof
