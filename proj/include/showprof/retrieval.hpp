#pragma once

#include <compare>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "showprof/types.hpp"

// Joint actor + topic retrieval with repost/comment seed expansion.
// Matching is substring-based on NFC-normalized, case-folded text; no
// tokenization. A microblog may belong to corpora of multiple shows.

namespace showprof {

struct Provenance {
    enum class Kind { actor_match, topic_match, expansion };
    Kind kind = Kind::actor_match;
    std::string detail;  // matched keyword or the seed (root) microblog id

    auto operator<=>(const Provenance&) const = default;

    std::string to_string() const;
    static Provenance parse(const std::string& tag);
};

struct ShowCorpus {
    std::string show_id;
    std::set<std::string> members;  // microblog ids
    std::map<std::string, std::set<Provenance>> provenance;  // per member

    bool operator==(const ShowCorpus&) const = default;
};

// Shared read-only index over a dataset: normalized contents (built in
// parallel), author and repost-children lookups. Build once, reuse across
// shows and workers.
class RetrievalContext {
public:
    explicit RetrievalContext(const Dataset& dataset);

    const Dataset& dataset() const { return *dataset_; }
    const std::vector<std::string>& content_norm() const { return content_norm_; }
    const std::unordered_map<std::string, std::vector<std::size_t>>& by_author() const {
        return by_author_;
    }
    const std::unordered_map<std::string, std::vector<std::size_t>>& children() const {
        return children_;
    }

private:
    const Dataset* dataset_;
    std::vector<std::string> content_norm_;  // by microblog index
    std::unordered_map<std::string, std::vector<std::size_t>> by_author_;
    std::unordered_map<std::string, std::vector<std::size_t>> children_;  // root id -> indices
};

// Microblogs authored by the show's linked actor accounts.
std::set<std::string> retrieve_actor_microblogs(const TvShow& show, const Dataset& dataset);
std::set<std::string> retrieve_actor_microblogs(const TvShow& show, const RetrievalContext& ctx);

// Microblogs whose content contains >= 1 topic keyword as a contiguous
// substring after normalization; every matched keyword is reported (in
// its original spelling). Throws DataError when the show has no topics.
std::map<std::string, std::vector<std::string>> retrieve_topic_microblogs(
    const TvShow& show, const Dataset& dataset);
std::map<std::string, std::vector<std::string>> retrieve_topic_microblogs(
    const TvShow& show, const RetrievalContext& ctx);

// Least superset of seeds closed under "root in set => repost in set".
// Dangling root ids are ignored; traversal order does not matter.
std::set<std::string> expand_seed_set(const std::set<std::string>& seeds,
                                      const Dataset& dataset);
std::set<std::string> expand_seed_set(const std::set<std::string>& seeds,
                                      const RetrievalContext& ctx);

// Members = expansion of (actor matches + topic matches), with provenance
// tags per source. Every member whose root is also a member carries an
// expansion tag naming that root.
ShowCorpus retrieve_show_corpus(const TvShow& show, const Dataset& dataset);
ShowCorpus retrieve_show_corpus(const TvShow& show, const RetrievalContext& ctx);

// All shows, sorted by show id.
std::vector<ShowCorpus> retrieve_all_corpora(const Dataset& dataset);

// JSON-lines corpus file: one (show_id, microblog_id, provenance) record
// per line, sorted by (show_id, microblog_id).
void write_corpora(const std::vector<ShowCorpus>& corpora, const std::filesystem::path& file);
std::vector<ShowCorpus> read_corpora(const std::filesystem::path& file);

}  // namespace showprof
