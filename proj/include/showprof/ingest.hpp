#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include "showprof/json.hpp"
#include "showprof/types.hpp"

// Trace file ingest. The on-disk format is JSON-lines, one record per
// line, field names identical to the type field names, timestamps as
// integer epoch seconds.

namespace showprof {

struct DatasetPaths {
    std::filesystem::path microblogs;
    std::filesystem::path users;
    std::filesystem::path follows;
    std::filesystem::path shows;

    // Conventional layout: <dir>/{microblogs,users,follows,shows}.jsonl
    static DatasetPaths in_dir(const std::filesystem::path& dir);
};

struct ParseStats {
    std::map<std::string, std::size_t> skipped_lines;  // filename -> bad-line count
    std::size_t synthesized_users = 0;

    std::size_t total_skipped() const;
};

struct ParseResult {
    Dataset dataset;
    ParseStats stats;
};

// Strict parse: the first malformed line, duplicate id, unparseable
// timestamp or record-invariant breach throws DataError naming the file,
// line and field. The returned dataset is sorted by record id, has stub
// profiles for unknown authors/follow endpoints, and passes
// validate_dataset cleanly.
Dataset parse_dataset(const DatasetPaths& paths);

// Lenient parse: bad lines (and duplicate records) are skipped and
// counted instead of failing.
ParseResult parse_dataset_lenient(const DatasetPaths& paths);

// Serialize one record as a single JSON line (no trailing newline).
Json microblog_to_json(const Microblog& m);
Json user_to_json(const UserProfile& u);
Json follow_to_json(const FollowEdge& f);
Json show_to_json(const TvShow& s);

// Write the four JSON-lines files into dir, records sorted by id.
// Serialize-then-parse yields an equal Dataset.
void write_dataset(const Dataset& dataset, const std::filesystem::path& dir);

}  // namespace showprof
