#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "showprof/json.hpp"
#include "showprof/profile_content.hpp"
#include "showprof/retrieval.hpp"
#include "showprof/types.hpp"

// Pipeline orchestration and report/export assembly. A report run is
// fully determined by (input bytes, parameters): reruns and different
// worker counts produce byte-identical files.

namespace showprof {

inline constexpr int kReportSchemaVersion = 1;

struct PipelineConfig {
    std::filesystem::path dataset_dir;
    std::filesystem::path out_dir;
    std::uint64_t seed = 7;
    int k = 3;
    std::size_t threshold = 1;
    std::int64_t window = 86400;
    std::filesystem::path lexicon;  // empty -> built-in test lexicon
    std::vector<std::string> aspects = {"user", "content", "social", "propagation"};
    bool strict_attribution = false;
    int threads = 1;  // 0 keeps the OpenMP default
    std::string focus_show;
    std::optional<std::int64_t> windows_from;
    int windows_count = 1;

    // key=value lines, '#' comments; unknown keys are usage errors.
    static PipelineConfig from_file(const std::filesystem::path& file);
    void apply_kv(const std::string& key, const std::string& value);
    void validate() const;
};

struct PipelineResult {
    Json report;
    std::filesystem::path report_path;
};

// ingest -> retrieval -> selected profilers -> report.json in out_dir.
// Stage errors carry the stage name; a failed run leaves no partial
// report file behind.
PipelineResult run_pipeline(const PipelineConfig& config);

// Section builders shared by run_pipeline and the per-aspect subcommands.
Json build_user_section(const Dataset& dataset, const std::vector<ShowCorpus>& corpora,
                        int k, std::uint64_t seed);
Json build_content_section(const Dataset& dataset, const std::vector<ShowCorpus>& corpora,
                           const SentimentLexicons& lex, std::size_t threshold,
                           std::uint64_t seed);
Json build_social_section(const Dataset& dataset, const std::vector<ShowCorpus>& corpora);
Json build_propagation_section(const Dataset& dataset, const std::vector<ShowCorpus>& corpora,
                               std::int64_t window, bool strict_attribution,
                               const std::string& focus_show,
                               std::optional<std::int64_t> windows_from, int windows_count);

// FNV-1a 64 content hash over the given files, order-sensitive.
std::string files_fingerprint(const std::vector<std::filesystem::path>& files);

// One CSV per figure-analog. Selector "all" exports every figure the
// report contains into out (a directory); otherwise out is the CSV file.
// Unknown selectors raise UsageError; a report lacking the needed section
// raises DataError.
void export_plot_data(const Json& report, const std::string& selector,
                      const std::filesystem::path& out);
const std::vector<std::string>& export_selectors();

// Atomically write text (temp file + rename).
void write_file_atomic(const std::filesystem::path& path, const std::string& bytes);

}  // namespace showprof
