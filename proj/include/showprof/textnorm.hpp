#pragma once

#include <string>
#include <string_view>
#include <vector>

// Unicode NFC normalization + case folding (ICU) and the substring
// matching primitives shared by retrieval and sentiment classification.
// All matching happens on normalized byte strings.

namespace showprof {

// NFC-normalize and case-fold a UTF-8 string.
std::string normalize_fold(std::string_view utf8);

// True when `needle` occurs in `haystack` as a contiguous byte substring.
// Both must already be normalized.
bool contains_norm(std::string_view haystack, std::string_view needle);

// Count non-overlapping occurrences of lexicon entries in normalized text.
// At each position the longest matching entry wins and the scan resumes
// past it, so "goodshow" is not double-counted as "good". Entries must be
// normalized, non-empty, sorted by descending length (ties lexicographic);
// see prepare_entries.
std::size_t count_lexicon_hits(std::string_view text_norm,
                               const std::vector<std::string>& entries_prepared);

// Normalize, drop empties, sort by descending length then lexicographic.
std::vector<std::string> prepare_entries(const std::vector<std::string>& entries);

}  // namespace showprof
