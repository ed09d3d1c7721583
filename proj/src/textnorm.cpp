#include "showprof/textnorm.hpp"

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <stdexcept>

namespace showprof {

std::string normalize_fold(std::string_view utf8) {
    UErrorCode ec = U_ZERO_ERROR;
    const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(ec);
    if (U_FAILURE(ec)) throw std::runtime_error("ICU NFC instance unavailable");
    icu::UnicodeString s = icu::UnicodeString::fromUTF8(
        icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
    icu::UnicodeString composed = nfc->normalize(s, ec);
    if (U_FAILURE(ec)) throw std::runtime_error("ICU NFC normalization failed");
    composed.foldCase();
    std::string out;
    composed.toUTF8String(out);
    return out;
}

bool contains_norm(std::string_view haystack, std::string_view needle) {
    if (needle.empty()) return false;
    return haystack.find(needle) != std::string_view::npos;
}

std::vector<std::string> prepare_entries(const std::vector<std::string>& entries) {
    std::vector<std::string> out;
    out.reserve(entries.size());
    for (const auto& e : entries) {
        std::string n = normalize_fold(e);
        if (!n.empty()) out.push_back(std::move(n));
    }
    std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Length in bytes of the UTF-8 sequence starting at text[pos].
std::size_t utf8_step(std::string_view text, std::size_t pos) {
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 0x80) return 1;
    if ((c >> 5) == 0x6) return 2;
    if ((c >> 4) == 0xe) return 3;
    if ((c >> 3) == 0x1e) return 4;
    return 1;  // stray continuation byte
}

}  // namespace

std::size_t count_lexicon_hits(std::string_view text_norm,
                               const std::vector<std::string>& entries_prepared) {
    std::size_t hits = 0;
    std::size_t pos = 0;
    while (pos < text_norm.size()) {
        std::size_t matched = 0;
        for (const auto& e : entries_prepared) {
            if (e.size() <= text_norm.size() - pos &&
                text_norm.compare(pos, e.size(), e) == 0) {
                matched = e.size();
                break;  // entries are longest-first
            }
        }
        if (matched > 0) {
            ++hits;
            pos += matched;
        } else {
            pos += utf8_step(text_norm, pos);
        }
    }
    return hits;
}

}  // namespace showprof
