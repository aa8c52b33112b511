#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace frl {

enum class Matcher { exact, levenshtein, jaro_winkler };

Matcher matcher_from_name(std::string_view name);
std::string_view matcher_name(Matcher m);

/// Canonical comparison form: trimmed, internal whitespace runs collapsed
/// to one space, ASCII letters uppercased.
std::string normalize_text(std::string_view s);

/// Lenient UTF-8 decode; invalid bytes pass through as single code points
/// so edit counts stay per user-perceived character.
std::u32string decode_utf8(std::string_view s);

/// normalize_text followed by decode_utf8.
std::u32string normalized_codepoints(std::string_view s);

std::size_t edit_distance(const std::u32string& s, const std::u32string& t);

/// 1.0 when the normalized forms are equal, else 0.0.
double exact_sim(std::string_view s, std::string_view t);

/// 1 - editDistance / max(len); both empty compare as 1.0.
double levenshtein_sim(std::string_view s, std::string_view t);

/// Jaro similarity boosted by common-prefix scaling 0.1, prefix capped at 4.
double jaro_winkler_sim(std::string_view s, std::string_view t);

double similarity(Matcher m, std::string_view s, std::string_view t);

struct ColumnPlan {
    std::size_t left_col = 0;
    std::size_t right_col = 0;
    Matcher matcher = Matcher::exact;
};

struct ScoreVector {
    std::vector<double> scores;
    bool missing_field = false;
};

/// Per-column match scores for one record pair, in plan order. A field
/// index beyond the row scores 0.0 and sets the missing_field flag.
ScoreVector score_columns(std::span<const std::string> left_row,
                          std::span<const std::string> right_row,
                          std::span<const ColumnPlan> plan);

}  // namespace frl
