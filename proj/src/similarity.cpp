#include "frl/similarity.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace frl {

Matcher matcher_from_name(std::string_view name) {
    if (name == "exact") return Matcher::exact;
    if (name == "levenshtein") return Matcher::levenshtein;
    if (name == "jaro_winkler") return Matcher::jaro_winkler;
    throw std::invalid_argument("unknown matcher '" + std::string(name) +
                                "' (expected exact | levenshtein | jaro_winkler)");
}

std::string_view matcher_name(Matcher m) {
    switch (m) {
        case Matcher::exact: return "exact";
        case Matcher::levenshtein: return "levenshtein";
        case Matcher::jaro_winkler: return "jaro_winkler";
    }
    return "?";
}

static bool is_space(char ch) {
    unsigned char u = static_cast<unsigned char>(ch);
    return u == ' ' || u == '\t' || u == '\n' || u == '\r' || u == '\f' || u == '\v';
}

std::string normalize_text(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0, n = s.size();
    while (i < n && is_space(s[i])) ++i;
    while (n > i && is_space(s[n - 1])) --n;
    bool pending_space = false;
    for (; i < n; ++i) {
        char ch = s[i];
        if (is_space(ch)) {
            pending_space = true;
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        unsigned char u = static_cast<unsigned char>(ch);
        if (u < 0x80) ch = static_cast<char>(std::toupper(u));
        out.push_back(ch);
    }
    return out;
}

std::u32string decode_utf8(std::string_view s) {
    std::u32string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char b0 = static_cast<unsigned char>(s[i]);
        std::size_t len;
        char32_t cp;
        if (b0 < 0x80) {
            len = 1;
            cp = b0;
        } else if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            cp = b0 & 0x1F;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            cp = b0 & 0x0F;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            cp = b0 & 0x07;
        } else {
            out.push_back(b0);  // stray continuation byte
            ++i;
            continue;
        }
        if (i + len > s.size()) {
            out.push_back(b0);
            ++i;
            continue;
        }
        bool ok = true;
        for (std::size_t k = 1; k < len; ++k) {
            unsigned char bk = static_cast<unsigned char>(s[i + k]);
            if ((bk & 0xC0) != 0x80) {
                ok = false;
                break;
            }
            cp = (cp << 6) | (bk & 0x3F);
        }
        if (!ok) {
            out.push_back(b0);
            ++i;
            continue;
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::u32string normalized_codepoints(std::string_view s) { return decode_utf8(normalize_text(s)); }

std::size_t edit_distance(const std::u32string& s, const std::u32string& t) {
    const std::size_t m = s.size(), n = t.size();
    if (m == 0) return n;
    if (n == 0) return m;
    std::vector<std::size_t> prev(n + 1), cur(n + 1);
    for (std::size_t j = 0; j <= n; ++j) prev[j] = j;
    for (std::size_t i = 1; i <= m; ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= n; ++j) {
            std::size_t sub = prev[j - 1] + (s[i - 1] == t[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[n];
}

double exact_sim(std::string_view s, std::string_view t) {
    return normalize_text(s) == normalize_text(t) ? 1.0 : 0.0;
}

double levenshtein_sim(std::string_view s, std::string_view t) {
    std::u32string a = normalized_codepoints(s);
    std::u32string b = normalized_codepoints(t);
    std::size_t longest = std::max(a.size(), b.size());
    if (longest == 0) return 1.0;
    return 1.0 - static_cast<double>(edit_distance(a, b)) / static_cast<double>(longest);
}

static double jaro(const std::u32string& s, const std::u32string& t) {
    const std::size_t m = s.size(), n = t.size();
    if (m == 0 && n == 0) return 1.0;
    if (m == 0 || n == 0) return 0.0;
    const std::size_t window = std::max<std::size_t>(1, std::max(m, n) / 2) - 1;
    std::vector<bool> s_match(m, false), t_match(n, false);
    std::size_t matches = 0;
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t lo = i > window ? i - window : 0;
        std::size_t hi = std::min(n, i + window + 1);
        for (std::size_t j = lo; j < hi; ++j) {
            if (!t_match[j] && s[i] == t[j]) {
                s_match[i] = t_match[j] = true;
                ++matches;
                break;
            }
        }
    }
    if (matches == 0) return 0.0;
    std::size_t transpositions = 0;
    for (std::size_t i = 0, j = 0; i < m; ++i) {
        if (!s_match[i]) continue;
        while (!t_match[j]) ++j;
        if (s[i] != t[j]) ++transpositions;
        ++j;
    }
    double dm = static_cast<double>(matches);
    return (dm / m + dm / n + (dm - transpositions / 2.0) / dm) / 3.0;
}

double jaro_winkler_sim(std::string_view s, std::string_view t) {
    std::u32string a = normalized_codepoints(s);
    std::u32string b = normalized_codepoints(t);
    double sim = jaro(a, b);
    std::size_t max_prefix = std::min({a.size(), b.size(), std::size_t{4}});
    std::size_t prefix = 0;
    while (prefix < max_prefix && a[prefix] == b[prefix]) ++prefix;
    sim += static_cast<double>(prefix) * 0.1 * (1.0 - sim);
    return std::min(sim, 1.0);
}

double similarity(Matcher m, std::string_view s, std::string_view t) {
    switch (m) {
        case Matcher::exact: return exact_sim(s, t);
        case Matcher::levenshtein: return levenshtein_sim(s, t);
        case Matcher::jaro_winkler: return jaro_winkler_sim(s, t);
    }
    return 0.0;
}

ScoreVector score_columns(std::span<const std::string> left_row,
                          std::span<const std::string> right_row,
                          std::span<const ColumnPlan> plan) {
    ScoreVector out;
    out.scores.reserve(plan.size());
    for (const ColumnPlan& col : plan) {
        if (col.left_col >= left_row.size() || col.right_col >= right_row.size()) {
            out.scores.push_back(0.0);
            out.missing_field = true;
            continue;
        }
        out.scores.push_back(similarity(col.matcher, left_row[col.left_col], right_row[col.right_col]));
    }
    return out;
}

}  // namespace frl
