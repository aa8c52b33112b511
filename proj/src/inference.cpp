#include "frl/inference.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace frl {

static bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::toupper(static_cast<unsigned char>(a[i])) !=
            std::toupper(static_cast<unsigned char>(b[i]))) {
            return false;
        }
    }
    return true;
}

double FuzzyVariable::term_membership(std::size_t term, double x) const {
    const FuzzyTerm& t = terms[term];
    return membership(t.tfn, t.shoulder, x);
}

std::optional<std::size_t> FuzzyVariable::term_index(std::string_view name) const {
    for (std::size_t i = 0; i < term_names.size(); ++i) {
        if (iequals(term_names[i], name)) return i;
    }
    return std::nullopt;
}

static FuzzyVariable partition_from_peaks(std::string name, std::span<const double> peaks,
                                          std::span<const std::string> term_names) {
    FuzzyVariable var;
    var.name = std::move(name);
    var.universe = {peaks.front(), peaks.back()};
    var.term_names.assign(term_names.begin(), term_names.end());
    const std::size_t t = peaks.size();
    for (std::size_t k = 0; k < t; ++k) {
        if (k == 0) {
            var.terms.push_back({Tfn(peaks[0], peaks[0], peaks[1]), Shoulder::left});
        } else if (k == t - 1) {
            var.terms.push_back({Tfn(peaks[t - 2], peaks[t - 1], peaks[t - 1]), Shoulder::right});
        } else {
            var.terms.push_back({Tfn(peaks[k - 1], peaks[k], peaks[k + 1]), Shoulder::none});
        }
    }
    return var;
}

FuzzyVariable build_partition(std::string name, Interval universe,
                              std::span<const std::string> term_names) {
    const std::size_t t = term_names.size();
    if (t < 2) throw std::invalid_argument("a partition needs at least 2 linguistic terms");
    if (universe.lo > universe.hi) throw std::invalid_argument("universe interval is inverted");
    if (universe.lo == universe.hi) {
        FuzzyVariable var;
        var.name = std::move(name);
        var.universe = universe;
        var.term_names.assign(term_names.begin(), term_names.end());
        var.degenerate = true;
        double p = universe.lo;
        for (std::size_t k = 0; k < t; ++k) var.terms.push_back({Tfn(p, p, p), Shoulder::none});
        return var;
    }
    std::vector<double> peaks(t);
    for (std::size_t k = 0; k < t; ++k) {
        peaks[k] = universe.lo + (universe.hi - universe.lo) * static_cast<double>(k) /
                                     static_cast<double>(t - 1);
    }
    peaks.back() = universe.hi;
    return partition_from_peaks(std::move(name), peaks, term_names);
}

static double quantile(std::span<const double> sorted, double q) {
    const std::size_t n = sorted.size();
    if (n == 1) return sorted[0];
    double pos = q * static_cast<double>(n - 1);
    std::size_t lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= n) return sorted[n - 1];
    double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

FuzzyVariable build_partition_quantile(std::string name, std::span<const double> values,
                                       std::span<const std::string> term_names,
                                       bool* used_equal_fallback) {
    const std::size_t t = term_names.size();
    if (t < 2) throw std::invalid_argument("a partition needs at least 2 linguistic terms");
    if (values.empty()) throw std::invalid_argument("quantile partition needs observed values");
    if (used_equal_fallback) *used_equal_fallback = false;

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    Interval universe{sorted.front(), sorted.back()};
    if (universe.lo == universe.hi) return build_partition(std::move(name), universe, term_names);

    std::vector<double> peaks(t);
    for (std::size_t k = 0; k < t; ++k) {
        peaks[k] = quantile(sorted, static_cast<double>(k) / static_cast<double>(t - 1));
    }
    for (std::size_t k = 1; k < t; ++k) {
        if (!(peaks[k] > peaks[k - 1])) {
            if (used_equal_fallback) *used_equal_fallback = true;
            return build_partition(std::move(name), universe, term_names);
        }
    }
    return partition_from_peaks(std::move(name), peaks, term_names);
}

RuleBase generate_rule_base(std::size_t n_columns, std::size_t n_terms,
                            std::span<const double> crisp_weights) {
    if (n_columns == 0 || n_terms == 0) throw std::invalid_argument("empty rule-base shape");
    if (crisp_weights.size() != n_columns) {
        throw std::invalid_argument("rule generation needs one weight per column");
    }
    RuleBase rb;
    std::vector<int> combo(n_columns, 0);
    const int t = static_cast<int>(n_terms);
    while (true) {
        double weighted = 0.0;
        for (std::size_t i = 0; i < n_columns; ++i) weighted += crisp_weights[i] * combo[i];
        // round-half-down keeps exact .5 boundaries with the lower term
        int consequent = static_cast<int>(std::ceil(weighted - 0.5));
        consequent = std::clamp(consequent, 0, t - 1);
        rb.rules.push_back({combo, consequent});

        std::size_t pos = n_columns;
        while (pos > 0) {
            --pos;
            if (++combo[pos] < t) break;
            combo[pos] = 0;
            if (pos == 0) return rb;
        }
    }
}

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) {
                out.push_back(cur);
                cur.clear();
            }
        } else if (ch == '=') {
            if (!cur.empty()) {
                out.push_back(cur);
                cur.clear();
            }
            out.emplace_back("=");
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

[[noreturn]] void rule_error(std::size_t line_no, const std::string& what) {
    throw std::invalid_argument("rule file line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

RuleBase parse_rule_base(std::istream& in, std::span<const FuzzyVariable> inputs,
                         const FuzzyVariable& output) {
    RuleBase rb;
    std::map<std::vector<int>, std::size_t> seen;  // antecedent -> first line
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::vector<std::string> tok = split_tokens(line);
        if (tok.empty()) continue;

        std::size_t i = 0;
        if (!iequals(tok[i], "IF")) rule_error(line_no, "expected IF, got '" + tok[i] + "'");
        ++i;

        FuzzyRule rule;
        rule.antecedent.assign(inputs.size(), -1);
        bool first = true;
        while (true) {
            if (!first) {
                if (i < tok.size() && iequals(tok[i], "THEN")) break;
                if (i >= tok.size() || !iequals(tok[i], "AND")) {
                    rule_error(line_no, "expected AND or THEN");
                }
                ++i;
            }
            first = false;
            if (i + 2 >= tok.size() || tok[i + 1] != "=") {
                rule_error(line_no, "expected <column>=<term>");
            }
            const std::string& col = tok[i];
            const std::string& term = tok[i + 2];
            i += 3;
            std::size_t var_idx = inputs.size();
            for (std::size_t v = 0; v < inputs.size(); ++v) {
                if (iequals(inputs[v].name, col)) {
                    var_idx = v;
                    break;
                }
            }
            if (var_idx == inputs.size()) rule_error(line_no, "unknown column '" + col + "'");
            auto term_idx = inputs[var_idx].term_index(term);
            if (!term_idx) {
                rule_error(line_no, "unknown term '" + term + "' for column '" + col + "'");
            }
            if (rule.antecedent[var_idx] != -1) {
                rule_error(line_no, "column '" + col + "' constrained twice");
            }
            rule.antecedent[var_idx] = static_cast<int>(*term_idx);
        }
        // at THEN
        ++i;
        if (i + 2 >= tok.size() || tok[i + 1] != "=") rule_error(line_no, "expected score=<term>");
        if (!iequals(tok[i], "score") && !iequals(tok[i], output.name)) {
            rule_error(line_no, "consequent must assign the score variable");
        }
        auto cons = output.term_index(tok[i + 2]);
        if (!cons) rule_error(line_no, "unknown score term '" + tok[i + 2] + "'");
        rule.consequent = static_cast<int>(*cons);
        if (i + 3 < tok.size()) rule_error(line_no, "trailing tokens after consequent");

        if (auto [it, inserted] = seen.emplace(rule.antecedent, line_no); !inserted) {
            rule_error(line_no, "duplicate antecedent (first at line " +
                                    std::to_string(it->second) + ")");
        }
        rb.rules.push_back(std::move(rule));
    }
    if (rb.rules.empty()) throw std::invalid_argument("rule file contains no rules");
    return rb;
}

MamdaniResult MamdaniModel::infer(std::span<const double> scores) const {
    if (rules.rules.empty()) throw std::invalid_argument("mamdani inference needs a non-empty rule base");
    if (scores.size() != inputs.size()) throw std::invalid_argument("score arity mismatch");

    // Fuzzify the clamped inputs.
    std::vector<std::vector<double>> mu(inputs.size());
    for (std::size_t v = 0; v < inputs.size(); ++v) {
        double x = std::clamp(scores[v], inputs[v].universe.lo, inputs[v].universe.hi);
        mu[v].resize(inputs[v].terms.size());
        for (std::size_t t = 0; t < inputs[v].terms.size(); ++t) {
            mu[v][t] = inputs[v].term_membership(t, x);
        }
    }

    // Clip level per output term: the max activation among rules sharing the
    // consequent. Aggregating clipped terms by max is then a 3-way max at
    // each grid point instead of a rules-wide one.
    std::vector<double> clip(output.terms.size(), 0.0);
    for (const FuzzyRule& rule : rules.rules) {
        double act = 1.0;
        for (std::size_t v = 0; v < rule.antecedent.size(); ++v) {
            if (rule.antecedent[v] < 0) continue;
            act = std::min(act, mu[v][static_cast<std::size_t>(rule.antecedent[v])]);
            if (act == 0.0) break;
        }
        clip[static_cast<std::size_t>(rule.consequent)] =
            std::max(clip[static_cast<std::size_t>(rule.consequent)], act);
    }

    if (output.universe.width() == 0.0) return {output.universe.lo, false};

    double num = 0.0, den = 0.0;
    const double lo = output.universe.lo;
    const double step = output.universe.width() / (kGridPoints - 1);
    for (int g = 0; g < kGridPoints; ++g) {
        double x = lo + step * g;
        double agg = 0.0;
        for (std::size_t t = 0; t < output.terms.size(); ++t) {
            if (clip[t] == 0.0) continue;
            agg = std::max(agg, std::min(clip[t], output.term_membership(t, x)));
        }
        num += x * agg;
        den += agg;
    }
    if (den == 0.0) return {output.universe.mid(), true};
    return {num / den, false};
}

std::vector<double> infer_all(const MamdaniModel& model, std::span<const double> scores,
                              std::size_t n_pairs, std::size_t* fallback_count) {
    const std::size_t n = model.inputs.size();
    if (scores.size() != n_pairs * n) throw std::invalid_argument("score matrix shape mismatch");
    std::vector<double> ts(n_pairs);
    std::size_t fallbacks = 0;
    const std::int64_t m = static_cast<std::int64_t>(n_pairs);
#pragma omp parallel for schedule(static) reduction(+ : fallbacks)
    for (std::int64_t j = 0; j < m; ++j) {
        MamdaniResult r = model.infer(scores.subspan(static_cast<std::size_t>(j) * n, n));
        ts[j] = r.ts;
        if (r.no_rule_fired) ++fallbacks;
    }
    if (fallback_count) *fallback_count = fallbacks;
    return ts;
}

}  // namespace frl
