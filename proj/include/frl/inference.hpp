#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frl/fuzzy_core.hpp"

namespace frl {

struct FuzzyTerm {
    Tfn tfn;
    Shoulder shoulder = Shoulder::none;
};

/// A named universe interval partitioned into linguistic terms.
struct FuzzyVariable {
    std::string name;
    Interval universe;
    std::vector<std::string> term_names;
    std::vector<FuzzyTerm> terms;
    bool degenerate = false;  // universe collapsed to a single point

    double term_membership(std::size_t term, double x) const;
    std::optional<std::size_t> term_index(std::string_view name) const;  // case-insensitive
};

/// Ruspini partition with equally spaced peaks from universe.lo to
/// universe.hi; boundary terms are shoulders, so memberships sum to 1
/// everywhere on the universe. Needs at least 2 terms.
FuzzyVariable build_partition(std::string name, Interval universe,
                              std::span<const std::string> term_names);

/// Ruspini partition with peaks at evenly spaced quantiles of the observed
/// values (0th and 100th percentiles at the ends). Falls back to the
/// equal-spacing partition when the quantile peaks are not strictly
/// increasing; *used_equal_fallback reports that when non-null.
FuzzyVariable build_partition_quantile(std::string name, std::span<const double> values,
                                       std::span<const std::string> term_names,
                                       bool* used_equal_fallback = nullptr);

/// One rule: conjunctive antecedent over the input variables (term index
/// per variable, -1 leaves a variable unconstrained) and an output term.
struct FuzzyRule {
    std::vector<int> antecedent;
    int consequent = 0;
};

struct RuleBase {
    std::vector<FuzzyRule> rules;
};

/// The full cross product of term combinations, one rule each. The
/// consequent is the weighted term index round(sum(w_i * idx_i)) with
/// exact halves rounded down.
RuleBase generate_rule_base(std::size_t n_columns, std::size_t n_terms,
                            std::span<const double> crisp_weights);

/// Plain-text rules, one per line:
///   IF <column>=<term> AND ... THEN score=<term>
/// Keywords, column names and terms are case-insensitive; '#' starts a
/// comment. Parse errors and duplicate antecedents report line numbers.
RuleBase parse_rule_base(std::istream& in, std::span<const FuzzyVariable> inputs,
                         const FuzzyVariable& output);

struct MamdaniResult {
    double ts = 0.0;
    bool no_rule_fired = false;
};

/// Min/min/max Mamdani inference with centroid defuzzification over a
/// 1001-point discretization of the output universe.
struct MamdaniModel {
    std::vector<FuzzyVariable> inputs;
    FuzzyVariable output;
    RuleBase rules;

    static constexpr int kGridPoints = 1001;

    /// Throws std::invalid_argument on an empty rule base or arity mismatch.
    MamdaniResult infer(std::span<const double> scores) const;
};

/// Batch inference over a row-major [n_pairs x n_columns] score matrix.
/// OpenMP-parallel over pairs; output order is slot-per-pair, so results
/// do not depend on the thread count.
std::vector<double> infer_all(const MamdaniModel& model, std::span<const double> scores,
                              std::size_t n_pairs, std::size_t* fallback_count = nullptr);

}  // namespace frl
