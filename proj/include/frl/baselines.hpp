#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace frl {

/// Per-column agreement probabilities: m given a true match, u by chance.
struct MuEstimate {
    double m = 0.0;
    double u = 0.0;
};

struct LinkDecision {
    std::vector<double> ts;
    std::vector<std::uint8_t> match;  // byte-wide so parallel writes stay race-free
};

/// Exact deterministic linkage over a row-major [n_pairs x n_columns]
/// matrix of exact-match scores (0/1): TS is the row mean, a pair is a
/// match only when every column agrees.
LinkDecision deterministic_link(std::span<const double> exact_scores, std::size_t n_pairs,
                                std::size_t n_columns);

/// Counted m/u probabilities from a labeled sample: the fraction of
/// true matches (resp. non-matches) whose column score reaches the
/// agreement threshold, clamped into [0.01, 0.99]. The sample must
/// contain both classes. sample_rows indexes into the score matrix.
std::vector<MuEstimate> estimate_mu(std::span<const double> scores, std::size_t n_columns,
                                    std::span<const std::size_t> sample_rows,
                                    std::span<const std::uint8_t> is_match,
                                    double agreement_threshold = 0.9);

/// (log2(m/u), log2((1-m)/(1-u))).
std::pair<double, double> fs_agreement_weight(const MuEstimate& mu);

/// Positive agreement weights normalized to the simplex; non-positive
/// columns are dropped (weight 0) and counted in *dropped_columns.
/// Throws when no column has a positive agreement weight.
std::vector<double> probabilistic_weight_vector(std::span<const MuEstimate> mu,
                                                std::size_t* dropped_columns = nullptr);

/// TS = dot(weights, raw scores) per pair; match when TS >= cutoff.
LinkDecision probabilistic_link(std::span<const double> raw_scores, std::size_t n_pairs,
                                std::span<const double> weights, double cutoff = 0.5);

}  // namespace frl
