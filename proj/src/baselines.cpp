#include "frl/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "frl/fuzzy_core.hpp"

namespace frl {

LinkDecision deterministic_link(std::span<const double> exact_scores, std::size_t n_pairs,
                                std::size_t n_columns) {
    LinkDecision out;
    out.ts.resize(n_pairs);
    out.match.resize(n_pairs);
    const std::int64_t m = static_cast<std::int64_t>(n_pairs);
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < m; ++j) {
        const double* row = exact_scores.data() + static_cast<std::size_t>(j) * n_columns;
        double sum = 0.0;
        bool all = true;
        for (std::size_t i = 0; i < n_columns; ++i) {
            sum += row[i];
            all = all && row[i] == 1.0;
        }
        out.ts[j] = n_columns ? sum / static_cast<double>(n_columns) : 0.0;
        out.match[j] = all && n_columns > 0;
    }
    return out;
}

std::vector<MuEstimate> estimate_mu(std::span<const double> scores, std::size_t n_columns,
                                    std::span<const std::size_t> sample_rows,
                                    std::span<const std::uint8_t> is_match,
                                    double agreement_threshold) {
    if (sample_rows.size() != is_match.size()) {
        throw std::invalid_argument("labeled sample rows and flags differ in length");
    }
    std::size_t matches = 0, non_matches = 0;
    for (std::uint8_t f : is_match) (f ? matches : non_matches)++;
    if (matches == 0 || non_matches == 0) {
        throw std::invalid_argument(
            "m/u estimation needs at least one true match and one true non-match in the sample");
    }

    std::vector<MuEstimate> out(n_columns);
    for (std::size_t col = 0; col < n_columns; ++col) {
        std::size_t agree_m = 0, agree_u = 0;
        for (std::size_t s = 0; s < sample_rows.size(); ++s) {
            double score = scores[sample_rows[s] * n_columns + col];
            if (score >= agreement_threshold) (is_match[s] ? agree_m : agree_u)++;
        }
        double m = static_cast<double>(agree_m) / static_cast<double>(matches);
        double u = static_cast<double>(agree_u) / static_cast<double>(non_matches);
        out[col] = {std::clamp(m, 0.01, 0.99), std::clamp(u, 0.01, 0.99)};
    }
    return out;
}

std::pair<double, double> fs_agreement_weight(const MuEstimate& mu) {
    return {std::log2(mu.m / mu.u), std::log2((1.0 - mu.m) / (1.0 - mu.u))};
}

std::vector<double> probabilistic_weight_vector(std::span<const MuEstimate> mu,
                                                std::size_t* dropped_columns) {
    std::vector<double> agree(mu.size());
    std::size_t dropped = 0;
    bool any_positive = false;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        double w = fs_agreement_weight(mu[i]).first;
        if (w > 0.0) {
            agree[i] = w;
            any_positive = true;
        } else {
            agree[i] = 0.0;
            ++dropped;
        }
    }
    if (dropped_columns) *dropped_columns = dropped;
    if (!any_positive) {
        throw std::invalid_argument(
            "probabilistic linkage has no discriminating column (all agreement weights <= 0)");
    }
    return normalize(agree);
}

LinkDecision probabilistic_link(std::span<const double> raw_scores, std::size_t n_pairs,
                                std::span<const double> weights, double cutoff) {
    const std::size_t n = weights.size();
    LinkDecision out;
    out.ts.resize(n_pairs);
    out.match.resize(n_pairs);
    const std::int64_t m = static_cast<std::int64_t>(n_pairs);
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < m; ++j) {
        const double* row = raw_scores.data() + static_cast<std::size_t>(j) * n;
        double ts = 0.0;
        for (std::size_t i = 0; i < n; ++i) ts += weights[i] * row[i];
        out.ts[j] = ts;
        out.match[j] = ts >= cutoff;
    }
    return out;
}

}  // namespace frl
