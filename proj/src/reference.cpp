#include "frl/reference.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "frl/rng.hpp"

namespace frl::ref {

std::vector<double> score_all_pairs(const Dataset& left, const Dataset& right,
                                    std::span<const CandidatePair> pairs,
                                    std::span<const ColumnPlan> plan) {
    const std::size_t n = plan.size();
    std::vector<double> scores(pairs.size() * n);
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        ScoreVector sv = score_columns(left.rows[pairs[j].left_id], right.rows[pairs[j].right_id], plan);
        std::copy(sv.scores.begin(), sv.scores.end(), scores.begin() + static_cast<std::ptrdiff_t>(j * n));
    }
    return scores;
}

std::vector<CandidatePair> fuzzy_neighborhood_block(const Dataset& a, const Dataset& b,
                                                    std::string_view field, double lambda) {
    std::size_t col_a = a.column_index(field);
    std::size_t col_b = b.column_index(field);
    std::vector<std::u32string> left(a.rows.size()), right(b.rows.size());
    for (std::size_t i = 0; i < left.size(); ++i) left[i] = normalized_codepoints(a.cell(i, col_a));
    for (std::size_t j = 0; j < right.size(); ++j) right[j] = normalized_codepoints(b.cell(j, col_b));

    std::size_t dmax = 0;
    for (const auto& l : left) {
        for (const auto& r : right) dmax = std::max(dmax, edit_distance(l, r));
    }

    std::vector<CandidatePair> pairs;
    for (std::uint32_t i = 0; i < left.size(); ++i) {
        for (std::uint32_t j = 0; j < right.size(); ++j) {
            double mu = dmax == 0 ? 1.0
                                  : 1.0 - static_cast<double>(edit_distance(left[i], right[j])) /
                                              static_cast<double>(dmax);
            if (mu >= lambda) pairs.push_back({i, j, mu});
        }
    }
    return pairs;
}

std::vector<double> infer_all(const MamdaniModel& model, std::span<const double> scores,
                              std::size_t n_pairs) {
    const std::size_t n = model.inputs.size();
    std::vector<double> ts(n_pairs);
    for (std::size_t j = 0; j < n_pairs; ++j) {
        ts[j] = model.infer(scores.subspan(j * n, n)).ts;
    }
    return ts;
}

FcmResult fcm(std::span<const double> values, const FcmParams& params) {
    if (values.empty()) throw std::invalid_argument("fcm requires a non-empty value set");
    FcmResult result;
    result.requested_k = params.k;

    std::set<double> distinct(values.begin(), values.end());
    std::size_t k = static_cast<std::size_t>(params.k);
    if (distinct.size() < k) {
        k = distinct.size();
        result.collapsed = true;
    }
    const std::size_t m = values.size();

    if (k == 1) {
        double mean = 0.0;
        for (double v : values) mean += v;
        result.centers = {mean / static_cast<double>(m)};
        result.memberships = {std::vector<double>(m, 1.0)};
        result.converged = true;
        return result;
    }

    std::vector<std::vector<double>> u(k, std::vector<double>(m));
    Rng rng(params.seed);
    for (std::size_t j = 0; j < m; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            u[i][j] = rng.uniform() + 1e-9;
            sum += u[i][j];
        }
        for (std::size_t i = 0; i < k; ++i) u[i][j] /= sum;
    }

    const double exponent = 2.0 / (params.fuzzifier - 1.0);
    std::vector<double> centers(k, 0.0);
    for (int it = 0; it < params.max_iter; ++it) {
        double movement = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            double num = 0.0, den = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                double w = std::pow(u[i][j], params.fuzzifier);
                num += w * values[j];
                den += w;
            }
            double next = den > 0.0 ? num / den : centers[i];
            movement = std::max(movement, std::abs(next - centers[i]));
            centers[i] = next;
        }
        for (std::size_t j = 0; j < m; ++j) {
            std::size_t zero_count = 0;
            for (std::size_t i = 0; i < k; ++i) zero_count += values[j] == centers[i];
            if (zero_count > 0) {
                double share = 1.0 / static_cast<double>(zero_count);
                for (std::size_t i = 0; i < k; ++i) {
                    u[i][j] = values[j] == centers[i] ? share : 0.0;
                }
                continue;
            }
            double denom = 0.0;
            for (std::size_t l = 0; l < k; ++l) denom += std::pow(std::abs(values[j] - centers[l]), -exponent);
            for (std::size_t i = 0; i < k; ++i) {
                u[i][j] = std::pow(std::abs(values[j] - centers[i]), -exponent) / denom;
            }
        }
        result.iterations = it + 1;
        if (it > 0 && movement < params.tol) {
            result.converged = true;
            break;
        }
    }

    result.centers = std::move(centers);
    result.memberships = std::move(u);
    return result;
}

}  // namespace frl::ref
