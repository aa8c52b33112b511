#include "frl/fwa.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace frl {

Tfn column_score_tfn(std::span<const double> scores) {
    if (scores.empty()) throw std::invalid_argument("column score population is empty");
    double lo = scores[0], hi = scores[0];
    for (double s : scores) {
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }

    constexpr int kBins = 20;
    int counts[kBins] = {};
    double sums[kBins] = {};
    for (double s : scores) {
        int bin = static_cast<int>(s * kBins);
        bin = std::clamp(bin, 0, kBins - 1);
        ++counts[bin];
        sums[bin] += s;
    }
    int best = 0;
    for (int b = 1; b < kBins; ++b) {
        if (counts[b] > counts[best]) best = b;  // ties stay with the lower bin
    }
    double mode = sums[best] / counts[best];
    mode = std::clamp(mode, lo, hi);
    return Tfn(lo, mode, hi);
}

namespace {

struct WeightBox {
    double lo;
    double hi;
};

void check_feasible(const std::vector<WeightBox>& boxes, double alpha) {
    double sum_lo = 0.0, sum_hi = 0.0;
    for (const WeightBox& b : boxes) {
        sum_lo += b.lo;
        sum_hi += b.hi;
    }
    constexpr double kSlack = 1e-9;
    if (sum_lo > 1.0 + kSlack) {
        throw std::invalid_argument("fwa infeasible at alpha=" + std::to_string(alpha) +
                                    ": sum of weight lower bounds " + std::to_string(sum_lo) +
                                    " exceeds 1");
    }
    if (sum_hi < 1.0 - kSlack) {
        throw std::invalid_argument("fwa infeasible at alpha=" + std::to_string(alpha) +
                                    ": sum of weight upper bounds " + std::to_string(sum_hi) +
                                    " is below 1");
    }
}

// Optimal value of sum(x_i * w_i) over the weight boxes intersected with the
// simplex: start every weight at its lower bound and pour the remaining mass
// into columns in score order (ascending to minimize, descending to
// maximize). Ties keep the original column order.
double pour(const std::vector<double>& x, const std::vector<WeightBox>& boxes, bool minimize) {
    const std::size_t n = x.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return minimize ? x[i] < x[j] : x[i] > x[j];
    });
    double remaining = 1.0;
    double value = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        remaining -= boxes[i].lo;
        value += x[i] * boxes[i].lo;
    }
    remaining = std::max(remaining, 0.0);
    for (std::size_t idx : order) {
        if (remaining <= 0.0) break;
        double add = std::min(remaining, boxes[idx].hi - boxes[idx].lo);
        value += x[idx] * add;
        remaining -= add;
    }
    return value;
}

}  // namespace

Interval fwa_interval(const FwaInput& input) {
    const std::size_t n = input.score_tfns.size();
    if (n == 0) throw std::invalid_argument("fwa requires at least one column");
    if (input.weight_tfns.weights.size() != n) {
        throw std::invalid_argument("fwa score/weight arity mismatch");
    }
    if (!(input.alpha >= 0.0 && input.alpha <= 1.0)) {
        throw std::invalid_argument("fwa alpha must lie in [0, 1]");
    }
    for (const Tfn& s : input.score_tfns) {
        if (s.a < -1e-12 || s.c > 1.0 + 1e-12) {
            throw std::invalid_argument("fwa score supports must lie within [0, 1]");
        }
    }

    std::vector<double> x_lo(n), x_hi(n);
    std::vector<WeightBox> boxes(n);
    for (std::size_t i = 0; i < n; ++i) {
        Interval sc = alpha_cut(input.score_tfns[i], input.alpha);
        x_lo[i] = sc.lo;
        x_hi[i] = sc.hi;
        Interval wc = alpha_cut(input.weight_tfns.weights[i], input.alpha);
        boxes[i] = {std::max(wc.lo, 0.0), wc.hi};
    }
    check_feasible(boxes, input.alpha);

    // The objective is increasing in every x_i because the weights are
    // non-negative, so the score alpha-cut endpoints are optimal.
    double lo = pour(x_lo, boxes, /*minimize=*/true);
    double hi = pour(x_hi, boxes, /*minimize=*/false);
    return {lo, hi};
}

Tfn fwa_tfn(std::span<const Tfn> score_tfns, const FuzzyWeightVector& weight_tfns) {
    FwaInput in{std::vector<Tfn>(score_tfns.begin(), score_tfns.end()), weight_tfns, 0.0};
    Interval support = fwa_interval(in);
    in.alpha = 1.0;
    Interval peak = fwa_interval(in);
    double mode = std::clamp(peak.mid(), support.lo, support.hi);
    return Tfn(support.lo, mode, support.hi);
}

}  // namespace frl
