#include "frl/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "frl/rng.hpp"

namespace frl {

namespace {

constexpr std::size_t kBlock = 2048;

// Fixed-order sum: per-block partials accumulated in index order, blocks
// combined in block order. The block grid is independent of the thread
// count, so parallel and single-threaded runs produce identical bits.
template <typename Term>
double blocked_sum(std::size_t n, const Term& term) {
    const std::size_t n_blocks = (n + kBlock - 1) / kBlock;
    std::vector<double> partial(n_blocks, 0.0);
    const std::int64_t nb = static_cast<std::int64_t>(n_blocks);
#pragma omp parallel for schedule(static)
    for (std::int64_t blk = 0; blk < nb; ++blk) {
        const std::size_t begin = static_cast<std::size_t>(blk) * kBlock;
        const std::size_t end = std::min(begin + kBlock, n);
        double acc = 0.0;
        for (std::size_t j = begin; j < end; ++j) acc += term(j);
        partial[static_cast<std::size_t>(blk)] = acc;
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

void update_memberships(std::span<const double> x, const std::vector<double>& centers,
                        double exponent, std::vector<std::vector<double>>& u) {
    const std::size_t k = centers.size();
    const std::int64_t m = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < m; ++j) {
        std::size_t zero_count = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (x[j] == centers[i]) ++zero_count;
        }
        if (zero_count > 0) {
            // Points sitting on a center belong fully (and equally) to the
            // coincident centers.
            double share = 1.0 / static_cast<double>(zero_count);
            for (std::size_t i = 0; i < k; ++i) u[i][j] = x[j] == centers[i] ? share : 0.0;
            continue;
        }
        double denom = 0.0;
        for (std::size_t l = 0; l < k; ++l) {
            denom += std::pow(std::abs(x[j] - centers[l]), -exponent);
        }
        for (std::size_t i = 0; i < k; ++i) {
            u[i][j] = std::pow(std::abs(x[j] - centers[i]), -exponent) / denom;
        }
    }
}

}  // namespace

FcmResult fcm(std::span<const double> values, const FcmParams& params) {
    if (values.empty()) throw std::invalid_argument("fcm requires a non-empty value set");
    if (params.k < 1) throw std::invalid_argument("fcm requires k >= 1");
    if (!(params.fuzzifier > 1.0)) throw std::invalid_argument("fcm fuzzifier must exceed 1");

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
        double mean = blocked_sum(m, [&](std::size_t j) { return values[j]; }) /
                      static_cast<double>(m);
        result.centers = {mean};
        result.memberships = {std::vector<double>(m, 1.0)};
        result.converged = true;
        return result;
    }

    // Seeded random membership init, normalized per point.
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

    const double fz = params.fuzzifier;
    const double exponent = 2.0 / (fz - 1.0);
    std::vector<double> centers(k, 0.0);
    for (int it = 0; it < params.max_iter; ++it) {
        double movement = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            double num = blocked_sum(m, [&](std::size_t j) { return std::pow(u[i][j], fz) * values[j]; });
            double den = blocked_sum(m, [&](std::size_t j) { return std::pow(u[i][j], fz); });
            double next = den > 0.0 ? num / den : centers[i];
            movement = std::max(movement, std::abs(next - centers[i]));
            centers[i] = next;
        }
        update_memberships(values, centers, exponent, u);
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

double fcm_objective(std::span<const double> values, const FcmResult& result, double fuzzifier) {
    double j_total = 0.0;
    for (std::size_t i = 0; i < result.centers.size(); ++i) {
        for (std::size_t j = 0; j < values.size(); ++j) {
            double d = values[j] - result.centers[i];
            j_total += std::pow(result.memberships[i][j], fuzzifier) * d * d;
        }
    }
    return j_total;
}

std::vector<std::string> cluster_labels(int k) {
    if (k == 3) return {"Non-match", "Possible Match", "Match"};
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) labels.push_back("Cluster " + std::to_string(i));
    return labels;
}

std::vector<std::string> effective_labels(const FcmResult& result) {
    std::vector<std::string> all = cluster_labels(result.requested_k);
    const std::size_t k = result.centers.size();
    return {all.end() - static_cast<std::ptrdiff_t>(k), all.end()};
}

std::vector<std::size_t> assign_best(const FcmResult& result) {
    const std::size_t k = result.centers.size();
    std::vector<std::size_t> order(k);  // ascending-center traversal of raw indices
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return result.centers[a] < result.centers[b]; });

    const std::size_t m = k == 0 ? 0 : result.memberships[0].size();
    std::vector<std::size_t> best(m, 0);
    const std::int64_t mm = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < mm; ++j) {
        std::size_t arg = 0;
        double top = -1.0;
        for (std::size_t pos = 0; pos < k; ++pos) {
            double val = result.memberships[order[pos]][static_cast<std::size_t>(j)];
            if (val >= top) {  // >= breaks ties toward the higher center
                top = val;
                arg = pos;
            }
        }
        best[static_cast<std::size_t>(j)] = arg;
    }
    return best;
}

}  // namespace frl
