#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace frl {

struct FcmParams {
    int k = 3;
    double fuzzifier = 2.0;
    double tol = 1e-6;
    int max_iter = 300;
    std::uint64_t seed = 42;
};

struct FcmResult {
    std::vector<double> centers;               // length k'
    std::vector<std::vector<double>> memberships;  // [k'][m], columns sum to 1
    int iterations = 0;
    bool converged = false;
    int requested_k = 0;
    bool collapsed = false;  // fewer distinct values than k, ran with k' = distinct count
};

/// Fuzzy c-means over scalar values. Membership init is seeded, center
/// reductions use a fixed blocked summation order, and the per-point
/// updates are OpenMP-parallel, so results are bit-identical for any
/// thread count. Fewer distinct values than k collapses to k' clusters.
FcmResult fcm(std::span<const double> values, const FcmParams& params);

/// sum_ij u_ij^fuzzifier * (x_j - c_i)^2 for a given state.
double fcm_objective(std::span<const double> values, const FcmResult& result, double fuzzifier);

/// Cluster names by ascending center. k == 3 gets the canonical linkage
/// labels, other sizes get generic ones.
std::vector<std::string> cluster_labels(int k);

/// Labels for a possibly collapsed result: the top k' names of the
/// requested-k labeling, still ascending by center.
std::vector<std::string> effective_labels(const FcmResult& result);

/// Index (into ascending-center order) of each point's highest-membership
/// cluster; ties go to the higher center.
std::vector<std::size_t> assign_best(const FcmResult& result);

}  // namespace frl
