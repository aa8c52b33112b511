#pragma once

#include <span>
#include <vector>

#include "frl/blocking.hpp"
#include "frl/clustering.hpp"
#include "frl/dataset.hpp"
#include "frl/inference.hpp"
#include "frl/similarity.hpp"

namespace frl::ref {

/// Single-threaded reference versions of the parallel kernels. These stay
/// deliberately naive (plain loops, left-to-right accumulation) so the
/// tests and the benchmark have an independent baseline to compare the
/// OpenMP paths against.

std::vector<double> score_all_pairs(const Dataset& left, const Dataset& right,
                                    std::span<const CandidatePair> pairs,
                                    std::span<const ColumnPlan> plan);

std::vector<CandidatePair> fuzzy_neighborhood_block(const Dataset& a, const Dataset& b,
                                                    std::string_view field, double lambda);

std::vector<double> infer_all(const MamdaniModel& model, std::span<const double> scores,
                              std::size_t n_pairs);

FcmResult fcm(std::span<const double> values, const FcmParams& params);

}  // namespace frl::ref
