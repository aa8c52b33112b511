#pragma once

#include <span>
#include <vector>

#include "frl/fahp.hpp"
#include "frl/fuzzy_core.hpp"

namespace frl {

/// Inputs of one fuzzy-weighted-average evaluation: per-column score
/// intervals as triangular fuzzy numbers (supports within [0,1]),
/// fuzzy weights, and the alpha level. Weights are expected fwa-normal
/// (modes summing to 1); non-normal weights surface as infeasible boxes,
/// at the latest when alpha reaches 1.
struct FwaInput {
    std::vector<Tfn> score_tfns;
    FuzzyWeightVector weight_tfns;
    double alpha = 0.0;
};

/// (min, mode, max) summary of an observed score population. The mode is
/// taken from a 20-bin histogram over [0,1]: the mean of the scores in the
/// most populated bin (ties go to the lower bin), clamped into [min, max].
Tfn column_score_tfn(std::span<const double> scores);

/// The exact interval of sum(x_i * w_i) over x_i in the alpha-cut of the
/// score TFNs and w_i in the alpha-cut of the weight TFNs constrained to
/// sum(w_i) = 1. Each extreme is a greedy solve of the box-constrained
/// simplex linear program. Throws when the weight boxes are infeasible at
/// this alpha, naming the violated bound.
Interval fwa_interval(const FwaInput& input);

/// Triangular reconstruction: support from the alpha = 0 interval, mode
/// from the degenerate alpha = 1 point.
Tfn fwa_tfn(std::span<const Tfn> score_tfns, const FuzzyWeightVector& weight_tfns);

}  // namespace frl
