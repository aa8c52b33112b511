#pragma once

#include <span>
#include <string>
#include <vector>

#include "frl/fuzzy_core.hpp"

namespace frl {

/// A linguistic relevance judgment for one link column: the term name and
/// its 1-based position in the configured term ordering.
struct RelevanceTerm {
    std::string name;
    int rank = 1;
};

struct FuzzyWeightVector {
    std::vector<Tfn> weights;
};

/// Unit-spread triangular rank on an s-point scale, clamped at the ends:
/// (max(rank-1, 1), rank, min(rank+1, scale)). Throws when rank > scale.
Tfn term_to_fuzzy_rank(const RelevanceTerm& term, int scale);

/// Scales every vertex by 1 / (sum of modes) so the modes sum to 1.
FuzzyWeightVector fwa_normalize(FuzzyWeightVector fw);

/// Buckley-style fuzzy weights: pairwise ratios a_ij = M_i / M_j with
/// endpoint division, fuzzy geometric row means, then division by the
/// fuzzy sum of the row means. The result is fwa-normalized.
FuzzyWeightVector fahp_geometric_mean(std::span<const RelevanceTerm> terms, int scale);

/// Centroid-defuzzified weights, normalized to sum 1.
std::vector<double> crisp_weights(const FuzzyWeightVector& fw);

}  // namespace frl
