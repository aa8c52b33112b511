#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "frl/dataset.hpp"

namespace frl {

enum class ConstraintKind { none, crisp, fuzzy };

/// Population over which d_max of the fuzzy neighborhood is taken:
/// the exact cross-product maximum, or the cheaper bound max field length.
enum class DmaxScope { cross_product, max_field_length };

struct ConstraintSpec {
    ConstraintKind kind = ConstraintKind::none;
    std::string field;
    double lambda = 0.0;  // membership threshold, fuzzy only
    DmaxScope dmax = DmaxScope::cross_product;
};

/// A blocked record pair. mu is the constraint membership: 1 for crisp
/// blocking and the full cross product, 1 - d/d_max for fuzzy blocking.
struct CandidatePair {
    std::uint32_t left_id = 0;
    std::uint32_t right_id = 0;
    double mu = 1.0;
};

std::vector<CandidatePair> full_cross(const Dataset& a, const Dataset& b);

/// Pairs whose normalized field values are equal, ordered by (left, right).
std::vector<CandidatePair> crisp_block(const Dataset& a, const Dataset& b, std::string_view field);

/// Keeps the pairs with 1 - d(x,y)/d_max >= lambda where d is the edit
/// distance on the blocking field. d_max == 0 (all values identical)
/// retains everything at membership 1.
std::vector<CandidatePair> fuzzy_neighborhood_block(const Dataset& a, const Dataset& b,
                                                    std::string_view field, double lambda,
                                                    DmaxScope scope = DmaxScope::cross_product);

std::vector<CandidatePair> build_pairs(const Dataset& a, const Dataset& b,
                                       const ConstraintSpec& spec);

}  // namespace frl
