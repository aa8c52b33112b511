#include "frl/blocking.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "frl/similarity.hpp"

namespace frl {

std::vector<CandidatePair> full_cross(const Dataset& a, const Dataset& b) {
    std::vector<CandidatePair> pairs;
    pairs.reserve(a.rows.size() * b.rows.size());
    for (std::uint32_t i = 0; i < a.rows.size(); ++i) {
        for (std::uint32_t j = 0; j < b.rows.size(); ++j) {
            pairs.push_back({i, j, 1.0});
        }
    }
    return pairs;
}

static std::vector<std::string> normalized_column(const Dataset& ds, std::string_view field) {
    std::size_t col = ds.column_index(field);
    std::vector<std::string> out(ds.rows.size());
    for (std::size_t i = 0; i < ds.rows.size(); ++i) out[i] = normalize_text(ds.cell(i, col));
    return out;
}

std::vector<CandidatePair> crisp_block(const Dataset& a, const Dataset& b, std::string_view field) {
    auto left = normalized_column(a, field);
    auto right = normalized_column(b, field);
    std::unordered_map<std::string_view, std::vector<std::uint32_t>> buckets;
    for (std::uint32_t j = 0; j < right.size(); ++j) buckets[right[j]].push_back(j);
    std::vector<CandidatePair> pairs;
    for (std::uint32_t i = 0; i < left.size(); ++i) {
        auto it = buckets.find(left[i]);
        if (it == buckets.end()) continue;
        for (std::uint32_t j : it->second) pairs.push_back({i, j, 1.0});
    }
    return pairs;
}

std::vector<CandidatePair> fuzzy_neighborhood_block(const Dataset& a, const Dataset& b,
                                                    std::string_view field, double lambda,
                                                    DmaxScope scope) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw std::invalid_argument("fuzzy blocking threshold lambda must lie in [0, 1]");
    }
    std::size_t col_a = a.column_index(field);
    std::size_t col_b = b.column_index(field);
    const std::int64_t nl = static_cast<std::int64_t>(a.rows.size());
    const std::int64_t nr = static_cast<std::int64_t>(b.rows.size());

    std::vector<std::u32string> left(nl), right(nr);
    for (std::int64_t i = 0; i < nl; ++i) left[i] = normalized_codepoints(a.cell(i, col_a));
    for (std::int64_t j = 0; j < nr; ++j) right[j] = normalized_codepoints(b.cell(j, col_b));

    std::size_t dmax = 0;
    if (scope == DmaxScope::max_field_length) {
        for (const auto& s : left) dmax = std::max(dmax, s.size());
        for (const auto& s : right) dmax = std::max(dmax, s.size());
    } else {
#pragma omp parallel for reduction(max : dmax) schedule(dynamic, 8)
        for (std::int64_t i = 0; i < nl; ++i) {
            for (std::int64_t j = 0; j < nr; ++j) {
                dmax = std::max(dmax, edit_distance(left[i], right[j]));
            }
        }
    }

    // Per-left-row buckets so the concatenation order never depends on the
    // thread count.
    std::vector<std::vector<CandidatePair>> by_left(nl);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < nl; ++i) {
        for (std::int64_t j = 0; j < nr; ++j) {
            double mu;
            if (dmax == 0) {
                mu = 1.0;
            } else {
                std::size_t d = edit_distance(left[i], right[j]);
                mu = 1.0 - static_cast<double>(d) / static_cast<double>(dmax);
            }
            if (mu >= lambda) {
                by_left[i].push_back({static_cast<std::uint32_t>(i),
                                      static_cast<std::uint32_t>(j), mu});
            }
        }
    }

    std::vector<CandidatePair> pairs;
    for (auto& bucket : by_left) {
        pairs.insert(pairs.end(), bucket.begin(), bucket.end());
    }
    return pairs;
}

std::vector<CandidatePair> build_pairs(const Dataset& a, const Dataset& b,
                                       const ConstraintSpec& spec) {
    switch (spec.kind) {
        case ConstraintKind::none: return full_cross(a, b);
        case ConstraintKind::crisp: return crisp_block(a, b, spec.field);
        case ConstraintKind::fuzzy:
            return fuzzy_neighborhood_block(a, b, spec.field, spec.lambda, spec.dmax);
    }
    throw std::logic_error("unreachable constraint kind");
}

}  // namespace frl
