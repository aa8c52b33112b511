#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "frl/dataset.hpp"

namespace frl {

struct SyntheticPair {
    std::uint32_t left_id = 0;
    std::uint32_t right_id = 0;
};

/// Two linked datasets with columns id, name, address, city, state.
/// Right records are corrupted copies (character swaps, deletions, token
/// drops) of a sampled subset of the left records; extras beyond the left
/// size are fresh non-matching records. truth lists the copied pairings.
struct SyntheticData {
    Dataset left;
    Dataset right;
    std::vector<SyntheticPair> truth;
};

/// Deterministic for a fixed seed. corruption_rate in [0, 1] drives both
/// the chance and the severity of field damage; 0 leaves copies exact,
/// 1 scrambles whole fields.
SyntheticData generate_synthetic(std::size_t n_left, std::size_t n_right, double corruption_rate,
                                 std::uint64_t seed);

/// Writes left.csv, right.csv and truth.csv into the directory.
void write_synthetic(const SyntheticData& data, const std::string& out_dir);

}  // namespace frl
