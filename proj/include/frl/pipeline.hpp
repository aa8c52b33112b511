#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "frl/baselines.hpp"
#include "frl/blocking.hpp"
#include "frl/clustering.hpp"
#include "frl/config.hpp"
#include "frl/dataset.hpp"
#include "frl/synth.hpp"

namespace frl {

/// Effective per-pair match scores for every candidate pair, row-major
/// [n_pairs x n_columns]. OpenMP-parallel over pairs. *missing_fields
/// counts pairs that hit an absent cell.
std::vector<double> score_all_pairs(const Dataset& left, const Dataset& right,
                                    std::span<const CandidatePair> pairs,
                                    std::span<const ColumnPlan> plan,
                                    std::size_t* missing_fields = nullptr);

/// In-place Boolean binarization: score >= threshold (per column) becomes
/// 1, anything below becomes 0.
void apply_boolean_logic(std::span<double> scores, std::span<const double> thresholds);

/// TS = dot(scores, weights) per pair, plus the per-column weighted scores.
struct CrispScores {
    std::vector<double> ts;
    std::vector<double> weighted;  // row-major, same shape as the input
};
CrispScores score_pairs_crisp(std::span<const double> scores, std::size_t n_pairs,
                              std::span<const double> weights);

/// Everything one linkage run produces. Scores are the effective values
/// (binarized under Boolean logic). labels lists the cluster names in
/// ascending-center order; cluster[j] indexes into it.
struct RunResult {
    std::vector<CandidatePair> pairs;
    std::size_t n_columns = 0;
    std::vector<double> scores;
    std::vector<double> weighted;  // crisp linkage only
    std::vector<double> ts;
    FcmResult fcm;
    std::vector<std::string> labels;
    std::vector<std::size_t> cluster;
    std::vector<std::string> diagnostics;

    std::size_t count_label(std::string_view label) const;
    bool is_top_cluster(std::size_t pair_idx) const;
};

/// The full linkage procedure: blocking, column scoring, logic transform,
/// weight derivation, linkage-score estimation per the configured mode,
/// fuzzy c-means clustering and labeling. Deterministic for a fixed
/// config and seed, regardless of thread count.
RunResult run_linkage(const LinkageConfig& cfg, const Dataset& left, const Dataset& right);

void write_pairs_csv(const std::string& path, const RunResult& result, const LinkageConfig& cfg);

struct StrategyReport {
    std::string strategy;
    std::size_t matches = 0;
    std::size_t possible_matches = 0;
    std::size_t non_matches = 0;
    std::size_t total = 0;
    double elapsed_ms = 0.0;
};

/// Per-strategy comparison table as CSV plus an aligned plain-text view.
void emit_report(std::span<const StrategyReport> reports, std::ostream& csv, std::ostream& txt);
void write_report_files(std::span<const StrategyReport> reports, const std::string& out_dir);

struct CompareOptions {
    std::size_t sample_target = 2000;   // labeled pairs drawn for m/u estimation
    double cutoff = 0.5;                // probabilistic match threshold
    double agreement_threshold = 0.9;   // m/u agreement counting
};

struct StrategyRun {
    StrategyReport report;
    std::vector<std::uint8_t> match_flags;  // per candidate pair
};

struct CompareResult {
    std::vector<CandidatePair> pairs;
    std::vector<StrategyRun> runs;
    std::vector<std::string> diagnostics;
};

/// Runs the deterministic baseline, the three FRL modes (Boolean/crisp,
/// Fuzzy/crisp, Fuzzy/fuzzy) and the probabilistic baseline over one
/// blocked candidate space. truth (when present) labels the m/u sample;
/// otherwise exact agreement on all link columns stands in for it.
CompareResult compare_strategies(const LinkageConfig& cfg, const Dataset& left,
                                 const Dataset& right,
                                 const std::vector<SyntheticPair>* truth = nullptr,
                                 const CompareOptions& opts = {});

}  // namespace frl
