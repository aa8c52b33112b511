#include "frl/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "frl/csv.hpp"
#include "frl/fahp.hpp"
#include "frl/fwa.hpp"
#include "frl/inference.hpp"

namespace frl {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string sanitize(std::string_view label) {
    std::string out;
    for (char ch : label) {
        out.push_back(ch == ' ' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
    return out;
}

double elapsed_ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::vector<double> score_all_pairs(const Dataset& left, const Dataset& right,
                                    std::span<const CandidatePair> pairs,
                                    std::span<const ColumnPlan> plan,
                                    std::size_t* missing_fields) {
    const std::size_t n = plan.size();
    std::vector<double> scores(pairs.size() * n);
    std::size_t missing = 0;
    const std::int64_t m = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : missing)
    for (std::int64_t j = 0; j < m; ++j) {
        const CandidatePair& p = pairs[static_cast<std::size_t>(j)];
        ScoreVector sv = score_columns(left.rows[p.left_id], right.rows[p.right_id], plan);
        std::copy(sv.scores.begin(), sv.scores.end(),
                  scores.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(j) * n));
        if (sv.missing_field) ++missing;
    }
    if (missing_fields) *missing_fields = missing;
    return scores;
}

void apply_boolean_logic(std::span<double> scores, std::span<const double> thresholds) {
    const std::size_t n = thresholds.size();
    const std::int64_t m = static_cast<std::int64_t>(n == 0 ? 0 : scores.size() / n);
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < m; ++j) {
        double* row = scores.data() + static_cast<std::size_t>(j) * n;
        for (std::size_t i = 0; i < n; ++i) row[i] = row[i] >= thresholds[i] ? 1.0 : 0.0;
    }
}

CrispScores score_pairs_crisp(std::span<const double> scores, std::size_t n_pairs,
                              std::span<const double> weights) {
    const std::size_t n = weights.size();
    CrispScores out;
    out.ts.resize(n_pairs);
    out.weighted.resize(scores.size());
    const std::int64_t m = static_cast<std::int64_t>(n_pairs);
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < m; ++j) {
        const double* row = scores.data() + static_cast<std::size_t>(j) * n;
        double* wrow = out.weighted.data() + static_cast<std::size_t>(j) * n;
        double ts = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            wrow[i] = row[i] * weights[i];
            ts += wrow[i];
        }
        out.ts[j] = ts;
    }
    return out;
}

std::size_t RunResult::count_label(std::string_view label) const {
    std::size_t pos = labels.size();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == label) pos = i;
    }
    if (pos == labels.size()) return 0;
    std::size_t count = 0;
    for (std::size_t c : cluster) count += c == pos;
    return count;
}

bool RunResult::is_top_cluster(std::size_t pair_idx) const {
    return !labels.empty() && cluster[pair_idx] + 1 == labels.size();
}

namespace {

std::vector<ColumnPlan> bind_columns(const LinkageConfig& cfg, const Dataset& left,
                                     const Dataset& right) {
    std::vector<ColumnPlan> plan;
    plan.reserve(cfg.link_columns.size());
    for (const LinkColumn& col : cfg.link_columns) {
        auto l = left.find_column(col.left);
        if (!l) throw ConfigError("link column '" + col.left + "' not found in left dataset");
        auto r = right.find_column(col.right);
        if (!r) throw ConfigError("link column '" + col.right + "' not found in right dataset");
        plan.push_back({*l, *r, col.matcher});
    }
    return plan;
}

void bind_constraint(const LinkageConfig& cfg, const Dataset& left, const Dataset& right) {
    if (cfg.constraint.kind == ConstraintKind::none) return;
    if (!left.find_column(cfg.constraint.field)) {
        throw ConfigError("constraint field '" + cfg.constraint.field + "' not found in left dataset");
    }
    if (!right.find_column(cfg.constraint.field)) {
        throw ConfigError("constraint field '" + cfg.constraint.field + "' not found in right dataset");
    }
}

// Input variable names for rule files: the left column name, deduplicated
// when the same column is linked twice.
std::vector<std::string> variable_names(const LinkageConfig& cfg) {
    std::vector<std::string> names;
    for (const LinkColumn& col : cfg.link_columns) {
        std::string name = col.left;
        int suffix = 2;
        while (std::find(names.begin(), names.end(), name) != names.end()) {
            name = col.left + "_" + std::to_string(suffix++);
        }
        names.push_back(std::move(name));
    }
    return names;
}

void cluster_and_label(const LinkageConfig& cfg, RunResult& result) {
    if (result.pairs.empty()) {
        result.diagnostics.push_back("no candidate pairs survived blocking; nothing to cluster");
        return;
    }
    FcmParams params = cfg.fcm;
    params.k = cfg.cluster_count;
    result.fcm = fcm(result.ts, params);
    if (result.fcm.collapsed) {
        result.diagnostics.push_back(
            "fewer distinct linkage scores than clusters; collapsed to " +
            std::to_string(result.fcm.centers.size()) + " cluster(s)");
    }
    result.labels = effective_labels(result.fcm);
    result.cluster = assign_best(result.fcm);
}

}  // namespace

RunResult run_linkage(const LinkageConfig& cfg, const Dataset& left, const Dataset& right) {
    bind_constraint(cfg, left, right);
    std::vector<ColumnPlan> plan = bind_columns(cfg, left, right);
    const std::size_t n = plan.size();

    RunResult result;
    result.n_columns = n;
    for (const std::string& notice : cfg.notices) result.diagnostics.push_back(notice);

    result.pairs = build_pairs(left, right, cfg.constraint);

    std::size_t missing = 0;
    result.scores = score_all_pairs(left, right, result.pairs, plan, &missing);
    if (missing > 0) {
        result.diagnostics.push_back(std::to_string(missing) +
                                     " pair(s) hit missing fields; those columns scored 0");
    }

    if (cfg.logic == LogicType::boolean_logic) {
        std::vector<double> thresholds;
        thresholds.reserve(n);
        for (const LinkColumn& col : cfg.link_columns) thresholds.push_back(col.threshold);
        apply_boolean_logic(result.scores, thresholds);
    }

    if (cfg.linkage == LinkageType::crisp) {
        std::vector<double> weights;
        if (cfg.logic == LogicType::boolean_logic) {
            weights = cfg.normalized_crisp_weights();
        } else {
            FuzzyWeightVector fw = fahp_geometric_mean(cfg.relevance_terms(), cfg.fuzzy_number_scale);
            weights = crisp_weights(fw);
        }
        CrispScores cs = score_pairs_crisp(result.scores, result.pairs.size(), weights);
        result.ts = std::move(cs.ts);
        result.weighted = std::move(cs.weighted);
    } else {
        // Fuzzy linkage: anchor the score variable on the fuzzy weighted
        // average of the column score TFNs, then infer per-pair scores.
        FuzzyWeightVector fw = fahp_geometric_mean(cfg.relevance_terms(), cfg.fuzzy_number_scale);
        if (result.pairs.empty()) {
            result.ts.clear();
        } else {
            const std::size_t m = result.pairs.size();
            std::vector<std::string> names = variable_names(cfg);
            MamdaniModel model;
            std::vector<Tfn> score_tfns;
            score_tfns.reserve(n);
            std::vector<double> column(m);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < m; ++j) column[j] = result.scores[j * n + i];
                score_tfns.push_back(column_score_tfn(column));
                bool fell_back = false;
                FuzzyVariable var;
                if (cfg.partition_mode == PartitionMode::quantile) {
                    var = build_partition_quantile(names[i], column, cfg.linguistic_terms, &fell_back);
                } else {
                    Interval universe{score_tfns.back().a, score_tfns.back().c};
                    var = build_partition(names[i], universe, cfg.linguistic_terms);
                }
                if (fell_back) {
                    result.diagnostics.push_back("quantile peaks for '" + names[i] +
                                                 "' were not strictly increasing; used equal spacing");
                }
                if (var.degenerate) {
                    result.diagnostics.push_back("all scores identical for '" + names[i] +
                                                 "'; its terms collapsed to a point");
                }
                model.inputs.push_back(std::move(var));
            }

            FwaInput fwa_in{score_tfns, fw, cfg.fwa_alpha};
            Interval ts_support = fwa_interval(fwa_in);
            model.output = build_partition("score", ts_support, cfg.linguistic_terms);
            if (model.output.degenerate) {
                result.diagnostics.push_back("degenerate linkage-score universe at [" +
                                             fmt(ts_support.lo) + "]");
            }

            if (cfg.rule_base_path) {
                std::ifstream rules_in(*cfg.rule_base_path);
                if (!rules_in) throw IoError("cannot open rule base '" + *cfg.rule_base_path + "'");
                try {
                    model.rules = parse_rule_base(rules_in, model.inputs, model.output);
                } catch (const std::invalid_argument& e) {
                    throw ConfigError(e.what());
                }
            } else {
                model.rules = generate_rule_base(n, cfg.linguistic_terms.size(), crisp_weights(fw));
            }

            std::size_t fallbacks = 0;
            result.ts = infer_all(model, result.scores, m, &fallbacks);
            if (fallbacks > 0) {
                result.diagnostics.push_back(std::to_string(fallbacks) +
                                             " pair(s) activated no rule; scored at the universe midpoint");
            }
        }
    }

    cluster_and_label(cfg, result);
    return result;
}

void write_pairs_csv(const std::string& path, const RunResult& result, const LinkageConfig& cfg) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");

    const bool crisp = !result.weighted.empty();
    std::vector<std::string> header = {"left_id", "right_id", "mu_c"};
    for (const LinkColumn& col : cfg.link_columns) header.push_back(col.left + "_score");
    if (crisp) {
        for (const LinkColumn& col : cfg.link_columns) header.push_back(col.left + "_weighted");
    }
    header.push_back("ts");
    for (const std::string& label : result.labels) header.push_back("m_" + sanitize(label));
    header.push_back("label");
    write_csv_row(out, header);

    const std::size_t n = result.n_columns;
    const std::size_t k = result.labels.size();

    // FCM memberships are stored per raw cluster index; emit them in
    // ascending-center order to match the labels.
    std::vector<std::size_t> order(result.fcm.centers.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return result.fcm.centers[a] < result.fcm.centers[b];
    });

    std::vector<std::string> row;
    for (std::size_t j = 0; j < result.pairs.size(); ++j) {
        row.clear();
        row.push_back(std::to_string(result.pairs[j].left_id));
        row.push_back(std::to_string(result.pairs[j].right_id));
        row.push_back(fmt(result.pairs[j].mu));
        for (std::size_t i = 0; i < n; ++i) row.push_back(fmt(result.scores[j * n + i]));
        if (crisp) {
            for (std::size_t i = 0; i < n; ++i) row.push_back(fmt(result.weighted[j * n + i]));
        }
        row.push_back(fmt(result.ts[j]));
        for (std::size_t pos = 0; pos < k; ++pos) {
            row.push_back(fmt(result.fcm.memberships[order[pos]][j]));
        }
        row.push_back(result.labels[result.cluster[j]]);
        write_csv_row(out, row);
    }
    if (!out) throw IoError("failed writing '" + path + "'");
}

void emit_report(std::span<const StrategyReport> reports, std::ostream& csv, std::ostream& txt) {
    std::vector<std::string> header = {"strategy", "matches", "possible_matches",
                                       "non_matches", "total_pairs", "elapsed_ms"};
    write_csv_row(csv, header);
    for (const StrategyReport& r : reports) {
        std::vector<std::string> row = {r.strategy,
                                        std::to_string(r.matches),
                                        std::to_string(r.possible_matches),
                                        std::to_string(r.non_matches),
                                        std::to_string(r.total),
                                        fmt(r.elapsed_ms)};
        write_csv_row(csv, row);
    }

    std::size_t name_w = 8;
    for (const StrategyReport& r : reports) name_w = std::max(name_w, r.strategy.size());
    char line[256];
    std::snprintf(line, sizeof(line), "%-*s %12s %12s %12s %12s %12s\n",
                  static_cast<int>(name_w), "strategy", "matches", "possible", "non-matches",
                  "total", "ms");
    txt << line;
    for (const StrategyReport& r : reports) {
        std::snprintf(line, sizeof(line), "%-*s %12zu %12zu %12zu %12zu %12.1f\n",
                      static_cast<int>(name_w), r.strategy.c_str(), r.matches, r.possible_matches,
                      r.non_matches, r.total, r.elapsed_ms);
        txt << line;
    }
}

void write_report_files(std::span<const StrategyReport> reports, const std::string& out_dir) {
    std::ofstream csv(out_dir + "/report.csv", std::ios::binary);
    std::ofstream txt(out_dir + "/report.txt", std::ios::binary);
    if (!csv || !txt) throw IoError("cannot open report files in '" + out_dir + "'");
    emit_report(reports, csv, txt);
}

namespace {

StrategyReport report_from_frl(const std::string& name, const RunResult& run, double ms) {
    StrategyReport rep;
    rep.strategy = name;
    rep.total = run.pairs.size();
    const std::size_t k = run.labels.size();
    for (std::size_t j = 0; j < run.cluster.size(); ++j) {
        if (run.cluster[j] + 1 == k) {
            ++rep.matches;  // top cluster
        } else if (run.cluster[j] == 0 && k > 1) {
            ++rep.non_matches;
        } else {
            ++rep.possible_matches;
        }
    }
    rep.elapsed_ms = ms;
    return rep;
}

StrategyReport report_from_decision(const std::string& name, const LinkDecision& dec, double ms) {
    StrategyReport rep;
    rep.strategy = name;
    rep.total = dec.match.size();
    for (std::uint8_t f : dec.match) {
        if (f) {
            ++rep.matches;
        } else {
            ++rep.non_matches;
        }
    }
    rep.elapsed_ms = ms;
    return rep;
}

std::vector<std::uint8_t> frl_match_flags(const RunResult& run) {
    std::vector<std::uint8_t> flags(run.pairs.size(), 0);
    for (std::size_t j = 0; j < run.pairs.size(); ++j) flags[j] = run.is_top_cluster(j);
    return flags;
}

}  // namespace

CompareResult compare_strategies(const LinkageConfig& cfg, const Dataset& left,
                                 const Dataset& right, const std::vector<SyntheticPair>* truth,
                                 const CompareOptions& opts) {
    CompareResult out;
    std::vector<ColumnPlan> plan = bind_columns(cfg, left, right);
    const std::size_t n = plan.size();

    out.pairs = build_pairs(left, right, cfg.constraint);
    const std::size_t m = out.pairs.size();

    // Deterministic baseline: exact matching on every link column.
    {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<ColumnPlan> exact_plan = plan;
        for (ColumnPlan& c : exact_plan) c.matcher = Matcher::exact;
        std::vector<double> exact_scores = score_all_pairs(left, right, out.pairs, exact_plan);
        LinkDecision det = deterministic_link(exact_scores, m, n);
        StrategyRun run;
        run.report = report_from_decision("deterministic", det, elapsed_ms_since(t0));
        run.match_flags.assign(det.match.begin(), det.match.end());
        out.runs.push_back(std::move(run));
    }

    // The three FRL modes.
    struct Mode {
        const char* name;
        LogicType logic;
        LinkageType linkage;
    };
    const Mode modes[] = {
        {"frl-boolean-crisp", LogicType::boolean_logic, LinkageType::crisp},
        {"frl-fuzzy-crisp", LogicType::fuzzy_logic, LinkageType::crisp},
        {"frl-fuzzy-fuzzy", LogicType::fuzzy_logic, LinkageType::fuzzy},
    };
    for (const Mode& mode : modes) {
        LinkageConfig mode_cfg = cfg;
        mode_cfg.logic = mode.logic;
        mode_cfg.linkage = mode.linkage;
        auto t0 = std::chrono::steady_clock::now();
        RunResult run_result = run_linkage(mode_cfg, left, right);
        StrategyRun run;
        run.report = report_from_frl(mode.name, run_result, elapsed_ms_since(t0));
        run.match_flags = frl_match_flags(run_result);
        for (std::string& d : run_result.diagnostics) {
            out.diagnostics.push_back(std::string(mode.name) + ": " + d);
        }
        out.runs.push_back(std::move(run));
    }

    // Probabilistic baseline: m/u from a labeled sample, FS weights, raw
    // score dot product against the cutoff.
    {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<double> raw_scores = score_all_pairs(left, right, out.pairs, plan);

        std::vector<std::uint8_t> truth_flags(m, 0);
        if (truth) {
            std::unordered_set<std::uint64_t> truth_set;
            for (const SyntheticPair& p : *truth) {
                truth_set.insert((static_cast<std::uint64_t>(p.left_id) << 32) | p.right_id);
            }
            for (std::size_t j = 0; j < m; ++j) {
                std::uint64_t key = (static_cast<std::uint64_t>(out.pairs[j].left_id) << 32) |
                                    out.pairs[j].right_id;
                truth_flags[j] = truth_set.contains(key);
            }
        } else {
            // No ground truth available: exact agreement on all link columns
            // stands in as the match label for the sample.
            out.diagnostics.push_back(
                "probabilistic: no truth labels supplied; sampling with exact-agreement pseudo-labels");
            std::vector<ColumnPlan> exact_plan = plan;
            for (ColumnPlan& c : exact_plan) c.matcher = Matcher::exact;
            std::vector<double> exact_scores = score_all_pairs(left, right, out.pairs, exact_plan);
            LinkDecision det = deterministic_link(exact_scores, m, n);
            truth_flags = det.match;
        }

        std::size_t stride = std::max<std::size_t>(1, m / std::max<std::size_t>(1, opts.sample_target));
        std::vector<std::size_t> sample_rows;
        std::vector<std::uint8_t> sample_flags;
        for (std::size_t j = 0; j < m; j += stride) {
            sample_rows.push_back(j);
            sample_flags.push_back(truth_flags[j]);
        }
        // The strided sample can miss a class entirely; patch in the first
        // representative of each so estimation stays well-defined.
        auto ensure_class = [&](std::uint8_t wanted) {
            for (std::uint8_t f : sample_flags) {
                if (f == wanted) return;
            }
            for (std::size_t j = 0; j < m; ++j) {
                if (truth_flags[j] == wanted) {
                    sample_rows.push_back(j);
                    sample_flags.push_back(wanted);
                    return;
                }
            }
        };
        ensure_class(1);
        ensure_class(0);

        std::vector<MuEstimate> mu =
            estimate_mu(raw_scores, n, sample_rows, sample_flags, opts.agreement_threshold);
        std::size_t dropped = 0;
        std::vector<double> weights = probabilistic_weight_vector(mu, &dropped);
        if (dropped > 0) {
            out.diagnostics.push_back("probabilistic: dropped " + std::to_string(dropped) +
                                      " column(s) with non-positive agreement weight");
        }
        LinkDecision prob = probabilistic_link(raw_scores, m, weights, opts.cutoff);
        StrategyRun run;
        run.report = report_from_decision("probabilistic", prob, elapsed_ms_since(t0));
        run.match_flags.assign(prob.match.begin(), prob.match.end());
        out.runs.push_back(std::move(run));
    }

    return out;
}

}  // namespace frl
