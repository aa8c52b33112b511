#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <unordered_map>

#include <CLI11.hpp>

#include "frl/pipeline.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;

void print_diagnostics(std::span<const std::string> diags) {
    for (const std::string& d : diags) std::cerr << "warning: " << d << "\n";
}

void ensure_out_dir(const std::string& out_dir) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw frl::IoError("cannot create output directory '" + out_dir + "': " + ec.message());
}

frl::LinkageConfig load_and_override(const std::string& config_path,
                                     std::optional<std::uint64_t> seed) {
    frl::LinkageConfig cfg = frl::load_config(config_path);
    if (seed) cfg.fcm.seed = *seed;
    return cfg;
}

/// Maps truth-file id values back to row indices via each dataset's first
/// configured key column ("id" when present, else the first column).
std::vector<frl::SyntheticPair> load_truth(const std::string& path, const frl::Dataset& left,
                                           const frl::Dataset& right) {
    frl::Dataset truth = frl::Dataset::from_csv_file(path);
    std::size_t lcol = truth.column_index("left_id");
    std::size_t rcol = truth.column_index("right_id");

    auto key_column = [](const frl::Dataset& ds) {
        if (auto idx = ds.find_column("id")) return *idx;
        return std::size_t{0};
    };
    std::size_t lkey = key_column(left), rkey = key_column(right);
    std::unordered_map<std::string, std::uint32_t> lmap, rmap;
    for (std::uint32_t i = 0; i < left.rows.size(); ++i) lmap.emplace(left.cell(i, lkey), i);
    for (std::uint32_t j = 0; j < right.rows.size(); ++j) rmap.emplace(right.cell(j, rkey), j);

    std::vector<frl::SyntheticPair> pairs;
    for (std::size_t r = 0; r < truth.rows.size(); ++r) {
        auto li = lmap.find(truth.cell(r, lcol));
        auto ri = rmap.find(truth.cell(r, rcol));
        if (li == lmap.end() || ri == rmap.end()) {
            throw frl::IoError("truth row " + std::to_string(r + 2) + " references unknown ids");
        }
        pairs.push_back({li->second, ri->second});
    }
    return pairs;
}

frl::StrategyReport report_for_run(const frl::RunResult& run, const std::string& name) {
    frl::StrategyReport rep;
    rep.strategy = name;
    rep.total = run.pairs.size();
    const std::size_t k = run.labels.size();
    for (std::size_t c : run.cluster) {
        if (c + 1 == k) {
            ++rep.matches;
        } else if (c == 0 && k > 1) {
            ++rep.non_matches;
        } else {
            ++rep.possible_matches;
        }
    }
    return rep;
}

int cmd_synth(const std::string& out_dir, std::size_t n_left, std::size_t n_right,
              double corruption, std::uint64_t seed) {
    ensure_out_dir(out_dir);
    frl::SyntheticData data = frl::generate_synthetic(n_left, n_right, corruption, seed);
    frl::write_synthetic(data, out_dir);
    std::cout << "wrote " << out_dir << "/left.csv (" << data.left.rows.size() << " rows), "
              << out_dir << "/right.csv (" << data.right.rows.size() << " rows), "
              << out_dir << "/truth.csv (" << data.truth.size() << " pairs)\n";
    return kExitOk;
}

int cmd_link(const std::string& config_path, const std::string& left_path,
             const std::string& right_path, const std::string& out_dir,
             std::optional<std::uint64_t> seed) {
    frl::LinkageConfig cfg = load_and_override(config_path, seed);
    frl::Dataset left = frl::Dataset::from_csv_file(left_path);
    frl::Dataset right = frl::Dataset::from_csv_file(right_path);
    ensure_out_dir(out_dir);

    frl::RunResult result = frl::run_linkage(cfg, left, right);
    print_diagnostics(result.diagnostics);
    frl::write_pairs_csv(out_dir + "/pairs.csv", result, cfg);

    frl::StrategyReport rep = report_for_run(result, "frl");
    frl::write_report_files({&rep, 1}, out_dir);
    std::cout << result.pairs.size() << " candidate pairs: " << rep.matches << " matches, "
              << rep.possible_matches << " possible, " << rep.non_matches << " non-matches\n";
    return kExitOk;
}

int cmd_baseline(const std::string& kind, const std::string& config_path,
                 const std::string& left_path, const std::string& right_path,
                 const std::string& out_dir, const std::string& truth_path) {
    frl::LinkageConfig cfg = frl::load_config(config_path);
    frl::Dataset left = frl::Dataset::from_csv_file(left_path);
    frl::Dataset right = frl::Dataset::from_csv_file(right_path);
    ensure_out_dir(out_dir);

    std::optional<std::vector<frl::SyntheticPair>> truth;
    if (!truth_path.empty()) truth = load_truth(truth_path, left, right);

    // Reuse the comparison machinery and keep only the requested row.
    frl::CompareResult cmp =
        frl::compare_strategies(cfg, left, right, truth ? &*truth : nullptr);
    print_diagnostics(cmp.diagnostics);
    for (const frl::StrategyRun& run : cmp.runs) {
        if (run.report.strategy != kind) continue;
        frl::write_report_files({&run.report, 1}, out_dir);
        std::cout << run.report.strategy << ": " << run.report.matches << " matches of "
                  << run.report.total << " pairs\n";
        return kExitOk;
    }
    throw frl::ConfigError("unknown baseline kind '" + kind + "'");
}

int cmd_compare(const std::string& config_path, const std::string& left_path,
                const std::string& right_path, const std::string& out_dir,
                const std::string& truth_path, std::optional<std::uint64_t> seed) {
    frl::LinkageConfig cfg = load_and_override(config_path, seed);
    frl::Dataset left = frl::Dataset::from_csv_file(left_path);
    frl::Dataset right = frl::Dataset::from_csv_file(right_path);
    ensure_out_dir(out_dir);

    std::optional<std::vector<frl::SyntheticPair>> truth;
    if (!truth_path.empty()) truth = load_truth(truth_path, left, right);

    frl::CompareResult cmp =
        frl::compare_strategies(cfg, left, right, truth ? &*truth : nullptr);
    print_diagnostics(cmp.diagnostics);

    std::vector<frl::StrategyReport> reports;
    for (const frl::StrategyRun& run : cmp.runs) reports.push_back(run.report);
    frl::write_report_files(reports, out_dir);

    std::ostringstream txt;
    std::ostringstream ignored;
    frl::emit_report(reports, ignored, txt);
    std::cout << txt.str();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fuzzy record linkage over CSV datasets"};
    app.require_subcommand(1);

    std::string config_path, left_path, right_path, out_dir = ".", truth_path, baseline_kind;
    std::optional<std::uint64_t> seed;
    std::size_t n_left = 500, n_right = 500;
    double corruption = 0.3;
    std::uint64_t synth_seed = 7;

    CLI::App* synth = app.add_subcommand("synth", "Generate a linked synthetic benchmark");
    synth->add_option("--out-dir", out_dir, "Output directory")->required();
    synth->add_option("--n-left", n_left, "Left dataset size");
    synth->add_option("--n-right", n_right, "Right dataset size");
    synth->add_option("--corruption", corruption, "Field corruption rate in [0,1]");
    synth->add_option("--seed", synth_seed, "Generator seed");

    CLI::App* link = app.add_subcommand("link", "Run the fuzzy record linkage");
    link->add_option("--config", config_path, "JSON linkage config")->required();
    link->add_option("--left", left_path, "Left CSV")->required();
    link->add_option("--right", right_path, "Right CSV")->required();
    link->add_option("--out-dir", out_dir, "Output directory")->required();
    link->add_option("--seed", seed, "Override the clustering seed");

    CLI::App* baseline = app.add_subcommand("baseline", "Run a baseline strategy");
    baseline->add_option("kind", baseline_kind, "deterministic | probabilistic")->required();
    baseline->add_option("--config", config_path, "JSON linkage config")->required();
    baseline->add_option("--left", left_path, "Left CSV")->required();
    baseline->add_option("--right", right_path, "Right CSV")->required();
    baseline->add_option("--out-dir", out_dir, "Output directory")->required();
    baseline->add_option("--truth", truth_path, "Ground-truth pair CSV (for m/u sampling)");

    CLI::App* compare = app.add_subcommand("compare", "Run all strategies and emit the report");
    compare->add_option("--config", config_path, "JSON linkage config")->required();
    compare->add_option("--left", left_path, "Left CSV")->required();
    compare->add_option("--right", right_path, "Right CSV")->required();
    compare->add_option("--out-dir", out_dir, "Output directory")->required();
    compare->add_option("--truth", truth_path, "Ground-truth pair CSV");
    compare->add_option("--seed", seed, "Override the clustering seed");

    try {
        app.parse(argc, argv);
        if (synth->parsed()) return cmd_synth(out_dir, n_left, n_right, corruption, synth_seed);
        if (link->parsed()) return cmd_link(config_path, left_path, right_path, out_dir, seed);
        if (baseline->parsed()) {
            return cmd_baseline(baseline_kind, config_path, left_path, right_path, out_dir,
                                truth_path);
        }
        return cmd_compare(config_path, left_path, right_path, out_dir, truth_path, seed);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    } catch (const frl::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const frl::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}
