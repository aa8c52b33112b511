#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "frl/blocking.hpp"
#include "frl/clustering.hpp"
#include "frl/similarity.hpp"

namespace frl {

/// Invalid or contradictory configuration. Mapped to exit code 1 by the CLI.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class LogicType { boolean_logic, fuzzy_logic };
enum class LinkageType { crisp, fuzzy };
enum class PartitionMode { equal, quantile };

struct LinkColumn {
    std::string left;
    std::string right;
    Matcher matcher = Matcher::exact;
    std::string relevance;       // one of the configured linguistic terms
    double threshold = 0.9;      // Boolean-logic binarization cut
};

struct LinkageConfig {
    ConstraintSpec constraint;
    std::vector<LinkColumn> link_columns;
    LogicType logic = LogicType::fuzzy_logic;
    LinkageType linkage = LinkageType::crisp;
    std::optional<std::vector<double>> crisp_weight_vector;  // defaults to all ones
    std::vector<std::string> linguistic_terms = {"low", "medium", "high"};
    int fuzzy_number_scale = 3;
    std::string fahp_method = "geometric mean";
    double fwa_alpha = 0.0;
    std::optional<std::string> rule_base_path;
    int cluster_count = 3;
    FcmParams fcm;
    PartitionMode partition_mode = PartitionMode::equal;

    std::vector<std::string> notices;  // validation adjustments worth surfacing

    /// Effective crisp weight vector (configured or all ones), normalized.
    std::vector<double> normalized_crisp_weights() const;

    /// Relevance terms of the link columns resolved against the configured
    /// term ordering (rank = 1-based position).
    std::vector<struct RelevanceTerm> relevance_terms() const;
};

/// Parses and validates a JSON config document. Unknown keys are rejected.
LinkageConfig parse_config(const std::string& json_text);

/// Reads the file and parses it; file problems raise IoError, content
/// problems ConfigError.
LinkageConfig load_config(const std::string& path);

}  // namespace frl
