#include "frl/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "frl/fahp.hpp"

namespace frl {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!known.contains(it.key())) {
            throw ConfigError("unknown key '" + it.key() + "' in " + where);
        }
    }
}

double require_unit_interval(double v, const std::string& field) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw ConfigError(field + " must lie in [0, 1], got " + std::to_string(v));
    }
    return v;
}

ConstraintSpec parse_constraint(const json& obj) {
    reject_unknown_keys(obj, {"kind", "field", "lambda", "dmax"}, "constraint");
    ConstraintSpec spec;
    std::string kind = obj.value("kind", "none");
    if (kind == "none") {
        spec.kind = ConstraintKind::none;
    } else if (kind == "crisp") {
        spec.kind = ConstraintKind::crisp;
    } else if (kind == "fuzzy") {
        spec.kind = ConstraintKind::fuzzy;
    } else {
        throw ConfigError("constraint.kind must be none | crisp | fuzzy, got '" + kind + "'");
    }
    if (spec.kind != ConstraintKind::none) {
        if (!obj.contains("field")) throw ConfigError("constraint." + kind + " requires a field");
        spec.field = obj.at("field").get<std::string>();
    }
    if (spec.kind == ConstraintKind::fuzzy) {
        if (!obj.contains("lambda")) {
            throw ConfigError("fuzzy constraint requires a lambda membership threshold");
        }
        spec.lambda = require_unit_interval(obj.at("lambda").get<double>(), "constraint.lambda");
    } else if (obj.contains("lambda")) {
        throw ConfigError("constraint.lambda is only valid for the fuzzy constraint kind");
    }
    std::string dmax = obj.value("dmax", "cross_product");
    if (dmax == "cross_product") {
        spec.dmax = DmaxScope::cross_product;
    } else if (dmax == "max_field_length") {
        spec.dmax = DmaxScope::max_field_length;
    } else {
        throw ConfigError("constraint.dmax must be cross_product | max_field_length");
    }
    return spec;
}

std::vector<LinkColumn> parse_link_columns(const json& arr) {
    if (!arr.is_array() || arr.empty()) {
        throw ConfigError("link_columns must be a non-empty array");
    }
    std::vector<LinkColumn> out;
    for (const json& item : arr) {
        reject_unknown_keys(item, {"left", "right", "matcher", "relevance", "threshold"},
                            "link_columns entry");
        LinkColumn col;
        if (!item.contains("left")) throw ConfigError("link column missing 'left' field name");
        col.left = item.at("left").get<std::string>();
        col.right = item.value("right", col.left);
        try {
            col.matcher = matcher_from_name(item.value("matcher", "exact"));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        col.relevance = item.value("relevance", "");
        col.threshold = require_unit_interval(item.value("threshold", 0.9),
                                              "threshold of link column '" + col.left + "'");
        out.push_back(std::move(col));
    }
    return out;
}

FcmParams parse_fcm(const json& obj, int cluster_count) {
    reject_unknown_keys(obj, {"seed", "fuzzifier", "tol", "max_iter"}, "fcm");
    FcmParams p;
    p.k = cluster_count;
    p.seed = obj.value("seed", std::uint64_t{42});
    p.fuzzifier = obj.value("fuzzifier", 2.0);
    p.tol = obj.value("tol", 1e-6);
    p.max_iter = obj.value("max_iter", 300);
    if (!(p.fuzzifier > 1.0)) throw ConfigError("fcm.fuzzifier must exceed 1");
    if (!(p.tol > 0.0)) throw ConfigError("fcm.tol must be positive");
    if (p.max_iter < 1) throw ConfigError("fcm.max_iter must be at least 1");
    return p;
}

}  // namespace

std::vector<double> LinkageConfig::normalized_crisp_weights() const {
    std::vector<double> w =
        crisp_weight_vector.value_or(std::vector<double>(link_columns.size(), 1.0));
    return normalize(w);
}

std::vector<RelevanceTerm> LinkageConfig::relevance_terms() const {
    std::vector<RelevanceTerm> out;
    out.reserve(link_columns.size());
    for (const LinkColumn& col : link_columns) {
        int rank = 0;
        for (std::size_t i = 0; i < linguistic_terms.size(); ++i) {
            if (linguistic_terms[i] == col.relevance) {
                rank = static_cast<int>(i) + 1;
                break;
            }
        }
        out.push_back({col.relevance, rank});
    }
    return out;
}

LinkageConfig parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config root must be a JSON object");

    static const std::set<std::string> known = {
        "constraint",      "link_columns",   "logic_type",   "linkage_type",
        "crisp_weights",   "linguistic_terms", "fuzzy_number_scale", "fahp_method",
        "fwa_alpha",       "rule_base",      "clusters",     "fcm",
        "partition_mode"};
    reject_unknown_keys(doc, known, "config");

    LinkageConfig cfg;
    if (doc.contains("constraint")) cfg.constraint = parse_constraint(doc.at("constraint"));
    if (!doc.contains("link_columns")) throw ConfigError("config requires link_columns");
    cfg.link_columns = parse_link_columns(doc.at("link_columns"));

    std::string logic = doc.value("logic_type", "Fuzzy");
    if (logic == "Boolean") {
        cfg.logic = LogicType::boolean_logic;
    } else if (logic == "Fuzzy") {
        cfg.logic = LogicType::fuzzy_logic;
    } else {
        throw ConfigError("logic_type must be Boolean | Fuzzy, got '" + logic + "'");
    }
    std::string linkage = doc.value("linkage_type", "crisp");
    if (linkage == "crisp") {
        cfg.linkage = LinkageType::crisp;
    } else if (linkage == "fuzzy") {
        cfg.linkage = LinkageType::fuzzy;
    } else {
        throw ConfigError("linkage_type must be crisp | fuzzy, got '" + linkage + "'");
    }
    if (cfg.logic == LogicType::boolean_logic && cfg.linkage == LinkageType::fuzzy) {
        cfg.linkage = LinkageType::crisp;
        cfg.notices.push_back("Boolean logic forces crisp linkage; linkage_type coerced to crisp");
    }

    if (doc.contains("crisp_weights")) {
        auto w = doc.at("crisp_weights").get<std::vector<double>>();
        if (w.size() != cfg.link_columns.size()) {
            throw ConfigError("crisp_weights must list one weight per link column");
        }
        for (double v : w) {
            if (v < 0.0) throw ConfigError("crisp_weights must be non-negative");
        }
        cfg.crisp_weight_vector = std::move(w);
    }

    if (doc.contains("linguistic_terms")) {
        cfg.linguistic_terms = doc.at("linguistic_terms").get<std::vector<std::string>>();
        if (cfg.linguistic_terms.size() < 2) {
            throw ConfigError("linguistic_terms needs at least 2 entries");
        }
        std::set<std::string> uniq(cfg.linguistic_terms.begin(), cfg.linguistic_terms.end());
        if (uniq.size() != cfg.linguistic_terms.size()) {
            throw ConfigError("linguistic_terms must be unique");
        }
    }

    cfg.fuzzy_number_scale = doc.value("fuzzy_number_scale", 3);
    if (cfg.fuzzy_number_scale < static_cast<int>(cfg.linguistic_terms.size())) {
        throw ConfigError("fuzzy_number_scale must cover every linguistic term rank");
    }

    cfg.fahp_method = doc.value("fahp_method", "geometric mean");
    if (cfg.fahp_method != "geometric mean") {
        throw ConfigError("fahp_method supports only 'geometric mean'");
    }

    cfg.fwa_alpha = require_unit_interval(doc.value("fwa_alpha", 0.0), "fwa_alpha");
    if (doc.contains("rule_base")) cfg.rule_base_path = doc.at("rule_base").get<std::string>();

    cfg.cluster_count = doc.value("clusters", 3);
    if (cfg.cluster_count < 1) throw ConfigError("clusters must be at least 1");
    cfg.fcm = parse_fcm(doc.value("fcm", json::object()), cfg.cluster_count);

    std::string pm = doc.value("partition_mode", "equal");
    if (pm == "equal") {
        cfg.partition_mode = PartitionMode::equal;
    } else if (pm == "quantile") {
        cfg.partition_mode = PartitionMode::quantile;
    } else {
        throw ConfigError("partition_mode must be equal | quantile");
    }

    // Relevance terms are only consulted under Fuzzy logic, but validate
    // eagerly so a bad config fails before a long run.
    if (cfg.logic == LogicType::fuzzy_logic) {
        for (const LinkColumn& col : cfg.link_columns) {
            if (col.relevance.empty()) {
                throw ConfigError("link column '" + col.left +
                                  "' needs a relevance term under Fuzzy logic");
            }
            bool found = false;
            for (const std::string& t : cfg.linguistic_terms) found = found || t == col.relevance;
            if (!found) {
                throw ConfigError("relevance '" + col.relevance + "' of link column '" + col.left +
                                  "' is not one of the linguistic terms");
            }
        }
    }
    return cfg;
}

LinkageConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace frl
