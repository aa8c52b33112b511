#include <doctest.h>

#include "frl/config.hpp"

using namespace frl;

namespace {

const char* kMinimal = R"({
  "link_columns": [
    {"left": "name", "matcher": "jaro_winkler", "relevance": "low"},
    {"left": "address", "matcher": "levenshtein", "relevance": "medium"},
    {"left": "city", "matcher": "exact", "relevance": "high"}
  ]
})";

}  // namespace

TEST_SUITE_BEGIN("config");

TEST_CASE("defaults are applied") {
    LinkageConfig cfg = parse_config(kMinimal);
    CHECK(cfg.logic == LogicType::fuzzy_logic);
    CHECK(cfg.linkage == LinkageType::crisp);
    CHECK(cfg.constraint.kind == ConstraintKind::none);
    CHECK(cfg.linguistic_terms == std::vector<std::string>{"low", "medium", "high"});
    CHECK(cfg.fuzzy_number_scale == 3);
    CHECK(cfg.fahp_method == "geometric mean");
    CHECK(cfg.fwa_alpha == 0.0);
    CHECK(cfg.cluster_count == 3);
    CHECK(cfg.fcm.seed == 42);
    CHECK(cfg.fcm.fuzzifier == doctest::Approx(2.0));
    CHECK(cfg.fcm.tol == doctest::Approx(1e-6));
    CHECK(cfg.fcm.max_iter == 300);
    CHECK(cfg.partition_mode == PartitionMode::equal);
    CHECK(cfg.link_columns[0].threshold == doctest::Approx(0.9));
    CHECK_FALSE(cfg.crisp_weight_vector.has_value());
    auto w = cfg.normalized_crisp_weights();
    CHECK(w[0] == doctest::Approx(1.0 / 3));
}

TEST_CASE("boolean logic coerces fuzzy linkage to crisp with a notice") {
    std::string text = R"({
      "link_columns": [{"left": "name"}],
      "logic_type": "Boolean",
      "linkage_type": "fuzzy"
    })";
    LinkageConfig cfg = parse_config(text);
    CHECK(cfg.logic == LogicType::boolean_logic);
    CHECK(cfg.linkage == LinkageType::crisp);
    REQUIRE(cfg.notices.size() == 1);
    CHECK(cfg.notices[0].find("coerced") != std::string::npos);
}

TEST_CASE("out-of-range threshold names the field") {
    std::string text = R"({
      "link_columns": [{"left": "name", "relevance": "low", "threshold": 1.5}]
    })";
    try {
        parse_config(text);
        FAIL("expected rejection");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("threshold") != std::string::npos);
        CHECK(std::string(e.what()).find("name") != std::string::npos);
    }
}

TEST_CASE("unknown keys are rejected") {
    std::string text = R"({
      "link_columns": [{"left": "name", "relevance": "low"}],
      "blocking": "state"
    })";
    CHECK_THROWS_AS(parse_config(text), ConfigError);

    std::string nested = R"({
      "link_columns": [{"left": "name", "relevance": "low", "algo": "x"}]
    })";
    CHECK_THROWS_AS(parse_config(nested), ConfigError);
}

TEST_CASE("invalid enumerations and ranges") {
    CHECK_THROWS_AS(parse_config(R"({"link_columns": [{"left": "a", "relevance": "low",
                                     "matcher": "soundex"}]})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"link_columns": [{"left": "a", "relevance": "low"}],
                                     "clusters": 0})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"link_columns": [{"left": "a", "relevance": "low"}],
                                     "fahp_method": "extent analysis"})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"link_columns": [{"left": "a", "relevance": "huge"}]})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config("not json"), ConfigError);
}

TEST_CASE("fuzzy constraint requires lambda, crisp rejects it") {
    std::string fuzzy_ok = R"({
      "constraint": {"kind": "fuzzy", "field": "state", "lambda": 0.8},
      "link_columns": [{"left": "name", "relevance": "low"}]
    })";
    LinkageConfig cfg = parse_config(fuzzy_ok);
    CHECK(cfg.constraint.kind == ConstraintKind::fuzzy);
    CHECK(cfg.constraint.lambda == doctest::Approx(0.8));

    CHECK_THROWS_AS(parse_config(R"({
      "constraint": {"kind": "fuzzy", "field": "state"},
      "link_columns": [{"left": "name", "relevance": "low"}]
    })"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({
      "constraint": {"kind": "crisp", "field": "state", "lambda": 0.5},
      "link_columns": [{"left": "name", "relevance": "low"}]
    })"),
                    ConfigError);
}

TEST_CASE("relevance terms resolve to ranks in configuration order") {
    LinkageConfig cfg = parse_config(kMinimal);
    auto terms = cfg.relevance_terms();
    REQUIRE(terms.size() == 3);
    CHECK(terms[0].rank == 1);
    CHECK(terms[1].rank == 2);
    CHECK(terms[2].rank == 3);
}

TEST_SUITE_END();
