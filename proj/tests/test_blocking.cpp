#include <doctest.h>

#include "frl/blocking.hpp"
#include "frl/reference.hpp"

using namespace frl;

namespace {

Dataset make_dataset(std::vector<std::vector<std::string>> rows) {
    Dataset ds;
    ds.columns = {"name", "state"};
    ds.rows = std::move(rows);
    return ds;
}

}  // namespace

TEST_SUITE_BEGIN("blocking");

TEST_CASE("full cross product") {
    Dataset a = make_dataset({{"X", "TX"}, {"Y", "FL"}, {"Z", "CA"}});
    Dataset b = make_dataset({{"P", "TX"}, {"Q", "FL"}, {"R", "CA"}, {"S", "NY"}});
    auto pairs = full_cross(a, b);
    CHECK(pairs.size() == 12);
    for (const CandidatePair& p : pairs) CHECK(p.mu == 1.0);

    Dataset empty = make_dataset({});
    CHECK(full_cross(empty, b).empty());
}

TEST_CASE("full cross product at the published dataset sizes") {
    Dataset a, b;
    a.columns = b.columns = {"k"};
    a.rows.assign(5339, {"x"});
    b.rows.assign(2697, {"x"});
    auto pairs = full_cross(a, b);
    CHECK(pairs.size() == 14399283);
}

TEST_CASE("crisp blocking") {
    SUBCASE("single equal value") {
        Dataset a = make_dataset({{"X", "TX"}});
        Dataset b = make_dataset({{"Y", "TX"}});
        auto pairs = crisp_block(a, b, "state");
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0].mu == 1.0);
    }
    SUBCASE("2x2 mixed states") {
        Dataset a = make_dataset({{"X", "TX"}, {"Y", "FL"}});
        Dataset b = make_dataset({{"P", "TX"}, {"Q", "TX"}});
        auto pairs = crisp_block(a, b, "state");
        REQUIRE(pairs.size() == 2);
        CHECK(pairs[0].left_id == 0);
        CHECK(pairs[1].left_id == 0);
    }
    SUBCASE("disjoint values") {
        Dataset a = make_dataset({{"X", "TX"}});
        Dataset b = make_dataset({{"Y", "FL"}});
        CHECK(crisp_block(a, b, "state").empty());
    }
    SUBCASE("blocking normalizes values") {
        Dataset a = make_dataset({{"X", " tx "}});
        Dataset b = make_dataset({{"Y", "TX"}});
        CHECK(crisp_block(a, b, "state").size() == 1);
    }
    SUBCASE("unknown field is rejected") {
        Dataset a = make_dataset({{"X", "TX"}});
        CHECK_THROWS(crisp_block(a, a, "zip"));
    }
}

TEST_CASE("fuzzy neighborhood membership values") {
    // dmax is realized by the most distant pair; equal values keep mu = 1.
    Dataset a = make_dataset({{"X", "ABCDEFGHIJ"}, {"Y", "ABCDEFGHIX"}});
    Dataset b = make_dataset({{"P", "ABCDEFGHIJ"}, {"Q", "QRSTUVWXYZ"}});
    auto pairs = fuzzy_neighborhood_block(a, b, "name", 0.8);
    // d(X,P) = 0 -> mu 1; d(X,Q) = dmax -> mu 0 (excluded); d(Y,P) = 1.
    bool found_equal = false, found_near = false;
    for (const CandidatePair& p : pairs) {
        CHECK(p.mu >= 0.8);
        if (p.left_id == 0 && p.right_id == 0) {
            CHECK(p.mu == doctest::Approx(1.0));
            found_equal = true;
        }
        if (p.left_id == 1 && p.right_id == 0) {
            CHECK(p.mu == doctest::Approx(0.9));
            found_near = true;
        }
    }
    CHECK(found_equal);
    CHECK(found_near);
    for (const CandidatePair& p : pairs) CHECK_FALSE((p.left_id == 0 && p.right_id == 1));
}

TEST_CASE("fuzzy neighborhood with all-identical values retains everything") {
    Dataset a = make_dataset({{"X", "TX"}, {"Y", "TX"}});
    Dataset b = make_dataset({{"P", "TX"}});
    auto pairs = fuzzy_neighborhood_block(a, b, "state", 1.0);
    CHECK(pairs.size() == 2);
    for (const CandidatePair& p : pairs) CHECK(p.mu == 1.0);
}

TEST_CASE("fuzzy blocking at lambda 1 equals crisp blocking") {
    Dataset a = make_dataset({{"A", "TX"}, {"B", "FL"}, {"C", "CA"}, {"D", "TX"}});
    Dataset b = make_dataset({{"E", "TX"}, {"F", "NY"}, {"G", "CA"}});
    auto fuzzy = fuzzy_neighborhood_block(a, b, "state", 1.0);
    auto crisp = crisp_block(a, b, "state");
    REQUIRE(fuzzy.size() == crisp.size());
    for (std::size_t i = 0; i < fuzzy.size(); ++i) {
        CHECK(fuzzy[i].left_id == crisp[i].left_id);
        CHECK(fuzzy[i].right_id == crisp[i].right_id);
    }
}

TEST_CASE("lambda monotonicity: a tighter threshold yields a subset") {
    Dataset a = make_dataset({{"A", "ALPHA"}, {"B", "ALPHB"}, {"C", "GAMMA"}, {"D", "DELTA"}});
    Dataset b = make_dataset({{"E", "ALPHA"}, {"F", "GAMMA"}, {"G", "OMEGA"}});
    for (double l1 : {0.0, 0.3, 0.6}) {
        for (double l2 : {0.7, 0.9, 1.0}) {
            auto loose = fuzzy_neighborhood_block(a, b, "state", l1);
            auto tight = fuzzy_neighborhood_block(a, b, "state", l2);
            for (const CandidatePair& t : tight) {
                bool present = false;
                for (const CandidatePair& l : loose) {
                    present = present || (l.left_id == t.left_id && l.right_id == t.right_id);
                }
                CHECK(present);
                CHECK(t.mu >= l2);
            }
        }
    }
}

TEST_CASE("max_field_length dmax scope is a looser membership floor") {
    Dataset a = make_dataset({{"A", "ALPHA"}, {"B", "BETA"}});
    Dataset b = make_dataset({{"C", "ALPHA"}, {"D", "GAMMA"}});
    auto exact_scope = fuzzy_neighborhood_block(a, b, "state", 0.0, DmaxScope::cross_product);
    auto capped = fuzzy_neighborhood_block(a, b, "state", 0.0, DmaxScope::max_field_length);
    REQUIRE(exact_scope.size() == capped.size());
    for (std::size_t i = 0; i < capped.size(); ++i) CHECK(capped[i].mu >= exact_scope[i].mu);
}

TEST_CASE("parallel blocking matches the serial reference") {
    Dataset a = make_dataset({});
    Dataset b = make_dataset({});
    for (int i = 0; i < 40; ++i) {
        a.rows.push_back({"N" + std::to_string(i), "STATE" + std::to_string(i % 7)});
    }
    for (int j = 0; j < 35; ++j) {
        b.rows.push_back({"M" + std::to_string(j), "STATE" + std::to_string(j % 5)});
    }
    auto par = fuzzy_neighborhood_block(a, b, "state", 0.5);
    auto ser = ref::fuzzy_neighborhood_block(a, b, "state", 0.5);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].left_id == ser[i].left_id);
        CHECK(par[i].right_id == ser[i].right_id);
        CHECK(par[i].mu == ser[i].mu);
    }
}

TEST_SUITE_END();
