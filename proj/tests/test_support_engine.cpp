#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "naive_oracle.hpp"
#include "test_support.hpp"
#include "tsrg/support_engine.hpp"

using namespace tsrg;

TEST_CASE("item_support counts itemsets containing the item") {
    const TimeSeries ts = testing::radio_room_series();
    CHECK(item_support(ts, "station: music") == 2);
    CHECK(item_support(ts, "presence: on") == 2);
    CHECK(item_support(ts, "radio: on") == 2);
    CHECK(item_support(ts, "no such item") == 0);
}

TEST_CASE("count_multiset_support on worked examples") {
    const TimeSeries ts = testing::xxy_series();

    // window reaching t1..t2 pairs the two x
    CHECK(count_multiset_support(Multiset{"x", "x"}, ts, 1000) == 1);
    // x@1 and y@3 are consumed together; x@2 is left without a y
    CHECK(count_multiset_support(Multiset{"x", "y"}, ts, 2000) == 1);
    CHECK(count_multiset_support(Multiset{"x"}, ts, 0) == 2);
    CHECK(count_multiset_support(Multiset{"y"}, ts, 5000) == 1);
}

TEST_CASE("count_multiset_support rejects bad arguments") {
    const TimeSeries ts = testing::xxy_series();
    CHECK_THROWS_AS(count_multiset_support(Multiset{}, ts, 1000), std::invalid_argument);
    CHECK_THROWS_AS(count_multiset_support(Multiset{"x"}, ts, -1), std::invalid_argument);
}

TEST_CASE("singleton multiset support equals item support") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<Duration> window(0, 6000);
    static const Item names[] = {"a", "b", "c", "d", "e", "f"};
    for (int round = 0; round < 200; ++round) {
        const TimeSeries ts = testing::random_series(rng);
        for (const Item& x : names) {
            if (item_support(ts, x) == 0) continue;
            CHECK(count_multiset_support(Multiset{x}, ts, window(rng)) == item_support(ts, x));
        }
    }
}

TEST_CASE("count_multiset_support matches the brute-force oracle") {
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<Duration> window(0, 8000);
    testing::RandomSeriesOptions opt;
    opt.max_entries = 60;
    opt.max_alphabet = 6;
    for (int round = 0; round < 400; ++round) {
        const TimeSeries ts = testing::random_series(rng, opt);
        const Multiset A = testing::random_multiset(rng, ts, 4);
        const Duration w = window(rng);
        CHECK(count_multiset_support(A, ts, w) == oracle::naive_multiset_support(A, ts, w));
    }
}

TEST_CASE("basic_rule_support records every pair but counts distinct ones") {
    const TimeSeries ts = testing::xxy_series();
    const SupportResult res = basic_rule_support("x", "y", ts, 2000);
    CHECK(res.support == 1);
    REQUIRE(res.occurrences.size() == 2);
    CHECK(res.occurrences[0].condition.at("x") == std::vector<Timestamp>{1000});
    CHECK(res.occurrences[0].prediction.at("y") == std::vector<Timestamp>{3000});
    CHECK(res.occurrences[1].condition.at("x") == std::vector<Timestamp>{2000});
    CHECK(res.occurrences[1].prediction.at("y") == std::vector<Timestamp>{3000});
}

TEST_CASE("self-rules are allowed") {
    const TimeSeries ts = build_time_series({{1000, "x"}, {2000, "x"}});
    const SupportResult res = basic_rule_support("x", "x", ts, 1000);
    CHECK(res.support == 1);
    CHECK(res.occurrences.size() == 1);
}

TEST_CASE("a timestamp consumed on one side blocks the other side of the same rule") {
    // three x in a row: (1,2) is counted, then 2 cannot serve again as a
    // condition, so (2,3) is recorded but not distinct
    const TimeSeries ts = build_time_series({{1000, "x"}, {2000, "x"}, {3000, "x"}});
    const SupportResult res = basic_rule_support("x", "x", ts, 1000);
    CHECK(res.support == 1);
    CHECK(res.occurrences.size() == 2);
}

TEST_CASE("strict posteriority: prediction never at or before the condition") {
    const TimeSeries ts = build_time_series({{1000, "y"}, {2000, "y"}, {3000, "x"}});
    const SupportResult res = basic_rule_support("x", "y", ts, 60'000);
    CHECK(res.support == 0);
    CHECK(res.occurrences.empty());
}

TEST_CASE("recorded occurrences satisfy the occurrence invariants") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<Duration> window(500, 6000);
    static const Item names[] = {"a", "b", "c"};
    for (int round = 0; round < 100; ++round) {
        const TimeSeries ts = testing::random_series(rng);
        const Duration w = window(rng);
        for (const Item& i : names) {
            for (const Item& j : names) {
                const SupportResult res = basic_rule_support(i, j, ts, w);
                CHECK(res.support <= static_cast<int>(res.occurrences.size()));
                CHECK(res.support <= std::min(item_support(ts, i), item_support(ts, j)));
                for (const RuleOccurrence& occ : res.occurrences) {
                    CHECK(occ.condition_max() < occ.prediction_min());
                    CHECK(occ.span() <= w);
                }
            }
        }
    }
}

TEST_CASE("basic rule support is monotone in the window") {
    std::mt19937_64 rng(24);
    std::uniform_int_distribution<Duration> window(0, 6000);
    static const Item names[] = {"a", "b", "c"};
    for (int round = 0; round < 150; ++round) {
        const TimeSeries ts = testing::random_series(rng);
        Duration w1 = window(rng);
        Duration w2 = window(rng);
        if (w1 > w2) std::swap(w1, w2);
        for (const Item& i : names)
            for (const Item& j : names)
                CHECK(basic_rule_support(i, j, ts, w1).support <=
                      basic_rule_support(i, j, ts, w2).support);
    }
}

TEST_CASE("relative_support divides by the itemset count") {
    const TimeSeries ts = testing::radio_room_series();
    CHECK(relative_support(2, ts) == doctest::Approx(2.0 / 9.0).epsilon(1e-12));
    CHECK(relative_support(0, ts) == 0.0);
    CHECK(relative_support(9, ts) == 1.0);
    CHECK_THROWS_AS(relative_support(1, TimeSeries{}), std::invalid_argument);
}
