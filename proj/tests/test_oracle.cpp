#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "naive_oracle.hpp"
#include "test_support.hpp"
#include "tsrg/support_engine.hpp"

using namespace tsrg;

TEST_CASE("naive multiset support on the worked example") {
    const TimeSeries ts = testing::xxy_series();
    CHECK(oracle::naive_multiset_support(Multiset{"x", "y"}, ts, 2000) == 1);
    CHECK(oracle::naive_multiset_support(Multiset{"x", "x"}, ts, 1000) == 1);
}

TEST_CASE("naive singleton support reduces to item support") {
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<Duration> window(0, 5000);
    static const Item names[] = {"a", "b", "c", "d"};
    for (int round = 0; round < 100; ++round) {
        const TimeSeries ts = testing::random_series(rng);
        for (const Item& x : names)
            CHECK(oracle::naive_multiset_support(Multiset{x}, ts, window(rng)) ==
                  oracle::naive_item_support(ts, x));
    }
}

TEST_CASE("window zero only accepts simultaneous occurrences") {
    const TimeSeries apart = build_time_series({{1000, "x"}, {2000, "y"}});
    CHECK(oracle::naive_multiset_support(Multiset{"x", "y"}, apart, 0) == 0);

    const TimeSeries together = build_time_series({{1000, "x"}, {1000, "y"}, {3000, "x"}});
    CHECK(oracle::naive_multiset_support(Multiset{"x", "y"}, together, 0) == 1);
}

TEST_CASE("rule traces expose the distinct occurrences behind a support count") {
    const TimeSeries ts = testing::xxy_series();
    const auto trace = oracle::naive_rule_trace(Multiset{"x", "x"}, Multiset{"y"}, ts, 2000, 1);
    REQUIRE(trace.reachable);
    CHECK(trace.support == 1);
    REQUIRE(trace.occurrences.size() == 1);
    CHECK(trace.occurrences[0].condition.at("x") == std::vector<Timestamp>{1000, 2000});
    CHECK(trace.distinct.size() == 1);

    // an infrequent path is reported unreachable
    const auto blocked = oracle::naive_rule_trace(Multiset{"x", "x"}, Multiset{"y"}, ts, 2000, 2);
    CHECK(!blocked.reachable);
}

TEST_CASE("enumeration with caps 1/1 yields exactly the surviving basic rules") {
    std::mt19937_64 rng(72);
    for (int round = 0; round < 50; ++round) {
        const TimeSeries ts = testing::random_series(rng);
        MiningParams params;
        params.window = 3000;
        params.min_sup = 2;
        params.min_int = 0.0;
        params.max_condition_size = 1;
        params.max_prediction_size = 1;
        const auto rules = oracle::naive_rule_enumeration(ts, params);
        for (const Rule& r : rules) {
            CHECK(r.condition.size() == 1);
            CHECK(r.prediction.size() == 1);
            const Item& i = r.condition.counts.begin()->first;
            const Item& j = r.prediction.counts.begin()->first;
            CHECK(basic_rule_support(i, j, ts, params.window).support == r.support);
        }
    }
}

TEST_CASE("enumeration of an empty series is empty") {
    MiningParams params;
    params.window = 1000;
    CHECK(oracle::naive_rule_enumeration(TimeSeries{}, params).empty());
}

TEST_CASE("the instance-size guard rejects large inputs") {
    std::vector<std::pair<Timestamp, Item>> events;
    for (int e = 0; e < 100; ++e) events.emplace_back(e * 1000, "x");
    const TimeSeries big = build_time_series(events);
    MiningParams params;
    params.window = 1000;
    CHECK_THROWS_AS(oracle::naive_rule_enumeration(big, params), std::invalid_argument);

    const TimeSeries wide = build_time_series(
        {{1000, "a"}, {1000, "b"}, {1000, "c"}, {1000, "d"}, {2000, "e"}, {2000, "f"}, {2000, "g"}});
    CHECK_THROWS_AS(oracle::naive_rule_enumeration(wide, params), std::invalid_argument);

    const TimeSeries small = testing::xxy_series();
    MiningParams big_caps;
    big_caps.window = 1000;
    big_caps.max_condition_size = 4;
    CHECK_THROWS_AS(oracle::naive_rule_enumeration(small, big_caps), std::invalid_argument);
}
