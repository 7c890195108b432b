#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "tsrg/event_model.hpp"

using namespace tsrg;

TEST_CASE("build_time_series groups events sharing a timestamp") {
    const TimeSeries ts = testing::radio_room_series();
    REQUIRE(ts.size() == 9);
    CHECK(ts.entries[1].items == std::vector<Item>{"radio: on", "station: music"});
    CHECK(ts.entries[5].items == std::vector<Item>{"radio: on", "station: news"});
}

TEST_CASE("build_time_series collapses duplicates within one timestamp") {
    const TimeSeries ts = build_time_series({{5, "x"}, {5, "x"}});
    REQUIRE(ts.size() == 1);
    CHECK(ts.entries[0].time == 5);
    CHECK(ts.entries[0].items == std::vector<Item>{"x"});
}

TEST_CASE("build_time_series sorts entries ascending") {
    const TimeSeries ts = build_time_series({{3, "y"}, {1, "x"}});
    REQUIRE(ts.size() == 2);
    CHECK(ts.entries[0].time == 1);
    CHECK(ts.entries[0].items == std::vector<Item>{"x"});
    CHECK(ts.entries[1].time == 3);
    CHECK(ts.entries[1].items == std::vector<Item>{"y"});
}

TEST_CASE("build_time_series of nothing is an empty series") {
    CHECK(build_time_series({}).empty());
}

TEST_CASE("build_time_series is idempotent over its own flattened entries") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 50; ++round) {
        const TimeSeries ts = testing::random_series(rng);
        std::vector<std::pair<Timestamp, Item>> flat;
        for (const Entry& e : ts.entries)
            for (const Item& x : e.items) flat.emplace_back(e.time, x);
        CHECK(build_time_series(flat) == ts);
    }
}

TEST_CASE("time series timestamps are strictly increasing") {
    std::mt19937_64 rng(8);
    for (int round = 0; round < 50; ++round) {
        const TimeSeries ts = testing::random_series(rng);
        for (std::size_t e = 1; e < ts.size(); ++e)
            CHECK(ts.entries[e - 1].time < ts.entries[e].time);
        for (const Entry& e : ts.entries) CHECK(!e.items.empty());
    }
}

TEST_CASE("canonical_rule_key encodes sorted items with multiplicities") {
    Rule rule;
    rule.condition = Multiset{"b", "c"};
    rule.prediction = Multiset{"x", "y"};
    CHECK(canonical_rule_key(rule) == "b:1,c:1=>x:1,y:1");

    Rule doubled;
    doubled.condition = Multiset{"x", "x"};
    doubled.prediction = Multiset{"y"};
    CHECK(canonical_rule_key(doubled) == "x:2=>y:1");
}

TEST_CASE("canonical_rule_key ignores construction order") {
    Rule a, b;
    a.condition = Multiset{"c", "b"};
    a.prediction = Multiset{"y", "x"};
    b.condition = Multiset{"b", "c"};
    b.prediction = Multiset{"x", "y"};
    CHECK(canonical_rule_key(a) == canonical_rule_key(b));
}

TEST_CASE("canonical keys agree exactly on equal multiset pairs") {
    std::mt19937_64 rng(9);
    for (int round = 0; round < 200; ++round) {
        const TimeSeries ts = testing::random_series(rng);
        const Multiset c1 = testing::random_multiset(rng, ts, 3);
        const Multiset p1 = testing::random_multiset(rng, ts, 3);
        const Multiset c2 = testing::random_multiset(rng, ts, 3);
        const Multiset p2 = testing::random_multiset(rng, ts, 3);
        const bool same_rule = c1 == c2 && p1 == p2;
        const bool same_key = canonical_rule_key(c1, p1) == canonical_rule_key(c2, p2);
        CHECK(same_rule == same_key);
    }
}

TEST_CASE("multiset bookkeeping") {
    Multiset ms{"b", "a", "b"};
    CHECK(ms.size() == 3);
    CHECK(ms.multiplicity("b") == 2);
    CHECK(ms.multiplicity("z") == 0);
    CHECK(ms.max_item() == "b");
    ms.add("z");
    CHECK(ms.max_item() == "z");
}

TEST_CASE("rule occurrence bounds") {
    RuleOccurrence occ;
    occ.condition["a"] = {2000};
    occ.condition["c"] = {1000};
    occ.prediction["x"] = {5000, 6000};
    occ.prediction["y"] = {4000};
    CHECK(occ.condition_max() == 2000);
    CHECK(occ.condition_min() == 1000);
    CHECK(occ.prediction_min() == 4000);
    CHECK(occ.prediction_max() == 6000);
    CHECK(occ.span() == 5000);
}
