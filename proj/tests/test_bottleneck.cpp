#include "support.hpp"

#include <random>

#include "anq/block_metric.hpp"
#include "anq/bottleneck.hpp"
#include "anq/error.hpp"

using namespace anq;
using anq::test::O;

TEST_CASE("empty and singleton barcodes") {
    auto eq = O("fffffff");
    auto g = ar_generators(eq, ARVariant::plain());
    CHECK(bottleneck<Interval>({}, {}, g).value == Ext(0));
    CHECK(brute_force_bottleneck<Interval>({}, {}, g) == Ext(0));
    auto m = bottleneck<Interval>({{2, 5}}, {}, g);
    CHECK(m.value == Ext(4));
    CHECK(m.unmatched1 == std::vector<Interval>{{2, 5}});

    auto zz = O("fbfbfbf");
    auto gz = ar_generators(zz, ARVariant::plain());
    Interval s{2, 3}, t{3, 6};
    Ext expect = std::min(gz.d(s, t), std::max(gz.W(s), gz.W(t)));
    CHECK(bottleneck<Interval>({s}, {t}, gz).value == expect);
    CHECK(brute_force_bottleneck<Interval>({s}, {t}, gz) == expect);
}

TEST_CASE("universe mismatch") {
    auto g = ar_generators(O("ff"), ARVariant::plain());
    CHECK_THROWS_AS(bottleneck(Barcode{O("ff"), {}}, Barcode{O("fb"), {}}, g), Error);
}

TEST_CASE("brute force size limit") {
    auto g = ar_generators(O("ff"), ARVariant::plain());
    std::vector<Interval> many(7, Interval{1, 1});
    CHECK_THROWS_AS(brute_force_bottleneck(many, many, g), Error);
}

TEST_CASE("minimal generators") {
    auto zz = O("fbfbfbf");
    auto g = ar_generators(zz, ARVariant::plain());
    auto m = minimal_generators(g);
    CHECK(m.d({2, 3}, {3, 6}) == Ext(8));
    for (const auto& s : all_intervals(8))
        for (const auto& t : all_intervals(8)) CHECK(m.d(s, t) <= g.d(s, t));

    std::mt19937 rng(7);
    auto bars = all_intervals(8);
    std::uniform_int_distribution<std::size_t> pick(0, bars.size() - 1);
    std::uniform_int_distribution<int> len(0, 4);
    for (int it = 0; it < 100; ++it) {
        std::vector<Interval> a, b;
        for (int k = len(rng); k > 0; --k) a.push_back(bars[pick(rng)]);
        for (int k = len(rng); k > 0; --k) b.push_back(bars[pick(rng)]);
        CHECK(bottleneck(a, b, g).value == bottleneck(a, b, m).value);
    }
}

TEST_CASE("delta inequality check") {
    CHECK(check_delta_ineq(ar_generators(O("fbfbbff"), ARVariant::plain()), all_intervals(8)).empty());
    MetricGenerators bad{"bad", [](const Interval&, const Interval&) { return Ext(0); },
                         [](const Interval& s) { return Ext(s.dim()); }};
    CHECK_FALSE(check_delta_ineq(bad, all_intervals(3)).empty());
}

TEST_CASE("matching output is a partition and lexicographically first") {
    auto o = O("fff");
    auto g = ar_generators(o, ARVariant::plain());
    std::vector<Interval> a{{1, 1}, {2, 2}}, b{{2, 2}, {1, 1}};
    auto m = bottleneck(a, b, g);
    CHECK(m.value == Ext(0));
    REQUIRE(m.pairs.size() == 2);
    CHECK(m.pairs[0].first == Interval{1, 1});
    CHECK(m.pairs[0].second == Interval{1, 1});
    CHECK(m.unmatched1.empty());
    CHECK(m.unmatched2.empty());
}
