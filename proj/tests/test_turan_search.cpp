#include <doctest.h>

#include "turan/containment.hpp"
#include "turan/family_spec.hpp"
#include "turan/turan_search.hpp"

using namespace turan;

namespace {

// Values from an exhaustive search written independently of this library.
struct Known {
    const char* family;
    std::vector<int> ex;  // ex(n) for n = 1..6
};

const std::vector<Known> kKnown = {
    {"cycle:4", {0, 1, 3, 4, 6, 7}},
    {"complete:3", {0, 1, 2, 4, 6, 9}},
    {"star:3", {0, 1, 3, 4, 5, 6}},
    {"Kst:s=2,t=3", {0, 1, 3, 6, 7, 10}},
    {"blowup:t=2:spider:1,2", {0, 1, 3, 6, 10, 11}},
};

}  // namespace

TEST_SUITE("turan_search") {

TEST_CASE("naive oracle examples") {
    CHECK(naive_turan_oracle(4, graphs::cycle(4)) == 4);
    CHECK(naive_turan_oracle(3, graphs::cycle(4)) == 3);
    CHECK(naive_turan_oracle(5, graphs::complete(3)) == 6);
    CHECK_THROWS_AS(naive_turan_oracle(8, graphs::cycle(4)), SearchError);
}

TEST_CASE("search matches known values and the oracle") {
    for (const auto& k : kKnown) {
        const Family f = parse_family(k.family);
        for (int n = 1; n <= 6; ++n) {
            const SearchResult r = turan_number(n, f);
            CHECK_MESSAGE(r.ex_value == k.ex[static_cast<std::size_t>(n - 1)], k.family << " n=" << n);
            CHECK(r.ex_value == naive_turan_oracle(n, f.graph));
            CHECK(r.witness.order() == n);
            CHECK(r.witness.edge_count() == r.ex_value);
            CHECK_FALSE(contains(r.witness, f.graph));
        }
    }
}

TEST_CASE("C4 at seven vertices") {
    const Family f = parse_family("cycle:4");
    const auto r = turan_number(7, f);
    CHECK(r.ex_value == 9);
    CHECK(naive_turan_oracle(7, f.graph) == 9);
}

TEST_CASE("single edge is forbidden everywhere") {
    for (int n = 1; n <= 8; ++n) CHECK(turan_number(n, graphs::path(1)).ex_value == 0);
}

TEST_CASE("search rejects unsupported input") {
    CHECK_THROWS_AS(turan_number(13, graphs::cycle(4)), SearchError);
    CHECK_THROWS_AS(turan_number(0, graphs::cycle(4)), SearchError);
    CHECK_THROWS_AS(turan_number(5, Graph(3, {{0, 1}})), SearchError);
    CHECK_THROWS_AS(turan_number(5, Graph(1)), SearchError);
}

TEST_CASE("ex is monotone with bounded increments") {
    for (const char* spec : {"cycle:4", "complete:3", "Kst:s=2,t=3", "cycle:5"}) {
        const Family f = parse_family(spec);
        int prev = 0;
        for (int n = 1; n <= 8; ++n) {
            const int ex = turan_number(n, f).ex_value;
            CHECK(ex >= prev);
            CHECK(ex <= prev + (n - 1));
            prev = ex;
        }
    }
}

TEST_CASE("thread count does not change the value") {
    for (const auto& k : kKnown) {
        const Family f = parse_family(k.family);
        for (int n = 4; n <= 7; ++n) {
            const int one = turan_number(n, f, {1}).ex_value;
            CHECK(turan_number(n, f, {2}).ex_value == one);
            const auto eight = turan_number(n, f, {8});
            CHECK(eight.ex_value == one);
            CHECK_FALSE(contains(eight.witness, f.graph));
        }
    }
}

TEST_CASE("tables") {
    const auto c4 = ex_table(parse_family("cycle:4"), 4, 7);
    CHECK(c4.rows == std::vector<std::pair<int, int>>{{4, 4}, {5, 6}, {6, 7}, {7, 9}});
    REQUIRE(c4.slope);
    REQUIRE(c4.slope_approx);
    const auto k3 = ex_table(parse_family("complete:3"), 3, 6);
    CHECK(k3.rows == std::vector<std::pair<int, int>>{{3, 2}, {4, 4}, {5, 6}, {6, 9}});
    const auto k2 = ex_table(parse_family("path:1"), 2, 5);
    for (auto [n, ex] : k2.rows) CHECK(ex == 0);
    CHECK_FALSE(k2.slope);
    const auto j = to_json(c4);
    CHECK(j["schema"] == "turan-lab/1");
    CHECK(j["rows"].size() == 4);
}

TEST_CASE("rational approximation") {
    CHECK(approximate(1.5, 1000) == make_rational(3, 2));
    CHECK(approximate(0.333333333333, 1000) == make_rational(1, 3));
    CHECK(approximate(3.14159265358979, 10) == make_rational(22, 7));
}

TEST_CASE("search results serialise with a graph6 witness") {
    const auto r = turan_number(5, parse_family("cycle:4"));
    const auto j = to_json(r);
    CHECK(j["schema"] == "turan-lab/1");
    CHECK(j["ex"] == 6);
    CHECK(j["h"] == "cycle:4");
    CHECK(j["witness"].get<std::string>().size() == 3);
}

}  // TEST_SUITE
