#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diagramma/rsk.hpp"

using namespace diagramma;

TEST_CASE("forward map on tiny inputs") {
    // all-zero word, zero parts one block [k]
    WVector allzero(3, 2, {0, 0, 0}, SetPartition({{1, 2, 3}}));
    RskTriple t = rsk_forward(to_restricted(allzero));
    CHECK(t.p.rows.empty());
    CHECK(t.q.rows.empty());
    REQUIRE(t.t.rows.size() == 1);
    REQUIRE(t.t.rows[0].size() == 1);
    CHECK(t.t.rows[0][0] == std::vector<int>{1, 2, 3});

    // increasing word (1,2): a two-cell row
    WVector inc(2, 2, {1, 2}, SetPartition());
    RskTriple ti = rsk_forward(to_restricted(inc));
    REQUIRE(ti.p.rows.size() == 1);
    CHECK(ti.p.rows[0] == std::vector<std::vector<int>>{{1}, {2}});
    CHECK(ti.q.rows == std::vector<std::vector<int>>{{1, 2}});
    CHECK(ti.t.rows.empty());

    // decreasing word (2,1): a column
    WVector dec(2, 2, {2, 1}, SetPartition());
    RskTriple td = rsk_forward(to_restricted(dec));
    REQUIRE(td.p.rows.size() == 2);
    CHECK(td.p.rows[0] == std::vector<std::vector<int>>{{1}});
    CHECK(td.p.rows[1] == std::vector<std::vector<int>>{{2}});
    CHECK(td.q.rows == std::vector<std::vector<int>>{{1}, {2}});
}

TEST_CASE("backward inverts forward") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {1, 4}, {4, 2}}) {
        auto all = enumerate_restricted(n, k);
        for (const auto& p : all) {
            RskTriple t = rsk_forward(p);
            CHECK(t.valid(n, k));
            CHECK(rsk_backward(n, k, t).parts == p.parts);
        }
        CHECK(Int(static_cast<long>(all.size())) == generalized_bell(n, k));
    }
    // empty-shape triple with T covering [k]
    RskTriple t;
    t.t.rows = {{{1, 2, 3}}};
    RestrictedSetPartition back = rsk_backward(2, 3, t);
    WVector x = from_restricted(back);
    CHECK(x.word == std::vector<int>{0, 0, 0});
    CHECK(x.zeroparts == SetPartition({{1, 2, 3}}));
}

TEST_CASE("forward output is always a valid triple") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 4; ++k)
            for (const auto& p : enumerate_restricted(n, k)) CHECK(rsk_forward(p).valid(n, k));
}

TEST_CASE("inconsistent triples are rejected") {
    RskTriple bad;
    bad.p.rows = {{{1}}};
    bad.q.rows = {{1, 2}};  // shape mismatch
    bad.t.rows = {{{2}}};
    CHECK_THROWS(rsk_backward(2, 2, bad));
    RskTriple overlap;
    overlap.p.rows = {{{1}}};
    overlap.q.rows = {{1}};
    overlap.t.rows = {{{1, 2}}};  // overlaps P's content
    CHECK_THROWS(rsk_backward(2, 2, overlap));
}

TEST_CASE("count identity") {
    auto r = rsk_count_check(2, 2);
    CHECK(r.lhs == 10);
    CHECK(r.rhs == 10);
    CHECK(r.equal);
    for (int k = 0; k <= 5; ++k) {
        auto z = rsk_count_check(0, k);
        CHECK(z.equal);
        CHECK(z.lhs == bell(k));
    }
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= 5; ++k) CHECK(rsk_count_check(n, k).equal);
}
