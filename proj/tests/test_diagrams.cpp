#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "diagramma/combinatorics.hpp"
#include "diagramma/diagram.hpp"
#include "diagramma/families.hpp"

using namespace diagramma;

namespace {

Diagram random_diagram(int k, int l, std::mt19937_64& rng) {
    int n = k + l;
    std::vector<int> a(n, 0);
    int mx = 0;
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> dist(0, mx + 1);
        a[i] = dist(rng);
        mx = std::max(mx, a[i]);
    }
    std::vector<std::vector<int>> parts(mx + 1);
    for (int i = 0; i < n; ++i) parts[a[i]].push_back(i);
    parts.erase(std::remove_if(parts.begin(), parts.end(),
                               [](const std::vector<int>& p) { return p.empty(); }),
                parts.end());
    return Diagram(k, l, parts);
}

}  // namespace

TEST_CASE("parse and format") {
    Diagram ex1 = Diagram::parse("[7;4] 1,3',4' | 2,3,4,1' | 2' | 5,6,7");
    CHECK(ex1.str() == "[7;4] 1,3',4' | 2,3,4,1' | 5,6,7 | 2'");
    CHECK(Diagram::parse("[1;1] 1,1'") == identity_diagram(1));

    CHECK_THROWS(Diagram::parse("[2;2] 1,1'"));          // uncovered vertices
    CHECK_THROWS(Diagram::parse("[2;2] 1,1,2,1',2'"));   // duplicated vertex
    CHECK_THROWS(Diagram::parse("[2;2] 1,2,3,1',2'"));   // out of range
    CHECK_THROWS(Diagram::parse("1,1'"));                // missing header

    std::mt19937_64 rng(101);
    for (int t = 0; t < 100; ++t) {
        Diagram d = random_diagram(4, 3, rng);
        CHECK(Diagram::parse(d.str()) == d);
    }
}

TEST_CASE("top, bottom, rank") {
    Diagram ex1 = Diagram::parse("[7;4] 1,3',4' | 2,3,4,1' | 2' | 5,6,7");
    CHECK(ex1.top() == SetPartition({{1}, {2, 3, 4}, {5, 6, 7}}));
    CHECK(ex1.bottom() == SetPartition({{1}, {2}, {3, 4}}));
    CHECK(ex1.rank() == 2);
}

TEST_CASE("vertical concatenation, Figure-2 style") {
    Diagram d1 = Diagram::parse("[7;7] 1,2,3,1',2',3' | 4,5 | 4',5' | 6 | 6' | 7,7'");
    Diagram d2 = Diagram::parse("[7;7] 1,2,1' | 3,2',3' | 4,5 | 6 | 7,6',7' | 4' | 5'");
    auto [d, c] = vconcat(d1, d2);
    CHECK(c == 2);
    CHECK(d == Diagram::parse("[7;7] 1,2,3,1',2',3' | 4,5 | 6 | 7,6',7' | 4' | 5'"));

    std::mt19937_64 rng(102);
    for (int t = 0; t < 50; ++t) {
        Diagram x = random_diagram(3, 3, rng);
        auto [idx, c0] = vconcat(identity_diagram(3), x);
        CHECK(idx == x);
        CHECK(c0 == 0);
        auto [xid, c1] = vconcat(x, identity_diagram(3));
        CHECK(xid == x);
        CHECK(c1 == 0);
    }
    CHECK_THROWS(vconcat(random_diagram(2, 3, rng), random_diagram(2, 2, rng)));
}

TEST_CASE("vconcat rank bound and associativity") {
    std::mt19937_64 rng(103);
    for (int t = 0; t < 200; ++t) {
        Diagram a = random_diagram(3, 3, rng), b = random_diagram(3, 3, rng);
        auto [ab, c] = vconcat(a, b);
        CHECK(ab.rank() <= std::min(a.rank(), b.rank()));
    }
    // exhaustive on A_2, with c-count consistency
    auto a2 = enumerate_diagrams(2);
    for (const auto& a : a2)
        for (const auto& b : a2)
            for (const auto& c : a2) {
                auto [ab, c1] = vconcat(a, b);
                auto [ab_c, c2] = vconcat(ab, c);
                auto [bc, c3] = vconcat(b, c);
                auto [a_bc, c4] = vconcat(a, bc);
                CHECK(ab_c == a_bc);
                CHECK(c1 + c2 == c3 + c4);
            }
    std::mt19937_64 rng3(104);
    for (int t = 0; t < 500; ++t) {
        Diagram a = random_diagram(3, 3, rng3), b = random_diagram(3, 3, rng3),
                c = random_diagram(3, 3, rng3);
        auto [ab, c1] = vconcat(a, b);
        auto [ab_c, c2] = vconcat(ab, c);
        auto [bc, c3] = vconcat(b, c);
        auto [a_bc, c4] = vconcat(a, bc);
        CHECK(ab_c == a_bc);
        CHECK(c1 + c2 == c3 + c4);
    }
}

TEST_CASE("horizontal concatenation") {
    CHECK(hconcat(gamma(2), gamma(3)) ==
          Diagram::parse("[5;5] 1,2' | 2,1' | 3,4' | 4,5' | 5,3'"));
    std::mt19937_64 rng(105);
    Diagram empty(0, 0, {});
    for (int t = 0; t < 50; ++t) {
        Diagram d = random_diagram(3, 2, rng);
        CHECK(hconcat(d, empty) == d);
        CHECK(hconcat(empty, d) == d);
        Diagram e = random_diagram(2, 4, rng);
        CHECK(hconcat(d, e).rank() == d.rank() + e.rank());
    }
    // interchange law: (a (x) b) o (c (x) d) = (a o c) (x) (b o d)
    std::mt19937_64 rng2(106);
    for (int t = 0; t < 50; ++t) {
        Diagram a = random_diagram(2, 2, rng2), b = random_diagram(3, 2, rng2);
        Diagram c = random_diagram(2, 3, rng2), d = random_diagram(2, 1, rng2);
        auto [ac, c1] = vconcat(a, c);
        auto [bd, c2] = vconcat(b, d);
        auto [whole, c3] = vconcat(hconcat(a, b), hconcat(c, d));
        CHECK(whole == hconcat(ac, bd));
        CHECK(c3 == c1 + c2);
    }
}

TEST_CASE("diagram enumeration sizes") {
    CHECK(enumerate_diagrams(1).size() == 2);
    CHECK(enumerate_diagrams(2).size() == 15);
    CHECK(enumerate_diagrams(3).size() == 203);
    auto a2 = enumerate_diagrams(2);
    CHECK(std::set<Diagram>(a2.begin(), a2.end()).size() == a2.size());
}

TEST_CASE("V and N families") {
    auto v10 = enumerate_V(1, 0);
    REQUIRE(v10.size() == 1);
    CHECK(v10[0] == e1());
    CHECK(enumerate_N(2, 1).size() == 3);
    for (int k = 0; k <= 4; ++k)
        for (int i = 0; i <= k; ++i) {
            Int formula = 0;
            for (int r = i; r <= k; ++r)
                formula += binomial(k, r) * stirling2(r, i) * bell(k - r);
            CHECK(Int(static_cast<long>(enumerate_N(k, i).size())) == formula);
            CHECK(enumerate_V(k, i).size() ==
                  enumerate_N(k, i).size() * static_cast<size_t>(factorial(i).get_ui()));
        }
}

TEST_CASE("dual monoid families") {
    CHECK(enumerate_dual(2).size() == 3);
    // brute-force filter agreement
    for (int k = 1; k <= 4; ++k) {
        size_t count = 0;
        for (const auto& d : enumerate_diagrams(k)) count += d.all_parts_propagating();
        CHECK(enumerate_dual(k).size() == count);
        for (const auto& d : enumerate_dual(k)) CHECK(d.all_parts_propagating());
        CHECK(enumerate_L(k, k).size() == static_cast<size_t>(factorial(k).get_ui()));
        for (int i = 1; i <= k; ++i) {
            auto l = enumerate_L(k, i);
            CHECK(std::count(l.begin(), l.end(), epsilon(k, i)) == 1);
            auto kk = enumerate_K(k, i);
            CHECK(l.size() == kk.size() * static_cast<size_t>(factorial(i).get_ui()));
        }
    }
}

TEST_CASE("named diagrams") {
    CHECK(gamma(1) == identity_diagram(1));
    CHECK(e1() == Diagram::parse("[1;1] 1 | 1'"));
    CHECK(epsilon(3, 2) == Diagram::parse("[3;3] 1,1' | 2,3,2',3'"));
    CHECK(d_mu(3, {2}) == Diagram::parse("[3;3] 1,2' | 2,1' | 3 | 3'"));
    CHECK(d_mu(2, {}) == hconcat(e1(), e1()));
    CHECK_THROWS(d_mu(2, {2, 1}));
    CHECK_THROWS(epsilon(3, 4));
}

TEST_CASE("d_mu_X_xi") {
    // Example with k=12, mu=(2,3,1,2,2), X={1,2,6,7,8}, xi={{1,2},{6},{7,8}}
    Composition mu{2, 3, 1, 2, 2};
    SetPartition xi({{1, 2}, {6}, {7, 8}});
    Diagram d = d_mu_X_xi(12, mu, {1, 2, 6, 7, 8}, xi);
    Diagram expect = Diagram::parse(
        "[12;12] 1,2,1',2' | 3,4' | 4,5' | 5,3' | 6,6' | 7,8,7',8' | 9,10' | 10,9' "
        "| 11 | 12 | 11' | 12'");
    CHECK(d == expect);
    CHECK(d_mu_X_xi(3, {2, 1}, {}, SetPartition()) == d_mu(3, {2, 1}));
    // X not invariant under sigma_mu
    CHECK_THROWS(d_mu_X_xi(3, {2, 1}, {1}, SetPartition({{1}})));
}

TEST_CASE("sigma_mu and invariant partitions") {
    auto s = sigma_mu({2, 4});
    CHECK(s == std::vector<int>{2, 1, 4, 5, 6, 3});

    MuInvariantDatum datum;
    datum.xi = SetPartition({{1, 2}});
    datum.f = {2};
    datum.g = {{{1, 1}, {2, 1}}};
    CHECK(eta({2, 4}, datum) == SetPartition({{1, 3, 5}, {2, 4, 6}}));
    datum.g = {{{1, 1}, {2, 2}}};
    CHECK(eta({2, 4}, datum) == SetPartition({{1, 4, 6}, {2, 3, 5}}));

    MuInvariantDatum bad;
    bad.xi = SetPartition({{1, 2}});
    bad.f = {3};  // 3 does not divide mu_1 = 2
    bad.g = {{{1, 1}, {2, 1}}};
    CHECK_THROWS(eta({2, 4}, bad));
}

TEST_CASE("eta parametrizes the sigma_mu-fixed partitions bijectively") {
    for (int m = 1; m <= 6; ++m) {
        std::vector<Composition> comps;
        std::function<void(int, Composition&)> rec = [&](int rem, Composition& cur) {
            if (rem == 0) {
                comps.push_back(cur);
                return;
            }
            for (int p = 1; p <= rem; ++p) {
                cur.push_back(p);
                rec(rem - p, cur);
                cur.pop_back();
            }
        };
        Composition cur;
        rec(m, cur);
        for (const auto& mu : comps) {
            auto brute = mu_invariant_partitions(m, mu);
            std::set<SetPartition> images;
            for (const auto& datum : enumerate_mu_invariant_data(mu))
                CHECK(images.insert(eta(mu, datum)).second);  // injective
            CHECK(images.size() == brute.size());
            for (const auto& sp : brute) CHECK(images.count(sp) == 1);  // surjective
        }
    }
}
