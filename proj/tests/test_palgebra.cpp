#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "diagramma/combinatorics.hpp"
#include "diagramma/set_partition.hpp"
#include "diagramma/families.hpp"
#include "diagramma/palgebra.hpp"

using namespace diagramma;

namespace {

Diagram random_square(int k, std::mt19937_64& rng) {
    int n = 2 * k;
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
    return Diagram(k, k, parts);
}

}  // namespace

TEST_CASE("delta-weighted products") {
    Diagram d1 = Diagram::parse("[7;7] 1,2,3,1',2',3' | 4,5 | 4',5' | 6 | 6' | 7,7'");
    Diagram d2 = Diagram::parse("[7;7] 1,2,1' | 3,2',3' | 4,5 | 6 | 7,6',7' | 4' | 5'");
    AlgebraElement prod = multiply(AlgebraElement(d1), AlgebraElement(d2));
    REQUIRE(prod.terms().size() == 1);
    auto [d, coeff] = *prod.terms().begin();
    CHECK(coeff == Poly::delta(2));
    CHECK(d == vconcat(d1, d2).first);

    // E_1 E_1 = delta E_1
    AlgebraElement sq = multiply(AlgebraElement(e1()), AlgebraElement(e1()));
    REQUIRE(sq.terms().size() == 1);
    CHECK(sq.terms().begin()->first == e1());
    CHECK(sq.terms().begin()->second == Poly::delta(1));
}

TEST_CASE("identity is a two-sided unit on A_2") {
    AlgebraElement one(identity_diagram(2));
    for (const auto& d : enumerate_diagrams(2)) {
        AlgebraElement x(d);
        CHECK(multiply(one, x) == x);
        CHECK(multiply(x, one) == x);
    }
}

TEST_CASE("associativity of the algebra product") {
    auto a2 = enumerate_diagrams(2);
    for (const auto& a : a2)
        for (const auto& b : a2)
            for (const auto& c : a2) {
                AlgebraElement ea(a), eb(b), ec(c);
                CHECK(multiply(multiply(ea, eb), ec) == multiply(ea, multiply(eb, ec)));
            }
    std::mt19937_64 rng(31);
    for (int t = 0; t < 500; ++t) {
        AlgebraElement a(random_square(3, rng)), b(random_square(3, rng)),
            c(random_square(3, rng));
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
}

TEST_CASE("dimension and the dual submonoid") {
    for (int k = 1; k <= 3; ++k)
        CHECK(Int(static_cast<long>(enumerate_diagrams(k).size())) == bell(2 * k));
    // I_k^* closed under multiplication with no delta factor
    for (int k = 1; k <= 3; ++k) {
        auto dual = enumerate_dual(k);
        for (const auto& a : dual)
            for (const auto& b : dual) {
                auto [ab, c] = vconcat(a, b);
                CHECK(c == 0);
                CHECK(ab.all_parts_propagating());
            }
    }
}

TEST_CASE("element serialization") {
    AlgebraElement x(e1(), Poly(Rat(3, 2)) * Poly::delta(2) - Poly(1));
    CHECK(x.str() == "3/2*d^2-1 * [1;1] 1 | 1'");
    AlgebraElement zero(1);
    CHECK(zero.str() == "0");
}

TEST_CASE("subalgebra membership") {
    Composition mu{2, 3, 1, 2, 2};
    SetPartition xi({{1, 2}, {6}, {7, 8}});
    std::vector<int> x{1, 2, 6, 7, 8};
    std::vector<int> y{11, 12};
    SubalgebraSpec spec(12, x, y, xi);
    CHECK(subalgebra_contains(spec, d_mu_X_xi(12, mu, x, xi)));

    // E_1^{(x)k} with Y=[k], X empty
    SubalgebraSpec all_y(2, {}, {1, 2}, SetPartition());
    CHECK(subalgebra_contains(all_y, d_mu(2, {})));

    // gamma_2 has strands through X, not blocks K u K'
    SubalgebraSpec strands(2, {1, 2}, {}, SetPartition({{1, 2}}));
    CHECK(!subalgebra_contains(strands, gamma(2)));

    CHECK_THROWS(SubalgebraSpec(3, {1}, {1}, SetPartition({{1}})));  // X, Y overlap
}

TEST_CASE("d_mu_X_xi always lands in its subalgebra") {
    std::mt19937_64 rng(53);
    int built = 0;
    while (built < 20) {
        std::uniform_int_distribution<int> pick_k(2, 5);
        int k = pick_k(rng);
        std::uniform_int_distribution<int> pick_m(1, k);
        int m = pick_m(rng);
        Composition mu;
        int rem = m;
        while (rem > 0) {
            std::uniform_int_distribution<int> part(1, rem);
            int p = part(rng);
            mu.push_back(p);
            rem -= p;
        }
        // X must be a union of sigma_mu cycles: pick a random subset of parts
        std::vector<int> x;
        int start = 1;
        for (int p : mu) {
            if (rng() & 1)
                for (int j = 0; j < p; ++j) x.push_back(start + j);
            start += p;
        }
        auto xis = invariant_partitions_of_subset(x, mu);
        if (xis.empty()) continue;
        std::uniform_int_distribution<size_t> pick_xi(0, xis.size() - 1);
        const SetPartition& xi = xis[pick_xi(rng)];
        std::vector<int> y;
        for (int v = m + 1; v <= k; ++v) y.push_back(v);
        SubalgebraSpec spec(k, x, y, xi);
        CHECK(subalgebra_contains(spec, d_mu_X_xi(k, mu, x, xi)));
        ++built;
    }
}

TEST_CASE("dual_iso restricts, rescales and is multiplicative") {
    // X = Y = empty: identity onto the monoid algebra of I_k^*
    SubalgebraSpec trivial(3, {}, {}, SetPartition());
    for (const auto& u : enumerate_dual(3)) {
        auto [restr, scale] = dual_iso(trivial, u, Rat(5));
        CHECK(restr == u);
        CHECK(scale == 1);
    }

    // Example restriction to Z = {3,4,5,9,10}
    Composition mu{2, 3, 1, 2, 2};
    SetPartition xi({{1, 2}, {6}, {7, 8}});
    std::vector<int> x{1, 2, 6, 7, 8};
    SubalgebraSpec spec(12, x, {11, 12}, xi);
    auto [restr, scale] = dual_iso(spec, d_mu_X_xi(12, mu, x, xi), Rat(5));
    CHECK(restr == Diagram::parse("[5;5] 1,2' | 2,3' | 3,1' | 4,5' | 5,4'"));
    CHECK(scale == 25);
    CHECK_THROWS(dual_iso(spec, d_mu_X_xi(12, mu, x, xi), Rat(0)));

    // multiplicativity: phi(u)phi(v) = phi(u v) with u v = delta^{|Y|}(u o v)
    SubalgebraSpec small(4, {1}, {4}, SetPartition({{1}}));
    std::vector<Diagram> members;
    for (const auto& d : enumerate_diagrams(4))
        if (subalgebra_contains(small, d)) members.push_back(d);
    REQUIRE(members.size() == enumerate_dual(2).size());
    Rat dq(7, 2);
    for (const auto& u : members)
        for (const auto& v : members) {
            auto [uv, c] = vconcat(u, v);
            CHECK(c == static_cast<int>(small.y.size()));
            auto [ru, su] = dual_iso(small, u, dq);
            auto [rv, sv] = dual_iso(small, v, dq);
            auto [ruv, suv] = dual_iso(small, uv, dq);
            // phi(u v) = delta^{|Y|} phi(u o v): scales su*sv vs delta^{|Y|}*suv
            CHECK(vconcat(ru, rv).first == ruv);
            CHECK(su * sv == pow_rat(dq, small.y.size()) * suv);
        }
}
