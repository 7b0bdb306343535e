#pragma once

#include <map>
#include <vector>

#include "diagramma/diagram.hpp"
#include "diagramma/set_partition.hpp"

namespace diagramma {

// Compositions are ordered tuples of positive integers; partitions live in
// combinatorics.hpp. d_mu is indexed by compositions.
using Composition = std::vector<int>;

Diagram gamma(int i);  // diagram of the cycle (1,...,i) in A_i
Diagram e1();          // {{1},{1'}} in A_1
// Parts {1,1'},...,{i-1,(i-1)'} and {i,...,k,i',...,k'}.
Diagram epsilon(int k, int i);
// gamma_{mu_1} (x) ... (x) gamma_{mu_l} (x) E_1^{(x)(k-m)}.
Diagram d_mu(int k, const Composition& mu);

// V(k,i): rank-i diagrams in A_k whose bottom vertices lie in pairwise
// distinct parts, with 1'..i' propagating. N(k,i) is the cross-section whose
// propagating top blocks sit in minimum-entry order.
std::vector<Diagram> enumerate_V(int k, int i);
std::vector<Diagram> enumerate_N(int k, int i);

// Dual symmetric inverse monoid I_k^*: every part propagating. L(k,i) are
// its rank-i elements with bottom partition {1'},..,{(i-1)'},{i',..,k'};
// K(k,i) is the min-entry-ordered cross-section.
std::vector<Diagram> enumerate_dual(int k);
std::vector<Diagram> enumerate_L(int k, int i);
std::vector<Diagram> enumerate_K(int k, int i);

// sigma_mu = (1..mu_1)(mu_1+1..mu_1+mu_2)...; returned as 1-based images,
// image_of[j-1] = sigma(j).
std::vector<int> sigma_mu(const Composition& mu);

// All set partitions of [m] fixed by sigma_mu (brute-force filter).
std::vector<SetPartition> mu_invariant_partitions(int m, const Composition& mu);
// Same for a subset X of [m]; empty unless sigma_mu(X) = X.
std::vector<SetPartition> invariant_partitions_of_subset(const std::vector<int>& x,
                                                         const Composition& mu);

// Datum (xi, f, {g_P}) parametrizing SP_m^mu: xi a set partition of [l]
// (l = number of parts of mu), f[P] a common divisor of {mu_i : i in P},
// g[P] : P -> [f[P]] with g(min P) = 1.
struct MuInvariantDatum {
    SetPartition xi;
    std::vector<int> f;                   // per part of xi, canonical order
    std::vector<std::map<int, int>> g;    // per part: element -> value
};

// The orbit construction: parts sigma_mu^r(N_P) over all parts P of xi.
SetPartition eta(const Composition& mu, const MuInvariantDatum& datum);
std::vector<MuInvariantDatum> enumerate_mu_invariant_data(const Composition& mu);

// d_mu^{X,xi}: agrees with d_mu outside X u X'; parts K u K' on X u X'.
// Requires sigma_mu(X) = X and sigma_mu(xi) = xi.
Diagram d_mu_X_xi(int k, const Composition& mu, const std::vector<int>& x,
                  const SetPartition& xi);

}  // namespace diagramma
