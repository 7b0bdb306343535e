#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diagramma/delta_poly.hpp"
#include "diagramma/diagram.hpp"
#include "diagramma/matrix.hpp"
#include "diagramma/rook.hpp"
#include "diagramma/set_partition.hpp"

namespace diagramma {

// Basis vector of W_{k,n}: a word over {0,1,..,n} together with a set
// partition of its zero positions.
struct WVector {
    int k = 0, n = 0;
    std::vector<int> word;
    SetPartition zeroparts;

    WVector() = default;
    WVector(int k, int n, std::vector<int> word, SetPartition zeroparts);

    bool operator==(const WVector& o) const {
        return k == o.k && n == o.n && word == o.word && zeroparts == o.zeroparts;
    }
    bool operator<(const WVector& o) const;
    std::string str() const;
};

std::vector<WVector> w_basis(int k, int n);

// Set partition of [n+k] whose first n elements sit in distinct parts.
struct RestrictedSetPartition {
    int n = 0, k = 0;
    SetPartition parts;

    RestrictedSetPartition() = default;
    RestrictedSetPartition(int n, int k, SetPartition parts);
};

WVector from_restricted(const RestrictedSetPartition& p);
RestrictedSetPartition to_restricted(const WVector& x);
// Brute-force oracle: all n-restricted set partitions of [n+k].
std::vector<RestrictedSetPartition> enumerate_restricted(int n, int k);

// Symmetric diagram of a basis vector: letter classes joined top-to-bottom,
// zero blocks split into separate top and bottom copies.
Diagram bar_diagram(const WVector& x);

// Right action of a diagram: zero, or delta^m times a single basis vector.
struct WRightAction {
    bool zero = true;
    int m = 0;
    WVector out;
};
WRightAction act_right(const WVector& x, const Diagram& d);

// Left action of a rook element: letterwise, e_0 fixed; a killed letter
// kills the vector.
std::optional<WVector> act_left(const PartialPerm& s, const WVector& x);

Poly bitrace(int k, int n, const PartialPerm& s, const Diagram& d);

// The left R_n-action on W_{k,n} as a ModuleRep.
RookRep w_left_rep(int k, int n);

// Operator matrix of the right action of d at a specialized delta
// (column j holds the image of basis vector j).
Matrix<Rat> phi_matrix(const Diagram& d, int k, int n, const Rat& deltaq);
// Rank of span{phi_matrix(d) : d in A_k} inside End(W).
long image_rank(int k, int n, const Rat& deltaq);
// dim End_{R_n}(W_{k,n}) from the commutant of the left action generators
// {s_1,...,s_{n-1}, e_{n-1}}.
long w_commutant_dim(int k, int n);

// Classical Schur-Weyl action of A_k on (C^n)^(x)k (0/1 matrix).
Matrix<Rat> phi_k_tensor(const Diagram& d, int k, int n);

GrothendieckVector decompose_w(int k, int n);

}  // namespace diagramma
