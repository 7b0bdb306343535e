#pragma once

#include <map>
#include <string>
#include <vector>

#include "diagramma/combinatorics.hpp"
#include "diagramma/matrix.hpp"
#include "diagramma/modules.hpp"

namespace diagramma {

// Partial permutation of [n]: injective on its domain. img[j-1] is the image
// of j, with 0 meaning undefined. Identified with the n x n 0/1 matrix
// having a 1 in row img(j), column j.
struct PartialPerm {
    int n = 0;
    std::vector<int> img;

    PartialPerm() = default;
    PartialPerm(int n, std::vector<int> img);

    static PartialPerm identity(int n);
    static PartialPerm diag_idempotent(int n, int i);  // e_i
    static PartialPerm transposition(int n, int i);    // s_i = (i, i+1)

    int rank() const;
    int apply(int v) const { return v >= 1 && v <= n ? img[v - 1] : 0; }
    Matrix<Rat> matrix() const;

    bool operator==(const PartialPerm& o) const { return n == o.n && img == o.img; }
    bool operator<(const PartialPerm& o) const {
        return n != o.n ? n < o.n : img < o.img;
    }
    std::string str() const;  // comma-separated images, 0 for undefined
    static PartialPerm parse(int n, const std::string& s);
};

// Matrix product (a then after b ... compose(a,b)(x) = a(b(x))).
PartialPerm compose(const PartialPerm& a, const PartialPerm& b);

// All of R_n, deterministic order; size sum_i binom(n,i)^2 i!.
std::vector<PartialPerm> enumerate_rook(int n);

using RookRep = ModuleRep<PartialPerm, Rat>;

// Simple module R_n^lambda on (|lambda|-subsets of [n]) x SYT(lambda);
// lambda empty gives the trivial module, (1) the natural one.
RookRep rook_simple_module(int n, const Partition& lambda);

RookRep trivial_rep(int n);
RookRep natural_rep(int n);
RookRep tensor_rep(const RookRep& a, const RookRep& b);
RookRep sum_rep(const RookRep& a, const RookRep& b);
RookRep tensor_power(const RookRep& a, int i);

// Characters of all simple R_n-modules, built once per n.
class RookCharacters {
  public:
    explicit RookCharacters(int n);
    int n() const { return n_; }
    const std::vector<Partition>& lambdas() const { return lambdas_; }
    Rat chi(const Partition& lambda, const PartialPerm& s) const;

  private:
    int n_;
    std::vector<Partition> lambdas_;
    std::vector<RookRep> reps_;
};

// Decategorified modules: multiplicity of each simple R_n^lambda.
using GrothendieckVector = std::map<Partition, Int>;

// Res R_n -> R_{n-1}: lambda stays when |lambda| < n, and every corner
// removal appears.
GrothendieckVector restrict_gv(const GrothendieckVector& v, int n);
// Ind R_{n-1} -> R_n: lambda plus every corner addition.
GrothendieckVector induce_gv(const GrothendieckVector& v);
GrothendieckVector induce_hat_gv(const GrothendieckVector& v);  // additions only
GrothendieckVector g_functor_gv(const GrothendieckVector& v);   // relabel

// Starting from the trivial class, alternately restrict and induce k times;
// returns all 2k intermediate vectors.
std::vector<GrothendieckVector> iterate_ind_res(int k, int n);

// Expresses the trace vector of `rep` over all of R_n in the basis of
// simple characters; entries are asserted integral and nonnegative.
GrothendieckVector decompose_by_character(int n, const RookRep& rep);

// Figure-style branching graph with 2k half-steps; format "dot" or "json".
std::string bratteli_emit(int k, int n, const std::string& format);

}  // namespace diagramma
