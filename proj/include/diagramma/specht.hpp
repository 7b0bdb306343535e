#pragma once

#include <vector>

#include "diagramma/combinatorics.hpp"
#include "diagramma/matrix.hpp"

namespace diagramma {

// Specht module S^lambda of S_r, r = |lambda|, realized inside the tabloid
// permutation module: the standard polytabloids are expanded over tabloids
// and generator images are re-expressed in that basis by exact solves. All
// matrices are rational, no straightening and no square roots.
class SpechtModule {
  public:
    explicit SpechtModule(const Partition& lambda);

    const Partition& shape() const { return lambda_; }
    int dim() const { return static_cast<int>(syt_.size()); }
    const std::vector<StandardTableau>& tableaux() const { return syt_; }

    // Matrix of the adjacent transposition s_i = (i, i+1), 1 <= i <= r-1.
    const Matrix<Rat>& act_adjacent(int i) const;

    // Matrix of an arbitrary permutation given by 0-based images
    // (image[j] = sigma(j)); M(sigma tau) = M(sigma) M(tau).
    Matrix<Rat> act_perm(const std::vector<int>& image) const;

  private:
    Partition lambda_;
    int r_;
    std::vector<StandardTableau> syt_;
    std::vector<Matrix<Rat>> gens_;  // s_1 .. s_{r-1}
};

}  // namespace diagramma
