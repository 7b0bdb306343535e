#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "diagramma/matrix.hpp"
#include "diagramma/rational.hpp"

namespace diagramma {

long rank_of(const Matrix<Rat>& m);

// Basis of the right nullspace {x : Mx = 0}.
std::vector<std::vector<Rat>> nullspace(const Matrix<Rat>& m);

// Any exact solution of Mx = b, or nullopt when the system is inconsistent.
// A consistent homogeneous system returns the zero vector, never nullopt.
std::optional<std::vector<Rat>> solve(const Matrix<Rat>& m, const std::vector<Rat>& b);

// Columnwise solve with matrix right-hand side; nullopt if any column fails.
std::optional<Matrix<Rat>> solve_multi(const Matrix<Rat>& m, const Matrix<Rat>& rhs);

// Rank of the span of a family of row vectors.
long rank_of_rows(const std::vector<std::vector<Rat>>& rows);

// Rank of a sparse homogeneous system given as rows of (column, value) pairs.
// Pivots are chosen greedily after reducing each row, which keeps fill-in
// small for the near-monomial systems the commutant computation produces.
long sparse_rank(std::vector<std::vector<std::pair<long, Rat>>> rows, long ncols);

// dim{X : XA = AX for all A in gens}; gens must be square of equal size.
long commutant_dimension(const std::vector<Matrix<Rat>>& gens);

}  // namespace diagramma
