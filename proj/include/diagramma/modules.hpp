#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "diagramma/combinatorics.hpp"
#include "diagramma/delta_poly.hpp"
#include "diagramma/families.hpp"
#include "diagramma/matrix.hpp"
#include "diagramma/palgebra.hpp"
#include "diagramma/specht.hpp"

namespace diagramma {

// A concrete module: labeled basis plus the map element -> matrix. Matrices
// act on the left (column convention), so act(xy) = act(x) act(y).
template <class Elt, class Scalar>
struct ModuleRep {
    std::vector<std::string> basis;
    std::function<Matrix<Scalar>(const Elt&)> act;
    size_t dim() const { return basis.size(); }
};

using PkRep = ModuleRep<Diagram, Poly>;
using DualRep = ModuleRep<Diagram, Rat>;

template <class Elt, class Scalar>
Scalar trace_of(const ModuleRep<Elt, Scalar>& rep, const Elt& x) {
    return rep.act(x).trace();
}

// Specht module packaged as a ModuleRep over 0-based permutation images.
ModuleRep<std::vector<int>, Rat> specht_module(const Partition& lambda);

// Standard module of P_k(delta) on the basis N(k,|lambda|) x SYT(lambda);
// the action of a diagram drops to zero when the concatenation leaves
// V(k,i), otherwise sorts the propagating blocks back to N(k,i) form and
// pushes the sorting permutation into the Specht factor.
PkRep standard_module(int k, const Partition& lambda);

// Simple module of the dual symmetric inverse monoid I_k^* on
// K(k,|lambda|) x SYT(lambda); zero module when |lambda| = 0 or > k.
DualRep dual_module(int k, const Partition& lambda);

// Simple module of the subalgebra I(X,Y,xi), transported through the
// rescaling isomorphism with C[I_t^*]; diagrams of I(X,Y,xi) act as
// deltaq^{|Y|} times the restricted action. For |lambda| > t this is the
// zero module; for lambda empty it is nonzero only when t = 0.
DualRep dual_module_spec(const SubalgebraSpec& spec, const Partition& lambda,
                         const Rat& deltaq);

// Characters chi_{P_k^lambda} for every lambda |- i <= k, built once.
class PkCharacters {
  public:
    explicit PkCharacters(int k);
    int k() const { return k_; }
    const std::vector<Partition>& lambdas() const { return lambdas_; }
    const PkRep& rep(const Partition& lambda) const;
    Poly chi(const Partition& lambda, const Diagram& d) const;

  private:
    int k_;
    std::vector<Partition> lambdas_;
    std::vector<PkRep> reps_;
};

// Character reduction datum: traces of d agree with
// delta^s times the traces of d_mu. The exponent is a (possibly negative)
// integer; the identity is checked in cleared polynomial form.
struct CharacterReduction {
    Composition mu;
    int s = 0;
};

CharacterReduction find_character_reduction(const Diagram& d);
CharacterReduction find_character_reduction(const Diagram& d, const PkCharacters& table);

// Does chi_lambda(d) == delta^s chi_lambda(d_mu) hold for every lambda
// (cleared of negative powers)?
bool character_reduction_holds(const PkCharacters& table, const Diagram& d,
                               const CharacterReduction& red);

struct ThmCrReport {
    Rat lhs, rhs;
    bool equal = false;
};

// chi_{P_k^lambda}(d_mu) against the sum over (X, xi) of subalgebra
// characters at d_mu^{X,xi}, evaluated at a nonzero rational delta.
ThmCrReport verify_thm_cr(int k, const Composition& mu, const Partition& lambda,
                          const Rat& deltaq);

}  // namespace diagramma
