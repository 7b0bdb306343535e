#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "diagramma/delta_poly.hpp"
#include "diagramma/diagram.hpp"
#include "diagramma/rational.hpp"

namespace diagramma {

// Element of P_k(delta): finite linear combination of (k,k)-diagrams with
// polynomial coefficients in the parameter. Specialization to a rational
// delta is a separate explicit pass.
class AlgebraElement {
  public:
    explicit AlgebraElement(int k) : k_(k) {}
    AlgebraElement(const Diagram& d, const Poly& coeff = Poly(1));

    int strands() const { return k_; }
    const std::map<Diagram, Poly>& terms() const { return terms_; }

    AlgebraElement& add(const Diagram& d, const Poly& coeff);
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement scaled(const Poly& s) const;
    bool operator==(const AlgebraElement& o) const {
        return k_ == o.k_ && terms_ == o.terms_;
    }

    std::map<Diagram, Rat> specialized(const Rat& q) const;

    // One "coeff * diagram" line per term, canonical diagram order.
    std::string str() const;

  private:
    int k_;
    std::map<Diagram, Poly> terms_;
};

// Bilinear extension of d1 d2 = delta^c (d1 o d2).
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

// Subalgebra I(X,Y,xi): X,Y disjoint subsets of [k], xi a set partition of X,
// Z the rest. Spanned by diagrams with parts A u A' for parts A of xi,
// singletons {y},{y'} for y in Y, and only propagating parts over Z u Z'.
struct SubalgebraSpec {
    int k = 0;
    std::vector<int> x, y;  // sorted, 1-based
    SetPartition xi;

    SubalgebraSpec() = default;
    SubalgebraSpec(int k, std::vector<int> x, std::vector<int> y, SetPartition xi);
    std::vector<int> z() const;  // complement, sorted
    int t() const { return k - static_cast<int>(x.size()) - static_cast<int>(y.size()); }
};

bool subalgebra_contains(const SubalgebraSpec& spec, const Diagram& d);

// Restriction of a member diagram to Z u Z', renumbered to t strands.
Diagram restrict_to_z(const SubalgebraSpec& spec, const Diagram& d);
// Inverse: rebuild the member diagram of I(X,Y,xi) over a t-strand diagram.
Diagram extend_from_z(const SubalgebraSpec& spec, const Diagram& u);

// The multiplicative isomorphism I(X,Y,xi) -> C[I_Z^*] evaluated on a basis
// diagram: d maps to scale * restriction, scale = deltaq^{|Y|}. (Equivalently
// the inverse carries a t-strand diagram u to (1/deltaq^{|Y|}) times its
// extension; the unit of I(X,Y,xi) is that rescaled identity extension.)
std::pair<Diagram, Rat> dual_iso(const SubalgebraSpec& spec, const Diagram& d,
                                 const Rat& deltaq);

}  // namespace diagramma
