#pragma once

#include <string>
#include <utility>
#include <vector>

#include "diagramma/set_partition.hpp"

namespace diagramma {

// Partition diagram on [k] u [l']. Vertices are encoded as 0..k-1 for the
// top row (1..k) and k..k+l-1 for the bottom row (1'..l'), which makes the
// canonical total order 1 < ... < k < 1' < ... < l' plain integer order.
class Diagram {
  public:
    Diagram() : k_(0), l_(0) {}
    // Parts may arrive in any order; they are canonicalized and validated
    // (disjoint, nonempty, covering all 2 rows).
    Diagram(int k, int l, std::vector<std::vector<int>> parts);

    int top_size() const { return k_; }
    int bottom_size() const { return l_; }
    const std::vector<std::vector<int>>& parts() const { return parts_; }

    // Top / bottom set partitions with 1-based vertex labels.
    SetPartition top() const;
    SetPartition bottom() const;
    int rank() const;  // number of propagating parts
    bool all_parts_propagating() const;

    // Part index containing the given encoded vertex.
    int part_of(int vertex) const;

    bool operator==(const Diagram& o) const {
        return k_ == o.k_ && l_ == o.l_ && parts_ == o.parts_;
    }
    bool operator!=(const Diagram& o) const { return !(*this == o); }
    bool operator<(const Diagram& o) const {
        if (k_ != o.k_) return k_ < o.k_;
        if (l_ != o.l_) return l_ < o.l_;
        return parts_ < o.parts_;
    }

    // Text grammar: "[k;l] part ( '|' part )*", vertices comma-separated,
    // bottom vertices carry a prime suffix. Output is always canonical.
    std::string str() const;
    static Diagram parse(const std::string& text);

  private:
    int k_, l_;
    std::vector<std::vector<int>> parts_;
};

Diagram identity_diagram(int k);

// Vertical concatenation d1 o d2 (bottom of d1 glued to top of d2) and the
// number c of connected components confined to the glued middle row.
std::pair<Diagram, int> vconcat(const Diagram& d1, const Diagram& d2);

// Horizontal concatenation; d2's vertices are shifted past d1's.
Diagram hconcat(const Diagram& d1, const Diagram& d2);

// All of A_k in restricted-growth order; size bell(2k).
std::vector<Diagram> enumerate_diagrams(int k);

// Diagram with the same parts, top and bottom rows swapped.
Diagram flip(const Diagram& d);

}  // namespace diagramma
