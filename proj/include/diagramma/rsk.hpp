#pragma once

#include <string>

#include "diagramma/combinatorics.hpp"
#include "diagramma/wbimodule.hpp"

namespace diagramma {

// Triple ((P,Q),T): P a standard set-partition tableau with disjoint blocks
// from [k]; Q a standard tableau of the same shape with entries from [n];
// T a single-row standard set-partition tableau on the complement of P's
// content in [k].
struct RskTriple {
    SetPartitionTableau p;
    StandardTableau q;  // entries from [n], rows/columns strictly increasing
    SetPartitionTableau t;

    bool valid(int n, int k) const;
    std::string str() const;
};

RskTriple rsk_forward(const RestrictedSetPartition& p);
RestrictedSetPartition rsk_backward(int n, int k, const RskTriple& t);

struct RskCountReport {
    Int lhs, rhs;
    bool equal = false;
};
// generalized_bell(n,k) against the Stirling/Bell/f^lambda double sum.
RskCountReport rsk_count_check(int n, int k);

}  // namespace diagramma
