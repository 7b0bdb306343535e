#pragma once

#include <map>
#include <string>
#include <vector>

#include "diagramma/rational.hpp"

namespace diagramma {

// Integer partition, parts weakly decreasing. The empty partition is valid.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const;  // |lambda|
    int length() const { return static_cast<int>(parts.size()); }
    int row(int i) const { return i < length() ? parts[i] : 0; }

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return parts != o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }

    // "[2,1]"; the empty partition reads "[]".
    std::string str() const;
    static Partition parse(const std::string& s);
};

// Standard Young tableau: rows strictly increase rightwards, columns downwards,
// entries are 1..n bijectively.
struct StandardTableau {
    std::vector<std::vector<int>> rows;

    Partition shape() const;
    int size() const;
    // Row-reading word, used as the deterministic sort key for syt_list.
    std::vector<int> reading_word() const;
    bool operator==(const StandardTableau& o) const { return rows == o.rows; }
};

// Tableau whose entries are disjoint nonempty sets of positive integers.
struct SetPartitionTableau {
    std::vector<std::vector<std::vector<int>>> rows;  // blocks, each sorted

    Partition shape() const;
    std::vector<int> content() const;  // sorted union of all blocks
    // Standard: block minima strictly increase along rows and down columns.
    bool is_standard() const;
    bool operator==(const SetPartitionTableau& o) const { return rows == o.rows; }
};

Int binomial(long n, long k);
Int factorial(long n);

Int bell(int k);
Int stirling2(int r, int i);
// Number of n-restricted set partitions of [n+k] (elements of [n] pairwise
// in distinct parts); reduces to bell(k) at n=0.
Int generalized_bell(int n, int k);
// B(k,j) = sum_t stirling2(k,t) * binomial(t,j): set partitions of [k] with
// exactly j marked parts.
Int marked_partition_count(int k, int j);

// All partitions of m, lexicographically decreasing: (3),(2,1),(1,1,1).
std::vector<Partition> partitions_of(int m);
// All partitions of every m in 0..mmax, same order within a size.
std::vector<Partition> partitions_up_to(int mmax);

Int syt_count(const Partition& lambda);  // hook length formula
std::vector<StandardTableau> syt_list(const Partition& lambda);

std::vector<Partition> young_up(const Partition& lambda);
std::vector<Partition> young_down(const Partition& lambda);

// g_k(mu): walks of 2k steps on Young's lattice from the empty shape where
// odd steps optionally remove a corner and even steps optionally add one.
Int vacillating_count(int k, const Partition& mu);
std::map<Partition, Int> vacillating_table(int k);

}  // namespace diagramma
