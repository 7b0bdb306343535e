#pragma once

#include <string>
#include <vector>

namespace diagramma {

// Set partition of a finite set of positive integers, kept canonical:
// blocks sorted internally, blocks ordered by minimum element.
struct SetPartition {
    std::vector<std::vector<int>> parts;

    SetPartition() = default;
    explicit SetPartition(std::vector<std::vector<int>> p);
    SetPartition(std::initializer_list<std::vector<int>> p)
        : SetPartition(std::vector<std::vector<int>>(p)) {}

    std::vector<int> ground() const;  // sorted union
    int num_parts() const { return static_cast<int>(parts.size()); }
    // Index of the part containing x, or -1.
    int part_of(int x) const;

    bool operator==(const SetPartition& o) const { return parts == o.parts; }
    bool operator!=(const SetPartition& o) const { return parts != o.parts; }
    bool operator<(const SetPartition& o) const { return parts < o.parts; }

    // "{1,3|2}" with blocks in canonical order; "{}" when empty.
    std::string str() const;
};

// Image of a set partition under a map on its elements.
SetPartition apply_map(const SetPartition& sp, const std::vector<int>& image_of);

// All set partitions of the given ground set, in restricted-growth-string
// order (deterministic; the count is bell(|ground|)).
std::vector<SetPartition> set_partitions_of(const std::vector<int>& ground);

// True when every part of `finer` is contained in one part of `coarser`.
bool refines(const SetPartition& finer, const SetPartition& coarser);

}  // namespace diagramma
