#include "diagramma/set_partition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace diagramma {

SetPartition::SetPartition(std::vector<std::vector<int>> p) : parts(std::move(p)) {
    std::vector<int> seen;
    for (auto& blk : parts) {
        if (blk.empty()) throw std::invalid_argument("set partition with empty part");
        std::sort(blk.begin(), blk.end());
        for (int x : blk) seen.push_back(x);
    }
    std::sort(parts.begin(), parts.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
    size_t n = seen.size();
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    if (seen.size() != n) throw std::invalid_argument("set partition parts overlap");
}

std::vector<int> SetPartition::ground() const {
    std::vector<int> g;
    for (const auto& blk : parts) g.insert(g.end(), blk.begin(), blk.end());
    std::sort(g.begin(), g.end());
    return g;
}

int SetPartition::part_of(int x) const {
    for (size_t i = 0; i < parts.size(); ++i)
        if (std::binary_search(parts[i].begin(), parts[i].end(), x)) return static_cast<int>(i);
    return -1;
}

std::string SetPartition::str() const {
    std::string s = "{";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += "|";
        for (size_t j = 0; j < parts[i].size(); ++j) {
            if (j) s += ",";
            s += std::to_string(parts[i][j]);
        }
    }
    return s + "}";
}

SetPartition apply_map(const SetPartition& sp, const std::vector<int>& image_of) {
    std::vector<std::vector<int>> out;
    for (const auto& blk : sp.parts) {
        std::vector<int> b;
        for (int x : blk) {
            if (x < 1 || x > static_cast<int>(image_of.size()))
                throw std::invalid_argument("apply_map: element out of range");
            b.push_back(image_of[x - 1]);
        }
        out.push_back(std::move(b));
    }
    return SetPartition(out);
}

std::vector<SetPartition> set_partitions_of(const std::vector<int>& ground) {
    std::vector<SetPartition> out;
    size_t n = ground.size();
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // Restricted growth strings: a[0]=0, a[i] <= 1 + max(a[0..i-1]).
    std::vector<int> a(n, 0);
    while (true) {
        int nblocks = *std::max_element(a.begin(), a.end()) + 1;
        std::vector<std::vector<int>> parts(nblocks);
        for (size_t i = 0; i < n; ++i) parts[a[i]].push_back(ground[i]);
        out.push_back(SetPartition(parts));
        // next RGS
        long i = static_cast<long>(n) - 1;
        for (; i > 0; --i) {
            int mx = 0;
            for (long j = 0; j < i; ++j) mx = std::max(mx, a[j]);
            if (a[i] <= mx) break;
        }
        if (i == 0) break;
        a[i]++;
        for (size_t j = i + 1; j < n; ++j) a[j] = 0;
    }
    return out;
}

bool refines(const SetPartition& finer, const SetPartition& coarser) {
    for (const auto& blk : finer.parts) {
        int p = coarser.part_of(blk[0]);
        if (p < 0) return false;
        for (int x : blk)
            if (coarser.part_of(x) != p) return false;
    }
    return true;
}

}  // namespace diagramma
