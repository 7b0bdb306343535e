#include "diagramma/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace diagramma {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Diagram::Diagram(int k, int l, std::vector<std::vector<int>> parts)
    : k_(k), l_(l), parts_(std::move(parts)) {
    if (k < 0 || l < 0) throw std::invalid_argument("diagram sizes must be nonnegative");
    std::vector<int> seen(k_ + l_, 0);
    for (auto& p : parts_) {
        if (p.empty()) throw std::invalid_argument("diagram with empty part");
        std::sort(p.begin(), p.end());
        for (int v : p) {
            if (v < 0 || v >= k_ + l_) throw std::invalid_argument("vertex out of range");
            if (seen[v]++) throw std::invalid_argument("duplicated vertex");
        }
    }
    for (int v = 0; v < k_ + l_; ++v)
        if (!seen[v]) throw std::invalid_argument("uncovered vertex");
    std::sort(parts_.begin(), parts_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
}

SetPartition Diagram::top() const {
    std::vector<std::vector<int>> out;
    for (const auto& p : parts_) {
        std::vector<int> blk;
        for (int v : p)
            if (v < k_) blk.push_back(v + 1);
        if (!blk.empty()) out.push_back(std::move(blk));
    }
    return SetPartition(out);
}

SetPartition Diagram::bottom() const {
    std::vector<std::vector<int>> out;
    for (const auto& p : parts_) {
        std::vector<int> blk;
        for (int v : p)
            if (v >= k_) blk.push_back(v - k_ + 1);
        if (!blk.empty()) out.push_back(std::move(blk));
    }
    return SetPartition(out);
}

int Diagram::rank() const {
    int r = 0;
    for (const auto& p : parts_) {
        bool has_top = p.front() < k_;
        bool has_bottom = p.back() >= k_;
        if (has_top && has_bottom) ++r;
    }
    return r;
}

bool Diagram::all_parts_propagating() const {
    return rank() == static_cast<int>(parts_.size());
}

int Diagram::part_of(int vertex) const {
    for (size_t i = 0; i < parts_.size(); ++i)
        if (std::binary_search(parts_[i].begin(), parts_[i].end(), vertex))
            return static_cast<int>(i);
    throw std::invalid_argument("vertex out of range");
}

std::string Diagram::str() const {
    std::string s = "[" + std::to_string(k_) + ";" + std::to_string(l_) + "]";
    for (size_t i = 0; i < parts_.size(); ++i) {
        s += i ? " | " : " ";
        for (size_t j = 0; j < parts_[i].size(); ++j) {
            if (j) s += ",";
            int v = parts_[i][j];
            s += v < k_ ? std::to_string(v + 1) : std::to_string(v - k_ + 1) + "'";
        }
    }
    return s;
}

Diagram Diagram::parse(const std::string& text) {
    size_t pos = text.find_first_not_of(" \t");
    if (pos == std::string::npos || text[pos] != '[')
        throw std::invalid_argument("diagram must start with [k;l]");
    size_t semi = text.find(';', pos);
    size_t close = text.find(']', pos);
    if (semi == std::string::npos || close == std::string::npos || semi > close)
        throw std::invalid_argument("malformed [k;l] header");
    int k = std::stoi(text.substr(pos + 1, semi - pos - 1));
    int l = std::stoi(text.substr(semi + 1, close - semi - 1));
    std::vector<std::vector<int>> parts;
    std::string body = text.substr(close + 1);
    std::stringstream ss(body);
    std::string part_text;
    while (std::getline(ss, part_text, '|')) {
        std::vector<int> part;
        std::stringstream ps(part_text);
        std::string tok;
        while (std::getline(ps, tok, ',')) {
            size_t a = tok.find_first_not_of(" \t");
            size_t b = tok.find_last_not_of(" \t");
            if (a == std::string::npos) throw std::invalid_argument("empty vertex token");
            tok = tok.substr(a, b - a + 1);
            bool bottom = tok.back() == '\'';
            if (bottom) tok.pop_back();
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("bad vertex token");
            int v = std::stoi(tok);
            if (v < 1 || v > (bottom ? l : k))
                throw std::invalid_argument("vertex out of range in diagram text");
            part.push_back(bottom ? k + v - 1 : v - 1);
        }
        if (!part.empty()) parts.push_back(std::move(part));
    }
    return Diagram(k, l, std::move(parts));
}

Diagram identity_diagram(int k) {
    std::vector<std::vector<int>> parts;
    for (int i = 0; i < k; ++i) parts.push_back({i, k + i});
    return Diagram(k, k, std::move(parts));
}

std::pair<Diagram, int> vconcat(const Diagram& d1, const Diagram& d2) {
    if (d1.bottom_size() != d2.top_size())
        throw std::invalid_argument("vconcat: inner sizes differ");
    int k = d1.top_size(), l = d1.bottom_size(), m = d2.bottom_size();
    // Vertices: 0..k-1 top, k..k+l-1 middle, k+l..k+l+m-1 bottom.
    UnionFind uf(k + l + m);
    for (const auto& p : d1.parts())
        for (size_t j = 1; j < p.size(); ++j) uf.unite(p[0], p[j]);
    // d2's vertex v sits at k+v: its top row is the glued middle row.
    for (const auto& p : d2.parts())
        for (size_t j = 1; j < p.size(); ++j) uf.unite(k + p[0], k + p[j]);
    std::vector<std::vector<int>> comp_members(k + l + m);
    for (int v = 0; v < k + l + m; ++v) comp_members[uf.find(v)].push_back(v);
    int c = 0;
    std::vector<std::vector<int>> parts;
    for (int root = 0; root < k + l + m; ++root) {
        const auto& mem = comp_members[root];
        if (mem.empty()) continue;
        std::vector<int> part;
        for (int v : mem) {
            if (v < k)
                part.push_back(v);
            else if (v >= k + l)
                part.push_back(v - l);  // re-encode bottom to k..k+m-1
        }
        if (part.empty())
            ++c;  // confined to the middle row
        else
            parts.push_back(std::move(part));
    }
    return {Diagram(k, m, std::move(parts)), c};
}

Diagram hconcat(const Diagram& d1, const Diagram& d2) {
    int k1 = d1.top_size(), l1 = d1.bottom_size();
    int k2 = d2.top_size(), l2 = d2.bottom_size();
    int k = k1 + k2, l = l1 + l2;
    std::vector<std::vector<int>> parts;
    for (const auto& p : d1.parts()) {
        std::vector<int> q;
        for (int v : p) q.push_back(v < k1 ? v : k + (v - k1));
        parts.push_back(std::move(q));
    }
    for (const auto& p : d2.parts()) {
        std::vector<int> q;
        for (int v : p) q.push_back(v < k2 ? k1 + v : k + l1 + (v - k2));
        parts.push_back(std::move(q));
    }
    return Diagram(k, l, std::move(parts));
}

std::vector<Diagram> enumerate_diagrams(int k) {
    std::vector<int> ground(2 * k);
    std::iota(ground.begin(), ground.end(), 0);
    std::vector<Diagram> out;
    for (const auto& sp : set_partitions_of(ground)) out.push_back(Diagram(k, k, sp.parts));
    return out;
}

Diagram flip(const Diagram& d) {
    int k = d.top_size(), l = d.bottom_size();
    std::vector<std::vector<int>> parts;
    for (const auto& p : d.parts()) {
        std::vector<int> q;
        for (int v : p) q.push_back(v < k ? l + v : v - k);
        parts.push_back(std::move(q));
    }
    return Diagram(l, k, std::move(parts));
}

}  // namespace diagramma
