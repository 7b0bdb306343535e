#include "diagramma/rsk.hpp"

#include <algorithm>
#include <stdexcept>

namespace diagramma {

namespace {

using Block = std::vector<int>;

int block_min(const Block& b) { return b.front(); }

// Row-insert a block into the insertion tableau, recording the new cell in
// the recording tableau with the given entry. Blocks are compared by their
// minima; ties are impossible since blocks are disjoint.
void insert(std::vector<std::vector<Block>>& p, std::vector<std::vector<int>>& q, Block b,
            int entry) {
    size_t r = 0;
    while (true) {
        if (r == p.size()) {
            p.push_back({});
            q.push_back({});
        }
        auto& row = p[r];
        size_t pos = row.size();
        for (size_t c = 0; c < row.size(); ++c)
            if (block_min(row[c]) > block_min(b)) {
                pos = c;
                break;
            }
        if (pos == row.size()) {
            row.push_back(std::move(b));
            q[r].push_back(entry);
            return;
        }
        std::swap(row[pos], b);  // bump
        ++r;
    }
}

// Reverse insertion starting from the corner cell (row, col); returns the
// block pushed out at the top.
Block reverse_insert(std::vector<std::vector<Block>>& p, size_t row, size_t col) {
    Block b = p[row][col];
    p[row].erase(p[row].begin() + col);
    if (p[row].empty()) p.erase(p.begin() + row);
    for (size_t r = row; r-- > 0;) {
        auto& above = p[r];
        size_t pos = 0;
        for (size_t c = 0; c < above.size(); ++c)
            if (block_min(above[c]) < block_min(b)) pos = c;
        std::swap(above[pos], b);
    }
    return b;
}

}  // namespace

bool RskTriple::valid(int n, int k) const {
    if (p.shape() != q.shape()) return false;
    if (!p.is_standard()) return false;
    if (t.rows.size() > 1) return false;
    if (!t.rows.empty() && !t.is_standard()) return false;
    // Q strictly increasing along rows and columns, entries in [n].
    for (const auto& r : q.rows)
        for (size_t c = 0; c < r.size(); ++c) {
            if (r[c] < 1 || r[c] > n) return false;
            if (c + 1 < r.size() && r[c] >= r[c + 1]) return false;
        }
    for (size_t r = 0; r + 1 < q.rows.size(); ++r)
        for (size_t c = 0; c < q.rows[r + 1].size(); ++c)
            if (c >= q.rows[r].size() || q.rows[r][c] >= q.rows[r + 1][c]) return false;
    // Contents of P and T partition [k].
    std::vector<int> all = p.content();
    for (int v : t.content()) all.push_back(v);
    std::sort(all.begin(), all.end());
    std::vector<int> want(k);
    for (int i = 0; i < k; ++i) want[i] = i + 1;
    return all == want;
}

std::string RskTriple::str() const {
    auto fmt_sp = [](const SetPartitionTableau& s) {
        std::string out = "[";
        for (size_t r = 0; r < s.rows.size(); ++r) {
            if (r) out += ";";
            for (size_t c = 0; c < s.rows[r].size(); ++c) {
                if (c) out += " ";
                out += "{";
                for (size_t i = 0; i < s.rows[r][c].size(); ++i)
                    out += (i ? "," : "") + std::to_string(s.rows[r][c][i]);
                out += "}";
            }
        }
        return out + "]";
    };
    std::string out = "P=" + fmt_sp(p) + " Q=[";
    for (size_t r = 0; r < q.rows.size(); ++r) {
        if (r) out += ";";
        for (size_t c = 0; c < q.rows[r].size(); ++c)
            out += (c ? "," : "") + std::to_string(q.rows[r][c]);
    }
    return out + "] T=" + fmt_sp(t);
}

RskTriple rsk_forward(const RestrictedSetPartition& rp) {
    WVector x = from_restricted(rp);
    RskTriple out;
    if (!x.zeroparts.parts.empty()) out.t.rows.push_back(x.zeroparts.parts);

    std::vector<std::vector<Block>> p;
    std::vector<std::vector<int>> q;
    for (int j = 1; j <= x.n; ++j) {
        Block g;
        for (int t = 0; t < x.k; ++t)
            if (x.word[t] == j) g.push_back(t + 1);
        if (g.empty()) continue;
        insert(p, q, std::move(g), j);
    }
    out.p.rows = std::move(p);
    out.q.rows = std::move(q);
    return out;
}

RestrictedSetPartition rsk_backward(int n, int k, const RskTriple& triple) {
    if (!triple.valid(n, k)) throw std::invalid_argument("inconsistent RSK triple");
    auto p = triple.p.rows;
    auto q = triple.q.rows;
    std::vector<std::pair<int, Block>> pairs;  // (letter, block), recovered in reverse
    while (!q.empty()) {
        // locate the largest recording entry; it sits at a corner
        size_t br = 0, bc = 0;
        int best = -1;
        for (size_t r = 0; r < q.size(); ++r)
            for (size_t c = 0; c < q[r].size(); ++c)
                if (q[r][c] > best) {
                    best = q[r][c];
                    br = r;
                    bc = c;
                }
        Block b = reverse_insert(p, br, bc);
        q[br].erase(q[br].begin() + bc);
        if (q[br].empty()) q.erase(q.begin() + br);
        pairs.push_back({best, std::move(b)});
    }
    std::vector<int> word(k, 0);
    for (const auto& [letter, block] : pairs)
        for (int pos : block) word[pos - 1] = letter;
    std::vector<std::vector<int>> zps;
    if (!triple.t.rows.empty()) zps = triple.t.rows[0];
    WVector x(k, n, word, SetPartition(zps));
    return to_restricted(x);
}

RskCountReport rsk_count_check(int n, int k) {
    RskCountReport rep;
    rep.lhs = generalized_bell(n, k);
    Int total = 0;
    for (int i = 0; i <= std::min(n, k); ++i)
        for (const auto& lam : partitions_of(i)) {
            Int f = syt_count(lam);
            for (int r = i; r <= k; ++r)
                total += binomial(n, i) * binomial(k, r) * stirling2(r, i) * bell(k - r) * f * f;
        }
    rep.rhs = total;
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

}  // namespace diagramma
