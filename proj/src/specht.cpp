#include "diagramma/specht.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "diagramma/linalg.hpp"

namespace diagramma {

namespace {

using Fill = std::vector<std::vector<int>>;

// Tabloid: rows sorted; row order fixed by the shape.
Fill to_tabloid(Fill f) {
    for (auto& row : f) std::sort(row.begin(), row.end());
    return f;
}

void gen_tabloids(const Partition& shape, int row, std::vector<int> remaining, Fill& cur,
                  std::vector<Fill>& out) {
    if (row == shape.length()) {
        out.push_back(cur);
        return;
    }
    int len = shape.parts[row];
    // choose `len` of the remaining entries for this row (sorted subsets)
    std::vector<bool> chosen(remaining.size(), false);
    std::function<void(int, int)> rec = [&](int start, int picked) {
        if (picked == len) {
            std::vector<int> rowvals, rest;
            for (size_t i = 0; i < remaining.size(); ++i)
                (chosen[i] ? rowvals : rest).push_back(remaining[i]);
            cur.push_back(rowvals);
            gen_tabloids(shape, row + 1, rest, cur, out);
            cur.pop_back();
            return;
        }
        for (size_t i = start; i < remaining.size(); ++i) {
            chosen[i] = true;
            rec(static_cast<int>(i) + 1, picked + 1);
            chosen[i] = false;
        }
    };
    rec(0, 0);
}

// Column entries of a filling.
std::vector<std::vector<int>> columns_of(const Fill& f) {
    size_t width = 0;
    for (const auto& r : f) width = std::max(width, r.size());
    std::vector<std::vector<int>> cols(width);
    for (const auto& r : f)
        for (size_t c = 0; c < r.size(); ++c) cols[c].push_back(r[c]);
    return cols;
}

}  // namespace

SpechtModule::SpechtModule(const Partition& lambda) : lambda_(lambda), r_(lambda.size()) {
    syt_ = syt_list(lambda_);
    if (r_ <= 1) return;  // no generators; act_perm handles the identity

    // Enumerate tabloids and index them.
    std::vector<Fill> tabloids;
    std::vector<int> all(r_);
    for (int i = 0; i < r_; ++i) all[i] = i + 1;
    Fill cur;
    gen_tabloids(lambda_, 0, all, cur, tabloids);
    std::map<Fill, int> index;
    for (size_t i = 0; i < tabloids.size(); ++i) index[tabloids[i]] = static_cast<int>(i);
    size_t nt = tabloids.size();
    size_t f = syt_.size();

    // Polytabloid expansion matrix E (tabloids x SYT).
    Matrix<Rat> expansion(nt, f);
    for (size_t t = 0; t < f; ++t) {
        const Fill& fill = syt_[t].rows;
        auto cols = columns_of(fill);
        // Iterate the column stabilizer as a product of per-column
        // permutations, tracked with an odometer of permutation states.
        std::vector<std::vector<int>> perms(cols.size());
        for (size_t c = 0; c < cols.size(); ++c) {
            perms[c].resize(cols[c].size());
            for (size_t i = 0; i < cols[c].size(); ++i) perms[c][i] = static_cast<int>(i);
        }
        std::function<void(size_t, int, std::map<int, int>&)> rec = [&](size_t c, int sign,
                                                                        std::map<int, int>& sub) {
            if (c == cols.size()) {
                Fill g = fill;
                for (auto& row : g)
                    for (int& v : row) {
                        auto it = sub.find(v);
                        if (it != sub.end()) v = it->second;
                    }
                expansion(index.at(to_tabloid(g)), t) += sign;
                return;
            }
            std::vector<int> p(cols[c].size());
            for (size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
            do {
                int psign = 1;
                for (size_t i = 0; i < p.size(); ++i)
                    for (size_t j = i + 1; j < p.size(); ++j)
                        if (p[i] > p[j]) psign = -psign;
                for (size_t i = 0; i < p.size(); ++i) sub[cols[c][i]] = cols[c][p[i]];
                rec(c + 1, sign * psign, sub);
            } while (std::next_permutation(p.begin(), p.end()));
            for (int v : cols[c]) sub.erase(v);
        };
        std::map<int, int> sub;
        rec(0, 1, sub);
    }

    // Generator action on tabloids, pushed to the polytabloid basis.
    for (int s = 1; s < r_; ++s) {
        Matrix<Rat> permuted(nt, f);
        for (size_t t = 0; t < f; ++t)
            for (size_t row = 0; row < nt; ++row) {
                if (expansion(row, t) == 0) continue;
                Fill g = tabloids[row];
                for (auto& rr : g)
                    for (int& v : rr) {
                        if (v == s) v = s + 1;
                        else if (v == s + 1) v = s;
                    }
                permuted(index.at(to_tabloid(g)), t) += expansion(row, t);
            }
        auto m = solve_multi(expansion, permuted);
        if (!m) throw std::logic_error("polytabloid expansion lost rank");
        gens_.push_back(*m);
    }
}

const Matrix<Rat>& SpechtModule::act_adjacent(int i) const {
    if (i < 1 || i >= r_) throw std::invalid_argument("adjacent transposition out of range");
    return gens_[i - 1];
}

Matrix<Rat> SpechtModule::act_perm(const std::vector<int>& image) const {
    if (static_cast<int>(image.size()) != r_)
        throw std::invalid_argument("permutation size mismatch");
    Matrix<Rat> m = Matrix<Rat>::identity(syt_.size());
    // Bubble-sort the one-line word by right multiplications w s_j; then
    // w = s_{j_r} ... s_{j_1} and M(w) multiplies in that order.
    std::vector<int> w = image;
    std::vector<int> applied;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j = 0; j + 1 < r_; ++j)
            if (w[j] > w[j + 1]) {
                std::swap(w[j], w[j + 1]);
                applied.push_back(j + 1);  // s_{j+1} in 1-based labels
                moved = true;
            }
    }
    for (auto it = applied.rbegin(); it != applied.rend(); ++it) m = m * act_adjacent(*it);
    return m;
}

}  // namespace diagramma
