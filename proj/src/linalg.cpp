#include "diagramma/linalg.hpp"

#include <map>
#include <stdexcept>

namespace diagramma {

namespace {

// Row echelon form in place; returns pivot columns. Standard fraction
// arithmetic over Q; fine at desk scale.
std::vector<size_t> echelonize(Matrix<Rat>& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t sel = row;
        while (sel < m.rows() && m(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (size_t j = col; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        Rat inv = 1 / m(row, col);
        for (size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Rat f = m(i, col);
            for (size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

long rank_of(const Matrix<Rat>& m) {
    Matrix<Rat> w = m;
    return static_cast<long>(echelonize(w).size());
}

std::vector<std::vector<Rat>> nullspace(const Matrix<Rat>& m) {
    Matrix<Rat> w = m;
    std::vector<size_t> pivots = echelonize(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(m.cols(), Rat(0));
        v[free_col] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> solve(const Matrix<Rat>& m, const std::vector<Rat>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
    Matrix<Rat> aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    std::vector<size_t> pivots = echelonize(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // inconsistent
    std::vector<Rat> x(m.cols(), Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
    return x;
}

std::optional<Matrix<Rat>> solve_multi(const Matrix<Rat>& m, const Matrix<Rat>& rhs) {
    if (rhs.rows() != m.rows()) throw std::invalid_argument("solve_multi: shape mismatch");
    Matrix<Rat> aug(m.rows(), m.cols() + rhs.cols());
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        for (size_t j = 0; j < rhs.cols(); ++j) aug(i, m.cols() + j) = rhs(i, j);
    }
    std::vector<size_t> pivots = echelonize(aug);
    for (size_t c : pivots)
        if (c >= m.cols()) return std::nullopt;
    Matrix<Rat> x(m.cols(), rhs.cols());
    for (size_t r = 0; r < pivots.size(); ++r)
        for (size_t j = 0; j < rhs.cols(); ++j) x(pivots[r], j) = aug(r, m.cols() + j);
    return x;
}

long rank_of_rows(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return 0;
    Matrix<Rat> m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw std::invalid_argument("rank_of_rows: ragged input");
        for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    }
    return rank_of(m);
}

long sparse_rank(std::vector<std::vector<std::pair<long, Rat>>> rows, long ncols) {
    std::map<long, std::vector<std::pair<long, Rat>>> pivot_rows;  // pivot col -> row
    long rank = 0;
    for (auto& row : rows) {
        std::map<long, Rat> acc(row.begin(), row.end());
        for (auto it = acc.begin(); it != acc.end();) {
            if (it->second == 0) {
                it = acc.erase(it);
                continue;
            }
            auto p = pivot_rows.find(it->first);
            if (p == pivot_rows.end()) {
                ++it;
                continue;
            }
            Rat f = it->second;  // pivot rows are normalized to leading 1
            for (const auto& [c, v] : p->second) acc[c] -= f * v;
            it = acc.upper_bound(p->first);
        }
        std::vector<std::pair<long, Rat>> norm;
        norm.reserve(acc.size());
        for (const auto& [c, v] : acc)
            if (v != 0) norm.emplace_back(c, v);
        if (norm.empty()) continue;
        long lead = norm.front().first;
        Rat inv = 1 / norm.front().second;
        for (auto& [c, v] : norm) v *= inv;
        pivot_rows[lead] = std::move(norm);
        ++rank;
    }
    (void)ncols;
    return rank;
}

long commutant_dimension(const std::vector<Matrix<Rat>>& gens) {
    if (gens.empty()) throw std::invalid_argument("commutant: no generators");
    size_t d = gens[0].rows();
    for (const auto& g : gens)
        if (g.rows() != d || g.cols() != d)
            throw std::invalid_argument("commutant: generators must be square of equal size");
    long n = static_cast<long>(d);
    std::vector<std::vector<std::pair<long, Rat>>> rows;
    rows.reserve(gens.size() * d * d);
    // Unknown X, equations (XA - AX)_{ij} = 0, variable (i,l) has index i*n+l.
    for (const auto& a : gens) {
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) {
                std::map<long, Rat> row;
                for (long l = 0; l < n; ++l) {
                    const Rat& alj = a(l, j);
                    if (alj != 0) row[i * n + l] += alj;
                    const Rat& ail = a(i, l);
                    if (ail != 0) row[l * n + j] -= ail;
                }
                std::vector<std::pair<long, Rat>> r;
                for (const auto& [c, v] : row)
                    if (v != 0) r.emplace_back(c, v);
                if (!r.empty()) rows.push_back(std::move(r));
            }
    }
    long rank = sparse_rank(std::move(rows), n * n);
    return n * n - rank;
}

}  // namespace diagramma
