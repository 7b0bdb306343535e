#include "diagramma/wbimodule.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "diagramma/linalg.hpp"

namespace diagramma {

WVector::WVector(int k_, int n_, std::vector<int> word_, SetPartition zeroparts_)
    : k(k_), n(n_), word(std::move(word_)), zeroparts(std::move(zeroparts_)) {
    if (static_cast<int>(word.size()) != k) throw std::invalid_argument("word length != k");
    std::vector<int> zeros;
    for (int j = 0; j < k; ++j) {
        if (word[j] < 0 || word[j] > n) throw std::invalid_argument("letter out of range");
        if (word[j] == 0) zeros.push_back(j + 1);
    }
    if (zeroparts.ground() != zeros)
        throw std::invalid_argument("zeroparts must cover exactly the zero positions");
}

bool WVector::operator<(const WVector& o) const {
    if (k != o.k) return k < o.k;
    if (n != o.n) return n < o.n;
    if (word != o.word) return word < o.word;
    return zeroparts < o.zeroparts;
}

std::string WVector::str() const {
    std::string s = "(";
    for (int j = 0; j < k; ++j) {
        if (j) s += ",";
        s += "e" + std::to_string(word[j]);
    }
    return s + "; " + zeroparts.str() + ")";
}

std::vector<WVector> w_basis(int k, int n) {
    if (k < 1 || n < 1) throw std::invalid_argument("w_basis needs k, n >= 1");
    std::vector<WVector> out;
    std::vector<int> word(k, 0);
    while (true) {
        std::vector<int> zeros;
        for (int j = 0; j < k; ++j)
            if (word[j] == 0) zeros.push_back(j + 1);
        for (const auto& sp : set_partitions_of(zeros)) out.push_back(WVector(k, n, word, sp));
        int j = k - 1;
        while (j >= 0 && word[j] == n) word[j--] = 0;
        if (j < 0) break;
        word[j]++;
    }
    std::sort(out.begin(), out.end());
    return out;
}

RestrictedSetPartition::RestrictedSetPartition(int n_, int k_, SetPartition parts_)
    : n(n_), k(k_), parts(std::move(parts_)) {
    std::vector<int> want(n + k);
    std::iota(want.begin(), want.end(), 1);
    if (parts.ground() != want)
        throw std::invalid_argument("restricted partition must cover [n+k]");
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (parts.part_of(a) == parts.part_of(b))
                throw std::invalid_argument("elements of [n] must lie in distinct parts");
}

WVector from_restricted(const RestrictedSetPartition& p) {
    int n = p.n, k = p.k;
    std::vector<int> word(k, 0);
    std::vector<std::vector<int>> zps;
    for (const auto& blk : p.parts.parts) {
        if (blk.front() <= n) {
            int letter = blk.front();  // the unique element of [n] in this part
            for (int v : blk)
                if (v > n) word[v - n - 1] = letter;
        } else {
            std::vector<int> z;
            for (int v : blk) z.push_back(v - n);
            zps.push_back(std::move(z));
        }
    }
    return WVector(k, n, word, SetPartition(zps));
}

RestrictedSetPartition to_restricted(const WVector& x) {
    std::vector<std::vector<int>> parts;
    for (int l = 1; l <= x.n; ++l) {
        std::vector<int> blk{l};
        for (int j = 0; j < x.k; ++j)
            if (x.word[j] == l) blk.push_back(j + 1 + x.n);
        parts.push_back(std::move(blk));
    }
    for (const auto& z : x.zeroparts.parts) {
        std::vector<int> blk;
        for (int v : z) blk.push_back(v + x.n);
        parts.push_back(std::move(blk));
    }
    return RestrictedSetPartition(x.n, x.k, SetPartition(parts));
}

std::vector<RestrictedSetPartition> enumerate_restricted(int n, int k) {
    std::vector<int> ground(n + k);
    std::iota(ground.begin(), ground.end(), 1);
    std::vector<RestrictedSetPartition> out;
    for (const auto& sp : set_partitions_of(ground)) {
        bool ok = true;
        for (int a = 1; a <= n && ok; ++a)
            for (int b = a + 1; b <= n && ok; ++b)
                if (sp.part_of(a) == sp.part_of(b)) ok = false;
        if (ok) out.push_back(RestrictedSetPartition(n, k, sp));
    }
    return out;
}

namespace {

// Letter classes C_j = positions carrying letter j, 1-based positions.
std::vector<std::vector<int>> letter_classes(const WVector& x) {
    std::vector<std::vector<int>> c(x.n);
    for (int j = 0; j < x.k; ++j)
        if (x.word[j] > 0) c[x.word[j] - 1].push_back(j + 1);
    return c;
}

}  // namespace

Diagram bar_diagram(const WVector& x) {
    int k = x.k;
    std::vector<std::vector<int>> parts;
    for (const auto& c : letter_classes(x)) {
        if (c.empty()) continue;
        std::vector<int> p;
        for (int v : c) p.push_back(v - 1);
        for (int v : c) p.push_back(k + v - 1);
        parts.push_back(std::move(p));
    }
    for (const auto& z : x.zeroparts.parts) {
        std::vector<int> top, bottom;
        for (int v : z) top.push_back(v - 1);
        for (int v : z) bottom.push_back(k + v - 1);
        parts.push_back(std::move(top));
        parts.push_back(std::move(bottom));
    }
    return Diagram(k, k, std::move(parts));
}

WRightAction act_right(const WVector& x, const Diagram& d) {
    if (d.top_size() != x.k || d.bottom_size() != x.k)
        throw std::invalid_argument("act_right: diagram strand mismatch");
    WRightAction result;
    int nclasses = 0;
    for (const auto& c : letter_classes(x)) nclasses += !c.empty();

    // Zero unless every letter class survives with its own propagating part.
    // A part of top(d) joining two classes merges them (rank drops), and a
    // class whose component misses the bottom row dies (rank drops too), so
    // rank preservation is the whole condition.
    Diagram dbar = bar_diagram(x);
    auto [e, m] = vconcat(dbar, d);
    if (e.rank() != nclasses) return result;

    // Read the output vector off the bottom parts of e.
    std::vector<int> word(x.k, 0);
    std::vector<std::vector<int>> zps;
    for (const auto& p : e.parts()) {
        std::vector<int> tops, bottoms;
        for (int v : p)
            (v < x.k ? tops : bottoms).push_back(v);
        if (bottoms.empty()) continue;
        if (tops.empty()) {
            std::vector<int> z;
            for (int v : bottoms) z.push_back(v - x.k + 1);
            zps.push_back(std::move(z));
        } else {
            int letter = x.word[tops.front()];  // the class this part came from
            if (letter == 0) throw std::logic_error("zero block reached the bottom row");
            for (int v : bottoms) word[v - x.k] = letter;
        }
    }
    result.zero = false;
    result.m = m;
    result.out = WVector(x.k, x.n, std::move(word), SetPartition(zps));
    return result;
}

std::optional<WVector> act_left(const PartialPerm& s, const WVector& x) {
    if (s.n != x.n) throw std::invalid_argument("act_left: monoid size mismatch");
    std::vector<int> word = x.word;
    for (int& v : word) {
        if (v == 0) continue;
        v = s.apply(v);
        if (v == 0) return std::nullopt;
    }
    return WVector(x.k, x.n, std::move(word), x.zeroparts);
}

Poly bitrace(int k, int n, const PartialPerm& s, const Diagram& d) {
    Poly total;
    for (const auto& x : w_basis(k, n)) {
        WRightAction r = act_right(x, d);
        if (r.zero) continue;
        auto z = act_left(s, r.out);
        if (z && *z == x) total += Poly::delta(static_cast<unsigned>(r.m));
    }
    return total;
}

RookRep w_left_rep(int k, int n) {
    auto basis = std::make_shared<std::vector<WVector>>(w_basis(k, n));
    auto index = std::make_shared<std::map<WVector, int>>();
    for (size_t i = 0; i < basis->size(); ++i) (*index)[(*basis)[i]] = static_cast<int>(i);
    RookRep rep;
    for (const auto& x : *basis) rep.basis.push_back(x.str());
    size_t dim = basis->size();
    rep.act = [basis, index, dim, n](const PartialPerm& s) {
        if (s.n != n) throw std::invalid_argument("wrong monoid size");
        Matrix<Rat> m(dim, dim);
        for (size_t j = 0; j < dim; ++j) {
            auto z = act_left(s, (*basis)[j]);
            if (z) m(index->at(*z), j) = 1;
        }
        return m;
    };
    return rep;
}

Matrix<Rat> phi_matrix(const Diagram& d, int k, int n, const Rat& deltaq) {
    auto basis = w_basis(k, n);
    std::map<WVector, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
    Matrix<Rat> m(basis.size(), basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
        WRightAction r = act_right(basis[j], d);
        if (r.zero) continue;
        m(index.at(r.out), j) += pow_rat(deltaq, static_cast<unsigned>(r.m));
    }
    return m;
}

long image_rank(int k, int n, const Rat& deltaq) {
    std::vector<std::vector<Rat>> rows;
    for (const auto& d : enumerate_diagrams(k))
        rows.push_back(phi_matrix(d, k, n, deltaq).vectorized());
    return rank_of_rows(rows);
}

long w_commutant_dim(int k, int n) {
    RookRep rep = w_left_rep(k, n);
    std::vector<Matrix<Rat>> gens;
    for (int i = 1; i < n; ++i) gens.push_back(rep.act(PartialPerm::transposition(n, i)));
    gens.push_back(rep.act(PartialPerm::diag_idempotent(n, n - 1)));
    return commutant_dimension(gens);
}

Matrix<Rat> phi_k_tensor(const Diagram& d, int k, int n) {
    if (d.top_size() != k || d.bottom_size() != k)
        throw std::invalid_argument("phi_k_tensor: strand mismatch");
    size_t dim = 1;
    for (int j = 0; j < k; ++j) dim *= n;
    Matrix<Rat> m(dim, dim);
    std::vector<int> iv(k), jv(k);
    for (size_t row = 0; row < dim; ++row) {
        size_t t = row;
        for (int p = k - 1; p >= 0; --p) {
            iv[p] = static_cast<int>(t % n) + 1;
            t /= n;
        }
        for (size_t col = 0; col < dim; ++col) {
            size_t u = col;
            for (int p = k - 1; p >= 0; --p) {
                jv[p] = static_cast<int>(u % n) + 1;
                u /= n;
            }
            bool ok = true;
            for (const auto& part : d.parts()) {
                int val = 0;
                for (int v : part) {
                    int w = v < k ? iv[v] : jv[v - k];
                    if (val == 0)
                        val = w;
                    else if (val != w) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
            }
            if (ok) m(row, col) = 1;
        }
    }
    return m;
}

GrothendieckVector decompose_w(int k, int n) {
    return decompose_by_character(n, w_left_rep(k, n));
}

}  // namespace diagramma
