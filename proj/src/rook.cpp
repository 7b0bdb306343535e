#include "diagramma/rook.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "diagramma/linalg.hpp"
#include "json.hpp"

namespace diagramma {

PartialPerm::PartialPerm(int n_, std::vector<int> img_) : n(n_), img(std::move(img_)) {
    if (static_cast<int>(img.size()) != n)
        throw std::invalid_argument("partial permutation image size mismatch");
    std::vector<bool> used(n + 1, false);
    for (int v : img) {
        if (v < 0 || v > n) throw std::invalid_argument("image out of range");
        if (v > 0) {
            if (used[v]) throw std::invalid_argument("partial permutation not injective");
            used[v] = true;
        }
    }
}

PartialPerm PartialPerm::identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    return PartialPerm(n, img);
}

PartialPerm PartialPerm::diag_idempotent(int n, int i) {
    if (i < 0 || i > n) throw std::invalid_argument("e_i needs 0 <= i <= n");
    std::vector<int> img(n, 0);
    for (int j = 0; j < i; ++j) img[j] = j + 1;
    return PartialPerm(n, img);
}

PartialPerm PartialPerm::transposition(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("s_i needs 1 <= i < n");
    auto p = identity(n);
    std::swap(p.img[i - 1], p.img[i]);
    return p;
}

int PartialPerm::rank() const {
    int r = 0;
    for (int v : img) r += v > 0;
    return r;
}

Matrix<Rat> PartialPerm::matrix() const {
    Matrix<Rat> m(n, n);
    for (int j = 0; j < n; ++j)
        if (img[j] > 0) m(img[j] - 1, j) = 1;
    return m;
}

std::string PartialPerm::str() const {
    std::string s;
    for (int j = 0; j < n; ++j) {
        if (j) s += ",";
        s += std::to_string(img[j]);
    }
    return s;
}

PartialPerm PartialPerm::parse(int n, const std::string& s) {
    std::vector<int> img;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) img.push_back(std::stoi(tok));
    return PartialPerm(n, img);
}

PartialPerm compose(const PartialPerm& a, const PartialPerm& b) {
    if (a.n != b.n) throw std::invalid_argument("size mismatch");
    std::vector<int> img(a.n, 0);
    for (int j = 0; j < a.n; ++j)
        if (b.img[j] > 0) img[j] = a.img[b.img[j] - 1];
    return PartialPerm(a.n, img);
}

std::vector<PartialPerm> enumerate_rook(int n) {
    std::vector<PartialPerm> out;
    std::vector<int> img(n, 0);
    std::function<void(int)> rec = [&](int j) {
        if (j == n) {
            out.push_back(PartialPerm(n, img));
            return;
        }
        for (int v = 0; v <= n; ++v) {
            if (v > 0) {
                bool used = false;
                for (int t = 0; t < j; ++t) used |= img[t] == v;
                if (used) continue;
            }
            img[j] = v;
            rec(j + 1);
        }
        img[j] = 0;
    };
    rec(0);
    return out;
}

RookRep rook_simple_module(int n, const Partition& lambda) {
    int i = lambda.size();
    if (i > n) throw std::invalid_argument("rook_simple_module: |lambda| > n");
    // i-subsets of [n] in lexicographic order.
    auto subsets = std::make_shared<std::vector<std::vector<int>>>();
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == i) {
            subsets->push_back(cur);
            return;
        }
        for (int v = start; v <= n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    auto index = std::make_shared<std::map<std::vector<int>, int>>();
    for (size_t a = 0; a < subsets->size(); ++a) (*index)[(*subsets)[a]] = static_cast<int>(a);
    auto specht = std::make_shared<SpechtModule>(lambda);
    int f = specht->dim();
    size_t dim = subsets->size() * static_cast<size_t>(f);

    RookRep rep;
    rep.basis.resize(dim);
    for (size_t a = 0; a < subsets->size(); ++a)
        for (int t = 0; t < f; ++t) {
            std::string label = "{";
            for (size_t j = 0; j < (*subsets)[a].size(); ++j)
                label += (j ? "," : "") + std::to_string((*subsets)[a][j]);
            rep.basis[a * f + t] = label + "} #" + std::to_string(t);
        }

    rep.act = [subsets, index, specht, f, i, n, dim](const PartialPerm& s) {
        if (s.n != n) throw std::invalid_argument("wrong monoid size");
        Matrix<Rat> m(dim, dim);
        for (size_t a = 0; a < subsets->size(); ++a) {
            const auto& sub = (*subsets)[a];
            std::vector<int> y(i);
            bool dead = false;
            for (int j = 0; j < i; ++j) {
                y[j] = s.apply(sub[j]);
                if (y[j] == 0) dead = true;
            }
            if (dead) continue;
            std::vector<int> sorted = y;
            std::sort(sorted.begin(), sorted.end());
            std::vector<int> perm(i);  // y = x_{sorted} o perm
            for (int j = 0; j < i; ++j)
                perm[j] = static_cast<int>(
                    std::lower_bound(sorted.begin(), sorted.end(), y[j]) - sorted.begin());
            int dst = index->at(sorted);
            Matrix<Rat> sm = specht->act_perm(perm);
            for (int t2 = 0; t2 < f; ++t2)
                for (int t = 0; t < f; ++t) m(dst * f + t2, a * f + t) += sm(t2, t);
        }
        return m;
    };
    return rep;
}

RookRep trivial_rep(int n) { return rook_simple_module(n, Partition()); }

RookRep natural_rep(int n) { return rook_simple_module(n, Partition({1})); }

RookRep tensor_rep(const RookRep& a, const RookRep& b) {
    RookRep rep;
    for (const auto& la : a.basis)
        for (const auto& lb : b.basis) rep.basis.push_back(la + "(x)" + lb);
    rep.act = [a, b](const PartialPerm& s) { return kron(a.act(s), b.act(s)); };
    return rep;
}

RookRep sum_rep(const RookRep& a, const RookRep& b) {
    RookRep rep;
    rep.basis = a.basis;
    rep.basis.insert(rep.basis.end(), b.basis.begin(), b.basis.end());
    rep.act = [a, b](const PartialPerm& s) { return direct_sum(a.act(s), b.act(s)); };
    return rep;
}

RookRep tensor_power(const RookRep& a, int i) {
    if (i == 0) {
        RookRep rep;
        rep.basis = {"1"};
        rep.act = [](const PartialPerm&) { return Matrix<Rat>::identity(1); };
        return rep;
    }
    RookRep r = a;
    for (int j = 1; j < i; ++j) r = tensor_rep(r, a);
    return r;
}

RookCharacters::RookCharacters(int n) : n_(n) {
    for (int i = 0; i <= n; ++i)
        for (const auto& lam : partitions_of(i)) {
            lambdas_.push_back(lam);
            reps_.push_back(rook_simple_module(n, lam));
        }
}

Rat RookCharacters::chi(const Partition& lambda, const PartialPerm& s) const {
    for (size_t i = 0; i < lambdas_.size(); ++i)
        if (lambdas_[i] == lambda) return reps_[i].act(s).trace();
    throw std::invalid_argument("unknown lambda for R_n");
}

GrothendieckVector restrict_gv(const GrothendieckVector& v, int n) {
    GrothendieckVector out;
    for (const auto& [lam, mult] : v) {
        if (lam.size() > n) throw std::invalid_argument("restrict_gv: |lambda| > n");
        if (lam.size() < n) out[lam] += mult;
        for (const auto& nu : young_down(lam)) out[nu] += mult;
    }
    return out;
}

GrothendieckVector induce_gv(const GrothendieckVector& v) {
    GrothendieckVector out;
    for (const auto& [lam, mult] : v) {
        out[lam] += mult;
        for (const auto& nu : young_up(lam)) out[nu] += mult;
    }
    return out;
}

GrothendieckVector induce_hat_gv(const GrothendieckVector& v) {
    GrothendieckVector out;
    for (const auto& [lam, mult] : v)
        for (const auto& nu : young_up(lam)) out[nu] += mult;
    return out;
}

GrothendieckVector g_functor_gv(const GrothendieckVector& v) { return v; }

std::vector<GrothendieckVector> iterate_ind_res(int k, int n) {
    if (n < 1) throw std::invalid_argument("iterate_ind_res needs n >= 1");
    std::vector<GrothendieckVector> out;
    GrothendieckVector cur;
    cur[Partition()] = 1;
    for (int j = 0; j < k; ++j) {
        cur = restrict_gv(cur, n);
        out.push_back(cur);
        cur = induce_gv(cur);
        out.push_back(cur);
    }
    return out;
}

GrothendieckVector decompose_by_character(int n, const RookRep& rep) {
    RookCharacters chars(n);
    auto elements = enumerate_rook(n);
    size_t ncols = chars.lambdas().size();
    Matrix<Rat> a(elements.size(), ncols);
    std::vector<Rat> t(elements.size());
    for (size_t e = 0; e < elements.size(); ++e) {
        for (size_t c = 0; c < ncols; ++c) a(e, c) = chars.chi(chars.lambdas()[c], elements[e]);
        t[e] = rep.act(elements[e]).trace();
    }
    auto sol = solve(a, t);
    if (!sol) throw std::runtime_error("trace vector outside the character span (broken rep)");
    // check it is a genuine solution (the system is overdetermined)
    for (size_t e = 0; e < elements.size(); ++e) {
        Rat acc = 0;
        for (size_t c = 0; c < ncols; ++c) acc += a(e, c) * (*sol)[c];
        if (acc != t[e]) throw std::runtime_error("character solve mismatch");
    }
    GrothendieckVector out;
    for (size_t c = 0; c < ncols; ++c) {
        const Rat& v = (*sol)[c];
        if (v == 0) continue;
        if (v.get_den() != 1 || v < 0)
            throw std::runtime_error("non-integral or negative multiplicity");
        out[chars.lambdas()[c]] = v.get_num();
    }
    return out;
}

namespace {

std::vector<std::pair<Partition, Partition>> branch_edges(const GrothendieckVector& from,
                                                          bool res, int n) {
    std::vector<std::pair<Partition, Partition>> edges;
    for (const auto& [lam, mult] : from) {
        (void)mult;
        if (res) {
            if (lam.size() < n) edges.push_back({lam, lam});
            for (const auto& nu : young_down(lam)) edges.push_back({lam, nu});
        } else {
            edges.push_back({lam, lam});
            for (const auto& nu : young_up(lam)) edges.push_back({lam, nu});
        }
    }
    return edges;
}

}  // namespace

std::string bratteli_emit(int k, int n, const std::string& format) {
    if (format != "dot" && format != "json") throw std::invalid_argument("unknown format");
    auto levels = iterate_ind_res(k, n);
    GrothendieckVector start;
    start[Partition()] = 1;

    if (format == "json") {
        nlohmann::json j;
        j["levels"] = nlohmann::json::array();
        GrothendieckVector prev = start;
        for (size_t step = 0; step < levels.size(); ++step) {
            bool res = step % 2 == 0;
            nlohmann::json lv;
            lv["step"] = static_cast<int>(step) + 1;
            lv["kind"] = res ? "res" : "ind";
            lv["nodes"] = nlohmann::json::array();
            for (const auto& [lam, mult] : levels[step]) {
                nlohmann::json node;
                node["partition"] = lam.parts;
                node["mult"] = std::stol(mult.get_str());
                lv["nodes"].push_back(node);
            }
            lv["edges"] = nlohmann::json::array();
            for (const auto& [from, to] : branch_edges(prev, res, n)) {
                nlohmann::json e;
                e["from"] = from.parts;
                e["to"] = to.parts;
                lv["edges"].push_back(e);
            }
            j["levels"].push_back(lv);
            prev = levels[step];
        }
        return j.dump(2);
    }

    // DOT: one subgraph per level, including the starting level.
    std::ostringstream os;
    os << "digraph bratteli {\n  rankdir=TB;\n";
    auto node_id = [](size_t level, const Partition& p) {
        std::string s = "L" + std::to_string(level) + "_";
        for (int v : p.parts) s += std::to_string(v) + "_";
        return s;
    };
    std::vector<GrothendieckVector> all;
    all.push_back(start);
    all.insert(all.end(), levels.begin(), levels.end());
    for (size_t lv = 0; lv < all.size(); ++lv) {
        os << "  subgraph cluster_" << lv << " {\n    label=\"level " << lv << "\";\n";
        for (const auto& [lam, mult] : all[lv])
            os << "    " << node_id(lv, lam) << " [label=\"" << lam.str() << " x"
               << mult.get_str() << "\"];\n";
        os << "  }\n";
    }
    for (size_t step = 0; step < levels.size(); ++step) {
        bool res = step % 2 == 0;
        for (const auto& [from, to] : branch_edges(all[step], res, n))
            os << "  " << node_id(step, from) << " -> " << node_id(step + 1, to) << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace diagramma
