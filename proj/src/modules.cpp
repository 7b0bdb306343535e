#include "diagramma/modules.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace diagramma {

ModuleRep<std::vector<int>, Rat> specht_module(const Partition& lambda) {
    auto mod = std::make_shared<SpechtModule>(lambda);
    ModuleRep<std::vector<int>, Rat> rep;
    for (const auto& t : mod->tableaux()) {
        std::string label = "T";
        for (int v : t.reading_word()) label += std::to_string(v);
        rep.basis.push_back(label);
    }
    if (rep.basis.empty()) rep.basis.push_back("T");  // empty shape
    rep.act = [mod](const std::vector<int>& image) { return mod->act_perm(image); };
    return rep;
}

namespace {

// Shared machinery of standard modules: N(k,i) with index lookup.
struct NBasis {
    int k = 0, i = 0;
    std::vector<Diagram> diagrams;
    std::map<Diagram, int> index;
};

// Membership in V(k,i) plus the data needed to sort back to N(k,i) form:
// blocks attached to 1'..i' and their minimum-order ranks.
struct VForm {
    bool ok = false;
    Diagram sorted;             // element of N(k,i)
    std::vector<int> sigma;     // 0-based images: block at j' is C_{sigma[j]+1}
};

VForm v_form(const Diagram& e, int k, int i) {
    VForm out;
    if (e.rank() != i) return out;
    for (const auto& p : e.parts()) {
        int bottoms = 0;
        for (int v : p) bottoms += v >= k;
        if (bottoms > 1) return out;
    }
    std::vector<int> block_min(i);
    for (int j = 0; j < i; ++j) {
        const auto& p = e.parts()[e.part_of(k + j)];
        if (p.front() >= k) return out;  // j' must propagate
        block_min[j] = p.front();
    }
    // rank of each block in minimum-entry order
    std::vector<int> order(i);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return block_min[a] < block_min[b]; });
    std::vector<int> rank_of_block(i);
    for (int pos = 0; pos < i; ++pos) rank_of_block[order[pos]] = pos;

    std::vector<std::vector<int>> parts;
    for (const auto& p : e.parts()) {
        std::vector<int> q;
        for (int v : p) {
            if (v >= k && v - k < i)
                q.push_back(k + rank_of_block[v - k]);
            else
                q.push_back(v);
        }
        parts.push_back(std::move(q));
    }
    out.ok = true;
    out.sorted = Diagram(k, k, std::move(parts));
    out.sigma = rank_of_block;
    return out;
}

}  // namespace

PkRep standard_module(int k, const Partition& lambda) {
    int i = lambda.size();
    if (i > k) throw std::invalid_argument("standard_module: |lambda| > k");
    auto nb = std::make_shared<NBasis>();
    nb->k = k;
    nb->i = i;
    nb->diagrams = enumerate_N(k, i);
    for (size_t a = 0; a < nb->diagrams.size(); ++a)
        nb->index[nb->diagrams[a]] = static_cast<int>(a);
    auto specht = std::make_shared<SpechtModule>(lambda);
    int f = specht->dim();

    PkRep rep;
    size_t dim = nb->diagrams.size() * static_cast<size_t>(f);
    rep.basis.resize(dim);
    for (size_t a = 0; a < nb->diagrams.size(); ++a)
        for (int t = 0; t < f; ++t)
            rep.basis[a * f + t] = nb->diagrams[a].str() + " #" + std::to_string(t);

    rep.act = [nb, specht, f, k, i, dim](const Diagram& d) {
        if (d.top_size() != k || d.bottom_size() != k)
            throw std::invalid_argument("standard_module: wrong strand count");
        Matrix<Poly> m(dim, dim);
        for (size_t a = 0; a < nb->diagrams.size(); ++a) {
            auto [e, c] = vconcat(d, nb->diagrams[a]);
            VForm vf = v_form(e, k, i);
            if (!vf.ok) continue;  // zero column block
            int dst = nb->index.at(vf.sorted);
            Matrix<Rat> s = specht->act_perm(vf.sigma);
            Poly coeff = Poly::delta(static_cast<unsigned>(c));
            for (int t2 = 0; t2 < f; ++t2)
                for (int t = 0; t < f; ++t) {
                    if (s(t2, t) == 0) continue;
                    m(dst * f + t2, a * f + t) += coeff * Poly(s(t2, t));
                }
        }
        return m;
    };
    return rep;
}

namespace {

// L(k,i) bookkeeping: the i bottom blocks are {1'},..,{(i-1)'},{i',..,k'}.
struct KBasis {
    int k = 0, i = 0;
    std::vector<Diagram> diagrams;
    std::map<Diagram, int> index;
};

struct LForm {
    bool ok = false;
    Diagram sorted;
    std::vector<int> sigma;
};

// e must lie in I_k^*; checks rank i (which forces the L(k,i) bottom
// partition) and sorts the attached top blocks to K(k,i) form.
LForm l_form(const Diagram& e, int k, int i) {
    LForm out;
    if (e.rank() != i || !e.all_parts_propagating()) return out;
    {
        // bottom partition must still be {1'},..,{(i-1)'},{i',..,k'}
        std::vector<std::vector<int>> want;
        for (int a = 1; a < i; ++a) want.push_back({a});
        std::vector<int> coarse;
        for (int a = i; a <= k; ++a) coarse.push_back(a);
        want.push_back(coarse);
        if (e.bottom() != SetPartition(want)) return out;
    }
    std::vector<int> block_min(i);
    for (int a = 0; a < i; ++a) {
        const auto& p = e.parts()[e.part_of(k + a)];  // block of a' (a<i-1) or the coarse block
        block_min[a] = p.front();
    }
    std::vector<int> order(i);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return block_min[a] < block_min[b]; });
    std::vector<int> rank_of_block(i);
    for (int pos = 0; pos < i; ++pos) rank_of_block[order[pos]] = pos;

    std::vector<std::vector<int>> parts;
    for (const auto& p : e.parts()) {
        std::vector<int> tops;
        int attach = -1;
        for (int v : p) {
            if (v < k)
                tops.push_back(v);
            else if (attach < 0)
                attach = std::min(v - k, i - 1);
        }
        int dst = rank_of_block[attach];
        if (dst < i - 1)
            tops.push_back(k + dst);
        else
            for (int b = i - 1; b < k; ++b) tops.push_back(k + b);
        parts.push_back(std::move(tops));
    }
    out.ok = true;
    out.sorted = Diagram(k, k, std::move(parts));
    out.sigma = rank_of_block;
    return out;
}

DualRep zero_dual_module() {
    DualRep rep;
    rep.act = [](const Diagram&) { return Matrix<Rat>(0, 0); };
    return rep;
}

}  // namespace

DualRep dual_module(int k, const Partition& lambda) {
    int i = lambda.size();
    if (i < 1 || i > k) return zero_dual_module();
    auto kb = std::make_shared<KBasis>();
    kb->k = k;
    kb->i = i;
    kb->diagrams = enumerate_K(k, i);
    for (size_t a = 0; a < kb->diagrams.size(); ++a)
        kb->index[kb->diagrams[a]] = static_cast<int>(a);
    auto specht = std::make_shared<SpechtModule>(lambda);
    int f = specht->dim();
    size_t dim = kb->diagrams.size() * static_cast<size_t>(f);

    DualRep rep;
    rep.basis.resize(dim);
    for (size_t a = 0; a < kb->diagrams.size(); ++a)
        for (int t = 0; t < f; ++t)
            rep.basis[a * f + t] = kb->diagrams[a].str() + " #" + std::to_string(t);

    rep.act = [kb, specht, f, k, i, dim](const Diagram& u) {
        if (u.top_size() != k || u.bottom_size() != k || !u.all_parts_propagating())
            throw std::invalid_argument("dual_module: element outside I_k^*");
        Matrix<Rat> m(dim, dim);
        for (size_t a = 0; a < kb->diagrams.size(); ++a) {
            auto [e, c] = vconcat(u, kb->diagrams[a]);
            if (c != 0) throw std::logic_error("I_k^* product produced a delta factor");
            LForm lf = l_form(e, k, i);
            if (!lf.ok) continue;
            int dst = kb->index.at(lf.sorted);
            Matrix<Rat> s = specht->act_perm(lf.sigma);
            for (int t2 = 0; t2 < f; ++t2)
                for (int t = 0; t < f; ++t) m(dst * f + t2, a * f + t) += s(t2, t);
        }
        return m;
    };
    return rep;
}

DualRep dual_module_spec(const SubalgebraSpec& spec, const Partition& lambda,
                         const Rat& deltaq) {
    if (deltaq == 0) throw std::invalid_argument("dual_module_spec needs delta != 0");
    int t = spec.t();
    int j = lambda.size();
    Rat scale = pow_rat(deltaq, static_cast<unsigned>(spec.y.size()));
    if (j > t) return zero_dual_module();
    if (j == 0) {
        DualRep rep;
        if (t > 0) return zero_dual_module();
        rep.basis.push_back("()");
        auto spec_copy = spec;
        rep.act = [spec_copy, scale](const Diagram& d) {
            if (!subalgebra_contains(spec_copy, d))
                throw std::invalid_argument("element outside I(X,Y,xi)");
            Matrix<Rat> m(1, 1);
            m(0, 0) = scale;
            return m;
        };
        return rep;
    }
    DualRep inner = dual_module(t, lambda);
    auto spec_copy = spec;
    DualRep rep;
    rep.basis = inner.basis;
    rep.act = [spec_copy, inner, scale](const Diagram& d) {
        return inner.act(restrict_to_z(spec_copy, d)).scaled(scale);
    };
    return rep;
}

PkCharacters::PkCharacters(int k) : k_(k) {
    for (int i = 0; i <= k; ++i)
        for (const auto& lam : partitions_of(i)) {
            lambdas_.push_back(lam);
            reps_.push_back(standard_module(k, lam));
        }
}

const PkRep& PkCharacters::rep(const Partition& lambda) const {
    for (size_t i = 0; i < lambdas_.size(); ++i)
        if (lambdas_[i] == lambda) return reps_[i];
    throw std::invalid_argument("unknown lambda for P_k");
}

Poly PkCharacters::chi(const Partition& lambda, const Diagram& d) const {
    return rep(lambda).act(d).trace();
}

namespace {

// Permutation induced on the propagating parts of e by gluing e over e;
// empty result when the parts do not biject (rank not yet stable).
std::vector<int> block_permutation(const Diagram& e) {
    int k = e.top_size();
    auto [ee, c] = vconcat(e, e);
    (void)c;
    if (ee.rank() != e.rank()) return {};
    std::vector<int> prop;  // part indices of propagating parts of e
    for (size_t p = 0; p < e.parts().size(); ++p) {
        const auto& part = e.parts()[p];
        if (part.front() < k && part.back() >= k) prop.push_back(static_cast<int>(p));
    }
    // Union-find over top/middle/bottom copies, as in vconcat.
    std::vector<int> parent(3 * k);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (const auto& p : e.parts())
        for (size_t j = 1; j < p.size(); ++j) unite(p[0], p[j]);
    for (const auto& p : e.parts())
        for (size_t j = 1; j < p.size(); ++j) unite(k + p[0], k + p[j]);
    int m = static_cast<int>(prop.size());
    std::vector<int> image(m, -1);
    for (int a = 0; a < m; ++a) {
        int rep_top = e.parts()[prop[a]].front();  // top vertex of copy-1 part a
        int root = find(rep_top);
        for (int b = 0; b < m; ++b) {
            int rep_bottom = e.parts()[prop[b]].back();  // bottom vertex (>= k) of copy-2 part b
            if (find(k + rep_bottom) == root) {
                if (image[a] != -1) return {};
                image[a] = b;
            }
        }
        if (image[a] == -1) return {};
    }
    std::vector<bool> hit(m, false);
    for (int v : image) {
        if (hit[v]) return {};
        hit[v] = true;
    }
    return image;
}

Composition cycle_type(const std::vector<int>& image) {
    int m = static_cast<int>(image.size());
    std::vector<bool> seen(m, false);
    std::vector<int> lens;
    for (int a = 0; a < m; ++a) {
        if (seen[a]) continue;
        int len = 0, x = a;
        while (!seen[x]) {
            seen[x] = true;
            x = image[x];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return lens;
}

}  // namespace

CharacterReduction find_character_reduction(const Diagram& d, const PkCharacters& table) {
    int k = d.top_size();
    if (d.bottom_size() != k) throw std::invalid_argument("need a square diagram");
    Diagram e = d;
    std::vector<int> image;
    for (int guard = 0; guard <= 4 * k + 4; ++guard) {
        image = block_permutation(e);
        if (!image.empty() || e.rank() == 0) break;
        e = vconcat(e, e).first;
    }
    CharacterReduction red;
    red.mu = e.rank() == 0 ? Composition{} : cycle_type(image);

    Diagram ref = d_mu(k, red.mu);
    red.s = 0;
    for (const auto& lam : table.lambdas()) {
        Poly p = table.chi(lam, d);
        Poly q = table.chi(lam, ref);
        if (p.is_zero() || q.is_zero()) continue;
        red.s = p.low_degree() - q.low_degree();
        break;
    }
    return red;
}

CharacterReduction find_character_reduction(const Diagram& d) {
    PkCharacters table(d.top_size());
    return find_character_reduction(d, table);
}

bool character_reduction_holds(const PkCharacters& table, const Diagram& d,
                               const CharacterReduction& red) {
    Diagram ref = d_mu(table.k(), red.mu);
    unsigned left = red.s < 0 ? static_cast<unsigned>(-red.s) : 0;
    unsigned right = red.s > 0 ? static_cast<unsigned>(red.s) : 0;
    for (const auto& lam : table.lambdas()) {
        Poly p = table.chi(lam, d) * Poly::delta(left);
        Poly q = table.chi(lam, ref) * Poly::delta(right);
        if (p != q) return false;
    }
    return true;
}

ThmCrReport verify_thm_cr(int k, const Composition& mu, const Partition& lambda,
                          const Rat& deltaq) {
    if (deltaq == 0) throw std::invalid_argument("verify_thm_cr needs delta != 0");
    int m = std::accumulate(mu.begin(), mu.end(), 0);
    if (m > k) throw std::invalid_argument("composition overflows k");
    PkRep pmod = standard_module(k, lambda);
    ThmCrReport rep;
    rep.lhs = trace_of(pmod, d_mu(k, mu)).at(deltaq);

    std::vector<int> y;
    for (int v = m + 1; v <= k; ++v) y.push_back(v);
    Rat total = 0;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> x;
        for (int v = 1; v <= m; ++v)
            if (mask & (1u << (v - 1))) x.push_back(v);
        for (const auto& xi : invariant_partitions_of_subset(x, mu)) {
            SubalgebraSpec spec(k, x, y, xi);
            if (lambda.size() > spec.t()) continue;  // convention: chi = 0
            DualRep mod = dual_module_spec(spec, lambda, deltaq);
            if (mod.dim() == 0) continue;
            total += trace_of(mod, d_mu_X_xi(k, mu, x, xi));
        }
    }
    rep.rhs = total;
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

}  // namespace diagramma
