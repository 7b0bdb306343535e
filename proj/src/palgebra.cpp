#include "diagramma/palgebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace diagramma {

AlgebraElement::AlgebraElement(const Diagram& d, const Poly& coeff) : k_(d.top_size()) {
    if (d.top_size() != d.bottom_size())
        throw std::invalid_argument("algebra elements live on square diagrams");
    add(d, coeff);
}

AlgebraElement& AlgebraElement::add(const Diagram& d, const Poly& coeff) {
    if (d.top_size() != k_ || d.bottom_size() != k_)
        throw std::invalid_argument("strand mismatch");
    if (coeff.is_zero()) return *this;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        terms_.emplace(d, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    if (k_ != o.k_) throw std::invalid_argument("strand mismatch");
    AlgebraElement r = *this;
    for (const auto& [d, c] : o.terms_) r.add(d, c);
    return r;
}

AlgebraElement AlgebraElement::scaled(const Poly& s) const {
    AlgebraElement r(k_);
    for (const auto& [d, c] : terms_) r.add(d, c * s);
    return r;
}

std::map<Diagram, Rat> AlgebraElement::specialized(const Rat& q) const {
    std::map<Diagram, Rat> out;
    for (const auto& [d, c] : terms_) {
        Rat v = c.at(q);
        if (v != 0) out.emplace(d, v);
    }
    return out;
}

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [d, c] : terms_) {
        if (!s.empty()) s += "\n";
        s += c.str() + " * " + d.str();
    }
    return s;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.strands() != b.strands()) throw std::invalid_argument("strand mismatch");
    AlgebraElement r(a.strands());
    for (const auto& [d1, c1] : a.terms())
        for (const auto& [d2, c2] : b.terms()) {
            auto [d, c] = vconcat(d1, d2);
            r.add(d, c1 * c2 * Poly::delta(c));
        }
    return r;
}

SubalgebraSpec::SubalgebraSpec(int k_, std::vector<int> x_, std::vector<int> y_, SetPartition xi_)
    : k(k_), x(std::move(x_)), y(std::move(y_)), xi(std::move(xi_)) {
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    for (int v : x)
        if (v < 1 || v > k) throw std::invalid_argument("X out of range");
    for (int v : y) {
        if (v < 1 || v > k) throw std::invalid_argument("Y out of range");
        if (std::binary_search(x.begin(), x.end(), v))
            throw std::invalid_argument("X and Y must be disjoint");
    }
    if (xi.ground() != x) throw std::invalid_argument("xi must cover X");
}

std::vector<int> SubalgebraSpec::z() const {
    std::vector<int> out;
    for (int v = 1; v <= k; ++v)
        if (!std::binary_search(x.begin(), x.end(), v) &&
            !std::binary_search(y.begin(), y.end(), v))
            out.push_back(v);
    return out;
}

bool subalgebra_contains(const SubalgebraSpec& spec, const Diagram& d) {
    if (d.top_size() != spec.k || d.bottom_size() != spec.k) return false;
    int k = spec.k;
    for (const auto& blk : spec.xi.parts) {
        std::vector<int> want;
        for (int v : blk) want.push_back(v - 1);
        for (int v : blk) want.push_back(k + v - 1);
        if (d.parts()[d.part_of(blk[0] - 1)] != want) return false;
    }
    for (int yv : spec.y) {
        if (d.parts()[d.part_of(yv - 1)] != std::vector<int>{yv - 1}) return false;
        if (d.parts()[d.part_of(k + yv - 1)] != std::vector<int>{k + yv - 1}) return false;
    }
    // Remaining parts carry Z u Z' and must all propagate.
    for (const auto& p : d.parts()) {
        int first = p.front();
        int label = first < k ? first + 1 : first - k + 1;
        bool in_x = std::binary_search(spec.x.begin(), spec.x.end(), label);
        bool in_y = std::binary_search(spec.y.begin(), spec.y.end(), label);
        if (in_x || in_y) continue;  // checked above
        bool has_top = false, has_bottom = false;
        for (int v : p) {
            int lbl = v < k ? v + 1 : v - k + 1;
            if (std::binary_search(spec.x.begin(), spec.x.end(), lbl) ||
                std::binary_search(spec.y.begin(), spec.y.end(), lbl))
                return false;  // leaks into X or Y
            (v < k ? has_top : has_bottom) = true;
        }
        if (!has_top || !has_bottom) return false;
    }
    return true;
}

Diagram restrict_to_z(const SubalgebraSpec& spec, const Diagram& d) {
    if (!subalgebra_contains(spec, d))
        throw std::invalid_argument("diagram outside I(X,Y,xi)");
    auto zs = spec.z();
    int t = static_cast<int>(zs.size());
    std::vector<int> index_of(spec.k + 1, -1);
    for (int i = 0; i < t; ++i) index_of[zs[i]] = i;
    std::vector<std::vector<int>> parts;
    for (const auto& p : d.parts()) {
        std::vector<int> q;
        bool keep = true;
        for (int v : p) {
            int lbl = v < spec.k ? v + 1 : v - spec.k + 1;
            if (index_of[lbl] < 0) {
                keep = false;
                break;
            }
            q.push_back(v < spec.k ? index_of[lbl] : t + index_of[lbl]);
        }
        if (keep && !q.empty()) parts.push_back(std::move(q));
    }
    return Diagram(t, t, std::move(parts));
}

Diagram extend_from_z(const SubalgebraSpec& spec, const Diagram& u) {
    auto zs = spec.z();
    int t = static_cast<int>(zs.size());
    if (u.top_size() != t || u.bottom_size() != t)
        throw std::invalid_argument("extend_from_z: wrong strand count");
    int k = spec.k;
    std::vector<std::vector<int>> parts;
    for (const auto& p : u.parts()) {
        std::vector<int> q;
        for (int v : p) q.push_back(v < t ? zs[v] - 1 : k + zs[v - t] - 1);
        parts.push_back(std::move(q));
    }
    for (const auto& blk : spec.xi.parts) {
        std::vector<int> q;
        for (int v : blk) q.push_back(v - 1);
        for (int v : blk) q.push_back(k + v - 1);
        parts.push_back(std::move(q));
    }
    for (int yv : spec.y) {
        parts.push_back({yv - 1});
        parts.push_back({k + yv - 1});
    }
    return Diagram(k, k, std::move(parts));
}

std::pair<Diagram, Rat> dual_iso(const SubalgebraSpec& spec, const Diagram& d,
                                 const Rat& deltaq) {
    if (deltaq == 0) throw std::invalid_argument("dual_iso undefined at delta = 0");
    return {restrict_to_z(spec, d), pow_rat(deltaq, static_cast<unsigned>(spec.y.size()))};
}

}  // namespace diagramma
