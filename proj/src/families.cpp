#include "diagramma/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace diagramma {

Diagram gamma(int i) {
    if (i < 1) throw std::invalid_argument("gamma needs i >= 1");
    std::vector<std::vector<int>> parts;
    for (int j = 0; j < i; ++j) parts.push_back({j, i + (j + 1) % i});
    return Diagram(i, i, std::move(parts));
}

Diagram e1() { return Diagram(1, 1, {{0}, {1}}); }

Diagram epsilon(int k, int i) {
    if (i < 1 || i > k) throw std::invalid_argument("epsilon needs 1 <= i <= k");
    std::vector<std::vector<int>> parts;
    for (int a = 0; a < i - 1; ++a) parts.push_back({a, k + a});
    std::vector<int> big;
    for (int a = i - 1; a < k; ++a) big.push_back(a);
    for (int a = i - 1; a < k; ++a) big.push_back(k + a);
    parts.push_back(std::move(big));
    return Diagram(k, k, std::move(parts));
}

Diagram d_mu(int k, const Composition& mu) {
    int m = std::accumulate(mu.begin(), mu.end(), 0);
    for (int p : mu)
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
    if (m > k) throw std::invalid_argument("composition overflows k");
    Diagram d(0, 0, {});
    for (int p : mu) d = hconcat(d, gamma(p));
    for (int j = m; j < k; ++j) d = hconcat(d, e1());
    return d;
}

std::vector<Diagram> enumerate_V(int k, int i) {
    if (i < 0 || i > k) throw std::invalid_argument("enumerate_V needs 0 <= i <= k");
    std::vector<Diagram> out;
    for (const auto& d : enumerate_diagrams(k)) {
        if (d.rank() != i) continue;
        bool ok = true;
        for (const auto& p : d.parts()) {
            int bottoms = 0;
            for (int v : p) bottoms += v >= k;
            if (bottoms > 1) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        // 1'..i' must propagate; then (i+1)'..k' are non-propagating singletons.
        for (int j = 0; j < i && ok; ++j) {
            const auto& p = d.parts()[d.part_of(k + j)];
            if (p.front() >= k) ok = false;
        }
        if (ok) out.push_back(d);
    }
    return out;
}

namespace {
// Top blocks of the parts attached to 1'..i', in attachment order.
std::vector<std::vector<int>> propagating_tops(const Diagram& d, int i) {
    int k = d.top_size();
    std::vector<std::vector<int>> tops(i);
    for (int j = 0; j < i; ++j) {
        for (int v : d.parts()[d.part_of(k + j)])
            if (v < k) tops[j].push_back(v);
    }
    return tops;
}
}  // namespace

std::vector<Diagram> enumerate_N(int k, int i) {
    std::vector<Diagram> out;
    for (const auto& d : enumerate_V(k, i)) {
        auto tops = propagating_tops(d, i);
        bool sorted = true;
        for (int j = 0; j + 1 < i; ++j)
            if (tops[j][0] > tops[j + 1][0]) sorted = false;
        if (sorted) out.push_back(d);
    }
    return out;
}

std::vector<Diagram> enumerate_dual(int k) {
    std::vector<Diagram> out;
    for (const auto& d : enumerate_diagrams(k))
        if (d.all_parts_propagating()) out.push_back(d);
    return out;
}

namespace {
SetPartition l_bottom_partition(int k, int i) {
    std::vector<std::vector<int>> parts;
    for (int j = 1; j < i; ++j) parts.push_back({j});
    std::vector<int> big;
    for (int j = i; j <= k; ++j) big.push_back(j);
    parts.push_back(std::move(big));
    return SetPartition(parts);
}
}  // namespace

std::vector<Diagram> enumerate_L(int k, int i) {
    if (i < 1 || i > k) throw std::invalid_argument("enumerate_L needs 1 <= i <= k");
    SetPartition target = l_bottom_partition(k, i);
    std::vector<Diagram> out;
    for (const auto& d : enumerate_dual(k))
        if (d.rank() == i && d.bottom() == target) out.push_back(d);
    return out;
}

std::vector<Diagram> enumerate_K(int k, int i) {
    std::vector<Diagram> out;
    for (const auto& d : enumerate_L(k, i)) {
        // Attachment order: block connected to {j'} for j < i, then to the
        // coarse block {i',...,k'}.
        std::vector<int> mins;
        for (int j = 0; j < i; ++j) {
            const auto& p = d.parts()[d.part_of(k + j)];
            mins.push_back(p.front());
        }
        if (std::is_sorted(mins.begin(), mins.end())) out.push_back(d);
    }
    return out;
}

std::vector<int> sigma_mu(const Composition& mu) {
    int m = std::accumulate(mu.begin(), mu.end(), 0);
    std::vector<int> image(m);
    int a = 0;
    for (int p : mu) {
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
        for (int j = 0; j < p; ++j) image[a + j] = a + (j + 1) % p + 1;
        a += p;
    }
    return image;
}

std::vector<SetPartition> mu_invariant_partitions(int m, const Composition& mu) {
    if (std::accumulate(mu.begin(), mu.end(), 0) != m)
        throw std::invalid_argument("mu must compose m");
    std::vector<int> ground(m);
    std::iota(ground.begin(), ground.end(), 1);
    auto sigma = sigma_mu(mu);
    std::vector<SetPartition> out;
    for (const auto& sp : set_partitions_of(ground))
        if (apply_map(sp, sigma) == sp) out.push_back(sp);
    return out;
}

std::vector<SetPartition> invariant_partitions_of_subset(const std::vector<int>& x,
                                                         const Composition& mu) {
    auto sigma = sigma_mu(mu);
    for (int v : x) {
        if (v < 1 || v > static_cast<int>(sigma.size()))
            throw std::invalid_argument("subset element out of range");
        if (!std::count(x.begin(), x.end(), sigma[v - 1])) return {};  // X not invariant
    }
    std::vector<int> ground = x;
    std::sort(ground.begin(), ground.end());
    std::vector<SetPartition> out;
    for (const auto& sp : set_partitions_of(ground))
        if (apply_map(sp, sigma) == sp) out.push_back(sp);
    return out;
}

SetPartition eta(const Composition& mu, const MuInvariantDatum& datum) {
    int l = static_cast<int>(mu.size());
    auto sigma = sigma_mu(mu);
    std::vector<int> prefix(l, 0);  // a_i = mu_1 + ... + mu_{i-1}
    for (int i = 1; i < l; ++i) prefix[i] = prefix[i - 1] + mu[i - 1];
    if (datum.xi.ground() != [&] {
            std::vector<int> g(l);
            std::iota(g.begin(), g.end(), 1);
            return g;
        }())
        throw std::invalid_argument("xi must partition [l]");
    if (datum.f.size() != datum.xi.parts.size() || datum.g.size() != datum.xi.parts.size())
        throw std::invalid_argument("datum arity mismatch");

    std::vector<std::vector<int>> parts;
    std::set<std::vector<int>> seen;
    for (size_t pi = 0; pi < datum.xi.parts.size(); ++pi) {
        const auto& p = datum.xi.parts[pi];
        int d = datum.f[pi];
        const auto& g = datum.g[pi];
        std::vector<int> np;
        for (int i : p) {
            if (d < 1 || mu[i - 1] % d != 0)
                throw std::invalid_argument("f(P) must divide mu_i for i in P");
            auto it = g.find(i);
            if (it == g.end() || it->second < 1 || it->second > d)
                throw std::invalid_argument("g_P out of range");
            if (i == p.front() && it->second != 1)
                throw std::invalid_argument("g_P must send min P to 1");
            for (int t = it->second; t <= mu[i - 1] - d + it->second; t += d)
                np.push_back(prefix[i - 1] + t);
        }
        std::sort(np.begin(), np.end());
        // Collect the orbit of N_P under sigma_mu.
        std::vector<int> cur = np;
        do {
            if (seen.insert(cur).second) parts.push_back(cur);
            std::vector<int> nxt;
            for (int v : cur) nxt.push_back(sigma[v - 1]);
            std::sort(nxt.begin(), nxt.end());
            cur = std::move(nxt);
        } while (cur != np);
    }
    return SetPartition(parts);
}

namespace {
void gen_g(const std::vector<int>& p, int d, size_t idx, std::map<int, int>& g,
           std::vector<std::map<int, int>>& out) {
    if (idx == p.size()) {
        out.push_back(g);
        return;
    }
    if (idx == 0) {
        g[p[0]] = 1;  // normalization at the minimum
        gen_g(p, d, 1, g, out);
        g.erase(p[0]);
        return;
    }
    for (int v = 1; v <= d; ++v) {
        g[p[idx]] = v;
        gen_g(p, d, idx + 1, g, out);
        g.erase(p[idx]);
    }
}
}  // namespace

std::vector<MuInvariantDatum> enumerate_mu_invariant_data(const Composition& mu) {
    int l = static_cast<int>(mu.size());
    std::vector<int> ground(l);
    std::iota(ground.begin(), ground.end(), 1);
    std::vector<MuInvariantDatum> out;
    for (const auto& xi : set_partitions_of(ground)) {
        // Per part: all common divisors of {mu_i}, then all normalized g's.
        std::vector<std::vector<std::pair<int, std::vector<std::map<int, int>>>>> choices;
        for (const auto& p : xi.parts) {
            int gcd = 0;
            for (int i : p) gcd = std::gcd(gcd, mu[i - 1]);
            std::vector<std::pair<int, std::vector<std::map<int, int>>>> part_choices;
            for (int d = 1; d <= gcd; ++d) {
                if (gcd % d != 0) continue;
                std::vector<std::map<int, int>> gs;
                std::map<int, int> g;
                gen_g(p, d, 0, g, gs);
                part_choices.emplace_back(d, std::move(gs));
            }
            choices.push_back(std::move(part_choices));
        }
        // Cartesian product over parts.
        std::vector<size_t> di(choices.size(), 0), gi(choices.size(), 0);
        while (true) {
            MuInvariantDatum datum;
            datum.xi = xi;
            for (size_t i = 0; i < choices.size(); ++i) {
                datum.f.push_back(choices[i][di[i]].first);
                datum.g.push_back(choices[i][di[i]].second[gi[i]]);
            }
            out.push_back(std::move(datum));
            // advance odometer over (d, g) pairs
            size_t i = 0;
            for (; i < choices.size(); ++i) {
                if (++gi[i] < choices[i][di[i]].second.size()) break;
                gi[i] = 0;
                if (++di[i] < choices[i].size()) break;
                di[i] = 0;
            }
            if (i == choices.size()) break;
        }
    }
    return out;
}

Diagram d_mu_X_xi(int k, const Composition& mu, const std::vector<int>& x,
                  const SetPartition& xi) {
    int m = std::accumulate(mu.begin(), mu.end(), 0);
    auto sigma = sigma_mu(mu);
    std::vector<int> xs = x;
    std::sort(xs.begin(), xs.end());
    if (xi.ground() != xs) throw std::invalid_argument("xi must partition X");
    for (int v : xs) {
        if (v < 1 || v > m) throw std::invalid_argument("X must sit inside [m]");
        if (!std::binary_search(xs.begin(), xs.end(), sigma[v - 1]))
            throw std::invalid_argument("restriction of d_mu to X does not fix xi");
    }
    if (!xs.empty() && apply_map(xi, sigma) != xi)
        throw std::invalid_argument("restriction of d_mu to X does not fix xi");

    std::vector<std::vector<int>> parts;
    for (const auto& blk : xi.parts) {
        std::vector<int> p;
        for (int v : blk) p.push_back(v - 1);
        for (int v : blk) p.push_back(k + v - 1);
        parts.push_back(std::move(p));
    }
    for (int j = 1; j <= m; ++j) {
        if (std::binary_search(xs.begin(), xs.end(), j)) continue;
        parts.push_back({j - 1, k + sigma[j - 1] - 1});  // strand of d_mu
    }
    for (int y = m; y < k; ++y) {
        parts.push_back({y});
        parts.push_back({k + y});
    }
    return Diagram(k, k, std::move(parts));
}

}  // namespace diagramma
