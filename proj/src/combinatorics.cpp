#include "diagramma/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace diagramma {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must weakly decrease");
    }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::str() const {
    std::string s = "[";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + "]";
}

Partition Partition::parse(const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("partition must look like [2,1]");
    std::vector<int> p;
    std::string body = s.substr(1, s.size() - 2);
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("bad partition: " + s);
        p.push_back(std::stoi(tok));
    }
    return Partition(p);
}

Partition StandardTableau::shape() const {
    std::vector<int> p;
    for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
    return Partition(p);
}

int StandardTableau::size() const {
    int n = 0;
    for (const auto& r : rows) n += static_cast<int>(r.size());
    return n;
}

std::vector<int> StandardTableau::reading_word() const {
    std::vector<int> w;
    for (const auto& r : rows) w.insert(w.end(), r.begin(), r.end());
    return w;
}

Partition SetPartitionTableau::shape() const {
    std::vector<int> p;
    for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
    return Partition(p);
}

std::vector<int> SetPartitionTableau::content() const {
    std::vector<int> c;
    for (const auto& r : rows)
        for (const auto& b : r) c.insert(c.end(), b.begin(), b.end());
    std::sort(c.begin(), c.end());
    return c;
}

bool SetPartitionTableau::is_standard() const {
    auto mn = [](const std::vector<int>& b) { return b.empty() ? 0 : b.front(); };
    for (const auto& r : rows)
        for (size_t j = 0; j + 1 < r.size(); ++j)
            if (mn(r[j]) >= mn(r[j + 1])) return false;
    for (size_t i = 0; i + 1 < rows.size(); ++i)
        for (size_t j = 0; j < rows[i + 1].size(); ++j)
            if (j >= rows[i].size() || mn(rows[i][j]) >= mn(rows[i + 1][j])) return false;
    return true;
}

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Int bell(int k) {
    if (k < 0) throw std::invalid_argument("bell of negative");
    // Bell triangle.
    std::vector<Int> prev{1};
    if (k == 0) return 1;
    for (int n = 1; n <= k; ++n) {
        std::vector<Int> cur(n + 1);
        cur[0] = prev.back();
        for (int j = 1; j <= n; ++j) cur[j] = cur[j - 1] + prev[j - 1];
        prev = std::move(cur);
    }
    return prev[0];
}

Int stirling2(int r, int i) {
    if (r < 0 || i < 0) throw std::invalid_argument("stirling2 of negative");
    if (i > r) return 0;
    std::vector<std::vector<Int>> s(r + 1, std::vector<Int>(i + 1));
    s[0][0] = 1;
    for (int n = 1; n <= r; ++n)
        for (int m = 1; m <= std::min(n, i); ++m)
            s[n][m] = Int(m) * s[n - 1][m] + s[n - 1][m - 1];
    return s[r][i];
}

Int generalized_bell(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("generalized_bell of negative");
    // Count by the letter positions: choose i positions carrying one of the
    // n distinguished classes, partition the rest arbitrarily.
    Int total = 0;
    Int npow = 1;
    for (int i = 0; i <= k; ++i) {
        total += binomial(k, i) * bell(k - i) * npow;
        npow *= n;
    }
    return total;
}

Int marked_partition_count(int k, int j) {
    if (j < 0 || j > k) throw std::invalid_argument("marked_partition_count: need 0 <= j <= k");
    Int total = 0;
    for (int t = j; t <= k; ++t) total += stirling2(k, t) * binomial(t, j);
    return total;
}

namespace {
void gen_partitions(int rem, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (rem == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(rem - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int m) {
    if (m < 0) throw std::invalid_argument("partitions_of negative");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(m, m, cur, out);
    if (m == 0) out.assign(1, Partition());
    return out;
}

std::vector<Partition> partitions_up_to(int mmax) {
    std::vector<Partition> out;
    for (int m = 0; m <= mmax; ++m) {
        auto pm = partitions_of(m);
        out.insert(out.end(), pm.begin(), pm.end());
    }
    return out;
}

Int syt_count(const Partition& lambda) {
    int n = lambda.size();
    if (n == 0) return 1;
    // Hook lengths; the product divides n! exactly.
    std::vector<int> conj(lambda.parts.empty() ? 0 : lambda.parts[0], 0);
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda.parts[r]; ++c) conj[c]++;
    Int denom = 1;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda.parts[r]; ++c) {
            int hook = (lambda.parts[r] - c) + (conj[c] - r) - 1;
            denom *= hook;
        }
    Int num = factorial(n);
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
    if (rem != 0) throw std::logic_error("hook length product must divide n!");
    return q;
}

namespace {
void gen_syt(const Partition& shape, int next, std::vector<std::vector<int>>& rows,
             std::vector<StandardTableau>& out) {
    int n = shape.size();
    if (next > n) {
        out.push_back(StandardTableau{rows});
        return;
    }
    for (int r = 0; r < shape.length(); ++r) {
        size_t c = rows[r].size();
        if (static_cast<int>(c) >= shape.parts[r]) continue;
        if (r > 0 && rows[r - 1].size() <= c) continue;  // cell above must be filled
        rows[r].push_back(next);
        gen_syt(shape, next + 1, rows, out);
        rows[r].pop_back();
    }
}
}  // namespace

std::vector<StandardTableau> syt_list(const Partition& lambda) {
    std::vector<StandardTableau> out;
    std::vector<std::vector<int>> rows(lambda.length());
    gen_syt(lambda, 1, rows, out);
    if (lambda.size() == 0) out.assign(1, StandardTableau{});
    std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
        return a.reading_word() < b.reading_word();
    });
    return out;
}

std::vector<Partition> young_up(const Partition& lambda) {
    std::vector<Partition> out;
    for (int r = 0; r <= lambda.length(); ++r) {
        int row_len = lambda.row(r);
        int above = r == 0 ? -1 : lambda.row(r - 1);
        if (r > 0 && row_len >= above) continue;  // not addable
        std::vector<int> p = lambda.parts;
        if (r == lambda.length())
            p.push_back(1);
        else
            p[r]++;
        out.push_back(Partition(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> young_down(const Partition& lambda) {
    std::vector<Partition> out;
    for (int r = 0; r < lambda.length(); ++r) {
        int below = lambda.row(r + 1);
        if (lambda.parts[r] == below) continue;  // not removable
        std::vector<int> p = lambda.parts;
        p[r]--;
        if (p[r] == 0) p.pop_back();
        out.push_back(Partition(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::map<Partition, Int> vacillating_table(int k) {
    std::map<Partition, Int> front;
    front[Partition()] = 1;
    for (int step = 1; step <= 2 * k; ++step) {
        std::map<Partition, Int> next;
        for (const auto& [lam, mult] : front) {
            next[lam] += mult;  // do nothing
            if (step % 2 == 1) {
                for (const auto& mu : young_down(lam)) next[mu] += mult;
            } else {
                for (const auto& mu : young_up(lam)) next[mu] += mult;
            }
        }
        front = std::move(next);
    }
    return front;
}

Int vacillating_count(int k, const Partition& mu) {
    if (mu.size() > k) return 0;
    auto table = vacillating_table(k);
    auto it = table.find(mu);
    return it == table.end() ? Int(0) : it->second;
}

}  // namespace diagramma
