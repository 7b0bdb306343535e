#include "diagramma/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "diagramma/combinatorics.hpp"
#include "diagramma/families.hpp"
#include "diagramma/modules.hpp"
#include "diagramma/palgebra.hpp"
#include "diagramma/rook.hpp"
#include "diagramma/rsk.hpp"
#include "diagramma/wbimodule.hpp"

namespace diagramma {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point start = Clock::now();
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
            .count();
    }
};

std::string gv_str(const GrothendieckVector& v) {
    std::string s = "{";
    bool first = true;
    for (const auto& [lam, mult] : v) {
        if (!first) s += ", ";
        first = false;
        s += lam.str() + ":" + mult.get_str();
    }
    return s + "}";
}

std::vector<Composition> compositions_up_to(int k) {
    std::vector<Composition> out;
    out.push_back({});
    for (int m = 1; m <= k; ++m) {
        std::function<void(int, Composition&)> rec = [&](int rem, Composition& cur) {
            if (rem == 0) {
                out.push_back(cur);
                return;
            }
            for (int p = 1; p <= rem; ++p) {
                cur.push_back(p);
                rec(rem - p, cur);
                cur.pop_back();
            }
        };
        Composition cur;
        rec(m, cur);
    }
    return out;
}

std::string comp_str(const Composition& mu) {
    std::string s = "(";
    for (size_t i = 0; i < mu.size(); ++i) s += (i ? "," : "") + std::to_string(mu[i]);
    return s + ")";
}

// Runs f(i) for i in [0, count) across worker_count() threads.
void parallel_for(size_t count, const std::function<void(size_t)>& f) {
    int workers = std::min<int>(worker_count(), static_cast<int>(count));
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    std::mutex mu;
    size_t next = 0;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            while (true) {
                size_t i;
                {
                    std::lock_guard<std::mutex> lk(mu);
                    if (next >= count) return;
                    i = next++;
                }
                f(i);
            }
        });
    for (auto& t : pool) t.join();
}

Diagram random_diagram(int k, std::mt19937_64& rng) {
    // random restricted growth string over 2k vertices
    std::vector<int> a(2 * k, 0);
    int mx = 0;
    for (int i = 1; i < 2 * k; ++i) {
        std::uniform_int_distribution<int> dist(0, mx + 1);
        a[i] = dist(rng);
        mx = std::max(mx, a[i]);
    }
    std::vector<std::vector<int>> parts(mx + 1);
    for (int i = 0; i < 2 * k; ++i) parts[a[i]].push_back(i);
    parts.erase(std::remove_if(parts.begin(), parts.end(),
                               [](const std::vector<int>& p) { return p.empty(); }),
                parts.end());
    return Diagram(k, k, parts);
}

}  // namespace

int worker_count() {
    if (const char* env = std::getenv("DIAGRAMMA_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

VerifyReport verify_thm1(int k, int n) {
    Timer timer;
    VerifyReport rep;
    rep.claim = "thm1";
    rep.parameters = {{"k", std::to_string(k)}, {"n", std::to_string(n)}};
    GrothendieckVector lhs = decompose_w(k, n);
    GrothendieckVector rhs;
    RookRep nat = natural_rep(n);
    for (int i = 0; i <= k; ++i) {
        Int mult = binomial(k, i) * bell(k - i);
        GrothendieckVector part = decompose_by_character(n, tensor_power(nat, i));
        for (const auto& [lam, m] : part) rhs[lam] += mult * m;
    }
    rep.cases.push_back({"decomposition", gv_str(lhs), gv_str(rhs), lhs == rhs});
    rep.equal = rep.cases[0].equal;
    rep.elapsed_ms = timer.ms();
    return rep;
}

VerifyReport verify_prop2(int n, int k) {
    Timer timer;
    VerifyReport rep;
    rep.claim = "prop2";
    rep.parameters = {{"n", std::to_string(n)}, {"k", std::to_string(k)}};
    auto all = enumerate_restricted(n, k);
    Int expected = generalized_bell(n, k);
    rep.cases.push_back({"count", std::to_string(all.size()), expected.get_str(),
                         Int(static_cast<long>(all.size())) == expected});
    size_t ok = 0;
    for (const auto& p : all) {
        WVector x = from_restricted(p);
        if (to_restricted(x).parts == p.parts && from_restricted(to_restricted(x)) == x) ++ok;
    }
    size_t basis = w_basis(k, n).size();
    rep.cases.push_back({"roundtrip", std::to_string(ok), std::to_string(all.size()),
                         ok == all.size() && basis == all.size()});
    rep.equal = rep.cases[0].equal && rep.cases[1].equal;
    rep.elapsed_ms = timer.ms();
    return rep;
}

VerifyReport verify_act(int k, int n) {
    Timer timer;
    VerifyReport rep;
    rep.claim = "act";
    rep.parameters = {{"k", std::to_string(k)}, {"n", std::to_string(n)}};
    auto basis = w_basis(k, n);
    auto diagrams = enumerate_diagrams(k);

    // (x . d1) . d2 == x . (d1 d2), coefficients symbolic in delta.
    auto check_triple = [&](const WVector& x, const Diagram& d1, const Diagram& d2) {
        WRightAction r1 = act_right(x, d1);
        Poly lhs_coeff;
        WVector lhs_vec;
        bool lhs_zero = true;
        if (!r1.zero) {
            WRightAction r2 = act_right(r1.out, d2);
            if (!r2.zero) {
                lhs_zero = false;
                lhs_coeff = Poly::delta(r1.m) * Poly::delta(r2.m);
                lhs_vec = r2.out;
            }
        }
        auto [prod, c] = vconcat(d1, d2);
        WRightAction rp = act_right(x, prod);
        Poly rhs_coeff;
        bool rhs_zero = rp.zero;
        if (!rp.zero) rhs_coeff = Poly::delta(c) * Poly::delta(rp.m);
        if (lhs_zero != rhs_zero) return false;
        if (lhs_zero) return true;
        return lhs_coeff == rhs_coeff && lhs_vec == rp.out;
    };

    size_t checked = 0, passed = 0;
    if (k <= 2) {
        for (const auto& d1 : diagrams)
            for (const auto& d2 : diagrams)
                for (const auto& x : basis) {
                    ++checked;
                    passed += check_triple(x, d1, d2);
                }
    } else {
        std::mt19937_64 rng(20240923);
        std::uniform_int_distribution<size_t> bx(0, basis.size() - 1);
        for (int t = 0; t < 500; ++t) {
            ++checked;
            passed += check_triple(basis[bx(rng)], random_diagram(k, rng),
                                   random_diagram(k, rng));
        }
    }
    rep.cases.push_back({"associativity", std::to_string(checked), std::to_string(passed),
                         checked == passed});

    // sigma . (x . d) == (sigma . x) . d
    size_t checked2 = 0, passed2 = 0;
    auto rook = enumerate_rook(n);
    auto check_commute = [&](const PartialPerm& s, const WVector& x, const Diagram& d) {
        WRightAction r = act_right(x, d);
        std::optional<WVector> lhs;
        if (!r.zero) lhs = act_left(s, r.out);
        auto sx = act_left(s, x);
        std::optional<WVector> rhs;
        int rhs_m = 0;
        if (sx) {
            WRightAction r2 = act_right(*sx, d);
            if (!r2.zero) {
                rhs = r2.out;
                rhs_m = r2.m;
            }
        }
        if (lhs.has_value() != rhs.has_value()) return false;
        if (!lhs) return true;
        return *lhs == *rhs && r.m == rhs_m;
    };
    if (k <= 2 && n <= 2) {
        for (const auto& s : rook)
            for (const auto& d : diagrams)
                for (const auto& x : basis) {
                    ++checked2;
                    passed2 += check_commute(s, x, d);
                }
    } else {
        std::mt19937_64 rng(20240924);
        std::uniform_int_distribution<size_t> bx(0, basis.size() - 1);
        std::uniform_int_distribution<size_t> bs(0, rook.size() - 1);
        for (int t = 0; t < 500; ++t) {
            ++checked2;
            passed2 += check_commute(rook[bs(rng)], basis[bx(rng)], random_diagram(k, rng));
        }
    }
    rep.cases.push_back({"commuting actions", std::to_string(checked2),
                         std::to_string(passed2), checked2 == passed2});
    rep.equal = rep.cases[0].equal && rep.cases[1].equal;
    rep.elapsed_ms = timer.ms();
    return rep;
}

VerifyReport verify_thmcr(int k, const Rat& deltaq) {
    Timer timer;
    VerifyReport rep;
    rep.claim = "thmcr";
    rep.parameters = {{"k", std::to_string(k)}, {"delta", format_rational(deltaq)}};
    auto mus = compositions_up_to(k);
    auto lambdas = partitions_up_to(k);
    std::vector<std::pair<Composition, Partition>> jobs;
    for (const auto& mu : mus)
        for (const auto& lam : lambdas) jobs.push_back({mu, lam});
    std::vector<VerifyCase> cases(jobs.size());
    parallel_for(jobs.size(), [&](size_t i) {
        const auto& [mu, lam] = jobs[i];
        ThmCrReport r = verify_thm_cr(k, mu, lam, deltaq);
        cases[i] = {"mu=" + comp_str(mu) + " lambda=" + lam.str(), format_rational(r.lhs),
                    format_rational(r.rhs), r.equal};
    });
    rep.cases = std::move(cases);
    rep.equal = std::all_of(rep.cases.begin(), rep.cases.end(),
                            [](const VerifyCase& c) { return c.equal; });
    rep.elapsed_ms = timer.ms();
    return rep;
}

VerifyReport verify_thmkey(int k, int n) {
    Timer timer;
    VerifyReport rep;
    rep.claim = "thmkey";
    rep.parameters = {{"k", std::to_string(k)}, {"n", std::to_string(n)}};
    PkCharacters pk(k);
    RookCharacters rc(n);
    auto rook = enumerate_rook(n);
    auto mus = compositions_up_to(k);

    // chi_P(d_mu) once per mu
    std::vector<std::vector<Poly>> chi_p(mus.size(), std::vector<Poly>(pk.lambdas().size()));
    for (size_t m = 0; m < mus.size(); ++m) {
        Diagram d = d_mu(k, mus[m]);
        for (size_t l = 0; l < pk.lambdas().size(); ++l)
            chi_p[m][l] = pk.chi(pk.lambdas()[l], d);
    }

    std::vector<std::pair<size_t, size_t>> jobs;
    for (size_t s = 0; s < rook.size(); ++s)
        for (size_t m = 0; m < mus.size(); ++m) jobs.push_back({s, m});
    std::vector<VerifyCase> cases(jobs.size());
    parallel_for(jobs.size(), [&](size_t i) {
        auto [s, m] = jobs[i];
        Poly lhs = bitrace(k, n, rook[s], d_mu(k, mus[m]));
        Poly rhs;
        for (size_t l = 0; l < pk.lambdas().size(); ++l) {
            const Partition& lam = pk.lambdas()[l];
            if (lam.size() > std::min(n, k)) continue;
            rhs += Poly(rc.chi(lam, rook[s])) * chi_p[m][l];
        }
        cases[i] = {"sigma=" + rook[s].str() + " mu=" + comp_str(mus[m]), lhs.str(), rhs.str(),
                    lhs == rhs};
    });
    rep.cases = std::move(cases);
    rep.equal = std::all_of(rep.cases.begin(), rep.cases.end(),
                            [](const VerifyCase& c) { return c.equal; });
    rep.elapsed_ms = timer.ms();
    return rep;
}

VerifyReport verify_thmmain2(int k, int n, const Rat& deltaq) {
    Timer timer;
    VerifyReport rep;
    rep.claim = "thmmain2";
    rep.parameters = {{"k", std::to_string(k)},
                      {"n", std::to_string(n)},
                      {"delta", format_rational(deltaq)}};
    bool semisimple = true;
    for (int v = 0; v <= 2 * k - 2; ++v)
        if (deltaq == v) semisimple = false;
    long ir = image_rank(k, n, deltaq);
    long wc = w_commutant_dim(k, n);
    Int full = bell(2 * k);
    rep.cases.push_back({"image_rank vs commutant_dim", std::to_string(ir), std::to_string(wc),
                         semisimple ? ir == wc : ir < wc});
    rep.cases.push_back(
        {semisimple ? "surjective (rank = B(2k))" : "degenerate (rank < B(2k))",
         std::to_string(ir), full.get_str(),
         semisimple ? Int(ir) == full : Int(ir) < full});
    rep.equal = rep.cases[0].equal && rep.cases[1].equal;
    rep.elapsed_ms = timer.ms();
    return rep;
}

VerifyReport verify_lemma61(int k, int n) {
    Timer timer;
    VerifyReport rep;
    rep.claim = "lemma61";
    rep.parameters = {{"k", std::to_string(k)}, {"n", std::to_string(n)}};
    auto table = vacillating_table(k);
    auto final_gv = iterate_ind_res(k, n).back();
    Int length_lhs = 0;
    for (const auto& [lam, mult] : final_gv) length_lhs += mult;
    Int length_rhs = 0;
    for (const auto& [lam, g] : table) length_rhs += g;
    rep.cases.push_back(
        {"length", length_lhs.get_str(), length_rhs.get_str(), length_lhs == length_rhs});
    Int dim_lhs = generalized_bell(n, k);
    Int dim_rhs = 0;
    for (const auto& [lam, g] : table) dim_rhs += g * syt_count(lam) * binomial(n, lam.size());
    rep.cases.push_back({"dimension", dim_lhs.get_str(), dim_rhs.get_str(), dim_lhs == dim_rhs});
    rep.equal = rep.cases[0].equal && rep.cases[1].equal;
    rep.elapsed_ms = timer.ms();
    return rep;
}

VerifyReport verify_rskcount(int n, int k) {
    Timer timer;
    VerifyReport rep;
    rep.claim = "rskcount";
    rep.parameters = {{"n", std::to_string(n)}, {"k", std::to_string(k)}};
    RskCountReport r = rsk_count_check(n, k);
    rep.cases.push_back({"count", r.lhs.get_str(), r.rhs.get_str(), r.equal});
    rep.equal = r.equal;
    rep.elapsed_ms = timer.ms();
    return rep;
}

VerifyReport verify_char_reduction(int k, int samples, unsigned seed) {
    Timer timer;
    VerifyReport rep;
    rep.claim = "charreduce";
    rep.parameters = {{"k", std::to_string(k)}, {"samples", std::to_string(samples)}};
    PkCharacters table(k);
    std::vector<Diagram> pool;
    if (samples <= 0) {
        pool = enumerate_diagrams(k);
    } else {
        std::mt19937_64 rng(seed);
        for (int i = 0; i < samples; ++i) pool.push_back(random_diagram(k, rng));
    }
    std::vector<VerifyCase> cases(pool.size());
    parallel_for(pool.size(), [&](size_t i) {
        CharacterReduction red = find_character_reduction(pool[i], table);
        bool ok = character_reduction_holds(table, pool[i], red);
        cases[i] = {pool[i].str(), "chi(d)",
                    "delta^" + std::to_string(red.s) + " chi(d_" + comp_str(red.mu) + ")", ok};
    });
    rep.cases = std::move(cases);
    rep.equal = std::all_of(rep.cases.begin(), rep.cases.end(),
                            [](const VerifyCase& c) { return c.equal; });
    rep.elapsed_ms = timer.ms();
    return rep;
}

VerifyReport run_claim(const std::string& claim, int k, int n, const Rat& deltaq,
                       bool has_delta) {
    if (claim == "thm1") return verify_thm1(k, n);
    if (claim == "prop2") return verify_prop2(n, k);
    if (claim == "act") return verify_act(k, n);
    if (claim == "thmcr") return verify_thmcr(k, has_delta ? deltaq : Rat(5));
    if (claim == "thmkey") return verify_thmkey(k, n);
    if (claim == "thmmain2") return verify_thmmain2(k, n, has_delta ? deltaq : Rat(5));
    if (claim == "lemma61") return verify_lemma61(k, n);
    if (claim == "rskcount") return verify_rskcount(n, k);
    if (claim == "charreduce") return verify_char_reduction(k, 0, 0);
    throw std::invalid_argument("unknown claim: " + claim);
}

}  // namespace diagramma
