#pragma once

#include <map>
#include <string>
#include <vector>

#include "diagramma/rational.hpp"

namespace diagramma {

struct VerifyCase {
    std::string label, lhs, rhs;
    bool equal = false;
};

struct VerifyReport {
    std::string claim;
    std::map<std::string, std::string> parameters;
    std::vector<VerifyCase> cases;
    bool equal = false;  // conjunction over cases
    long elapsed_ms = 0;
};

// Worker cap for verification sweeps; reads DIAGRAMMA_THREADS, defaulting
// to the hardware concurrency.
int worker_count();

// W_{k,n} decomposes as sum_i binom(k,i) B(k-i) [V_n^(x)i].
VerifyReport verify_thm1(int k, int n);
// from_restricted/to_restricted are mutually inverse; counts match.
VerifyReport verify_prop2(int n, int k);
// Right-action associativity and left-right commutation on W_{k,n}.
VerifyReport verify_act(int k, int n);
// Character sum over subalgebras, all compositions of m <= k, all lambda.
VerifyReport verify_thmcr(int k, const Rat& deltaq);
// bitrace(sigma, d_mu) = sum_lambda chi_R chi_P at symbolic delta.
VerifyReport verify_thmkey(int k, int n);
// image_rank / commutant dimension against semisimplicity of delta.
VerifyReport verify_thmmain2(int k, int n, const Rat& deltaq);
// Length and dimension of W_{k,n} from vacillating tableaux (n >= k).
VerifyReport verify_lemma61(int k, int n);
// Generalized Bell count against the RSK corollary formula.
VerifyReport verify_rskcount(int n, int k);

// Character reduction to the d_mu family on every element of A_2 plus
// random elements of A_3.
VerifyReport verify_char_reduction(int k, int samples, unsigned seed);

VerifyReport run_claim(const std::string& claim, int k, int n, const Rat& deltaq,
                       bool has_delta);

}  // namespace diagramma
