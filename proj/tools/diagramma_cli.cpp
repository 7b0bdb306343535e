// Command-line front end: enumeration, multiplication, verification sweeps,
// and Bratteli/character exports. Results go to stdout as JSON or TSV;
// diagnostics go to stderr. Exit codes: 0 success, 1 verification failure,
// 2 usage error. DIAGRAMMA_THREADS caps verification workers.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "diagramma/combinatorics.hpp"
#include "diagramma/families.hpp"
#include "diagramma/modules.hpp"
#include "diagramma/palgebra.hpp"
#include "diagramma/rook.hpp"
#include "diagramma/rsk.hpp"
#include "diagramma/verify.hpp"
#include "diagramma/wbimodule.hpp"

using namespace diagramma;
using nlohmann::json;

namespace {

json report_to_json(const VerifyReport& rep) {
    json j;
    j["claim"] = rep.claim;
    j["parameters"] = rep.parameters;
    j["equal"] = rep.equal;
    j["elapsed_ms"] = rep.elapsed_ms;
    if (rep.cases.size() == 1) {
        j["lhs"] = rep.cases[0].lhs;
        j["rhs"] = rep.cases[0].rhs;
    } else {
        size_t ok = 0;
        for (const auto& c : rep.cases) ok += c.equal;
        j["lhs"] = std::to_string(rep.cases.size()) + " identities";
        j["rhs"] = std::to_string(ok) + " equal";
    }
    j["cases"] = json::array();
    for (const auto& c : rep.cases) {
        json cj;
        cj["label"] = c.label;
        cj["lhs"] = c.lhs;
        cj["rhs"] = c.rhs;
        cj["equal"] = c.equal;
        j["cases"].push_back(cj);
    }
    return j;
}

json tableau_to_json(const SetPartitionTableau& t) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json r = json::array();
        for (const auto& blk : row) r.push_back(blk);
        rows.push_back(r);
    }
    return rows;
}

int run(int argc, char** argv) {
    CLI::App app{"exact diagram calculus for partition algebras and rook monoids"};
    app.require_subcommand(1);

    int k = 1, n = 1, family_i = -1;
    std::string lhs_text, rhs_text, delta_text, format = "json", family = "A";
    std::string claim, sigma_text, d_text;
    bool roundtrip = false;

    auto* bell_cmd = app.add_subcommand("bell", "Bell number B(k)");
    bell_cmd->add_option("--k", k)->required();

    auto* diagrams_cmd = app.add_subcommand("diagrams", "enumerate diagram families");
    diagrams_cmd->add_option("--k", k)->required();
    diagrams_cmd->add_option("--family", family)
        ->check(CLI::IsMember({"A", "V", "N", "dual", "L", "K"}));
    diagrams_cmd->add_option("--i", family_i);

    auto* multiply_cmd = app.add_subcommand("multiply", "product of two diagrams");
    multiply_cmd->add_option("--k", k)->required();
    multiply_cmd->add_option("--lhs", lhs_text)->required();
    multiply_cmd->add_option("--rhs", rhs_text)->required();
    multiply_cmd->add_option("--delta", delta_text);

    auto* bratteli_cmd = app.add_subcommand("bratteli", "branching graph export");
    bratteli_cmd->add_option("--k", k)->required();
    bratteli_cmd->add_option("--n", n)->required();
    bratteli_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

    auto* characters_cmd = app.add_subcommand("characters", "character table of P_k");
    characters_cmd->add_option("--k", k)->required();
    characters_cmd->add_option("--delta", delta_text);

    auto* verify_cmd = app.add_subcommand("verify", "machine-check a claim");
    verify_cmd->add_option("--claim", claim)
        ->required()
        ->check(CLI::IsMember({"thm1", "prop2", "act", "thmcr", "thmkey", "thmmain2",
                               "lemma61", "rskcount", "charreduce"}));
    verify_cmd->add_option("--k", k);
    verify_cmd->add_option("--n", n);
    verify_cmd->add_option("--delta", delta_text);

    auto* bitrace_cmd = app.add_subcommand("bitrace", "bitrace of (sigma, d) on W_{k,n}");
    bitrace_cmd->add_option("--k", k)->required();
    bitrace_cmd->add_option("--n", n)->required();
    bitrace_cmd->add_option("--sigma", sigma_text)->required();
    bitrace_cmd->add_option("--d", d_text)->required();

    auto* commutant_cmd = app.add_subcommand("commutant", "image rank vs commutant dim");
    commutant_cmd->add_option("--k", k)->required();
    commutant_cmd->add_option("--n", n)->required();
    commutant_cmd->add_option("--delta", delta_text)->required();

    auto* rsk_cmd = app.add_subcommand("rsk", "RSK triples of restricted partitions");
    rsk_cmd->add_option("--n", n)->required();
    rsk_cmd->add_option("--k", k)->required();
    rsk_cmd->add_flag("--roundtrip", roundtrip);

    CLI11_PARSE(app, argc, argv);

    if (bell_cmd->parsed()) {
        std::cout << bell(k).get_str() << "\n";
        return 0;
    }

    if (diagrams_cmd->parsed()) {
        std::vector<Diagram> out;
        if (family == "A") out = enumerate_diagrams(k);
        else if (family == "V") out = enumerate_V(k, family_i);
        else if (family == "N") out = enumerate_N(k, family_i);
        else if (family == "dual") out = enumerate_dual(k);
        else if (family == "L") out = enumerate_L(k, family_i);
        else out = enumerate_K(k, family_i);
        for (const auto& d : out) std::cout << d.str() << "\n";
        return 0;
    }

    if (multiply_cmd->parsed()) {
        Diagram a = Diagram::parse(lhs_text), b = Diagram::parse(rhs_text);
        if (a.top_size() != k || b.top_size() != k)
            throw std::invalid_argument("diagram strand count differs from --k");
        AlgebraElement prod = multiply(AlgebraElement(a), AlgebraElement(b));
        if (delta_text.empty()) {
            std::cout << prod.str() << "\n";
        } else {
            Rat q = parse_rational(delta_text);
            for (const auto& [d, c] : prod.specialized(q))
                std::cout << format_rational(c) << " * " << d.str() << "\n";
        }
        return 0;
    }

    if (bratteli_cmd->parsed()) {
        std::cout << bratteli_emit(k, n, format) << "\n";
        return 0;
    }

    if (characters_cmd->parsed()) {
        PkCharacters table(k);
        std::vector<Partition> mus = partitions_up_to(k);
        std::cout << "lambda";
        for (const auto& mu : mus) std::cout << "\t" << mu.str();
        std::cout << "\n";
        for (const auto& lam : table.lambdas()) {
            std::cout << lam.str();
            for (const auto& mu : mus) {
                Poly chi = table.chi(lam, d_mu(k, mu.parts));
                if (delta_text.empty())
                    std::cout << "\t" << chi.str();
                else
                    std::cout << "\t" << format_rational(chi.at(parse_rational(delta_text)));
            }
            std::cout << "\n";
        }
        return 0;
    }

    if (verify_cmd->parsed()) {
        VerifyReport rep =
            run_claim(claim, k, n, delta_text.empty() ? Rat(5) : parse_rational(delta_text),
                      !delta_text.empty());
        std::cout << report_to_json(rep).dump(2) << "\n";
        return rep.equal ? 0 : 1;
    }

    if (bitrace_cmd->parsed()) {
        PartialPerm s = PartialPerm::parse(n, sigma_text);
        Diagram d = Diagram::parse(d_text);
        if (d.top_size() != k) throw std::invalid_argument("diagram strand count != k");
        json j;
        j["k"] = k;
        j["n"] = n;
        j["sigma"] = s.str();
        j["d"] = d.str();
        j["bitrace"] = bitrace(k, n, s, d).str();
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    if (commutant_cmd->parsed()) {
        Rat q = parse_rational(delta_text);
        json j;
        j["k"] = k;
        j["n"] = n;
        j["delta"] = delta_text;
        j["image_rank"] = image_rank(k, n, q);
        j["commutant_dim"] = w_commutant_dim(k, n);
        j["bell_2k"] = bell(2 * k).get_str();
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    if (rsk_cmd->parsed()) {
        auto all = enumerate_restricted(n, k);
        if (roundtrip) {
            size_t ok = 0;
            for (const auto& p : all) {
                RskTriple t = rsk_forward(p);
                ok += t.valid(n, k) && rsk_backward(n, k, t).parts == p.parts;
            }
            json j;
            j["n"] = n;
            j["k"] = k;
            j["count"] = all.size();
            j["roundtrips"] = ok;
            j["equal"] = ok == all.size();
            std::cout << j.dump(2) << "\n";
            return ok == all.size() ? 0 : 1;
        }
        json arr = json::array();
        for (const auto& p : all) {
            RskTriple t = rsk_forward(p);
            json item;
            item["partition"] = p.parts.str();
            item["P"] = tableau_to_json(t.p);
            item["Q"] = t.q.rows;
            item["T"] = tableau_to_json(t.t);
            arr.push_back(item);
        }
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        json err;
        err["error"] = e.what();
        std::cerr << err.dump() << "\n";
        return 2;
    }
}
