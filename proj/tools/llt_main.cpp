#include "llt/theorems.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;

llt::Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) throw llt::InvalidInput("partition: empty entry in '" + text + "'");
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw llt::InvalidInput("partition: bad entry '" + token + "'");
        }
        if (used != token.size() || value < 0)
            throw llt::InvalidInput("partition: bad entry '" + token + "'");
        parts.push_back(value);
    }
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1])
            throw llt::InvalidInput("partition: entries must be weakly decreasing");
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return llt::Partition(parts);
}

template <class V>
V specialized(const V& v, const std::optional<long long>& q) {
    if (!q) return v;
    V out;
    for (const auto& [idx, c] : v.terms()) out.add_term(idx, llt::LaurentPoly(c.evaluate(*q)));
    return out;
}

// Prints one expansion in the requested basis and format.
template <class V>
void emit(const V& v, const std::string& basis, const std::string& format,
          const std::optional<long long>& q) {
    const V w = specialized(v, q);
    if (format == "json")
        std::printf("%s\n", w.to_json(basis).dump().c_str());
    else
        std::printf("%s\n", w.str().c_str());
}

struct Options {
    int n = 0;
    std::string lambda;
    bool has_lambda = false;
    std::string tuple;
    std::string basis = "schur";
    std::optional<long long> q;
    std::string format = "text";
    std::string theorem;
    std::optional<int> max_n;
    int jobs = 0;
    unsigned int seed = 12345;
};

void run_llt(const Options& opt) {
    const llt::TwoDiagTuple t = llt::TwoDiagTuple::parse(opt.tuple);
    if (opt.basis == "fundamental") {
        emit(llt::llt_fund(t.shape()), opt.basis, opt.format, opt.q);
    } else if (opt.basis == "schur") {
        emit(llt::llt_schur(t.shape()), opt.basis, opt.format, opt.q);
    } else if (opt.basis == "monomial") {
        emit(llt::schur_to_monomial(llt::llt_schur(t.shape())), opt.basis, opt.format, opt.q);
    } else {
        emit(llt::two_schur_expand(llt::omega(llt::llt_schur(t.shape()))), opt.basis, opt.format,
             opt.q);
    }
}

void run_unicellular(const Options& opt) {
    const llt::Partition lam = parse_partition(opt.lambda);
    if (opt.basis == "fundamental") {
        emit(llt::G_unicellular(opt.n, lam), opt.basis, opt.format, opt.q);
    } else if (opt.basis == "schur") {
        emit(llt::L_of(opt.n, lam), opt.basis, opt.format, opt.q);
    } else if (opt.basis == "monomial") {
        emit(llt::schur_to_monomial(llt::L_of(opt.n, lam)), opt.basis, opt.format, opt.q);
    } else {
        emit(llt::two_schur_expand(llt::L_of(opt.n, lam)), opt.basis, opt.format, opt.q);
    }
}

void run_kschur(const Options& opt) {
    const llt::Partition lam = parse_partition(opt.lambda);
    const llt::SchurVector k = llt::kschur2(lam);
    if (opt.basis == "schur") {
        emit(k, opt.basis, opt.format, opt.q);
    } else if (opt.basis == "monomial") {
        emit(llt::schur_to_monomial(k), opt.basis, opt.format, opt.q);
    } else if (opt.basis == "two-schur") {
        emit(llt::two_schur_expand(k), opt.basis, opt.format, opt.q);
    } else {
        throw llt::InvalidInput("basis 'fundamental' is not available for kschur");
    }
}

void run_hl(const Options& opt) {
    const llt::Partition lam = parse_partition(opt.lambda);
    const llt::SchurVector h = llt::hall_littlewood(lam);
    if (opt.basis == "schur") {
        emit(h, opt.basis, opt.format, opt.q);
    } else if (opt.basis == "monomial") {
        emit(llt::schur_to_monomial(h), opt.basis, opt.format, opt.q);
    } else if (opt.basis == "two-schur") {
        emit(llt::two_schur_expand(h), opt.basis, opt.format, opt.q);
    } else {
        throw llt::InvalidInput("basis 'fundamental' is not available for hall-littlewood");
    }
}

int run_verify(const Options& opt) {
    llt::VerifyOptions vopts;
    // Exhaustive sweeps default to 7 cells; the sampled sweep reaches 8.
    vopts.max_n = opt.max_n ? *opt.max_n : (opt.theorem == "haiman2" ? 8 : 7);
    vopts.jobs = opt.jobs;
    vopts.seed = opt.seed;
    const llt::VerifyReport rep = llt::run_verification(opt.theorem, vopts);
    if (opt.format == "json")
        std::printf("%s\n", rep.to_json().dump().c_str());
    else
        std::printf("%s", rep.to_text().c_str());
    return rep.ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with LLT polynomials and the two-Schur basis"};
    app.require_subcommand(1);
    Options opt;

    const auto add_basis = [&](CLI::App* cmd) {
        cmd->add_option("--basis", opt.basis, "Output basis")
            ->check(CLI::IsMember({"schur", "two-schur", "fundamental", "monomial"}))
            ->capture_default_str();
    };
    const auto add_common = [&](CLI::App* cmd) {
        add_basis(cmd);
        cmd->add_option("--q", opt.q, "Evaluate coefficients at an integer value of q");
        cmd->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    CLI::App* c_llt = app.add_subcommand(
        "llt", "Expansion of the polynomial attached to a tuple of dominoes and single "
               "cells (string over H, V, 0, 1); basis two-schur applies the involution first");
    c_llt->add_option("--tuple", opt.tuple, "Tuple string over {H,V,0,1}")->required();
    add_common(c_llt);

    CLI::App* c_uni = app.add_subcommand(
        "unicellular", "Expansion attached to n single cells built from a partition; bases "
                       "schur/two-schur/monomial expand the conjugated form, fundamental "
                       "prints the raw generating function");
    c_uni->add_option("--n", opt.n, "Number of cells")->required()->check(CLI::PositiveNumber);
    c_uni->add_option("--lambda", opt.lambda, "Partition, comma separated")->required();
    add_common(c_uni);

    CLI::App* c_k = app.add_subcommand("kschur", "Two-bounded column-type basis element");
    c_k->add_option("--lambda", opt.lambda, "Partition, comma separated")->required();
    add_common(c_k);

    CLI::App* c_hl = app.add_subcommand("hall-littlewood", "Generalized column polynomial");
    c_hl->add_option("--lambda", opt.lambda, "Partition, comma separated")->required();
    add_common(c_hl);

    CLI::App* c_v = app.add_subcommand("verify", "Run a named verification sweep");
    c_v->add_option("--theorem", opt.theorem, "Sweep name")
        ->required()
        ->check(CLI::IsMember(llt::verification_names()));
    c_v->add_option("--max-n", opt.max_n, "Cell-count bound (default 7, sampled sweep 8)");
    c_v->add_option("--jobs", opt.jobs, "Worker threads (0 = all cores)");
    c_v->add_option("--seed", opt.seed, "Random seed for sampled sweeps")->capture_default_str();
    c_v->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(c_llt)) {
            run_llt(opt);
        } else if (app.got_subcommand(c_uni)) {
            run_unicellular(opt);
        } else if (app.got_subcommand(c_k)) {
            run_kschur(opt);
        } else if (app.got_subcommand(c_hl)) {
            run_hl(opt);
        } else {
            return run_verify(opt);
        }
    } catch (const llt::BoundExceeded& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBound;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitOk;
}
