// ldio: exact Diophantine approximation counts over formal Laurent series.
//
// Subcommands: verify-prop1, verify-prop2, counts, phi, expected-n, t-ratio,
// run. Reports go to --out as CSV or JSON; progress goes to stderr only.
// Exit codes: 0 all checks passed (or pure report written), 1 a verified
// equality or bound failed, 2 usage or budget errors.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ldio/approx.hpp"
#include "ldio/counting.hpp"
#include "ldio/experiment.hpp"
#include "ldio/field.hpp"
#include "ldio/io.hpp"
#include "ldio/kernels.hpp"
#include "ldio/measure.hpp"
#include "ldio/parallel.hpp"
#include "ldio/psi.hpp"

namespace {

struct Args {
    uint32_t p = 2;
    uint32_t l = 1;
    std::string modulus;
    uint32_t m = 2;
    uint32_t n = 1;
    std::string psi_text = "linear:1,1";
    int Q = 0;
    uint64_t seed = 0;
    uint32_t samples = 1;
    double epsilon = 0.1;
    uint64_t budget = 0;  // 0 keeps each module's default
    std::string out;
    std::string format = "";
    uint32_t threads = 0;  // 0 = available parallelism
    bool allow_psi_zero = false;
    bool full_enum = false;
    std::string count_strategy = "auto";
    std::string kernel_backend = "auto";
};

void add_common(CLI::App* cmd, Args& a) {
    cmd->add_option("--p", a.p, "field characteristic (prime)");
    cmd->add_option("--l", a.l, "extension degree");
    cmd->add_option("--modulus", a.modulus,
                    "monic irreducible modulus, residues low-to-high, e.g. 1,1,1");
    cmd->add_option("--m", a.m, "number of linear forms (vector length)");
    cmd->add_option("--n", a.n, "number of matrix columns");
    cmd->add_option("--psi", a.psi_text, "error function: linear:a,b or table:s0,s1,...");
    cmd->add_option("--Q", a.Q, "maximal height exponent");
    cmd->add_option("--seed", a.seed, "PRNG seed");
    cmd->add_option("--samples", a.samples, "Monte Carlo sample count");
    cmd->add_option("--epsilon", a.epsilon, "exponent offset in the residual normalization");
    cmd->add_option("--budget", a.budget, "enumeration cell budget (0 = module default)");
    cmd->add_option("--out", a.out, "report path");
    cmd->add_option("--format", a.format, "csv or json")
        ->check(CLI::IsMember({"", "csv", "json"}));
    cmd->add_option("--threads", a.threads, "worker cap (0 = available parallelism)");
    cmd->add_flag("--allow-psi-zero", a.allow_psi_zero,
                  "accept psi exponents s(r) = 0 (psi = 1)");
    cmd->add_flag("--full-enum", a.full_enum,
                  "enumerate all mn coordinates jointly in measure checks");
    cmd->add_option("--count-strategy", a.count_strategy, "auto, per-vector, orbit or kernel")
        ->check(CLI::IsMember({"auto", "per-vector", "orbit", "kernel"}));
    cmd->add_option("--kernel-backend", a.kernel_backend,
                    "auto, reference, scalar, avx2 or neon")
        ->check(CLI::IsMember({"auto", "reference", "scalar", "avx2", "neon"}));
}

ldio::FieldSpec make_field(const Args& a) {
    if (!a.modulus.empty()) {
        return ldio::FieldSpec(a.p, a.l, ldio::residues_from_string(a.modulus));
    }
    if (a.l > 1) return ldio::FieldSpec(a.p, a.l);
    return ldio::FieldSpec(a.p);
}

ldio::kernels::Backend backend_of(const Args& a) {
    using ldio::kernels::Backend;
    if (a.kernel_backend == "reference") return Backend::Reference;
    if (a.kernel_backend == "scalar") return Backend::Scalar;
    if (a.kernel_backend == "avx2") return Backend::Avx2;
    if (a.kernel_backend == "neon") return Backend::Neon;
    return Backend::Auto;
}

ldio::CountOptions count_options(const Args& a) {
    ldio::CountOptions opts;
    if (a.count_strategy == "per-vector") opts.strategy = ldio::CountStrategy::PerVector;
    if (a.count_strategy == "orbit") opts.strategy = ldio::CountStrategy::OrbitRepresentative;
    if (a.count_strategy == "kernel") opts.strategy = ldio::CountStrategy::Kernel;
    opts.backend = backend_of(a);
    if (a.budget) opts.budget = a.budget;
    return opts;
}

ldio::MeasureOptions measure_options(const Args& a) {
    ldio::MeasureOptions opts;
    opts.full_enumeration = a.full_enum;
    opts.backend = backend_of(a);
    if (a.budget) opts.budget = a.budget;
    opts.threads = a.threads == 0 ? ldio::hardware_threads() : a.threads;
    return opts;
}

std::string pick(const std::string& value, const char* fallback) {
    return value.empty() ? fallback : value;
}

void note_written(const std::string& path) {
    std::fprintf(stderr, "wrote %s\n", path.c_str());
}

int cmd_verify_prop1(const Args& a) {
    const auto F = make_field(a);
    const auto psi = ldio::Psi::parse(a.psi_text, a.allow_psi_zero);
    const auto report = ldio::verify_prop1(F, a.m, a.n, psi, a.Q, measure_options(a));
    const std::string path = pick(a.out, "verify-prop1.json");
    ldio::write_file(path, ldio::prop1_report_json(F, psi, report).dump(2) + "\n");
    note_written(path);
    return report.all_pass() ? 0 : 1;
}

int cmd_verify_prop2(const Args& a) {
    const auto F = make_field(a);
    const auto psi = ldio::Psi::parse(a.psi_text, a.allow_psi_zero);
    const auto report = ldio::verify_prop2(F, a.m, a.n, psi, a.Q, measure_options(a));
    const std::string path = pick(a.out, "verify-prop2.json");
    ldio::write_file(path, ldio::prop2_report_json(F, psi, report).dump(2) + "\n");
    note_written(path);
    return report.all_pass() ? 0 : 1;
}

int cmd_counts(const Args& a) {
    const auto F = make_field(a);
    const std::string path = pick(a.out, a.format == "json" ? "counts.json" : "counts.csv");
    if (a.format == "json") {
        ldio::write_file(path, ldio::counts_json(F, a.m, a.Q).dump(2) + "\n");
    } else {
        ldio::write_file(path, ldio::counts_csv(F, a.m, a.Q));
    }
    note_written(path);
    return 0;
}

int cmd_phi(const Args& a) {
    const auto F = make_field(a);
    const auto psi = ldio::Psi::parse(a.psi_text, a.allow_psi_zero);
    const ldio::Dims dims{a.m, a.n};
    const std::string path = pick(a.out, a.format == "json" ? "phi.json" : "phi.csv");
    if (a.format == "json") {
        ldio::write_file(path, ldio::phi_json(F, dims, psi, a.Q).dump(2) + "\n");
    } else {
        ldio::write_file(path, ldio::phi_csv(F, dims, psi, a.Q));
    }
    note_written(path);
    return 0;
}

int cmd_expected_n(const Args& a) {
    const auto F = make_field(a);
    const auto psi = ldio::Psi::parse(a.psi_text, a.allow_psi_zero);
    const ldio::Dims dims{a.m, a.n};
    const auto expected = ldio::expected_n(F, dims, psi, a.Q, measure_options(a),
                                           count_options(a));
    const auto exact = ldio::phi(F, dims, psi, a.Q, ldio::CountVariant::ExactEnumeration);
    const auto paper = ldio::phi(F, dims, psi, a.Q, ldio::CountVariant::PaperFormula);
    const bool matches = expected == exact;
    nlohmann::json j{{"field", ldio::field_config_json(F)},
                     {"m", dims.m},
                     {"n", dims.n},
                     {"psi", psi.to_string()},
                     {"Q", a.Q},
                     {"expected_N", ldio::rational_json(expected)},
                     {"phi_exact", ldio::rational_json(exact)},
                     {"phi_paper", ldio::rational_json(paper)},
                     {"matches_phi_exact", matches},
                     {"matches_phi_paper", expected == paper}};
    const std::string path = pick(a.out, "expected-n.json");
    ldio::write_file(path, j.dump(2) + "\n");
    note_written(path);
    return matches ? 0 : 1;
}

int cmd_t_ratio(const Args& a) {
    const auto F = make_field(a);
    const auto psi = ldio::Psi::parse(a.psi_text, a.allow_psi_zero);
    const ldio::Dims dims{a.m, a.n};
    const uint64_t budget = a.budget ? a.budget : ldio::kDefaultCountBudget;
    bool all_within = true;
    std::string csv = "Q,T_num,T_den,phi_exact_num,phi_exact_den,ratio,within_bound\n";
    nlohmann::json rows = nlohmann::json::array();
    for (int q = 0; q <= a.Q; ++q) {
        const auto t_val = ldio::big_T(F, dims, psi, q, budget);
        const auto exact = ldio::phi(F, dims, psi, q, ldio::CountVariant::ExactEnumeration);
        const auto bound = exact * ldio::Rational(4, F.k());
        const bool within = t_val <= bound;
        all_within = all_within && within;
        const double ratio = t_val.to_double() / exact.to_double();
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", ratio);
        csv += std::to_string(q) + "," + std::to_string(t_val.num()) + "," +
               std::to_string(t_val.den()) + "," + std::to_string(exact.num()) + "," +
               std::to_string(exact.den()) + "," + buf + "," + (within ? "1" : "0") +
               "\n";
        rows.push_back({{"Q", q},
                        {"T", ldio::rational_json(t_val)},
                        {"phi_exact", ldio::rational_json(exact)},
                        {"ratio", ratio},
                        {"within_bound", within}});
    }
    const std::string path = pick(a.out, a.format == "json" ? "t-ratio.json" : "t-ratio.csv");
    if (a.format == "json") {
        nlohmann::json j{{"field", ldio::field_config_json(F)},
                         {"m", dims.m},
                         {"n", dims.n},
                         {"psi", psi.to_string()},
                         {"bound", 4},
                         {"rows", std::move(rows)},
                         {"all_within_bound", all_within}};
        ldio::write_file(path, j.dump(2) + "\n");
    } else {
        ldio::write_file(path, csv);
    }
    note_written(path);
    return all_within ? 0 : 1;
}

int cmd_run(const Args& a) {
    ldio::RunConfig config{make_field(a),
                           ldio::Dims{a.m, a.n},
                           ldio::Psi::parse(a.psi_text, a.allow_psi_zero),
                           a.Q,
                           a.samples,
                           a.seed,
                           a.epsilon,
                           count_options(a),
                           a.threads == 0 ? ldio::hardware_threads() : a.threads};
    const auto records = ldio::run(config);
    const std::string csv_path = pick(a.out, "runs.csv");
    ldio::write_file(csv_path, ldio::runs_csv(records));
    note_written(csv_path);
    const std::string summary_path = csv_path + ".summary.json";
    ldio::write_file(summary_path, ldio::run_summary_json(config, records).dump(2) + "\n");
    note_written(summary_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Diophantine approximation counts over formal Laurent series"};
    app.require_subcommand(1);

    Args args;
    struct Entry {
        const char* name;
        const char* help;
        int (*handler)(const Args&);
    };
    const Entry entries[] = {
        {"verify-prop1", "check mu(B_q) = psi(||q||)^n exactly over a height range",
         cmd_verify_prop1},
        {"verify-prop2", "check the pairwise product rule exactly over a height range",
         cmd_verify_prop2},
        {"counts", "exact vs closed-form shell counts", cmd_counts},
        {"phi", "main-term table under both counting conventions", cmd_phi},
        {"expected-n", "cylinder average of N(Q, .) against phi", cmd_expected_n},
        {"t-ratio", "exact T(Q) against phi with the 4x bound", cmd_t_ratio},
        {"run", "seeded Monte Carlo residual run", cmd_run},
    };
    for (const Entry& e : entries) {
        add_common(app.add_subcommand(e.name, e.help), args);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        for (const Entry& e : entries) {
            if (app.get_subcommand(e.name)->parsed()) return e.handler(args);
        }
        std::fprintf(stderr, "no subcommand selected\n");
        return 2;
    } catch (const ldio::BudgetError& e) {
        std::fprintf(stderr, "budget error: %s\n", e.what());
        return 2;
    } catch (const ldio::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
