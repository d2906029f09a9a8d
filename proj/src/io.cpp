#include "ldio/io.hpp"

#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <numeric>

namespace ldio {

namespace {

uint32_t parse_u32(std::string_view s) {
    uint32_t out = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("bad residue '" + std::string(s) + "'");
    }
    return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t pos = 0;
    while (true) {
        const size_t next = s.find(sep, pos);
        out.push_back(s.substr(pos, next == std::string_view::npos ? s.size() - pos
                                                                   : next - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string elem_to_string(const FieldSpec& F, FieldElem e) {
    const auto residues = F.coeffs(e);
    std::string out;
    for (uint32_t i = 0; i < F.l(); ++i) {
        if (i) out += '_';
        out += std::to_string(residues[i]);
    }
    return out;
}

FieldElem elem_from_string(const FieldSpec& F, std::string_view text) {
    const auto parts = split(text, '_');
    if (parts.size() != F.l()) {
        throw ParseError("element '" + std::string(text) + "' needs exactly " +
                         std::to_string(F.l()) + " residues");
    }
    std::vector<uint32_t> residues;
    residues.reserve(parts.size());
    for (const auto part : parts) residues.push_back(parse_u32(part));
    return F.from_coeffs(residues);
}

std::string poly_to_string(const FieldSpec& F, const Poly& q) {
    if (q.is_zero()) return elem_to_string(F, FieldElem{0});
    std::string out;
    for (size_t i = 0; i < q.c.size(); ++i) {
        if (i) out += ',';
        out += elem_to_string(F, q.c[i]);
    }
    return out;
}

Poly poly_from_string(const FieldSpec& F, std::string_view text) {
    if (text.empty()) throw ParseError("empty polynomial text");
    std::vector<FieldElem> coeffs;
    for (const auto part : split(text, ',')) coeffs.push_back(elem_from_string(F, part));
    return Poly::from_coeffs(std::move(coeffs));
}

std::string frac_to_string(const FieldSpec& F, const Frac& x) {
    std::string out = std::to_string(x.precision()) + ":";
    for (size_t i = 0; i < x.a.size(); ++i) {
        if (i) out += ',';
        out += elem_to_string(F, x.a[i]);
    }
    return out;
}

Frac frac_from_string(const FieldSpec& F, std::string_view text) {
    const size_t colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError("fraction text needs 't:'");
    const uint32_t t = parse_u32(text.substr(0, colon));
    Frac x;
    const std::string_view body = text.substr(colon + 1);
    if (!body.empty()) {
        for (const auto part : split(body, ',')) x.a.push_back(elem_from_string(F, part));
    }
    if (x.a.size() != t) {
        throw ParseError("fraction lists " + std::to_string(x.a.size()) +
                         " coefficients but declares t=" + std::to_string(t));
    }
    return x;
}

std::vector<uint32_t> residues_from_string(std::string_view text) {
    std::vector<uint32_t> out;
    for (const auto part : split(text, ',')) out.push_back(parse_u32(part));
    return out;
}

nlohmann::json field_config_json(const FieldSpec& F) {
    nlohmann::json j{{"p", F.p()}, {"l", F.l()}, {"k", F.k()}};
    if (!F.modulus().empty()) j["modulus"] = F.modulus();
    return j;
}

nlohmann::json rational_json(const Rational& value) {
    return nlohmann::json{{"value", value.to_string()},
                          {"num", value.num()},
                          {"den", value.den()}};
}

namespace {

nlohmann::json polyvec_json(const FieldSpec& F, const PolyVec& q) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Poly& qi : q) arr.push_back(poly_to_string(F, qi));
    return arr;
}

}  // namespace

nlohmann::json prop1_report_json(const FieldSpec& F, const Psi& psi,
                                 const Prop1Report& report) {
    nlohmann::json cases = nlohmann::json::array();
    for (const Prop1Case& c : report.cases) {
        cases.push_back({{"q", polyvec_json(F, c.q)},
                         {"r", c.r},
                         {"s", c.s},
                         {"measured", c.measured.to_string()},
                         {"expected", c.expected.to_string()},
                         {"pass", c.pass}});
    }
    return nlohmann::json{{"check", "measure_bq equals psi(||q||)^n"},
                          {"field", field_config_json(F)},
                          {"m", report.m},
                          {"n", report.n},
                          {"psi", psi.to_string()},
                          {"max_height_exponent", report.max_height_exponent},
                          {"cases", std::move(cases)},
                          {"total", report.cases.size()},
                          {"passed", report.passed},
                          {"all_pass", report.all_pass()}};
}

nlohmann::json prop2_report_json(const FieldSpec& F, const Psi& psi,
                                 const Prop2Report& report) {
    nlohmann::json cases = nlohmann::json::array();
    for (const Prop2Case& c : report.cases) {
        nlohmann::json entry{{"q", polyvec_json(F, c.q)},
                             {"q2", polyvec_json(F, c.q2)},
                             {"joint", c.joint.to_string()},
                             {"product", c.product.to_string()},
                             {"product_rule_holds", c.product_rule_holds}};
        if (c.independent) {
            entry["status"] = c.pass ? "pass" : "fail";
        } else {
            entry["status"] = "dependent: product rule not claimed";
        }
        cases.push_back(std::move(entry));
    }
    return nlohmann::json{{"check", "measure_pair equals the product for independent pairs"},
                          {"field", field_config_json(F)},
                          {"m", report.m},
                          {"n", report.n},
                          {"psi", psi.to_string()},
                          {"max_height_exponent", report.max_height_exponent},
                          {"cases", std::move(cases)},
                          {"independent_checked", report.independent_checked},
                          {"passed", report.passed},
                          {"dependent_reported", report.dependent_reported},
                          {"all_pass", report.all_pass()}};
}

namespace {

struct CountRow {
    int r;
    int64_t exact;
    int64_t paper;
    int64_t ratio_num;
    int64_t ratio_den;
};

std::vector<CountRow> count_rows(const FieldSpec& F, uint32_t m, int q_max) {
    std::vector<CountRow> rows;
    for (int r = 0; r <= q_max; ++r) {
        CountRow row{r, count_height(F, m, r, CountVariant::ExactEnumeration),
                     count_height(F, m, r, CountVariant::PaperFormula), 0, 0};
        const int64_t g = std::gcd(row.paper, row.exact);
        row.ratio_num = row.paper / g;
        row.ratio_den = row.exact / g;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

std::string counts_csv(const FieldSpec& F, uint32_t m, int q_max) {
    std::string out = "r,exact_count,paper_count,ratio_num,ratio_den\n";
    for (const CountRow& row : count_rows(F, m, q_max)) {
        out += std::to_string(row.r) + "," + std::to_string(row.exact) + "," +
               std::to_string(row.paper) + "," + std::to_string(row.ratio_num) + "," +
               std::to_string(row.ratio_den) + "\n";
    }
    return out;
}

nlohmann::json counts_json(const FieldSpec& F, uint32_t m, int q_max) {
    nlohmann::json rows = nlohmann::json::array();
    for (const CountRow& row : count_rows(F, m, q_max)) {
        rows.push_back({{"r", row.r},
                        {"exact_count", row.exact},
                        {"paper_count", row.paper},
                        {"ratio_num", row.ratio_num},
                        {"ratio_den", row.ratio_den}});
    }
    return nlohmann::json{
        {"field", field_config_json(F)}, {"m", m}, {"max_height_exponent", q_max},
        {"rows", std::move(rows)}};
}

std::string phi_csv(const FieldSpec& F, Dims dims, const Psi& psi, int q_max) {
    std::string out = "Q,phi_exact_num,phi_exact_den,phi_paper_num,phi_paper_den\n";
    for (int q = 0; q <= q_max; ++q) {
        const Rational exact = phi(F, dims, psi, q, CountVariant::ExactEnumeration);
        const Rational paper = phi(F, dims, psi, q, CountVariant::PaperFormula);
        out += std::to_string(q) + "," + std::to_string(exact.num()) + "," +
               std::to_string(exact.den()) + "," + std::to_string(paper.num()) + "," +
               std::to_string(paper.den()) + "\n";
    }
    return out;
}

nlohmann::json phi_json(const FieldSpec& F, Dims dims, const Psi& psi, int q_max) {
    nlohmann::json rows = nlohmann::json::array();
    for (int q = 0; q <= q_max; ++q) {
        rows.push_back(
            {{"Q", q},
             {"phi_exact", rational_json(phi(F, dims, psi, q, CountVariant::ExactEnumeration))},
             {"phi_paper", rational_json(phi(F, dims, psi, q, CountVariant::PaperFormula))}});
    }
    return nlohmann::json{{"field", field_config_json(F)},
                          {"m", dims.m},
                          {"n", dims.n},
                          {"psi", psi.to_string()},
                          {"rows", std::move(rows)}};
}

std::string runs_csv(const std::vector<RunRecord>& records) {
    std::string out =
        "seed,sample,Q,N,phi_exact_num,phi_exact_den,phi_paper_num,phi_paper_den,"
        "T_num,T_den,residual,normalized\n";
    char buf[64];
    for (const RunRecord& rec : records) {
        std::snprintf(buf, sizeof(buf), "%" PRIu64 ",%u,%d,%" PRIu64 ",", rec.seed,
                      rec.sample, rec.Q, rec.N);
        out += buf;
        out += std::to_string(rec.phi_exact.num()) + "," +
               std::to_string(rec.phi_exact.den()) + "," +
               std::to_string(rec.phi_paper.num()) + "," +
               std::to_string(rec.phi_paper.den()) + "," + std::to_string(rec.T.num()) +
               "," + std::to_string(rec.T.den()) + "," + format_double(rec.residual) +
               ",";
        if (rec.normalized) out += format_double(*rec.normalized);
        out += "\n";
    }
    return out;
}

nlohmann::json run_summary_json(const RunConfig& config,
                                const std::vector<RunRecord>& records) {
    const ResidualStats stats = residual_stats(records, config.epsilon);
    nlohmann::json per_q = nlohmann::json::array();
    for (const QStats& qs : stats.per_q) {
        per_q.push_back({{"Q", qs.Q},
                         {"samples", qs.samples},
                         {"mean_N", qs.mean_n},
                         {"variance_N", qs.variance_n},
                         {"phi_exact", rational_json(qs.phi_exact)},
                         {"max_abs_normalized",
                          qs.any_normalized ? nlohmann::json(qs.max_abs_normalized)
                                            : nlohmann::json()}});
    }
    return nlohmann::json{
        {"config",
         {{"field", field_config_json(config.field)},
          {"m", config.dims.m},
          {"n", config.dims.n},
          {"psi", config.psi.to_string()},
          {"Q_max", config.q_max},
          {"samples", config.samples},
          {"seed", config.seed},
          {"epsilon", config.epsilon},
          {"precision", config.derived_precision()},
          {"log_base", "natural"}}},
        {"per_q", std::move(per_q)},
        {"max_abs_normalized", stats.max_abs_normalized},
        {"per_q_max_strictly_increasing", stats.per_q_max_strictly_increasing}};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace ldio
