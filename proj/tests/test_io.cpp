#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ldio/io.hpp"

using namespace ldio;

TEST_CASE("polynomial text round trip") {
    const FieldSpec F2(2);
    SUBCASE("prime field") {
        const Poly q = poly_from_string(F2, "1,0,1");
        CHECK(q.degree() == 2);
        CHECK(poly_to_string(F2, q) == "1,0,1");
        CHECK(poly_to_string(F2, Poly::zero()) == "0");
        CHECK(poly_from_string(F2, "0").is_zero());
        CHECK(poly_from_string(F2, "1,1,0,0") == poly_from_string(F2, "1,1"));  // trimmed
    }
    SUBCASE("extension fields join residues with underscores") {
        const FieldSpec F4(2, 2);
        const Poly q = poly_from_string(F4, "0_1,1_1");
        CHECK(q.degree() == 1);
        CHECK(q.coeff(0) == F4.from_coeffs({0, 1}));
        CHECK(q.coeff(1) == F4.from_coeffs({1, 1}));
        CHECK(poly_to_string(F4, q) == "0_1,1_1");
        CHECK_THROWS_AS((void)poly_from_string(F4, "1,0"), ParseError);  // needs l residues
    }
    SUBCASE("garbage is rejected") {
        CHECK_THROWS_AS((void)poly_from_string(F2, "1,x"), ParseError);
        CHECK_THROWS_AS((void)poly_from_string(F2, ""), ParseError);
    }
}

TEST_CASE("fraction text round trip") {
    const FieldSpec F2(2);
    const Frac x = frac_from_string(F2, "3:1,0,1");
    CHECK(x.precision() == 3);
    CHECK(frac_to_string(F2, x) == "3:1,0,1");
    CHECK(frac_from_string(F2, "0:").precision() == 0);
    CHECK_THROWS_AS((void)frac_from_string(F2, "3:1,0"), ParseError);  // count mismatch
    CHECK_THROWS_AS((void)frac_from_string(F2, "1,0,1"), ParseError);  // missing t:
}

TEST_CASE("counts table pins the closed-form discrepancy") {
    const FieldSpec F(2);
    const std::string csv = counts_csv(F, 2, 3);
    CHECK(csv ==
          "r,exact_count,paper_count,ratio_num,ratio_den\n"
          "0,3,4,4,3\n"
          "1,12,16,4,3\n"
          "2,48,64,4,3\n"
          "3,192,256,4,3\n");
    const std::string csv_m1 = counts_csv(F, 1, 2);
    CHECK(csv_m1 ==
          "r,exact_count,paper_count,ratio_num,ratio_den\n"
          "0,1,1,1,1\n"
          "1,2,2,1,1\n"
          "2,4,4,1,1\n");
}

TEST_CASE("runs CSV carries the full schema") {
    RunConfig config{FieldSpec(2), Dims{2, 1}, Psi::linear(1, 1), 1, 2, 9, 0.1,
                     CountOptions{}, 1};
    const auto records = run(config);
    const std::string csv = runs_csv(records);
    CHECK(csv.substr(0, csv.find('\n')) ==
          "seed,sample,Q,N,phi_exact_num,phi_exact_den,phi_paper_num,phi_paper_den,"
          "T_num,T_den,residual,normalized");
    // one header plus one line per record
    size_t lines = 0;
    for (const char c : csv) lines += c == '\n';
    CHECK(lines == 1 + records.size());
    CHECK(runs_csv(records) == csv);  // formatting is deterministic
}

TEST_CASE("json reports echo their configuration") {
    const FieldSpec F(2);
    const Psi psi = Psi::linear(0, 1);
    const auto report = verify_prop1(F, 2, 1, psi, 0);
    const auto j = prop1_report_json(F, psi, report);
    CHECK(j["field"]["p"] == 2);
    CHECK(j["field"]["k"] == 2);
    CHECK(j["m"] == 2);
    CHECK(j["n"] == 1);
    CHECK(j["psi"] == "linear:0,1");
    CHECK(j["all_pass"] == true);
    CHECK(j["cases"].size() == 3);
    CHECK(j["cases"][0]["measured"] == "1/2^1");
    CHECK(j.dump(2) == prop1_report_json(F, psi, report).dump(2));

    const FieldSpec F4(2, 2);
    CHECK(field_config_json(F4)["modulus"] == std::vector<uint32_t>({1, 1, 1}));
}

TEST_CASE("psi and modulus helpers") {
    CHECK(residues_from_string("1,1,1") == std::vector<uint32_t>({1, 1, 1}));
    CHECK_THROWS_AS((void)residues_from_string("1,a"), ParseError);
    CHECK(Psi::parse("table:1,1,2").to_string() == "table:1,1,2");
}
