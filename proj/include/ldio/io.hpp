// Textual formats and machine-readable reports.
//
// Polynomials: coefficients low-to-high as comma-separated residues,
// extension elements as l residues joined by '_' (so "1,0,1" is X^2+1 over
// F_2 and "0_1,1_1" is (Y+1)X + Y over F_4). Fractions: "t:" followed by the
// t coefficients depth-first, e.g. "3:1,0,1". Psi specs are handled by
// Psi::parse/to_string.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ldio/counting.hpp"
#include "ldio/experiment.hpp"
#include "ldio/field.hpp"
#include "ldio/laurent.hpp"
#include "ldio/measure.hpp"
#include "ldio/poly.hpp"

namespace ldio {

std::string elem_to_string(const FieldSpec& F, FieldElem e);
FieldElem elem_from_string(const FieldSpec& F, std::string_view text);

std::string poly_to_string(const FieldSpec& F, const Poly& q);
Poly poly_from_string(const FieldSpec& F, std::string_view text);

std::string frac_to_string(const FieldSpec& F, const Frac& x);
Frac frac_from_string(const FieldSpec& F, std::string_view text);

// Modulus text for the CLI: residues mod p, low-to-high, e.g. "1,1,1".
std::vector<uint32_t> residues_from_string(std::string_view text);

// Config echo shared by every report header.
nlohmann::json field_config_json(const FieldSpec& F);

nlohmann::json rational_json(const Rational& value);  // {"value": "num/k^e", ...}

nlohmann::json prop1_report_json(const FieldSpec& F, const Psi& psi,
                                 const Prop1Report& report);
nlohmann::json prop2_report_json(const FieldSpec& F, const Psi& psi,
                                 const Prop2Report& report);

// Shell-count comparison, columns r, exact_count, paper_count, ratio_num,
// ratio_den (ratio = paper/exact in lowest terms).
std::string counts_csv(const FieldSpec& F, uint32_t m, int q_max);
nlohmann::json counts_json(const FieldSpec& F, uint32_t m, int q_max);

std::string phi_csv(const FieldSpec& F, Dims dims, const Psi& psi, int q_max);
nlohmann::json phi_json(const FieldSpec& F, Dims dims, const Psi& psi, int q_max);

std::string runs_csv(const std::vector<RunRecord>& records);
nlohmann::json run_summary_json(const RunConfig& config,
                                const std::vector<RunRecord>& records);

// Writes content to path; throws Error on failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace ldio
