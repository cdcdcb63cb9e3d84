#pragma once

// JSON and CSV renderings used by the command-line tool.

#include <nlohmann/json.hpp>
#include <string>

#include "hermsum/classdata.hpp"
#include "hermsum/repsearch.hpp"
#include "hermsum/verify.hpp"

namespace hermsum {

using Json = nlohmann::ordered_json;

[[nodiscard]] Json to_json(const FieldParams& f);
[[nodiscard]] Json to_json(const IdealClassRep& rep);
[[nodiscard]] Json to_json(const CongruenceCondition& c);

// {d, class_index, k, r, m, gammas: [[a,b],...], check}; check = sum of norms.
[[nodiscard]] Json to_json(const RepCertificate& cert);

[[nodiscard]] Json to_json(const FieldReport& rep);
[[nodiscard]] Json to_json(const DiffReport& report);

// Columns: d, class, g_expected, g_computed, exceptions_match, stable.
[[nodiscard]] std::string to_table(const DiffReport& report);

// Every encoded representative of every supported field, principal ones
// included. CSV columns: d, class_index, k, s, t.
[[nodiscard]] Json class_tables_json();
[[nodiscard]] std::string class_tables_csv();

}  // namespace hermsum
