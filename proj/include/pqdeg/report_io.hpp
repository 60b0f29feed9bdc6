#pragma once

// Serialization of reports and verdicts. JSON is the canonical format and is
// byte-stable for identical inputs; CSV is a projection with the same column
// names; text is human-oriented. Simple-root indices and word letters are
// 1-based on the wire.

#include "pqdeg/degree.hpp"
#include "pqdeg/oracles.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace pqdeg::report_io {

using json = nlohmann::ordered_json;

// The frozen field order of the report schema.
const std::vector<std::string>& report_fields();

json to_json(const degree::DegreeReport& r);
std::string to_json_string(const degree::DegreeReport& r);  // dump(2) + newline

std::string csv_header();
std::string to_csv_row(const degree::DegreeReport& r);
std::string to_csv(const std::vector<degree::DegreeReport>& rows);

std::string to_text(const degree::DegreeReport& r);

json to_json(const oracles::LemmaVerdict& v);
std::string to_text(const oracles::LemmaVerdict& v);

}  // namespace pqdeg::report_io
