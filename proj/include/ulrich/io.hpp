#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ulrich/beilinson.hpp"
#include "ulrich/classify.hpp"
#include "ulrich/cohom_table.hpp"
#include "ulrich/scroll.hpp"

namespace ulrich {

// Parsers throw InvalidInput.
std::vector<Int> parse_int_list(const std::string& text);
/// "2H+3F", "H-F", "-F", "0".
Divisor parse_divisor(const std::string& text);
/// "u,v" in the pair basis.
Divisor parse_pair(const std::string& text);
Profile parse_profile(const nlohmann::json& j);
Profile load_profile(const std::string& path);

nlohmann::json to_json(const Divisor& d);
nlohmann::json to_json(const Interval& iv);
/// Exact entries as integers, intervals as "[lo,hi]".
nlohmann::json to_json(const CohomTable& t);
nlohmann::json to_json(const TypeInfo& info);
nlohmann::json to_json(const BeilinsonTable& t);
std::string slope_string(const Rational& r);

enum class TableFormat { Markdown, Latex };

/// Columns j = size-1 .. 0, rows q = top .. 0, F labels above and E labels below.
std::string render_table(const BeilinsonTable& t, TableFormat fmt);

} // namespace ulrich
