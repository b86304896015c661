#pragma once

#include <string>

#include "skewtab/counting.hpp"
#include "skewtab/qseries.hpp"

namespace skewtab {

// {"shape": str, "method": str, "value": decimal-string,
//  "terms": decimal-string?, "elapsed_ms": int}
std::string count_report_to_json(const CountReport& rep, long elapsed_ms);
CountReport count_report_from_json(const std::string& text);

// {"minDeg": m, "coeffs": [decimal strings]}
std::string qlaurent_to_json(const QLaurent& p);
QLaurent qlaurent_from_json(const std::string& text);

}  // namespace skewtab
