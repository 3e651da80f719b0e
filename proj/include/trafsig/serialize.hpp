#pragma once

#include <string>
#include <vector>

#include "trafsig/detect.hpp"
#include "trafsig/filter.hpp"
#include "trafsig/mining.hpp"

namespace trafsig {

// JSON surfaces. All writers are byte-deterministic for identical inputs;
// round trips through the matching reader are exact.

std::string filter_config_to_json(const filter_config& config);
filter_config filter_config_from_json(const std::string& text);

std::string filter_report_to_json(const filter_report& report);

std::string signatures_to_json(const std::vector<signature>& sigs);
std::vector<signature> signatures_from_json(const std::string& text);

// Rows of {"signature", "event", "tp", "fp", "fn", "precision", "recall",
// "f1"}; metrics are rounded half-up to three decimals, f1 may be the
// string "undefined". `audit` adds the per-trace match list to each row.
std::string eval_report_to_json(const eval_report& report, bool audit = false);
eval_report eval_report_from_json(const std::string& text);

std::string mining_params_to_json(const mining_params& params);
mining_params mining_params_from_json(const std::string& text);

}  // namespace trafsig
