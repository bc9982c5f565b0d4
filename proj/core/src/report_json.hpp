#pragma once

#include "pfaff/analysis.hpp"

#include <json.hpp>

namespace pfaff {

using Json = nlohmann::ordered_json;

Json report_json(const AnalysisReport& report);
Json vector_json(const Vector& v);

} // namespace pfaff
