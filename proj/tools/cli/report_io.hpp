#pragma once

// JSON and CSV forms of results. Enclosures become {lo, hi, width}; exact
// integers and rationals carry "exact": true, rationals as "p/q" strings.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "ssz/constants.hpp"
#include "ssz/density.hpp"

namespace ssz::cli {

using nlohmann::json;

json enclosure_json(Enclosure e);
json exact_json(std::uint64_t v);
json exact_json(const mpq_class& q);
json exact_json(Rational r);
json params_json(const TruncationParams& p);
json anchors_json(const std::vector<EtaAnchor>& anchors);

// Timings are left out so that reruns give identical bytes.
json report_json(const ConstantReport& r);

std::string report_csv_header();
// name,lo,hi,width rows for the value and every sub-term ("name/key").
std::string report_csv_rows(const ConstantReport& r);

std::string report_text(const ConstantReport& r);

json density_json(const DensityGrid& g);
std::string density_csv(const DensityGrid& g);

std::string format_double(double v);

} // namespace ssz::cli
