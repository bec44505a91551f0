#pragma once

#include "igusa/qseries.hpp"
#include "igusa/verify.hpp"

#include <string>
#include <vector>

namespace igusa {

/* Parameters echoed into the series output schema. */
struct SeriesPrintParams {
	int q_max = 6;
	int p_lo = -6;
	int p_hi = 6;
	int K = 0;
};

/* Schema:
 * { "series": name, "q_offset": int,
 *   "truncation": {"q_max": int, "p_window": [lo, hi], "K": int},
 *   "coefficients": [ {"q": int, "terms": [ {"p": int, "value": "num/den"} ] } ] }
 * Coefficients are listed only where exact (inside the validity
 * windows); listed-but-absent monomials inside the window are zero. */
std::string series_to_json(const std::string& name, const QSeries& s, const SeriesPrintParams& params);

std::string series_to_text(const std::string& name, const QSeries& s, const SeriesPrintParams& params);

std::string reports_to_json(const std::vector<CheckReport>& reports);

std::string reports_to_text(const std::vector<CheckReport>& reports);

/* Rebuild a series from emitted JSON (coefficients become exact
 * monomial data known on the emitted q-range and p-window). */
QSeries series_from_json(const std::string& json_text);

}  // namespace igusa
