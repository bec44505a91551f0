#include "igusa/jsonio.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace igusa {

namespace {

using ordered_json = nlohmann::ordered_json;

int display_q_top(const QSeries& s, int q_max)
{
	return std::min(q_max, std::min(s.q_known(), std::max(s.max_stored_q(), s.q_offset())));
}

}  // namespace

std::string series_to_json(const std::string& name, const QSeries& s, const SeriesPrintParams& params)
{
	ordered_json root;
	root["series"] = name;
	root["q_offset"] = s.q_offset();
	root["truncation"] = {{"q_max", params.q_max},
	                      {"p_window", {params.p_lo, params.p_hi}},
	                      {"K", params.K}};
	ordered_json coeffs = ordered_json::array();
	const int top = display_q_top(s, params.q_max);
	for (int q = s.q_offset(); q <= top; ++q) {
		const PLaurent pl = s.coeff(q);
		ordered_json entry;
		entry["q"] = q;
		ordered_json terms = ordered_json::array();
		for (const auto& [deg, val] : pl.coeffs()) {
			if (deg < params.p_lo || deg > std::min(params.p_hi, pl.high())) continue;
			terms.push_back({{"p", deg}, {"value", val.str()}});
		}
		entry["terms"] = std::move(terms);
		coeffs.push_back(std::move(entry));
	}
	root["coefficients"] = std::move(coeffs);
	return root.dump(2) + "\n";
}

std::string series_to_text(const std::string& name, const QSeries& s, const SeriesPrintParams& params)
{
	std::ostringstream os;
	os << name << " (q_offset " << s.q_offset() << ")\n";
	const int top = display_q_top(s, params.q_max);
	for (int q = s.q_offset(); q <= top; ++q) {
		const PLaurent pl = s.coeff(q);
		os << "q^" << q;
		const int hi = std::min(params.p_hi, pl.high());
		os << "  [p-window " << std::max(params.p_lo, pl.low() == kDegInf ? params.p_lo : pl.low())
		   << ".." << hi << "]: ";
		bool any = false;
		for (const auto& [deg, val] : pl.coeffs()) {
			if (deg < params.p_lo || deg > hi) continue;
			if (any) os << " + ";
			os << val.str() << "*p^" << deg;
			any = true;
		}
		if (!any) os << "0";
		os << "\n";
	}
	return os.str();
}

std::string reports_to_json(const std::vector<CheckReport>& reports)
{
	ordered_json root;
	ordered_json arr = ordered_json::array();
	bool all_pass = true;
	for (const auto& r : reports) {
		ordered_json e;
		e["check"] = r.name;
		e["status"] = status_name(r.status);
		e["q_range"] = {r.q_lo, r.q_hi};
		e["p_window"] = {r.p_lo, r.p_hi};
		if (r.first_mismatch) {
			e["first_mismatch"] = {{"q", r.first_mismatch->q},
			                       {"p", r.first_mismatch->p},
			                       {"lhs", r.first_mismatch->lhs.str()},
			                       {"rhs", r.first_mismatch->rhs.str()}};
		} else {
			e["first_mismatch"] = nullptr;
		}
		e["elapsed_ms"] = r.elapsed_ms;
		arr.push_back(std::move(e));
		all_pass = all_pass && r.passed();
	}
	root["checks"] = std::move(arr);
	root["all_pass"] = all_pass;
	return root.dump(2) + "\n";
}

std::string reports_to_text(const std::vector<CheckReport>& reports)
{
	std::ostringstream os;
	for (const auto& r : reports) {
		os << "[" << status_name(r.status) << "] " << r.name;
		if (r.status == CheckReport::Status::Budget)
			os << "  enumeration state budget exceeded";
		else
			os << "  q " << r.q_lo << ".." << r.q_hi << "  p-window verified through " << r.p_hi;
		if (r.first_mismatch)
			os << "  first mismatch at q^" << r.first_mismatch->q << " p^" << r.first_mismatch->p
			   << ": " << r.first_mismatch->lhs.str() << " vs " << r.first_mismatch->rhs.str();
		os << "  (" << r.elapsed_ms << " ms)\n";
	}
	return os.str();
}

QSeries series_from_json(const std::string& json_text)
{
	const auto root = nlohmann::json::parse(json_text);
	int q_lo = kDegInf, q_hi = -kDegInf;
	for (const auto& entry : root.at("coefficients")) {
		int q = entry.at("q").get<int>();
		q_lo = std::min(q_lo, q);
		q_hi = std::max(q_hi, q);
	}
	if (q_hi < q_lo) return QSeries();
	const auto& win = root.at("truncation").at("p_window");
	const int p_lo = win.at(0).get<int>(), p_hi = win.at(1).get<int>();

	/* Rows without listed terms are zero on the emitted window only;
	 * nothing was claimed outside it. */
	std::vector<PLaurent> terms(static_cast<size_t>(q_hi - q_lo) + 1,
	                            PLaurent::with_window({}, p_lo, p_hi));
	for (const auto& entry : root.at("coefficients")) {
		int q = entry.at("q").get<int>();
		std::map<int, Rational> c;
		for (const auto& t : entry.at("terms"))
			c[t.at("p").get<int>()] = Rational::parse(t.at("value").get<std::string>());
		terms[static_cast<size_t>(q - q_lo)] = PLaurent::with_window(std::move(c), p_lo, p_hi);
	}
	return QSeries::with_terms(std::move(terms), q_lo, q_hi);
}

}  // namespace igusa
