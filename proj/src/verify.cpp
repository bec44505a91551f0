#include "igusa/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>

namespace igusa {

const char* status_name(CheckReport::Status s)
{
	switch (s) {
	case CheckReport::Status::Pass: return "pass";
	case CheckReport::Status::Fail: return "fail";
	case CheckReport::Status::Budget: return "budget";
	}
	return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0)
{
	return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

CheckReport from_compare(std::string name, const SeriesCompare& cmp, Clock::time_point t0)
{
	CheckReport r;
	r.name = std::move(name);
	r.status = cmp.equal ? CheckReport::Status::Pass : CheckReport::Status::Fail;
	r.q_lo = cmp.q_lo;
	r.q_hi = cmp.q_hi;
	r.p_lo = cmp.p_low_min;
	r.p_hi = cmp.p_high_min;
	r.first_mismatch = cmp.first_mismatch;
	r.elapsed_ms = ms_since(t0);
	return r;
}

SeriesCompare merge(const SeriesCompare& a, const SeriesCompare& b)
{
	SeriesCompare out;
	out.equal = a.equal && b.equal;
	out.q_lo = std::min(a.q_lo, b.q_lo);
	out.q_hi = std::min(a.q_hi, b.q_hi);
	out.p_low_min = std::min(a.p_low_min, b.p_low_min);
	out.p_high_min = std::min(a.p_high_min, b.p_high_min);
	out.first_mismatch = a.first_mismatch ? a.first_mismatch : b.first_mismatch;
	return out;
}

template <typename Fn>
CheckReport guarded(const std::string& name, Fn&& fn)
{
	const auto t0 = Clock::now();
	try {
		return fn(t0);
	} catch (const BudgetExceeded&) {
		CheckReport r;
		r.name = name;
		r.status = CheckReport::Status::Budget;
		r.elapsed_ms = ms_since(t0);
		return r;
	}
}

}  // namespace

CheckReport check_macmahon(int K, const EnumLimits& limits)
{
	return guarded("macmahon", [&](Clock::time_point t0) {
		PLaurent counted = vertex_series({Partition(), Partition(), Partition()}, K, limits);
		/* prod_{m <= K} (1 - p^m)^{-m}, truncated to [0, K]. */
		PLaurent product = PLaurent::one().truncated(K);
		for (int m = 1; m <= K; ++m) {
			PLaurent f = PLaurent::polynomial({{0, 1}, {m, -1}}).truncated(K);
			product = product * pow_i(f, -m, K);
		}
		auto cmp = compare(QSeries::monomial(counted, 0), QSeries::monomial(product, 0));
		return from_compare("macmahon", cmp, t0);
	});
}

CheckReport check_lemma_f(int q_max, int K, const EnumLimits& limits)
{
	return guarded("lemma-f", [&](Clock::time_point t0) {
		auto cmp = compare(f_series(q_max, K, limits), f_sum_closed(q_max));
		return from_compare("lemma-f", cmp, t0);
	});
}

CheckReport check_nodal(int q_max, int K, const EnumLimits& limits)
{
	return guarded("nodal", [&](Clock::time_point t0) {
		QSeries lhs = eta_pow(1, q_max) * n_series(q_max, K, limits);
		auto cmp = compare(lhs, nodal_rhs(q_max, K + q_max));
		return from_compare("nodal", cmp, t0);
	});
}

CheckReport check_theorem(int h, int q_max, int p_max, int K, VertexRoute route, const EnumLimits& limits)
{
	const std::string name = (h == 0) ? "theorem-h0" : "theorem-h1";
	return guarded(name, [&](Clock::time_point t0) {
		QSeries strata, closed;
		if (h == 0) {
			strata = dt0(q_max, p_max, K, route, limits).series;
			closed = dt0_closed(q_max, p_max).series;
		} else {
			strata = dt1(q_max, p_max, K, route, limits).series;
			closed = dt1_closed(q_max, p_max).series;
		}
		QSeries predicted = dt_prediction(h, q_max, p_max);
		auto cmp = merge(compare(strata, closed), compare(closed, predicted));
		return from_compare(name, cmp, t0);
	});
}

std::vector<CheckReport> run_all_checks(const CheckParams& params, bool explicit_q)
{
	/* Closed-form-only checks default to a deeper q range than the
	 * vertex-backed ones. */
	const int q_vertex = params.q_max;
	const int q_closed = explicit_q ? params.q_max : 8;
	const int p_closed = params.p_max;

	std::vector<std::future<CheckReport>> fut;
	fut.push_back(std::async(std::launch::async, [&] { return check_lemma_f(q_vertex, params.K, params.limits); }));
	fut.push_back(std::async(std::launch::async, [&] { return check_macmahon(params.K, params.limits); }));
	fut.push_back(std::async(std::launch::async, [&] { return check_nodal(q_vertex, params.K, params.limits); }));
	fut.push_back(std::async(std::launch::async, [&] {
		return check_theorem(0, q_closed, p_closed, params.K, params.route, params.limits);
	}));
	fut.push_back(std::async(std::launch::async, [&] {
		return check_theorem(1, q_closed, p_closed, params.K, params.route, params.limits);
	}));

	std::vector<CheckReport> out;
	out.reserve(fut.size());
	for (auto& f : fut) out.push_back(f.get());
	std::sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
	return out;
}

std::optional<CheckReport> run_check_by_name(const std::string& name, const CheckParams& params)
{
	if (name == "macmahon") return check_macmahon(params.K, params.limits);
	if (name == "lemma-f") return check_lemma_f(params.q_max, params.K, params.limits);
	if (name == "nodal") return check_nodal(params.q_max, params.K, params.limits);
	if (name == "theorem-h0") return check_theorem(0, params.q_max, params.p_max, params.K, params.route, params.limits);
	if (name == "theorem-h1") return check_theorem(1, params.q_max, params.p_max, params.K, params.route, params.limits);
	return std::nullopt;
}

}  // namespace igusa
