#pragma once

#include "igusa/dtcalc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace igusa {

/* Result of one named identity check. status is Pass exactly when the
 * compared series agree everywhere on the intersected validity
 * windows; Budget marks an enumeration that hit its state budget.
 * Reported windows never exceed the intersected validity windows. */
struct CheckReport {
	enum class Status { Pass, Fail, Budget };

	std::string name;
	Status status = Status::Pass;
	int q_lo = 0;
	int q_hi = 0;
	int p_lo = 0;
	int p_hi = 0;
	std::optional<Mismatch> first_mismatch;
	long long elapsed_ms = 0;

	bool passed() const { return status == Status::Pass; }
};

const char* status_name(CheckReport::Status s);

struct CheckParams {
	int q_max = 4;
	int p_max = 6;
	int K = 8;
	VertexRoute route = VertexRoute::ClosedForm;
	EnumLimits limits;
};

/* vertex_series with no legs against prod (1-p^m)^{-m}. */
CheckReport check_macmahon(int K, const EnumLimits& limits = {});

/* f_series by enumeration against
 * prod (1-q^m) (1-pq^m)^{-1} (1-p^{-1}q^m)^{-1}. */
CheckReport check_lemma_f(int q_max, int K, const EnumLimits& limits = {});

/* prod(1-q^m) * n_series against
 * 1 + p/(1-p)^2 + sum_d sum_{k|d} k(p^k+p^{-k}) q^d. */
CheckReport check_nodal(int q_max, int K, const EnumLimits& limits = {});

/* Three-way comparison for h in {0,1}: strata assembly, Jacobi closed
 * form, and the corresponding coefficient of -1/chi10. route selects
 * how the strata assembly obtains its vertex ingredient. */
CheckReport check_theorem(int h, int q_max, int p_max, int K, VertexRoute route,
                          const EnumLimits& limits = {});

/* All checks with their per-check default parameters (overridden by
 * any explicitly supplied ones), run concurrently, reported sorted by
 * name. */
std::vector<CheckReport> run_all_checks(const CheckParams& params, bool explicit_q);

/* Names accepted by the CLI: macmahon, lemma-f, nodal, theorem-h0,
 * theorem-h1. */
std::optional<CheckReport> run_check_by_name(const std::string& name, const CheckParams& params);

}  // namespace igusa
