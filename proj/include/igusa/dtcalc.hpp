#pragma once

#include "igusa/forms.hpp"
#include "igusa/vertex.hpp"

#include <string>

namespace igusa {

/* How the vertex-flavored ingredient of a strata assembly is obtained:
 * by enumerating box configurations, or from the equivalent closed
 * product form. */
enum class VertexRoute { Enumerated, ClosedForm };

inline const char* route_name(VertexRoute r)
{
	return r == VertexRoute::Enumerated ? "vertex" : "closed";
}

/* A DT-level series with its provenance. All DT-level series carry
 * q_offset -1 (the q^{d-1} convention). */
struct DtSeries {
	std::string label;
	QSeries series;
	int q_max = 0;
	int p_max = 0;
	int K = 0;
	VertexRoute route = VertexRoute::ClosedForm;
};

/* The closed form of sum_a F(a) q^a:
 * prod (1-q^m) (1-pq^m)^{-1} (1-p^{-1}q^m)^{-1}. */
QSeries f_sum_closed(int a_max);

/* Unsigned genus-0 strata assembly:
 * q^{-1} p/(1-p)^2 (sum F(a) q^a)^2 prod(1-q^m)^{-22}. */
DtSeries dt0_hat(int q_max, int p_max, int K, VertexRoute route, const EnumLimits& limits = {});

/* Reduced genus-0 series: the Behrend sign flips the vertical stratum. */
DtSeries dt0(int q_max, int p_max, int K, VertexRoute route, const EnumLimits& limits = {});

/* 1/(F^2 Delta), the genus-0 Jacobi form. */
DtSeries dt0_closed(int q_max, int p_max);

/* Unsigned genus-1 vertical stratum:
 * q^{-1} (-22 prod(1-q^m)^{-24} + 24 prod(1-q^m)^{-23} sum_b N(b) q^b),
 * or its closed form 24 q^{-1} prod(1-q^m)^{-24} {1/12 + p/(1-p)^2 +
 * sum_d sum_{k|d} k(p^k+p^{-k}) q^d}. */
DtSeries dt1_vertical_hat(int q_max, int p_max, int K, VertexRoute route, const EnumLimits& limits = {});

/* Unsigned genus-1 diagonal stratum:
 * q^{-1} prod(1-q^m)^{-24} * 48 * sum_d sigma1(d) q^d. */
DtSeries dt1_diag_hat(int q_max);

/* Reduced genus-1 series: -vertical + diagonal (Behrend signs). */
DtSeries dt1(int q_max, int p_max, int K, VertexRoute route, const EnumLimits& limits = {});

/* -24 wp / Delta, the genus-1 Jacobi form. */
DtSeries dt1_closed(int q_max, int p_max);

}  // namespace igusa
