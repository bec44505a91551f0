#include "igusa/dtcalc.hpp"

namespace igusa {

namespace {

/* Expansion of (1 - p^pn q^m)^{-1}: sum_j p^{pn j} q^{m j}. */
QSeries geom(int pn, int m, int q_max)
{
	std::vector<PLaurent> terms(static_cast<size_t>(q_max) + 1);
	for (int j = 0; m * j <= q_max; ++j)
		terms[static_cast<size_t>(m * j)] = PLaurent::monomial(Rational(1), pn * j);
	return QSeries::with_terms(std::move(terms), 0, q_max);
}

int inflate_p(int q_max, int p_max) { return p_max + 2 * q_max + 6; }

}  // namespace

QSeries f_sum_closed(int a_max)
{
	QSeries r = QSeries::one();
	for (int m = 1; m <= a_max; ++m) {
		QSeries one_minus = QSeries::one() + QSeries::monomial(PLaurent::monomial(Rational(-1), 0), m);
		r = (r * one_minus).truncated_q(a_max);
		r = r * geom(1, m, a_max);
		r = r * geom(-1, m, a_max);
	}
	return r.truncated_q(a_max);
}

DtSeries dt0_hat(int q_max, int p_max, int K, VertexRoute route, const EnumLimits& limits)
{
	const int q_int = q_max + 1;
	QSeries s = (route == VertexRoute::Enumerated) ? f_series(q_int, K, limits) : f_sum_closed(q_int);
	QSeries pref = QSeries::monomial(p_over_one_minus_p_sq(inflate_p(q_max, p_max)), -1);
	QSeries series = pref * pow_i(s, 2) * eta_pow(-22, q_int);
	return DtSeries{"dt0-hat", std::move(series), q_max, p_max, K, route};
}

DtSeries dt0(int q_max, int p_max, int K, VertexRoute route, const EnumLimits& limits)
{
	DtSeries hat = dt0_hat(q_max, p_max, K, route, limits);
	return DtSeries{"dt0", -hat.series, q_max, p_max, K, route};
}

DtSeries dt0_closed(int q_max, int p_max)
{
	const int q_int = q_max + 2;
	const int p_int = inflate_p(q_max, p_max);
	QSeries f2 = recip(-f_squared_neg_inv(q_int, p_int));
	QSeries series = recip(f2 * delta_series(q_int));
	return DtSeries{"dt0-closed", std::move(series), q_max, p_max, 0, VertexRoute::ClosedForm};
}

DtSeries dt1_vertical_hat(int q_max, int p_max, int K, VertexRoute route, const EnumLimits& limits)
{
	const int q_int = q_max + 1;
	QSeries inner;
	if (route == VertexRoute::Enumerated) {
		inner = eta_pow(-24, q_int).scaled(Rational(-22)) +
		        (eta_pow(-23, q_int) * n_series(q_int, K, limits)).scaled(Rational(24));
	} else {
		inner = (eta_pow(-24, q_int) * vertical_brace(q_int, inflate_p(q_max, p_max))).scaled(Rational(24));
	}
	return DtSeries{"dt1-vert-hat", inner.shifted_q(-1), q_max, p_max, K, route};
}

DtSeries dt1_diag_hat(int q_max)
{
	const int q_int = q_max + 1;
	std::vector<PLaurent> sig(static_cast<size_t>(q_int) + 1);
	for (int d = 1; d <= q_int; ++d)
		sig[static_cast<size_t>(d)] = PLaurent::monomial(Rational(48 * sigma1(d)), 0);
	QSeries diag_counts = QSeries::with_terms(std::move(sig), 0, q_int);
	QSeries series = (eta_pow(-24, q_int) * diag_counts).shifted_q(-1);
	return DtSeries{"dt1-diag-hat", std::move(series), q_max, 0, 0, VertexRoute::ClosedForm};
}

DtSeries dt1(int q_max, int p_max, int K, VertexRoute route, const EnumLimits& limits)
{
	DtSeries vert = dt1_vertical_hat(q_max, p_max, K, route, limits);
	DtSeries diag = dt1_diag_hat(q_max);
	return DtSeries{"dt1", -vert.series + diag.series, q_max, p_max, K, route};
}

DtSeries dt1_closed(int q_max, int p_max)
{
	const int q_int = q_max + 1;
	QSeries series =
	    (weierstrass_p(q_int, inflate_p(q_max, p_max)) * recip(delta_series(q_int + 1))).scaled(Rational(-24));
	return DtSeries{"dt1-closed", std::move(series), q_max, p_max, 0, VertexRoute::ClosedForm};
}

}  // namespace igusa
