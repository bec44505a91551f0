#include "igusa/forms.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace igusa {

namespace {

/* Exact polynomial 1 - p^pn q^d as a q-series. */
QSeries one_minus_pq(int pn, int d)
{
	return QSeries::one() + QSeries::monomial(PLaurent::monomial(Rational(-1), pn), d);
}

/* Expansion of (1 - p^pn q^m)^{-2}: sum_j (j+1) p^{pn j} q^{m j}. */
QSeries geom_sq(int pn, int m, int q_max)
{
	std::vector<PLaurent> terms(static_cast<size_t>(q_max) + 1);
	for (int j = 0; m * j <= q_max; ++j)
		terms[static_cast<size_t>(m * j)] = PLaurent::monomial(Rational(j + 1), pn * j);
	return QSeries::with_terms(std::move(terms), 0, q_max);
}

/* sum_{k|d} k (p^k + p^{-k} + add) as an exact Laurent polynomial. */
PLaurent divisor_term(int d, int add)
{
	std::map<int, Rational> c;
	long const_acc = 0;
	for (int k = 1; k <= d; ++k) {
		if (d % k != 0) continue;
		c[k] = Rational(k);
		c[-k] = Rational(k);
		const_acc += static_cast<long>(k) * add;
	}
	if (const_acc != 0) c[0] = Rational(const_acc);
	return PLaurent::polynomial(std::move(c));
}

QSeries divisor_series(int q_max, int p_max, const Rational& constant, int add)
{
	std::map<int, Rational> head;
	if (!constant.is_zero()) head[0] = constant;
	for (int k = 1; k <= p_max; ++k) head[k] = Rational(k);
	std::vector<PLaurent> terms;
	terms.reserve(static_cast<size_t>(q_max) + 1);
	terms.push_back(PLaurent::with_window(std::move(head), 0, p_max));
	for (int d = 1; d <= q_max; ++d) terms.push_back(divisor_term(d, add));
	return QSeries::with_terms(std::move(terms), 0, q_max);
}

/* Generalized binomial coefficient e over j, integral for integer e. */
Rational binom(long e, int j)
{
	Rational acc(1);
	for (int t = 0; t < j; ++t) acc = acc * Rational(e - t, static_cast<long>(t) + 1);
	return acc;
}

}  // namespace

QSeries eta_pow(long k, int q_max)
{
	if (k == 0) return QSeries::one();
	QSeries base = QSeries::one();
	for (int m = 1; m <= q_max; ++m) base = (base * one_minus_pq(0, m)).truncated_q(q_max);
	base = base.truncated_q(q_max);
	return pow_i(base, k);
}

QSeries delta_series(int q_max)
{
	if (q_max < 1) throw std::invalid_argument("delta_series: q_max must be >= 1");
	return eta_pow(24, q_max).shifted_q(1);
}

PLaurent p_over_one_minus_p_sq(int p_max)
{
	std::map<int, Rational> c;
	for (int k = 1; k <= p_max; ++k) c[k] = Rational(k);
	return PLaurent::with_window(std::move(c), 1, p_max);
}

QSeries f_squared_neg_inv(int q_max, int p_max)
{
	QSeries r = QSeries::monomial(p_over_one_minus_p_sq(p_max), 0);
	for (int m = 1; m <= q_max; ++m) {
		r = (r * pow_i(one_minus_pq(0, m).truncated_q(q_max), 4)).truncated_q(q_max);
		r = r * geom_sq(1, m, q_max);
		r = r * geom_sq(-1, m, q_max);
	}
	return r.truncated_q(q_max);
}

QSeries weierstrass_p(int q_max, int p_max) { return divisor_series(q_max, p_max, Rational(1, 12), -2); }

QSeries vertical_brace(int q_max, int p_max) { return divisor_series(q_max, p_max, Rational(1, 12), 0); }

QSeries nodal_rhs(int q_max, int p_max) { return divisor_series(q_max, p_max, Rational(1), 0); }

QSeries elliptic_genus_z(int q_max, int p_max)
{
	const int p_int = p_max + 2 * q_max + 4;
	QSeries f2 = recip(-f_squared_neg_inv(q_max, p_int));
	return (weierstrass_p(q_max, p_int) * f2).scaled(Rational(-24));
}

Integer c_coeff(const QSeries& z, int k)
{
	bool found = false;
	Rational value(0);
	const int d_top = std::min(z.q_known(), z.max_stored_q());
	for (int d = std::max(0, z.q_offset()); d <= d_top; ++d) {
		const PLaurent layer = z.coeff(d);
		long long nsq = 4LL * d - k;
		if (nsq < 0) continue;
		long long n = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(nsq))));
		while (n * n < nsq) ++n;
		while (n > 0 && n * n > nsq) --n;
		if (n * n != nsq) continue;
		for (long long sign : {1LL, -1LL}) {
			long long nn = sign * n;
			if (nn > layer.high()) continue;
			Rational v = layer.coeff(static_cast<int>(nn));
			if (!found) {
				found = true;
				value = v;
			} else if (v != value) {
				throw std::logic_error("c_coeff: inconsistent readings for one discriminant");
			}
			if (n == 0) break;
		}
	}
	if (!found) {
		if (k < -1) return Integer(0);
		throw std::out_of_range("c_coeff: discriminant outside computed truncation");
	}
	if (!value.is_integer()) throw std::logic_error("c_coeff: non-integer coefficient");
	if (k < -1 && value.sign() != 0)
		throw std::logic_error("c_coeff: nonzero coefficient below discriminant -1");
	return value.numerator();
}

long long sigma1(long long d)
{
	if (d < 1) throw std::invalid_argument("sigma1: d must be positive");
	long long s = 0;
	for (long long k = 1; k * k <= d; ++k) {
		if (d % k != 0) continue;
		s += k;
		if (k != d / k) s += d / k;
	}
	return s;
}

namespace {

TriSeries tri_mul(const TriSeries& a, const TriSeries& b, int h_layers, int q_known)
{
	TriSeries r;
	r.tq_offset = a.tq_offset + b.tq_offset;
	r.layers.assign(static_cast<size_t>(h_layers) + 1, QSeries());
	for (size_t u = 0; u < a.layers.size(); ++u) {
		for (size_t v = 0; v < b.layers.size(); ++v) {
			if (u + v > static_cast<size_t>(h_layers)) continue;
			r.layers[u + v] = r.layers[u + v] + (a.layers[u] * b.layers[v]).truncated_q(q_known);
		}
	}
	return r;
}

}  // namespace

TriSeries chi10_tri(int q_max, int p_max, int h_max)
{
	if (h_max < 1) throw std::invalid_argument("chi10_tri: h_max must be >= 1");

	/* Elliptic-genus truncation wide enough to read every exponent
	 * c(4dh - n^2) that the factor range can request. */
	const QSeries z = elliptic_genus_z(q_max * h_max + 2, 6);

	TriSeries prod;
	prod.tq_offset = 0;
	prod.layers.assign(static_cast<size_t>(h_max) + 1, QSeries());
	prod.layers[0] = QSeries::one();

	for (int d = 0; d <= q_max; ++d) {
		for (int h = 0; h <= h_max; ++h) {
			if (d == 0 && h == 0) continue;
			const long long disc_cap = 4LL * d * h + 1;
			int n_max = static_cast<int>(std::sqrt(static_cast<double>(disc_cap))) + 1;
			while (static_cast<long long>(n_max) * n_max > disc_cap) --n_max;
			for (int n = -n_max; n <= n_max; ++n) {
				long long k = 4LL * d * h - static_cast<long long>(n) * n;
				Integer e = c_coeff(z, static_cast<int>(k));
				if (e == 0) continue;
				long ee = e.get_si();

				TriSeries fac;
				fac.tq_offset = 0;
				if (h == 0) {
					fac.layers.assign(1, pow_i(one_minus_pq(n, d).truncated_q(q_max), ee));
				} else {
					/* (1 - p^n q^d qt^h)^e expanded qt-adically. */
					fac.layers.assign(static_cast<size_t>(h_max) + 1, QSeries());
					for (int j = 0; h * j <= h_max; ++j) {
						Rational cj = binom(ee, j);
						if (j % 2 == 1) cj = -cj;
						fac.layers[static_cast<size_t>(h * j)] =
						    QSeries::monomial(PLaurent::monomial(cj, n * j), d * j);
					}
				}
				prod = tri_mul(prod, fac, h_max, q_max);
			}
		}
	}

	/* Prefactor p q qt (1 - p^{-1})^2 = qt * q * (p - 2 + p^{-1}). */
	TriSeries pre;
	pre.tq_offset = 1;
	pre.layers.assign(1, QSeries::monomial(PLaurent::polynomial({{-1, 1}, {0, -2}, {1, 1}}), 1));

	TriSeries out = tri_mul(pre, prod, h_max, q_max + 1);
	for (auto& layer : out.layers) {
		std::vector<PLaurent> t;
		for (int q = layer.q_offset(); q <= std::min(layer.q_known(), layer.max_stored_q()); ++q)
			t.push_back(layer.coeff(q).truncated(p_max));
		layer = QSeries::with_terms(std::move(t), layer.q_offset(), layer.q_known());
	}
	return out;
}

QSeries dt_prediction(int h, int q_max, int p_max)
{
	if (h < 0 || h > 1) throw std::invalid_argument("dt_prediction: h must be 0 or 1");
	const int p_int = p_max + 2 * (q_max + 2) + 8;
	TriSeries tri = chi10_tri(q_max + 1, p_int, std::max(1, h));

	const QSeries& w0 = tri.layers[0];
	QSeries b = recip(w0, p_int);
	if (h == 0) return -b;

	/* -1/chi10 = -qt^{-1} W0^{-1} (1 + sum_j (W_j/W0) qt^j)^{-1};
	 * the qt^0 coefficient is W1 W0^{-2}. */
	return tri.layers[1] * b * b;
}

}  // namespace igusa
