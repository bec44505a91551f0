#pragma once

#include "igusa/qseries.hpp"

#include <vector>

namespace igusa {

/* Truncation of prod_{m=1..q_max} (1 - q^m)^k; valid through q^q_max. */
QSeries eta_pow(long k, int q_max);

/* Discriminant: q * prod (1 - q^m)^24. */
QSeries delta_series(int q_max);

/* p/(1-p)^2 = p + 2p^2 + 3p^3 + ..., window [1, p_max]. */
PLaurent p_over_one_minus_p_sq(int p_max);

/* -F^{-2} = p/(1-p)^2 prod (1-q^m)^4 (1-pq^m)^{-2} (1-p^{-1}q^m)^{-2},
 * with F the odd Jacobi theta function. */
QSeries f_squared_neg_inv(int q_max, int p_max);

/* Weierstrass wp = 1/12 + p/(1-p)^2 + sum_d sum_{k|d} k(p^k+p^{-k}-2) q^d. */
QSeries weierstrass_p(int q_max, int p_max);

/* 1/12 + p/(1-p)^2 + sum_d sum_{k|d} k(p^k+p^{-k}) q^d. */
QSeries vertical_brace(int q_max, int p_max);

/* 1 + p/(1-p)^2 + sum_d sum_{k|d} k(p^k+p^{-k}) q^d: the closed form of
 * the nodal vertex sum prod(1-q^m) * n_series. */
QSeries nodal_rhs(int q_max, int p_max);

/* K3 elliptic genus Z = -24 wp F^2; integer coefficients, q^0 layer
 * 2p^{-1} + 20 + 2p. */
QSeries elliptic_genus_z(int q_max, int p_max);

/* Coefficient c(k) of Z = sum c(4d - n^2) p^n q^d, read off a computed
 * truncation of Z. All in-window readings with the same discriminant
 * are cross-checked. Returns 0 for k < -1; throws if k >= -1 cannot be
 * read within the truncation. */
Integer c_coeff(const QSeries& z, int k);

long long sigma1(long long d);

/* q-tilde-graded stack of q-series. layers[t] is the coefficient of
 * qt^(t + tq_offset). */
struct TriSeries {
	int tq_offset = 0;
	std::vector<QSeries> layers;
};

/* Igusa cusp form chi10(p, q, qt) as a Borcherds-type product:
 * p q qt (1-p^{-1})^2 prod_{n, (d,h)>(0,0)} (1 - p^n q^d qt^h)^{c(4dh-n^2)}.
 * Layers cover qt^1 .. qt^(h_max+1), each known through q-degree
 * q_max + 1 with p-windows clamped at p_max. */
TriSeries chi10_tri(int q_max, int p_max, int h_max);

/* Coefficient of qt^(h-1) in -1/chi10; q_offset -1, known through
 * q-degree q_max. */
QSeries dt_prediction(int h, int q_max, int p_max);

}  // namespace igusa
