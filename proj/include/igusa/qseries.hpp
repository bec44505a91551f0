#pragma once

#include "igusa/plaurent.hpp"

#include <optional>
#include <vector>

namespace igusa {

/* One mismatching monomial of a series comparison. */
struct Mismatch {
	int q = 0;
	int p = 0;
	Rational lhs;
	Rational rhs;
};

/* Outcome of comparing two series on the intersection of their
 * validity windows. p_high_min is the weakest per-degree p bound over
 * the verified q-range; below each degree's window low both sides are
 * exact zeros, so verification effectively extends downward without
 * bound. */
struct SeriesCompare {
	bool equal = true;
	int q_lo = 0;
	int q_hi = 0;
	int p_low_min = kDegInf;
	int p_high_min = kDegInf;
	std::optional<Mismatch> first_mismatch;
};

/* Power series in q whose coefficients are truncated Laurent series in
 * p, with a global q-offset. External q-degrees below q_offset() are
 * exactly zero, degrees up to q_known() are represented (unstored ones
 * are exact zeros), and degrees above q_known() are unknown.
 * q_known() == kDegInf means the series is an exact q-polynomial. */
class QSeries {
public:
	/* The zero series, exact everywhere. */
	QSeries() = default;

	// NOTE: the exact zero carries q_offset kDegInf, the q-analogue of
	// the empty PLaurent window.

	static QSeries one() { return monomial(PLaurent::one(), 0); }
	static QSeries monomial(PLaurent pl, int q_deg);
	static QSeries with_terms(std::vector<PLaurent> terms, int q_offset, int q_known);

	int q_offset() const { return off_; }
	int q_known() const { return known_; }
	bool is_stored_empty() const { return t_.empty(); }
	/* External degree of the last stored coefficient. */
	int max_stored_q() const { return t_.empty() ? -kDegInf : off_ + static_cast<int>(t_.size()) - 1; }

	/* Coefficient at an external q-degree; must not exceed q_known(). */
	PLaurent coeff(int q_deg) const;

	QSeries scaled(const Rational& r) const;
	QSeries scaled_pl(const PLaurent& f) const;
	QSeries shifted_q(int dq) const;
	/* Clamp q-knowledge from above (used when a finite product stands
	 * in for an infinite one). */
	QSeries truncated_q(int new_known) const;

	friend QSeries operator+(const QSeries& a, const QSeries& b);
	friend QSeries operator-(const QSeries& a, const QSeries& b);
	friend QSeries operator*(const QSeries& a, const QSeries& b);
	QSeries operator-() const { return scaled(Rational(-1)); }

	bool all_integer() const;

	std::string str() const;

private:
	void normalize();

	int off_ = kDegInf;
	int known_ = kDegInf;
	std::vector<PLaurent> t_;
};

/* Multiplicative inverse. The leading coefficient (at q_offset) must be
 * invertible as a Laurent series; q-knowledge must be finite. p_cap is
 * forwarded to the leading recip for exact-polynomial leads. */
QSeries recip(const QSeries& a, int p_cap = -kDegInf);

QSeries pow_i(const QSeries& a, long k, int p_cap = -kDegInf);

SeriesCompare compare(const QSeries& a, const QSeries& b);

}  // namespace igusa
