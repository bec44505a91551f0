#pragma once

#include "igusa/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace igusa {

/* Degree sentinel: a window bound of kDegInf means "known at every degree".
 * Degree arithmetic saturates at this value. */
inline constexpr int kDegInf = 1 << 28;

inline int sat_deg(long long v)
{
	if (v >= kDegInf) return kDegInf;
	if (v <= -kDegInf) return -kDegInf;
	return static_cast<int>(v);
}
inline int sat_deg_add(int a, int b)
{
	if (a == kDegInf || b == kDegInf) return kDegInf;
	if (a == -kDegInf || b == -kDegInf) return -kDegInf;
	return sat_deg(static_cast<long long>(a) + b);
}

/* Truncated Laurent series in one variable with an explicit validity
 * window. Degrees below low() are exactly zero, degrees in
 * [low(), high()] are exact, degrees above high() are unknown.
 * high() == kDegInf means the value is a fully known Laurent
 * polynomial. Stored coefficients are never zero and, when any exist,
 * low() is the smallest stored degree. */
class PLaurent {
public:
	/* The zero series, exact at every degree. */
	PLaurent() = default;

	static PLaurent monomial(const Rational& c, int deg);
	/* Exact Laurent polynomial from a degree -> coefficient table. */
	static PLaurent polynomial(std::map<int, Rational> coeffs);
	/* Series known only on [low, high]; all keys must lie in the window. */
	static PLaurent with_window(std::map<int, Rational> coeffs, int low, int high);
	static PLaurent one() { return monomial(1, 0); }

	int low() const { return low_; }
	int high() const { return high_; }
	bool is_zero() const { return c_.empty(); }
	bool known(int deg) const { return deg <= high_; }

	/* Exact coefficient; the degree must be within the validity window. */
	Rational coeff(int deg) const;

	const std::map<int, Rational>& coeffs() const { return c_; }
	int max_stored_degree() const { return c_.empty() ? -kDegInf : c_.rbegin()->first; }

	bool all_integer() const;

	PLaurent shifted(int dp) const;
	PLaurent scaled(const Rational& r) const;
	/* Clamp the validity window from above. */
	PLaurent truncated(int new_high) const;

	friend PLaurent operator+(const PLaurent& a, const PLaurent& b);
	friend PLaurent operator-(const PLaurent& a, const PLaurent& b);
	friend PLaurent operator*(const PLaurent& a, const PLaurent& b);
	PLaurent operator-() const { return scaled(Rational(-1)); }

	std::string str(const std::string& var = "p") const;

private:
	void normalize();

	std::map<int, Rational> c_;
	int low_ = kDegInf;
	int high_ = kDegInf;
};

/* Multiplicative inverse within the derived window. The input must be
 * nonzero within its window. A fully known polynomial inverts to an
 * infinite series, so p_cap must be supplied to bound the expansion;
 * for windowed input p_cap only ever shrinks the derived window. */
PLaurent recip(const PLaurent& a, int p_cap = -kDegInf);

PLaurent pow_i(const PLaurent& a, long k, int p_cap = -kDegInf);

/* First differing degree within the common validity bound, if any. */
std::optional<std::pair<int, std::pair<Rational, Rational>>>
first_difference(const PLaurent& a, const PLaurent& b);

}  // namespace igusa
