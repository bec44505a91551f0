#include "igusa/plaurent.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace igusa {

/* Drops zero coefficients, then tightens the window: with stored
 * coefficients, low can be raised to the smallest stored degree (all
 * in-window degrees below it are exact zeros); with none, everything
 * up to high is zero, so low moves just past it. */
void PLaurent::normalize()
{
	for (auto it = c_.begin(); it != c_.end();) {
		if (it->second.is_zero())
			it = c_.erase(it);
		else
			++it;
	}
	if (c_.empty())
		low_ = sat_deg_add(high_, 1);
	else
		low_ = std::max(low_, c_.begin()->first);
}

PLaurent PLaurent::monomial(const Rational& c, int deg)
{
	PLaurent r;
	r.high_ = kDegInf;
	r.low_ = deg;
	if (!c.is_zero()) r.c_[deg] = c;
	r.normalize();
	return r;
}

PLaurent PLaurent::polynomial(std::map<int, Rational> coeffs)
{
	PLaurent r;
	r.c_ = std::move(coeffs);
	r.high_ = kDegInf;
	r.low_ = r.c_.empty() ? kDegInf : r.c_.begin()->first;
	r.normalize();
	return r;
}

PLaurent PLaurent::with_window(std::map<int, Rational> coeffs, int low, int high)
{
	if (low > high && !coeffs.empty())
		throw std::invalid_argument("PLaurent: empty window with coefficients");
	for (const auto& [deg, val] : coeffs) {
		(void)val;
		if (deg < low || deg > high)
			throw std::invalid_argument("PLaurent: coefficient outside window");
	}
	PLaurent r;
	r.c_ = std::move(coeffs);
	r.low_ = low;
	r.high_ = high;
	r.normalize();
	return r;
}

Rational PLaurent::coeff(int deg) const
{
	if (deg > high_)
		throw std::out_of_range("PLaurent: coefficient above validity window");
	auto it = c_.find(deg);
	return it == c_.end() ? Rational(0) : it->second;
}

bool PLaurent::all_integer() const
{
	for (const auto& [deg, val] : c_) {
		(void)deg;
		if (!val.is_integer()) return false;
	}
	return true;
}

PLaurent PLaurent::shifted(int dp) const
{
	PLaurent r;
	for (const auto& [deg, val] : c_) r.c_[sat_deg_add(deg, dp)] = val;
	r.low_ = sat_deg_add(low_, dp);
	r.high_ = sat_deg_add(high_, dp);
	r.normalize();
	return r;
}

PLaurent PLaurent::scaled(const Rational& r) const
{
	if (r.is_zero()) return PLaurent();
	PLaurent out;
	for (const auto& [deg, val] : c_) out.c_[deg] = val * r;
	out.low_ = low_;
	out.high_ = high_;
	out.normalize();
	return out;
}

PLaurent PLaurent::truncated(int new_high) const
{
	if (new_high >= high_) return *this;
	PLaurent out;
	out.low_ = low_;
	out.high_ = new_high;
	for (const auto& [deg, val] : c_)
		if (deg <= new_high) out.c_[deg] = val;
	out.normalize();
	return out;
}

PLaurent operator+(const PLaurent& a, const PLaurent& b)
{
	PLaurent r;
	r.low_ = std::min(a.low_, b.low_);
	r.high_ = std::min(a.high_, b.high_);
	for (const auto& [deg, val] : a.c_)
		if (deg <= r.high_) r.c_[deg] = val;
	for (const auto& [deg, val] : b.c_) {
		if (deg > r.high_) continue;
		auto [it, fresh] = r.c_.emplace(deg, val);
		if (!fresh) it->second += val;
	}
	r.normalize();
	return r;
}

PLaurent operator-(const PLaurent& a, const PLaurent& b) { return a + (-b); }

/* Convolution. The result is complete at degree d only when every
 * contributing pair is known on both sides, which bounds the window by
 * min(a.low + b.high, b.low + a.high). */
PLaurent operator*(const PLaurent& a, const PLaurent& b)
{
	PLaurent r;
	r.low_ = sat_deg_add(a.low_, b.low_);
	r.high_ = std::min(sat_deg_add(a.low_, b.high_), sat_deg_add(b.low_, a.high_));
	for (const auto& [da, va] : a.c_) {
		for (const auto& [db, vb] : b.c_) {
			int d = sat_deg_add(da, db);
			if (d > r.high_) continue;
			auto [it, fresh] = r.c_.emplace(d, va * vb);
			if (!fresh) it->second += va * vb;
		}
	}
	r.normalize();
	return r;
}

PLaurent recip(const PLaurent& a, int p_cap)
{
	if (a.is_zero())
		throw std::domain_error("recip: series is zero within its validity window");
	const int L = a.low();
	const int H = a.high();
	/* An exact monomial inverts exactly. */
	if (H == kDegInf && a.coeffs().size() == 1)
		return PLaurent::monomial(Rational(1) / a.coeff(L), -L);
	int out_high;
	if (H == kDegInf) {
		if (p_cap == -kDegInf)
			throw std::invalid_argument("recip: exact polynomial input needs a p_cap");
		out_high = p_cap;
	} else {
		out_high = sat_deg(static_cast<long long>(H) - 2LL * L);
		if (p_cap != -kDegInf) out_high = std::min(out_high, p_cap);
	}
	if (out_high < -L)
		throw std::invalid_argument("recip: requested window is empty");

	const Rational lead = a.coeff(L);
	if (lead.is_zero())
		throw std::domain_error("recip: leading coefficient vanishes");

	/* b = p^{-L} / (u_0 + u_1 p + ...) with u_s = a_{L+s}; the usual
	 * b_t = -(sum_{s>=1} u_s b_{t-s}) / u_0 recurrence. */
	const int n_terms = out_high + L + 1;
	std::vector<Rational> b(static_cast<size_t>(n_terms));
	b[0] = Rational(1) / lead;
	const int u_span = (H == kDegInf) ? n_terms : H - L;
	for (int t = 1; t < n_terms; ++t) {
		Rational acc(0);
		for (int s = 1; s <= std::min(t, u_span); ++s) {
			Rational u = (sat_deg_add(L, s) > H) ? Rational(0) : a.coeff(L + s);
			if (!u.is_zero()) acc += u * b[static_cast<size_t>(t - s)];
		}
		b[static_cast<size_t>(t)] = -acc / lead;
	}

	std::map<int, Rational> out;
	for (int t = 0; t < n_terms; ++t)
		if (!b[static_cast<size_t>(t)].is_zero()) out[-L + t] = b[static_cast<size_t>(t)];
	return PLaurent::with_window(std::move(out), -L, out_high);
}

PLaurent pow_i(const PLaurent& a, long k, int p_cap)
{
	if (k == 0) return PLaurent::one();
	PLaurent base = (k < 0) ? recip(a, p_cap) : a;
	unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
	PLaurent acc = PLaurent::one();
	while (e > 0) {
		if (e & 1UL) acc = acc * base;
		e >>= 1UL;
		if (e > 0) base = base * base;
	}
	return acc;
}

std::optional<std::pair<int, std::pair<Rational, Rational>>>
first_difference(const PLaurent& a, const PLaurent& b)
{
	const int bound = std::min(a.high(), b.high());
	auto ia = a.coeffs().begin();
	auto ib = b.coeffs().begin();
	while (ia != a.coeffs().end() || ib != b.coeffs().end()) {
		int da = (ia != a.coeffs().end()) ? ia->first : kDegInf;
		int db = (ib != b.coeffs().end()) ? ib->first : kDegInf;
		int d = std::min(da, db);
		if (d > bound) break;
		Rational va = (da == d) ? ia->second : Rational(0);
		Rational vb = (db == d) ? ib->second : Rational(0);
		if (va != vb) return std::make_pair(d, std::make_pair(va, vb));
		if (da == d) ++ia;
		if (db == d) ++ib;
	}
	return std::nullopt;
}

std::string PLaurent::str(const std::string& var) const
{
	if (c_.empty()) return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto& [deg, val] : c_) {
		if (!first) os << " + ";
		first = false;
		os << val.str();
		if (deg != 0) os << "*" << var << "^" << deg;
	}
	return os.str();
}

}  // namespace igusa
