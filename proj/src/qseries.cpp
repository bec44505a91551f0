#include "igusa/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace igusa {

/* Trailing coefficients that are exact zeros (fully known, empty)
 * carry no information and are dropped; leading ones are kept so that
 * constructed offsets survive. Partially known zeros must stay either
 * way: removing one would silently widen its p-window to "everywhere".
 * A series with no stored coefficients is zero throughout its known
 * range, so the offset moves just past it (the exact zero series has
 * offset kDegInf). */
void QSeries::normalize()
{
	while (!t_.empty()) {
		const PLaurent& last = t_.back();
		if (last.is_zero() && last.high() == kDegInf)
			t_.pop_back();
		else
			break;
	}
	if (t_.empty()) off_ = sat_deg_add(known_, 1);
}

QSeries QSeries::monomial(PLaurent pl, int q_deg)
{
	QSeries r;
	r.off_ = q_deg;
	r.known_ = kDegInf;
	r.t_.push_back(std::move(pl));
	r.normalize();
	return r;
}

QSeries QSeries::with_terms(std::vector<PLaurent> terms, int q_offset, int q_known)
{
	QSeries r;
	r.off_ = q_offset;
	r.known_ = q_known;
	r.t_ = std::move(terms);
	if (q_known != kDegInf &&
	    static_cast<long long>(r.t_.size()) > static_cast<long long>(q_known) - q_offset + 1)
		throw std::invalid_argument("QSeries: terms extend beyond q_known");
	r.normalize();
	return r;
}

PLaurent QSeries::coeff(int q_deg) const
{
	if (q_deg > known_)
		throw std::out_of_range("QSeries: coefficient above q_known");
	if (q_deg < off_) return PLaurent();
	size_t idx = static_cast<size_t>(q_deg - off_);
	if (idx >= t_.size()) return PLaurent();
	return t_[idx];
}

QSeries QSeries::scaled(const Rational& r) const
{
	if (r.is_zero()) return QSeries();
	QSeries out;
	out.off_ = off_;
	out.known_ = known_;
	out.t_.reserve(t_.size());
	for (const auto& pl : t_) out.t_.push_back(pl.scaled(r));
	out.normalize();
	return out;
}

QSeries QSeries::scaled_pl(const PLaurent& f) const
{
	QSeries out;
	out.off_ = off_;
	out.known_ = known_;
	out.t_.reserve(t_.size());
	for (const auto& pl : t_) out.t_.push_back(pl * f);
	out.normalize();
	return out;
}

QSeries QSeries::shifted_q(int dq) const
{
	QSeries out = *this;
	out.off_ = sat_deg_add(out.off_, dq);
	out.known_ = sat_deg_add(out.known_, dq);
	return out;
}

QSeries QSeries::truncated_q(int new_known) const
{
	if (new_known >= known_) return *this;
	QSeries out;
	out.off_ = off_;
	out.known_ = new_known;
	long long keep = static_cast<long long>(new_known) - off_ + 1;
	if (keep < 0) keep = 0;
	out.t_.assign(t_.begin(), t_.begin() + std::min<long long>(keep, static_cast<long long>(t_.size())));
	out.normalize();
	return out;
}

QSeries operator+(const QSeries& a, const QSeries& b)
{
	QSeries r;
	r.off_ = std::min(a.off_, b.off_);
	r.known_ = std::min(a.known_, b.known_);
	long long top = std::min<long long>(r.known_, std::max(a.max_stored_q(), b.max_stored_q()));
	if (top >= r.off_) {
		r.t_.reserve(static_cast<size_t>(top - r.off_ + 1));
		for (int d = r.off_; d <= top; ++d)
			r.t_.push_back(a.coeff(d) + b.coeff(d));
	}
	r.normalize();
	return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

/* Cauchy product in q; the coefficientwise p-windows come out of the
 * pairwise products and intersect under accumulation, which is the
 * conservative min over contributing pairs. */
QSeries operator*(const QSeries& a, const QSeries& b)
{
	QSeries r;
	r.off_ = sat_deg_add(a.off_, b.off_);
	r.known_ = std::min(sat_deg_add(a.known_, b.off_), sat_deg_add(b.known_, a.off_));
	if (a.t_.empty() || b.t_.empty()) return r;

	long long top_stored = static_cast<long long>(a.max_stored_q()) + b.max_stored_q();
	long long top = std::min<long long>(r.known_, top_stored);
	if (top < r.off_) return r;

	r.t_.assign(static_cast<size_t>(top - r.off_ + 1), PLaurent());
	for (size_t i = 0; i < a.t_.size(); ++i) {
		if (a.t_[i].is_zero() && a.t_[i].high() == kDegInf) continue;
		for (size_t j = 0; j < b.t_.size(); ++j) {
			long long d = static_cast<long long>(a.off_) + static_cast<long long>(i) +
			              b.off_ + static_cast<long long>(j);
			if (d > top) break;
			size_t idx = static_cast<size_t>(d - r.off_);
			r.t_[idx] = r.t_[idx] + a.t_[i] * b.t_[j];
		}
	}
	r.normalize();
	return r;
}

QSeries recip(const QSeries& a, int p_cap)
{
	if (a.is_stored_empty())
		throw std::domain_error("recip: leading q-coefficient is zero");
	if (a.q_known() == kDegInf)
		throw std::invalid_argument("recip: q-knowledge must be finite; truncate first");
	const int L = a.q_offset();
	const int span = a.q_known() - L;

	std::vector<PLaurent> b(static_cast<size_t>(span) + 1);
	b[0] = recip(a.coeff(L), p_cap);
	for (int n = 1; n <= span; ++n) {
		PLaurent acc;
		for (int k = 1; k <= n; ++k) {
			const PLaurent u = a.coeff(L + k);
			acc = acc + u * b[static_cast<size_t>(n - k)];
		}
		b[static_cast<size_t>(n)] = -(b[0] * acc);
	}
	return QSeries::with_terms(std::move(b), -L, -L + span);
}

QSeries pow_i(const QSeries& a, long k, int p_cap)
{
	if (k == 0) return QSeries::one();
	QSeries base = (k < 0) ? recip(a, p_cap) : a;
	unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
	QSeries acc = QSeries::one();
	while (e > 0) {
		if (e & 1UL) acc = acc * base;
		e >>= 1UL;
		if (e > 0) base = base * base;
	}
	return acc;
}

SeriesCompare compare(const QSeries& a, const QSeries& b)
{
	SeriesCompare out;
	out.q_lo = std::min(a.q_offset(), b.q_offset());
	long long hi = std::min(a.q_known(), b.q_known());
	if (hi == kDegInf) hi = std::max({a.max_stored_q(), b.max_stored_q(), static_cast<int>(out.q_lo)});
	out.q_hi = static_cast<int>(hi);

	for (int q = out.q_lo; q <= out.q_hi; ++q) {
		const PLaurent pa = a.coeff(q);
		const PLaurent pb = b.coeff(q);
		out.p_high_min = std::min(out.p_high_min, std::min(pa.high(), pb.high()));
		out.p_low_min = std::min(out.p_low_min, std::min(pa.low(), pb.low()));
		if (auto diff = first_difference(pa, pb); diff && out.equal) {
			out.equal = false;
			out.first_mismatch = Mismatch{q, diff->first, diff->second.first, diff->second.second};
		}
	}
	return out;
}

bool QSeries::all_integer() const
{
	for (const auto& pl : t_)
		if (!pl.all_integer()) return false;
	return true;
}

std::string QSeries::str() const
{
	std::ostringstream os;
	for (size_t i = 0; i < t_.size(); ++i) {
		os << "q^" << (off_ + static_cast<int>(i)) << ": " << t_[i].str();
		if (i + 1 < t_.size()) os << "\n";
	}
	return os.str();
}

}  // namespace igusa
