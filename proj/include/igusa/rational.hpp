#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace igusa {

using Integer = mpz_class;

/* Exact rational number. Always stored in lowest terms with a positive
 * denominator; every operation is exact. */
class Rational {
public:
	Rational() : v_(0) {}
	Rational(int n) : v_(n) {}
	Rational(long n) : v_(n) {}
	Rational(long long n) : v_(static_cast<long>(n)) {}
	Rational(long num, long den) : v_(num, den)
	{
		if (den == 0) throw std::invalid_argument("Rational: zero denominator");
		v_.canonicalize();
	}
	explicit Rational(const Integer& n) : v_(n) {}
	Rational(const Integer& num, const Integer& den) : v_(num, den)
	{
		if (den == 0) throw std::invalid_argument("Rational: zero denominator");
		v_.canonicalize();
	}

	/* Accepts "n" or "n/d" with optional leading minus sign. */
	static Rational parse(const std::string& s)
	{
		auto slash = s.find('/');
		if (slash == std::string::npos)
			return Rational(Integer(s));
		return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
	}

	Integer numerator() const { return v_.get_num(); }
	Integer denominator() const { return v_.get_den(); }

	bool is_zero() const { return sgn(v_) == 0; }
	bool is_integer() const { return v_.get_den() == 1; }
	int sign() const { return sgn(v_); }

	std::string str() const
	{
		if (is_integer()) return v_.get_num().get_str();
		return v_.get_str();
	}

	friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
	friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
	friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
	friend Rational operator/(const Rational& a, const Rational& b)
	{
		if (b.is_zero()) throw std::domain_error("Rational: division by zero");
		return Rational(mpq_class(a.v_ / b.v_));
	}
	Rational operator-() const { return Rational(mpq_class(-v_)); }

	Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
	Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
	Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

	friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
	friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
	friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

private:
	explicit Rational(mpq_class v) : v_(std::move(v)) {}

	mpq_class v_;
};

}  // namespace igusa
