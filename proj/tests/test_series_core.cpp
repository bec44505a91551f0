#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "igusa/qseries.hpp"

#include "oracles.hpp"

#include <random>

using namespace igusa;

namespace {

PLaurent pl_from(const std::map<int, Rational>& m, int lo, int hi)
{
	return PLaurent::with_window(std::map<int, Rational>(m), lo, hi);
}

}  // namespace

TEST_CASE("rational canonical form and arithmetic")
{
	Rational r(6, -4);
	CHECK(r.numerator() == -3);
	CHECK(r.denominator() == 2);
	CHECK(r.str() == "-3/2");
	CHECK(Rational(4, 2).str() == "2");
	CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
	CHECK((Rational(1, 3) * Rational(3, 7)) == Rational(1, 7));
	CHECK((Rational(1, 2) - Rational(1, 2)).is_zero());
	CHECK(Rational::parse("-3/2") == Rational(-3, 2));
	CHECK(Rational::parse("17") == Rational(17));
	CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("plaurent polynomial square")
{
	/* (p^-1 - 1)^2 = p^-2 - 2 p^-1 + 1 */
	PLaurent a = PLaurent::polynomial({{-1, 1}, {0, -1}});
	PLaurent sq = a * a;
	CHECK(sq.coeff(-2) == Rational(1));
	CHECK(sq.coeff(-1) == Rational(-2));
	CHECK(sq.coeff(0) == Rational(1));
	CHECK(sq.low() == -2);
	CHECK(sq.high() == kDegInf);
}

TEST_CASE("plaurent identity and telescoping windows")
{
	PLaurent a = pl_from({{0, 1}, {1, 5}, {3, -2}}, 0, 6);
	PLaurent prod = a * PLaurent::one();
	CHECK(prod.low() == a.low());
	CHECK(prod.high() == a.high());
	CHECK(!first_difference(prod, a));

	std::map<int, Rational> geom;
	for (int k = 0; k <= 5; ++k) geom[k] = Rational(1);
	PLaurent g = pl_from(geom, 0, 5);
	PLaurent one_minus_p = PLaurent::polynomial({{0, 1}, {1, -1}});
	PLaurent t = g * one_minus_p;
	CHECK(t.high() == 5);
	CHECK(t.coeff(0) == Rational(1));
	for (int k = 1; k <= 5; ++k) CHECK(t.coeff(k).is_zero());
}

TEST_CASE("plaurent recip: geometric series and monomial")
{
	PLaurent one_minus_p = PLaurent::polynomial({{0, 1}, {1, -1}}).truncated(5);
	PLaurent r = recip(one_minus_p);
	for (int k = 0; k <= 5; ++k) CHECK(r.coeff(k) == Rational(1));
	CHECK(r.high() == 5);

	PLaurent pinv = PLaurent::monomial(Rational(1), -1);
	PLaurent rp = recip(pinv, 3);
	CHECK(rp.coeff(1) == Rational(1));
	CHECK(rp.low() == 1);
}

TEST_CASE("plaurent recip against long-division oracle")
{
	/* 1/(1-p)^2 = 1 + 2p + 3p^2 + ... */
	PLaurent sq = PLaurent::polynomial({{0, 1}, {1, -2}, {2, 1}}).truncated(8);
	PLaurent r = recip(sq);
	oracles::IntPoly oracle = oracles::poly_recip({1, -2, 1}, 8);
	for (int k = 0; k <= 8; ++k) {
		CHECK(r.coeff(k) == Rational(oracle[static_cast<size_t>(k)]));
		CHECK(r.coeff(k) == Rational(k + 1));
	}
	PLaurent round_trip = sq * r;
	CHECK(round_trip.coeff(0) == Rational(1));
	for (int k = 1; k <= round_trip.high(); ++k) CHECK(round_trip.coeff(k).is_zero());
}

TEST_CASE("plaurent recip rejects zero")
{
	CHECK_THROWS_AS(recip(PLaurent()), std::domain_error);
	PLaurent partial = pl_from({}, 0, 4);
	CHECK_THROWS_AS(recip(partial), std::domain_error);
}

TEST_CASE("qseries recip rejects non-invertible leads")
{
	CHECK_THROWS_AS(recip(QSeries()), std::domain_error);
	/* Leading q-coefficient identically zero within its window. */
	QSeries z = QSeries::with_terms({pl_from({}, 0, 3), pl_from({{0, 1}}, 0, 3)}, 0, 1);
	CHECK_THROWS_AS(recip(z), std::domain_error);
}

TEST_CASE("qseries offset alignment and additive inverse")
{
	QSeries a = QSeries::monomial(PLaurent::one(), -1);
	QSeries b = QSeries::one();
	QSeries sum = a + b;
	CHECK(sum.q_offset() == -1);
	CHECK(sum.coeff(-1).coeff(0) == Rational(1));
	CHECK(sum.coeff(0).coeff(0) == Rational(1));

	QSeries x = QSeries::with_terms({pl_from({{0, 2}, {1, 7}}, 0, 3)}, 1, 1);
	QSeries zero = x + (-x);
	auto cmp = compare(zero, QSeries());
	CHECK(cmp.equal);

	auto id = compare(x * QSeries::one(), x);
	CHECK(id.equal);
}

TEST_CASE("qseries offset cancellation in products")
{
	PLaurent u = pl_from({{0, 1}, {1, 3}}, 0, 4);
	PLaurent v = pl_from({{-1, 2}, {0, 1}}, -1, 4);
	QSeries qu = QSeries::monomial(u, 1);
	QSeries qv = QSeries::monomial(v, -1);
	QSeries prod = qu * qv;
	CHECK(prod.q_offset() == 0);
	CHECK(!first_difference(prod.coeff(0), u * v));
}

TEST_CASE("qseries recip: geometric series and monomial offset")
{
	QSeries one_minus_q =
	    (QSeries::one() + QSeries::monomial(PLaurent::monomial(Rational(-1), 0), 1)).truncated_q(6);
	QSeries r = recip(one_minus_q);
	CHECK(r.q_offset() == 0);
	CHECK(r.q_known() == 6);
	for (int d = 0; d <= 6; ++d) CHECK(r.coeff(d).coeff(0) == Rational(1));

	PLaurent unit = pl_from({{0, 1}, {1, 1}}, 0, 5);
	QSeries qu = QSeries::with_terms({unit}, 1, 1);
	QSeries rr = recip(qu);
	CHECK(rr.q_offset() == -1);
	CHECK(!first_difference(rr.coeff(-1), recip(unit)));
}

TEST_CASE("qseries recip of eta-like product against long division")
{
	/* q * prod_{m<=6} (1-q^m)^24, inverted, against the integer long
	 * division oracle. */
	oracles::IntPoly poly(1, 1);
	for (int m = 1; m <= 6; ++m) {
		oracles::IntPoly f(static_cast<size_t>(m) + 1, 0);
		f[0] = 1;
		f[static_cast<size_t>(m)] = -1;
		poly = oracles::poly_mul(poly, oracles::poly_pow(f, 24, 6), 6);
	}
	std::vector<PLaurent> terms;
	for (int d = 0; d <= 6; ++d) terms.push_back(PLaurent::monomial(Rational(poly[static_cast<size_t>(d)]), 0));
	QSeries delta_like = QSeries::with_terms(std::move(terms), 0, 6).shifted_q(1);

	QSeries inv = recip(delta_like);
	CHECK(inv.q_offset() == -1);
	oracles::IntPoly inv_oracle = oracles::poly_recip(poly, 6);
	for (int d = 0; d <= 6; ++d)
		CHECK(inv.coeff(d - 1).coeff(0) == Rational(inv_oracle[static_cast<size_t>(d)]));
}

TEST_CASE("qseries pow: zero exponent and binomial")
{
	PLaurent lead = pl_from({{0, 1}, {1, 4}}, 0, 3);
	QSeries a = QSeries::with_terms({lead, pl_from({{0, 2}}, 0, 3)}, 0, 1);
	auto cmp = compare(pow_i(a, 0), QSeries::one());
	CHECK(cmp.equal);

	QSeries one_minus_q =
	    (QSeries::one() + QSeries::monomial(PLaurent::monomial(Rational(-1), 0), 1)).truncated_q(4);
	QSeries sq = pow_i(one_minus_q, 2);
	CHECK(sq.coeff(0).coeff(0) == Rational(1));
	CHECK(sq.coeff(1).coeff(0) == Rational(-2));
	CHECK(sq.coeff(2).coeff(0) == Rational(1));
	CHECK(sq.coeff(3).coeff(0).is_zero());
}

TEST_CASE("compare reports the first mismatching monomial")
{
	QSeries a = QSeries::one().truncated_q(3);
	QSeries b = (QSeries::one() + QSeries::monomial(PLaurent::one(), 1)).truncated_q(3);
	auto cmp = compare(a, b);
	CHECK(!cmp.equal);
	REQUIRE(cmp.first_mismatch.has_value());
	CHECK(cmp.first_mismatch->q == 1);
	CHECK(cmp.first_mismatch->p == 0);
	CHECK(cmp.first_mismatch->lhs == Rational(0));
	CHECK(cmp.first_mismatch->rhs == Rational(1));

	auto refl = compare(b, b);
	CHECK(refl.equal);
}

namespace {

struct Rng {
	std::mt19937 gen;
	explicit Rng(unsigned seed) : gen(seed) {}
	int uniform(int lo, int hi)
	{
		return std::uniform_int_distribution<int>(lo, hi)(gen);
	}
	Rational rational()
	{
		int num = uniform(-9, 9);
		int den = uniform(1, 9);
		return Rational(num, den);
	}
	PLaurent plaurent(bool invertible_lead = false)
	{
		int lo = uniform(-3, 1);
		int hi = lo + uniform(2, 5);
		std::map<int, Rational> c;
		for (int d = lo; d <= hi; ++d)
			if (uniform(0, 2) != 0) c[d] = rational();
		if (invertible_lead) c[lo] = Rational(uniform(1, 5));
		return PLaurent::with_window(std::move(c), lo, hi);
	}
	QSeries qseries(bool invertible_lead = false)
	{
		int off = uniform(-2, 2);
		int len = uniform(1, 4);
		std::vector<PLaurent> terms;
		for (int t = 0; t < len; ++t) terms.push_back(plaurent(invertible_lead && t == 0));
		return QSeries::with_terms(std::move(terms), off, off + len - 1);
	}
};

}  // namespace

TEST_CASE("ring axioms on randomized truncated series")
{
	Rng rng(20260808);
	for (int trial = 0; trial < 200; ++trial) {
		QSeries a = rng.qseries();
		QSeries b = rng.qseries();
		QSeries c = rng.qseries();
		CHECK(compare((a * b) * c, a * (b * c)).equal);
		CHECK(compare(a * b, b * a).equal);
		CHECK(compare(a * (b + c), a * b + a * c).equal);
	}
}

TEST_CASE("pl_recip round-trips on random invertible series")
{
	Rng rng(7);
	for (int trial = 0; trial < 100; ++trial) {
		PLaurent a = rng.plaurent(true);
		PLaurent r = recip(a);
		PLaurent prod = a * r;
		CHECK(prod.coeff(0) == Rational(1));
		for (int d = prod.low(); d <= prod.high(); ++d)
			if (d != 0) CHECK(prod.coeff(d).is_zero());
	}
}

TEST_CASE("qs_pow addition law for exponents")
{
	Rng rng(99);
	for (int trial = 0; trial < 40; ++trial) {
		QSeries a = rng.qseries(true);
		int m = rng.uniform(-2, 3);
		int n = rng.uniform(-2, 3);
		QSeries lhs = pow_i(a, m + n);
		QSeries rhs = pow_i(a, m) * pow_i(a, n);
		CHECK(compare(lhs, rhs).equal);
	}
}

TEST_CASE("window soundness: higher truncation preserves reported windows")
{
	Rng rng(4242);
	for (int trial = 0; trial < 50; ++trial) {
		/* Same exact mother data, two truncation depths. */
		QSeries wide_a = rng.qseries(true);
		QSeries wide_b = rng.qseries();
		QSeries narrow_a = wide_a.truncated_q(wide_a.q_offset() + 1);
		QSeries prod_wide = wide_a * wide_b;
		QSeries prod_narrow = narrow_a * wide_b;
		CHECK(compare(prod_wide, prod_narrow).equal);

		PLaurent pa = rng.plaurent(true);
		PLaurent pb = rng.plaurent();
		PLaurent narrow = pa.truncated(pa.low() + 2);
		CHECK(!first_difference(pa * pb, narrow * pb));
		CHECK(!first_difference(recip(pa), recip(narrow)));
	}
}
