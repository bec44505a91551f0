#pragma once

/* Test-only reference computations, kept independent of the series
 * machinery they are used to check. */

#include "igusa/rational.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracles {

/* Dense integer polynomials in one variable, index = degree. */
using IntPoly = std::vector<long long>;

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b, int deg_cap)
{
	IntPoly r(static_cast<size_t>(deg_cap) + 1, 0);
	for (size_t i = 0; i < a.size(); ++i) {
		if (a[i] == 0) continue;
		for (size_t j = 0; j < b.size() && i + j <= static_cast<size_t>(deg_cap); ++j)
			r[i + j] += a[i] * b[j];
	}
	return r;
}

/* Long division: coefficients of 1/b, b[0] == +-1. */
inline IntPoly poly_recip(const IntPoly& b, int deg_cap)
{
	if (b.empty() || (b[0] != 1 && b[0] != -1))
		throw std::invalid_argument("poly_recip oracle: leading term must be a unit");
	IntPoly r(static_cast<size_t>(deg_cap) + 1, 0);
	r[0] = b[0];
	for (int n = 1; n <= deg_cap; ++n) {
		long long acc = 0;
		for (int k = 1; k <= n && k < static_cast<int>(b.size()); ++k)
			acc += b[static_cast<size_t>(k)] * r[static_cast<size_t>(n - k)];
		r[static_cast<size_t>(n)] = -acc * b[0];
	}
	return r;
}

inline IntPoly poly_pow(IntPoly base, long long e, int deg_cap)
{
	IntPoly acc(1, 1);
	if (e < 0) {
		base = poly_recip(base, deg_cap);
		e = -e;
	}
	while (e > 0) {
		if (e & 1) acc = poly_mul(acc, base, deg_cap);
		e >>= 1;
		if (e > 0) base = poly_mul(base, base, deg_cap);
	}
	return acc;
}

/* MacMahon function prod_{m>=1} (1 - x^m)^{-m} to degree deg_cap. */
inline IntPoly macmahon(int deg_cap)
{
	IntPoly r(1, 1);
	for (int m = 1; m <= deg_cap; ++m) {
		IntPoly f(static_cast<size_t>(deg_cap) + 1, 0);
		f[0] = 1;
		f[static_cast<size_t>(m)] = -1;
		r = poly_mul(r, poly_pow(f, -m, deg_cap), deg_cap);
	}
	return r;
}

/* Partition numbers via the pentagonal-number recurrence. */
inline std::vector<long long> partition_numbers(int n_max)
{
	std::vector<long long> p(static_cast<size_t>(n_max) + 1, 0);
	p[0] = 1;
	for (int n = 1; n <= n_max; ++n) {
		long long acc = 0;
		for (int k = 1;; ++k) {
			long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
			long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
			if (g1 > n && g2 > n) break;
			long long sign = (k % 2 == 1) ? 1 : -1;
			if (g1 <= n) acc += sign * p[static_cast<size_t>(n - g1)];
			if (g2 <= n) acc += sign * p[static_cast<size_t>(n - g2)];
		}
		p[static_cast<size_t>(n)] = acc;
	}
	return p;
}

/* Breadth-first enumeration of downward-closed box extensions over the
 * leg cylinders, deduplicated by the full configuration. Counts per
 * added-box number, independent of any canonical insertion order.
 * extent_hint must cover the leg cross-sections (initial candidates
 * are scanned inside [0, extent_hint + 2)^3). */
template <typename CylinderFn>
std::vector<long long> bfs_extension_counts(CylinderFn in_cyl, int K, int extent_hint)
{
	using Config = std::set<uint64_t>;
	auto key = [](int i, int j, int k) {
		return (static_cast<uint64_t>(i) << 40) | (static_cast<uint64_t>(j) << 20) |
		       static_cast<uint64_t>(k);
	};
	auto coords = [](uint64_t b, int& i, int& j, int& k) {
		i = static_cast<int>(b >> 40);
		j = static_cast<int>((b >> 20) & 0xfffff);
		k = static_cast<int>(b & 0xfffff);
	};
	auto present = [&](const Config& c, int i, int j, int k) {
		return in_cyl(i, j, k) || c.count(key(i, j, k)) != 0;
	};
	auto addable = [&](const Config& c, int i, int j, int k) {
		if (present(c, i, j, k)) return false;
		if (i > 0 && !present(c, i - 1, j, k)) return false;
		if (j > 0 && !present(c, i, j - 1, k)) return false;
		if (k > 0 && !present(c, i, j, k - 1)) return false;
		return true;
	};

	std::vector<uint64_t> initial;
	const int bound = extent_hint + 2;
	for (int i = 0; i < bound; ++i)
		for (int j = 0; j < bound; ++j)
			for (int k = 0; k < bound; ++k)
				if (addable(Config{}, i, j, k)) initial.push_back(key(i, j, k));

	/* Any box addable to a config is an initially addable box or the
	 * successor of an already added one. */
	std::vector<long long> counts(static_cast<size_t>(K) + 1, 0);
	std::set<Config> level;
	level.insert(Config{});
	counts[0] = 1;
	for (int n = 1; n <= K; ++n) {
		std::set<Config> next;
		for (const Config& c : level) {
			std::set<uint64_t> cand(initial.begin(), initial.end());
			for (uint64_t b : c) {
				int i, j, k;
				coords(b, i, j, k);
				cand.insert(key(i + 1, j, k));
				cand.insert(key(i, j + 1, k));
				cand.insert(key(i, j, k + 1));
			}
			for (uint64_t b : cand) {
				int i, j, k;
				coords(b, i, j, k);
				if (!addable(c, i, j, k)) continue;
				Config grown = c;
				grown.insert(b);
				next.insert(std::move(grown));
			}
		}
		counts[static_cast<size_t>(n)] = static_cast<long long>(next.size());
		level = std::move(next);
	}
	return counts;
}

}  // namespace oracles
