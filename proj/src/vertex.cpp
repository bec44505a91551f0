#include "igusa/vertex.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>

namespace igusa {

bool in_minimal_config(const LegTriple& legs, int i, int j, int k)
{
	return legs.leg1.contains(j, k) || legs.leg2.contains(k, i) || legs.leg3.contains(i, j);
}

namespace {

/* Boxes are packed into 10 bits per coordinate; the packed integer
 * order coincides with lexicographic order on (i, j, k), which is a
 * linear extension of the coordinatewise partial order. */
constexpr int kCoordBits = 10;
constexpr int kCoordMax = (1 << kCoordBits) - 1;

uint32_t pack(int i, int j, int k)
{
	return (static_cast<uint32_t>(i) << (2 * kCoordBits)) |
	       (static_cast<uint32_t>(j) << kCoordBits) | static_cast<uint32_t>(k);
}
void unpack(uint32_t b, int& i, int& j, int& k)
{
	i = static_cast<int>(b >> (2 * kCoordBits));
	j = static_cast<int>((b >> kCoordBits) & kCoordMax);
	k = static_cast<int>(b & kCoordMax);
}

struct Enumerator {
	const LegTriple& legs;
	int K;
	long long budget;
	long long states = 0;
	std::vector<long long> counts;
	std::unordered_set<uint32_t> added;

	Enumerator(const LegTriple& l, int k, long long b) : legs(l), K(k), budget(b), counts(static_cast<size_t>(k) + 1, 0) {}

	bool in_cyl(int i, int j, int k) const { return in_minimal_config(legs, i, j, k); }

	bool present(int i, int j, int k) const
	{
		return in_cyl(i, j, k) || added.count(pack(i, j, k)) != 0;
	}

	/* A box is addable when it is outside the current configuration and
	 * all coordinate predecessors are inside it. */
	bool addable(int i, int j, int k) const
	{
		if (in_cyl(i, j, k) || added.count(pack(i, j, k)) != 0) return false;
		if (i > 0 && !present(i - 1, j, k)) return false;
		if (j > 0 && !present(i, j - 1, k)) return false;
		if (k > 0 && !present(i, j, k - 1)) return false;
		return true;
	}

	/* Each downward-closed extension is generated exactly once by
	 * inserting its boxes in increasing packed (lexicographic) order;
	 * every prefix of that order is itself downward-closed, so a DFS
	 * that only appends boxes larger than the last one added visits
	 * each extension once. */
	void dfs(const std::vector<uint32_t>& cand, size_t start, int depth)
	{
		for (size_t idx = start; idx < cand.size(); ++idx) {
			const uint32_t b = cand[idx];
			if (++states > budget) throw BudgetExceeded(states);
			++counts[static_cast<size_t>(depth) + 1];
			if (depth + 1 >= K) continue;

			int i, j, k;
			unpack(b, i, j, k);
			added.insert(b);

			uint32_t succ[3];
			size_t n_succ = 0;
			const int di[3] = {1, 0, 0}, dj[3] = {0, 1, 0}, dk[3] = {0, 0, 1};
			for (int dir = 0; dir < 3; ++dir) {
				int si = i + di[dir], sj = j + dj[dir], sk = k + dk[dir];
				if (si > kCoordMax || sj > kCoordMax || sk > kCoordMax)
					throw std::runtime_error("vertex enumeration: coordinate overflow");
				if (addable(si, sj, sk)) succ[n_succ++] = pack(si, sj, sk);
			}
			std::sort(succ, succ + n_succ);

			/* Candidates for the child: the still-unused tail of the
			 * current list merged with the fresh successors, all of
			 * which are larger than b. */
			std::vector<uint32_t> child;
			child.reserve(cand.size() - idx - 1 + n_succ);
			size_t t = idx + 1, s = 0;
			while (t < cand.size() || s < n_succ) {
				if (s >= n_succ || (t < cand.size() && cand[t] < succ[s]))
					child.push_back(cand[t++]);
				else
					child.push_back(succ[s++]);
			}
			dfs(child, 0, depth + 1);

			added.erase(b);
		}
	}

	std::vector<long long> run()
	{
		counts[0] = 1;
		states = 1;
		if (K == 0) return counts;

		/* Initially addable boxes sit within one step of the cylinder
		 * cross-sections, so a small scan suffices. */
		int extent = 0;
		for (const Partition* leg : {&legs.leg1, &legs.leg2, &legs.leg3})
			extent = std::max({extent, leg->rows(), leg->first_part()});
		const int bound = extent + 2;
		std::vector<uint32_t> cand;
		for (int i = 0; i < bound; ++i)
			for (int j = 0; j < bound; ++j)
				for (int k = 0; k < bound; ++k)
					if (addable(i, j, k)) cand.push_back(pack(i, j, k));
		std::sort(cand.begin(), cand.end());
		dfs(cand, 0, 0);
		return counts;
	}
};

std::vector<std::vector<int>> encode(const LegTriple& legs)
{
	return {legs.leg1.parts(), legs.leg2.parts(), legs.leg3.parts()};
}

/* Memo key: the lexicographically least cyclic rotation. The counts
 * are invariant under cyclic leg rotation (it corresponds to the cyclic
 * coordinate rotation of the box configuration). */
std::vector<std::vector<int>> canonical_rotation(const LegTriple& legs)
{
	auto e = encode(legs);
	auto best = e;
	for (int r = 0; r < 2; ++r) {
		std::rotate(e.begin(), e.begin() + 1, e.end());
		best = std::min(best, e);
	}
	return best;
}

std::mutex memo_mutex;
std::map<std::pair<std::vector<std::vector<int>>, int>, std::vector<long long>> memo;

}  // namespace

std::vector<long long> vertex_counts_raw(const LegTriple& legs, int K, const EnumLimits& limits)
{
	if (K < 0) throw std::invalid_argument("vertex_counts: negative K");
	Enumerator e(legs, K, limits.max_states);
	return e.run();
}

std::vector<long long> vertex_counts(const LegTriple& legs, int K, const EnumLimits& limits)
{
	auto key = std::make_pair(canonical_rotation(legs), K);
	{
		std::lock_guard<std::mutex> lock(memo_mutex);
		auto it = memo.find(key);
		if (it != memo.end()) return it->second;
	}
	auto counts = vertex_counts_raw(legs, K, limits);
	{
		std::lock_guard<std::mutex> lock(memo_mutex);
		memo.emplace(std::move(key), counts);
	}
	return counts;
}

PLaurent vertex_series(const LegTriple& legs, int K, const EnumLimits& limits)
{
	auto counts = vertex_counts(legs, K, limits);
	std::map<int, Rational> c;
	for (int n = 0; n <= K; ++n)
		if (counts[static_cast<size_t>(n)] != 0) c[n] = Rational(counts[static_cast<size_t>(n)]);
	return PLaurent::with_window(std::move(c), 0, K);
}

PLaurent vertex_ratio(const LegTriple& num, const LegTriple& den, int K, const EnumLimits& limits)
{
	return vertex_series(num, K, limits) * recip(vertex_series(den, K, limits));
}

QSeries f_series(int a_max, int K, const EnumLimits& limits)
{
	const PLaurent one_minus_p = PLaurent::polynomial({{0, 1}, {1, -1}});
	std::vector<PLaurent> terms;
	terms.reserve(static_cast<size_t>(a_max) + 1);
	for (int a = 0; a <= a_max; ++a) {
		PLaurent sum;
		for (const Partition& alpha : partitions_of(a)) {
			PLaurent ratio = vertex_ratio({Partition(), Partition({1}), alpha},
			                              {Partition(), Partition(), alpha}, K, limits);
			sum = sum + ratio.shifted(-alpha.first_part());
		}
		terms.push_back(one_minus_p * sum);
	}
	return QSeries::with_terms(std::move(terms), 0, a_max);
}

QSeries n_series(int b_max, int K, const EnumLimits& limits)
{
	std::vector<PLaurent> terms;
	terms.reserve(static_cast<size_t>(b_max) + 1);
	for (int b = 0; b <= b_max; ++b) {
		PLaurent sum;
		for (const Partition& beta : partitions_of(b)) {
			PLaurent ratio = vertex_ratio({Partition({1}), Partition({1}), beta},
			                              {Partition(), Partition(), beta}, K, limits);
			int shift = beta.empty() ? 0 : beta.first_part() + beta.rows() - 1;
			sum = sum + ratio.shifted(-shift);
		}
		terms.push_back(sum);
	}
	return QSeries::with_terms(std::move(terms), 0, b_max);
}

}  // namespace igusa
