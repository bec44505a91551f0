#pragma once

#include "igusa/partition.hpp"
#include "igusa/qseries.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace igusa {

/* Asymptotic cross-sections of a 3D partition along the three
 * coordinate axes. leg1 runs along the i-axis with cross-section in
 * (j, k), leg2 along j with cross-section in (k, i), leg3 along k with
 * cross-section in (i, j), all in the fixed Ferrers convention. */
struct LegTriple {
	Partition leg1, leg2, leg3;

	friend bool operator==(const LegTriple& a, const LegTriple& b) = default;
};

struct EnumLimits {
	long long max_states = 10'000'000;
};

class BudgetExceeded : public std::runtime_error {
public:
	explicit BudgetExceeded(long long states)
	    : std::runtime_error("enumeration state budget exceeded"), states_visited(states)
	{
	}
	long long states_visited;
};

/* Membership predicate of the minimal configuration (the union of the
 * three leg cylinders); downward-closed by construction. */
bool in_minimal_config(const LegTriple& legs, int i, int j, int k);

/* Number of 3D partitions with the given legs and exactly n boxes
 * added beyond the minimal configuration, for n = 0..K. Uncached
 * variant enumerates with the legs exactly as oriented. */
std::vector<long long> vertex_counts_raw(const LegTriple& legs, int K, const EnumLimits& limits = {});
std::vector<long long> vertex_counts(const LegTriple& legs, int K, const EnumLimits& limits = {});

/* Generating function of the counts, window [0, K]; the constant
 * coefficient is always 1. */
PLaurent vertex_series(const LegTriple& legs, int K, const EnumLimits& limits = {});

PLaurent vertex_ratio(const LegTriple& num, const LegTriple& den, int K, const EnumLimits& limits = {});

/* Sum over a <= a_max of F(a) q^a: horizontal-multiplicity weights of a
 * smooth transverse curve branch. Each alpha-term is the vertex ratio
 * V_{0,(1),alpha} / V_{0,0,alpha} shifted by p^{-alpha_1} (the length of
 * the scheme intersection of the branch with the alpha-thickened
 * cylinder) and multiplied by (1-p). */
QSeries f_series(int a_max, int K, const EnumLimits& limits = {});

/* Sum over b <= b_max of N(b) q^b: weights at a node, two transverse
 * branches. Each beta-term is V_{(1),(1),beta} / V_{0,0,beta} shifted by
 * p^{-(beta_1 + rows(beta) - 1)} for nonempty beta. */
QSeries n_series(int b_max, int K, const EnumLimits& limits = {});

}  // namespace igusa
