#include "igusa/partition.hpp"

#include <algorithm>

namespace igusa {

Partition Partition::conjugate() const
{
	if (parts_.empty()) return Partition();
	std::vector<int> out(static_cast<size_t>(parts_[0]));
	for (int j = 0; j < parts_[0]; ++j) {
		int count = 0;
		for (int p : parts_)
			if (p > j) ++count;
		out[static_cast<size_t>(j)] = count;
	}
	return Partition(std::move(out));
}

namespace {

void gen(int remaining, int max_part, std::vector<int>& stack, std::vector<Partition>& out)
{
	if (remaining == 0) {
		out.emplace_back(stack);
		return;
	}
	for (int next = std::min(remaining, max_part); next >= 1; --next) {
		stack.push_back(next);
		gen(remaining - next, next, stack, out);
		stack.pop_back();
	}
}

}  // namespace

std::vector<Partition> partitions_of(int n)
{
	if (n < 0) throw std::invalid_argument("partitions_of: negative n");
	std::vector<Partition> out;
	std::vector<int> stack;
	gen(n, n, stack, out);
	return out;
}

}  // namespace igusa
