#pragma once

#include <compare>
#include <stdexcept>
#include <vector>

namespace igusa {

/* Integer partition: weakly decreasing positive parts. Ferrers
 * convention, fixed for the whole project: cell (i, j) lies in the
 * diagram iff 0 <= j < parts[i], with i the row index. */
class Partition {
public:
	Partition() = default;
	explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
	{
		for (size_t i = 0; i < parts_.size(); ++i) {
			if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
			if (i > 0 && parts_[i] > parts_[i - 1])
				throw std::invalid_argument("Partition: parts must be weakly decreasing");
		}
	}

	const std::vector<int>& parts() const { return parts_; }
	bool empty() const { return parts_.empty(); }
	int rows() const { return static_cast<int>(parts_.size()); }
	int first_part() const { return parts_.empty() ? 0 : parts_[0]; }

	int size() const
	{
		int s = 0;
		for (int p : parts_) s += p;
		return s;
	}

	bool contains(int i, int j) const
	{
		return i >= 0 && j >= 0 && i < rows() && j < parts_[static_cast<size_t>(i)];
	}

	Partition conjugate() const;

	friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
	friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
	std::vector<int> parts_;
};

/* All partitions of n, in reverse-lexicographic order:
 * (n), (n-1,1), ..., (1,...,1). */
std::vector<Partition> partitions_of(int n);

}  // namespace igusa
