#include "framesteps/partition.hpp"

#include <algorithm>

namespace framesteps {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {}

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) {}

int Partition::rows() const {
  int r = static_cast<int>(parts_.size());
  while (r > 0 && parts_[r - 1] == 0) --r;
  return r;
}

int Partition::part(int r) const {
  if (r < 0 || r >= static_cast<int>(parts_.size())) return 0;
  return parts_[r];
}

int Partition::cells() const {
  int total = 0;
  for (int p : parts_) total += p;
  return total;
}

bool Partition::is_valid() const {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) return false;
    if (i > 0 && parts_[i] > parts_[i - 1]) return false;
  }
  return true;
}

Partition Partition::trimmed() const {
  std::vector<int> p(parts_.begin(), parts_.begin() + rows());
  return Partition(std::move(p));
}

bool Partition::contains(const Partition& inner) const {
  int n = std::max(size(), inner.size());
  for (int r = 0; r < n; ++r)
    if (inner.part(r) > part(r)) return false;
  return true;
}

bool Partition::operator==(const Partition& rhs) const {
  int n = std::max(size(), rhs.size());
  for (int r = 0; r < n; ++r)
    if (part(r) != rhs.part(r)) return false;
  return true;
}

}  // namespace framesteps
