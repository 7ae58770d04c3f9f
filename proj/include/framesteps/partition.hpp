#pragma once

#include <initializer_list>
#include <vector>

namespace framesteps {

// Weakly decreasing sequence of nonnegative integers. Parts are row lengths
// of a Young diagram, bottom row first (French convention). Trailing zeros
// are permitted and carry no meaning: (3,1) and (3,1,0) are equal.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  // Number of stored parts, trailing zeros included.
  int size() const { return static_cast<int>(parts_.size()); }
  // Number of nonzero parts.
  int rows() const;
  // Part at 0-based index r; 0 beyond the stored length.
  int part(int r) const;
  int cells() const;
  bool empty() const { return rows() == 0; }
  const std::vector<int>& parts() const { return parts_; }

  bool is_valid() const;
  // Copy with trailing zeros removed.
  Partition trimmed() const;
  // Whether `inner` fits inside this partition part by part.
  bool contains(const Partition& inner) const;

  bool operator==(const Partition& rhs) const;
  bool operator!=(const Partition& rhs) const { return !(*this == rhs); }

 private:
  std::vector<int> parts_;
};

}  // namespace framesteps
