#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kvertex/rational.hpp"

namespace kvertex {

// Integer partition, parts weakly decreasing, trailing zeros stripped.
// Cells are (row i, column j), both 0-based; a cell (i, j) is in the
// diagram iff j < part(i).  The global ordering (operator<) is by size,
// then reverse-lexicographic within a size — the same order enumerate()
// produces — and is the canonical order everywhere, including
// serialization.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  static Partition parse(const std::string& s);  // "3,1,1"; "" is empty

  int size() const { return size_; }          // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i < length() ? parts_[i] : 0; }
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  bool contains(int i, int j) const { return i >= 0 && j >= 0 && j < part(i); }
  bool contains(const Partition& o) const;  // diagram inclusion

  int arm(int i, int j) const { return part(i) - j - 1; }
  int coarm(int, int j) const { return j; }
  int leg(int i, int j) const { return conjugate().part(j) - i - 1; }
  int coleg(int i, int) const { return i; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend bool operator<(const Partition& a, const Partition& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    return a.parts_ > b.parts_;  // reverse-lexicographic within equal size
  }

  std::string str() const;  // "3,1,1"; "" for empty

private:
  std::vector<int> parts_;
  int size_ = 0;
};

// all partitions of n, in reverse-lexicographic order ((n) first)
std::vector<Partition> enumerate_partitions(int n);
// all partitions of 0..n, in the canonical global order
std::vector<Partition> partitions_up_to(int n);

// order of the centralizer of the class mu in S_{|mu|}: prod_i i^{m_i} m_i!
Rational z_of(const Partition& mu);

// irreducible symmetric-group character chi^lambda evaluated on the class
// mu (|lambda| == |mu|); Murnaghan–Nakayama over beta-sets, memoized and
// safe to call from several threads
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

}  // namespace kvertex
