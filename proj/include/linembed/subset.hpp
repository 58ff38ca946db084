#pragma once

#include <cstdint>
#include <vector>

namespace linembed {

// Subset of {0..n-1}, used both for vertex subsets A in gamma-star and for
// block subsets of step graphons (block-aligned test sets).
class SubsetMask {
 public:
  SubsetMask() = default;
  explicit SubsetMask(int n) : in_(n, 0) {}
  static SubsetMask none(int n) { return SubsetMask(n); }
  static SubsetMask all(int n) {
    SubsetMask s(n);
    for (int i = 0; i < n; ++i) s.in_[i] = 1;
    s.count_ = n;
    return s;
  }
  static SubsetMask from_indices(int n, const std::vector<int>& idx);
  static SubsetMask from_bits(int n, unsigned long long bits);

  int n() const { return static_cast<int>(in_.size()); }
  int count() const { return count_; }
  bool contains(int k) const { return in_[k] != 0; }
  void set(int k, bool v) {
    if (in_[k] != (v ? 1 : 0)) {
      in_[k] = v ? 1 : 0;
      count_ += v ? 1 : -1;
    }
  }
  void flip(int k) { set(k, !contains(k)); }

  std::vector<int> members() const;

  // Lexicographic comparison of sorted member lists (tie-break rule for
  // reported maximizers).
  static bool lex_less(const SubsetMask& a, const SubsetMask& b);

  bool operator==(const SubsetMask& o) const { return in_ == o.in_; }

 private:
  std::vector<uint8_t> in_;
  int count_ = 0;
};

}  // namespace linembed
