#pragma once

#include <span>
#include <string>
#include <vector>

#include "cslab/common.hpp"

namespace cslab {

/// One-line notation of a bijection on {1..m}.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidInput unless `values` is a rearrangement of 1..m.
  explicit Permutation(std::vector<int> values);
  static Permutation identity(int m);
  static Permutation parse(const std::string& text);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  /// 0-based position, 1-based value.
  int operator[](std::size_t i) const { return values_[i]; }
  std::span<const int> values() const { return values_; }
  const std::vector<int>& vector() const { return values_; }
  std::string to_string() const { return join_ints(values_); }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

/// 1-based indices i with p(i) < p(i+1).
std::vector<int> ascent_set(std::span<const int> p);

/// Order-isomorphic permutation of a word of distinct letters.
Permutation pattern(std::span<const int> word);

}  // namespace cslab
