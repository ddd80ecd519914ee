#include "cslab/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace cslab {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  std::vector<char> seen(values_.size() + 1, 0);
  for (int v : values_) {
    if (v < 1 || static_cast<std::size_t>(v) > values_.size() || seen[static_cast<std::size_t>(v)]) {
      throw InvalidInput("not a permutation of 1.." + std::to_string(values_.size()) + ": " +
                         join_ints(values_));
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> v;
  if (text.find_first_not_of(" \t") != std::string::npos) {
    for (auto x : parse_int_list(text)) v.push_back(static_cast<int>(x));
  }
  return Permutation(std::move(v));
}

std::vector<int> ascent_set(std::span<const int> p) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] < p[i + 1]) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

Permutation pattern(std::span<const int> word) {
  std::vector<std::size_t> order(word.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
  std::vector<int> out(word.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (rank > 0 && word[order[rank]] == word[order[rank - 1]]) {
      throw InvalidInput("pattern needs distinct letters");
    }
    out[order[rank]] = static_cast<int>(rank) + 1;
  }
  return Permutation(std::move(out));
}

}  // namespace cslab
