#include "cslab/spitzer.hpp"

#include <algorithm>
#include <numeric>

#include "cslab/fstree.hpp"

namespace cslab {

namespace {

void require(const LatticePath& path, PathKind kind, const char* op) {
  if (path.kind != kind || !validate(path)) {
    throw InvalidInput(std::string(op) + " expects a valid " + std::string(to_string(kind)) +
                       " path, got '" + path.step_string() + "'");
  }
}

}  // namespace

SpitzerCoordinates tilt(const LatticePath& augmented) {
  require(augmented, PathKind::Augmented, "tilt");
  const int k = augmented.k;
  const int n = augmented.down_count();
  const long scale = static_cast<long>(k) * n + 1;
  SpitzerCoordinates out{k, n, {}};
  const auto z = augmented.heights();
  out.zprime.reserve(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    Rational v(scale * z[i] - static_cast<long>(i + 1), static_cast<unsigned long>(k));
    v.canonicalize();
    out.zprime.push_back(v);
  }
  return out;
}

Permutation full_csp(const LatticePath& augmented) {
  const auto coords = tilt(augmented);
  const auto& zp = coords.zprime;
  std::vector<std::size_t> order(zp.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return zp[a] < zp[b]; });
  std::vector<int> ranks(zp.size());
  for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = static_cast<int>(r) + 1;
  return Permutation(std::move(ranks));
}

std::vector<int> up_step_levels(const LatticePath& catalan) {
  std::vector<int> out;
  long h = 0;
  for (Step s : catalan.steps) {
    if (s == Step::Up) {
      out.push_back(static_cast<int>(h));
      h += 1;
    } else {
      h -= catalan.k - 1;
    }
  }
  return out;
}

Permutation short_csp(const LatticePath& catalan) {
  require(catalan, PathKind::Catalan, "short_csp");
  const auto level = up_step_levels(catalan);
  std::vector<std::size_t> order(level.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Lower level first; within a level, the rightmost up step gets the smaller label.
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (level[a] != level[b]) return level[a] < level[b];
    return a > b;
  });
  std::vector<int> labels(level.size());
  for (std::size_t r = 0; r < order.size(); ++r) labels[order[r]] = static_cast<int>(r) + 1;
  return Permutation(std::move(labels));
}

Permutation short_csp_from_full(const LatticePath& catalan) {
  const auto full = full_csp(augment(catalan));
  std::vector<int> word;
  for (int i : ascent_set(full.values())) word.push_back(full[static_cast<std::size_t>(i) - 1]);
  return pattern(word);
}

LatticePath reconstruct(const Permutation& short_perm, int k) {
  if (k < 2) throw InvalidInput("reconstruct needs k >= 2");
  LatticePath out{k, PathKind::Catalan, {}};
  if (short_perm.empty()) return out;

  const auto tree = build_fs_tree(short_perm.values());
  if (!is_levelwise_numbered(tree)) {
    throw InvalidInput(short_perm.to_string() + " is not a short Catalan-Spitzer permutation "
                       "(its Foata-Strehl tree is not levelwise numbered)");
  }
  if (!k_condition(tree, k)) {
    throw InvalidInput(short_perm.to_string() + " fails the right-chain condition for k = " +
                       std::to_string(k));
  }

  // Node i of a Foata-Strehl tree is the letter at position i.
  const auto level = node_levels(tree);
  const int drop = k - 1;
  auto downs_between = [&](int from, int to) {
    const int diff = from + 1 - to;
    if (diff < 0 || diff % drop != 0) {
      throw InvalidInput("level difference " + std::to_string(diff) + " is not a non-negative multiple of " +
                         std::to_string(drop));
    }
    return diff / drop;
  };

  for (std::size_t i = 0; i < short_perm.size(); ++i) {
    out.steps.push_back(Step::Up);
    const int next = i + 1 < short_perm.size() ? level[i + 1] : 0;
    out.steps.insert(out.steps.end(), static_cast<std::size_t>(downs_between(level[i], next)), Step::Down);
  }
  if (!validate(out)) throw InvalidInput("reconstruction of " + short_perm.to_string() + " is not a catalan path");
  return out;
}

TypeVector path_type(const LatticePath& augmented) {
  require(augmented, PathKind::Augmented, "path_type");
  TypeVector counts;
  for (long z : augmented.heights()) {
    if (static_cast<std::size_t>(z) > counts.size()) counts.resize(static_cast<std::size_t>(z), 0);
    ++counts[static_cast<std::size_t>(z) - 1];
  }
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return counts;
}

LatticePath parse_catalan_or_augmented(std::string_view steps, int k) {
  auto path = LatticePath::parse(steps, k, PathKind::Catalan);
  if (path.up_count() == (k - 1) * path.down_count() + 1) path.kind = PathKind::Augmented;
  if (!validate(path)) {
    throw InvalidInput("'" + std::string(steps) + "' is neither a " + std::to_string(k) +
                       "-Catalan path nor an augmented one");
  }
  return path;
}

}  // namespace cslab
