#include "cslab/fstree.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace cslab {

int PlaneTree::find(int label) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].label == label) return static_cast<int>(i);
  }
  return -1;
}

PlaneTree PlaneTree::shape() const {
  PlaneTree out = *this;
  for (auto& n : out.nodes) n.label = 0;
  return out;
}

PlaneTree build_fs_tree(std::span<const int> word) {
  {
    std::set<int> seen(word.begin(), word.end());
    if (seen.size() != word.size()) throw InvalidInput("Foata-Strehl tree needs distinct letters");
  }
  // Min-rooted Cartesian tree; node i is the letter at position i.
  PlaneTree tree;
  tree.nodes.resize(word.size());
  std::vector<int> spine;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int idx = static_cast<int>(i);
    tree.nodes[i].label = word[i];
    int last = -1;
    while (!spine.empty() && word[static_cast<std::size_t>(spine.back())] > word[i]) {
      last = spine.back();
      spine.pop_back();
    }
    tree.nodes[i].left = last;
    if (!spine.empty()) tree.nodes[static_cast<std::size_t>(spine.back())].right = idx;
    spine.push_back(idx);
  }
  tree.root = spine.empty() ? -1 : spine.front();
  return tree;
}

std::vector<int> unbuild_fs_tree(const PlaneTree& tree) {
  std::vector<int> out;
  out.reserve(tree.size());
  std::function<void(int)> walk = [&](int v) {
    if (v < 0) return;
    const auto& node = tree.nodes[static_cast<std::size_t>(v)];
    walk(node.left);
    out.push_back(node.label);
    walk(node.right);
  };
  walk(tree.root);
  return out;
}

std::vector<int> node_levels(const PlaneTree& tree) {
  std::vector<int> level(tree.size(), 0);
  std::vector<int> stack;
  if (tree.root >= 0) stack.push_back(tree.root);
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    const auto& node = tree.nodes[static_cast<std::size_t>(v)];
    if (node.left >= 0) {
      level[static_cast<std::size_t>(node.left)] = level[static_cast<std::size_t>(v)];
      stack.push_back(node.left);
    }
    if (node.right >= 0) {
      level[static_cast<std::size_t>(node.right)] = level[static_cast<std::size_t>(v)] + 1;
      stack.push_back(node.right);
    }
  }
  return level;
}

std::map<int, int> levels(const PlaneTree& tree) {
  const auto level = node_levels(tree);
  std::map<int, int> out;
  for (std::size_t i = 0; i < tree.size(); ++i) out[tree.nodes[i].label] = level[i];
  return out;
}

namespace {

std::vector<RLWord> node_rl_words(const PlaneTree& tree) {
  std::vector<RLWord> words(tree.size());
  std::vector<int> stack;
  if (tree.root >= 0) stack.push_back(tree.root);
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    const auto& node = tree.nodes[static_cast<std::size_t>(v)];
    if (node.left >= 0) {
      words[static_cast<std::size_t>(node.left)] = words[static_cast<std::size_t>(v)] + 'l';
      stack.push_back(node.left);
    }
    if (node.right >= 0) {
      words[static_cast<std::size_t>(node.right)] = words[static_cast<std::size_t>(v)] + 'r';
      stack.push_back(node.right);
    }
  }
  return words;
}

// Node indices in levelwise order: by level, then by rl-word.
std::vector<int> levelwise_order(const PlaneTree& tree) {
  const auto level = node_levels(tree);
  const auto words = node_rl_words(tree);
  std::vector<int> order(tree.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto ua = static_cast<std::size_t>(a);
    const auto ub = static_cast<std::size_t>(b);
    if (level[ua] != level[ub]) return level[ua] < level[ub];
    return rl_less(words[ua], words[ub]);
  });
  return order;
}

}  // namespace

RLWord rl_word(const PlaneTree& tree, int label) {
  const int target = tree.find(label);
  if (target < 0) throw InvalidInput("label " + std::to_string(label) + " is not in the tree");
  return node_rl_words(tree)[static_cast<std::size_t>(target)];
}

bool rl_less(const RLWord& a, const RLWord& b) {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (a[i] != b[i]) return a[i] == 'r';
  }
  return a.size() < b.size();
}

bool is_levelwise_numbered(const PlaneTree& tree) {
  std::vector<int> labels;
  labels.reserve(tree.size());
  for (const auto& n : tree.nodes) labels.push_back(n.label);
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != static_cast<int>(i) + 1) {
      throw InvalidInput("levelwise check needs labels exactly 1..n");
    }
  }
  const auto order = levelwise_order(tree);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (tree.nodes[static_cast<std::size_t>(order[i])].label != static_cast<int>(i) + 1) return false;
  }
  return true;
}

PlaneTree levelwise_numbering(const PlaneTree& shape) {
  PlaneTree out = shape;
  const auto order = levelwise_order(shape);
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.nodes[static_cast<std::size_t>(order[i])].label = static_cast<int>(i) + 1;
  }
  return out;
}

std::vector<int> right_chain_lengths(const PlaneTree& tree) {
  std::vector<int> out;
  std::vector<int> stack;
  if (tree.root >= 0) stack.push_back(tree.root);
  // Stack holds chain heads: the root and every left child.
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    int length = 0;
    std::vector<int> lefts;
    while (v >= 0) {
      ++length;
      const auto& node = tree.nodes[static_cast<std::size_t>(v)];
      if (node.left >= 0) lefts.push_back(node.left);
      v = node.right;
    }
    out.push_back(length);
    stack.insert(stack.end(), lefts.rbegin(), lefts.rend());
  }
  return out;
}

bool k_condition(const PlaneTree& tree, int k) {
  if (k < 2) throw InvalidInput("k_condition needs k >= 2");
  for (int len : right_chain_lengths(tree)) {
    if (len % (k - 1) != 0) return false;
  }
  return true;
}

bool same_tree(const PlaneTree& a, const PlaneTree& b) {
  if (a.size() != b.size()) return false;
  std::function<bool(int, int)> eq = [&](int u, int v) {
    if (u < 0 || v < 0) return u < 0 && v < 0;
    const auto& x = a.nodes[static_cast<std::size_t>(u)];
    const auto& y = b.nodes[static_cast<std::size_t>(v)];
    return x.label == y.label && eq(x.left, y.left) && eq(x.right, y.right);
  };
  return eq(a.root, b.root);
}

std::vector<PlaneTree> all_shapes(int n) {
  if (n < 0) throw InvalidInput("all_shapes needs n >= 0");
  // shapes[m] lists trees with m vertices as (left size, index) compositions.
  std::vector<std::vector<PlaneTree>> shapes(static_cast<std::size_t>(n) + 1);
  shapes[0].push_back(PlaneTree{});
  auto graft = [](PlaneTree& into, const PlaneTree& sub) -> int {
    if (sub.empty()) return -1;
    const int offset = static_cast<int>(into.nodes.size());
    for (auto node : sub.nodes) {
      if (node.left >= 0) node.left += offset;
      if (node.right >= 0) node.right += offset;
      into.nodes.push_back(node);
    }
    return sub.root + offset;
  };
  for (int m = 1; m <= n; ++m) {
    for (int left = 0; left < m; ++left) {
      for (const auto& l : shapes[static_cast<std::size_t>(left)]) {
        for (const auto& r : shapes[static_cast<std::size_t>(m - 1 - left)]) {
          PlaneTree t;
          t.nodes.push_back({});
          t.root = 0;
          const int li = graft(t, l);
          const int ri = graft(t, r);
          t.nodes[0].left = li;
          t.nodes[0].right = ri;
          shapes[static_cast<std::size_t>(m)].push_back(std::move(t));
        }
      }
    }
  }
  return shapes[static_cast<std::size_t>(n)];
}

}  // namespace cslab
