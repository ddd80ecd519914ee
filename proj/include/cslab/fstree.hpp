#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "cslab/common.hpp"

namespace cslab {

/// Plane 0-1-2 tree stored as an index arena. A label of 0 marks an
/// unlabeled shape; Foata-Strehl trees carry the letters of their word.
struct PlaneTree {
  struct Node {
    int label = 0;
    int left = -1;
    int right = -1;
  };

  std::vector<Node> nodes;
  int root = -1;

  std::size_t size() const { return nodes.size(); }
  bool empty() const { return nodes.empty(); }
  /// Node index holding `label`, or -1.
  int find(int label) const;
  /// Copy with every label reset to 0.
  PlaneTree shape() const;

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
};

/// Root-to-vertex path, 'r' for a right child step and 'l' for a left one.
using RLWord = std::string;

/// Foata-Strehl tree: root is the minimum letter, left subtree built from the
/// prefix before it, right subtree from the suffix after it.
PlaneTree build_fs_tree(std::span<const int> word);
/// In-order traversal; inverse of build_fs_tree.
std::vector<int> unbuild_fs_tree(const PlaneTree& tree);

/// Number of right-child steps from the root, indexed by node.
std::vector<int> node_levels(const PlaneTree& tree);
std::map<int, int> levels(const PlaneTree& tree);

RLWord rl_word(const PlaneTree& tree, int label);
/// Same-level order on rl-words: 'r' before 'l', a word before its extensions.
bool rl_less(const RLWord& a, const RLWord& b);

bool is_levelwise_numbered(const PlaneTree& tree);
/// The unique levelwise labeling of a shape (labels of the input are ignored).
PlaneTree levelwise_numbering(const PlaneTree& shape);

/// Every maximal parent-to-right-child chain has a vertex count divisible by k-1.
bool k_condition(const PlaneTree& tree, int k);

/// Lengths of the maximal right chains, in preorder of their top vertex.
std::vector<int> right_chain_lengths(const PlaneTree& tree);

/// Same shape and labels, regardless of arena order.
bool same_tree(const PlaneTree& a, const PlaneTree& b);

/// All plane 0-1-2 shapes with n vertices (Catalan(n) of them), deterministic order.
std::vector<PlaneTree> all_shapes(int n);

}  // namespace cslab
