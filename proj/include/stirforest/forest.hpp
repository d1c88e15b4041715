#pragma once

// Increasing pruned even k-ary trees and forests. Only the labeled (even
// level) nodes are stored; the j-th unlabeled child of a node is its j-th
// slot, a list of subtrees. A node without slots is a labeled leaf.

#include "stirforest/errors.hpp"
#include "stirforest/limits.hpp"
#include "stirforest/stirling.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sf {

using LabelSet = std::set<Label>;

struct LabeledTree {
  Label label = 0;
  std::vector<std::vector<LabeledTree>> slots;  // empty, or exactly k lists

  bool is_leaf() const noexcept { return slots.empty(); }
  friend bool operator==(const LabeledTree&, const LabeledTree&) = default;
  friend bool operator<(const LabeledTree& a, const LabeledTree& b) {
    if (a.label != b.label) return a.label < b.label;
    return a.slots < b.slots;
  }
};

struct Forest {
  unsigned k = 1;
  std::vector<LabeledTree> trees;

  bool empty() const noexcept { return trees.empty(); }
  friend bool operator==(const Forest&, const Forest&) = default;
  friend bool operator<(const Forest& a, const Forest& b) {
    if (a.k != b.k) return a.k < b.k;
    return a.trees < b.trees;
  }
};

inline LabeledTree make_leaf(Label label) { return LabeledTree{label, {}}; }
inline bool is_singleton(const LabeledTree& t) { return t.is_leaf(); }

/// Parses the canonical grammar and validates every invariant. Syntax
/// problems raise ParseError, invariant violations DomainError.
Forest parse_forest(std::string_view text, unsigned k);
/// A forest consisting of exactly one tree.
LabeledTree parse_tree(std::string_view text, unsigned k);
std::string serialize_forest(const Forest& f);
std::string serialize_tree(const LabeledTree& t);

enum class ViolationKind {
  WrongSlotCount,
  NotPruned,
  PathNotIncreasing,
  SlotNotIncreasing,
  RootsNotIncreasing,
  DuplicateLabel,
  NonPositiveLabel,
};

struct Violation {
  ViolationKind kind;
  Label label;  // the offending node
  std::string message;
};

std::vector<Violation> validate_forest(const Forest& f);
std::vector<Violation> validate_tree(const LabeledTree& t, unsigned k);

enum class NodeClass { Root, OldLeaf, YoungLeaf, OldInternal, YoungInternal };
const char* to_string(NodeClass c);

/// Throws DomainError when x is not a label of f.
NodeClass classify_label(const Forest& f, Label x);

struct ForestStats {
  unsigned lleaf = 0;
  unsigned si = 0;
  unsigned oleaf = 0;
  unsigned yleaf = 0;
  unsigned oint = 0;
  unsigned lint = 0;
  unsigned rleaf = 0;
  friend bool operator==(const ForestStats&, const ForestStats&) = default;
};

ForestStats forest_stats(const Forest& f);
/// lleaf of a single tree, without the removable-leaf pass.
unsigned tree_lleaf(const LabeledTree& t);

struct LabelSets {
  LabelSet oint;
  LabelSet oleaf;
  LabelSet yleaf;
  LabelSet si;
  LabelSet oint_star;  // oint without the old-internal grandchild of the last root
  LabelSet si_star;    // si without the last tree when it is a singleton
};
LabelSets label_sets(const Forest& f);

struct RemovableLabels {
  LabelSet old_leaves;
  LabelSet young_leaves;
};

/// Removable young leaves are found by applying the transformation at each
/// candidate and inspecting the result.
RemovableLabels removable_labels(const Forest& f);
/// The shortcut criterion for removable young leaves: u sits in slot k of
/// the last root and every tree in slots 1..k-1 has a larger root. Used only
/// to cross-check removable_labels.
LabelSet removable_young_shortcut(const Forest& f);

struct ForestClass {
  bool in_bar = false;   // last tree singleton, or its root's first k-1 slots empty
  bool in_star = false;  // yleaf = 0 and rleaf = 0
  friend bool operator==(const ForestClass&, const ForestClass&) = default;
};
ForestClass forest_class(const Forest& f);
/// The in_bar half of forest_class, without the statistics pass.
bool forest_in_bar(const Forest& f);

/// Sorted labels of the forest.
std::vector<Label> forest_labels(const Forest& f);
std::vector<Label> tree_labels(const LabeledTree& t);
/// Number of labeled nodes.
std::size_t forest_size(const Forest& f);

/// All forests on the label set, blocks ordered by minima, slot assignments
/// in lexicographic order. Throws LimitError above the ceiling.
std::vector<Forest> enumerate_forests(std::span<const Label> labels, unsigned k, const Limits& limits = {});
std::vector<Forest> enumerate_forests(unsigned n, unsigned k, const Limits& limits = {});
/// Single-tree forests on the label set.
std::vector<LabeledTree> enumerate_trees(std::span<const Label> labels, unsigned k, const Limits& limits = {});
std::vector<LabeledTree> enumerate_trees(unsigned n, unsigned k, const Limits& limits = {});

/// 1..n
std::vector<Label> iota_labels(unsigned n);

/// {"label":1,"slots":[[...],...]} per tree, slots omitted on leaves.
std::string tree_to_json(const LabeledTree& t);
/// JSON array of trees.
std::string forest_to_json(const Forest& f);

}  // namespace sf
