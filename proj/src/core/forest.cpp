#include "stirforest/forest.hpp"

#include "stirforest/gfs.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace sf {

namespace {

class ForestParser {
 public:
  ForestParser(std::string_view text, unsigned k) : text_(text), k_(k) {}

  Forest parse() {
    Forest f;
    f.k = k_;
    skip_ws();
    while (pos_ < text_.size()) {
      f.trees.push_back(parse_tree());
      std::size_t before = pos_;
      skip_ws();
      if (pos_ < text_.size() && pos_ == before) fail("expected whitespace between trees");
    }
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Label parse_label() {
    skip_ws();
    std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<Label>::max()) {
        pos_ = start;
        fail("label out of range");
      }
      ++pos_;
    }
    if (pos_ == start) fail("expected label");
    return static_cast<Label>(value);
  }

  LabeledTree parse_tree() {
    LabeledTree t;
    t.label = parse_label();
    const std::size_t after_label = pos_;
    if (!peek('[')) {
      pos_ = after_label;
      return t;
    }
    ++pos_;
    t.slots.emplace_back();
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size()) fail("unterminated slot list");
      char c = text_[pos_];
      if (c == ']') {
        if (t.slots.size() != k_)
          fail("node " + std::to_string(t.label) + " has " + std::to_string(t.slots.size()) + " slots, expected " +
               std::to_string(k_));
        ++pos_;
        return t;
      }
      if (c == ';') {
        ++pos_;
        t.slots.emplace_back();
        continue;
      }
      auto& slot = t.slots.back();
      if (!slot.empty()) {
        if (c != ',') fail("expected ',', ';' or ']'");
        ++pos_;
      }
      slot.push_back(parse_tree());
    }
  }

  std::string_view text_;
  unsigned k_;
  std::size_t pos_ = 0;
};

void serialize_into(const LabeledTree& t, std::string& out) {
  out += std::to_string(t.label);
  if (t.is_leaf()) return;
  out += '[';
  for (std::size_t j = 0; j < t.slots.size(); ++j) {
    if (j) out += ';';
    for (std::size_t i = 0; i < t.slots[j].size(); ++i) {
      if (i) out += ',';
      serialize_into(t.slots[j][i], out);
    }
  }
  out += ']';
}

void validate_node(const LabeledTree& t, unsigned k, std::set<Label>& seen, std::vector<Violation>& out) {
  if (t.label <= 0)
    out.push_back({ViolationKind::NonPositiveLabel, t.label, "label " + std::to_string(t.label) + " is not positive"});
  if (!seen.insert(t.label).second)
    out.push_back({ViolationKind::DuplicateLabel, t.label, "duplicate label " + std::to_string(t.label)});
  if (t.is_leaf()) return;
  if (t.slots.size() != k)
    out.push_back({ViolationKind::WrongSlotCount, t.label,
                   "node " + std::to_string(t.label) + " has " + std::to_string(t.slots.size()) + " slots, expected " +
                       std::to_string(k)});
  if (std::all_of(t.slots.begin(), t.slots.end(), [](const auto& s) { return s.empty(); }))
    out.push_back({ViolationKind::NotPruned, t.label, "node " + std::to_string(t.label) + " has only empty slots"});
  for (const auto& slot : t.slots) {
    for (std::size_t i = 0; i < slot.size(); ++i) {
      if (slot[i].label <= t.label)
        out.push_back({ViolationKind::PathNotIncreasing, slot[i].label,
                       "label " + std::to_string(slot[i].label) + " is not above its grandparent " +
                           std::to_string(t.label)});
      if (i && slot[i].label <= slot[i - 1].label)
        out.push_back({ViolationKind::SlotNotIncreasing, slot[i].label,
                       "slot list under " + std::to_string(t.label) + " is not increasing at " +
                           std::to_string(slot[i].label)});
      validate_node(slot[i], k, seen, out);
    }
  }
}

// Calls fn(node, is_old) for every non-root node below t, where is_old says
// whether the node carries the largest label among its grandparent's
// grandchildren.
template <class Fn>
void walk_children(const LabeledTree& t, Fn&& fn) {
  if (t.is_leaf()) return;
  Label oldest = std::numeric_limits<Label>::min();
  for (const auto& slot : t.slots)
    for (const auto& c : slot) oldest = std::max(oldest, c.label);
  for (const auto& slot : t.slots) {
    for (const auto& c : slot) {
      fn(c, c.label == oldest);
      walk_children(c, fn);
    }
  }
}

bool first_slots_empty(const LabeledTree& root) {
  return std::all_of(root.slots.begin(), root.slots.end() - 1, [](const auto& s) { return s.empty(); });
}

const LabeledTree* oldest_grandchild(const LabeledTree& root) {
  const LabeledTree* best = nullptr;
  for (const auto& slot : root.slots)
    for (const auto& c : slot)
      if (!best || c.label > best->label) best = &c;
  return best;
}

void collect_labels(const LabeledTree& t, std::vector<Label>& out) {
  out.push_back(t.label);
  for (const auto& slot : t.slots)
    for (const auto& c : slot) collect_labels(c, out);
}

std::size_t count_nodes(const LabeledTree& t) {
  std::size_t n = 1;
  for (const auto& slot : t.slots)
    for (const auto& c : slot) n += count_nodes(c);
  return n;
}

unsigned count_leaves(const LabeledTree& t) {
  if (t.is_leaf()) return 1;
  unsigned n = 0;
  for (const auto& slot : t.slots)
    for (const auto& c : slot) n += count_leaves(c);
  return n;
}

using TreeList = std::vector<LabeledTree>;

std::vector<TreeList> forests_on(const std::vector<Label>& labels, unsigned k);

std::vector<LabeledTree> trees_on(const std::vector<Label>& block, unsigned k) {
  if (block.size() == 1) return {make_leaf(block[0])};
  std::vector<Label> rest(block.begin() + 1, block.end());
  std::vector<LabeledTree> out;
  std::vector<unsigned> assign(rest.size(), 0);
  for (;;) {
    std::vector<std::vector<Label>> parts(k);
    for (std::size_t i = 0; i < rest.size(); ++i) parts[assign[i]].push_back(rest[i]);
    std::vector<std::vector<TreeList>> options(k);
    for (unsigned j = 0; j < k; ++j) options[j] = forests_on(parts[j], k);
    // Odometer over the per-slot choices, slot 1 most significant.
    std::vector<std::size_t> pick(k, 0);
    for (;;) {
      LabeledTree t;
      t.label = block[0];
      t.slots.resize(k);
      for (unsigned j = 0; j < k; ++j) t.slots[j] = options[j][pick[j]];
      out.push_back(std::move(t));
      unsigned j = k;
      while (j > 0 && ++pick[j - 1] == options[j - 1].size()) pick[--j] = 0;
      if (j == 0) break;
    }
    std::size_t i = rest.size();
    while (i > 0 && ++assign[i - 1] == k) assign[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::vector<TreeList> forests_on(const std::vector<Label>& labels, unsigned k) {
  if (labels.empty()) return {TreeList{}};
  const std::size_t r = labels.size() - 1;
  std::vector<TreeList> out;
  // Subsets of the non-minimal labels that join the minimum's block, in
  // lexicographic order of their membership vectors.
  std::vector<bool> member(r, false);
  for (;;) {
    std::vector<Label> block{labels[0]}, remaining;
    for (std::size_t i = 0; i < r; ++i) (member[i] ? block : remaining).push_back(labels[i + 1]);
    auto firsts = trees_on(block, k);
    auto tails = forests_on(remaining, k);
    for (const auto& t : firsts) {
      for (const auto& tail : tails) {
        TreeList f;
        f.reserve(tail.size() + 1);
        f.push_back(t);
        f.insert(f.end(), tail.begin(), tail.end());
        out.push_back(std::move(f));
      }
    }
    std::size_t i = r;
    while (i > 0 && member[i - 1]) member[--i] = false;
    if (i == 0) break;
    member[i - 1] = true;
  }
  return out;
}

std::vector<Label> checked_label_set(std::span<const Label> labels, unsigned k, const Limits& limits) {
  if (k == 0) throw DomainError("k must be positive");
  std::vector<Label> sorted(labels.begin(), labels.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("label set contains duplicates");
  if (!sorted.empty() && sorted.front() <= 0) throw DomainError("labels must be positive");
  std::uint64_t count = k_stirling_count(static_cast<unsigned>(sorted.size()), k);
  if (count > limits.max_objects)
    throw LimitError("forest family on " + std::to_string(sorted.size()) + " labels exceeds the ceiling of " +
                     std::to_string(limits.max_objects));
  return sorted;
}

}  // namespace

Forest parse_forest(std::string_view text, unsigned k) {
  if (k == 0) throw DomainError("k must be positive");
  Forest f = ForestParser(text, k).parse();
  auto violations = validate_forest(f);
  if (!violations.empty()) throw DomainError(violations.front().message);
  return f;
}

LabeledTree parse_tree(std::string_view text, unsigned k) {
  Forest f = parse_forest(text, k);
  if (f.trees.size() != 1)
    throw DomainError("expected a single tree, got " + std::to_string(f.trees.size()) + " trees");
  return std::move(f.trees.front());
}

std::string serialize_forest(const Forest& f) {
  std::string out;
  for (std::size_t i = 0; i < f.trees.size(); ++i) {
    if (i) out += ' ';
    serialize_into(f.trees[i], out);
  }
  return out;
}

std::string serialize_tree(const LabeledTree& t) {
  std::string out;
  serialize_into(t, out);
  return out;
}

std::vector<Violation> validate_forest(const Forest& f) {
  std::vector<Violation> out;
  std::set<Label> seen;
  for (std::size_t i = 0; i < f.trees.size(); ++i) {
    if (i && f.trees[i].label <= f.trees[i - 1].label)
      out.push_back({ViolationKind::RootsNotIncreasing, f.trees[i].label,
                     "roots are not increasing at " + std::to_string(f.trees[i].label)});
    validate_node(f.trees[i], f.k, seen, out);
  }
  return out;
}

std::vector<Violation> validate_tree(const LabeledTree& t, unsigned k) {
  std::vector<Violation> out;
  std::set<Label> seen;
  validate_node(t, k, seen, out);
  return out;
}

const char* to_string(NodeClass c) {
  switch (c) {
    case NodeClass::Root: return "root";
    case NodeClass::OldLeaf: return "old-leaf";
    case NodeClass::YoungLeaf: return "young-leaf";
    case NodeClass::OldInternal: return "old-internal";
    case NodeClass::YoungInternal: return "young-internal";
  }
  return "?";
}

NodeClass classify_label(const Forest& f, Label x) {
  for (const auto& t : f.trees) {
    if (t.label == x) return NodeClass::Root;
    std::optional<NodeClass> found;
    walk_children(t, [&](const LabeledTree& node, bool old) {
      if (node.label != x) return;
      if (node.is_leaf())
        found = old ? NodeClass::OldLeaf : NodeClass::YoungLeaf;
      else
        found = old ? NodeClass::OldInternal : NodeClass::YoungInternal;
    });
    if (found) return *found;
  }
  throw DomainError("label " + std::to_string(x) + " does not occur in the forest");
}

unsigned tree_lleaf(const LabeledTree& t) { return count_leaves(t); }

ForestStats forest_stats(const Forest& f) {
  ForestStats s;
  for (const auto& t : f.trees) {
    if (t.is_leaf()) {
      ++s.si;
      ++s.lleaf;
      continue;
    }
    ++s.lint;
    walk_children(t, [&](const LabeledTree& node, bool old) {
      if (node.is_leaf()) {
        ++s.lleaf;
        ++(old ? s.oleaf : s.yleaf);
      } else {
        ++s.lint;
        if (old) ++s.oint;
      }
    });
  }
  RemovableLabels r = removable_labels(f);
  s.rleaf = static_cast<unsigned>(r.old_leaves.size() + r.young_leaves.size());
  return s;
}

LabelSets label_sets(const Forest& f) {
  LabelSets out;
  for (const auto& t : f.trees) {
    if (t.is_leaf()) {
      out.si.insert(t.label);
      continue;
    }
    walk_children(t, [&](const LabeledTree& node, bool old) {
      if (node.is_leaf())
        (old ? out.oleaf : out.yleaf).insert(node.label);
      else if (old)
        out.oint.insert(node.label);
    });
  }
  out.oint_star = out.oint;
  out.si_star = out.si;
  if (!f.trees.empty()) {
    const LabeledTree& last = f.trees.back();
    if (last.is_leaf()) {
      out.si_star.erase(last.label);
    } else if (const LabeledTree* g = oldest_grandchild(last); g && !g->is_leaf()) {
      out.oint_star.erase(g->label);
    }
  }
  return out;
}

RemovableLabels removable_labels(const Forest& f) {
  RemovableLabels out;
  const std::size_t m = f.trees.size();
  for (std::size_t i = 0; i < m; ++i) {
    const LabeledTree& root = f.trees[i];
    if (root.is_leaf() || !first_slots_empty(root)) continue;
    const LabeledTree* only_leaf = nullptr;
    unsigned leaves = 0;
    for (const auto& c : root.slots.back()) {
      if (c.is_leaf()) {
        ++leaves;
        only_leaf = &c;
      }
    }
    if (leaves != 1) continue;
    if (only_leaf != oldest_grandchild(root)) continue;
    if (i + 1 < m && only_leaf->label >= f.trees[i + 1].label) continue;
    out.old_leaves.insert(only_leaf->label);
  }
  if (m == 0 || f.trees.back().is_leaf()) return out;
  const LabeledTree& last = f.trees.back();
  const LabeledTree* oldest = oldest_grandchild(last);
  for (const auto& slot : last.slots) {
    for (const auto& c : slot) {
      if (!c.is_leaf() || &c == oldest) continue;
      LabeledTree image = phi(last, c.label, f.k);
      if (first_slots_empty(image)) out.young_leaves.insert(c.label);
    }
  }
  return out;
}

LabelSet removable_young_shortcut(const Forest& f) {
  LabelSet out;
  if (f.trees.empty() || f.trees.back().is_leaf()) return out;
  const LabeledTree& last = f.trees.back();
  const LabeledTree* oldest = oldest_grandchild(last);
  for (const auto& c : last.slots.back()) {
    if (!c.is_leaf() || &c == oldest) continue;
    bool all_above = true;
    for (std::size_t j = 0; j + 1 < last.slots.size(); ++j)
      for (const auto& other : last.slots[j]) all_above = all_above && other.label > c.label;
    if (all_above) out.insert(c.label);
  }
  return out;
}

bool forest_in_bar(const Forest& f) {
  return f.trees.empty() || f.trees.back().is_leaf() || first_slots_empty(f.trees.back());
}

ForestClass forest_class(const Forest& f) {
  ForestClass c;
  c.in_bar = forest_in_bar(f);
  ForestStats s = forest_stats(f);
  c.in_star = s.yleaf == 0 && s.rleaf == 0;
  return c;
}

std::vector<Label> forest_labels(const Forest& f) {
  std::vector<Label> out;
  for (const auto& t : f.trees) collect_labels(t, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Label> tree_labels(const LabeledTree& t) {
  std::vector<Label> out;
  collect_labels(t, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t forest_size(const Forest& f) {
  std::size_t n = 0;
  for (const auto& t : f.trees) n += count_nodes(t);
  return n;
}

std::vector<Forest> enumerate_forests(std::span<const Label> labels, unsigned k, const Limits& limits) {
  auto sorted = checked_label_set(labels, k, limits);
  auto lists = forests_on(sorted, k);
  std::vector<Forest> out;
  out.reserve(lists.size());
  for (auto& trees : lists) out.push_back(Forest{k, std::move(trees)});
  return out;
}

std::vector<Forest> enumerate_forests(unsigned n, unsigned k, const Limits& limits) {
  auto labels = iota_labels(n);
  return enumerate_forests(labels, k, limits);
}

std::vector<LabeledTree> enumerate_trees(std::span<const Label> labels, unsigned k, const Limits& limits) {
  auto sorted = checked_label_set(labels, k, limits);
  if (sorted.empty()) return {};
  return trees_on(sorted, k);
}

std::vector<LabeledTree> enumerate_trees(unsigned n, unsigned k, const Limits& limits) {
  auto labels = iota_labels(n);
  return enumerate_trees(labels, k, limits);
}

std::vector<Label> iota_labels(unsigned n) {
  std::vector<Label> out(n);
  for (unsigned i = 0; i < n; ++i) out[i] = static_cast<Label>(i + 1);
  return out;
}

std::string tree_to_json(const LabeledTree& t) {
  std::string out = "{\"label\":" + std::to_string(t.label);
  if (!t.is_leaf()) {
    out += ",\"slots\":[";
    for (std::size_t j = 0; j < t.slots.size(); ++j) {
      if (j) out += ',';
      out += '[';
      for (std::size_t i = 0; i < t.slots[j].size(); ++i) {
        if (i) out += ',';
        out += tree_to_json(t.slots[j][i]);
      }
      out += ']';
    }
    out += ']';
  }
  out += '}';
  return out;
}

std::string forest_to_json(const Forest& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.trees.size(); ++i) {
    if (i) out += ',';
    out += tree_to_json(f.trees[i]);
  }
  out += ']';
  return out;
}

}  // namespace sf
