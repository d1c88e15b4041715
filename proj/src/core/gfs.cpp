#include "stirforest/gfs.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>

namespace sf {

namespace {

struct Located {
  LabeledTree* node = nullptr;
  LabeledTree* grandparent = nullptr;
};

Located locate(LabeledTree& t, Label x) {
  if (t.label == x) return {&t, nullptr};
  for (auto& slot : t.slots) {
    for (auto& c : slot) {
      if (c.label == x) return {&c, &t};
      if (Located found = locate(c, x); found.node) return found;
    }
  }
  return {};
}

bool is_oldest_grandchild(const LabeledTree& grandparent, Label x) {
  for (const auto& slot : grandparent.slots)
    for (const auto& c : slot)
      if (c.label > x) return false;
  return true;
}

PhiKind kind_at(const Located& at) {
  if (!at.grandparent) return PhiKind::Fixed;
  bool old = is_oldest_grandchild(*at.grandparent, at.node->label);
  if (old && !at.node->is_leaf()) return PhiKind::OldInternal;
  if (!old && at.node->is_leaf()) return PhiKind::YoungLeaf;
  return PhiKind::Fixed;
}

// Applies Phi_x in place. Returns false when x is not in t.
bool phi_in_place(LabeledTree& t, Label x, unsigned k) {
  Located at = locate(t, x);
  if (!at.node) return false;
  switch (kind_at(at)) {
    case PhiKind::OldInternal: {
      LabeledTree& v = *at.node;
      auto moved = std::move(v.slots);
      v.slots.clear();
      for (std::size_t j = 0; j < moved.size(); ++j) {
        auto& dest = at.grandparent->slots[j];
        for (auto& sub : moved[j]) dest.push_back(std::move(sub));
      }
      break;
    }
    case PhiKind::YoungLeaf: {
      std::vector<std::vector<LabeledTree>> taken(k);
      for (std::size_t j = 0; j < k; ++j) {
        auto& src = at.grandparent->slots[j];
        auto split = std::partition_point(src.begin(), src.end(), [&](const LabeledTree& s) { return s.label <= x; });
        taken[j].assign(std::make_move_iterator(split), std::make_move_iterator(src.end()));
        src.erase(split, src.end());
      }
      at.node->slots = std::move(taken);
      break;
    }
    case PhiKind::Fixed:
      break;
  }
  return true;
}

void collect_young_leaves(const LabeledTree& t, std::vector<Label>& out) {
  if (t.is_leaf()) return;
  Label oldest = 0;
  for (const auto& slot : t.slots)
    for (const auto& c : slot) oldest = std::max(oldest, c.label);
  for (const auto& slot : t.slots) {
    for (const auto& c : slot) {
      if (c.is_leaf() && c.label != oldest) out.push_back(c.label);
      collect_young_leaves(c, out);
    }
  }
}

bool subset_of(const LabelSet& s, const LabelSet& a, const LabelSet& b = {}) {
  return std::all_of(s.begin(), s.end(), [&](Label x) { return a.count(x) || b.count(x); });
}

}  // namespace

PhiKind phi_kind(const LabeledTree& t, Label x) {
  Located at = locate(const_cast<LabeledTree&>(t), x);
  if (!at.node) throw DomainError("label " + std::to_string(x) + " does not occur in the tree");
  return kind_at(at);
}

LabeledTree phi(const LabeledTree& t, Label x, unsigned k) {
  LabeledTree out = t;
  if (!phi_in_place(out, x, k)) throw DomainError("label " + std::to_string(x) + " does not occur in the tree");
  return out;
}

Forest phi_set(const Forest& f, const LabelSet& s) {
  Forest out = f;
  for (Label x : s) {
    bool found = false;
    for (auto& t : out.trees) {
      if (phi_in_place(t, x, f.k)) {
        found = true;
        break;
      }
    }
    if (!found) throw DomainError("label " + std::to_string(x) + " does not occur in the forest");
  }
  return out;
}

std::vector<LabeledTree> orbit(const LabeledTree& t, unsigned k) {
  std::map<std::string, LabeledTree> seen;
  std::vector<LabeledTree> frontier{t};
  seen.emplace(serialize_tree(t), t);
  const auto labels = tree_labels(t);
  while (!frontier.empty()) {
    std::vector<LabeledTree> next;
    for (const auto& u : frontier) {
      for (Label x : labels) {
        LabeledTree image = phi(u, x, k);
        auto [it, inserted] = seen.emplace(serialize_tree(image), image);
        if (inserted) next.push_back(std::move(image));
      }
    }
    frontier = std::move(next);
  }
  std::vector<LabeledTree> out;
  out.reserve(seen.size());
  for (auto& [text, tree] : seen) out.push_back(std::move(tree));
  return out;
}

LabeledTree orbit_representative(const LabeledTree& t, unsigned k) {
  std::vector<Label> young;
  collect_young_leaves(t, young);
  LabeledTree out = t;
  for (Label x : young) phi_in_place(out, x, k);
  return out;
}

std::string format_label_set(const LabelSet& s) {
  std::string out;
  for (Label x : s) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

LabelSet parse_label_set(std::string_view text) {
  std::size_t begin = 0, end = text.size();
  auto trim = [&] {
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  };
  trim();
  if (begin < end && text[begin] == '{') {
    if (text[end - 1] != '}') throw ParseError("missing '}'", end);
    ++begin;
    --end;
    trim();
  }
  LabelSet out;
  if (begin == end) return out;
  for (std::size_t pos = begin;;) {
    std::size_t comma = std::min(text.find(',', pos), end);
    while (pos < comma && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t stop = comma;
    while (stop > pos && std::isspace(static_cast<unsigned char>(text[stop - 1]))) --stop;
    if (pos == stop) throw ParseError("expected label", pos);
    long long value = 0;
    for (std::size_t i = pos; i < stop; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected digit", i);
      value = value * 10 + (text[i] - '0');
      if (value > std::numeric_limits<Label>::max()) throw ParseError("label out of range", pos);
    }
    if (value == 0) throw ParseError("labels must be positive", pos);
    if (!out.insert(static_cast<Label>(value)).second) throw ParseError("duplicate label", pos);
    if (comma == end) break;
    pos = comma + 1;
  }
  return out;
}

std::string serialize_marked(const MarkedForest& mf) {
  return serialize_forest(mf.forest) + " | {" + format_label_set(mf.marks) + "}";
}

MarkedForest parse_marked(std::string_view text, unsigned k) {
  MarkedForest mf;
  std::size_t bar = text.find('|');
  mf.forest = parse_forest(text.substr(0, bar), k);
  if (bar != std::string_view::npos) {
    try {
      mf.marks = parse_label_set(text.substr(bar + 1));
    } catch (const ParseError& e) {
      throw ParseError("bad mark set", bar + 1 + e.position());
    }
  }
  auto labels = forest_labels(mf.forest);
  for (Label x : mf.marks)
    if (!std::binary_search(labels.begin(), labels.end(), x))
      throw DomainError("mark " + std::to_string(x) + " is not a label of the forest");
  return mf;
}

bool in_x(const MarkedForest& mf) {
  LabelSets sets = label_sets(mf.forest);
  return sets.yleaf.empty() && subset_of(mf.marks, sets.oint, sets.si_star);
}

bool in_x_bar(const MarkedForest& mf) {
  ForestClass c = forest_class(mf.forest);
  if (!c.in_bar || !c.in_star) return false;
  LabelSets sets = label_sets(mf.forest);
  return subset_of(mf.marks, sets.oint_star, sets.si_star);
}

bool in_x_hat(const MarkedForest& mf) {
  ForestClass c = forest_class(mf.forest);
  if (c.in_bar || !c.in_star) return false;
  LabelSets sets = label_sets(mf.forest);
  return subset_of(mf.marks, sets.oint, sets.si_star);
}

bool in_y(const MarkedForest& mf) { return subset_of(mf.marks, label_sets(mf.forest).si_star); }

bool in_y_bar(const MarkedForest& mf) {
  return forest_class(mf.forest).in_bar && forest_stats(mf.forest).rleaf == 0 && in_y(mf);
}

bool in_y_hat(const MarkedForest& mf) {
  return !forest_class(mf.forest).in_bar && forest_stats(mf.forest).rleaf == 0 && in_y(mf);
}

MarkedForest theta(const MarkedForest& mf) {
  LabelSets sets = label_sets(mf.forest);
  if (!sets.yleaf.empty()) throw DomainError("theta needs a forest without young leaves");
  LabelSet s1, s2;
  for (Label x : mf.marks) {
    if (sets.oint.count(x))
      s1.insert(x);
    else if (sets.si_star.count(x))
      s2.insert(x);
    else
      throw DomainError("mark " + std::to_string(x) + " is neither old internal nor a marked-eligible singleton");
  }
  return {phi_set(mf.forest, s1), std::move(s2)};
}

MarkedForest theta_prime(const MarkedForest& mf) {
  LabelSets sets = label_sets(mf.forest);
  if (!subset_of(mf.marks, sets.si_star))
    throw DomainError("theta' needs marks among the singletons other than a trailing one");
  MarkedForest out{phi_set(mf.forest, sets.yleaf), mf.marks};
  out.marks.insert(sets.yleaf.begin(), sets.yleaf.end());
  return out;
}

}  // namespace sf
