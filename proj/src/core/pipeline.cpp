#include "stirforest/pipeline.hpp"

#include <algorithm>

namespace sf {

namespace {

bool contains_label(const LabeledTree& t, Label x) {
  if (t.label == x) return true;
  for (const auto& slot : t.slots)
    for (const auto& c : slot)
      if (contains_label(c, x)) return true;
  return false;
}

std::size_t tree_index(const Forest& f, Label x) {
  for (std::size_t i = 0; i < f.trees.size(); ++i)
    if (contains_label(f.trees[i], x)) return i;
  throw DomainError("label " + std::to_string(x) + " does not occur in the forest");
}

// End of the run started by the singleton T_i: the first later tree that is a
// singleton or the last tree.
std::size_t run_end(const Forest& f, std::size_t i) {
  std::size_t j = i + 1;
  while (j + 1 < f.trees.size() && !f.trees[j].is_leaf()) ++j;
  return j;
}

bool by_label(const LabeledTree& a, const LabeledTree& b) { return a.label < b.label; }

LabelSet all_removable(const Forest& f) {
  RemovableLabels r = removable_labels(f);
  LabelSet out = r.old_leaves;
  out.insert(r.young_leaves.begin(), r.young_leaves.end());
  return out;
}

}  // namespace

const char* to_string(PsiCase c) {
  switch (c) {
    case PsiCase::AttachToSingleton: return "attach";
    case PsiCase::MergeIntoLast: return "merge";
    case PsiCase::RemoveOldLeaf: return "remove-old";
    case PsiCase::RemoveYoungLeaf: return "remove-young";
    case PsiCase::Identity: return "identity";
  }
  return "?";
}

PsiCase psi_case(const Forest& f, Label x) {
  const std::size_t i = tree_index(f, x);
  const std::size_t m = f.trees.size();
  const LabeledTree& t = f.trees[i];
  if (t.label == x && t.is_leaf()) {
    if (i + 1 == m) return PsiCase::Identity;
    return f.trees[run_end(f, i)].is_leaf() ? PsiCase::AttachToSingleton : PsiCase::MergeIntoLast;
  }
  RemovableLabels r = removable_labels(f);
  bool old = r.old_leaves.count(x) > 0;
  bool young = r.young_leaves.count(x) > 0;
  if (old && young) throw InternalError("label " + std::to_string(x) + " is both a removable old and young leaf");
  if (old) return PsiCase::RemoveOldLeaf;
  if (young) return PsiCase::RemoveYoungLeaf;
  return PsiCase::Identity;
}

Forest psi(const Forest& f, Label x) {
  const PsiCase kind = psi_case(f, x);
  const unsigned k = f.k;
  const std::size_t i = tree_index(f, x);
  Forest out{k, {}};
  auto& trees = out.trees;
  switch (kind) {
    case PsiCase::Identity:
      return f;

    case PsiCase::AttachToSingleton: {
      const std::size_t j = run_end(f, i);
      trees.assign(f.trees.begin(), f.trees.begin() + i);
      LabeledTree head = f.trees[i];
      head.slots.resize(k);
      head.slots.back().assign(f.trees.begin() + i + 1, f.trees.begin() + j + 1);
      trees.push_back(std::move(head));
      trees.insert(trees.end(), f.trees.begin() + j + 1, f.trees.end());
      break;
    }

    case PsiCase::MergeIntoLast: {
      const std::size_t m = f.trees.size();
      trees.assign(f.trees.begin(), f.trees.begin() + i);
      LabeledTree last = f.trees[m - 1];
      const Label y = last.label;
      auto& slot = last.slots.back();
      slot.insert(slot.end(), f.trees.begin() + i + 1, f.trees.begin() + m - 1);
      if (std::any_of(slot.begin(), slot.end(), [&](const LabeledTree& s) { return s.label == y; }))
        throw InternalError("label " + std::to_string(y) + " collides inside the merged slot");
      slot.push_back(make_leaf(y));
      std::sort(slot.begin(), slot.end(), by_label);
      last.label = x;
      trees.push_back(std::move(last));
      break;
    }

    case PsiCase::RemoveOldLeaf: {
      trees.assign(f.trees.begin(), f.trees.begin() + i);
      LabeledTree root = f.trees[i];
      auto ejected = std::move(root.slots.back());
      root.slots.clear();
      trees.push_back(std::move(root));
      trees.insert(trees.end(), ejected.begin(), ejected.end());
      trees.insert(trees.end(), f.trees.begin() + i + 1, f.trees.end());
      break;
    }

    case PsiCase::RemoveYoungLeaf: {
      const std::size_t m = f.trees.size();
      if (i + 1 != m) throw InternalError("removable young leaf outside the last tree");
      trees.assign(f.trees.begin(), f.trees.begin() + i);
      LabeledTree image = phi(f.trees[i], x, k);
      for (std::size_t j = 0; j + 1 < k; ++j)
        if (!image.slots[j].empty()) throw InternalError("removable young leaf left a nonempty leading slot");
      auto& slot = image.slots.back();
      if (slot.empty() || slot.back().label != x) throw InternalError("removable young leaf is not last in its slot");
      LabeledTree promoted = std::move(slot.back());
      slot.pop_back();
      trees.push_back(make_leaf(image.label));
      trees.insert(trees.end(), std::make_move_iterator(slot.begin()), std::make_move_iterator(slot.end()));
      if (std::all_of(promoted.slots.begin(), promoted.slots.end(), [](const auto& s) { return s.empty(); }))
        promoted.slots.clear();
      trees.push_back(std::move(promoted));
      break;
    }
  }
  return out;
}

MarkedForest alpha_step(const MarkedForest& mf) {
  if (mf.marks.empty()) throw DomainError("alpha needs a nonempty mark set");
  for (Label s : mf.marks) {
    const auto& t = mf.forest.trees[tree_index(mf.forest, s)];
    if (t.label != s || !t.is_leaf()) throw DomainError("mark " + std::to_string(s) + " is not a singleton");
  }
  const Label x = *mf.marks.rbegin();
  MarkedForest out{psi(mf.forest, x), mf.marks};
  out.marks.erase(x);
  return out;
}

MarkedForest beta_step(const MarkedForest& mf) {
  LabelSet removable = all_removable(mf.forest);
  if (removable.empty()) throw DomainError("beta needs a removable leaf");
  const Label x = *removable.begin();
  const Label y = mf.forest.trees[tree_index(mf.forest, x)].label;
  MarkedForest out{psi(mf.forest, x), mf.marks};
  if (!out.marks.insert(y).second) throw InternalError("beta re-marked " + std::to_string(y));
  return out;
}

Forest gamma_map(const MarkedForest& mf) {
  if (!in_y(mf)) throw DomainError("gamma needs marks among the singletons other than a trailing one");
  MarkedForest cur = mf;
  while (!cur.marks.empty()) cur = alpha_step(cur);
  return cur.forest;
}

MarkedForest gamma_prime_map(const Forest& f, std::vector<BetaMove>* trajectory) {
  MarkedForest cur{f, {}};
  for (;;) {
    LabelSet removable = all_removable(cur.forest);
    if (removable.empty()) return cur;
    const Label x = *removable.begin();
    const Label y = cur.forest.trees[tree_index(cur.forest, x)].label;
    cur = beta_step(cur);
    if (trajectory) trajectory->push_back({x, y});
  }
}

Forest main_bijection(const MarkedForest& mf) {
  if (!in_x(mf)) throw DomainError("the pair is outside the X family");
  return gamma_map(theta(mf));
}

}  // namespace sf
