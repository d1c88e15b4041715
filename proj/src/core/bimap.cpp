#include "stirforest/bimap.hpp"

#include <algorithm>

namespace sf {

namespace {

using Word = std::span<const Label>;

std::vector<LabeledTree> xi_trees(Word w, unsigned k);

// Tree whose root b splits `parts` into k slots; a singleton when every part
// is empty.
LabeledTree tree_from_parts(Label b, const std::vector<Word>& parts, unsigned k) {
  LabeledTree t{b, {}};
  if (std::all_of(parts.begin(), parts.end(), [](Word p) { return p.empty(); })) return t;
  t.slots.reserve(k);
  for (Word p : parts) t.slots.push_back(xi_trees(p, k));
  return t;
}

std::vector<LabeledTree> xi_trees(Word w, unsigned k) {
  std::vector<LabeledTree> out;
  std::size_t start = 0;
  while (start < w.size()) {
    // The next right-to-left minimum is the smallest letter left in w; its
    // last copy closes the block.
    Label b = *std::min_element(w.begin() + start, w.end());
    std::size_t end = w.size();
    while (w[end - 1] != b) --end;
    std::vector<Word> parts;
    std::size_t from = start;
    for (std::size_t i = start; i < end; ++i) {
      if (w[i] == b) {
        parts.push_back(w.subspan(from, i - from));
        from = i + 1;
      }
    }
    if (parts.size() != k) throw InternalError("block of " + std::to_string(b) + " has the wrong multiplicity");
    out.push_back(tree_from_parts(b, parts, k));
    start = end;
  }
  return out;
}

void xi_inv_into(const std::vector<LabeledTree>& trees, unsigned k, std::vector<Label>& out);

void tree_word_into(const LabeledTree& t, unsigned k, bool root_first, std::vector<Label>& out) {
  if (t.is_leaf()) {
    out.insert(out.end(), k, t.label);
    return;
  }
  if (root_first) out.push_back(t.label);
  for (std::size_t j = 0; j < t.slots.size(); ++j) {
    xi_inv_into(t.slots[j], k, out);
    if (!root_first || j + 1 < t.slots.size()) out.push_back(t.label);
  }
}

void xi_inv_into(const std::vector<LabeledTree>& trees, unsigned k, std::vector<Label>& out) {
  for (const auto& t : trees) tree_word_into(t, k, false, out);
}

LabeledTree chi_span(Word w, unsigned k) {
  if (w.empty()) throw DomainError("chi needs a nonempty word");
  Label a = w.front();
  if (*std::min_element(w.begin(), w.end()) != a) throw DomainError("chi needs a word that starts with its minimum");
  std::vector<Word> parts;
  std::size_t from = 1;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == a) {
      parts.push_back(w.subspan(from, i - from));
      from = i + 1;
    }
  }
  parts.push_back(w.subspan(from));
  if (parts.size() != k) throw InternalError("root " + std::to_string(a) + " has the wrong multiplicity");
  LabeledTree t = tree_from_parts(a, parts, k);
  for (auto& slot : t.slots) {
    if (!std::is_sorted(slot.begin(), slot.end(),
                        [](const LabeledTree& x, const LabeledTree& y) { return x.label < y.label; }))
      throw InternalError("xi produced an unsorted slot");
  }
  return t;
}

void require_valid(const Forest& f) {
  auto v = validate_forest(f);
  if (!v.empty()) throw DomainError(v.front().message);
}

}  // namespace

Forest xi(const KStirlingWord& w) { return Forest{w.k(), xi_trees(w.letters(), w.k())}; }

KStirlingWord xi_inv(const Forest& f) {
  require_valid(f);
  std::vector<Label> out;
  xi_inv_into(f.trees, f.k, out);
  return KStirlingWord(std::move(out), f.k);
}

LabeledTree chi(const KStirlingWord& w) { return chi_span(w.letters(), w.k()); }

KStirlingWord chi_inv(const LabeledTree& t, unsigned k) {
  auto v = validate_tree(t, k);
  if (!v.empty()) throw DomainError(v.front().message);
  std::vector<Label> out;
  tree_word_into(t, k, true, out);
  return KStirlingWord(std::move(out), k);
}

Forest zeta(const KStirlingWord& w) {
  Word letters = w.letters();
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < letters.size(); ++i)
    if (starts.empty() || letters[i] < letters[starts.back()]) starts.push_back(i);
  Forest f{w.k(), {}};
  for (std::size_t b = starts.size(); b-- > 0;) {
    std::size_t end = b + 1 < starts.size() ? starts[b + 1] : letters.size();
    f.trees.push_back(chi_span(letters.subspan(starts[b], end - starts[b]), w.k()));
  }
  return f;
}

KStirlingWord zeta_inv(const Forest& f) {
  require_valid(f);
  std::vector<Label> out;
  for (auto it = f.trees.rbegin(); it != f.trees.rend(); ++it) tree_word_into(*it, f.k, true, out);
  return KStirlingWord(std::move(out), f.k);
}

}  // namespace sf
