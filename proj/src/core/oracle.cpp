#include "stirforest/oracle.hpp"

#include "stirforest/bimap.hpp"
#include "stirforest/gfs.hpp"
#include "stirforest/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <functional>
#include <map>
#include <thread>
#include <tuple>

namespace sf {

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

IntPolynomial from_histogram(const std::vector<std::uint64_t>& hist) {
  std::vector<BigInt> coeffs(hist.begin(), hist.end());
  return IntPolynomial(std::move(coeffs));
}

std::vector<BigInt> trimmed(const std::vector<std::uint64_t>& hist) {
  std::vector<BigInt> out(hist.begin(), hist.end());
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

void bump(std::vector<std::uint64_t>& hist, std::size_t i) {
  if (hist.size() <= i) hist.resize(i + 1, 0);
  ++hist[i];
}

bool is_word_family(Family f) {
  return f == Family::Q || f == Family::QBar || f == Family::QHat || f == Family::QTilde;
}

unsigned lleaf_minus_si(const Forest& f) {
  unsigned leaves = 0, si = 0;
  for (const auto& t : f.trees) {
    leaves += tree_lleaf(t);
    if (t.is_leaf()) ++si;
  }
  return leaves - si;
}

unsigned forest_lleaf(const Forest& f) {
  unsigned leaves = 0;
  for (const auto& t : f.trees) leaves += tree_lleaf(t);
  return leaves;
}

BigInt product_count(unsigned n, unsigned k) {
  BigInt out = 1;
  for (unsigned i = 0; i < n; ++i) out *= BigInt(i) * k + 1;
  return out;
}

void require_in_guard(unsigned n, unsigned k, const Limits& limits) {
  if (k == 0) throw DomainError("k must be positive");
  if (k_stirling_count(n, k) > limits.max_objects)
    throw LimitError("(n, k) = (" + std::to_string(n) + ", " + std::to_string(k) + ") exceeds the ceiling of " +
                     std::to_string(limits.max_objects));
}

// ---------------------------------------------------------------------------
// Report helpers

class Tally {
 public:
  template <class Check, class Describe>
  void check(Check&& ok, Describe&& describe) {
    ++checked_;
    bool good = false;
    std::string error;
    try {
      good = ok();
    } catch (const std::exception& e) {
      error = e.what();
    }
    if (good) {
      ++passed_;
    } else if (!witness_) {
      witness_ = describe();
      if (!error.empty()) *witness_ += " (" + error + ")";
    }
  }

  IdentityReport report(std::string identity, unsigned n, unsigned k) const {
    IdentityReport r;
    r.identity = std::move(identity);
    r.n = n;
    r.k = k;
    r.left = IntPolynomial({static_cast<long long>(checked_)});
    r.right = IntPolynomial({static_cast<long long>(passed_)});
    r.pass = checked_ == passed_;
    if (!r.pass) r.witness = witness_.value_or("unrecorded failure");
    return r;
  }

 private:
  std::uint64_t checked_ = 0;
  std::uint64_t passed_ = 0;
  std::optional<std::string> witness_;
};

IdentityReport compare(std::string identity, unsigned n, unsigned k, IntPolynomial left, IntPolynomial right) {
  IdentityReport r;
  r.identity = std::move(identity);
  r.n = n;
  r.k = k;
  r.pass = left == right;
  if (!r.pass) r.witness = "left " + left.to_text() + " differs from right " + right.to_text();
  r.left = std::move(left);
  r.right = std::move(right);
  return r;
}

std::vector<std::vector<Label>> enumerate_words(unsigned n, unsigned k, const Limits& limits) {
  std::vector<std::vector<Label>> out;
  for_each_k_stirling(n, k, [&](std::span<const Label> w) { out.emplace_back(w.begin(), w.end()); }, limits);
  return out;
}

// Facts about one forest used by several suites.
struct Facts {
  ForestStats stats;
  bool bar = false;
  bool star = false;
  LabelSets sets;
};

Facts facts_of(const Forest& f) {
  Facts out;
  out.stats = forest_stats(f);
  out.bar = forest_in_bar(f);
  out.star = out.stats.yleaf == 0 && out.stats.rleaf == 0;
  out.sets = label_sets(f);
  return out;
}

std::vector<Facts> facts_of(const std::vector<Forest>& forests) {
  std::vector<Facts> out;
  out.reserve(forests.size());
  for (const auto& f : forests) out.push_back(facts_of(f));
  return out;
}

template <class Fn>
void for_each_subset(const LabelSet& base, Fn&& fn) {
  std::vector<Label> items(base.begin(), base.end());
  const std::size_t count = std::size_t{1} << items.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    LabelSet s;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (mask >> i & 1) s.insert(items[i]);
    fn(s);
  }
}

LabelSet set_union(const LabelSet& a, const LabelSet& b) {
  LabelSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

// X pairs of one class: bar uses Oint*, hat uses Oint.
std::vector<MarkedForest> x_pairs(const std::vector<Forest>& forests, const std::vector<Facts>& facts, bool bar) {
  std::vector<MarkedForest> out;
  for (std::size_t i = 0; i < forests.size(); ++i) {
    const Facts& fa = facts[i];
    if (fa.bar != bar || !fa.star) continue;
    LabelSet base = set_union(bar ? fa.sets.oint_star : fa.sets.oint, fa.sets.si_star);
    for_each_subset(base, [&](const LabelSet& s) { out.push_back({forests[i], s}); });
  }
  return out;
}

std::vector<MarkedForest> y_pairs(const std::vector<Forest>& forests, const std::vector<Facts>& facts, bool bar) {
  std::vector<MarkedForest> out;
  for (std::size_t i = 0; i < forests.size(); ++i) {
    const Facts& fa = facts[i];
    if (fa.bar != bar || fa.stats.rleaf != 0) continue;
    for_each_subset(fa.sets.si_star, [&](const LabelSet& s) { out.push_back({forests[i], s}); });
  }
  return out;
}

std::string describe(const MarkedForest& mf) { return serialize_marked(mf); }

// ---------------------------------------------------------------------------
// Polynomial suite

std::vector<IdentityReport> polynomial_cell(unsigned n, unsigned k, const Limits& limits) {
  std::vector<IdentityReport> out;
  IntPolynomial egf = egf_one_over_k_eulerian(k, n)[n];
  IntPolynomial ap = distribution(Family::Q, Statistic::Ap, n, k, limits);
  IntPolynomial lap = distribution(Family::Q, Statistic::Lap, n, k, limits);
  out.push_back(compare("poly.egf-vs-ap", n, k, egf, ap));
  if (n <= limits.max_perm_n) out.push_back(compare("poly.egf-vs-exc-cyc", n, k, egf, exc_cyc_polynomial(n, k, limits)));
  out.push_back(compare("poly.count", n, k, IntPolynomial(std::vector<BigInt>{egf.sum()}),
                        IntPolynomial(std::vector<BigInt>{product_count(n, k)})));
  out.push_back(compare("poly.lap-reciprocity", n, k, lap, ap.reversed(n)));
  if (k == 1 && n <= limits.max_perm_n) out.push_back(compare("poly.k1-descents", n, k, egf, descent_polynomial(n, limits)));

  auto words = enumerate_words(n, k, limits);
  Tally tally;
  for (const auto& w : words) {
    tally.check(
        [&] {
          unsigned a = stat_ap(w, k), l = stat_lap(w, k);
          bool plateau = word_class(w, k).starts_with_plateau;
          return is_k_stirling(w, k) && l - a == (plateau ? 1u : 0u);
        },
        [&] { return format_word(w); });
  }
  out.push_back(tally.report("poly.lap-minus-ap", n, k));
  return out;
}

// ---------------------------------------------------------------------------
// Bijection suite

std::vector<IdentityReport> bijection_cell(unsigned n, unsigned k, const Limits& limits) {
  std::vector<IdentityReport> out;
  auto words = enumerate_words(n, k, limits);
  auto forests = enumerate_forests(n, k, limits);
  auto trees = enumerate_trees(n, k, limits);
  std::sort(forests.begin(), forests.end());
  std::sort(trees.begin(), trees.end());

  Tally xi_tally, chi_tally, zeta_tally, zeta_class, generator;
  std::vector<Forest> xi_images, zeta_images;
  std::vector<LabeledTree> chi_images;
  for (const auto& letters : words) {
    KStirlingWord w(letters, k);
    auto text = [&] { return w.to_text(); };
    xi_tally.check(
        [&] {
          Forest f = xi(w);
          bool ok = validate_forest(f).empty() && xi_inv(f) == w && stat_lap(w) == forest_lleaf(f);
          xi_images.push_back(std::move(f));
          return ok;
        },
        text);
    zeta_tally.check(
        [&] {
          Forest f = zeta(w);
          bool ok = validate_forest(f).empty() && zeta_inv(f) == w && stat_ap(w) == lleaf_minus_si(f);
          zeta_images.push_back(std::move(f));
          return ok;
        },
        text);
    zeta_class.check([&] { return word_class(w).in_bar == forest_in_bar(zeta(w)); }, text);
    generator.check([&] { return std::binary_search(forests.begin(), forests.end(), zeta(w)); }, text);
    if (!letters.empty() && letters.front() == 1) {
      chi_tally.check(
          [&] {
            LabeledTree t = chi(w);
            bool lead_empty = t.is_leaf() || std::all_of(t.slots.begin(), t.slots.end() - 1,
                                                         [](const auto& s) { return s.empty(); });
            // A lone letter has ap 0 but its tree is a single labeled leaf.
            bool stats = n < 2 || (stat_ap(w) == tree_lleaf(t) && word_class(w).starts_with_plateau == lead_empty);
            bool ok = validate_tree(t, k).empty() && chi_inv(t, k) == w && stats;
            chi_images.push_back(std::move(t));
            return ok;
          },
          text);
    }
  }
  for (const auto& f : forests) {
    auto text = [&] { return serialize_forest(f); };
    xi_tally.check([&] { return xi(xi_inv(f)) == f; }, text);
    zeta_tally.check([&] { return zeta(zeta_inv(f)) == f; }, text);
  }
  for (const auto& t : trees) chi_tally.check([&] { return chi(chi_inv(t, k)) == t; }, [&] { return serialize_tree(t); });

  // Bijectivity: the sorted image lists must coincide with the generator output.
  std::sort(xi_images.begin(), xi_images.end());
  std::sort(zeta_images.begin(), zeta_images.end());
  std::sort(chi_images.begin(), chi_images.end());
  xi_tally.check([&] { return xi_images == forests; }, [] { return std::string("xi image differs from F_n(k)"); });
  zeta_tally.check([&] { return zeta_images == forests; }, [] { return std::string("zeta image differs from F_n(k)"); });
  chi_tally.check([&] { return chi_images == trees; }, [] { return std::string("chi image differs from T_n(k)"); });

  // zeta maps the bar words onto exactly the bar forests.
  std::uint64_t bar_words = 0, bar_forests = 0;
  for (const auto& w : words) bar_words += word_class(w, k).in_bar;
  for (const auto& f : forests) bar_forests += forest_in_bar(f);
  zeta_class.check([&] { return bar_words == bar_forests; },
                   [&] { return std::to_string(bar_words) + " bar words vs " + std::to_string(bar_forests) + " bar forests"; });

  out.push_back(xi_tally.report("bij.xi", n, k));
  out.push_back(chi_tally.report("bij.chi", n, k));
  out.push_back(zeta_tally.report("bij.zeta", n, k));
  out.push_back(zeta_class.report("bij.zeta-class", n, k));
  out.push_back(generator.report("bij.zeta-generator", n, k));
  out.push_back(compare("bij.ap-transfer", n, k, distribution(Family::Q, Statistic::Ap, n, k, limits),
                        distribution(Family::F, Statistic::LleafMinusSi, n, k, limits)));
  out.push_back(compare("bij.bar-transfer", n, k, distribution(Family::QBar, Statistic::Ap, n, k, limits),
                        distribution(Family::FBar, Statistic::LleafMinusSi, n, k, limits)));
  return out;
}

// ---------------------------------------------------------------------------
// Group action suite

std::map<Label, NodeClass> classes_of(const LabeledTree& t, unsigned k) {
  Forest f{k, {t}};
  std::map<Label, NodeClass> out;
  for (Label x : tree_labels(t)) out[x] = classify_label(f, x);
  return out;
}

LabeledTree representative_by_fixpoint(LabeledTree t, unsigned k) {
  for (;;) {
    auto sets = label_sets(Forest{k, {t}});
    if (sets.yleaf.empty()) return t;
    t = phi(t, *sets.yleaf.begin(), k);
  }
}

std::vector<IdentityReport> theta_reports(unsigned n, unsigned k, const std::vector<Forest>& forests,
                                          const std::vector<Facts>& facts) {
  std::vector<IdentityReport> out;
  for (bool bar : {true, false}) {
    auto xs = x_pairs(forests, facts, bar);
    auto ys = y_pairs(forests, facts, bar);
    std::sort(ys.begin(), ys.end());
    Tally tally;
    std::vector<MarkedForest> images;
    images.reserve(xs.size());
    for (const auto& mf : xs) {
      tally.check(
          [&] {
            MarkedForest img = theta(mf);
            LabelSets before = label_sets(mf.forest);
            LabelSets after = label_sets(img.forest);
            std::size_t s1 = mf.marks.size() - img.marks.size();
            bool member = bar ? in_y_bar(img) : in_y_hat(img);
            bool shift = lleaf_minus_si(img.forest) == lleaf_minus_si(mf.forest) + s1;
            bool ok = member && shift && after.si_star == before.si_star && theta_prime(img) == mf;
            images.push_back(std::move(img));
            return ok;
          },
          [&] { return describe(mf); });
    }
    for (const auto& mf : ys) {
      tally.check(
          [&] {
            MarkedForest pre = theta_prime(mf);
            return (bar ? in_x_bar(pre) : in_x_hat(pre)) && theta(pre) == mf;
          },
          [&] { return describe(mf); });
    }
    std::sort(images.begin(), images.end());
    tally.check([&] { return images == ys; },
                [&] {
                  return "theta image has " + std::to_string(images.size()) + " pairs, target has " +
                         std::to_string(ys.size());
                });
    out.push_back(tally.report(bar ? "gfs.theta-bar" : "gfs.theta-hat", n, k));
  }
  return out;
}

std::vector<IdentityReport> gfs_cell(unsigned n, unsigned k, const Limits& limits) {
  std::vector<IdentityReport> out;
  auto trees = enumerate_trees(n, k, limits);

  Tally involution, commutation, types, representative, tree_oint;
  std::map<LabeledTree, std::vector<const LabeledTree*>> by_rep;
  IntPolynomial census;
  for (const auto& t : trees) {
    const auto labels = tree_labels(t);
    for (Label x : labels) {
      auto text = [&] { return serialize_tree(t) + " at " + std::to_string(x); };
      involution.check([&] { return phi(phi(t, x, k), x, k) == t; }, text);
      types.check(
          [&] {
            PhiKind kind = phi_kind(t, x);
            LabeledTree img = phi(t, x, k);
            auto before = classes_of(t, k), after = classes_of(img, k);
            for (const auto& [label, cls] : before) {
              NodeClass expect = cls;
              if (label == x && kind == PhiKind::OldInternal) expect = NodeClass::YoungLeaf;
              if (label == x && kind == PhiKind::YoungLeaf) expect = NodeClass::OldInternal;
              if (after.at(label) != expect) return false;
            }
            return kind != PhiKind::Fixed || img == t;
          },
          text);
      for (Label y : labels) {
        if (y <= x) continue;
        commutation.check([&] { return phi(phi(t, x, k), y, k) == phi(phi(t, y, k), x, k); },
                          [&] { return serialize_tree(t) + " at " + std::to_string(x) + "," + std::to_string(y); });
      }
    }
    LabeledTree rep = orbit_representative(t, k);
    representative.check([&] { return representative_by_fixpoint(t, k) == rep; },
                         [&] { return serialize_tree(t); });
    by_rep[rep].push_back(&t);
    if (n >= 2) {
      ForestStats s = forest_stats(Forest{k, {t}});
      if (s.yleaf == 0)
        tree_oint.check([&] { return s.oint + 2 * s.oleaf == n; }, [&] { return serialize_tree(t); });
    }
  }
  for (const auto& [rep, members] : by_rep) {
    auto text = [&] { return serialize_tree(rep); };
    representative.check(
        [&] {
          ForestStats rs = forest_stats(Forest{k, {rep}});
          std::size_t yleaf_free = 0;
          for (const auto* m : members) yleaf_free += forest_stats(Forest{k, {*m}}).yleaf == 0;
          auto orb = orbit(rep, k);
          std::vector<LabeledTree> group;
          for (const auto* m : members) group.push_back(*m);
          std::sort(group.begin(), group.end());
          std::sort(orb.begin(), orb.end());
          return yleaf_free == 1 && rs.yleaf == 0 && orb == group && members.size() == (std::size_t{1} << rs.oint);
        },
        text);
    ForestStats rs = forest_stats(Forest{k, {rep}});
    census += IntPolynomial::monomial(rs.oleaf) * IntPolynomial::one_plus_x_pow(rs.oint);
  }

  out.push_back(involution.report("gfs.phi-involution", n, k));
  out.push_back(commutation.report("gfs.phi-commutation", n, k));
  out.push_back(types.report("gfs.phi-types", n, k));
  out.push_back(representative.report("gfs.orbit-representative", n, k));
  if (n >= 2) {
    out.push_back(compare("gfs.orbit-census", n, k, census, distribution(Family::T, Statistic::Lleaf, n, k, limits)));
    out.push_back(tree_oint.report("gfs.tree-oint", n, k));
  }

  auto forests = enumerate_forests(n, k, limits);
  auto facts = facts_of(forests);
  auto theta_out = theta_reports(n, k, forests, facts);
  out.insert(out.end(), theta_out.begin(), theta_out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Pipeline suite

int psi_shift(PsiCase c) {
  switch (c) {
    case PsiCase::AttachToSingleton:
    case PsiCase::MergeIntoLast: return 1;
    case PsiCase::RemoveOldLeaf:
    case PsiCase::RemoveYoungLeaf: return -1;
    case PsiCase::Identity: return 0;
  }
  return 0;
}

// No removable leaf in any tree strictly left of the singleton y.
bool nothing_removable_left_of(const Forest& f, Label y) {
  RemovableLabels r = removable_labels(f);
  LabelSet all = set_union(r.old_leaves, r.young_leaves);
  for (const auto& t : f.trees) {
    if (t.label == y) return true;
    for (Label x : tree_labels(t))
      if (all.count(x)) return false;
  }
  return false;
}

std::vector<IdentityReport> pipeline_cell(unsigned n, unsigned k, const Limits& limits) {
  std::vector<IdentityReport> out;
  auto forests = enumerate_forests(n, k, limits);
  auto facts = facts_of(forests);

  Tally shift, psi_class, inverse_steps, observation, gamma_after_prime, prime_after_gamma;
  for (const auto& f : forests) {
    const unsigned base = lleaf_minus_si(f);
    const bool bar = forest_in_bar(f);
    const auto labels = forest_labels(f);
    RemovableLabels removable = removable_labels(f);
    const Label least_young = removable.young_leaves.empty() ? 0 : *removable.young_leaves.begin();
    for (Label x : labels) {
      auto text = [&] { return serialize_forest(f) + " at " + std::to_string(x); };
      Forest img;
      psi_class.check(
          [&] {
            img = psi(f, x);
            return validate_forest(img).empty() && forest_labels(img) == labels && forest_in_bar(img) == bar;
          },
          text);
      // At a removable young leaf other than the least one, the ejected
      // young leaves turn into singletons and the drop exceeds one.
      if (removable.young_leaves.count(x) && x != least_young) continue;
      shift.check(
          [&] {
            return static_cast<int>(lleaf_minus_si(img)) - static_cast<int>(base) == psi_shift(psi_case(f, x));
          },
          text);
    }
    // Beta trajectory from (F, {}), each step undone by alpha.
    MarkedForest cur{f, {}};
    std::vector<BetaMove> moves;
    MarkedForest end = gamma_prime_map(f, &moves);
    for (const auto& mv : moves) {
      MarkedForest next = beta_step(cur);
      inverse_steps.check([&] { return alpha_step(next) == cur; }, [&] { return describe(cur); });
      observation.check([&] { return nothing_removable_left_of(next.forest, mv.y); },
                        [&] { return describe(next) + " after removing " + std::to_string(mv.x); });
      cur = std::move(next);
    }
    gamma_after_prime.check(
        [&] {
          bool member = bar ? in_y_bar(end) : in_y_hat(end);
          return cur == end && member && gamma_map(end) == f;
        },
        [&] { return serialize_forest(f); });
  }

  Tally main_bar, main_hat;
  for (bool bar : {true, false}) {
    for (const auto& mf : y_pairs(forests, facts, bar)) {
      MarkedForest cur = mf;
      while (!cur.marks.empty()) {
        MarkedForest next = alpha_step(cur);
        inverse_steps.check([&] { return beta_step(next) == cur; }, [&] { return describe(cur); });
        cur = std::move(next);
      }
      prime_after_gamma.check(
          [&] {
            Forest g = gamma_map(mf);
            return forest_in_bar(g) == bar && lleaf_minus_si(g) == lleaf_minus_si(mf.forest) + mf.marks.size() &&
                   gamma_prime_map(g) == mf;
          },
          [&] { return describe(mf); });
    }

    Tally& tally = bar ? main_bar : main_hat;
    std::vector<Forest> images;
    std::vector<std::uint64_t> left_hist, right_hist;
    for (const auto& mf : x_pairs(forests, facts, bar)) {
      tally.check(
          [&] {
            Forest g = main_bijection(mf);
            bool ok = forest_in_bar(g) == bar && lleaf_minus_si(g) == lleaf_minus_si(mf.forest) + mf.marks.size();
            bump(right_hist, lleaf_minus_si(mf.forest) + mf.marks.size());
            images.push_back(std::move(g));
            return ok;
          },
          [&] { return describe(mf); });
    }
    std::vector<Forest> target;
    for (const auto& f : forests)
      if (forest_in_bar(f) == bar) {
        target.push_back(f);
        bump(left_hist, lleaf_minus_si(f));
      }
    std::sort(images.begin(), images.end());
    std::sort(target.begin(), target.end());
    tally.check([&] { return images == target; },
                [&] {
                  return "image has " + std::to_string(images.size()) + " forests, class has " +
                         std::to_string(target.size());
                });
    out.push_back(compare(bar ? "pipe.main-distribution-bar" : "pipe.main-distribution-hat", n, k,
                          from_histogram(left_hist), from_histogram(right_hist)));
  }

  out.push_back(shift.report("pipe.psi-shift", n, k));
  out.push_back(psi_class.report("pipe.psi-class", n, k));
  out.push_back(inverse_steps.report("pipe.alpha-beta-inverse", n, k));
  out.push_back(observation.report("pipe.beta-clear-left", n, k));
  out.push_back(gamma_after_prime.report("pipe.gamma-after-gamma-prime", n, k));
  out.push_back(prime_after_gamma.report("pipe.gamma-prime-after-gamma", n, k));
  out.push_back(main_bar.report("pipe.main-bijection-bar", n, k));
  out.push_back(main_hat.report("pipe.main-bijection-hat", n, k));
  return out;
}

// ---------------------------------------------------------------------------
// Theorem suite

IntPolynomial as_polynomial(const std::vector<BigInt>& v) { return IntPolynomial(v); }

std::vector<IdentityReport> theorem_cell(unsigned n, unsigned k, const Limits& limits) {
  std::vector<IdentityReport> out;
  IntPolynomial a_n = egf_one_over_k_eulerian(k, n)[n];
  SymmetricDecomposition d = symmetric_decompose(a_n, n - 1);
  IntPolynomial xb = d.b.shifted(1);

  auto forests = enumerate_forests(n, k, limits);
  std::vector<std::uint64_t> bar_hist, hat_hist, gbar, ghat;
  Tally partition, bar_relation, hat_relation, shortcut;
  for (const auto& f : forests) {
    Facts fa = facts_of(f);
    const ForestStats& s = fa.stats;
    bump(fa.bar ? bar_hist : hat_hist, s.lleaf - s.si);
    if (fa.star) bump(fa.bar ? gbar : ghat, s.oleaf);
    auto text = [&] { return serialize_forest(f); };
    partition.check([&] { return s.oleaf + s.yleaf + s.si == s.lleaf; }, text);
    shortcut.check([&] { return removable_young_shortcut(f) == removable_labels(f).young_leaves; }, text);
    if (fa.star && fa.bar)
      bar_relation.check(
          [&] { return fa.sets.oint_star.size() + fa.sets.si_star.size() + 2 * s.oleaf + 1 == n; }, text);
    if (fa.star && !fa.bar)
      hat_relation.check([&] { return fa.sets.oint.size() + fa.sets.si.size() + 2 * s.oleaf == n; }, text);
  }
  IntPolynomial fbar = from_histogram(bar_hist), fhat = from_histogram(hat_hist);
  GammaExpansion gb{n - 1, trimmed(gbar)}, gh{n, trimmed(ghat)};

  out.push_back(compare("thm.bar-decomposition", n, k, fbar, d.a));
  out.push_back(compare("thm.hat-decomposition", n, k, fhat, xb));
  out.push_back(compare("thm.bar-gamma", n, k, fbar, gamma_compose(gb)));
  out.push_back(compare("thm.hat-gamma", n, k, fhat, gamma_compose(gh)));
  out.push_back(compare("thm.bar-gamma-expand", n, k, as_polynomial(gb.gamma),
                        as_polynomial(gamma_expand(d.a, n - 1).gamma)));
  out.push_back(compare("thm.hat-gamma-expand", n, k, as_polynomial(gh.gamma), as_polynomial(gamma_expand(xb, n).gamma)));
  out.push_back(compare("thm.qbar-ap", n, k, distribution(Family::QBar, Statistic::Ap, n, k, limits), d.a));
  out.push_back(compare("thm.qhat-ap", n, k, distribution(Family::QHat, Statistic::Ap, n, k, limits), xb));
  out.push_back(compare("thm.count-forests", n, k, IntPolynomial(std::vector<BigInt>{BigInt(forests.size())}),
                        IntPolynomial(std::vector<BigInt>{product_count(n, k)})));
  out.push_back(partition.report("thm.leaf-partition", n, k));
  out.push_back(bar_relation.report("thm.bar-star-relation", n, k));
  out.push_back(hat_relation.report("thm.hat-star-relation", n, k));
  out.push_back(shortcut.report("thm.removable-young-shortcut", n, k));

  if (n >= 2) {
    IntPolynomial c = distribution(Family::QTilde, Statistic::Ap, n, k, limits);
    auto gt = gamma_census_tilde(n, k, limits);
    out.push_back(compare("thm.tilde-trees", n, k, distribution(Family::T, Statistic::Lleaf, n, k, limits), c));
    out.push_back(compare("thm.tilde-gamma", n, k, gamma_compose(GammaExpansion{n, gt}), c));
    out.push_back(compare("thm.tilde-gamma-expand", n, k, as_polynomial(gt), as_polynomial(gamma_expand(c, n).gamma)));
  }
  if (k == 1 && n <= limits.max_perm_n) {
    require_in_guard(n + 1, 1, limits);
    out.push_back(compare("thm.k1-reduction", n, k, distribution(Family::QTilde, Statistic::Ap, n + 1, 1, limits),
                          descent_polynomial(n, limits).shifted(1)));
  }
  return out;
}

using CellFn = std::vector<IdentityReport> (*)(unsigned, unsigned, const Limits&);

CellFn cell_for(Suite s) {
  switch (s) {
    case Suite::Polynomials: return polynomial_cell;
    case Suite::Bijections: return bijection_cell;
    case Suite::Gfs: return gfs_cell;
    case Suite::Pipeline: return pipeline_cell;
    case Suite::Theorems: return theorem_cell;
  }
  return nullptr;
}

}  // namespace

const char* to_string(Family f) {
  switch (f) {
    case Family::Q: return "Q";
    case Family::QBar: return "Qbar";
    case Family::QHat: return "Qhat";
    case Family::QTilde: return "Qtilde";
    case Family::F: return "F";
    case Family::FBar: return "Fbar";
    case Family::FHat: return "Fhat";
    case Family::T: return "T";
  }
  return "?";
}

const char* to_string(Statistic s) {
  switch (s) {
    case Statistic::Ap: return "ap";
    case Statistic::Lap: return "lap";
    case Statistic::Lleaf: return "lleaf";
    case Statistic::LleafMinusSi: return "lleaf-si";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  const std::string t = lower(text);
  for (Family f : {Family::Q, Family::QBar, Family::QHat, Family::QTilde, Family::F, Family::FBar, Family::FHat,
                   Family::T})
    if (t == lower(to_string(f))) return f;
  throw DomainError("unknown family '" + std::string(text) + "'");
}

Statistic parse_statistic(std::string_view text) {
  const std::string t = lower(text);
  for (Statistic s : {Statistic::Ap, Statistic::Lap, Statistic::Lleaf, Statistic::LleafMinusSi})
    if (t == to_string(s)) return s;
  throw DomainError("unknown statistic '" + std::string(text) + "'");
}

IntPolynomial distribution(Family family, Statistic statistic, unsigned n, unsigned k, const Limits& limits) {
  require_in_guard(n, k, limits);
  const bool word_stat = statistic == Statistic::Ap || statistic == Statistic::Lap;
  if (is_word_family(family) != word_stat)
    throw DomainError(std::string("statistic ") + to_string(statistic) + " does not apply to family " +
                      to_string(family));
  std::vector<std::uint64_t> hist;
  if (word_stat) {
    for_each_k_stirling(
        n, k,
        [&](std::span<const Label> w) {
          WordClass c = word_class(w, k);
          bool keep = family == Family::Q || (family == Family::QBar && c.in_bar) ||
                      (family == Family::QHat && !c.in_bar) || (family == Family::QTilde && c.in_tilde);
          if (keep) bump(hist, statistic == Statistic::Ap ? stat_ap(w, k) : stat_lap(w, k));
        },
        limits);
  } else if (family == Family::T) {
    for (const auto& t : enumerate_trees(n, k, limits))
      bump(hist, tree_lleaf(t) - (statistic == Statistic::LleafMinusSi && t.is_leaf() ? 1 : 0));
  } else {
    for (const auto& f : enumerate_forests(n, k, limits)) {
      bool bar = forest_in_bar(f);
      if ((family == Family::FBar && !bar) || (family == Family::FHat && bar)) continue;
      bump(hist, statistic == Statistic::Lleaf ? forest_lleaf(f) : lleaf_minus_si(f));
    }
  }
  return from_histogram(hist);
}

GammaCensus gamma_census_bar_hat(unsigned n, unsigned k, const Limits& limits) {
  require_in_guard(n, k, limits);
  std::vector<std::uint64_t> bar, hat;
  for (const auto& f : enumerate_forests(n, k, limits)) {
    ForestStats s = forest_stats(f);
    if (s.yleaf != 0 || s.rleaf != 0) continue;
    bump(forest_in_bar(f) ? bar : hat, s.oleaf);
  }
  return {trimmed(bar), trimmed(hat)};
}

std::vector<BigInt> gamma_census_tilde(unsigned n, unsigned k, const Limits& limits) {
  if (n < 2) throw DomainError("the tree census needs n >= 2");
  require_in_guard(n, k, limits);
  std::vector<std::uint64_t> hist;
  for (const auto& t : enumerate_trees(n, k, limits)) {
    ForestStats s = forest_stats(Forest{k, {t}});
    if (s.yleaf == 0) bump(hist, s.lleaf);
  }
  return trimmed(hist);
}

IntPolynomial one_over_k_eulerian(unsigned n, unsigned k, Route route, const Limits& limits) {
  if (k == 0) throw DomainError("k must be positive");
  switch (route) {
    case Route::Ap: return distribution(Family::Q, Statistic::Ap, n, k, limits);
    case Route::ExcCyc: return exc_cyc_polynomial(n, k, limits);
    case Route::Egf: return egf_one_over_k_eulerian(k, n)[n];
  }
  throw DomainError("unknown route");
}

std::size_t part_center(char which, unsigned n) {
  switch (which) {
    case 'a':
      if (n == 0) throw DomainError("the symmetric part needs n >= 1");
      return n - 1;
    case 'b':
    case 'c': return n;
    default: throw DomainError(std::string("no gamma expansion for part '") + which + "'");
  }
}

IntPolynomial part_polynomial(char which, unsigned n, unsigned k, Route route, const Limits& limits) {
  switch (which) {
    case 'A': return one_over_k_eulerian(n, k, route, limits);
    case 'a':
    case 'b': {
      if (n == 0) throw DomainError("the decomposition of A_n needs n >= 1");
      SymmetricDecomposition d = symmetric_decompose(one_over_k_eulerian(n, k, route, limits), n - 1);
      return which == 'a' ? d.a : d.b.shifted(1);
    }
    case 'c': return distribution(Family::QTilde, Statistic::Ap, n, k, limits);
    default: throw DomainError(std::string("unknown polynomial '") + which + "'");
  }
}

const char* to_string(Suite s) {
  switch (s) {
    case Suite::Polynomials: return "polynomials";
    case Suite::Bijections: return "bijections";
    case Suite::Gfs: return "gfs";
    case Suite::Pipeline: return "pipeline";
    case Suite::Theorems: return "theorems";
  }
  return "?";
}

Suite parse_suite(std::string_view text) {
  const std::string t = lower(text);
  for (Suite s : all_suites())
    if (t == to_string(s)) return s;
  throw DomainError("unknown suite '" + std::string(text) + "'");
}

std::vector<Suite> all_suites() {
  return {Suite::Polynomials, Suite::Bijections, Suite::Gfs, Suite::Pipeline, Suite::Theorems};
}

std::vector<IdentityReport> run_suite(unsigned n_max, unsigned k_max, const std::vector<Suite>& suites,
                                      const Limits& limits) {
  struct Cell {
    Suite suite;
    unsigned n, k;
  };
  std::vector<Cell> cells;
  for (Suite s : suites)
    for (unsigned k = 1; k <= k_max; ++k)
      for (unsigned n = 1; n <= n_max; ++n) {
        require_in_guard(n, k, limits);
        cells.push_back({s, n, k});
      }

  // Largest cells first so the tail of the schedule is short.
  std::vector<std::size_t> order(cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return k_stirling_count(cells[a].n, cells[a].k) > k_stirling_count(cells[b].n, cells[b].k);
  });

  std::vector<std::vector<IdentityReport>> results(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < order.size();) {
      const Cell& c = cells[order[i]];
      try {
        results[order[i]] = cell_for(c.suite)(c.n, c.k, limits);
      } catch (const std::exception& e) {
        IdentityReport r;
        r.identity = std::string(to_string(c.suite)) + ".cell";
        r.n = c.n;
        r.k = c.k;
        r.left = IntPolynomial{1};
        r.pass = false;
        r.witness = e.what();
        results[order[i]] = {r};
      }
    }
  };
  unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), cells.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<IdentityReport> out;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(out));
  std::stable_sort(out.begin(), out.end(), [](const IdentityReport& a, const IdentityReport& b) {
    return std::tie(a.identity, a.n, a.k) < std::tie(b.identity, b.n, b.k);
  });
  return out;
}

std::string json_array(const std::vector<BigInt>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += values[i].str();
  }
  out += ']';
  return out;
}

std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

std::string to_json(const IdentityReport& r) {
  std::string out = "{\"identity\":" + json_string(r.identity) + ",\"n\":" + std::to_string(r.n) +
                    ",\"k\":" + std::to_string(r.k) + ",\"pass\":" + (r.pass ? "true" : "false") +
                    ",\"left\":" + json_array(r.left.coeffs()) + ",\"right\":" + json_array(r.right.coeffs());
  if (r.witness) out += ",\"witness\":" + json_string(*r.witness);
  out += '}';
  return out;
}

std::string to_text(const IdentityReport& r) {
  std::string out = std::string(r.pass ? "PASS" : "FAIL") + "  " + r.identity + "  n=" + std::to_string(r.n) +
                    " k=" + std::to_string(r.k) + "  left=" + r.left.to_text() + " right=" + r.right.to_text();
  if (r.witness) out += "  witness: " + *r.witness;
  return out;
}

}  // namespace sf
