#pragma once

// k-Stirling permutations: words over a label multiset M_k in which every
// letter between two copies of a is >= a. Also the excedance/cycle and
// descent statistics on ordinary permutations.

#include "stirforest/errors.hpp"
#include "stirforest/limits.hpp"
#include "stirforest/polyx.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sf {

using Label = std::int32_t;

struct StirlingCheck {
  bool ok = true;
  std::string reason;  // empty when ok
};

/// Multiplicity check (every letter exactly k times, labels positive) plus
/// the Stirling property.
StirlingCheck check_k_stirling(std::span<const Label> word, unsigned k);
inline bool is_k_stirling(std::span<const Label> word, unsigned k) { return check_k_stirling(word, k).ok; }

/// A validated k-Stirling permutation over an arbitrary label set.
class KStirlingWord {
 public:
  KStirlingWord() = default;
  /// Throws DomainError when the letters do not form a k-Stirling word.
  KStirlingWord(std::vector<Label> letters, unsigned k);
  static KStirlingWord parse(std::string_view text, unsigned k);

  unsigned k() const noexcept { return k_; }
  std::span<const Label> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  /// Sorted distinct labels.
  std::vector<Label> labels() const;
  std::string to_text() const;

  friend bool operator==(const KStirlingWord&, const KStirlingWord&) = default;

 private:
  unsigned k_ = 1;
  std::vector<Label> letters_;
};

/// Concatenated digits when every label is below 10, dot-separated otherwise.
std::string format_word(std::span<const Label> word);
/// Accepts both "1221" and "10.9.9.10".
std::vector<Label> parse_word(std::string_view text);

/// Number of indices i with w_i < w_{i+1} = ... = w_{i+k}.
unsigned stat_ap(std::span<const Label> word, unsigned k);
/// ap of the word with a 0 prepended.
unsigned stat_lap(std::span<const Label> word, unsigned k);
inline unsigned stat_ap(const KStirlingWord& w) { return stat_ap(w.letters(), w.k()); }
inline unsigned stat_lap(const KStirlingWord& w) { return stat_lap(w.letters(), w.k()); }

struct WordClass {
  bool in_bar = false;               // first k letters equal
  bool in_tilde = false;             // starts with the minimum label
  bool starts_with_plateau = false;  // index 1 is a longest plateau
};
WordClass word_class(std::span<const Label> word, unsigned k);
inline WordClass word_class(const KStirlingWord& w) { return word_class(w.letters(), w.k()); }

/// prod_{i<n} (ik + 1) = |Q_n(k)|, saturating at UINT64_MAX.
std::uint64_t k_stirling_count(unsigned n, unsigned k);

/// Streams Q_n(k) in gap-insertion order: each word of Q_{n-1}(k) spawns the
/// words obtained by inserting n^k into its gaps, rightmost gap first.
/// Returns the number of words emitted. Throws LimitError above the ceiling.
std::uint64_t for_each_k_stirling(unsigned n, unsigned k, const std::function<void(std::span<const Label>)>& fn,
                                  const Limits& limits = {});

std::vector<KStirlingWord> enumerate_k_stirling(unsigned n, unsigned k, const Limits& limits = {});

struct Permutation {
  std::vector<int> one_line;  // rearrangement of 1..n
};

struct ExcCyc {
  unsigned exc = 0;
  unsigned cyc = 0;
  friend bool operator==(const ExcCyc&, const ExcCyc&) = default;
};

/// Throws DomainError when one_line is not a permutation of 1..n.
ExcCyc perm_exc_cyc(const Permutation& p);

/// sum over S_n of x^exc k^(n - cyc).
IntPolynomial exc_cyc_polynomial(unsigned n, unsigned k, const Limits& limits = {});
/// Classical Eulerian polynomial by descents.
IntPolynomial descent_polynomial(unsigned n, const Limits& limits = {});

}  // namespace sf
