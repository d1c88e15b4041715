#include "stirforest/stirling.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>

namespace sf {

StirlingCheck check_k_stirling(std::span<const Label> word, unsigned k) {
  if (k == 0) return {false, "k must be positive"};
  std::map<Label, unsigned> counts;
  for (Label a : word) {
    if (a <= 0) return {false, "label " + std::to_string(a) + " is not positive"};
    ++counts[a];
  }
  for (const auto& [label, count] : counts) {
    if (count != k)
      return {false, "label " + std::to_string(label) + " occurs " + std::to_string(count) + " times, expected " +
                         std::to_string(k)};
  }
  for (std::size_t i = 0; i < word.size(); ++i) {
    // Only the first copy needs scanning: everything up to the last copy must be >= word[i].
    bool first = std::find(word.begin(), word.begin() + i, word[i]) == word.begin() + i;
    if (!first) continue;
    std::size_t last = word.size() - 1;
    while (word[last] != word[i]) --last;
    for (std::size_t j = i + 1; j < last; ++j) {
      if (word[j] < word[i])
        return {false, "letter " + std::to_string(word[j]) + " at index " + std::to_string(j) +
                           " lies between two copies of " + std::to_string(word[i])};
    }
  }
  return {};
}

KStirlingWord::KStirlingWord(std::vector<Label> letters, unsigned k) : k_(k), letters_(std::move(letters)) {
  StirlingCheck c = check_k_stirling(letters_, k_);
  if (!c.ok) throw DomainError("not a " + std::to_string(k_) + "-Stirling permutation: " + c.reason);
}

KStirlingWord KStirlingWord::parse(std::string_view text, unsigned k) { return KStirlingWord(parse_word(text), k); }

std::vector<Label> KStirlingWord::labels() const {
  std::vector<Label> out(letters_.begin(), letters_.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string KStirlingWord::to_text() const { return format_word(letters_); }

std::string format_word(std::span<const Label> word) {
  bool dotted = std::any_of(word.begin(), word.end(), [](Label a) { return a >= 10; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (dotted && i) out += '.';
    out += std::to_string(word[i]);
  }
  return out;
}

std::vector<Label> parse_word(std::string_view text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  text = text.substr(begin, end - begin);

  std::vector<Label> out;
  if (text.find('.') == std::string_view::npos) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected digit", begin + i);
      out.push_back(text[i] - '0');
    }
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t dot = text.find('.', pos);
    if (dot == std::string_view::npos) dot = text.size();
    if (dot == pos) throw ParseError("empty label", begin + pos);
    long long value = 0;
    for (std::size_t i = pos; i < dot; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected digit", begin + i);
      value = value * 10 + (text[i] - '0');
      if (value > std::numeric_limits<Label>::max()) throw ParseError("label out of range", begin + pos);
    }
    out.push_back(static_cast<Label>(value));
    pos = dot + 1;
  }
  return out;
}

unsigned stat_ap(std::span<const Label> word, unsigned k) {
  unsigned count = 0;
  if (word.size() <= k) return 0;
  for (std::size_t i = 0; i + k < word.size(); ++i) {
    if (!(word[i] < word[i + 1])) continue;
    bool plateau = true;
    for (unsigned t = 2; t <= k && plateau; ++t) plateau = word[i + t] == word[i + 1];
    if (plateau) ++count;
  }
  return count;
}

unsigned stat_lap(std::span<const Label> word, unsigned k) {
  std::vector<Label> padded;
  padded.reserve(word.size() + 1);
  padded.push_back(0);
  padded.insert(padded.end(), word.begin(), word.end());
  return stat_ap(padded, k);
}

WordClass word_class(std::span<const Label> word, unsigned k) {
  WordClass c;
  if (word.empty()) {
    c.in_bar = c.in_tilde = c.starts_with_plateau = true;
    return c;
  }
  c.in_bar = word.size() >= k && std::all_of(word.begin(), word.begin() + k, [&](Label a) { return a == word[0]; });
  c.in_tilde = word[0] == *std::min_element(word.begin(), word.end());
  c.starts_with_plateau = c.in_bar;
  return c;
}

std::uint64_t k_stirling_count(unsigned n, unsigned k) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) {
    std::uint64_t factor = static_cast<std::uint64_t>(i) * k + 1;
    if (total > std::numeric_limits<std::uint64_t>::max() / factor) return std::numeric_limits<std::uint64_t>::max();
    total *= factor;
  }
  return total;
}

namespace {

void insert_blocks(std::vector<Label>& word, unsigned next, unsigned n, unsigned k,
                   const std::function<void(std::span<const Label>)>& fn, std::uint64_t& emitted) {
  if (next > n) {
    fn(word);
    ++emitted;
    return;
  }
  const std::size_t len = word.size();
  for (std::size_t gap = len + 1; gap-- > 0;) {
    word.insert(word.begin() + static_cast<std::ptrdiff_t>(gap), k, static_cast<Label>(next));
    insert_blocks(word, next + 1, n, k, fn, emitted);
    word.erase(word.begin() + static_cast<std::ptrdiff_t>(gap), word.begin() + static_cast<std::ptrdiff_t>(gap + k));
  }
}

}  // namespace

std::uint64_t for_each_k_stirling(unsigned n, unsigned k, const std::function<void(std::span<const Label>)>& fn,
                                  const Limits& limits) {
  if (k == 0) throw DomainError("k must be positive");
  std::uint64_t expected = k_stirling_count(n, k);
  if (expected > limits.max_objects)
    throw LimitError("|Q_" + std::to_string(n) + "(" + std::to_string(k) + ")| exceeds the ceiling of " +
                     std::to_string(limits.max_objects));
  std::vector<Label> word;
  word.reserve(static_cast<std::size_t>(n) * k);
  std::uint64_t emitted = 0;
  insert_blocks(word, 1, n, k, fn, emitted);
  if (emitted != expected) throw InternalError("gap insertion produced an unexpected count");
  return emitted;
}

std::vector<KStirlingWord> enumerate_k_stirling(unsigned n, unsigned k, const Limits& limits) {
  std::vector<KStirlingWord> out;
  for_each_k_stirling(
      n, k, [&](std::span<const Label> w) { out.emplace_back(std::vector<Label>(w.begin(), w.end()), k); }, limits);
  return out;
}

ExcCyc perm_exc_cyc(const Permutation& p) {
  const auto& pi = p.one_line;
  const std::size_t n = pi.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : pi) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) throw DomainError("not a permutation of 1..n");
    seen[v] = true;
  }
  ExcCyc out;
  std::vector<bool> visited(n + 1, false);
  for (std::size_t i = 1; i <= n; ++i) {
    if (pi[i - 1] > static_cast<int>(i)) ++out.exc;
    if (visited[i]) continue;
    ++out.cyc;
    for (std::size_t j = i; !visited[j]; j = static_cast<std::size_t>(pi[j - 1])) visited[j] = true;
  }
  return out;
}

namespace {

void require_perm_guard(unsigned n, const Limits& limits) {
  if (n > limits.max_perm_n)
    throw LimitError("n = " + std::to_string(n) + " exceeds the symmetric-group ceiling of " +
                     std::to_string(limits.max_perm_n));
}

}  // namespace

IntPolynomial exc_cyc_polynomial(unsigned n, unsigned k, const Limits& limits) {
  if (k == 0) throw DomainError("k must be positive");
  require_perm_guard(n, limits);
  // census[exc][n - cyc]
  std::vector<std::vector<std::uint64_t>> census(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  Permutation p;
  p.one_line.resize(n);
  std::iota(p.one_line.begin(), p.one_line.end(), 1);
  do {
    ExcCyc s = perm_exc_cyc(p);
    ++census[s.exc][n - s.cyc];
  } while (std::next_permutation(p.one_line.begin(), p.one_line.end()));

  std::vector<BigInt> coeffs(n + 1);
  for (unsigned e = 0; e <= n; ++e) {
    BigInt k_pow = 1;
    for (unsigned c = 0; c <= n; ++c) {
      coeffs[e] += k_pow * census[e][c];
      k_pow *= k;
    }
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial descent_polynomial(unsigned n, const Limits& limits) {
  require_perm_guard(n, limits);
  std::vector<BigInt> coeffs(n + 1);
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  do {
    unsigned des = 0;
    for (std::size_t i = 0; i + 1 < pi.size(); ++i)
      if (pi[i] > pi[i + 1]) ++des;
    coeffs[des] += 1;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return IntPolynomial(std::move(coeffs));
}

}  // namespace sf
