#include "stirforest/polyx.hpp"

#include "stirforest/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace sf {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { canonicalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  canonicalize();
}

void IntPolynomial::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(std::size_t power, BigInt coeff) {
  std::vector<BigInt> c(power + 1);
  c[power] = std::move(coeff);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::one_plus_x_pow(std::size_t power) {
  std::vector<BigInt> c(power + 1);
  c[0] = 1;
  for (std::size_t i = 1; i <= power; ++i) c[i] = c[i - 1] * (power - i + 1) / i;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", pos);
  ++pos;
  std::vector<BigInt> coeffs;
  skip_ws();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    for (;;) {
      skip_ws();
      std::size_t start = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      std::size_t digits = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == digits) throw ParseError("expected integer coefficient", start);
      coeffs.emplace_back(std::string(text.substr(start, pos - start)));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      throw ParseError("expected ',' or ']'", pos);
    }
  }
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  return IntPolynomial(std::move(coeffs));
}

BigInt IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt IntPolynomial::sum() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

IntPolynomial IntPolynomial::reversed(std::size_t n) const {
  if (degree() > static_cast<long>(n)) throw DomainError("reversal degree below polynomial degree");
  std::vector<BigInt> c(n + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[n - i] = coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::shifted(std::size_t power) const {
  if (is_zero()) return {};
  std::vector<BigInt> c(power);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(c));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  canonicalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  canonicalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  canonicalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_text() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].str();
  }
  out += ']';
  return out;
}

std::string IntPolynomial::to_pretty() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.str();
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

RationalPolynomial::RationalPolynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  canonicalize();
}

void RationalPolynomial::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  canonicalize();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const BigRational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  canonicalize();
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPolynomial(std::move(c));
}

IntPolynomial RationalPolynomial::to_integer() const {
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (denominator(coeffs_[i]) != 1)
      throw InternalError("non-integer coefficient " + coeffs_[i].str() + " at x^" + std::to_string(i));
    out.push_back(numerator(coeffs_[i]));
  }
  return IntPolynomial(std::move(out));
}

namespace {

void require_center(const IntPolynomial& h, std::size_t center) {
  if (h.degree() > static_cast<long>(center))
    throw DomainError("center " + std::to_string(center) + " is below degree " + std::to_string(h.degree()));
}

// q with (1 - x) q = p; the remainder p(1) must vanish.
IntPolynomial divide_by_one_minus_x(const IntPolynomial& p) {
  std::vector<BigInt> q;
  BigInt running = 0;
  for (const auto& c : p.coeffs()) {
    running += c;
    q.push_back(running);
  }
  if (running != 0) throw InternalError("inexact division by (1 - x)");
  return IntPolynomial(std::move(q));
}

}  // namespace

bool is_symmetric(const IntPolynomial& h, std::size_t center) {
  if (h.degree() > static_cast<long>(center)) return false;
  for (std::size_t i = 0; i <= center / 2; ++i)
    if (h.coeff(i) != h.coeff(center - i)) return false;
  return true;
}

ShapeProperties shape_properties(const IntPolynomial& h, std::size_t center) {
  require_center(h, center);
  for (const auto& c : h.coeffs())
    if (c < 0) throw DomainError("negative coefficient");

  ShapeProperties out;
  out.symmetric = is_symmetric(h, center);

  std::size_t i = 0;
  while (i < center && h.coeff(i) <= h.coeff(i + 1)) ++i;
  while (i < center && h.coeff(i) >= h.coeff(i + 1)) ++i;
  out.unimodal = i == center;

  // a_0 <= a_n <= a_1 <= a_{n-1} <= ...
  std::vector<std::size_t> order;
  for (std::size_t lo = 0, hi = center; lo <= hi; ++lo, --hi) {
    order.push_back(lo);
    if (lo == hi) break;
    order.push_back(hi);
    if (hi == 0) break;
  }
  out.alternating_increasing = true;
  for (std::size_t j = 1; j < order.size(); ++j)
    if (h.coeff(order[j - 1]) > h.coeff(order[j])) out.alternating_increasing = false;

  if (out.symmetric) {
    GammaExpansion g = gamma_expand(h, center);
    out.gamma_positive = std::all_of(g.gamma.begin(), g.gamma.end(), [](const BigInt& v) { return v >= 0; });
  }
  return out;
}

SymmetricDecomposition symmetric_decompose(const IntPolynomial& h, std::size_t center) {
  require_center(h, center);
  SymmetricDecomposition d;
  d.center = center;
  d.a = divide_by_one_minus_x(h - h.reversed(center + 1));
  d.b = divide_by_one_minus_x(h.reversed(center) - h);
  return d;
}

GammaExpansion gamma_expand(const IntPolynomial& h, std::size_t center) {
  require_center(h, center);
  for (std::size_t i = 0; i <= center / 2; ++i) {
    if (h.coeff(i) != h.coeff(center - i)) {
      std::ostringstream msg;
      msg << "not symmetric about " << center << ": coefficient of x^" << i << " is " << h.coeff(i)
          << " but x^" << center - i << " is " << h.coeff(center - i);
      throw DomainError(msg.str());
    }
  }
  GammaExpansion g;
  g.center = center;
  IntPolynomial rest = h;
  for (std::size_t i = 0; i <= center / 2; ++i) {
    BigInt gi = rest.coeff(i);
    g.gamma.push_back(gi);
    if (gi != 0) rest -= IntPolynomial::one_plus_x_pow(center - 2 * i).shifted(i) * gi;
  }
  if (!rest.is_zero()) throw InternalError("gamma peeling left a remainder " + rest.to_text());
  return g;
}

IntPolynomial gamma_compose(const GammaExpansion& g) {
  IntPolynomial out;
  for (std::size_t i = 0; i < g.gamma.size(); ++i) {
    if (g.gamma[i] == 0) continue;
    if (2 * i > g.center)
      throw DomainError("gamma index " + std::to_string(i) + " exceeds center " + std::to_string(g.center));
    out += IntPolynomial::one_plus_x_pow(g.center - 2 * i).shifted(i) * g.gamma[i];
  }
  return out;
}

bool same_gamma_entries(const std::vector<BigInt>& lhs, const std::vector<BigInt>& rhs) {
  const std::size_t n = std::max(lhs.size(), rhs.size());
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l = i < lhs.size() ? lhs[i] : BigInt(0);
    BigInt r = i < rhs.size() ? rhs[i] : BigInt(0);
    if (l != r) return false;
  }
  return true;
}

std::vector<IntPolynomial> egf_one_over_k_eulerian(unsigned k, unsigned max_order) {
  if (k == 0) throw DomainError("k must be positive");

  // g[m] for m = 0..max_order as polynomials in x.
  std::vector<RationalPolynomial> g(max_order + 1);
  g[0] = RationalPolynomial({BigRational(1)});
  {
    IntPolynomial x_minus_one_pow{1};
    const IntPolynomial x_minus_one{-1, 1};
    BigInt k_pow = 1;
    BigInt factorial = 1;
    for (unsigned m = 1; m <= max_order; ++m) {
      k_pow *= k;
      factorial *= m;
      if (m > 1) x_minus_one_pow = x_minus_one_pow * x_minus_one;
      std::vector<BigRational> c;
      for (const auto& v : x_minus_one_pow.coeffs()) c.emplace_back(-v * k_pow, factorial);
      g[m] = RationalPolynomial(std::move(c));
    }
  }

  std::vector<RationalPolynomial> h(max_order + 1);
  h[0] = g[0];
  for (unsigned n = 1; n <= max_order; ++n) {
    // Coefficient of z^{n-1} in k h' g + g' h = 0, solved for h_n.
    RationalPolynomial acc;
    for (unsigned m = 0; m + 1 <= n; ++m) acc += g[m + 1] * h[n - 1 - m] * BigRational(m + 1);
    for (unsigned j = 0; j + 1 < n; ++j) acc += h[j + 1] * g[n - 1 - j] * BigRational(BigInt(k) * (j + 1));
    acc *= BigRational(-1, BigInt(k) * n);
    h[n] = std::move(acc);
  }

  std::vector<IntPolynomial> out;
  out.reserve(max_order + 1);
  BigInt factorial = 1;
  for (unsigned n = 0; n <= max_order; ++n) {
    if (n) factorial *= n;
    out.push_back((h[n] * BigRational(factorial)).to_integer());
  }
  return out;
}

}  // namespace sf
