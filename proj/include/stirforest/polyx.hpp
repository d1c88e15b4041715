#pragma once

// Exact univariate polynomials over Z and Q, the symmetric decomposition,
// gamma expansions and the series expansion of the 1/k-Eulerian polynomials.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace sf {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Dense polynomial with arbitrary-precision integer coefficients, lowest
/// degree first. Trailing zeros are stripped on construction, so the zero
/// polynomial has no coefficients and degree() == kZeroDegree.
class IntPolynomial {
 public:
  static constexpr long kZeroDegree = -1;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial monomial(std::size_t power, BigInt coeff = 1);
  /// (1 + x)^power
  static IntPolynomial one_plus_x_pow(std::size_t power);
  /// Parses the dense text form "[1,10,4]" (whitespace tolerated).
  static IntPolynomial parse(std::string_view text);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of x^i; zero beyond the degree.
  BigInt coeff(std::size_t i) const;
  /// Value at x = 1.
  BigInt sum() const;

  /// x^n * h(1/x). Requires n >= degree().
  IntPolynomial reversed(std::size_t n) const;
  IntPolynomial shifted(std::size_t power) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const BigInt& scalar);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// "[1,10,4]"; the zero polynomial prints as "[]".
  std::string to_text() const;
  /// "1 + 10x + 4x^2"; the zero polynomial prints as "0".
  std::string to_pretty() const;

 private:
  void canonicalize();
  std::vector<BigInt> coeffs_;
};

/// Polynomial with exact rational coefficients; used for intermediate series
/// coefficients before scaling by n!.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<BigRational> coeffs);

  const std::vector<BigRational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  RationalPolynomial& operator+=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const BigRational& scalar);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(RationalPolynomial a, const BigRational& s) { return a *= s; }
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// Throws InternalError if any coefficient is not an integer.
  IntPolynomial to_integer() const;

 private:
  void canonicalize();
  std::vector<BigRational> coeffs_;
};

struct ShapeProperties {
  bool symmetric = false;
  bool unimodal = false;
  bool alternating_increasing = false;
  bool gamma_positive = false;
  friend bool operator==(const ShapeProperties&, const ShapeProperties&) = default;
};

/// h = a + x*b with a symmetric about center and b symmetric about center-1.
struct SymmetricDecomposition {
  IntPolynomial a;
  IntPolynomial b;
  std::size_t center = 0;
};

/// h = sum_i gamma[i] x^i (1+x)^(center-2i).
struct GammaExpansion {
  std::size_t center = 0;
  std::vector<BigInt> gamma;
  friend bool operator==(const GammaExpansion&, const GammaExpansion&) = default;
};

bool is_symmetric(const IntPolynomial& h, std::size_t center);

/// Throws DomainError on a negative coefficient or center < deg(h).
ShapeProperties shape_properties(const IntPolynomial& h, std::size_t center);

/// Both quotients by (1 - x) are exact; a remainder aborts with InternalError.
SymmetricDecomposition symmetric_decompose(const IntPolynomial& h, std::size_t center);

/// Peels x^i(1+x)^(center-2i) terms from the low end. Throws DomainError
/// naming the first asymmetric index pair.
GammaExpansion gamma_expand(const IntPolynomial& h, std::size_t center);

IntPolynomial gamma_compose(const GammaExpansion& g);

/// True when both gamma vectors agree after dropping trailing zeros.
bool same_gamma_entries(const std::vector<BigInt>& lhs, const std::vector<BigInt>& rhs);

/// A_0 .. A_max_order of the 1/k-Eulerian family, extracted from the
/// exponential generating function ((1-x)/(e^{kz(x-1)} - x))^{1/k}.
///
/// With g(z) = (e^{kz(x-1)} - x)/(1 - x) = 1 + sum_{m>=1} -k^m (x-1)^{m-1}/m! z^m
/// and h = g^{-1/k}, the coefficients h_n satisfy k h' g = -g' h, a
/// triangular recurrence solved in exact rational arithmetic. A_n = n! h_n.
std::vector<IntPolynomial> egf_one_over_k_eulerian(unsigned k, unsigned max_order);

}  // namespace sf
