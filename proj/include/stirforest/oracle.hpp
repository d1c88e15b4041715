#pragma once

// Statistic distributions over the enumerated families, gamma-coefficient
// censuses, and the exhaustive identity suite.

#include "stirforest/forest.hpp"
#include "stirforest/polyx.hpp"
#include "stirforest/stirling.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sf {

enum class Family { Q, QBar, QHat, QTilde, F, FBar, FHat, T };
enum class Statistic { Ap, Lap, Lleaf, LleafMinusSi };

const char* to_string(Family f);
const char* to_string(Statistic s);
/// Accepts "Q", "Qbar", "Qhat", "Qtilde", "F", "Fbar", "Fhat", "T" (case-insensitive).
Family parse_family(std::string_view text);
/// Accepts "ap", "lap", "lleaf", "lleaf-si".
Statistic parse_statistic(std::string_view text);

/// Word families take ap/lap, forest and tree families lleaf/lleaf-si.
/// Other pairs raise DomainError.
IntPolynomial distribution(Family family, Statistic statistic, unsigned n, unsigned k, const Limits& limits = {});

struct GammaCensus {
  std::vector<BigInt> gamma_bar;
  std::vector<BigInt> gamma_hat;
};

/// Histograms of oleaf over the starred bar and hat forests on [n], trimmed
/// to the largest index that occurs.
GammaCensus gamma_census_bar_hat(unsigned n, unsigned k, const Limits& limits = {});
/// Histogram of lleaf over trees on [n] without young leaves. Requires n >= 2.
std::vector<BigInt> gamma_census_tilde(unsigned n, unsigned k, const Limits& limits = {});

/// A_n via the chosen route.
enum class Route { Ap, ExcCyc, Egf };
IntPolynomial one_over_k_eulerian(unsigned n, unsigned k, Route route, const Limits& limits = {});
/// Summand of the symmetric decomposition of A_n at center n - 1: 'A' the
/// polynomial itself, 'a' the symmetric part, 'b' the second part x*b
/// (centered at n), 'c' the tree polynomial.
IntPolynomial part_polynomial(char which, unsigned n, unsigned k, Route route = Route::Egf, const Limits& limits = {});
/// Center used for the gamma expansion of part_polynomial(which, n, k).
std::size_t part_center(char which, unsigned n);

enum class Suite { Polynomials, Bijections, Gfs, Pipeline, Theorems };
const char* to_string(Suite s);
Suite parse_suite(std::string_view text);
std::vector<Suite> all_suites();

struct IdentityReport {
  std::string identity;
  unsigned n = 0;
  unsigned k = 0;
  IntPolynomial left;
  IntPolynomial right;
  bool pass = false;
  std::optional<std::string> witness;  // present iff !pass
};

/// Per-object checks report left = [objects checked], right = [objects that
/// passed]; distribution checks report the two polynomials.
std::vector<IdentityReport> run_suite(unsigned n_max, unsigned k_max, const std::vector<Suite>& suites,
                                      const Limits& limits = {});

/// {"identity":...,"n":...,"k":...,"pass":...,"left":[...],"right":[...],"witness":...}
std::string to_json(const IdentityReport& r);
/// "PASS  poly.count  n=3 k=2  left=[15] right=[15]", witness appended on failure.
std::string to_text(const IdentityReport& r);
/// "[1,10,4]" with exact integers.
std::string json_array(const std::vector<BigInt>& values);
/// Quoted and escaped JSON string.
std::string json_string(std::string_view s);

}  // namespace sf
