#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "schubert/qpoly.hpp"
#include "schubert/rootsystem.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

// Root-height multiplicities of Phi(w): counts[i-1] = h_{w,i} for
// i = 1..k_w, and d[i-1] = h_{w,i} - h_{w,i+1} with h_{w,k_w+1} = 0.
struct HeightProfile {
  std::vector<int> counts;
  std::vector<int> d;

  static HeightProfile from_counts(std::vector<int> counts);
  static HeightProfile from_roots(std::span<const Root> roots);

  int max_height() const { return static_cast<int>(counts.size()); }  // k_w
  int total() const;
  bool nonnegative() const;

  friend bool operator==(const HeightProfile&, const HeightProfile&) = default;
};

// prod over a multiset of heights of (1 - q^(h+1)) / (1 - q^h).
struct RationalProduct {
  // exponents m of the (1 - q^m) factors left after cancelling equal ones
  std::vector<int> numerator;
  std::vector<int> denominator;
  // reduced display: pairs (m, d) with d | m, each a polynomial
  // (1 - q^m)/(1 - q^d), and the factors that could not be paired
  std::vector<std::pair<int, int>> divisible_pairs;
  std::vector<int> numerator_rest;
  std::vector<int> denominator_rest;
  // the exact quotient, when it is a polynomial
  std::optional<QPolynomial> polynomial;

  bool is_polynomial() const { return polynomial.has_value(); }
  std::string reduced_text(Grading grading = Grading::Q) const;

  friend bool operator==(const RationalProduct&, const RationalProduct&) = default;
};

RationalProduct rational_height_product(std::span<const int> heights);

// Sub-checks of the necessary condition for smoothness of X(w).
struct SmoothnessVerdict {
  bool dimension = false;         // |Phi(w)| = l(w)
  bool string = false;            // heights 1..k_w all occur, multiplicities non-increasing
  bool polynomial_match = false;  // prod [i+1]_q^{d_i} = sum over [e, w]
  bool euler_match = false;       // |[e, w]| = prod (i+1)^{d_i}

  bool pass() const { return dimension && string && polynomial_match && euler_match; }
  // "certified singular" or "possibly smooth (necessary condition passed)"
  std::string describe() const;

  friend bool operator==(const SmoothnessVerdict&, const SmoothnessVerdict&) = default;
};

struct SchubertReport {
  std::string type;
  Word word;          // as given
  Word reduced_word;  // canonical reduced word of the same element
  int length = 0;
  std::vector<Root> phi_w;
  HeightProfile profile;
  QPolynomial p_sum;
  RationalProduct p_product;
  std::optional<QPolynomial> p_string;  // undefined when some d_i < 0
  std::uint64_t euler = 0;
  std::optional<BigInt> euler_factored;
  bool rationally_smooth = false;
  SmoothnessVerdict smooth_necessary;
  std::optional<std::vector<int>> billey;
  bool te_submodule = false;
  std::optional<bool> partition_duality;
  std::vector<std::string> annotations;

  friend bool operator==(const SchubertReport&, const SchubertReport&) = default;
};

// Phi(w) = { alpha > 0 : r_alpha <= w }, sorted by height then coordinates.
std::vector<Root> phi_w(const RootSystem& rs, const WeylElement& w);

// sum over x <= w of q^l(x)
QPolynomial poincare_sum(const RootSystem& rs, const WeylElement& w, std::uint64_t budget = kDefaultBudget);
QPolynomial length_generating_function(std::span<const WeylElement> elements);

HeightProfile height_profile(const RootSystem& rs, const WeylElement& w);

RationalProduct poincare_product_rational(const RootSystem& rs, const WeylElement& w);

// prod [i+1]_q^{d_i}. Throws DomainError when some d_i < 0.
QPolynomial poincare_product_string(const HeightProfile& profile);

// prod (i+1)^{d_i}. Throws DomainError when some d_i < 0.
BigInt euler_factored(const HeightProfile& profile);

SmoothnessVerdict smoothness_necessary_check(const RootSystem& rs, const WeylElement& w,
                                             std::uint64_t budget = kDefaultBudget);

// The conjugate of the height counts equals the partition with each i
// repeated d_i times. Throws DomainError when some d_i < 0.
bool partition_duality_check(const HeightProfile& profile);
bool partition_duality_check(const RootSystem& rs, const WeylElement& w);

// Phi(w) closed under subtracting simple roots inside Phi+.
bool te_b_submodule_test(const RootSystem& rs, std::span<const Root> phi);
bool te_b_submodule_test(const RootSystem& rs, const WeylElement& w);

struct IdentityCheck {
  QPolynomial length_sum;         // sum over W of q^l(w)
  RationalProduct root_product;   // over all of Phi+
  QPolynomial exponent_product;   // prod [m_i + 1]_q
  std::uint64_t order = 0;        // |W| by enumeration

  bool equal() const {
    return root_product.polynomial && length_sum == *root_product.polynomial && length_sum == exponent_product;
  }
};

IdentityCheck identity_check(const RootSystem& rs, std::uint64_t budget = kDefaultBudget);

// Per-root-system state reused across many analyses: reflections of every
// positive root, and optionally the full length-sorted enumeration of W.
class Analyzer {
 public:
  explicit Analyzer(const RootSystem& rs, std::uint64_t budget = kDefaultBudget);
  Analyzer(const RootSystem& rs, std::vector<WeylElement> enumeration, std::uint64_t budget);

  const RootSystem& root_system() const { return *rs_; }

  std::vector<WeylElement> lower_interval(const WeylElement& w) const;
  SchubertReport analyze(const WeylElement& w, Word word) const;

 private:
  const RootSystem* rs_;
  std::uint64_t budget_;
  std::vector<WeylElement> reflections_;
  std::vector<WeylElement> enumeration_;
};

SchubertReport analyze(const RootSystem& rs, const WeylElement& w, std::uint64_t budget = kDefaultBudget);
SchubertReport analyze(const RootSystem& rs, const Word& word, std::uint64_t budget = kDefaultBudget);

}  // namespace schubert
