#include "schubert/schubert.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_set>

#include "schubert/error.hpp"

namespace schubert {

namespace {

void require_nonnegative(const HeightProfile& profile) {
  if (!profile.nonnegative())
    throw DomainError("heights not a valid smooth profile: some d_i is negative");
}

std::vector<int> heights_of(std::span<const Root> roots) {
  std::vector<int> out;
  out.reserve(roots.size());
  for (const Root& r : roots) out.push_back(r.height());
  return out;
}

// (1 - q^m) / (1 - q^d) for d | m, i.e. 1 + q^d + ... + q^(m-d)
QPolynomial divisible_quotient(int m, int d) {
  std::vector<BigInt> c(static_cast<std::size_t>(m - d) + 1, 0);
  for (int j = 0; j <= m - d; j += d) c[static_cast<std::size_t>(j)] = 1;
  return QPolynomial(std::move(c));
}

std::string one_minus_factors(const std::vector<int>& ms, Grading grading) {
  std::string out;
  for (int m : ms) out += "(" + one_minus_q_power(m).to_string(grading) + ")";
  return out;
}

}  // namespace

HeightProfile HeightProfile::from_counts(std::vector<int> counts) {
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  HeightProfile p;
  p.d.resize(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    p.d[i] = counts[i] - (i + 1 < counts.size() ? counts[i + 1] : 0);
  p.counts = std::move(counts);
  return p;
}

HeightProfile HeightProfile::from_roots(std::span<const Root> roots) {
  std::vector<int> counts;
  for (const Root& r : roots) {
    const auto h = static_cast<std::size_t>(r.height());
    if (counts.size() < h) counts.resize(h, 0);
    ++counts[h - 1];
  }
  return from_counts(std::move(counts));
}

int HeightProfile::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

bool HeightProfile::nonnegative() const {
  return std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; });
}

RationalProduct rational_height_product(std::span<const int> heights) {
  std::map<int, int> balance;  // exponent -> (numerator count - denominator count)
  for (int h : heights) {
    ++balance[h + 1];
    --balance[h];
  }
  RationalProduct out;
  for (const auto& [m, b] : balance) {
    for (int k = 0; k < b; ++k) out.numerator.push_back(m);
    for (int k = 0; k < -b; ++k) out.denominator.push_back(m);
  }

  // Pair each denominator factor, largest first, with the smallest unused
  // numerator factor it divides.
  std::vector<bool> used(out.numerator.size(), false);
  std::vector<int> dens = out.denominator;
  std::sort(dens.rbegin(), dens.rend());
  for (int d : dens) {
    bool paired = false;
    for (std::size_t k = 0; k < out.numerator.size(); ++k) {
      if (used[k] || out.numerator[k] % d != 0) continue;
      used[k] = true;
      out.divisible_pairs.emplace_back(out.numerator[k], d);
      paired = true;
      break;
    }
    if (!paired) out.denominator_rest.push_back(d);
  }
  for (std::size_t k = 0; k < out.numerator.size(); ++k)
    if (!used[k]) out.numerator_rest.push_back(out.numerator[k]);
  std::sort(out.divisible_pairs.begin(), out.divisible_pairs.end());
  std::sort(out.denominator_rest.begin(), out.denominator_rest.end());

  QPolynomial num = QPolynomial::one();
  QPolynomial den = QPolynomial::one();
  for (int m : out.numerator) num *= one_minus_q_power(m);
  for (int m : out.denominator) den *= one_minus_q_power(m);
  out.polynomial = divide_exact(num, den);
  return out;
}

std::string RationalProduct::reduced_text(Grading grading) const {
  std::string out;
  std::map<std::pair<int, int>, int> grouped;
  for (const auto& pr : divisible_pairs) ++grouped[pr];
  for (const auto& [pr, count] : grouped) {
    out += "(" + divisible_quotient(pr.first, pr.second).to_string(grading) + ")";
    if (count > 1) out += "^" + std::to_string(count);
  }
  if (!numerator_rest.empty() || !denominator_rest.empty()) {
    out += numerator_rest.empty() ? "1" : one_minus_factors(numerator_rest, grading);
    if (!denominator_rest.empty()) {
      const std::string den = one_minus_factors(denominator_rest, grading);
      out += denominator_rest.size() > 1 ? "/(" + den + ")" : "/" + den;
    }
  }
  return out.empty() ? "1" : out;
}

std::string SmoothnessVerdict::describe() const {
  return pass() ? "possibly smooth (necessary condition passed)" : "certified singular";
}

std::vector<Root> phi_w(const RootSystem& rs, const WeylElement& w) {
  check_same_group(rs, w);
  BruhatLowerSet below(rs, w);
  std::vector<Root> out;
  for (const Root& r : rs.positive_roots())
    if (below.contains(reflection(rs, r))) out.push_back(r);
  return out;
}

QPolynomial length_generating_function(std::span<const WeylElement> elements) {
  std::vector<BigInt> c;
  for (const WeylElement& x : elements) {
    const auto l = static_cast<std::size_t>(x.length());
    if (c.size() <= l) c.resize(l + 1, 0);
    c[l] += 1;
  }
  return QPolynomial(std::move(c));
}

QPolynomial poincare_sum(const RootSystem& rs, const WeylElement& w, std::uint64_t budget) {
  return length_generating_function(lower_interval(rs, w, budget));
}

HeightProfile height_profile(const RootSystem& rs, const WeylElement& w) {
  return HeightProfile::from_roots(phi_w(rs, w));
}

RationalProduct poincare_product_rational(const RootSystem& rs, const WeylElement& w) {
  return rational_height_product(heights_of(phi_w(rs, w)));
}

QPolynomial poincare_product_string(const HeightProfile& profile) {
  require_nonnegative(profile);
  QPolynomial out = QPolynomial::one();
  for (std::size_t i = 0; i < profile.d.size(); ++i) out *= pow(q_integer(static_cast<int>(i) + 2), profile.d[i]);
  return out;
}

BigInt euler_factored(const HeightProfile& profile) {
  require_nonnegative(profile);
  BigInt out = 1;
  for (std::size_t i = 0; i < profile.d.size(); ++i)
    for (int k = 0; k < profile.d[i]; ++k) out *= static_cast<int>(i) + 2;
  return out;
}

namespace {

SmoothnessVerdict verdict_from(const HeightProfile& profile, std::size_t phi_size, int length,
                               const QPolynomial& p_sum, std::uint64_t euler) {
  SmoothnessVerdict v;
  v.dimension = phi_size == static_cast<std::size_t>(length);
  v.string = std::all_of(profile.counts.begin(), profile.counts.end(), [](int c) { return c >= 1; }) &&
             std::is_sorted(profile.counts.rbegin(), profile.counts.rend());
  if (profile.nonnegative()) {
    v.polynomial_match = poincare_product_string(profile) == p_sum;
    v.euler_match = euler_factored(profile) == euler;
  }
  return v;
}

}  // namespace

SmoothnessVerdict smoothness_necessary_check(const RootSystem& rs, const WeylElement& w, std::uint64_t budget) {
  const std::vector<WeylElement> interval = lower_interval(rs, w, budget);
  const std::vector<Root> phi = phi_w(rs, w);
  return verdict_from(HeightProfile::from_roots(phi), phi.size(), w.length(), length_generating_function(interval),
                      interval.size());
}

bool partition_duality_check(const HeightProfile& profile) {
  require_nonnegative(profile);
  std::vector<int> repeated;
  for (std::size_t i = profile.d.size(); i-- > 0;)
    for (int k = 0; k < profile.d[i]; ++k) repeated.push_back(static_cast<int>(i) + 1);
  return conjugate_partition(profile.counts) == repeated;
}

bool partition_duality_check(const RootSystem& rs, const WeylElement& w) {
  return partition_duality_check(height_profile(rs, w));
}

bool te_b_submodule_test(const RootSystem& rs, std::span<const Root> phi) {
  for (const Root& alpha : phi) {
    for (int i = 0; i < rs.rank(); ++i) {
      Root lower = alpha;
      --lower.coords[static_cast<std::size_t>(i)];
      if (!rs.is_positive_root(lower)) continue;
      if (std::find(phi.begin(), phi.end(), lower) == phi.end()) return false;
    }
  }
  return true;
}

bool te_b_submodule_test(const RootSystem& rs, const WeylElement& w) {
  const std::vector<Root> phi = phi_w(rs, w);
  return te_b_submodule_test(rs, phi);
}

IdentityCheck identity_check(const RootSystem& rs, std::uint64_t budget) {
  IdentityCheck out;
  const std::vector<WeylElement> all = enumerate(rs, budget);
  out.order = all.size();
  out.length_sum = length_generating_function(all);
  out.root_product = rational_height_product(heights_of(rs.positive_roots()));
  out.exponent_product = QPolynomial::one();
  for (int m : rs.exponents()) out.exponent_product *= q_integer(m + 1);
  return out;
}

Analyzer::Analyzer(const RootSystem& rs, std::uint64_t budget) : rs_(&rs), budget_(budget) {
  reflections_.reserve(rs.positive_roots().size());
  for (const Root& r : rs.positive_roots()) reflections_.push_back(reflection(rs, r));
}

Analyzer::Analyzer(const RootSystem& rs, std::vector<WeylElement> enumeration, std::uint64_t budget)
    : Analyzer(rs, budget) {
  enumeration_ = std::move(enumeration);
}

std::vector<WeylElement> Analyzer::lower_interval(const WeylElement& w) const {
  if (enumeration_.empty()) return schubert::lower_interval(*rs_, w, budget_);
  check_same_group(*rs_, w);
  BruhatLowerSet below(*rs_, w);
  std::vector<WeylElement> out;
  for (const WeylElement& x : enumeration_) {
    if (x.length() > w.length()) break;
    if (below.contains(x)) out.push_back(x);
  }
  return out;
}

SchubertReport Analyzer::analyze(const WeylElement& w, Word word) const {
  const RootSystem& rs = *rs_;
  check_same_group(rs, w);
  SchubertReport r;
  r.type = rs.name();
  r.word = std::move(word);
  r.reduced_word = reduced_word(rs, w);
  r.length = w.length();

  const std::vector<WeylElement> interval = lower_interval(w);
  std::unordered_set<WeylElement::Matrix, MatrixHash> members;
  for (const WeylElement& x : interval) members.insert(x.action());

  const auto roots = rs.positive_roots();
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (members.contains(reflections_[k].action())) r.phi_w.push_back(roots[k]);

  r.profile = HeightProfile::from_roots(r.phi_w);
  r.p_sum = length_generating_function(interval);
  r.p_product = rational_height_product(heights_of(r.phi_w));
  r.euler = interval.size();
  if (r.profile.nonnegative()) {
    r.p_string = poincare_product_string(r.profile);
    r.euler_factored = euler_factored(r.profile);
    r.partition_duality = partition_duality_check(r.profile);
  }
  r.rationally_smooth = is_palindromic(r.p_sum);
  r.smooth_necessary = verdict_from(r.profile, r.phi_w.size(), r.length, r.p_sum, r.euler);
  if (r.rationally_smooth) r.billey = q_integer_factorization(r.p_sum);
  r.te_submodule = te_b_submodule_test(rs, r.phi_w);

  if (r.smooth_necessary.pass())
    r.annotations.push_back(
        "necessary condition only: singular Schubert varieties can pass it (e.g. w = 21212 in G2)");
  if (rs.family() == Family::G)
    r.annotations.push_back("te_submodule is not a valid smoothness criterion in type G2");
  return r;
}

SchubertReport analyze(const RootSystem& rs, const WeylElement& w, std::uint64_t budget) {
  return Analyzer(rs, budget).analyze(w, reduced_word(rs, w));
}

SchubertReport analyze(const RootSystem& rs, const Word& word, std::uint64_t budget) {
  return Analyzer(rs, budget).analyze(from_word(rs, word), word);
}

}  // namespace schubert
