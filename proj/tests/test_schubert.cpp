#include <doctest.h>

#include <algorithm>

#include "schubert/error.hpp"
#include "schubert/oracle.hpp"
#include "schubert/schubert.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace schubert;

namespace {

QPolynomial from_oracle(const oracles::Poly& p) {
  std::vector<BigInt> c(p.begin(), p.end());
  return QPolynomial(std::move(c));
}

std::vector<int> heights(const std::vector<Root>& roots) {
  std::vector<int> out;
  for (const Root& r : roots) out.push_back(r.height());
  return out;
}

const QPolynomial kExample2{1, 4, 9, 13, 13, 9, 4, 1};

}  // namespace

TEST_CASE("phi_w") {
  const RootSystem b2 = RootSystem::parse("B2");
  CHECK(phi_w(b2, WeylElement::identity(b2)).empty());
  CHECK(phi_w(b2, from_word(b2, "212")) == std::vector<Root>{Root{{1, 0}}, Root{{0, 1}}, Root{{1, 2}}});

  const RootSystem d4 = RootSystem::parse("D4");
  const std::vector<Root> expected{Root{{1, 0, 0, 0}}, Root{{0, 1, 0, 0}}, Root{{0, 0, 1, 0}}, Root{{0, 0, 0, 1}},
                                   Root{{1, 1, 0, 0}}, Root{{0, 1, 1, 0}}, Root{{0, 1, 0, 1}}};
  CHECK(phi_w(d4, from_word(d4, "2142132")) == expected);
  CHECK(d4.reflect_simple(2, d4.simple_root(1)) == expected[4]);

  const RootSystem g2 = RootSystem::parse("G2");
  CHECK(phi_w(g2, from_word(g2, "21212")) ==
        std::vector<Root>{Root{{1, 0}}, Root{{0, 1}}, Root{{1, 1}}, Root{{1, 2}}, Root{{1, 3}}});
}

TEST_CASE("Poincare polynomial as an interval sum") {
  const RootSystem b2 = RootSystem::parse("B2");
  CHECK(poincare_sum(b2, WeylElement::identity(b2)) == QPolynomial::one());

  // longest element of B2: independent BFS over plain matrices
  const oracles::BfsGroup g = oracles::bfs_group(b2.datum());
  oracles::Poly by_length(5, 0);
  for (int d : g.distance) ++by_length[static_cast<std::size_t>(d)];
  CHECK(by_length == oracles::poly_mul(oracles::q_int(2), oracles::q_int(4)));
  CHECK(poincare_sum(b2, enumerate(b2).back()) == from_oracle(by_length));

  const RootSystem d4 = RootSystem::parse("D4");
  CHECK(poincare_sum(d4, from_word(d4, "2142132")) == kExample2);
}

TEST_CASE("height profiles") {
  const RootSystem b2 = RootSystem::parse("B2");
  const HeightProfile empty = height_profile(b2, WeylElement::identity(b2));
  CHECK(empty.counts.empty());
  CHECK(empty.max_height() == 0);

  const HeightProfile ex1 = height_profile(b2, from_word(b2, "212"));
  CHECK(ex1.counts == std::vector<int>{2, 0, 1});
  CHECK(ex1.d == std::vector<int>{2, -1, 1});
  CHECK(!ex1.nonnegative());

  const RootSystem d4 = RootSystem::parse("D4");
  const HeightProfile ex2 = height_profile(d4, from_word(d4, "2142132"));
  CHECK(ex2.counts == std::vector<int>{4, 3});
  CHECK(ex2.d == std::vector<int>{1, 3});
  CHECK(ex2.total() == 7);
}

TEST_CASE("rational product over Phi(w)") {
  const RootSystem b2 = RootSystem::parse("B2");
  CHECK(poincare_product_rational(b2, WeylElement::identity(b2)).polynomial == QPolynomial::one());

  const RationalProduct ex1 = poincare_product_rational(b2, from_word(b2, "212"));
  CHECK(!ex1.is_polynomial());
  CHECK(ex1.numerator == std::vector<int>{2, 2, 4});
  CHECK(ex1.denominator == std::vector<int>{1, 1, 3});
  CHECK(ex1.numerator_rest == std::vector<int>{4});
  CHECK(ex1.denominator_rest == std::vector<int>{3});
  CHECK(ex1.reduced_text() == "(1 + q)^2(1 - q^4)/(1 - q^3)");

  const RootSystem g2 = RootSystem::parse("G2");
  const RationalProduct w5 = poincare_product_rational(g2, from_word(g2, "21212"));
  REQUIRE(w5.is_polynomial());
  CHECK(*w5.polynomial == mul(q_integer(2), q_integer(5)));

  const RootSystem d4 = RootSystem::parse("D4");
  const RationalProduct ex2 = poincare_product_rational(d4, from_word(d4, "2142132"));
  CHECK(ex2.polynomial == kExample2);
  CHECK(ex2.reduced_text() == "(1 + q)(1 + q + q^2)^3");
}

TEST_CASE("string product and Euler factorization") {
  CHECK(poincare_product_string(HeightProfile{}) == QPolynomial::one());
  CHECK(poincare_product_string(HeightProfile::from_counts({4, 3})) == kExample2);
  const HeightProfile g2w = HeightProfile::from_counts({2, 1, 1, 1});
  CHECK(g2w.d == std::vector<int>{1, 0, 0, 1});
  CHECK(poincare_product_string(g2w) == mul(q_integer(2), q_integer(5)));
  CHECK_THROWS_AS(poincare_product_string(HeightProfile::from_counts({2, 0, 1})), DomainError);

  CHECK(euler_factored(HeightProfile{}) == 1);
  CHECK(euler_factored(HeightProfile::from_counts({4, 3})) == 54);
  CHECK(kExample2.value_at_one() == 54);
  const HeightProfile g2_full = HeightProfile::from_counts(RootSystem::parse("G2").height_histogram());
  CHECK(g2_full.d == std::vector<int>{1, 0, 0, 0, 1});
  CHECK(euler_factored(g2_full) == 12);
  CHECK(euler_factored(g2_full) == oracles::bfs_group(parse_type("G2")).elements.size());
  CHECK_THROWS_AS(euler_factored(HeightProfile::from_counts({2, 0, 1})), DomainError);
}

TEST_CASE("necessary condition for smoothness") {
  const RootSystem b2 = RootSystem::parse("B2");
  CHECK(smoothness_necessary_check(b2, WeylElement::identity(b2)).pass());
  const SmoothnessVerdict ex1 = smoothness_necessary_check(b2, from_word(b2, "212"));
  CHECK(!ex1.pass());
  CHECK(ex1.dimension);
  CHECK(!ex1.string);
  CHECK(ex1.describe() == "certified singular");

  const RootSystem g2 = RootSystem::parse("G2");
  const SmoothnessVerdict w5 = smoothness_necessary_check(g2, from_word(g2, "21212"));
  CHECK(w5.dimension);
  CHECK(w5.string);
  CHECK(w5.polynomial_match);
  CHECK(w5.euler_match);
  CHECK(w5.describe() == "possibly smooth (necessary condition passed)");
}

TEST_CASE("partition duality") {
  CHECK(partition_duality_check(HeightProfile{}));
  CHECK(partition_duality_check(HeightProfile::from_counts({4, 3})));
  CHECK_THROWS_AS(partition_duality_check(HeightProfile::from_counts({2, 0, 1})), DomainError);
  for (const char* t : {"A1", "A5", "B4", "C3", "D4", "D6", "E6", "E8", "F4", "G2"}) {
    CAPTURE(t);
    const RootSystem rs = RootSystem::parse(t);
    CHECK(partition_duality_check(HeightProfile::from_counts(rs.height_histogram())));
  }
  for (const auto& t : properties::rank3_types()) {
    CAPTURE(t);
    const auto r = properties::duality_on_pass(t);
    CHECK_MESSAGE(r.ok, r.detail);
  }
}

TEST_CASE("TE B-submodule test") {
  const RootSystem g2 = RootSystem::parse("G2");
  CHECK(te_b_submodule_test(g2, WeylElement::identity(g2)));
  CHECK(te_b_submodule_test(g2, from_word(g2, "21212")));
  const RootSystem d4 = RootSystem::parse("D4");
  CHECK(te_b_submodule_test(d4, from_word(d4, "2142132")));
  const RootSystem b2 = RootSystem::parse("B2");
  CHECK(!te_b_submodule_test(b2, from_word(b2, "212")));
}

TEST_CASE("identity check") {
  const IdentityCheck a1 = identity_check(RootSystem::parse("A1"));
  CHECK(a1.equal());
  CHECK(a1.length_sum == QPolynomial{1, 1});

  BigInt factorial = 1;
  for (int n = 2; n <= 6; ++n) {
    factorial *= n;
    const IdentityCheck c = identity_check(RootSystem::build(Family::A, n - 1));
    CHECK(c.equal());
    QPolynomial expected = QPolynomial::one();
    for (int i = 1; i <= n - 1; ++i) expected *= q_integer(i + 1);
    CHECK(c.length_sum == expected);
    CHECK(c.length_sum.value_at_one() == factorial);
  }
  const IdentityCheck b2 = identity_check(RootSystem::parse("B2"));
  CHECK(b2.equal());
  CHECK(b2.length_sum == mul(q_integer(2), q_integer(4)));
  CHECK_THROWS_AS(identity_check(RootSystem::parse("E7")), ResourceError);
}

TEST_CASE("longest element recovers G/B, for every type of rank <= 4 and A5") {
  for (const char* t : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "F4", "G2"}) {
    CAPTURE(t);
    const RootSystem rs = RootSystem::parse(t);
    const auto all = enumerate(rs);
    const SchubertReport r = Analyzer(rs, all, kDefaultBudget).analyze(all.back(), reduced_word(rs, all.back()));
    CHECK(r.phi_w.size() == rs.positive_roots().size());
    const IdentityCheck c = identity_check(rs);
    CHECK(c.equal());
    CHECK(r.p_sum == c.exponent_product);
    CHECK(r.smooth_necessary.pass());
  }
}

TEST_CASE("analyze") {
  const RootSystem b2 = RootSystem::parse("B2");
  const SchubertReport e = analyze(b2, Word{});
  CHECK(e.p_sum == QPolynomial::one());
  CHECK(e.euler == 1);
  CHECK(e.smooth_necessary.pass());
  CHECK(e.te_submodule);
  CHECK(e.rationally_smooth);
  CHECK(e.billey == std::vector<int>{});

  const SchubertReport ex1 = analyze(b2, Word{2, 1, 2});
  CHECK(heights(ex1.phi_w) == std::vector<int>{1, 1, 3});
  CHECK(ex1.rationally_smooth);
  CHECK(!ex1.smooth_necessary.pass());
  CHECK(!ex1.smooth_necessary.string);
  CHECK(ex1.billey == std::vector<int>{3, 2});
  CHECK(!ex1.p_string.has_value());
  CHECK(!ex1.euler_factored.has_value());
  CHECK(ex1.annotations.empty());

  const RootSystem d4 = RootSystem::parse("D4");
  const SchubertReport ex2 = analyze(d4, parse_word("2142132", 4));
  CHECK(ex2.smooth_necessary.pass());
  CHECK(ex2.billey == std::vector<int>{3, 3, 3, 2});
  CHECK(ex2.euler == 54);
  CHECK(ex2.euler_factored == 54);
  CHECK(ex2.length == 7);
  CHECK(ex2.partition_duality == true);

  const RootSystem g2 = RootSystem::parse("G2");
  const SchubertReport w5 = analyze(g2, parse_word("21212", 2));
  CHECK(w5.smooth_necessary.pass());
  CHECK(w5.annotations.size() == 2);
}

TEST_CASE("report invariants hold exhaustively in rank <= 3") {
  for (const auto& t : properties::rank3_types()) {
    CAPTURE(t);
    const RootSystem rs = RootSystem::parse(t);
    const auto all = enumerate(rs);
    const Analyzer analyzer(rs, all, kDefaultBudget);
    std::vector<SchubertReport> reports;
    for (const auto& w : all) reports.push_back(analyzer.analyze(w, reduced_word(rs, w)));

    for (std::size_t k = 0; k < all.size(); ++k) {
      const SchubertReport& r = reports[k];
      CHECK(r.p_sum.degree() == r.length);
      CHECK(r.p_sum.coeff(0) == 1);
      CHECK(r.p_sum.value_at_one() == r.euler);
      CHECK(r.phi_w.size() >= static_cast<std::size_t>(r.length));
      if (!r.rationally_smooth) CHECK(!r.smooth_necessary.polynomial_match);
      if (r.smooth_necessary.pass()) {
        REQUIRE(r.p_product.is_polynomial());
        CHECK(*r.p_product.polynomial == r.p_sum);
        CHECK(r.p_string == r.p_sum);
        CHECK(r.euler_factored == r.euler);
        CHECK(r.partition_duality == true);
      }
      if (r.billey) CHECK(q_integer_product(*r.billey) == r.p_sum);
    }
    // x <= w implies Phi(x) subset of Phi(w)
    for (std::size_t w = 0; w < all.size(); ++w) {
      BruhatLowerSet below(rs, all[w]);
      for (std::size_t x = 0; x < all.size(); ++x) {
        if (!below.contains(all[x])) continue;
        CHECK(std::includes(reports[w].phi_w.begin(), reports[w].phi_w.end(), reports[x].phi_w.begin(),
                            reports[x].phi_w.end()));
      }
    }
  }
}

TEST_CASE("q-integer factorizations of smooth scans are unique in rank <= 4") {
  for (const char* t : {"A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"}) {
    CAPTURE(t);
    const RootSystem rs = RootSystem::parse(t);
    const auto all = enumerate(rs);
    const Analyzer analyzer(rs, all, kDefaultBudget);
    for (const auto& w : all) {
      const SchubertReport r = analyzer.analyze(w, reduced_word(rs, w));
      if (!r.smooth_necessary.pass()) continue;
      const auto every = all_q_integer_factorizations(r.p_sum);
      REQUIRE(every.size() == 1);
      CHECK(r.billey == every.front());
    }
  }
}

TEST_CASE("type A: necessary condition, palindromicity and pattern avoidance coincide") {
  for (int rank = 1; rank <= 5; ++rank) {
    const RootSystem rs = RootSystem::build(Family::A, rank);
    const auto all = enumerate(rs);
    const Analyzer analyzer(rs, all, kDefaultBudget);
    for (const auto& w : all) {
      const SchubertReport r = analyzer.analyze(w, reduced_word(rs, w));
      const bool oracle_smooth = oracle::is_smooth_type_a(oracle::weyl_to_permutation(rs, w));
      CHECK(r.rationally_smooth == oracle_smooth);
      CHECK(r.smooth_necessary.pass() == oracle_smooth);
      CHECK(r.smooth_necessary.polynomial_match == oracle_smooth);
    }
  }
}
