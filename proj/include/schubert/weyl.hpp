#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "schubert/rootsystem.hpp"

namespace schubert {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

// Generator labels, 1-based.
using Word = std::vector<int>;

// Digits "2142132"; comma-separated integers "10,2,3" are also accepted.
// Throws ParseError carrying the offending position.
Word parse_word(std::string_view text, int rank);
std::string format_word(const Word& word, int rank);

// A Weyl group element, stored as its action on the root lattice: column j of
// the matrix is w(alpha_j) in simple-root coordinates. The inverse matrix is
// carried along so left and right descents are both O(rank) to test.
class WeylElement {
 public:
  using Matrix = std::array<std::int8_t, kMaxRank * kMaxRank>;

  static WeylElement identity(const RootSystem& rs);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }

  // Entry of the action matrix, 0-based.
  int entry(int row, int col) const { return action_[static_cast<std::size_t>(row * kMaxRank + col)]; }
  const Matrix& action() const { return action_; }

  Root apply(const Root& root) const;
  Root apply_inverse(const Root& root) const;

  // l(w s_i) < l(w), 1-based i
  bool has_right_descent(int i) const;
  // l(s_i w) < l(w)
  bool has_left_descent(int i) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.family_ == b.family_ && a.rank_ == b.rank_ && a.action_ == b.action_;
  }

  std::size_t hash() const noexcept;

 private:
  friend WeylElement left_multiply(const RootSystem&, int, const WeylElement&);
  friend WeylElement right_multiply(const RootSystem&, const WeylElement&, int);
  friend WeylElement compose(const RootSystem&, const WeylElement&, const WeylElement&);
  friend WeylElement inverse(const WeylElement&);

  Family family_ = Family::A;
  int rank_ = 0;
  int length_ = 0;
  Matrix action_{};
  Matrix inverse_{};
};

struct MatrixHash {
  std::size_t operator()(const WeylElement::Matrix& m) const noexcept;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept { return w.hash(); }
};

// Throws DomainError when w does not belong to the group of rs.
void check_same_group(const RootSystem& rs, const WeylElement& w);

// Number of positive roots sent to negative roots.
int inversion_count(const RootSystem& rs, const WeylElement& w);

WeylElement simple_reflection(const RootSystem& rs, int i);
WeylElement left_multiply(const RootSystem& rs, int i, const WeylElement& w);   // s_i w
WeylElement right_multiply(const RootSystem& rs, const WeylElement& w, int i);  // w s_i
WeylElement compose(const RootSystem& rs, const WeylElement& x, const WeylElement& y);
WeylElement inverse(const WeylElement& w);

// s_{i1} ... s_{im}; the word need not be reduced.
WeylElement from_word(const RootSystem& rs, const Word& word);
WeylElement from_word(const RootSystem& rs, std::string_view text);

// Reduced word by greedy extraction of the smallest right descent.
Word reduced_word(const RootSystem& rs, const WeylElement& w);

// |W| as prod (m_i + 1), without enumerating.
std::uint64_t group_order(const RootSystem& rs);

// All elements, grouped by increasing length, breadth-first over right
// multiplication by generators. Throws ResourceError when |W| > budget.
std::vector<WeylElement> enumerate(const RootSystem& rs, std::uint64_t budget = kDefaultBudget);

// The length <= max_length slice of enumerate(). Throws ResourceError when
// the slice would exceed the budget.
std::vector<WeylElement> enumerate_up_to_length(const RootSystem& rs, int max_length,
                                                std::uint64_t budget = kDefaultBudget);

// Reflection r_alpha for a positive root. Throws DomainError otherwise.
WeylElement reflection(const RootSystem& rs, const Root& root);

// Membership test for the lower Bruhat interval [e, w], by the descent
// recursion with the smallest left descent of w chosen at each step.
// Results are memoized per (x, depth in w's descent chain).
class BruhatLowerSet {
 public:
  BruhatLowerSet(const RootSystem& rs, WeylElement top);

  const WeylElement& top() const { return chain_.front(); }
  bool contains(const WeylElement& x);

 private:
  const RootSystem* rs_;
  std::vector<WeylElement> chain_;  // chain_[d] = s_{letters_[d-1]} ... w, chain_.back() = e
  std::vector<int> letters_;
  std::vector<std::unordered_map<WeylElement::Matrix, bool, MatrixHash>> memo_;
};

bool bruhat_leq(const RootSystem& rs, const WeylElement& x, const WeylElement& w);

// [e, w] grouped by length. Throws ResourceError when the length slice of the
// group that must be searched exceeds the budget.
std::vector<WeylElement> lower_interval(const RootSystem& rs, const WeylElement& w,
                                        std::uint64_t budget = kDefaultBudget);

}  // namespace schubert

template <>
struct std::hash<schubert::WeylElement> {
  std::size_t operator()(const schubert::WeylElement& w) const noexcept { return w.hash(); }
};
