#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

inline constexpr int kMaxRank = 8;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// Cartan matrix in the convention a(i, j) = <alpha_i^vee, alpha_j>, so that
// the simple reflection s_i sends alpha_j to alpha_j - a(i, j) alpha_i.
// Indices are 0-based here; generator labels shown to users are 1-based.
struct CartanDatum {
  Family family = Family::A;
  int rank = 0;
  std::vector<int> entries;  // row-major rank x rank

  int operator()(int i, int j) const { return entries[static_cast<std::size_t>(i * rank + j)]; }

  // "A3", "D4", ...
  std::string name() const;
};

// Throws ConfigError naming the violated constraint.
CartanDatum make_cartan(Family family, int rank);

// Case-insensitive "A3", "d4", "G2". Throws ParseError / ConfigError.
CartanDatum parse_type(std::string_view type);

// alpha = sum_i coords[i] * alpha_{i+1}
struct Root {
  std::vector<int> coords;

  int height() const;
  bool is_positive() const;  // all coords >= 0, not all zero
  bool is_negative() const;

  friend bool operator==(const Root&, const Root&) = default;
  // height first, then coordinates in decreasing lexicographic order
  friend std::strong_ordering operator<=>(const Root& a, const Root& b);
};

// Partition conjugate (dual) of a weakly decreasing sequence of positive parts.
std::vector<int> conjugate_partition(std::span<const int> parts);

class RootSystem {
 public:
  static RootSystem build(Family family, int rank);
  static RootSystem parse(std::string_view type);

  const CartanDatum& datum() const { return datum_; }
  Family family() const { return datum_.family; }
  int rank() const { return datum_.rank; }
  std::string name() const { return datum_.name(); }

  std::span<const Root> positive_roots() const { return roots_; }
  const Root& simple_root(int i) const;  // 1-based

  // Highest root height k (the Coxeter number is k + 1).
  int highest_root_height() const { return static_cast<int>(histogram_.size()); }
  int coxeter_number() const { return highest_root_height() + 1; }
  // h_i = number of positive roots of height i, for i = 1..k
  const std::vector<int>& height_histogram() const { return histogram_; }
  // m_1 <= ... <= m_rank
  const std::vector<int>& exponents() const { return exponents_; }

  // s_i(root) for 1-based i. Throws DomainError when i is out of range.
  Root reflect_simple(int i, const Root& root) const;

  std::optional<std::size_t> index_of(const Root& root) const;
  bool is_positive_root(const Root& root) const { return index_of(root).has_value(); }

  // Every non-simple positive root was reached as s_via_simple(parent).
  // For a simple root, via_simple is its own 1-based label and parent is empty.
  struct Derivation {
    int via_simple = 0;
    std::optional<std::size_t> parent;
  };
  const Derivation& derivation(std::size_t root_index) const { return derivations_[root_index]; }

  // Human-readable node labelling, e.g. "1-2, 2=>3 (short: 3)".
  std::string labelling() const;

 private:
  CartanDatum datum_;
  std::vector<Root> roots_;
  std::vector<Derivation> derivations_;
  std::vector<int> histogram_;
  std::vector<int> exponents_;
};

int height(const Root& root);

}  // namespace schubert
