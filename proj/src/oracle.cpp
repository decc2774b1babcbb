#include "schubert/oracle.hpp"

#include <algorithm>

#include "schubert/error.hpp"

namespace schubert::oracle {

Permutation weyl_to_permutation(const RootSystem& rs, const WeylElement& w) {
  if (rs.family() != Family::A) throw DomainError("permutation model requires type A, got " + rs.name());
  check_same_group(rs, w);
  const int n = rs.rank() + 1;
  Permutation p(static_cast<std::size_t>(n), 0);
  // e_1 - e_j = alpha_1 + ... + alpha_{j-1}; in e-coordinates a simple-root
  // vector c becomes x_k = c_k - c_{k-1}.
  for (int j = 2; j <= n; ++j) {
    Root v{std::vector<int>(static_cast<std::size_t>(n - 1), 0)};
    for (int k = 0; k < j - 1; ++k) v.coords[static_cast<std::size_t>(k)] = 1;
    const Root image = w.apply(v);
    for (int k = 1; k <= n; ++k) {
      const int above = k <= n - 1 ? image.coords[static_cast<std::size_t>(k - 1)] : 0;
      const int below = k >= 2 ? image.coords[static_cast<std::size_t>(k - 2)] : 0;
      const int x = above - below;
      if (x == 1) p[0] = k;
      if (x == -1) p[static_cast<std::size_t>(j - 1)] = k;
    }
  }
  return p;
}

bool contains_pattern(const Permutation& p, const Permutation& pattern) {
  const std::size_t n = p.size();
  const std::size_t k = pattern.size();
  if (k > n) return false;
  if (k == 0) return true;
  // walk all k-subsets of positions in lexicographic order
  std::vector<std::size_t> pos(k);
  for (std::size_t i = 0; i < k; ++i) pos[i] = i;
  for (;;) {
    bool iso = true;
    for (std::size_t a = 0; a < k && iso; ++a)
      for (std::size_t b = a + 1; b < k && iso; ++b)
        iso = (p[pos[a]] < p[pos[b]]) == (pattern[a] < pattern[b]);
    if (iso) return true;
    std::size_t i = k;
    while (i > 0 && pos[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++pos[i - 1];
    for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
}

bool is_smooth_type_a(const Permutation& p) {
  return !contains_pattern(p, {3, 4, 1, 2}) && !contains_pattern(p, {4, 2, 3, 1});
}

std::string format_permutation(const Permutation& p) {
  const bool wide = std::any_of(p.begin(), p.end(), [](int v) { return v >= 10; });
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (wide && i > 0) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

}  // namespace schubert::oracle
