#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace oracles {

namespace {

// e-basis vector -> simple-root coordinates
Coords to_simple(schubert::Family family, const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  Coords c(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) prefix[static_cast<std::size_t>(i) + 1] = prefix[static_cast<std::size_t>(i)] + v[static_cast<std::size_t>(i)];
  auto P = [&](int k) { return prefix[static_cast<std::size_t>(k)]; };
  switch (family) {
    case schubert::Family::A:  // v has n+1 entries; alpha_i = e_i - e_{i+1}
      c.resize(static_cast<std::size_t>(n - 1));
      for (int k = 1; k <= n - 1; ++k) c[static_cast<std::size_t>(k - 1)] = P(k);
      break;
    case schubert::Family::B:  // alpha_n = e_n
      for (int k = 1; k <= n; ++k) c[static_cast<std::size_t>(k - 1)] = P(k);
      break;
    case schubert::Family::C:  // alpha_n = 2 e_n
      for (int k = 1; k <= n - 1; ++k) c[static_cast<std::size_t>(k - 1)] = P(k);
      c[static_cast<std::size_t>(n - 1)] = P(n) / 2;
      break;
    case schubert::Family::D: {  // alpha_{n-1} = e_{n-1} - e_n, alpha_n = e_{n-1} + e_n
      for (int k = 1; k <= n - 2; ++k) c[static_cast<std::size_t>(k - 1)] = P(k);
      const int base = P(n - 2);
      const int a = v[static_cast<std::size_t>(n - 2)], b = v[static_cast<std::size_t>(n - 1)];
      c[static_cast<std::size_t>(n - 1)] = (a + b + base) / 2;
      c[static_cast<std::size_t>(n - 2)] = (a - b + base) / 2;
      break;
    }
    default:
      throw std::logic_error("classical families only");
  }
  return c;
}

}  // namespace

std::set<Coords> classical_positive_roots(schubert::Family family, int n) {
  using schubert::Family;
  std::set<Coords> out;
  if (family == Family::A) {
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        std::vector<int> v(static_cast<std::size_t>(n) + 1, 0);
        v[static_cast<std::size_t>(i)] = 1;
        v[static_cast<std::size_t>(j)] = -1;
        out.insert(to_simple(family, v));
      }
    return out;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int sign : {-1, 1}) {
        std::vector<int> v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(i)] = 1;
        v[static_cast<std::size_t>(j)] = sign;
        out.insert(to_simple(family, v));
      }
  if (family == Family::B || family == Family::C)
    for (int i = 0; i < n; ++i) {
      std::vector<int> v(static_cast<std::size_t>(n), 0);
      v[static_cast<std::size_t>(i)] = family == Family::B ? 1 : 2;
      out.insert(to_simple(family, v));
    }
  return out;
}

IntMatrix simple_reflection_matrix(const schubert::CartanDatum& cd, int i) {
  const int n = cd.rank;
  IntMatrix m(static_cast<std::size_t>(n * n), 0);
  for (int k = 0; k < n; ++k) m[static_cast<std::size_t>(k * n + k)] = 1;
  // column j = s_i(alpha_j) = alpha_j - a(i, j) alpha_i
  for (int j = 0; j < n; ++j) m[static_cast<std::size_t>((i - 1) * n + j)] -= cd(i - 1, j);
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, int n) {
  IntMatrix out(static_cast<std::size_t>(n * n), 0);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k)
      for (int c = 0; c < n; ++c)
        out[static_cast<std::size_t>(r * n + c)] += a[static_cast<std::size_t>(r * n + k)] * b[static_cast<std::size_t>(k * n + c)];
  return out;
}

IntMatrix word_matrix(const schubert::CartanDatum& cd, const std::vector<int>& word) {
  const int n = cd.rank;
  IntMatrix m(static_cast<std::size_t>(n * n), 0);
  for (int k = 0; k < n; ++k) m[static_cast<std::size_t>(k * n + k)] = 1;
  for (int letter : word) m = multiply(m, simple_reflection_matrix(cd, letter), n);
  return m;
}

BfsGroup bfs_group(const schubert::CartanDatum& cd) {
  BfsGroup g;
  g.rank = cd.rank;
  const IntMatrix id = word_matrix(cd, {});
  g.elements.push_back(id);
  g.distance.push_back(0);
  g.word.emplace_back();
  g.index.emplace(id, 0);
  for (std::size_t k = 0; k < g.elements.size(); ++k) {
    for (int i = 1; i <= cd.rank; ++i) {
      IntMatrix next = multiply(g.elements[k], simple_reflection_matrix(cd, i), cd.rank);
      if (g.index.contains(next)) continue;
      g.index.emplace(next, g.elements.size());
      g.elements.push_back(next);
      g.distance.push_back(g.distance[k] + 1);
      std::vector<int> w = g.word[k];
      w.push_back(i);
      g.word.push_back(std::move(w));
    }
  }
  return g;
}

std::vector<std::vector<bool>> subword_order(const schubert::CartanDatum& cd, const BfsGroup& g) {
  const std::size_t size = g.elements.size();
  std::vector<std::vector<bool>> below(size, std::vector<bool>(size, false));
  for (std::size_t w = 0; w < size; ++w) {
    const std::vector<int>& word = g.word[w];
    const std::size_t len = word.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
      std::vector<int> sub;
      for (std::size_t b = 0; b < len; ++b)
        if (mask >> b & 1) sub.push_back(word[b]);
      const std::size_t x = g.index.at(word_matrix(cd, sub));
      // keep only subwords that are reduced words of x
      if (static_cast<std::size_t>(g.distance[x]) == sub.size()) below[w][x] = true;
    }
  }
  return below;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly q_int(int n) { return Poly(static_cast<std::size_t>(n), 1); }

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace oracles
