#pragma once

// Test-only reference computations. Nothing here goes through WeylElement,
// BruhatLowerSet or the closure-based root construction.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "schubert/rootsystem.hpp"

namespace oracles {

using IntMatrix = std::vector<int>;  // row-major rank x rank
using Coords = std::vector<int>;

// Positive roots of A_n, B_n, C_n, D_n from the classical e-basis
// description, converted to simple-root coordinates.
std::set<Coords> classical_positive_roots(schubert::Family family, int n);

// Weyl group by breadth-first search on plain integer matrices.
struct BfsGroup {
  int rank = 0;
  std::vector<IntMatrix> elements;        // BFS order
  std::vector<int> distance;              // minimal word length
  std::vector<std::vector<int>> word;     // one minimal word (1-based letters)
  std::map<IntMatrix, std::size_t> index;
};

IntMatrix simple_reflection_matrix(const schubert::CartanDatum& cd, int i);  // 1-based
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, int n);
IntMatrix word_matrix(const schubert::CartanDatum& cd, const std::vector<int>& word);
BfsGroup bfs_group(const schubert::CartanDatum& cd);

// below[w][x]: x <= w by the subword criterion on the stored minimal word of w.
std::vector<std::vector<bool>> subword_order(const schubert::CartanDatum& cd, const BfsGroup& g);

// integer polynomial helpers
using Poly = std::vector<long long>;
Poly poly_mul(const Poly& a, const Poly& b);
Poly q_int(int n);

// Permutations of 1..n in lexicographic order.
std::vector<std::vector<int>> all_permutations(int n);

}  // namespace oracles
