#pragma once

#include <string>
#include <vector>

#include "schubert/rootsystem.hpp"
#include "schubert/weyl.hpp"

// Type-A ground truth by pattern avoidance. Deliberately brute force: it is
// only used to cross-check the height-profile machinery.
namespace schubert::oracle {

// One-line notation (w(1), ..., w(n)), values 1..n.
using Permutation = std::vector<int>;

// Permutation of {1..rank+1} realizing w on e_1..e_n, read off from the
// images of e_1 - e_j. Throws DomainError outside family A.
Permutation weyl_to_permutation(const RootSystem& rs, const WeylElement& w);

// Some subsequence of p is order-isomorphic to pattern.
bool contains_pattern(const Permutation& p, const Permutation& pattern);

// Avoids both 3412 and 4231.
bool is_smooth_type_a(const Permutation& p);

// "4231"; values >= 10 are comma separated.
std::string format_permutation(const Permutation& p);

}  // namespace schubert::oracle
