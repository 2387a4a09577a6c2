#pragma once

// Brute-force oracles, part two: rooted stable trees on labelled leaves.
//
// An admissible tree has an unlabelled half-edge into the root and every
// vertex of valence >= 3 (children + own leaves + the incoming half-edge).
// The sum over all such trees on n leaves of the product over vertices of
// chi(M_{0,valence}) equals n! [t^n] D.

#include <functional>
#include <vector>

#include "moduli/rational.hpp"

namespace moduli {

struct StableTree {
  std::vector<int> leaves;  // labels held directly at this vertex
  std::vector<StableTree> children;

  // children + leaves + 1 for the incoming half-edge (or root half-edge).
  int valence() const { return static_cast<int>(leaves.size() + children.size()) + 1; }
  bool is_stable() const;
  int leaf_count() const;
};

// Visits every isomorphism class exactly once; children are unordered
// (canonically ordered by minimal leaf label). n >= 2.
void for_each_stable_tree(int n, const std::function<void(const StableTree&)>& visit);

std::vector<StableTree> enumerate_stable_rooted_trees(int n);

long long count_stable_trees(int n);

// Sum over trees of prod_v chi(M_{0,valence(v)}).
Rational tree_contribution_sum(int n);

}  // namespace moduli
