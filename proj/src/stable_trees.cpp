#include "moduli/stable_trees.hpp"

#include <stdexcept>

#include "moduli/open_moduli.hpp"

namespace moduli {

namespace {

// Enumerate partitions of `items` into unordered blocks of size >= 2; the
// block containing the first element is chosen explicitly, which makes each
// partition appear exactly once.
void partitions_min2(const std::vector<int>& items,
                     std::vector<std::vector<int>>& blocks,
                     const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  if (items.empty()) {
    visit(blocks);
    return;
  }
  int first = items[0];
  std::vector<int> rest(items.begin() + 1, items.end());
  int m = static_cast<int>(rest.size());
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> block{first};
    std::vector<int> remaining;
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1) {
        block.push_back(rest[i]);
      } else {
        remaining.push_back(rest[i]);
      }
    }
    blocks.push_back(std::move(block));
    partitions_min2(remaining, blocks, visit);
    blocks.pop_back();
  }
}

void build_trees(const std::vector<int>& leaf_set,
                 const std::function<void(const StableTree&)>& visit) {
  int n = static_cast<int>(leaf_set.size());
  // Choose the leaves kept at the root; the rest is partitioned among child
  // subtrees, each of which needs >= 2 leaves.
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> root_leaves, delegated;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        root_leaves.push_back(leaf_set[i]);
      } else {
        delegated.push_back(leaf_set[i]);
      }
    }
    if (delegated.size() == 1) continue;
    std::vector<std::vector<int>> blocks;
    partitions_min2(delegated, blocks, [&](const std::vector<std::vector<int>>& parts) {
      if (root_leaves.size() + parts.size() < 2) return;  // root valence >= 3
      // Cartesian product of the child choices, one subtree per block.
      StableTree node{root_leaves, {}};
      node.children.resize(parts.size());
      std::function<void(std::size_t)> fill = [&](std::size_t idx) {
        if (idx == parts.size()) {
          visit(node);
          return;
        }
        build_trees(parts[idx], [&](const StableTree& sub) {
          node.children[idx] = sub;
          fill(idx + 1);
        });
      };
      fill(0);
    });
  }
}

Rational tree_product(const StableTree& t) {
  Rational value = chi_m0_open(t.valence());
  for (const auto& child : t.children) value *= tree_product(child);
  return value;
}

}  // namespace

bool StableTree::is_stable() const {
  if (valence() < 3) return false;
  for (const auto& child : children) {
    if (!child.is_stable()) return false;
  }
  return true;
}

int StableTree::leaf_count() const {
  int total = static_cast<int>(leaves.size());
  for (const auto& child : children) total += child.leaf_count();
  return total;
}

void for_each_stable_tree(int n, const std::function<void(const StableTree&)>& visit) {
  if (n < 2) throw std::domain_error("for_each_stable_tree: need n >= 2");
  // ~283M trees at n = 11; the count grows by a factor of ~25 per leaf.
  if (n > 10) throw std::domain_error("for_each_stable_tree: n > 10 is too large to enumerate");
  std::vector<int> leaves;
  for (int i = 1; i <= n; ++i) leaves.push_back(i);
  build_trees(leaves, visit);
}

std::vector<StableTree> enumerate_stable_rooted_trees(int n) {
  std::vector<StableTree> out;
  for_each_stable_tree(n, [&](const StableTree& t) { out.push_back(t); });
  return out;
}

long long count_stable_trees(int n) {
  long long count = 0;
  for_each_stable_tree(n, [&](const StableTree&) { ++count; });
  return count;
}

Rational tree_contribution_sum(int n) {
  Rational sum(0);
  for_each_stable_tree(n, [&](const StableTree& t) { sum += tree_product(t); });
  return sum;
}

}  // namespace moduli
