#pragma once

// Permutations of marking indices {1..n} and finite groups of them acting
// factor-wise on products of configuration spaces.

#include <cstddef>
#include <string>
#include <vector>

#include "moduli/rational.hpp"

namespace moduli {

class MarkedPermutation {
 public:
  static MarkedPermutation identity(int n);
  // images[i-1] = sigma(i), both 1-based; must be a bijection of {1..n}.
  static MarkedPermutation from_images(std::vector<int> images);
  // Swap of markings a, b (1-based).
  static MarkedPermutation transposition(int n, int a, int b);
  // Product of cycles, e.g. {{1,2},{3,4,5}} = (1 2)(3 4 5); entries 1-based.
  static MarkedPermutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[i - 1] + 1; }  // 1-based

  // Multiset of cycle lengths, sorted ascending; computed once on construction.
  const std::vector<int>& cycle_type() const { return cycle_type_; }
  bool is_identity() const;

  friend MarkedPermutation operator*(const MarkedPermutation& a, const MarkedPermutation& b);
  MarkedPermutation inverse() const;
  friend bool operator==(const MarkedPermutation& a, const MarkedPermutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator<(const MarkedPermutation& a, const MarkedPermutation& b) {
    return a.images_ < b.images_;
  }

  std::string str() const;  // cycle notation, e.g. "(3 4)(5 6)" or "id"

 private:
  explicit MarkedPermutation(std::vector<int> zero_based);

  std::vector<int> images_;     // 0-based internally
  std::vector<int> cycle_type_;
};

// One group element acts on a product of configuration spaces, one
// permutation per factor.
using GroupElement = std::vector<MarkedPermutation>;

class PermutationGroupAction {
 public:
  // Closure-completes the generators (identity and inverses included).
  static PermutationGroupAction from_generators(std::vector<int> factor_sizes,
                                                const std::vector<GroupElement>& generators);
  static PermutationGroupAction trivial(std::vector<int> factor_sizes);
  // Full symmetric group S_j acting on the last j markings of a single factor,
  // stored extensionally.
  static PermutationGroupAction symmetric_on_last(int n, int j);

  const std::vector<int>& factor_sizes() const { return factor_sizes_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  // Test hook: closure, identity, and inverses all present.
  bool is_group() const;

 private:
  PermutationGroupAction(std::vector<int> factor_sizes, std::vector<GroupElement> elements)
      : factor_sizes_(std::move(factor_sizes)), elements_(std::move(elements)) {}

  std::vector<int> factor_sizes_;
  std::vector<GroupElement> elements_;
};

}  // namespace moduli
