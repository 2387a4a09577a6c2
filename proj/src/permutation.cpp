#include "moduli/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace moduli {

MarkedPermutation::MarkedPermutation(std::vector<int> zero_based) : images_(std::move(zero_based)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v]) {
      throw std::domain_error("MarkedPermutation: not a bijection of {1..n}");
    }
    seen[v] = true;
  }
  std::vector<bool> visited(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (visited[i]) continue;
    int len = 0;
    for (std::size_t j = i; !visited[j]; j = images_[j]) {
      visited[j] = true;
      ++len;
    }
    cycle_type_.push_back(len);
  }
  std::sort(cycle_type_.begin(), cycle_type_.end());
}

MarkedPermutation MarkedPermutation::identity(int n) {
  if (n < 0) throw std::domain_error("MarkedPermutation: negative size");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return MarkedPermutation(std::move(v));
}

MarkedPermutation MarkedPermutation::from_images(std::vector<int> images) {
  for (int& v : images) --v;
  return MarkedPermutation(std::move(images));
}

MarkedPermutation MarkedPermutation::transposition(int n, int a, int b) {
  if (a < 1 || b < 1 || a > n || b > n || a == b) {
    throw std::domain_error("MarkedPermutation: bad transposition");
  }
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::swap(v[a - 1], v[b - 1]);
  return MarkedPermutation(std::move(v));
}

MarkedPermutation MarkedPermutation::from_cycles(int n,
                                                 const std::vector<std::vector<int>>& cycles) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  for (const auto& cycle : cycles) {
    if (cycle.size() < 2) continue;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
      if (from < 1 || from > n || to < 1 || to > n) {
        throw std::domain_error("MarkedPermutation: cycle entry out of range");
      }
      v[from - 1] = to - 1;
    }
  }
  return MarkedPermutation(std::move(v));
}

bool MarkedPermutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

MarkedPermutation operator*(const MarkedPermutation& a, const MarkedPermutation& b) {
  if (a.size() != b.size()) throw std::domain_error("MarkedPermutation: size mismatch");
  std::vector<int> v(a.images_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.images_[b.images_[i]];
  return MarkedPermutation(std::move(v));
}

MarkedPermutation MarkedPermutation::inverse() const {
  std::vector<int> v(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) v[images_[i]] = static_cast<int>(i);
  return MarkedPermutation(std::move(v));
}

std::string MarkedPermutation::str() const {
  std::string out;
  std::vector<bool> visited(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (visited[i] || images_[i] == static_cast<int>(i)) continue;
    out += "(";
    bool first = true;
    for (std::size_t j = i; !visited[j]; j = images_[j]) {
      visited[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

PermutationGroupAction PermutationGroupAction::trivial(std::vector<int> factor_sizes) {
  GroupElement id;
  id.reserve(factor_sizes.size());
  for (int n : factor_sizes) id.push_back(MarkedPermutation::identity(n));
  return PermutationGroupAction(std::move(factor_sizes), {std::move(id)});
}

PermutationGroupAction PermutationGroupAction::from_generators(
    std::vector<int> factor_sizes, const std::vector<GroupElement>& generators) {
  for (const auto& g : generators) {
    if (g.size() != factor_sizes.size()) {
      throw std::domain_error("PermutationGroupAction: generator arity mismatch");
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i].size() != factor_sizes[i]) {
        throw std::domain_error("PermutationGroupAction: generator size mismatch");
      }
    }
  }
  GroupElement id;
  for (int n : factor_sizes) id.push_back(MarkedPermutation::identity(n));

  std::set<GroupElement> elements{id};
  std::vector<GroupElement> frontier{id};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& e : frontier) {
      for (const auto& g : generators) {
        GroupElement x;
        x.reserve(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) x.push_back(g[i] * e[i]);
        if (elements.insert(x).second) next.push_back(std::move(x));
      }
    }
    frontier = std::move(next);
  }
  return PermutationGroupAction(std::move(factor_sizes),
                                std::vector<GroupElement>(elements.begin(), elements.end()));
}

PermutationGroupAction PermutationGroupAction::symmetric_on_last(int n, int j) {
  if (j < 0 || j > n) throw std::domain_error("symmetric_on_last: need 0 <= j <= n");
  std::vector<int> tail(j);
  std::iota(tail.begin(), tail.end(), n - j);  // 0-based indices of the last j markings
  std::vector<GroupElement> elements;
  std::vector<int> perm = tail;
  do {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    for (int i = 0; i < j; ++i) images[tail[i]] = perm[i] + 1;
    elements.push_back({MarkedPermutation::from_images(std::move(images))});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return PermutationGroupAction({n}, std::move(elements));
}

bool PermutationGroupAction::is_group() const {
  std::set<GroupElement> all(elements_.begin(), elements_.end());
  if (all.size() != elements_.size()) return false;
  GroupElement id;
  for (int n : factor_sizes_) id.push_back(MarkedPermutation::identity(n));
  if (!all.count(id)) return false;
  for (const auto& a : elements_) {
    GroupElement inv;
    for (const auto& p : a) inv.push_back(p.inverse());
    if (!all.count(inv)) return false;
    for (const auto& b : elements_) {
      GroupElement ab;
      for (std::size_t i = 0; i < a.size(); ++i) ab.push_back(a[i] * b[i]);
      if (!all.count(ab)) return false;
    }
  }
  return true;
}

}  // namespace moduli
