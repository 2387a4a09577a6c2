#include "moduli/counting_oracle.hpp"

#include <map>
#include <stdexcept>

namespace moduli {

namespace {

int mobius(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  }
  if (n > 1) m = -m;
  return m;
}

const Polynomial& pgl2_order() {
  // q^3 - q
  static const Polynomial p({Rational(0), Rational(-1), Rational(0), Rational(1)});
  return p;
}

Polynomial twisted_count_for_type(const std::vector<int>& cycle_type) {
  std::map<int, int> multiplicity;
  for (int l : cycle_type) ++multiplicity[l];
  Polynomial product = Polynomial::constant(Rational(1));
  for (auto [l, c] : multiplicity) {
    Polynomial ml = exact_degree_count(l);
    for (int t = 0; t < c; ++t) {
      product *= ml - Polynomial::constant(Rational(t * l));
    }
  }
  try {
    return exact_div(product, pgl2_order());
  } catch (const std::domain_error&) {
    // PGL2 acts freely on >= 3 distinct points, so the configuration count
    // must be divisible by q^3 - q; a remainder means the oracle is broken.
    throw std::logic_error("twisted_count: point count not divisible by q^3 - q");
  }
}

}  // namespace

Polynomial exact_degree_count(int l) {
  if (l < 1) throw std::domain_error("exact_degree_count: l must be positive");
  Polynomial sum;
  for (int e = 1; e <= l; ++e) {
    if (l % e != 0) continue;
    int mu = mobius(l / e);
    if (mu == 0) continue;
    Polynomial term = Polynomial::monomial(Rational(1), e) + Polynomial::constant(Rational(1));
    sum += Rational(mu) * term;
  }
  return sum;
}

Polynomial twisted_count(int n, const MarkedPermutation& sigma) {
  if (n < 3) throw std::domain_error("twisted_count: need n >= 3");
  if (sigma.size() != n) throw std::domain_error("twisted_count: size mismatch");
  return twisted_count_for_type(sigma.cycle_type());
}

Polynomial burnside_average(const PermutationGroupAction& action) {
  for (int n : action.factor_sizes()) {
    if (n < 3) throw std::domain_error("burnside_average: every factor needs n >= 3");
  }
  // Group elements by the tuple of factor cycle types; the twisted count only
  // depends on those (and the symmetric groups of the S_j sweep are large).
  std::map<std::vector<std::vector<int>>, long long> classes;
  for (const auto& element : action.elements()) {
    std::vector<std::vector<int>> key;
    key.reserve(element.size());
    for (const auto& p : element) key.push_back(p.cycle_type());
    ++classes[key];
  }
  Polynomial sum;
  for (const auto& [key, count] : classes) {
    Polynomial term = Polynomial::constant(Rational(1));
    for (const auto& type : key) term *= twisted_count_for_type(type);
    sum += Rational(count) * term;
  }
  return Rational(1, BigInt(action.order())) * sum;
}

Rational burnside_quotient_chi(const PermutationGroupAction& action) {
  return burnside_average(action).evaluate(Rational(1));
}

}  // namespace moduli
