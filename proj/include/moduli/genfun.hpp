#pragma once

// Generating functions: the tree series D and E = log(1+D), the genus-1
// contributions and their assembled/closed K1, the five genus-2 graph-type
// contributions and the assembled/closed K2, and extraction of the
// chi(compactified M_{g,n}) tables from the exponential coefficients.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "moduli/power_series.hpp"
#include "moduli/rational.hpp"

namespace moduli {

inline constexpr std::size_t kDefaultOrder = 12;

// The unique series with D(0) = 0, D'(0) = 1 solving D'(1 - log(1+D)) = 1,
// computed coefficient by coefficient. Requires order >= 2.
PowerSeries series_D(std::size_t order);

// E = log(1 + D).
PowerSeries series_E(std::size_t order);

// Graphs with one genus-1 vertex: sum_{n>=1} chi(M_{1,n}) D^n/n!, computed
// both term-by-term and in the closed form 13D/12 + 11D^2/24 + D^3/36
// - D^4/48 - E/12; throws if the two disagree.
PowerSeries k1_vertex_contribution(std::size_t order);

// Graphs containing a loop: -log(1-E)/2 + D/2 + D^2/2 + D^3/4 + D^4/16.
PowerSeries k1_loop_contribution(std::size_t order);

PowerSeries k1_assembled(std::size_t order);  // vertex + loop contributions

// 19D/12 + 23D^2/24 + 5D^3/18 + D^4/24 - E/12 - log(1 - log(1+D))/2.
PowerSeries k1_closed(std::size_t order);

enum class K2GraphType {
  Type1,    // one genus-2 vertex
  Type234,  // two genus-1 halves joined by a bridge
  Type5,    // genus-1 vertex with a loop
  Type6,    // two loops at one vertex
  Type7,    // two vertices joined by three edges
};

// The closed expression for one graph-type, evaluated in D and E. Type 1 is
// additionally verified against the direct sum over chi(M_{2,n}).
PowerSeries k2_contribution(K2GraphType type, std::size_t order);

PowerSeries k2_assembled(std::size_t order);  // sum of the five contributions

// The single rational expression in D and E over 1440 (1+D)^2 (E-1)^3.
PowerSeries k2_closed(std::size_t order);

// (n, n! [t^n] K_genus) for n up to max_n; requires max_n < order.
std::vector<std::pair<int, Rational>> chibar_table(int genus, int max_n,
                                                   std::size_t order = kDefaultOrder);

// Lookup by name: D, E, K1, K2, K1_vertex, K1_loop, K2_type1, K2_type234,
// K2_type5, K2_type6, K2_type7.
struct NamedSeries {
  std::string name;
  PowerSeries series;
};
NamedSeries named_series(const std::string& name, std::size_t order);
std::vector<std::string> named_series_names();

}  // namespace moduli
