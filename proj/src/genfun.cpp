#include "moduli/genfun.hpp"

#include <initializer_list>
#include <stdexcept>

#include "moduli/open_moduli.hpp"

namespace moduli {

namespace {

void require_order(std::size_t order) {
  if (order < 2) throw std::domain_error("series: need order >= 2");
}

// c0 + c1 X + c2 X^2 + ... for a series X with zero constant term.
PowerSeries poly_in(const PowerSeries& x, std::initializer_list<Rational> coeffs) {
  std::vector<Rational> outer(x.order());
  std::size_t k = 0;
  for (const auto& c : coeffs) {
    if (k >= outer.size()) break;
    outer[k++] = c;
  }
  return compose(PowerSeries(std::move(outer)), x);
}

// Shared context for the K1/K2 expressions.
struct Series {
  PowerSeries d, e, one_plus_d, one_minus_e, inv_d, inv_d2, inv_e, inv_e2, inv_e3;

  explicit Series(std::size_t order)
      : d(series_D(order)),
        e(log1p(d)),
        one_plus_d(d + Rational(1)),
        one_minus_e(-e + Rational(1)),
        inv_d(reciprocal(one_plus_d)),
        inv_d2(inv_d * inv_d),
        inv_e(reciprocal(one_minus_e)),
        inv_e2(inv_e * inv_e),
        inv_e3(inv_e2 * inv_e) {}
};

PowerSeries k2_type1(const Series& s, std::size_t order) {
  PowerSeries direct = PowerSeries::zero(order);
  PowerSeries d_power = PowerSeries::constant(Rational(1), order);
  for (std::size_t n = 0; n < order; ++n) {
    direct = direct + chi_m2_open(static_cast<int>(n)) / Rational(factorial(n)) * d_power;
    d_power = d_power * s.d;
  }
  PowerSeries closed =
      Rational(-1, 240) * s.inv_d2 +
      poly_in(s.d, {Rational(241, 240), Rational(239, 120), Rational(81, 80), Rational(-1, 60),
                    Rational(-7, 48), Rational(-1, 40), Rational(-1, 240)});
  if (!(direct == closed)) {
    throw std::logic_error("k2 type 1: direct sum and closed form disagree");
  }
  return closed;
}

PowerSeries k2_type234(const Series& s) {
  PowerSeries num = poly_in(s.d, {361, 874, 909, 536, 192, 40, 4});
  PowerSeries p = poly_in(s.d, {19, 23, 10, 2});
  return poly_in(s.d, {Rational(1), Rational(1), Rational(1, 2)}) +
         Rational(1, 288) * (num * s.inv_e) +
         Rational(-1, 144) * (p * s.inv_e * s.inv_d) +
         Rational(1, 24) * (p * s.inv_e2 * s.inv_d) +
         Rational(-1, 24) * (s.inv_e2 * s.inv_d2) +
         Rational(1, 288) * (s.inv_e * s.inv_d2) +
         Rational(1, 8) * (s.inv_e3 * s.inv_d2);
}

PowerSeries k2_type5(const Series& s) {
  return Rational(1, 24) * (s.inv_e * s.inv_d2) +
         Rational(1, 24) * (poly_in(s.d, {11, 2, -3}) * s.inv_e) +
         poly_in(s.d, {Rational(1, 2), Rational(3, 2), Rational(7, 4), Rational(7, 6),
                       Rational(11, 24), Rational(-1, 8), Rational(1, 48)});
}

PowerSeries k2_type6(const Series& s) {
  PowerSeries e2 = s.e * s.e;
  return Rational(-1, 8) * (s.inv_d2 * s.inv_e2) +
         Rational(1, 4) * (e2 * s.inv_e * poly_in(s.d, {Rational(1), Rational(1), Rational(1, 2)})) +
         s.e * poly_in(s.d, {Rational(1, 4), Rational(1, 4), Rational(1, 8)}) +
         poly_in(s.d, {Rational(1, 8), Rational(-1, 4), Rational(-3, 4), Rational(-7, 8),
                       Rational(-17, 32), Rational(-3, 16), Rational(-1, 32)});
}

PowerSeries k2_type7(const Series& s) {
  PowerSeries e2 = s.e * s.e;
  return Rational(1, 12) * (s.inv_d2 * s.inv_e3) +
         Rational(1, 4) * (e2 * s.inv_e) +
         Rational(1, 4) * (s.e * poly_in(s.d, {Rational(0), Rational(2), Rational(1)}) * s.inv_e) +
         Rational(1, 4) * s.e +
         poly_in(s.d, {Rational(11, 12), Rational(5, 3), Rational(7, 4), Rational(1),
                       Rational(17, 48), Rational(1, 16), Rational(1, 96)});
}

}  // namespace

PowerSeries series_D(std::size_t order) {
  require_order(order);
  std::vector<Rational> d(order);
  d[1] = Rational(1);
  for (std::size_t m = 1; m + 1 < order; ++m) {
    // (m+1) d_{m+1} = [t^m](D' log(1+D)) + [m == 0], using d_1..d_m only:
    // log(1+D) has zero constant term, so the product needs D' only below t^m.
    PowerSeries partial(std::vector<Rational>(d.begin(), d.begin() + m + 1));
    PowerSeries lg = log1p(partial);
    Rational sum(0);
    for (std::size_t j = 1; j <= m; ++j) {
      sum += Rational(BigInt(m - j + 1)) * d[m - j + 1] * lg.coeff(j);
    }
    d[m + 1] = sum / Rational(BigInt(m + 1));
  }
  return PowerSeries(std::move(d));
}

PowerSeries series_E(std::size_t order) {
  require_order(order);
  return log1p(series_D(order));
}

PowerSeries k1_vertex_contribution(std::size_t order) {
  require_order(order);
  Series s(order);
  PowerSeries direct = PowerSeries::zero(order);
  PowerSeries d_power = s.d;
  for (std::size_t n = 1; n < order; ++n) {
    direct = direct + chi_m1_open(static_cast<int>(n)) / Rational(factorial(n)) * d_power;
    d_power = d_power * s.d;
  }
  PowerSeries closed = poly_in(s.d, {Rational(0), Rational(13, 12), Rational(11, 24),
                                     Rational(1, 36), Rational(-1, 48)}) +
                       Rational(-1, 12) * s.e;
  if (!(direct == closed)) {
    throw std::logic_error("k1 vertex contribution: direct sum and closed form disagree");
  }
  return closed;
}

PowerSeries k1_loop_contribution(std::size_t order) {
  require_order(order);
  Series s(order);
  return Rational(-1, 2) * log1p(-s.e) +
         poly_in(s.d, {Rational(0), Rational(1, 2), Rational(1, 2), Rational(1, 4),
                       Rational(1, 16)});
}

PowerSeries k1_assembled(std::size_t order) {
  return k1_vertex_contribution(order) + k1_loop_contribution(order);
}

PowerSeries k1_closed(std::size_t order) {
  require_order(order);
  Series s(order);
  return poly_in(s.d, {Rational(0), Rational(19, 12), Rational(23, 24), Rational(5, 18),
                       Rational(1, 24)}) +
         Rational(-1, 12) * s.e + Rational(-1, 2) * log1p(-s.e);
}

PowerSeries k2_contribution(K2GraphType type, std::size_t order) {
  require_order(order);
  Series s(order);
  switch (type) {
    case K2GraphType::Type1:
      return k2_type1(s, order);
    case K2GraphType::Type234:
      return k2_type234(s);
    case K2GraphType::Type5:
      return k2_type5(s);
    case K2GraphType::Type6:
      return k2_type6(s);
    case K2GraphType::Type7:
      return k2_type7(s);
  }
  throw std::logic_error("unreachable");
}

PowerSeries k2_assembled(std::size_t order) {
  require_order(order);
  Series s(order);
  return k2_type1(s, order) + k2_type234(s) + k2_type5(s) + k2_type6(s) + k2_type7(s);
}

PowerSeries k2_closed(std::size_t order) {
  require_order(order);
  Series s(order);
  const PowerSeries& d = s.d;
  PowerSeries em1 = s.e - Rational(1);
  PowerSeries em1_2 = em1 * em1;

  auto e_poly = [&](std::initializer_list<Rational> coeffs) { return poly_in(s.e, coeffs); };

  PowerSeries num =
      Rational(-2) * d.pow(8) * em1_2 * e_poly({7, 3}) +
      Rational(-24) * d.pow(7) * em1_2 * e_poly({-7, 17}) +
      Rational(-3) * d.pow(6) * em1_2 * e_poly({259, 201}) +
      Rational(30) * d.pow(5) * em1_2 * e_poly({-221, 61}) +
      Rational(15) * d.pow(4) * e_poly({-1386, 3395, -2640, 631}) +
      Rational(60) * d.pow(3) * e_poly({-652, 1633, -1322, 341}) +
      Rational(180) * d.pow(2) * e_poly({-254, 635, -519, 138}) +
      Rational(360) * d * e_poly({-84, 206, -167, 45}) +
      Rational(60) * e_poly({-144, 336, -270, 73});
  PowerSeries den = Rational(1440) * (s.one_plus_d * s.one_plus_d * (em1_2 * em1));
  return num * reciprocal(den);
}

std::vector<std::pair<int, Rational>> chibar_table(int genus, int max_n, std::size_t order) {
  if (genus != 1 && genus != 2) throw std::domain_error("chibar_table: genus must be 1 or 2");
  if (max_n < 0 || static_cast<std::size_t>(max_n) >= order) {
    throw std::domain_error("chibar_table: need max_n < order; rerun with a higher order");
  }
  PowerSeries k = genus == 1 ? k1_closed(order) : k2_closed(order);
  std::vector<std::pair<int, Rational>> table;
  for (int n = genus == 1 ? 1 : 0; n <= max_n; ++n) {
    table.emplace_back(n, Rational(factorial(n)) * k.coeff(n));
  }
  return table;
}

NamedSeries named_series(const std::string& name, std::size_t order) {
  if (name == "D") return {name, series_D(order)};
  if (name == "E") return {name, series_E(order)};
  if (name == "K1") return {name, k1_closed(order)};
  if (name == "K2") return {name, k2_closed(order)};
  if (name == "K1_vertex") return {name, k1_vertex_contribution(order)};
  if (name == "K1_loop") return {name, k1_loop_contribution(order)};
  if (name == "K2_type1") return {name, k2_contribution(K2GraphType::Type1, order)};
  if (name == "K2_type234") return {name, k2_contribution(K2GraphType::Type234, order)};
  if (name == "K2_type5") return {name, k2_contribution(K2GraphType::Type5, order)};
  if (name == "K2_type6") return {name, k2_contribution(K2GraphType::Type6, order)};
  if (name == "K2_type7") return {name, k2_contribution(K2GraphType::Type7, order)};
  throw std::domain_error("unknown series name: " + name);
}

std::vector<std::string> named_series_names() {
  return {"D",         "E",          "K1",       "K2",       "K1_vertex", "K1_loop",
          "K2_type1",  "K2_type234", "K2_type5", "K2_type6", "K2_type7"};
}

}  // namespace moduli
