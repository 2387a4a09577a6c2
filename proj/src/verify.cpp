#include "moduli/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "moduli/counting_oracle.hpp"
#include "moduli/open_moduli.hpp"
#include "moduli/polynomial.hpp"
#include "moduli/quotient_tables.hpp"
#include "moduli/stable_trees.hpp"

namespace moduli {

namespace {

constexpr int kPropertyCases = 500;
constexpr unsigned long long kSeed = 0x0c0ffee5eedULL;  // fixed: runs are reproducible

class Checker {
 public:
  void pass(const std::string& name, const std::string& detail) {
    results_.push_back({name, true, detail});
  }
  void fail(const std::string& name, const std::string& detail) {
    results_.push_back({name, false, detail});
  }
  void equals(const std::string& name, const Rational& actual, const Rational& expected) {
    if (actual == expected) {
      pass(name, "value " + expected.str());
    } else {
      fail(name, "expected " + expected.str() + ", actual " + actual.str());
    }
  }
  void require(const std::string& name, bool ok, const std::string& on_pass,
               const std::string& on_fail) {
    if (ok) {
      pass(name, on_pass);
    } else {
      fail(name, on_fail);
    }
  }

  std::vector<CheckResult> take() {
    std::sort(results_.begin(), results_.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return std::move(results_);
  }

 private:
  std::vector<CheckResult> results_;
};

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(-99, 99);
  std::uniform_int_distribution<long long> den(1, 24);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

PowerSeries random_series(std::mt19937_64& rng, std::size_t order, bool zero_constant) {
  std::vector<Rational> c(order);
  for (std::size_t k = zero_constant ? 1 : 0; k < order; ++k) c[k] = random_rational(rng);
  return PowerSeries(std::move(c));
}

Polynomial random_polynomial(std::mt19937_64& rng, int max_degree, bool nonzero) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  for (;;) {
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& x : c) x = random_rational(rng);
    Polynomial p(std::move(c));
    if (!nonzero || !p.is_zero()) return p;
  }
}

void suite_series_algebra(Checker& check) {
  std::mt19937_64 rng(kSeed);

  int bad = 0;
  for (int i = 0; i < kPropertyCases; ++i) {
    PowerSeries a = random_series(rng, 6, false);
    PowerSeries b = random_series(rng, 6, false);
    PowerSeries c = random_series(rng, 6, false);
    bool ok = (a + b) + c == a + (b + c) && a + b == b + a && a * b == b * a &&
              (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c;
    if (!ok) ++bad;
  }
  check.require("series-algebra/ring-axioms", bad == 0,
                std::to_string(kPropertyCases) + " randomized cases",
                std::to_string(bad) + " failing cases");

  bad = 0;
  for (int i = 0; i < kPropertyCases; ++i) {
    PowerSeries f = random_series(rng, 7, true);
    bool ok = exp(log1p(f)) == f + Rational(1) &&
              log1p(exp(f) - Rational(1)) == f;
    if (!ok) ++bad;
  }
  check.require("series-algebra/exp-log-inversion", bad == 0,
                std::to_string(kPropertyCases) + " randomized cases",
                std::to_string(bad) + " failing cases");

  bad = 0;
  for (int i = 0; i < kPropertyCases; ++i) {
    PowerSeries f = random_series(rng, 7, false);
    PowerSeries g = random_series(rng, 7, false);
    if (!(derivative(f * g) == derivative(f) * g + f * derivative(g))) ++bad;
  }
  check.require("series-algebra/product-rule", bad == 0,
                std::to_string(kPropertyCases) + " randomized cases",
                std::to_string(bad) + " failing cases");

  bad = 0;
  for (int i = 0; i < kPropertyCases; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng);
    if (!((a + b) - a == b)) ++bad;
  }
  check.require("series-algebra/rational-exactness", bad == 0,
                std::to_string(kPropertyCases) + " randomized cases",
                std::to_string(bad) + " failing cases");

  bad = 0;
  for (int i = 0; i < kPropertyCases; ++i) {
    Polynomial a = random_polynomial(rng, 5, false);
    Polynomial b = random_polynomial(rng, 4, true);
    if (!(exact_div(a * b, b) == a)) ++bad;
  }
  check.require("series-algebra/polynomial-exact-division", bad == 0,
                std::to_string(kPropertyCases) + " randomized cases",
                std::to_string(bad) + " failing cases");
}

// One table-vs-oracle sweep cell, plus the point-count sanity values.
struct SweepStats {
  int cells = 0;
  std::vector<std::string> mismatches;
  std::vector<std::string> bad_counts;
};

void sweep_cell(const QuotientSpec& spec, const Rational& table_value, SweepStats& stats) {
  ++stats.cells;
  Polynomial average = burnside_average(action_for(spec));
  Rational oracle_value = average.evaluate(Rational(1));

  std::ostringstream label;
  label << spec.kind_name() << "(";
  for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
    if (i) label << ",";
    label << spec.sizes[i];
  }
  if (spec.j) label << ";j=" << *spec.j;
  label << ")";

  if (!(oracle_value == table_value)) {
    stats.mismatches.push_back(label.str() + " table=" + table_value.str() +
                               " oracle=" + oracle_value.str());
  }
  // The average counts points of a variety over F_q, so it must take
  // nonnegative integer values at prime powers.
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    Rational value = average.evaluate(Rational(q));
    if (!value.is_integer() || value.sign() < 0) {
      stats.bad_counts.push_back(label.str() + " at q=" + std::to_string(q) + ": " + value.str());
    }
  }
}

void report_sweep(Checker& check, const std::string& name, const SweepStats& stats) {
  if (stats.mismatches.empty()) {
    check.pass(name, std::to_string(stats.cells) + " cells agree with the oracle");
    return;
  }
  std::string detail = std::to_string(stats.mismatches.size()) + "/" +
                       std::to_string(stats.cells) + " mismatches:";
  for (std::size_t i = 0; i < stats.mismatches.size() && i < 4; ++i) {
    detail += " " + stats.mismatches[i] + ";";
  }
  check.fail(name, detail);
}

void suite_quotients_vs_oracle(Checker& check) {
  constexpr int kMaxSize = 9;
  SweepStats all_counts;

  {
    SweepStats stats;
    for (int n = 3; n <= kMaxSize; ++n) {
      for (int j = 0; j <= n; ++j) {
        QuotientSpec spec{QuotientKind::M0ModSj, {n}, j};
        sweep_cell(spec, chi_m0_mod_Sj(n, j), stats);
      }
    }
    report_sweep(check, "quotients-vs-oracle/m0-mod-sj", stats);
    all_counts.bad_counts.insert(all_counts.bad_counts.end(), stats.bad_counts.begin(),
                                 stats.bad_counts.end());
    all_counts.cells += stats.cells;
  }
  {
    SweepStats stats;
    for (int n = 4; n <= kMaxSize; ++n) {
      sweep_cell({QuotientKind::M0ModKlein, {n}, {}}, chi_m0_mod_klein(n), stats);
      sweep_cell({QuotientKind::M0ModD4, {n}, {}}, chi_m0_mod_D4(n), stats);
    }
    report_sweep(check, "quotients-vs-oracle/m0-mod-klein-d4", stats);
    all_counts.bad_counts.insert(all_counts.bad_counts.end(), stats.bad_counts.begin(),
                                 stats.bad_counts.end());
    all_counts.cells += stats.cells;
  }
  {
    SweepStats stats;
    for (int n1 = 3; n1 <= kMaxSize; ++n1) {
      for (int n2 = n1; n2 <= kMaxSize; ++n2) {
        sweep_cell({QuotientKind::Prod2ModS2, {n1, n2}, {}}, chi_prod2_mod_S2(n1, n2), stats);
        sweep_cell({QuotientKind::Prod2ModS3, {n1, n2}, {}}, chi_prod2_mod_S3(n1, n2), stats);
        try {
          // The Klein table refuses (4, n2 >= 7) and the delegated (3,3).
          Rational table_value = chi_prod2_mod_klein(n1, n2);
          sweep_cell({QuotientKind::Prod2ModKlein, {n1, n2}, {}}, table_value, stats);
        } catch (const std::domain_error&) {
        }
      }
    }
    report_sweep(check, "quotients-vs-oracle/products", stats);
    all_counts.bad_counts.insert(all_counts.bad_counts.end(), stats.bad_counts.begin(),
                                 stats.bad_counts.end());
    all_counts.cells += stats.cells;
  }
  {
    SweepStats stats;
    for (int n1 = 3; n1 <= kMaxSize; ++n1) {
      for (int n2 = n1; n2 <= kMaxSize; ++n2) {
        for (int n3 = 4; n3 <= kMaxSize; ++n3) {
          Rational table_value;
          try {
            table_value = chi_prod3_mod_klein(n1, n2, n3);
          } catch (const std::domain_error&) {
            continue;  // the table refuses cells delegated outside its range
          }
          sweep_cell({QuotientKind::Prod3ModKlein, {n1, n2, n3}, {}}, table_value, stats);
        }
      }
    }
    report_sweep(check, "quotients-vs-oracle/triple-products", stats);
    all_counts.bad_counts.insert(all_counts.bad_counts.end(), stats.bad_counts.begin(),
                                 stats.bad_counts.end());
    all_counts.cells += stats.cells;
  }

  check.require("quotients-vs-oracle/point-count-values", all_counts.bad_counts.empty(),
                "P(q) is a nonnegative integer at q in {2,3,4,5,7,8,9} across " +
                    std::to_string(all_counts.cells) + " cells",
                all_counts.bad_counts.empty() ? "" : all_counts.bad_counts.front());

  bool refused = false;
  try {
    action_for({QuotientKind::M1ModS2, {4}, {}});
  } catch (const std::domain_error&) {
    refused = true;
  }
  check.require("quotients-vs-oracle/elliptic-refusal", refused,
                "oracle refuses elliptic factors",
                "oracle accepted an elliptic factor");
}

void suite_strata(Checker& check) {
  static const int kM2Table[7] = {1, 2, 2, 0, -4, 0, -24};
  bool ok = true;
  std::string detail;
  for (int n = 0; n <= 6; ++n) {
    Rational got = chi_m2_via_strata(n);
    if (!(got == Rational(kM2Table[n]))) {
      ok = false;
      detail = "n=" + std::to_string(n) + ": expected " + std::to_string(kM2Table[n]) +
               ", actual " + got.str();
      break;
    }
  }
  check.require("strata/genus2-table", ok, "n = 0..6 reproduce (1,2,2,0,-4,0,-24)", detail);

  check.equals("strata/genus2-recursion-start", chi_m2_recursive(7), 168);

  ok = true;
  detail.clear();
  for (int n = 7; n <= 15; ++n) {
    if (!(chi_m2_recursive(n) == chi_m2_open(n))) {
      ok = false;
      detail = "n=" + std::to_string(n);
      break;
    }
  }
  check.require("strata/genus2-recursion-vs-closed", ok,
                "recursion matches (-1)^(n+1) (n+1)!/240 for n = 7..15", detail);

  static const int kM1Table[4] = {1, 1, 0, 0};
  ok = true;
  detail.clear();
  for (int n = 1; n <= 4; ++n) {
    if (!(chi_m1_via_strata(n) == Rational(kM1Table[n - 1]))) {
      ok = false;
      detail = "n=" + std::to_string(n);
      break;
    }
  }
  check.require("strata/genus1-table", ok, "n = 1..4 reproduce (1,1,0,0)", detail);

  check.equals("strata/genus1-recursion-start", chi_m1_recursive(5), -2);

  ok = true;
  detail.clear();
  for (int n = 5; n <= 12; ++n) {
    if (!(chi_m1_recursive(n) == chi_m1_open(n))) {
      ok = false;
      detail = "n=" + std::to_string(n);
      break;
    }
  }
  check.require("strata/genus1-recursion-vs-closed", ok,
                "recursion matches (-1)^n (n-1)!/12 for n = 5..12", detail);

  // The two packagings of the genus-2 coefficients agree, and every a_{j,r}
  // is a positive integer.
  ok = true;
  detail.clear();
  for (int n = 0; n <= 12 && ok; ++n) {
    for (int j = 0; j <= std::min(n, 6) && ok; ++j) {
      for (int r = 0; 2 * r <= n - j && ok; ++r) {
        Rational a = a_jr(n, j, r);
        Rational lhs = a * pow2(n - j - r - 1);
        Rational rhs = Rational(binomial(n, j) * factorial(n - j)) /
                       Rational(factorial(n - j - 2 * r) * factorial(r)) *
                       pow2(n - j - 2 * r - 1);
        if (!(lhs == rhs) || !a.is_integer() || a.sign() <= 0) {
          ok = false;
          detail = "(n,j,r)=(" + std::to_string(n) + "," + std::to_string(j) + "," +
                   std::to_string(r) + ")";
        }
      }
    }
  }
  check.require("strata/a-jr-coefficients", ok,
                "positive integers; both packagings agree for n <= 12", detail);
}

void suite_k1(Checker& check, std::size_t order) {
  PowerSeries assembled = k1_assembled(order);
  PowerSeries closed = k1_closed(order);
  check.require("k1/assembled-equals-closed", assembled == closed,
                "identical through order " + std::to_string(order),
                "series differ");

  bool integral = true;
  std::string detail;
  for (std::size_t n = 0; n < order; ++n) {
    Rational value = Rational(factorial(n)) * closed.coeff(n);
    if (!value.is_integer()) {
      integral = false;
      detail = "n=" + std::to_string(n) + ": " + value.str();
      break;
    }
  }
  check.require("k1/egf-integrality", integral,
                "n! [t^n] K1 is an integer for n < " + std::to_string(order), detail);
}

void suite_k2(Checker& check, std::size_t order) {
  PowerSeries assembled = k2_assembled(order);
  PowerSeries closed = k2_closed(order);
  check.require("k2/assembled-equals-closed", assembled == closed,
                "identical through order " + std::to_string(order),
                "series differ");

  static const std::pair<long long, long long> kExpansion[8] = {
      {6, 1}, {13, 1}, {21, 1}, {181, 6}, {251, 6}, {6853, 120}, {27971, 360}, {177673, 1680}};
  bool ok = true;
  std::string detail;
  for (int n = 0; n <= 7; ++n) {
    Rational expected(BigInt(kExpansion[n].first), BigInt(kExpansion[n].second));
    if (!(closed.coeff(n) == expected)) {
      ok = false;
      detail = "[t^" + std::to_string(n) + "]: expected " + expected.str() + ", actual " +
               closed.coeff(n).str();
      break;
    }
  }
  check.require("k2/expansion", ok, "coefficients through t^7 match", detail);

  static const long long kTable[8] = {6, 13, 42, 181, 1004, 6853, 55942, 533019};
  auto table = chibar_table(2, 7, order);
  ok = true;
  detail.clear();
  for (int n = 0; n <= 7; ++n) {
    if (!(table[n].second == Rational(kTable[n]))) {
      ok = false;
      detail = "n=" + std::to_string(n) + ": expected " + std::to_string(kTable[n]) +
               ", actual " + table[n].second.str();
      break;
    }
  }
  check.require("k2/chibar-table", ok, "6, 13, 42, 181, 1004, 6853, 55942, 533019", detail);

  bool integral = true;
  detail.clear();
  for (std::size_t n = 0; n < order; ++n) {
    Rational value = Rational(factorial(n)) * closed.coeff(n);
    if (!value.is_integer()) {
      integral = false;
      detail = "n=" + std::to_string(n) + ": " + value.str();
      break;
    }
  }
  check.require("k2/egf-integrality", integral,
                "n! [t^n] K2 is an integer for n < " + std::to_string(order), detail);
}

void suite_trees(Checker& check, std::size_t order) {
  std::size_t d_order = std::max<std::size_t>(order, 9);
  PowerSeries d = series_D(d_order);

  static const std::pair<long long, long long> kDCoeffs[8] = {
      {0, 1}, {1, 1}, {1, 2}, {1, 3}, {7, 24}, {17, 60}, {71, 240}, {163, 504}};
  bool ok = true;
  std::string detail;
  for (int n = 0; n <= 7; ++n) {
    Rational expected(BigInt(kDCoeffs[n].first), BigInt(kDCoeffs[n].second));
    if (!(d.coeff(n) == expected)) {
      ok = false;
      detail = "[t^" + std::to_string(n) + "]: actual " + d.coeff(n).str();
      break;
    }
  }
  check.require("trees/D-coefficients", ok,
                "t + t^2/2 + t^3/3 + 7t^4/24 + 17t^5/60 + 71t^6/240 + 163t^7/504", detail);

  // The defining identity D'(1 - log(1+D)) = 1.
  PowerSeries ode = derivative(d) * (-log1p(d) + Rational(1));
  check.require("trees/D-ode", ode == PowerSeries::constant(Rational(1), d_order - 1),
                "D'(1 - log(1+D)) = 1 to truncation", "identity fails");

  // E two ways: log(1+D) against the sum over chi(M_{0,n+2}) D^n/n!.
  PowerSeries e = log1p(d);
  PowerSeries e_sum = PowerSeries::zero(d_order);
  PowerSeries d_power = d;
  for (std::size_t n = 1; n < d_order; ++n) {
    e_sum = e_sum + chi_m0_open(static_cast<int>(n) + 2) / Rational(factorial(n)) * d_power;
    d_power = d_power * d;
  }
  check.require("trees/E-two-routes", e == e_sum,
                "log(1+D) equals sum chi(M_{0,n+2}) D^n/n!", "series differ");

  ok = true;
  detail.clear();
  for (int n = 2; n <= 8; ++n) {
    Rational sum = tree_contribution_sum(n);
    Rational expected = Rational(factorial(n)) * d.coeff(n);
    if (!(sum == expected) || !sum.is_integer() || sum.sign() <= 0) {
      ok = false;
      detail = "n=" + std::to_string(n) + ": trees " + sum.str() + ", D gives " + expected.str();
      break;
    }
  }
  check.require("trees/contribution-vs-D", ok,
                "tree sums equal n! [t^n] D for n = 2..8 (positive integers)", detail);
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"series-algebra", "quotients-vs-oracle", "strata", "k1", "k2", "trees"};
}

std::vector<CheckResult> run_verify_suite(const std::string& suite, std::size_t order) {
  Checker check;
  bool known = false;
  auto want = [&](const char* name) {
    bool match = suite == "all" || suite == name;
    known = known || match;
    return match;
  };
  // "through order N" checks compare one past the requested order so an
  // off-by-one in truncation cannot hide.
  std::size_t deep = order + 1;
  if (want("series-algebra")) suite_series_algebra(check);
  if (want("quotients-vs-oracle")) suite_quotients_vs_oracle(check);
  if (want("strata")) suite_strata(check);
  if (want("k1")) suite_k1(check, deep);
  if (want("k2")) suite_k2(check, deep);
  if (want("trees")) suite_trees(check, deep);
  if (!known) throw std::domain_error("unknown verify suite: " + suite);
  return check.take();
}

}  // namespace moduli
