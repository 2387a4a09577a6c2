// moduli-chi: Euler characteristics of moduli of pointed curves of genus <= 2.
//
// Subcommands: chi open, chi compact, quotient, series, oracle quotient,
// oracle trees, verify. Exit codes: 0 success, 1 verification failure,
// 2 usage or domain error. All numeric output is exact "p/q".

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "moduli/counting_oracle.hpp"
#include "moduli/genfun.hpp"
#include "moduli/open_moduli.hpp"
#include "moduli/output.hpp"
#include "moduli/quotient_tables.hpp"
#include "moduli/stable_trees.hpp"
#include "moduli/verify.hpp"

namespace {

using namespace moduli;

// "(1 2)(3 4),(5 6)" -> one permutation per comma-separated generator.
std::vector<MarkedPermutation> parse_custom_generators(int n, const std::string& text) {
  std::vector<MarkedPermutation> generators;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string gen = text.substr(pos, end - pos);
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    while (i < gen.size()) {
      if (gen[i] == '(') {
        std::size_t close = gen.find(')', i);
        if (close == std::string::npos) throw std::domain_error("custom group: unbalanced '('");
        std::vector<int> cycle;
        std::string inside = gen.substr(i + 1, close - i - 1);
        std::size_t j = 0;
        while (j < inside.size()) {
          while (j < inside.size() && (inside[j] == ' ' || inside[j] == '\t')) ++j;
          if (j >= inside.size()) break;
          std::size_t k = j;
          while (k < inside.size() && isdigit(static_cast<unsigned char>(inside[k]))) ++k;
          if (k == j) throw std::domain_error("custom group: expected a marking index");
          cycle.push_back(std::stoi(inside.substr(j, k - j)));
          j = k;
        }
        if (cycle.size() < 2) throw std::domain_error("custom group: cycle needs >= 2 entries");
        cycles.push_back(std::move(cycle));
        i = close + 1;
      } else if (gen[i] == ' ' || gen[i] == '\t') {
        ++i;
      } else {
        throw std::domain_error(std::string("custom group: unexpected character '") + gen[i] +
                                "'");
      }
    }
    if (cycles.empty()) throw std::domain_error("custom group: empty generator");
    generators.push_back(MarkedPermutation::from_cycles(n, cycles));
    pos = end + 1;
  }
  if (generators.empty()) throw std::domain_error("custom group: no generators");
  return generators;
}

PermutationGroupAction group_action_from_name(int n, const std::string& name) {
  if (name == "klein") return action_for({QuotientKind::M0ModKlein, {n}, {}});
  if (name == "d4") return action_for({QuotientKind::M0ModD4, {n}, {}});
  if (name.rfind("sj:", 0) == 0) {
    int j = std::stoi(name.substr(3));
    return action_for({QuotientKind::M0ModSj, {n}, j});
  }
  if (name.rfind("custom:", 0) == 0) {
    std::vector<GroupElement> generators;
    for (auto& p : parse_custom_generators(n, name.substr(7))) generators.push_back({p});
    return PermutationGroupAction::from_generators({n}, generators);
  }
  throw std::domain_error("unknown group '" + name + "' (use klein|d4|sj:<j>|custom:<cycles>)");
}

std::vector<std::string> poly_coeff_strings(const Polynomial& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coefficients()) out.push_back(c.str());
  if (out.empty()) out.push_back("0");
  return out;
}

struct ChiOpenArgs {
  int genus = 0;
  int n = 0;
  std::string method = "closed";
  std::string format = "table";
};

int run_chi_open(const ChiOpenArgs& args) {
  Rational value;
  std::string provenance;
  if (args.method == "closed") {
    if (args.genus == 0) {
      value = chi_m0_open(args.n);
      provenance = "closed form (-1)^(n-3) (n-3)!";
    } else if (args.genus == 1) {
      value = chi_m1_open(args.n);
      provenance = "table for n <= 4, closed form (-1)^n (n-1)!/12 beyond";
    } else if (args.genus == 2) {
      value = chi_m2_open(args.n);
      provenance = "table for n <= 6, closed form (-1)^(n+1) (n+1)!/240 beyond";
    } else {
      throw std::domain_error("chi open: genus must be 0, 1 or 2");
    }
  } else if (args.method == "strata") {
    if (args.genus == 1) {
      value = chi_m1_via_strata(args.n);
    } else if (args.genus == 2) {
      value = chi_m2_via_strata(args.n);
    } else {
      throw std::domain_error("chi open: --method strata needs genus 1 or 2");
    }
    provenance = "hyperelliptic-involution stratification";
  } else if (args.method == "recursive") {
    if (args.genus == 1) {
      value = chi_m1_recursive(args.n);
    } else if (args.genus == 2) {
      value = chi_m2_recursive(args.n);
    } else {
      throw std::domain_error("chi open: --method recursive needs genus 1 or 2");
    }
    provenance = "universal-curve recursion";
  } else {
    throw std::domain_error("chi open: --method must be closed|strata|recursive");
  }
  OutputRecord record = OutputRecord::scalar(
      "chi-open",
      {{"genus", std::to_string(args.genus)}, {"n", std::to_string(args.n)},
       {"method", args.method}},
      value, provenance);
  std::cout << format_record(record, output_format_from_name(args.format)) << "\n";
  return 0;
}

struct ChiCompactArgs {
  int genus = 0;
  int max_n = 0;
  std::size_t order = kDefaultOrder;
  std::string format = "table";
};

int run_chi_compact(const ChiCompactArgs& args) {
  auto table = chibar_table(args.genus, args.max_n, args.order);
  OutputFormat format = output_format_from_name(args.format);
  if (format == OutputFormat::Csv) {
    std::cout << "n,chi\n";
    for (const auto& [n, value] : table) std::cout << n << "," << value.str() << "\n";
    return 0;
  }
  if (format == OutputFormat::Table) {
    std::cout << "n   chi(compactified M_{" << args.genus << ",n})\n";
    for (const auto& [n, value] : table) std::cout << n << "   " << value.str() << "\n";
    return 0;
  }
  std::vector<std::string> values;
  for (const auto& [n, value] : table) values.push_back(value.str());
  OutputRecord record{"chibar-table",
                      {{"genus", std::to_string(args.genus)},
                       {"max_n", std::to_string(args.max_n)},
                       {"order", std::to_string(args.order)}},
                      values,
                      "exponential coefficients of the genus generating function"};
  std::cout << to_json(record) << "\n";
  return 0;
}

int run_quotient(const std::string& kind_name, const std::vector<int>& sizes,
                 const std::string& format) {
  auto kind = QuotientSpec::kind_from_name(kind_name);
  if (!kind) throw std::domain_error("unknown quotient kind: " + kind_name);
  QuotientSpec spec{*kind, sizes, {}};
  std::vector<std::pair<std::string, std::string>> inputs{{"kind", kind_name}};
  if (*kind == QuotientKind::M0ModSj) {
    if (sizes.size() != 2) throw std::domain_error("m0-mod-sj takes <n> <j>");
    spec.sizes = {sizes[0]};
    spec.j = sizes[1];
    inputs.emplace_back("n", std::to_string(sizes[0]));
    inputs.emplace_back("j", std::to_string(sizes[1]));
  } else {
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      inputs.emplace_back("n" + std::to_string(i + 1), std::to_string(sizes[i]));
    }
  }
  Rational value = chi_quotient(spec);
  OutputRecord record =
      OutputRecord::scalar("quotient", std::move(inputs), value, "quotient table");
  std::cout << format_record(record, output_format_from_name(format)) << "\n";
  return 0;
}

struct SeriesArgs {
  std::string name = "D";
  std::size_t order = kDefaultOrder;
  std::string format = "coeffs";  // coeffs | egf
  std::string out = "table";
};

int run_series(const SeriesArgs& args) {
  if (args.format != "coeffs" && args.format != "egf") {
    throw std::domain_error("series: --format must be coeffs|egf");
  }
  NamedSeries named = named_series(args.name, args.order);
  std::vector<std::string> values;
  for (std::size_t k = 0; k < named.series.order(); ++k) {
    Rational c = named.series.coeff(k);
    if (args.format == "egf") c *= Rational(factorial(k));
    values.push_back(c.str());
  }
  OutputFormat out = output_format_from_name(args.out);
  if (out == OutputFormat::Table) {
    for (std::size_t k = 0; k < values.size(); ++k) {
      std::cout << "[t^" << k << "] " << values[k] << "\n";
    }
    return 0;
  }
  if (out == OutputFormat::Csv) {
    std::cout << "k," << (args.format == "egf" ? "n_factorial_coeff" : "coeff") << "\n";
    for (std::size_t k = 0; k < values.size(); ++k) std::cout << k << "," << values[k] << "\n";
    return 0;
  }
  OutputRecord record{"series",
                      {{"name", args.name},
                       {"order", std::to_string(args.order)},
                       {"format", args.format}},
                      values,
                      args.name == "D" ? "coefficient recursion from D'(1-log(1+D)) = 1"
                                       : "evaluated in the tree series D"};
  std::cout << to_json(record) << "\n";
  return 0;
}

struct OracleQuotientArgs {
  int n = 0;
  std::string group;
  std::string format = "table";
};

int run_oracle_quotient(const OracleQuotientArgs& args) {
  PermutationGroupAction action = group_action_from_name(args.n, args.group);
  Polynomial average = burnside_average(action);
  Rational chi = average.evaluate(Rational(1));

  OutputRecord chi_record = OutputRecord::scalar(
      "oracle-quotient",
      {{"n", std::to_string(args.n)},
       {"group", args.group},
       {"group-order", std::to_string(action.order())}},
      chi, "twisted-Burnside point count evaluated at q = 1");
  OutputRecord poly_record{"oracle-point-count",
                           {{"n", std::to_string(args.n)}, {"group", args.group}},
                           poly_coeff_strings(average),
                           "coefficients of P(q), constant term first"};
  OutputFormat format = output_format_from_name(args.format);
  std::cout << format_record(chi_record, format) << "\n";
  std::cout << format_record(poly_record, format) << "\n";
  return 0;
}

int run_oracle_trees(int n, const std::string& format) {
  long long trees = 0;
  Rational sum(0);
  for_each_stable_tree(n, [&](const StableTree&) { ++trees; });
  sum = tree_contribution_sum(n);
  OutputRecord record{"oracle-trees",
                      {{"n", std::to_string(n)}},
                      {std::to_string(trees), sum.str()},
                      "stable rooted tree enumeration: count, contribution sum"};
  std::cout << format_record(record, output_format_from_name(format)) << "\n";
  return 0;
}

int run_verify(const std::string& suite, std::size_t order) {
  auto results = run_verify_suite(suite, order);
  bool all_passed = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.name;
    if (!r.detail.empty()) std::cout << " - " << r.detail;
    std::cout << "\n";
    all_passed = all_passed && r.passed;
  }
  std::cout << (all_passed ? "all checks passed" : "some checks FAILED") << " ("
            << results.size() << " checks)\n";
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Euler characteristics of moduli of pointed curves of genus <= 2"};
  app.require_subcommand(1);

  // chi open | chi compact
  auto* chi = app.add_subcommand("chi", "Euler characteristics of moduli spaces");
  chi->require_subcommand(1);
  ChiOpenArgs open_args;
  auto* chi_open = chi->add_subcommand("open", "open moduli M_{g,n}");
  chi_open->add_option("--genus", open_args.genus, "genus (0, 1 or 2)")->required();
  chi_open->add_option("--n", open_args.n, "number of marked points")->required();
  chi_open->add_option("--method", open_args.method, "closed|strata|recursive");
  chi_open->add_option("--format", open_args.format, "table|json|csv");

  ChiCompactArgs compact_args;
  auto* chi_compact = chi->add_subcommand("compact", "compactified moduli, table up to max-n");
  chi_compact->add_option("--genus", compact_args.genus, "genus (1 or 2)")->required();
  chi_compact->add_option("--max-n", compact_args.max_n, "largest n")->required();
  chi_compact->add_option("--order", compact_args.order, "series truncation order");
  chi_compact->add_option("--format", compact_args.format, "table|json|csv");

  // quotient
  std::string quotient_kind;
  std::vector<int> quotient_sizes;
  std::string quotient_format = "table";
  auto* quotient = app.add_subcommand("quotient", "table-driven quotient Euler characteristics");
  quotient->add_option("kind", quotient_kind,
                       "m0-mod-sj (takes <n> <j>), m0-mod-klein, m0-mod-d4, prod2-mod-s2, "
                       "prod2-mod-s3, prod2-mod-klein, prod3-mod-klein, m1-mod-s2, "
                       "m1-cross-m0-mod-s2")
      ->required();
  quotient->add_option("sizes", quotient_sizes, "marked-point counts")->required();
  quotient->add_option("--format", quotient_format, "table|json|csv");

  // series
  SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "generating functions");
  series->add_option("--name", series_args.name,
                     "D, E, K1, K2, K1_vertex, K1_loop, K2_type1, K2_type234, K2_type5, "
                     "K2_type6, K2_type7")
      ->required();
  series->add_option("--order", series_args.order, "truncation order");
  series->add_option("--format", series_args.format, "coeffs|egf");
  series->add_option("--out", series_args.out, "table|json|csv");

  // oracle quotient | oracle trees
  auto* oracle = app.add_subcommand("oracle", "brute-force cross-checks");
  oracle->require_subcommand(1);
  OracleQuotientArgs oracle_args;
  auto* oracle_quotient = oracle->add_subcommand("quotient", "twisted-Burnside point counting");
  oracle_quotient->add_option("--n", oracle_args.n, "number of marked points")->required();
  oracle_quotient
      ->add_option("--group", oracle_args.group, "klein | d4 | sj:<j> | custom:<cycles>")
      ->required();
  oracle_quotient->add_option("--format", oracle_args.format, "table|json|csv");

  int oracle_trees_n = 0;
  std::string oracle_trees_format = "table";
  auto* oracle_trees = oracle->add_subcommand("trees", "stable rooted tree enumeration");
  oracle_trees->add_option("--n", oracle_trees_n, "number of labelled leaves")->required();
  oracle_trees->add_option("--format", oracle_trees_format, "table|json|csv");

  // verify
  std::string verify_suite = "all";
  std::size_t verify_order = kDefaultOrder;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", verify_suite,
                     "series-algebra, quotients-vs-oracle, strata, k1, k2, trees, all");
  verify->add_option("--order", verify_order, "series truncation order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors are exit 2; --help stays 0
  }

  try {
    if (chi_open->parsed()) return run_chi_open(open_args);
    if (chi_compact->parsed()) return run_chi_compact(compact_args);
    if (quotient->parsed()) return run_quotient(quotient_kind, quotient_sizes, quotient_format);
    if (series->parsed()) return run_series(series_args);
    if (oracle_quotient->parsed()) return run_oracle_quotient(oracle_args);
    if (oracle_trees->parsed()) return run_oracle_trees(oracle_trees_n, oracle_trees_format);
    if (verify->parsed()) return run_verify(verify_suite, verify_order);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    // internal cross-check failure (e.g. a dual-route computation disagrees)
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
