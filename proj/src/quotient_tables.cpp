#include "moduli/quotient_tables.hpp"

#include <algorithm>
#include <stdexcept>

#include "moduli/open_moduli.hpp"

namespace moduli {

Rational chi_m0_mod_Sj(int n, int j) {
  if (n < 3) throw std::domain_error("chi_m0_mod_Sj: need n >= 3");
  if (j < 0 || j > n) throw std::domain_error("chi_m0_mod_Sj: need 0 <= j <= n");
  if (n - j >= 3) return chi_m0_open(n) / Rational(factorial(j));  // unramified quotient
  if (n - j <= 1) return 1;
  return n % 2 == 0 ? 0 : 1;  // n - j == 2
}

Rational chi_m0_mod_klein(int n) {
  if (n < 4) throw std::domain_error("chi_m0_mod_klein: need n >= 4");
  switch (n) {
    case 4:
    case 5:
      return 0;
    case 6:
      return -2;
    default:
      return chi_m0_open(n) / 4;
  }
}

Rational chi_m0_mod_D4(int n) {
  if (n < 4) throw std::domain_error("chi_m0_mod_D4: need n >= 4");
  switch (n) {
    case 4:
    case 5:
      return 0;
    case 6:
      return -1;
    default:
      return chi_m0_open(n) / 8;
  }
}

Rational chi_prod2_mod_S2(int n1, int n2) {
  if (n1 < 3 || n1 > n2) throw std::domain_error("chi_prod2_mod_S2: need 3 <= n1 <= n2");
  if (n1 == 3) return chi_m0_mod_Sj(n2, 2);
  if (n1 == 4) return chi_m0_mod_Sj(n2, 2) - chi_m0_open(n2);
  return chi_m0_open(n1) * chi_m0_open(n2) / 2;
}

Rational chi_prod2_mod_S3(int n1, int n2) {
  if (n1 < 3 || n1 > n2) throw std::domain_error("chi_prod2_mod_S3: need 3 <= n1 <= n2");
  if (n1 == 3) return chi_m0_mod_Sj(n2, 3);
  if (n2 >= 6) return chi_m0_open(n1) * chi_m0_open(n2) / 6;
  if (n1 == 4) return n2 == 4 ? 2 : 1;  // (4,4) -> 2, (4,5) -> 1
  return 2;                             // (5,5)
}

Rational chi_prod2_mod_klein(int n1, int n2) {
  if (n1 < 3 || n1 > n2) throw std::domain_error("chi_prod2_mod_klein: need 3 <= n1 <= n2");
  if (n1 == 3) return chi_m0_mod_klein(n2);
  if (n1 == 4) {
    switch (n2) {
      case 4:
        return 0;
      case 5:
        return -1;
      case 6:
        return 1;
      default:
        throw std::domain_error("chi_prod2_mod_klein: (4, n2 >= 7) is outside the tabulated range");
    }
  }
  return Rational(1, 2) * chi_m0_open(n1) * chi_m0_mod_Sj(n2, 2);
}

Rational chi_prod3_mod_klein(int n1, int n2, int n3) {
  if (n1 < 3 || n2 < 3 || n1 > n2 || n3 < 4) {
    throw std::domain_error("chi_prod3_mod_klein: need 3 <= n1 <= n2 and n3 >= 4");
  }
  if (n1 == 3) {
    // The residual action has the one-pair factor n2 and the two-pair factor
    // n3; the delegated range check is deliberately inherited.
    return chi_prod2_mod_klein(n2, n3);
  }
  if (n1 == 4 && n2 == 4) {
    switch (n3) {
      case 4:
        return -1;
      case 5:
        return 0;
      case 6:
        return -2;
      default:
        return Rational(1, 4) * chi_m0_open(n3);
    }
  }
  if (n1 == 4) {  // n2 >= 5
    return Rational(1, 2) * chi_prod2_mod_S2(std::min(4, n3), std::max(4, n3)) * chi_m0_open(n2);
  }
  // n1 >= 5
  return Rational(1, 2) * chi_prod2_mod_S2(std::min(n2, n3), std::max(n2, n3)) * chi_m0_open(n1);
}

Rational chi_m1_mod_S2(int n) {
  if (n < 2) throw std::domain_error("chi_m1_mod_S2: need n >= 2");
  static const int table[5] = {1, 1, 1, 0, 6};  // n = 2..6
  if (n <= 6) return table[n - 2];
  return Rational(1, 2) * chi_m1_open(n);
}

Rational chi_m1_cross_m0_mod_S2(int n1, int n2) {
  if (n1 < 1 || n2 < 3) throw std::domain_error("chi_m1_cross_m0_mod_S2: need n1 >= 1, n2 >= 3");
  // For n1 = 1 the swap cannot move anything on the elliptic factor, so the
  // quotient is M_{1,1} x (M_{0,n2}/S_2); the rows below read chi(M_{1,1}/S_2)
  // as chi(M_{1,1}) = 1, which agrees with that.
  Rational half = n1 == 1 ? Rational(1) : chi_m1_mod_S2(n1);
  if (n2 == 3) return half;
  if (n2 == 4) return half - chi_m1_open(n1);
  return Rational(1, 2) * chi_m0_open(n2) * chi_m1_open(n1);
}

namespace {

struct KindInfo {
  QuotientKind kind;
  const char* name;
  std::size_t arity;  // expected sizes.size()
};

constexpr KindInfo kKinds[] = {
    {QuotientKind::M0ModSj, "m0-mod-sj", 1},
    {QuotientKind::M0ModKlein, "m0-mod-klein", 1},
    {QuotientKind::M0ModD4, "m0-mod-d4", 1},
    {QuotientKind::Prod2ModS2, "prod2-mod-s2", 2},
    {QuotientKind::Prod2ModS3, "prod2-mod-s3", 2},
    {QuotientKind::Prod2ModKlein, "prod2-mod-klein", 2},
    {QuotientKind::Prod3ModKlein, "prod3-mod-klein", 3},
    {QuotientKind::M1ModS2, "m1-mod-s2", 1},
    {QuotientKind::M1CrossM0ModS2, "m1-cross-m0-mod-s2", 2},
};

const KindInfo& info_for(QuotientKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k;
  }
  throw std::logic_error("unknown quotient kind");
}

void check_arity(const QuotientSpec& spec) {
  const auto& info = info_for(spec.kind);
  if (spec.sizes.size() != info.arity) {
    throw std::domain_error(std::string(info.name) + ": expected " +
                            std::to_string(info.arity) + " size argument(s)");
  }
  if (spec.kind == QuotientKind::M0ModSj && !spec.j.has_value()) {
    throw std::domain_error("m0-mod-sj: missing j");
  }
}

}  // namespace

std::string QuotientSpec::kind_name() const { return info_for(kind).name; }

std::optional<QuotientKind> QuotientSpec::kind_from_name(const std::string& name) {
  for (const auto& k : kKinds) {
    if (name == k.name) return k.kind;
  }
  return std::nullopt;
}

Rational chi_quotient(const QuotientSpec& spec) {
  check_arity(spec);
  const auto& s = spec.sizes;
  switch (spec.kind) {
    case QuotientKind::M0ModSj:
      return chi_m0_mod_Sj(s[0], *spec.j);
    case QuotientKind::M0ModKlein:
      return chi_m0_mod_klein(s[0]);
    case QuotientKind::M0ModD4:
      return chi_m0_mod_D4(s[0]);
    case QuotientKind::Prod2ModS2:
      return chi_prod2_mod_S2(s[0], s[1]);
    case QuotientKind::Prod2ModS3:
      return chi_prod2_mod_S3(s[0], s[1]);
    case QuotientKind::Prod2ModKlein:
      return chi_prod2_mod_klein(s[0], s[1]);
    case QuotientKind::Prod3ModKlein:
      return chi_prod3_mod_klein(s[0], s[1], s[2]);
    case QuotientKind::M1ModS2:
      return chi_m1_mod_S2(s[0]);
    case QuotientKind::M1CrossM0ModS2:
      return chi_m1_cross_m0_mod_S2(s[0], s[1]);
  }
  throw std::logic_error("unreachable");
}

PermutationGroupAction action_for(const QuotientSpec& spec) {
  check_arity(spec);
  const auto& s = spec.sizes;
  auto id = [](int n) { return MarkedPermutation::identity(n); };
  auto swap = [](int n, int a, int b) { return MarkedPermutation::transposition(n, a, b); };
  switch (spec.kind) {
    case QuotientKind::M0ModSj: {
      int n = s[0];
      if (n < 3) throw std::domain_error("action_for: need n >= 3");
      return PermutationGroupAction::symmetric_on_last(n, *spec.j);
    }
    case QuotientKind::M0ModKlein: {
      int n = s[0];
      if (n < 4) throw std::domain_error("action_for: need n >= 4");
      return PermutationGroupAction::from_generators(
          {n}, {{swap(n, n - 3, n - 2)}, {swap(n, n - 1, n)}});
    }
    case QuotientKind::M0ModD4: {
      int n = s[0];
      if (n < 4) throw std::domain_error("action_for: need n >= 4");
      return PermutationGroupAction::from_generators(
          {n}, {{swap(n, 1, 2)}, {MarkedPermutation::from_cycles(n, {{1, 3}, {2, 4}})}});
    }
    case QuotientKind::Prod2ModS2: {
      int n1 = s[0], n2 = s[1];
      if (n1 < 3 || n2 < 3) throw std::domain_error("action_for: need sizes >= 3");
      return PermutationGroupAction::from_generators(
          {n1, n2}, {{swap(n1, n1 - 1, n1), swap(n2, n2 - 1, n2)}});
    }
    case QuotientKind::Prod2ModS3: {
      int n1 = s[0], n2 = s[1];
      if (n1 < 3 || n2 < 3) throw std::domain_error("action_for: need sizes >= 3");
      auto cyc = [](int n) {
        return MarkedPermutation::from_cycles(n, {{n - 2, n - 1, n}});
      };
      return PermutationGroupAction::from_generators(
          {n1, n2}, {{swap(n1, n1 - 1, n1), swap(n2, n2 - 1, n2)}, {cyc(n1), cyc(n2)}});
    }
    case QuotientKind::Prod2ModKlein: {
      int n1 = s[0], n2 = s[1];
      if (n1 < 3 || n2 < 4) throw std::domain_error("action_for: need n1 >= 3, n2 >= 4");
      return PermutationGroupAction::from_generators(
          {n1, n2}, {{swap(n1, n1 - 1, n1), swap(n2, n2 - 3, n2 - 2)},
                     {id(n1), swap(n2, n2 - 1, n2)}});
    }
    case QuotientKind::Prod3ModKlein: {
      int n1 = s[0], n2 = s[1], n3 = s[2];
      if (n1 < 3 || n2 < 3 || n3 < 4) {
        throw std::domain_error("action_for: need n1, n2 >= 3 and n3 >= 4");
      }
      return PermutationGroupAction::from_generators(
          {n1, n2, n3}, {{swap(n1, n1 - 1, n1), id(n2), swap(n3, n3 - 3, n3 - 2)},
                         {id(n1), swap(n2, n2 - 1, n2), swap(n3, n3 - 1, n3)}});
    }
    case QuotientKind::M1ModS2:
    case QuotientKind::M1CrossM0ModS2:
      throw std::domain_error(
          "action_for: elliptic factors have non-polynomial point counts; "
          "the counting oracle does not apply");
  }
  throw std::logic_error("unreachable");
}

}  // namespace moduli
