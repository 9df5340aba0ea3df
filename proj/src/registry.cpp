// The identity checks. Sides are built from three sources that share
// nothing above the series ring: programmatic catalog builders, text
// transcriptions run through the expression language, and enumeration.

#include <string>
#include <utility>
#include <vector>

#include "qpart/audit.hpp"
#include "qpart/corpus.hpp"
#include "qpart/errors.hpp"
#include "qpart/qfactory.hpp"

namespace qpart {
namespace {

using N = std::size_t;

Side series(const std::string& key) {
  return {key, SourceKind::Series, [key](N n, OracleCache&) { return named_series(key, n); }};
}

Side dsl(const std::string& key) {
  return {"dsl:" + key, SourceKind::Dsl, [key](N n, OracleCache&) { return corpus_series(key, n); }};
}

Side family(Family f) {
  return {"count:" + std::string(family_name(f)), SourceKind::Oracle,
          [f](N n, OracleCache& o) { return o.family(f, n); }};
}

Side family_sum(Family a, Family b) {
  return {"count:" + std::string(family_name(a)) + "+" + std::string(family_name(b)),
          SourceKind::Oracle, [a, b](N n, OracleCache& o) { return o.family(a, n) + o.family(b, n); }};
}

Side family_diff(Family a, Family b) {
  return {"count:" + std::string(family_name(a)) + "-" + std::string(family_name(b)),
          SourceKind::Oracle, [a, b](N n, OracleCache& o) { return o.family(a, n) - o.family(b, n); }};
}

Side mex(MexSide side) {
  return {side == MexSide::Plain ? "count:mex_plain" : "count:mex_bar", SourceKind::Oracle,
          [side](N n, OracleCache& o) { return o.mex(side, n); }};
}

Side pbar() {
  return {"count:pbar", SourceKind::Oracle, [](N n, OracleCache& o) { return o.overpartitions(n); }};
}

Side pbar_odd() {
  return {"count:pbar_odd", SourceKind::Oracle,
          [](N n, OracleCache& o) { return o.overpartitions_odd(n); }};
}

// sum pbar(n) q^{2n}
Side pbar_at_q2() {
  return {"count:pbar(q^2)", SourceKind::Oracle,
          [](N n, OracleCache& o) {
            const Series p = o.overpartitions(n / 2);
            std::vector<Integer> c(n + 1);
            for (N k = 0; 2 * k <= n; ++k) c[2 * k] = p[k];
            return Series(std::move(c));
          }};
}

Side half_of(const std::string& label, const std::string& plus, const std::string& other,
             int sign) {
  return {label, SourceKind::Series, [=](N n, OracleCache&) {
            const Series a = named_series(plus, n);
            const Series b = named_series(other, n);
            return divide_exact(sign > 0 ? a + b : a - b, 2);
          }};
}

// (P(n) ± P(n/2)) / 2 with P(n/2) = 0 for odd n.
Series overpartition_formula(const Series& p, int sign) {
  const Series dil = p.dilated(2);
  return divide_exact(sign > 0 ? p + dil : p - dil, 2);
}

Side f01_formula_dsl(int sign) {
  return {sign > 0 ? "(pbar(n)+pbar(n/2))/2 from dsl:GEN_PBAR" : "(pbar(n)-pbar(n/2))/2 from dsl:GEN_PBAR",
          SourceKind::Dsl, [sign](N n, OracleCache&) {
            return overpartition_formula(corpus_series("GEN_PBAR", n), sign);
          }};
}

Side f01_formula_oracle(int sign) {
  return {sign > 0 ? "(pbar(n)+pbar(n/2))/2 from count:pbar" : "(pbar(n)-pbar(n/2))/2 from count:pbar",
          SourceKind::Oracle,
          [sign](N n, OracleCache& o) { return overpartition_formula(o.overpartitions(n), sign); }};
}

bool is_square(std::size_t n) {
  std::size_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

// pbar_o(n)/2 + correction(n) at squares n >= 1; the constant term is left 0.
enum class SquareTerm { Plus, Minus, PlusAlternating, MinusAlternating };

Series square_split(const Series& po, SquareTerm t) {
  std::vector<Integer> c(po.order() + 1);
  for (std::size_t n = 1; n <= po.order(); ++n) {
    if (!mpz_divisible_ui_p(po[n].get_mpz_t(), 2)) {
      throw NonIntegralQuotient("pbar_o(" + std::to_string(n) + ") is odd");
    }
    c[n] = po[n] / 2;
    if (!is_square(n)) continue;
    const int alt = n % 2 == 0 ? 1 : -1;
    switch (t) {
      case SquareTerm::Plus: c[n] += 1; break;
      case SquareTerm::Minus: c[n] -= 1; break;
      case SquareTerm::PlusAlternating: c[n] += alt; break;
      case SquareTerm::MinusAlternating: c[n] -= alt; break;
    }
  }
  return Series(std::move(c));
}

std::string square_label(SquareTerm t) {
  switch (t) {
    case SquareTerm::Plus: return "pbar_o(n)/2 + [n square]";
    case SquareTerm::Minus: return "pbar_o(n)/2 - [n square]";
    case SquareTerm::PlusAlternating: return "pbar_o(n)/2 + (-1)^n [n square]";
    case SquareTerm::MinusAlternating: return "pbar_o(n)/2 - (-1)^n [n square]";
  }
  return {};
}

Side square_formula_dsl(SquareTerm t) {
  return {square_label(t) + " from dsl:GEN_H_EULER", SourceKind::Dsl,
          [t](N n, OracleCache&) { return square_split(corpus_series("GEN_H_EULER", n), t); }};
}

Side square_formula_oracle(SquareTerm t) {
  return {square_label(t) + " from count:pbar_odd", SourceKind::Oracle,
          [t](N n, OracleCache& o) { return square_split(o.overpartitions_odd(n), t); }};
}

Side restricted_class(const std::string& label, std::vector<std::uint32_t> blue_only_even,
                      std::size_t shift) {
  return {label, SourceKind::Oracle, [blue_only_even, shift](N n, OracleCache&) {
            const auto red_allowed = [&](std::uint32_t v) {
              if (v % 2 != 0) return false;
              for (auto r : blue_only_even) {
                if (v % 16 == r) return false;
              }
              return true;
            };
            const Series s =
                series_from_counts([&](N k) { return count_restricted_two_color(k, red_allowed); }, n);
            return s.shifted(shift);
          }};
}

Comparison jtp(std::int64_t qscale, std::int64_t xexp, int xsign) {
  const std::string tag = "q->q^" + std::to_string(qscale) + ", x=" + (xsign < 0 ? "-" : "") +
                          "q^" + std::to_string(xexp);
  return {{"product " + tag, SourceKind::Series,
           [=](N n, OracleCache&) { return jacobi_triple_product_sides(qscale, xexp, xsign, n).product; }},
          {"sum " + tag, SourceKind::Series,
           [=](N n, OracleCache&) { return jacobi_triple_product_sides(qscale, xexp, xsign, n).sum; }}};
}

Side negated(Side s) {
  s.label = "-" + s.label;
  auto inner = s.build;
  s.build = [inner](N n, OracleCache& o) { return -inner(n, o); };
  return s;
}

IdentityCheck check(std::string id, std::string description, std::vector<Comparison> comparisons,
                    std::vector<Variant> variants = {},
                    VariantRole role = VariantRole::Resolve, std::size_t first_index = 0) {
  bool oracle = false;
  auto scan = [&](const std::vector<Comparison>& cs) {
    for (const auto& c : cs) {
      oracle = oracle || c.left.source == SourceKind::Oracle || c.right.source == SourceKind::Oracle;
    }
  };
  scan(comparisons);
  for (const auto& v : variants) scan(v.comparisons);
  return {std::move(id),
          std::move(description),
          oracle ? kDefaultEnumerationBound : std::size_t{100},
          first_index,
          std::move(comparisons),
          std::move(variants),
          role};
}

IdentityCheck h_weight(std::string id, std::string description, Family f, const std::string& other,
                       int sign, SquareTerm t) {
  const std::string name(family_name(f));
  return check(std::move(id), std::move(description),
               {{half_of(name + " from GEN_H and " + other, "GEN_H", other, sign), square_formula_dsl(t)},
                {family(f), square_formula_oracle(t)}},
               {}, VariantRole::Resolve, 1);
}

std::vector<IdentityCheck> build() {
  using enum Family;
  std::vector<IdentityCheck> v;

  v.push_back(check("EQ_GEN_F", "Generating function of F(n)",
                    {{family(F), series("GEN_F")}, {series("GEN_F"), dsl("GEN_F")}}));
  v.push_back(check("EQ_F_ID", "F(n) equals the number of overpartitions of n",
                    {{family(F), pbar()},
                     {pbar(), series("GEN_PBAR")},
                     {series("GEN_F"), dsl("GEN_F_EULER")},
                     {series("GEN_F_EULER"), dsl("GEN_PBAR")}}));
  v.push_back(check("EQ_EULER", "Euler: (-q;q)_inf = 1/(q;q^2)_inf",
                    {{series("EULER_LHS"), dsl("EULER_RHS")}}));
  v.push_back(check("EQ_GEN_H", "Generating function of H(n)",
                    {{family(H), series("GEN_H")}, {series("GEN_H"), dsl("GEN_H")}}));
  v.push_back(check("EQ_H_ID", "H(n) equals the number of overpartitions of n into odd parts",
                    {{family(H), pbar_odd()},
                     {pbar_odd(), series("GEN_H_EULER")},
                     {series("GEN_H"), dsl("GEN_H_EULER")}}));
  v.push_back(check("THM_F01_ID", "F0(n), F1(n) as (pbar(n) +/- pbar(n/2))/2",
                    {{half_of("F0 from F0_PLUS_F1 and F0_MINUS_F1", "F0_PLUS_F1", "F0_MINUS_F1", 1),
                      f01_formula_dsl(1)},
                     {half_of("F1 from F0_PLUS_F1 and F0_MINUS_F1", "F0_PLUS_F1", "F0_MINUS_F1", -1),
                      f01_formula_dsl(-1)},
                     {family(F0), f01_formula_oracle(1)},
                     {family(F1), f01_formula_oracle(-1)}}));
  v.push_back(check("EQ_G0_G1", "F0 - F1 generating function equals sum pbar(n) q^(2n)",
                    {{family_diff(F0, F1), series("F0_MINUS_F1")},
                     {series("F0_MINUS_F1"), dsl("F0_MINUS_F1_EULER")},
                     {series("F0_MINUS_F1_EULER"), dsl("PBAR_Q2")},
                     {series("PBAR_Q2"), pbar_at_q2()}}));
  v.push_back(check("EQ_F0_MINUS_F1", "F0 - F1 = 1/((-q;q^2)_inf (q;q)_inf)",
                    {{family_diff(F0, F1), series("F0_MINUS_F1_COMPACT")},
                     {series("F0_MINUS_F1"), dsl("F0_MINUS_F1_COMPACT")}}));
  v.push_back(check("EQ_F0_PLUS_F1", "F0 + F1 = 1/((q;q^2)_inf (q;q)_inf)",
                    {{family_sum(F0, F1), series("F0_PLUS_F1_COMPACT")},
                     {series("F0_PLUS_F1"), dsl("F0_PLUS_F1_COMPACT")},
                     {family_sum(F0, F1), pbar()}}));

  v.push_back(check(
      "THM_F0_PRODUCT", "Product formula for the F0 generating function",
      {{family(F0), series("GEN_F0")},
       {half_of("(F0_PLUS_F1_COMPACT + F0_MINUS_F1_COMPACT)/2", "F0_PLUS_F1_COMPACT",
                "F0_MINUS_F1_COMPACT", 1),
        dsl("GEN_F0")},
       {series("GEN_F0"), dsl("F0_HALF_SUM")},
       {series("GEN_F0"), dsl("F0_EULER_FORM")},
       {series("GEN_F0"), dsl("F0_JTP_PRODUCTS")},
       {series("GEN_F0"), dsl("F0_BILATERAL")}},
      {{"printed", "numerator (q^16,q^6,q^10;q^16)_inf as printed",
        {{series("F0_PRINTED"), dsl("GEN_F0")}, {dsl("F0_HLP2_PRINTED"), series("GEN_F0")}}},
       {"jtp-signed", "numerator (q^16,-q^6,-q^10;q^16)_inf forced by the triple product",
        {{series("F0_SIGNED"), dsl("GEN_F0")}, {dsl("F0_HLP2_SIGNED"), series("GEN_F0")}}}}));
  v.push_back(check(
      "THM_F1_PRODUCT", "Product formula for the F1 generating function",
      {{family(F1), series("GEN_F1")},
       {half_of("(F0_PLUS_F1_COMPACT - F0_MINUS_F1_COMPACT)/2", "F0_PLUS_F1_COMPACT",
                "F0_MINUS_F1_COMPACT", -1),
        dsl("GEN_F1")},
       {series("GEN_F1"), dsl("F1_HALF_DIFF")},
       {series("GEN_F1"), dsl("F1_BILATERAL")}},
      {{"printed", "numerator q (q^16,q^2,q^14;q^16)_inf as printed",
        {{series("F1_PRINTED"), dsl("GEN_F1")}}},
       {"jtp-signed", "numerator q (q^16,-q^2,-q^14;q^16)_inf forced by the triple product",
        {{series("F1_SIGNED"), dsl("GEN_F1")}}}}));
  v.push_back(check(
      "COR_F0", "F0(n) as a restricted two-color partition count",
      {{family(F0), series("GEN_F0")}},
      {{"literal", "odd parts and parts = 6,10,16 (mod 16) blue only",
        {{family(F0), restricted_class("count:red even, not 0,6,10 mod 16", {0, 6, 10}, 0)}}},
       {"multiples-of-16", "odd parts and parts = 0 (mod 16) blue only",
        {{family(F0), restricted_class("count:red even, not 0 mod 16", {0}, 0)}}}}));
  v.push_back(check(
      "COR_F1", "F1(n) as a restricted two-color partition count of n-1",
      {{family(F1), series("GEN_F1")}},
      {{"literal", "odd parts and parts = 2,14,16 (mod 16) blue only, weight n-1",
        {{family(F1), restricted_class("q*count:red even, not 0,2,14 mod 16", {0, 2, 14}, 1)}}},
       {"multiples-of-16", "odd parts and parts = 0 (mod 16) blue only, weight n-1",
        {{family(F1), restricted_class("q*count:red even, not 0 mod 16", {0}, 1)}}}}));
  v.push_back(check("JTP_SPOT", "Jacobi triple product specializations",
                    {jtp(4, -1, 1),
                     jtp(16, -6, 1),
                     jtp(4, -2, -1),
                     jtp(2, -1, 1),
                     jtp(2, -1, -1),
                     {series("JTP_Q4_X1_PRODUCT"), dsl("JTP_Q4_X1_SUM")},
                     {series("JTP_Q16_X6_PRODUCT"), dsl("JTP_Q16_X6_SUM")},
                     {series("JTP_Q4_MX2_PRODUCT"), dsl("JTP_Q4_MX2_SUM")}}));

  v.push_back(check("EQ_F2_MINUS_F3", "F2 - F3 = 1/((-q^2;q^2)_inf (q;q^2)_inf^2)",
                    {{family_diff(F2, F3), series("F2_MINUS_F3")},
                     {series("F2_MINUS_F3"), dsl("F2_MINUS_F3")}}));
  v.push_back(check("EQ_F2_PLUS_F3", "F2 + F3 = 1/((q^2;q^2)_inf (q;q^2)_inf^2)",
                    {{family_sum(F2, F3), series("F2_PLUS_F3")},
                     {series("F2_PLUS_F3"), dsl("F2_PLUS_F3")}}));
  v.push_back(check("THM_F2_MEX", "F2(n) = p_{4,2}(n, blue)",
                    {{family(F2), mex(MexSide::Plain)}, {mex(MexSide::Plain), series("F2_HALF_SUM")}}));
  v.push_back(check("THM_F3_MEX", "F3(n) = pbar_{4,2}(n, blue)",
                    {{family(F3), mex(MexSide::Bar)}, {mex(MexSide::Bar), series("F3_HALF_DIFF")}}));
  {
    std::vector<Comparison> cs = {{family(F2), series("F2_SUMFORM")}};
    for (const char* k : {"F2_RATIO_FORM", "F2_EULER_FORM", "F2_JTP_PRODUCT", "F2_BILATERAL",
                          "F2_HALF_THETA", "F2_PAIRED", "F2_SPLIT_DENOM", "F2_SUMFORM"}) {
      cs.push_back({series("F2_HALF_SUM"), dsl(k)});
    }
    v.push_back(check("THM_F2_SUMFORM", "Sum form of the F2 generating function", std::move(cs)));
  }
  v.push_back(check("THM_F3_SUMFORM", "Sum form of the F3 generating function",
                    {{family(F3), series("F3_SUMFORM")},
                     {series("F3_HALF_DIFF"), dsl("F3_THETA_CORRECTED")},
                     {series("F3_HALF_DIFF"), dsl("F3_PAIRED")},
                     {series("F3_HALF_DIFF"), dsl("F3_SUMFORM")}}));
  v.push_back(check(
      "THM_F3_THETA_SIGN", "Sign of the one-sided theta sums in the F3 derivation",
      {{family(F3), series("F3_HALF_DIFF")}},
      {{"printed", "sum_{n>=1} (-1)^n q^{2n^2} and sum_{n>=0} (-1)^{n+1} q^{2(n+1)^2} as printed",
        {{dsl("F3_THETA_PRINTED"), series("F3_HALF_DIFF")},
         {dsl("F3_SHIFTED_PRINTED"), series("F3_HALF_DIFF")}}},
       {"negated", "both sums with an overall minus sign",
        {{dsl("F3_THETA_CORRECTED"), series("F3_HALF_DIFF")},
         {negated(dsl("F3_SHIFTED_PRINTED")), series("F3_HALF_DIFF")}}}}));

  v.push_back(check("EQ_H0_MINUS_H1", "H0 - H1 = 1 + 2 sum q^{n^2}",
                    {{family_diff(H0, H1), series("H0_MINUS_H1")},
                     {series("H0_MINUS_H1"), dsl("H0_MINUS_H1_THETA")}}));
  v.push_back(check("EQ_H0_PLUS_H1", "H0 + H1 = sum pbar_o(n) q^n",
                    {{family_sum(H0, H1), series("GEN_H")},
                     {series("GEN_H"), dsl("GEN_H_EULER")},
                     {family_sum(H0, H1), pbar_odd()}}));
  v.push_back(check("EQ_H2_MINUS_H3", "H2 - H3 = 1 + 2 sum (-1)^n q^{n^2}",
                    {{family_diff(H2, H3), series("H2_MINUS_H3")},
                     {series("H2_MINUS_H3"), dsl("H2_MINUS_H3_THETA")}}));
  v.push_back(check("EQ_H2_PLUS_H3", "H2 + H3 = sum pbar_o(n) q^n",
                    {{family_sum(H2, H3), series("GEN_H")},
                     {series("GEN_H"), dsl("GEN_H_EULER")},
                     {family_sum(H2, H3), pbar_odd()}}));
  v.push_back(h_weight("THM_H_WT_A", "H0(n) = pbar_o(n)/2 + [n square], n >= 1", H0, "H0_MINUS_H1",
                       1, SquareTerm::Plus));
  v.push_back(h_weight("THM_H_WT_B", "H1(n) = pbar_o(n)/2 - [n square], n >= 1", H1, "H0_MINUS_H1",
                       -1, SquareTerm::Minus));
  v.push_back(h_weight("THM_H_WT_C", "H2(n) = pbar_o(n)/2 + (-1)^n [n square], n >= 1", H2,
                       "H2_MINUS_H3", 1, SquareTerm::PlusAlternating));
  {
    const Side h3 = half_of("H3 from GEN_H and H2_MINUS_H3", "GEN_H", "H2_MINUS_H3", -1);
    v.push_back(check(
        "THM_H_WT_D", "H3(n) = pbar_o(n)/2 - (+/-1)^n [n square], n >= 1",
        {{family(H3), h3}},
        {{"printed", "correction -(1)^n at squares",
          {{h3, square_formula_dsl(SquareTerm::Minus)},
           {family(H3), square_formula_oracle(SquareTerm::Minus)}}},
         {"alternating", "correction -(-1)^n at squares",
          {{h3, square_formula_dsl(SquareTerm::MinusAlternating)},
           {family(H3), square_formula_oracle(SquareTerm::MinusAlternating)}}}},
        VariantRole::Resolve, 1));
  }

  v.push_back(check("EQ_F_GPT", "F(n) split by the greatest part",
                    {{family(F), series("F_GPT")}, {series("GEN_F"), dsl("F_GPT")}}));
  v.push_back(check("EQ_F_SPT", "F(n) split by the smallest part",
                    {{family(F), series("F_SPT")}, {series("GEN_F"), dsl("F_SPT")}},
                    {{"printed", "the three sums without the empty partition's 1",
                      {{series("GEN_F"), dsl("F_SPT_PRINTED")}}}},
                    VariantRole::Annotate));
  v.push_back(check("EQ_GEN_F2", "Three expressions for 1/((q^2;q^2)_inf (q;q^2)_inf^2)",
                    {{dsl("GEN_F2_LINE1"), dsl("GEN_F2_LINE2")},
                     {dsl("GEN_F2_LINE2"), series("F2_PLUS_F3")},
                     {series("GEN_F2_LINE1"), series("F2_PLUS_F3")}}));
  v.push_back(check("EQ_H_GPT", "H(n) split by the greatest part",
                    {{family(H), series("H_GPT")}, {series("GEN_H"), dsl("H_GPT")}},
                    {{"printed", "left side summed from n = 1",
                      {{series("GEN_H_TAIL"), dsl("H_GPT")}}}},
                    VariantRole::Annotate));
  v.push_back(check("EQ_H_SPT", "H(n) split by the smallest part",
                    {{family(H), series("H_SPT")}, {series("GEN_H"), dsl("H_SPT")}},
                    {{"printed", "left side summed from n = 1",
                      {{series("GEN_H_TAIL"), dsl("H_SPT")}}}},
                    VariantRole::Annotate));
  v.push_back(check("EQ_GEN_H2", "Three expressions for (-q^2;q^2)_inf (-q;q^2)_inf^2 - 1",
                    {{dsl("GEN_H2_LINE1"), dsl("GEN_H2_LINE2")},
                     {dsl("GEN_H2_LINE2"), series("GEN_H_TAIL")},
                     {series("GEN_H2_LINE1"), series("GEN_H_TAIL")}},
                    {{"printed", "last term with denominator (1+q^{2n+1})(1+q^{2n+1})",
                      {{dsl("GEN_H2_LINE2_PRINTED"), series("GEN_H_TAIL")}}}},
                    VariantRole::Annotate));
  return v;
}

}  // namespace

const std::vector<IdentityCheck>& registry() {
  static const std::vector<IdentityCheck> checks = build();
  return checks;
}

}  // namespace qpart
