// Programmatic builders for every generating function the identity suite
// refers to. Each builder composes Pochhammer products, theta sums and ring
// operations directly; the text transcriptions in corpus.cpp evaluate the
// same series through the expression language, and the two are compared
// bit for bit.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "qpart/errors.hpp"
#include "qpart/qfactory.hpp"

namespace qpart {
namespace {

using N = std::size_t;

Series P(int sign, std::int64_t a, std::int64_t m, std::int64_t e, N n) {
  return pochhammer(PochSpec(sign, a, m, e), n);
}

Series FP(int sign, std::int64_t a, std::int64_t m, std::int64_t len, N n) {
  return finite_pochhammer(FinitePochSpec(sign, a, m, len), n);
}

Series T(std::int64_t a, std::int64_t b, int s, std::int64_t c, N n) {
  return theta(ThetaSpec(a, b, s, c), n);
}

Series q_to(std::int64_t k, N n) { return Series::monomial(static_cast<N>(k), 1, n); }

Series one(N n) { return Series::one(n); }

Series half(const Series& s) { return divide_exact(s, 2); }

// 1 - sign*q^d as a series.
Series binomial(int sign, std::int64_t d, N n) {
  return one(n) - Integer(sign) * q_to(d, n);
}

// 1/((q;q)_∞ (q^2;q^2)_∞), the common denominator of the F0/F1 closed forms.
Series f01_denominator(N n) { return P(1, 1, 1, -1, n) * P(1, 2, 2, -1, n); }

// 1/((q;q^2)_∞ (q^2;q^2)_∞^2), the denominator printed in the theorem statements.
Series f01_printed_denominator(N n) { return P(1, 1, 2, -1, n) * P(1, 2, 2, -2, n); }

// 1/((q^2;q^2)_∞ (q;q^2)_∞^2)
Series f23_denominator(N n) { return P(1, 2, 2, -1, n) * P(1, 1, 2, -2, n); }

Series gen_f(N n) { return P(1, 1, 2, -2, n) * P(1, 2, 2, -1, n); }
Series gen_h(N n) { return P(-1, 1, 2, 2, n) * P(-1, 2, 2, 1, n); }
Series f2_plus_f3(N n) { return f23_denominator(n); }
Series f2_minus_f3(N n) { return P(-1, 2, 2, -1, n) * P(1, 1, 2, -2, n); }

// sum_{n>=0} sign^n q^{2n^2}, sign-alternating one-sided theta.
Series one_sided_theta(int sign, std::int64_t first, N n) {
  Series acc(n);
  for (std::int64_t k = first; 2 * k * k <= static_cast<std::int64_t>(n); ++k) {
    const int s = (sign < 0 && k % 2 != 0) ? -1 : 1;
    acc = acc + Integer(s) * q_to(2 * k * k, n);
  }
  return acc;
}

// 1 + 2 sum_{n>=1} sign^n q^{n^2}
Series doubled_square_theta(int sign, N n) {
  Series acc = one(n);
  for (std::int64_t k = 1; k * k <= static_cast<std::int64_t>(n); ++k) {
    const int s = (sign < 0 && k % 2 != 0) ? -2 : 2;
    acc = acc + Integer(s) * q_to(k * k, n);
  }
  return acc;
}

// sum of the arithmetic progression 2 + 6 + 10 + ... with `terms` terms.
std::int64_t progression_2_mod_4(std::int64_t terms) {
  std::int64_t s = 0;
  for (std::int64_t i = 1; i <= terms; ++i) s += 4 * i - 2;
  return s;
}

// prod_{j>=0, j != skip} (1 - q^{4j+2})
Series product_skipping(std::int64_t skip, N n) {
  Series acc = one(n);
  for (std::int64_t j = 0; 4 * j + 2 <= static_cast<std::int64_t>(n); ++j) {
    if (j == skip) continue;
    acc = acc * binomial(1, 4 * j + 2, n);
  }
  return acc;
}

// 1/((q^4;q^4)_∞ (q;q^2)_∞^2) sum_{k>=0} q^{2+6+...} / prod_{j != 2k+parity}(1-q^{4j+2})
Series f23_sum_form(int parity, N n) {
  Series acc(n);
  for (std::int64_t k = 0;; ++k) {
    const std::int64_t e = progression_2_mod_4(2 * k + parity);
    if (e > static_cast<std::int64_t>(n)) break;
    acc = acc + q_to(e, n) * invert(product_skipping(2 * k + parity, n));
  }
  return P(1, 4, 4, -1, n) * P(1, 1, 2, -2, n) * acc;
}

Series f_gpt(N n) {
  const auto lim = static_cast<std::int64_t>(n);
  Series acc(n);
  for (std::int64_t k = 0; 2 * k <= lim; ++k) {
    acc = acc + q_to(2 * k, n) * invert(FP(1, 2, 2, k, n) * pow(FP(1, 1, 2, k, n), 2));
  }
  for (std::int64_t k = 0; 2 * k + 1 <= lim; ++k) {
    acc = acc + q_to(2 * k + 1, n) * invert(FP(1, 2, 2, k, n) * pow(FP(1, 1, 2, k + 1, n), 2));
  }
  for (std::int64_t k = 0; 2 * k + 1 <= lim; ++k) {
    acc = acc + q_to(2 * k + 1, n) *
                    invert(FP(1, 2, 2, k, n) * FP(1, 1, 2, k + 1, n) * FP(1, 1, 2, k, n));
  }
  return acc;
}

Series f_spt_without_constant(N n) {
  const auto lim = static_cast<std::int64_t>(n);
  Series acc(n);
  for (std::int64_t k = 0; 2 * k + 2 <= lim; ++k) {
    acc = acc + q_to(2 * k + 2, n) * P(1, 2 * k + 2, 2, -1, n) * P(1, 2 * k + 3, 2, -2, n);
  }
  for (std::int64_t k = 0; 2 * k + 1 <= lim; ++k) {
    acc = acc + q_to(2 * k + 1, n) * P(1, 2 * k + 2, 2, -1, n) * P(1, 2 * k + 1, 2, -1, n) *
                    P(1, 2 * k + 3, 2, -1, n);
  }
  for (std::int64_t k = 0; 2 * k + 1 <= lim; ++k) {
    acc = acc + q_to(2 * k + 1, n) * P(1, 2 * k + 2, 2, -1, n) * P(1, 2 * k + 1, 2, -2, n);
  }
  return acc;
}

Series gen_f2_line1(N n) {
  Series acc(n);
  for (std::int64_t k = 0; 2 * k <= static_cast<std::int64_t>(n); ++k) {
    const Series r = invert(binomial(1, 2 * k + 1, n));
    const Series bracket = one(n) + q_to(1, n) * r + q_to(1, n) * r * r;
    acc = acc +
          q_to(2 * k, n) * invert(FP(1, 2, 2, k, n) * pow(FP(1, 1, 2, k, n), 2)) * bracket;
  }
  return acc;
}

Series gen_f2_line2(N n) {
  Series acc = one(n);
  for (std::int64_t k = 0; 2 * k + 1 <= static_cast<std::int64_t>(n); ++k) {
    const Series r = invert(binomial(1, 2 * k + 1, n));
    const Series bracket = q_to(1, n) + r + r * r;
    acc = acc + q_to(2 * k + 1, n) * P(1, 2 * k + 2, 2, -1, n) * P(1, 2 * k + 3, 2, -2, n) *
                    bracket;
  }
  return acc;
}

Series h_gpt(N n) {
  const auto lim = static_cast<std::int64_t>(n);
  Series acc = one(n);
  for (std::int64_t k = 0; 2 * k + 2 <= lim; ++k) {
    acc = acc + q_to(2 * k + 2, n) * FP(-1, 2, 2, k, n) * pow(FP(-1, 1, 2, k + 1, n), 2);
  }
  for (std::int64_t k = 0; 2 * k + 1 <= lim; ++k) {
    acc = acc + q_to(2 * k + 1, n) * FP(-1, 2, 2, k, n) * pow(FP(-1, 1, 2, k, n), 2);
  }
  for (std::int64_t k = 0; 2 * k + 1 <= lim; ++k) {
    acc = acc + q_to(2 * k + 1, n) * FP(-1, 2, 2, k, n) * FP(-1, 1, 2, k + 1, n) *
                    FP(-1, 1, 2, k, n);
  }
  return acc;
}

Series h_spt(N n) {
  const auto lim = static_cast<std::int64_t>(n);
  Series acc = one(n);
  for (std::int64_t k = 0; 2 * k + 2 <= lim; ++k) {
    acc = acc + q_to(2 * k + 2, n) * P(-1, 2 * k + 4, 2, 1, n) * P(-1, 2 * k + 3, 2, 2, n);
  }
  for (std::int64_t k = 0; 2 * k + 1 <= lim; ++k) {
    acc = acc + q_to(2 * k + 1, n) * P(-1, 2 * k + 2, 2, 1, n) * P(-1, 2 * k + 1, 2, 1, n) *
                    P(-1, 2 * k + 3, 2, 1, n);
  }
  for (std::int64_t k = 0; 2 * k + 1 <= lim; ++k) {
    acc = acc + q_to(2 * k + 1, n) * P(-1, 2 * k + 2, 2, 1, n) * P(-1, 2 * k + 3, 2, 2, n);
  }
  return acc;
}

Series gen_h2_line1(N n) {
  Series acc(n);
  for (std::int64_t k = 0; 2 * k + 1 <= static_cast<std::int64_t>(n); ++k) {
    const Series r = invert(binomial(-1, 2 * k + 1, n));
    const Series bracket = q_to(1, n) + r + r * r;
    acc = acc + q_to(2 * k + 1, n) * FP(-1, 2, 2, k, n) * pow(FP(-1, 1, 2, k + 1, n), 2) *
                    bracket;
  }
  return acc;
}

// The last bracket term has denominator (1+q^{2n+1})(1+q^{2n+1}) as printed;
// the smallest-part split produces (1+q^{2n+1})(1+q^{2n+2}).
Series gen_h2_line2(bool as_printed, N n) {
  Series acc(n);
  for (std::int64_t k = 0; 2 * k + 1 <= static_cast<std::int64_t>(n); ++k) {
    const Series r = invert(binomial(-1, 2 * k + 1, n));
    const std::int64_t second = as_printed ? 2 * k + 1 : 2 * k + 2;
    const Series bracket =
        one(n) + r + q_to(1, n) * invert(binomial(-1, 2 * k + 1, n) * binomial(-1, second, n));
    acc = acc + q_to(2 * k + 1, n) * P(-1, 2 * k + 1, 2, 1, n) * P(-1, 2 * k + 2, 2, 1, n) *
                    P(-1, 2 * k + 3, 2, 1, n) * bracket;
  }
  return acc;
}

struct Builder {
  CatalogEntry entry;
  std::function<Series(N)> build;
};

const std::vector<Builder>& builders() {
  static const std::vector<Builder> table = {
      // Introduction.
      {{"GEN_F", "1/((q;q^2)_inf^2 (q^2;q^2)_inf)"}, gen_f},
      {{"GEN_F_EULER", "(-q;q)_inf/((q;q^2)_inf (q^2;q^2)_inf)"},
       [](N n) { return P(-1, 1, 1, 1, n) * P(1, 1, 2, -1, n) * P(1, 2, 2, -1, n); }},
      {{"GEN_PBAR", "(-q;q)_inf/(q;q)_inf"},
       [](N n) { return P(-1, 1, 1, 1, n) * P(1, 1, 1, -1, n); }},
      {{"EULER_LHS", "(-q;q)_inf"}, [](N n) { return P(-1, 1, 1, 1, n); }},
      {{"EULER_RHS", "1/(q;q^2)_inf"}, [](N n) { return P(1, 1, 2, -1, n); }},
      {{"F0_PRINTED", "(q^16,q^6,q^10;q^16)_inf/((q;q^2)_inf (q^2;q^2)_inf^2)"},
       [](N n) {
         return P(1, 16, 16, 1, n) * P(1, 6, 16, 1, n) * P(1, 10, 16, 1, n) *
                f01_printed_denominator(n);
       }},
      {{"F0_SIGNED", "(q^16,-q^6,-q^10;q^16)_inf/((q;q^2)_inf (q^2;q^2)_inf^2)"},
       [](N n) {
         return P(1, 16, 16, 1, n) * P(-1, 6, 16, 1, n) * P(-1, 10, 16, 1, n) *
                f01_printed_denominator(n);
       }},
      {{"F1_PRINTED", "q (q^16,q^2,q^14;q^16)_inf/((q;q^2)_inf (q^2;q^2)_inf^2)"},
       [](N n) {
         return (P(1, 16, 16, 1, n) * P(1, 2, 16, 1, n) * P(1, 14, 16, 1, n) *
                 f01_printed_denominator(n))
             .shifted(1);
       }},
      {{"F1_SIGNED", "q (q^16,-q^2,-q^14;q^16)_inf/((q;q^2)_inf (q^2;q^2)_inf^2)"},
       [](N n) {
         return (P(1, 16, 16, 1, n) * P(-1, 2, 16, 1, n) * P(-1, 14, 16, 1, n) *
                 f01_printed_denominator(n))
             .shifted(1);
       }},

      // Connections with overpartitions.
      {{"F0_MINUS_F1", "1/((-q;q^2)_inf (q;q^2)_inf (q^2;q^2)_inf)"},
       [](N n) { return P(-1, 1, 2, -1, n) * P(1, 1, 2, -1, n) * P(1, 2, 2, -1, n); }},
      {{"F0_MINUS_F1_EULER", "(-q;q)_inf/((-q;q^2)_inf (q^2;q^2)_inf)"},
       [](N n) { return P(-1, 1, 1, 1, n) * P(-1, 1, 2, -1, n) * P(1, 2, 2, -1, n); }},
      {{"PBAR_Q2", "(-q^2;q^2)_inf/(q^2;q^2)_inf"},
       [](N n) { return P(-1, 2, 2, 1, n) * P(1, 2, 2, -1, n); }},
      {{"GEN_H", "(-q;q^2)_inf^2 (-q^2;q^2)_inf"}, gen_h},
      {{"GEN_H_EULER", "(-q;q^2)_inf/(q;q^2)_inf"},
       [](N n) { return P(-1, 1, 2, 1, n) * P(1, 1, 2, -1, n); }},
      {{"GEN_H_TAIL", "(-q^2;q^2)_inf (-q;q^2)_inf^2 - 1"},
       [](N n) { return P(-1, 2, 2, 1, n) * P(-1, 1, 2, 2, n) - one(n); }},
      {{"H0_MINUS_H1", "(q^2;q^2)_inf (-q;q^2)_inf^2"},
       [](N n) { return P(1, 2, 2, 1, n) * P(-1, 1, 2, 2, n); }},
      {{"H0_MINUS_H1_THETA", "1 + 2 sum_{n>=1} q^{n^2}"},
       [](N n) { return doubled_square_theta(1, n); }},
      {{"H2_MINUS_H3", "(q^2;q^2)_inf (q;q^2)_inf^2"},
       [](N n) { return P(1, 2, 2, 1, n) * P(1, 1, 2, 2, n); }},
      {{"H2_MINUS_H3_THETA", "1 + 2 sum_{n>=1} (-1)^n q^{n^2}"},
       [](N n) { return doubled_square_theta(-1, n); }},

      // F0 and F1 closed forms.
      {{"F0_MINUS_F1_COMPACT", "1/((-q;q^2)_inf (q;q)_inf)"},
       [](N n) { return P(-1, 1, 2, -1, n) * P(1, 1, 1, -1, n); }},
      {{"F0_PLUS_F1", "1/((q;q^2)_inf (q;q^2)_inf (q^2;q^2)_inf)"},
       [](N n) { return P(1, 1, 2, -1, n) * P(1, 1, 2, -1, n) * P(1, 2, 2, -1, n); }},
      {{"F0_PLUS_F1_COMPACT", "1/((q;q^2)_inf (q;q)_inf)"},
       [](N n) { return P(1, 1, 2, -1, n) * P(1, 1, 1, -1, n); }},
      {{"F0_HALF_SUM", "1/2 1/(q;q)_inf (1/(q;q^2)_inf + 1/(-q;q^2)_inf)"},
       [](N n) { return half(P(1, 1, 1, -1, n) * (P(1, 1, 2, -1, n) + P(-1, 1, 2, -1, n))); }},
      {{"F0_EULER_FORM", "1/2 ((-q;q^2)_inf + (q;q^2)_inf)/((q;q)_inf (q^2;q^4)_inf)"},
       [](N n) {
         return half(P(1, 1, 1, -1, n) * P(1, 2, 4, -1, n) *
                     (P(-1, 1, 2, 1, n) + P(1, 1, 2, 1, n)));
       }},
      {{"F0_JTP_PRODUCTS",
        "1/2 ((-q,-q^3,q^4;q^4)_inf + (q,q^3,q^4;q^4)_inf)/((q;q)_inf (q^2;q^2)_inf)"},
       [](N n) {
         return half(f01_denominator(n) *
                     (P(-1, 1, 4, 1, n) * P(-1, 3, 4, 1, n) * P(1, 4, 4, 1, n) +
                      P(1, 1, 4, 1, n) * P(1, 3, 4, 1, n) * P(1, 4, 4, 1, n)));
       }},
      {{"F0_BILATERAL", "1/2 sum_{n in Z} q^{2n^2+n} (1+(-1)^n)/((q;q)_inf (q^2;q^2)_inf)"},
       [](N n) { return half(f01_denominator(n) * (T(2, 1, 1, 0, n) + T(2, 1, -1, 0, n))); }},
      {{"GEN_F0", "sum_{n in Z} q^{8n^2+2n}/((q;q)_inf (q^2;q^2)_inf)"},
       [](N n) { return f01_denominator(n) * T(8, 2, 1, 0, n); }},
      {{"F0_HLP2_PRINTED", "(q^16,q^6,q^10;q^16)_inf/((q;q)_inf (q^2;q^2)_inf)"},
       [](N n) {
         return P(1, 16, 16, 1, n) * P(1, 6, 16, 1, n) * P(1, 10, 16, 1, n) * f01_denominator(n);
       }},
      {{"F0_HLP2_SIGNED", "(q^16,-q^6,-q^10;q^16)_inf/((q;q)_inf (q^2;q^2)_inf)"},
       [](N n) {
         return P(1, 16, 16, 1, n) * P(-1, 6, 16, 1, n) * P(-1, 10, 16, 1, n) *
                f01_denominator(n);
       }},
      {{"F1_HALF_DIFF", "1/2 1/(q;q)_inf (1/(q;q^2)_inf - 1/(-q;q^2)_inf)"},
       [](N n) { return half(P(1, 1, 1, -1, n) * (P(1, 1, 2, -1, n) - P(-1, 1, 2, -1, n))); }},
      {{"F1_BILATERAL", "1/2 sum_{n in Z} q^{2n^2+n} (1-(-1)^n)/((q;q)_inf (q^2;q^2)_inf)"},
       [](N n) { return half(f01_denominator(n) * (T(2, 1, 1, 0, n) - T(2, 1, -1, 0, n))); }},
      {{"GEN_F1", "sum_{n in Z} q^{8n^2+6n+1}/((q;q)_inf (q^2;q^2)_inf)"},
       [](N n) { return f01_denominator(n) * T(8, 6, 1, 1, n); }},

      // F2 and F3.
      {{"F2_MINUS_F3", "1/((-q^2;q^2)_inf (q;q^2)_inf^2)"}, f2_minus_f3},
      {{"F2_PLUS_F3", "1/((q^2;q^2)_inf (q;q^2)_inf^2)"}, f2_plus_f3},
      {{"F2_HALF_SUM",
        "1/2 (1/((q^2;q^2)_inf (q;q^2)_inf^2) + 1/((-q^2;q^2)_inf (q;q^2)_inf^2))"},
       [](N n) { return half(f2_plus_f3(n) + f2_minus_f3(n)); }},
      {{"F2_RATIO_FORM",
        "(1 + (q^2;q^2)_inf/(-q^2;q^2)_inf)/(2 (q^2;q^2)_inf (q;q^2)_inf^2)"},
       [](N n) {
         return half(f23_denominator(n) * (one(n) + P(1, 2, 2, 1, n) * P(-1, 2, 2, -1, n)));
       }},
      {{"F2_EULER_FORM", "(1 + (q^2;q^2)_inf (q^2;q^4)_inf)/(2 (q^2;q^2)_inf (q;q^2)_inf^2)"},
       [](N n) {
         return half(f23_denominator(n) * (one(n) + P(1, 2, 2, 1, n) * P(1, 2, 4, 1, n)));
       }},
      {{"F2_JTP_PRODUCT", "(1 + (q^4,q^2,q^2;q^4)_inf)/(2 (q^2;q^2)_inf (q;q^2)_inf^2)"},
       [](N n) {
         return half(f23_denominator(n) *
                     (one(n) + P(1, 4, 4, 1, n) * P(1, 2, 4, 1, n) * P(1, 2, 4, 1, n)));
       }},
      {{"F2_BILATERAL",
        "(1 + sum_{n in Z} (-1)^n q^{2n^2})/(2 (q^2;q^2)_inf (q;q^2)_inf^2)"},
       [](N n) { return half(f23_denominator(n) * (one(n) + T(2, 0, -1, 0, n))); }},
      {{"F2_HALF_THETA", "sum_{n>=0} (-1)^n q^{2n^2}/((q^2;q^2)_inf (q;q^2)_inf^2)"},
       [](N n) { return f23_denominator(n) * one_sided_theta(-1, 0, n); }},
      {{"F2_PAIRED", "sum_{n>=0} q^{8n^2}(1-q^{8n+2})/((q^2;q^2)_inf (q;q^2)_inf^2)"},
       [](N n) {
         Series acc(n);
         for (std::int64_t k = 0; 8 * k * k <= static_cast<std::int64_t>(n); ++k) {
           acc = acc + q_to(8 * k * k, n) * binomial(1, 8 * k + 2, n);
         }
         return f23_denominator(n) * acc;
       }},
      {{"F2_SPLIT_DENOM",
        "1/((q^4;q^4)_inf (q;q^2)_inf^2) sum_{n>=0} q^{8n^2}(1-q^{8n+2})/(q^2;q^4)_inf"},
       [](N n) {
         Series acc(n);
         for (std::int64_t k = 0; 8 * k * k <= static_cast<std::int64_t>(n); ++k) {
           acc = acc + q_to(8 * k * k, n) * binomial(1, 8 * k + 2, n) * P(1, 2, 4, -1, n);
         }
         return P(1, 4, 4, -1, n) * P(1, 1, 2, -2, n) * acc;
       }},
      {{"F2_SUMFORM",
        "1/((q^4;q^4)_inf (q;q^2)_inf^2) sum_{n>=0} q^{2+6+...+(8n-2)}/prod_{j>=0, j!=2n}(1-q^{4j+2})"},
       [](N n) { return f23_sum_form(0, n); }},
      {{"F3_HALF_DIFF",
        "1/2 (1/((q^2;q^2)_inf (q;q^2)_inf^2) - 1/((-q^2;q^2)_inf (q;q^2)_inf^2))"},
       [](N n) { return half(f2_plus_f3(n) - f2_minus_f3(n)); }},
      {{"F3_THETA_PRINTED", "sum_{n>=1} (-1)^n q^{2n^2}/((q^2;q^2)_inf (q;q^2)_inf^2)"},
       [](N n) { return f23_denominator(n) * one_sided_theta(-1, 1, n); }},
      {{"F3_THETA_CORRECTED", "-sum_{n>=1} (-1)^n q^{2n^2}/((q^2;q^2)_inf (q;q^2)_inf^2)"},
       [](N n) { return -(f23_denominator(n) * one_sided_theta(-1, 1, n)); }},
      {{"F3_SHIFTED_PRINTED",
        "sum_{n>=0} (-1)^{n+1} q^{2(n+1)^2}/((q^2;q^2)_inf (q;q^2)_inf^2)"},
       [](N n) {
         Series acc(n);
         for (std::int64_t k = 0; 2 * (k + 1) * (k + 1) <= static_cast<std::int64_t>(n); ++k) {
           const int s = (k + 1) % 2 == 0 ? 1 : -1;
           acc = acc + Integer(s) * q_to(2 * (k + 1) * (k + 1), n);
         }
         return f23_denominator(n) * acc;
       }},
      {{"F3_PAIRED", "sum_{n>=0} q^{8n^2+8n+2}(1-q^{8n+6})/((q^2;q^2)_inf (q;q^2)_inf^2)"},
       [](N n) {
         Series acc(n);
         for (std::int64_t k = 0; 8 * k * k + 8 * k + 2 <= static_cast<std::int64_t>(n); ++k) {
           acc = acc + q_to(8 * k * k + 8 * k + 2, n) * binomial(1, 8 * k + 6, n);
         }
         return f23_denominator(n) * acc;
       }},
      {{"F3_SUMFORM",
        "1/((q^4;q^4)_inf (q;q^2)_inf^2) sum_{n>=0} q^{2+6+...+(8n+2)}/prod_{j>=0, j!=2n+1}(1-q^{4j+2})"},
       [](N n) { return f23_sum_form(1, n); }},

      // Jacobi triple product specializations, both sides.
      {{"JTP_Q4_X1_PRODUCT", "(q^4,-q^3,-q;q^4)_inf"},
       [](N n) { return P(1, 4, 4, 1, n) * P(-1, 3, 4, 1, n) * P(-1, 1, 4, 1, n); }},
      {{"JTP_Q4_X1_SUM", "sum_{n in Z} q^{2n^2+n}"}, [](N n) { return T(2, 1, 1, 0, n); }},
      {{"JTP_Q16_X6_PRODUCT", "(q^16,-q^10,-q^6;q^16)_inf"},
       [](N n) { return P(1, 16, 16, 1, n) * P(-1, 10, 16, 1, n) * P(-1, 6, 16, 1, n); }},
      {{"JTP_Q16_X6_SUM", "sum_{n in Z} q^{8n^2+2n}"}, [](N n) { return T(8, 2, 1, 0, n); }},
      {{"JTP_Q4_MX2_PRODUCT", "(q^4,q^2,q^2;q^4)_inf"},
       [](N n) { return P(1, 4, 4, 1, n) * P(1, 2, 4, 1, n) * P(1, 2, 4, 1, n); }},
      {{"JTP_Q4_MX2_SUM", "sum_{n in Z} (-1)^n q^{2n^2}"}, [](N n) { return T(2, 0, -1, 0, n); }},

      // Greatest-part and smallest-part expansions.
      {{"F_GPT", "greatest-part expansion of sum F(n) q^n (three sums)"}, f_gpt},
      {{"F_SPT_PRINTED", "smallest-part expansion of sum F(n) q^n, three sums as printed"},
       f_spt_without_constant},
      {{"F_SPT", "1 + smallest-part expansion of sum F(n) q^n"},
       [](N n) { return one(n) + f_spt_without_constant(n); }},
      {{"GEN_F2_LINE1",
        "sum_{n>=0} q^{2n}/((q^2;q^2)_n (q;q^2)_n^2) (1 + q/(1-q^{2n+1}) + q/(1-q^{2n+1})^2)"},
       gen_f2_line1},
      {{"GEN_F2_LINE2",
        "1 + sum_{n>=0} q^{2n+1}/((q^{2n+2};q^2)_inf (q^{2n+3};q^2)_inf^2) (q + 1/(1-q^{2n+1}) + 1/(1-q^{2n+1})^2)"},
       gen_f2_line2},
      {{"H_GPT", "1 + greatest-part expansion of the nonempty H-partitions (three sums)"}, h_gpt},
      {{"H_SPT", "1 + smallest-part expansion of the nonempty H-partitions (three sums)"}, h_spt},
      {{"GEN_H2_LINE1",
        "sum_{n>=0} q^{2n+1}(-q^2;q^2)_n (-q;q^2)_{n+1}^2 (q + 1/(1+q^{2n+1}) + 1/(1+q^{2n+1})^2)"},
       gen_h2_line1},
      {{"GEN_H2_LINE2_PRINTED",
        "sum_{n>=0} q^{2n+1}(-q^{2n+1},-q^{2n+2},-q^{2n+3};q^2)_inf (1 + 1/(1+q^{2n+1}) + q/((1+q^{2n+1})(1+q^{2n+1})))"},
       [](N n) { return gen_h2_line2(true, n); }},
      {{"GEN_H2_LINE2",
        "sum_{n>=0} q^{2n+1}(-q^{2n+1},-q^{2n+2},-q^{2n+3};q^2)_inf (1 + 1/(1+q^{2n+1}) + q/((1+q^{2n+1})(1+q^{2n+2})))"},
       [](N n) { return gen_h2_line2(false, n); }},
  };
  return table;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    for (const auto& b : builders()) v.push_back(b.entry);
    return v;
  }();
  return entries;
}

bool is_catalog_key(std::string_view name) {
  const auto& b = builders();
  return std::any_of(b.begin(), b.end(), [&](const Builder& x) { return x.entry.key == name; });
}

Series named_series(std::string_view name, std::size_t order) {
  for (const auto& b : builders()) {
    if (b.entry.key == name) return b.build(order);
  }
  throw UnknownName("no generating function named '" + std::string(name) + "'");
}

}  // namespace qpart
