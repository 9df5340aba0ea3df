#include <string>

#include "qpart/corpus.hpp"
#include "qpart/dsl.hpp"
#include "qpart/errors.hpp"

namespace qpart {
namespace {

#define F01_DEN "((q;q^2)_inf*(q^2;q^2)_inf^2)"
#define F01_HLP "((q;q)_inf*(q^2;q^2)_inf)"
#define F23_DEN "((q^2;q^2)_inf*(q;q^2)_inf^2)"
#define F23_SPLIT "((q^4;q^4)_inf*(q;q^2)_inf^2)"
#define F_SPT_SUMS                                                                           \
  "sum(n=0..inf, q^(2*n+2)/((q^(2*n+2);q^2)_inf*(q^(2*n+3);q^2)_inf^2))"                     \
  " + sum(n=0..inf, q^(2*n+1)/((q^(2*n+2);q^2)_inf*(q^(2*n+1);q^2)_inf*(q^(2*n+3);q^2)_inf))" \
  " + sum(n=0..inf, q^(2*n+1)/((q^(2*n+2);q^2)_inf*(q^(2*n+1);q^2)_inf^2))"
#define H2_LINE2(second)                                                                  \
  "sum(n=0..inf, q^(2*n+1)*(-q^(2*n+1),-q^(2*n+2),-q^(2*n+3);q^2)_inf"                    \
  "*(1 + 1/(1 + q^(2*n+1)) + q/((1 + q^(2*n+1))*(1 + q^(" second ")))))"

const std::vector<CorpusEntry> kCorpus = {
    {"GEN_F", "1/((q;q^2)_inf^2*(q^2;q^2)_inf)"},
    {"GEN_F_EULER", "(-q;q)_inf/((q;q^2)_inf*(q^2;q^2)_inf)"},
    {"GEN_PBAR", "(-q;q)_inf/(q;q)_inf"},
    {"EULER_LHS", "(-q;q)_inf"},
    {"EULER_RHS", "1/(q;q^2)_inf"},
    {"F0_PRINTED", "(q^16,q^6,q^10;q^16)_inf/" F01_DEN},
    {"F0_SIGNED", "(q^16,-q^6,-q^10;q^16)_inf/" F01_DEN},
    {"F1_PRINTED", "q*(q^16,q^2,q^14;q^16)_inf/" F01_DEN},
    {"F1_SIGNED", "q*(q^16,-q^2,-q^14;q^16)_inf/" F01_DEN},
    {"F0_MINUS_F1", "1/((-q;q^2)_inf*(q;q^2)_inf*(q^2;q^2)_inf)"},
    {"F0_MINUS_F1_EULER", "(-q;q)_inf/((-q;q^2)_inf*(q^2;q^2)_inf)"},
    {"PBAR_Q2", "(-q^2;q^2)_inf/(q^2;q^2)_inf"},
    {"GEN_H", "(-q;q^2)_inf^2*(-q^2;q^2)_inf"},
    {"GEN_H_EULER", "(-q;q^2)_inf/(q;q^2)_inf"},
    {"GEN_H_TAIL", "(-q^2;q^2)_inf*(-q;q^2)_inf^2 - 1"},
    {"H0_MINUS_H1", "(q^2;q^2)_inf*(-q;q^2)_inf^2"},
    {"H0_MINUS_H1_THETA", "1 + 2*sum(n=1..inf, q^(n*n))"},
    {"H2_MINUS_H3", "(q^2;q^2)_inf*(q;q^2)_inf^2"},
    {"H2_MINUS_H3_THETA", "1 + 2*sum(n=1..inf, (-1)^n*q^(n*n))"},
    {"F0_MINUS_F1_COMPACT", "1/((-q;q^2)_inf*(q;q)_inf)"},
    {"F0_PLUS_F1", "1/((q;q^2)_inf*(q;q^2)_inf*(q^2;q^2)_inf)"},
    {"F0_PLUS_F1_COMPACT", "1/((q;q^2)_inf*(q;q)_inf)"},
    {"F0_HALF_SUM", "(1/(q;q^2)_inf + 1/(-q;q^2)_inf)/(q;q)_inf/2"},
    {"F0_EULER_FORM", "((-q;q^2)_inf + (q;q^2)_inf)/((q;q)_inf*(q^2;q^4)_inf)/2"},
    {"F0_JTP_PRODUCTS", "((-q,-q^3,q^4;q^4)_inf + (q,q^3,q^4;q^4)_inf)/" F01_HLP "/2"},
    {"F0_BILATERAL", "sum(n=-inf..inf, q^(2*n*n+n)*(1 + (-1)^n))/" F01_HLP "/2"},
    {"GEN_F0", "sum(n=-inf..inf, q^(8*n*n+2*n))/" F01_HLP},
    {"F0_HLP2_PRINTED", "(q^16,q^6,q^10;q^16)_inf/" F01_HLP},
    {"F0_HLP2_SIGNED", "(q^16,-q^6,-q^10;q^16)_inf/" F01_HLP},
    {"F1_HALF_DIFF", "(1/(q;q^2)_inf - 1/(-q;q^2)_inf)/(q;q)_inf/2"},
    {"F1_BILATERAL", "sum(n=-inf..inf, q^(2*n*n+n)*(1 - (-1)^n))/" F01_HLP "/2"},
    {"GEN_F1", "sum(n=-inf..inf, q^(8*n*n+6*n+1))/" F01_HLP},
    {"F2_MINUS_F3", "1/((-q^2;q^2)_inf*(q;q^2)_inf^2)"},
    {"F2_PLUS_F3", "1/" F23_DEN},
    {"F2_HALF_SUM", "(1/" F23_DEN " + 1/((-q^2;q^2)_inf*(q;q^2)_inf^2))/2"},
    {"F2_RATIO_FORM", "(1 + (q^2;q^2)_inf/(-q^2;q^2)_inf)/" F23_DEN "/2"},
    {"F2_EULER_FORM", "(1 + (q^2;q^2)_inf*(q^2;q^4)_inf)/" F23_DEN "/2"},
    {"F2_JTP_PRODUCT", "(1 + (q^4,q^2,q^2;q^4)_inf)/" F23_DEN "/2"},
    {"F2_BILATERAL", "(1 + sum(n=-inf..inf, (-1)^n*q^(2*n*n)))/" F23_DEN "/2"},
    {"F2_HALF_THETA", "sum(n=0..inf, (-1)^n*q^(2*n*n))/" F23_DEN},
    {"F2_PAIRED", "sum(n=0..inf, q^(8*n*n)*(1 - q^(8*n+2)))/" F23_DEN},
    {"F2_SPLIT_DENOM", "sum(n=0..inf, q^(8*n*n)*(1 - q^(8*n+2))/(q^2;q^4)_inf)/" F23_SPLIT},
    {"F2_SUMFORM",
     "sum(n=0..inf, q^(8*n*n)/((q^2;q^4)_(2*n)*(q^(8*n+6);q^4)_inf))/" F23_SPLIT},
    {"F3_HALF_DIFF", "(1/" F23_DEN " - 1/((-q^2;q^2)_inf*(q;q^2)_inf^2))/2"},
    {"F3_THETA_PRINTED", "sum(n=1..inf, (-1)^n*q^(2*n*n))/" F23_DEN},
    {"F3_THETA_CORRECTED", "-sum(n=1..inf, (-1)^n*q^(2*n*n))/" F23_DEN},
    {"F3_SHIFTED_PRINTED", "sum(n=0..inf, (-1)^(n+1)*q^(2*(n+1)*(n+1)))/" F23_DEN},
    {"F3_PAIRED", "sum(n=0..inf, q^(8*n*n+8*n+2)*(1 - q^(8*n+6)))/" F23_DEN},
    {"F3_SUMFORM",
     "sum(n=0..inf, q^(8*n*n+8*n+2)/((q^2;q^4)_(2*n+1)*(q^(8*n+10);q^4)_inf))/" F23_SPLIT},
    {"JTP_Q4_X1_PRODUCT", "(q^4,-q^3,-q;q^4)_inf"},
    {"JTP_Q4_X1_SUM", "sum(n=-inf..inf, q^(2*n*n+n))"},
    {"JTP_Q16_X6_PRODUCT", "(q^16,-q^10,-q^6;q^16)_inf"},
    {"JTP_Q16_X6_SUM", "sum(n=-inf..inf, q^(8*n*n+2*n))"},
    {"JTP_Q4_MX2_PRODUCT", "(q^4,q^2,q^2;q^4)_inf"},
    {"JTP_Q4_MX2_SUM", "sum(n=-inf..inf, (-1)^n*q^(2*n*n))"},
    {"F_GPT",
     "sum(n=0..inf, q^(2*n)/((q^2;q^2)_n*(q;q^2)_n^2))"
     " + sum(n=0..inf, q^(2*n+1)/((q^2;q^2)_n*(q;q^2)_(n+1)^2))"
     " + sum(n=0..inf, q^(2*n+1)/((q^2;q^2)_n*(q;q^2)_(n+1)*(q;q^2)_n))"},
    {"F_SPT_PRINTED", F_SPT_SUMS},
    {"F_SPT", "1 + " F_SPT_SUMS},
    {"GEN_F2_LINE1",
     "sum(n=0..inf, q^(2*n)/((q^2;q^2)_n*(q;q^2)_n^2)"
     "*(1 + q/(1 - q^(2*n+1)) + q/(1 - q^(2*n+1))^2))"},
    {"GEN_F2_LINE2",
     "1 + sum(n=0..inf, q^(2*n+1)/((q^(2*n+2);q^2)_inf*(q^(2*n+3);q^2)_inf^2)"
     "*(q + 1/(1 - q^(2*n+1)) + 1/(1 - q^(2*n+1))^2))"},
    {"H_GPT",
     "1 + sum(n=0..inf, q^(2*n+2)*(-q^2;q^2)_n*(-q;q^2)_(n+1)^2)"
     " + sum(n=0..inf, q^(2*n+1)*(-q^2;q^2)_n*(-q;q^2)_n^2)"
     " + sum(n=0..inf, q^(2*n+1)*(-q^2;q^2)_n*(-q;q^2)_(n+1)*(-q;q^2)_n)"},
    {"H_SPT",
     "1 + sum(n=0..inf, q^(2*n+2)*(-q^(2*n+4);q^2)_inf*(-q^(2*n+3);q^2)_inf^2)"
     " + sum(n=0..inf, q^(2*n+1)*(-q^(2*n+2);q^2)_inf*(-q^(2*n+1);q^2)_inf*(-q^(2*n+3);q^2)_inf)"
     " + sum(n=0..inf, q^(2*n+1)*(-q^(2*n+2);q^2)_inf*(-q^(2*n+3);q^2)_inf^2)"},
    {"GEN_H2_LINE1",
     "sum(n=0..inf, q^(2*n+1)*(-q^2;q^2)_n*(-q;q^2)_(n+1)^2"
     "*(q + 1/(1 + q^(2*n+1)) + 1/(1 + q^(2*n+1))^2))"},
    {"GEN_H2_LINE2_PRINTED", H2_LINE2("2*n+1")},
    {"GEN_H2_LINE2", H2_LINE2("2*n+2")},
};

}  // namespace

const std::vector<CorpusEntry>& corpus() { return kCorpus; }

std::string_view corpus_source(std::string_view key) {
  for (const auto& e : kCorpus) {
    if (e.key == key) return e.source;
  }
  throw UnknownName("no transcription named '" + std::string(key) + "'");
}

Series corpus_series(std::string_view key, std::size_t order) {
  return dsl::evaluate(*dsl::parse(corpus_source(key)), order);
}

}  // namespace qpart
