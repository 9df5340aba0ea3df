// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qpart/audit.hpp"
#include "qpart/combinat.hpp"
#include "qpart/corpus.hpp"
#include "qpart/dsl.hpp"
#include "qpart/errors.hpp"
#include "qpart/qfactory.hpp"
#include "qpart/series.hpp"

using qpart::Family;
using qpart::Integer;
using qpart::Series;

namespace {

// Coefficients are compared exactly; only wall time has a budget.
constexpr double kNoLimit = 0;
constexpr double kOneSecond = 1000;
constexpr double kThirtySeconds = 30000;
constexpr double kOneMinute = 60000;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Series ints(std::initializer_list<long> v) {
  std::vector<Integer> c;
  for (long x : v) c.emplace_back(x);
  return Series(std::move(c));
}

Series from_poly(const oracle::Poly& p) {
  std::vector<Integer> c;
  for (long x : p) c.emplace_back(static_cast<long>(x));
  return Series(std::move(c));
}

std::string str(std::size_t n) { return std::to_string(n); }

bool definitive(const qpart::AuditReport& r) {
  return r.status == qpart::AuditStatus::Verified ||
         (r.status == qpart::AuditStatus::Diverges && r.divergence.has_value() &&
          r.divergence->index <= r.order);
}

std::string describe(const qpart::AuditReport& r) {
  std::string s = r.id + " " + std::string(qpart::status_name(r.status));
  if (r.divergence) s += " at " + str(r.divergence->index);
  if (!r.error.empty()) s += " (" + r.error + ")";
  return s;
}

Outcome ac1() {
  Outcome o;
  o.require(qpart::named_series("GEN_F", 5) == ints({1, 2, 4, 8, 14, 24}), "GEN_F prefix");
  o.require(qpart::named_series("GEN_H", 5) == ints({1, 2, 2, 4, 6, 8}), "GEN_H prefix");
  o.require(qpart::corpus_series("GEN_F", 5) == ints({1, 2, 4, 8, 14, 24}), "GEN_F text prefix");
  o.require(qpart::corpus_series("GEN_H", 5) == ints({1, 2, 2, 4, 6, 8}), "GEN_H text prefix");
  return o;
}

Outcome ac2() {
  Outcome o;
  const qpart::MexSpec spec(4, 2);
  o.require(qpart::enumerate_F(4).size() == 14, "F(4)");
  o.require(qpart::count_family(Family::F2, 4) == 10, "F2(4)");
  o.require(qpart::count_family(Family::F3, 4) == 4, "F3(4)");
  o.require(qpart::count_mex_class(4, spec, qpart::MexSide::Plain) == 10, "p_{4,2}(4)");
  o.require(qpart::count_mex_class(4, spec, qpart::MexSide::Bar) == 4, "pbar_{4,2}(4)");
  o.require(qpart::enumerate_H(4).size() == 6, "H(4)");
  o.require(qpart::count_overpartitions_odd(4) == 6, "pbar_o(4)");
  return o;
}

Outcome ac3() {
  Outcome o;
  constexpr std::size_t n_max = 18;
  const Series gf = qpart::named_series("GEN_F", n_max);
  const Series gh = qpart::named_series("GEN_H", n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Integer f = qpart::count_family(Family::F, n);
    const Integer h = qpart::count_family(Family::H, n);
    o.require(f == gf[n], "F(" + str(n) + ") vs GEN_F");
    o.require(h == gh[n], "H(" + str(n) + ") vs GEN_H");
    o.require(f == qpart::count_overpartitions(n), "F(" + str(n) + ") vs pbar");
    o.require(h == qpart::count_overpartitions_odd(n), "H(" + str(n) + ") vs pbar_o");
    const auto ni = static_cast<int>(n);
    o.require(f == static_cast<long>(oracle::overpartition_count(ni, false)),
              "F(" + str(n) + ") vs naive pbar");
    o.require(h == static_cast<long>(oracle::overpartition_count(ni, true)),
              "H(" + str(n) + ") vs naive pbar_o");
  }
  return o;
}

Outcome ac4() {
  Outcome o;
  const auto r = qpart::run_check("THM_F01_ID", 200);
  o.require(r.status == qpart::AuditStatus::Verified, describe(r));

  // Series side: F0 and F1 from their generating functions against the
  // overpartition formula built from (-q;q)_inf/(q;q)_inf.
  constexpr std::size_t N = 200;
  const Series f0 = qpart::named_series("GEN_F0", N);
  const Series f1 = qpart::named_series("GEN_F1", N);
  const Series pbar =
      qpart::pochhammer({-1, 1, 1}, N) * qpart::pochhammer({1, 1, 1, -1}, N);
  for (std::size_t n = 0; n <= N; ++n) {
    const Integer half = n % 2 == 0 ? pbar[n / 2] : Integer(0);
    o.require(2 * f0[n] == pbar[n] + half, "F0 series at " + str(n));
    o.require(2 * f1[n] == pbar[n] - half, "F1 series at " + str(n));
  }

  // Oracle side: naive enumeration against naive overpartition counts.
  for (int n = 0; n <= 18; ++n) {
    long even = 0;
    const auto fs = oracle::f_set(n);
    for (const auto& c : fs) even += oracle::red_odd(c) % 2 == 0;
    const long p = oracle::overpartition_count(n, false);
    const long ph = n % 2 == 0 ? oracle::overpartition_count(n / 2, false) : 0;
    o.require(2 * even == p + ph, "naive F0(" + std::to_string(n) + ")");
    o.require(2 * (static_cast<long>(fs.size()) - even) == p - ph,
              "naive F1(" + std::to_string(n) + ")");
    o.require(qpart::count_family(Family::F0, n) == static_cast<long>(even),
              "F0(" + std::to_string(n) + ") enumeration");
  }
  return o;
}

Outcome ac5() {
  Outcome o;
  auto closed = [](std::size_t N) {
    const Series den = qpart::pochhammer({1, 1, 1, -1}, N) * qpart::pochhammer({1, 2, 2, -1}, N);
    return std::pair{qpart::theta({8, 2, 1}, N) * den, qpart::theta({8, 6, 1, 1}, N) * den};
  };

  {
    constexpr int n_max = 18;
    oracle::Poly f0(n_max + 1, 0), f1(n_max + 1, 0);
    for (int n = 0; n <= n_max; ++n) {
      for (const auto& c : oracle::f_set(n)) ++(oracle::red_odd(c) % 2 == 0 ? f0 : f1)[n];
    }
    const auto [c0, c1] = closed(n_max);
    o.require(from_poly(f0) == c0, "F0 enumeration vs closed form");
    o.require(from_poly(f1) == c1, "F1 enumeration vs closed form");
  }
  {
    constexpr std::size_t N = 100;
    const Series plus = qpart::named_series("F0_PLUS_F1_COMPACT", N);
    const Series minus = qpart::named_series("F0_MINUS_F1_COMPACT", N);
    const auto [c0, c1] = closed(N);
    o.require(qpart::divide_exact(plus + minus, 2) == c0, "F0 closed form vs sum and difference");
    o.require(qpart::divide_exact(plus - minus, 2) == c1, "F1 closed form vs sum and difference");
  }
  for (const char* id : {"THM_F0_PRODUCT", "THM_F1_PRODUCT"}) {
    const auto r = qpart::run_check(id, 100);
    int verified = 0;
    for (const auto& v : r.variants) verified += v.status == qpart::AuditStatus::Verified;
    o.require(r.status == qpart::AuditStatus::VariantResolved && r.verified_variant &&
                  verified == 1,
              describe(r));
  }
  return o;
}

Outcome ac6() {
  Outcome o;
  const qpart::MexSpec spec(4, 2);
  for (int n = 0; n <= 16; ++n) {
    const Integer plain = qpart::count_mex_class(n, spec, qpart::MexSide::Plain);
    const Integer bar = qpart::count_mex_class(n, spec, qpart::MexSide::Bar);
    o.require(qpart::count_family(Family::F2, n) == plain, "F2(" + std::to_string(n) + ")");
    o.require(qpart::count_family(Family::F3, n) == bar, "F3(" + std::to_string(n) + ")");
    long naive = 0;
    for (const auto& c : oracle::f_set(n)) naive += oracle::mex42(c) % 8 == 2;
    o.require(plain == static_cast<long>(naive), "naive p_{4,2}(" + std::to_string(n) + ")");
  }
  constexpr std::size_t N = 60;
  const Series plus = qpart::named_series("F2_PLUS_F3", N);
  const Series minus = qpart::named_series("F2_MINUS_F3", N);
  o.require(qpart::corpus_series("F2_SUMFORM", N) == qpart::divide_exact(plus + minus, 2),
            "F2 sum form");
  o.require(qpart::corpus_series("F3_SUMFORM", N) == qpart::divide_exact(plus - minus, 2),
            "F3 sum form");
  for (const char* id : {"THM_F2_SUMFORM", "THM_F3_SUMFORM"}) {
    const auto r = qpart::run_check(id, N);
    o.require(r.status == qpart::AuditStatus::Verified, describe(r));
  }
  return o;
}

Outcome ac7() {
  Outcome o;
  constexpr std::size_t N = 100;
  const Series po = qpart::pochhammer({-1, 1, 2}, N) * qpart::pochhammer({1, 1, 2, -1}, N);
  const Series h = qpart::named_series("GEN_H", N);
  const Series d01 = qpart::named_series("H0_MINUS_H1", N);
  const Series d23 = qpart::named_series("H2_MINUS_H3", N);
  const Series h0 = qpart::divide_exact(h + d01, 2);
  const Series h1 = qpart::divide_exact(h - d01, 2);
  const Series h2 = qpart::divide_exact(h + d23, 2);
  for (std::size_t n = 1; n <= N; ++n) {
    std::size_t r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    const bool square = r * r == n;
    const long alt = n % 2 == 0 ? 1 : -1;
    const Integer half = po[n] / 2;
    o.require(2 * half == po[n], "pbar_o(" + str(n) + ") odd");
    o.require(h0[n] == half + (square ? 1 : 0), "(a) at " + str(n));
    o.require(h1[n] == half - (square ? 1 : 0), "(b) at " + str(n));
    o.require(h2[n] == half + (square ? alt : 0), "(c) at " + str(n));
  }
  for (const char* id : {"THM_H_WT_A", "THM_H_WT_B", "THM_H_WT_C"}) {
    const auto r = qpart::run_check(id, N);
    o.require(r.status == qpart::AuditStatus::Verified, describe(r));
  }
  const auto d = qpart::run_check("THM_H_WT_D", N);
  o.require(d.status == qpart::AuditStatus::VariantResolved && d.verified_variant.has_value(),
            describe(d));
  o.require(qpart::count_family(Family::H3, 1) == 2 && qpart::count_family(Family::H3, 4) == 2,
            "H3(1), H3(4)");
  return o;
}

Outcome ac8() {
  Outcome o;
  for (const char* id :
       {"EQ_F_GPT", "EQ_F_SPT", "EQ_GEN_F2", "EQ_H_GPT", "EQ_H_SPT", "EQ_GEN_H2"}) {
    const auto r = qpart::run_check(id, 60);
    o.require(r.status == qpart::AuditStatus::Verified, describe(r));
  }
  o.require(qpart::find_check("EQ_GEN_F2").comparisons.size() >= 2, "EQ_GEN_F2 three-way");
  o.require(qpart::find_check("EQ_GEN_H2").comparisons.size() >= 2, "EQ_GEN_H2 three-way");
  return o;
}

Outcome ac9() {
  Outcome o;
  for (auto [q, x, s] : {std::tuple{4, -1, 1}, {16, -6, 1}, {4, -2, -1}}) {
    const auto sides = qpart::jacobi_triple_product_sides(q, x, s, 200);
    const std::string tag = "q^" + std::to_string(q) + ", x=" + (s < 0 ? "-" : "") + "q^" +
                            std::to_string(x);
    o.require(sides.product == sides.sum, tag);
    const long a = q, b = q + 2 * x;
    // x^n q^{Q n(n+1)/2} summed directly on the test side.
    oracle::Poly naive(201, 0);
    for (long n = -60; n <= 60; ++n) {
      const long e2 = a * n * n + b * n;
      if (e2 % 2 == 0 && e2 >= 0 && e2 / 2 <= 200) naive[e2 / 2] += (s < 0 && n % 2 != 0) ? -1 : 1;
    }
    o.require(from_poly(naive) == sides.product, tag + " naive");
  }
  const auto r = qpart::run_check("JTP_SPOT", 200);
  o.require(r.status == qpart::AuditStatus::Verified, describe(r));
  return o;
}

Outcome ac10() {
  Outcome o;
  for (const char* id : {"COR_F0", "COR_F1"}) {
    const auto r = qpart::run_check(id, std::nullopt);
    o.require(definitive(r), describe(r));
    for (const auto& v : r.variants) {
      o.require(v.status == qpart::AuditStatus::Verified ||
                    (v.status == qpart::AuditStatus::Diverges && v.divergence.has_value()),
                r.id + " variant " + v.name);
    }
  }
  return o;
}

Outcome ac11() {
  Outcome o;
  const auto t = qpart::tabulate_families(18);
  for (std::size_t n = 0; n <= 18; ++n) {
    auto at = [&](Family f) { return t.counts[n][static_cast<std::size_t>(f)]; };
    o.require(at(Family::F0) + at(Family::F1) == at(Family::F), "F0+F1 at " + str(n));
    o.require(at(Family::F2) + at(Family::F3) == at(Family::F), "F2+F3 at " + str(n));
    o.require(at(Family::H0) + at(Family::H1) == at(Family::H), "H0+H1 at " + str(n));
    o.require(at(Family::H2) + at(Family::H3) == at(Family::H), "H2+H3 at " + str(n));
    o.require(t.mex_plain[n] + t.mex_bar[n] == at(Family::F), "mex split at " + str(n));
  }

  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> order(0, 15);
  std::uniform_int_distribution<long> coeff(-20, 20);
  auto random_series = [&](std::size_t n, bool unit) {
    std::vector<Integer> c(n + 1);
    for (auto& x : c) x = coeff(rng);
    if (unit) c[0] = coeff(rng) < 0 ? -1 : 1;
    return Series(std::move(c));
  };
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = order(rng);
    const Series a = random_series(n, false), b = random_series(n, false),
                 c = random_series(n, false), u = random_series(n, true);
    oracle::Poly pa, pb;
    for (const auto& x : a.coefficients()) pa.push_back(x.get_si());
    for (const auto& x : b.coefficients()) pb.push_back(x.get_si());
    const std::string tag = "case " + std::to_string(i);
    o.require(a * b == from_poly(oracle::mul(pa, pb)), tag + " product");
    o.require(a * b == b * a, tag + " commutativity");
    o.require((a * b) * c == a * (b * c), tag + " associativity");
    o.require(a * (b + c) == a * b + a * c, tag + " distributivity");
    o.require(u * qpart::invert(u) == Series::one(n), tag + " inverse");
    o.require(qpart::invert(qpart::invert(u)) == u, tag + " double inverse");
  }
  return o;
}

Outcome ac12() {
  Outcome o;
  o.require(qpart::corpus().size() == qpart::catalog().size(), "corpus covers the catalog");
  for (const auto& e : qpart::corpus()) {
    try {
      const auto expr = qpart::dsl::parse(e.source);
      const Series s = qpart::dsl::evaluate(*expr, 40);
      o.require(s.order() == 40 && s == qpart::named_series(e.key, 40), std::string(e.key));
    } catch (const qpart::Error& err) {
      o.require(false, std::string(e.key) + ": " + err.what());
    }
  }
  return o;
}

struct Criterion {
  int number;
  const char* title;
  double limit_ms;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "generating function coefficients", kOneSecond, ac1},
      {2, "worked example n=4", kOneSecond, ac2},
      {3, "enumeration vs series, n<=18", kThirtySeconds, ac3},
      {4, "F0/F1 overpartition formula", kNoLimit, ac4},
      {5, "F0/F1 product formulas and sign audit", kNoLimit, ac5},
      {6, "mex theorems and sum forms", kNoLimit, ac6},
      {7, "H weight theorem (a)-(d)", kNoLimit, ac7},
      {8, "sum identities via transcriptions", kOneMinute, ac8},
      {9, "Jacobi triple product specializations", kNoLimit, ac9},
      {10, "corollary audits are definitive", kNoLimit, ac10},
      {11, "property suite", kNoLimit, ac11},
      {12, "transcription corpus vs catalog", kNoLimit, ac12},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && c.limit_ms > 0 && ms > c.limit_ms) {
      out = {false, "took " + std::to_string(ms) + " ms, limit " + std::to_string(c.limit_ms)};
    }
    std::printf("AC%-2d %s  %s (%.1f ms)%s%s\n", c.number, out.ok ? "PASS" : "FAIL", c.title, ms,
                out.ok ? "" : ": ", out.detail.c_str());
    failures += out.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
