#ifndef QPART_TEST_ORACLES_HPP
#define QPART_TEST_ORACLES_HPP

// Deliberately naive reference computations. They use machine integers,
// schoolbook loops and explicit listing, and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Poly = std::vector<long>;

inline Poly mul(const Poly& a, const Poly& b) {
  const std::size_t n = std::min(a.size(), b.size());
  Poly c(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline Poly one(std::size_t order) {
  Poly p(order + 1, 0);
  p[0] = 1;
  return p;
}

// (1 - sign q^d)^{+1} or its inverse as the geometric series.
inline Poly factor(int sign, long d, bool inverse, std::size_t order) {
  Poly p = one(order);
  if (!inverse) {
    if (d <= static_cast<long>(order)) p[d] -= sign;
    return p;
  }
  long c = 1;
  for (long k = 1; k * d <= static_cast<long>(order); ++k) {
    c *= sign;
    p[k * d] += c;
  }
  return p;
}

// prod_{k>=0} (1 - sign q^{a + k m})^e
inline Poly poch(int sign, long a, long m, long e, std::size_t order) {
  Poly acc = one(order);
  for (long d = a; d <= static_cast<long>(order); d += m) {
    for (long i = 0; i < (e < 0 ? -e : e); ++i) acc = mul(acc, factor(sign, d, e < 0, order));
  }
  return acc;
}

inline Poly finite_poch(int sign, long a, long m, long len, std::size_t order) {
  Poly acc = one(order);
  for (long k = 0; k < len; ++k) {
    const long d = a + k * m;
    if (d == 0) {
      Poly z(order + 1, 0);
      z[0] = 1 - sign;
      acc = mul(acc, z);
    } else {
      acc = mul(acc, factor(sign, d, false, order));
    }
  }
  return acc;
}

// sum over |n| <= span of s^n q^{A n^2 + B n + c}
inline Poly theta(long A, long B, int s, long c, std::size_t order, long span) {
  Poly p(order + 1, 0);
  for (long n = -span; n <= span; ++n) {
    const long e = A * n * n + B * n + c;
    if (e >= 0 && e <= static_cast<long>(order)) p[e] += (s < 0 && (n % 2 != 0)) ? -1 : 1;
  }
  return p;
}

// Ordinary partitions of n, parts non-increasing.
inline void partitions(int n, int max, std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& f) {
  if (n == 0) {
    f(cur);
    return;
  }
  for (int v = std::min(n, max); v >= 1; --v) {
    cur.push_back(v);
    partitions(n - v, v, cur, f);
    cur.pop_back();
  }
}

inline long partition_count(int n) {
  long c = 0;
  std::vector<int> cur;
  partitions(n, n, cur, [&](const std::vector<int>&) { ++c; });
  return c;
}

// A colored partition as (value, red?) pairs; blue sorts before red.
using Colored = std::vector<std::pair<int, bool>>;

// Every two-color partition of n, optionally with even parts forced blue.
// Each ordinary partition is expanded by choosing, for every value, how many
// of its copies are red.
inline std::vector<Colored> colored_partitions(int n, bool even_blue_only) {
  std::vector<Colored> out;
  std::vector<int> cur;
  partitions(n, n, cur, [&](const std::vector<int>& p) {
    std::vector<std::pair<int, int>> runs;  // value, multiplicity
    for (int v : p) {
      if (!runs.empty() && runs.back().first == v) {
        ++runs.back().second;
      } else {
        runs.push_back({v, 1});
      }
    }
    std::function<void(std::size_t, Colored&)> go = [&](std::size_t i, Colored& acc) {
      if (i == runs.size()) {
        out.push_back(acc);
        return;
      }
      const auto [v, m] = runs[i];
      const int max_red = (even_blue_only && v % 2 == 0) ? 0 : m;
      for (int red = 0; red <= max_red; ++red) {
        const std::size_t mark = acc.size();
        for (int k = 0; k < m - red; ++k) acc.push_back({v, false});
        for (int k = 0; k < red; ++k) acc.push_back({v, true});
        go(i + 1, acc);
        acc.resize(mark);
      }
    };
    Colored acc;
    go(0, acc);
  });
  return out;
}

inline std::vector<Colored> f_set(int n) { return colored_partitions(n, true); }

inline bool distinct_pairs(const Colored& c) {
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] == c[i - 1]) return false;
  }
  return true;
}

inline std::vector<Colored> h_set(int n) {
  std::vector<Colored> out;
  for (auto& c : f_set(n)) {
    if (distinct_pairs(c)) out.push_back(c);
  }
  return out;
}

inline std::string render(const Colored& c) {
  if (c.empty()) return "(empty)";
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) s += "+";
    s += std::to_string(c[i].first) + (c[i].second ? "_r" : "_b");
  }
  return s;
}

inline int red_odd(const Colored& c) {
  return static_cast<int>(std::count_if(c.begin(), c.end(),
                                        [](auto p) { return p.second && p.first % 2 != 0; }));
}

inline int evens(const Colored& c) {
  return static_cast<int>(
      std::count_if(c.begin(), c.end(), [](auto p) { return p.first % 2 == 0; }));
}

// Smallest x = 2 (mod 4) not occurring as a part.
inline int mex42(const Colored& c) {
  int x = 2;
  while (std::any_of(c.begin(), c.end(), [x](auto p) { return p.first == x; })) x += 4;
  return x;
}

// Overpartitions: each distinct value may be overlined once.
inline long overpartition_count(int n, bool odd_only) {
  long total = 0;
  std::vector<int> cur;
  partitions(n, n, cur, [&](const std::vector<int>& p) {
    if (odd_only && std::any_of(p.begin(), p.end(), [](int v) { return v % 2 == 0; })) return;
    std::vector<int> distinct(p.begin(), p.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    total += 1LL << distinct.size();
  });
  return total;
}

}  // namespace oracle

#endif  // QPART_TEST_ORACLES_HPP
