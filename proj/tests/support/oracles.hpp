#pragma once

// Brute-force reference computations used only by tests. Each routine avoids
// the library code path it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "kltan/rootsys.hpp"
#include "kltan/weyl.hpp"

namespace kltan::oracle {

// Positive roots of classical types from the epsilon description, converted to
// simple-root coordinates by the triangular change of basis.
inline std::vector<std::vector<int>> classical_positive_roots(Family family, int n) {
  const int dim = family == Family::A ? n + 1 : n;
  std::vector<std::vector<int>> eps;
  auto e = [&](int i, int si, int j, int sj) {
    std::vector<int> v(static_cast<std::size_t>(dim), 0);
    v[static_cast<std::size_t>(i)] += si;
    if (j >= 0) v[static_cast<std::size_t>(j)] += sj;
    return v;
  };
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      eps.push_back(e(i, 1, j, -1));
      if (family != Family::A) eps.push_back(e(i, 1, j, 1));
    }
    if (family == Family::B) eps.push_back(e(i, 1, -1, 0));
    if (family == Family::C) eps.push_back(e(i, 2, -1, 0));
  }
  std::vector<std::vector<int>> out;
  for (const auto& v : eps) {
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    int partial = 0;
    for (int k = 0; k < n; ++k) {
      partial += v[static_cast<std::size_t>(k)];
      c[static_cast<std::size_t>(k)] = partial;
    }
    if (family == Family::C) {
      c[static_cast<std::size_t>(n - 1)] = (c[static_cast<std::size_t>(n - 2)] + v[static_cast<std::size_t>(n - 1)]) / 2;
    }
    if (family == Family::D) {
      const int s = v[static_cast<std::size_t>(n - 2)] + c[static_cast<std::size_t>(n - 3)];
      const int en = v[static_cast<std::size_t>(n - 1)];
      c[static_cast<std::size_t>(n - 2)] = (s - en) / 2;
      c[static_cast<std::size_t>(n - 1)] = (s + en) / 2;
    }
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// One-line permutation helpers for type A_n (letters 1..n+1).
using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
  Perm p(static_cast<std::size_t>(n + 1));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

// 0-Hecke product on permutations: right multiplication by s_i applies only
// when it is an ascent, p(i) < p(i+1).
inline Perm demazure_perm(int n, const Word& q) {
  Perm p = identity_perm(n);
  for (int i : q.letters()) {
    auto a = static_cast<std::size_t>(i - 1);
    if (p[a] < p[a + 1]) std::swap(p[a], p[a + 1]);
  }
  return p;
}

inline Perm product_perm(int n, const Word& q) {
  Perm p = identity_perm(n);
  for (int i : q.letters()) std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(i)]);
  return p;
}

inline int inversions(const Perm& p) {
  int c = 0;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) c += p[a] > p[b];
  }
  return c;
}

// A reduced word for p by bubble sort.
inline Word perm_word(Perm p) {
  std::vector<int> letters;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
      if (p[k] > p[k + 1]) {
        std::swap(p[k], p[k + 1]);
        letters.push_back(static_cast<int>(k + 1));
        changed = true;
      }
    }
  }
  std::reverse(letters.begin(), letters.end());
  return Word(letters);
}

// Ehresmann tableau criterion: u <= v iff for each k the sorted prefix
// u(1..k) is entrywise <= the sorted prefix v(1..k).
inline bool tableau_leq(const Perm& u, const Perm& v) {
  for (std::size_t k = 1; k <= u.size(); ++k) {
    Perm a(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(k));
    Perm b(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < k; ++i) {
      if (a[i] > b[i]) return false;
    }
  }
  return true;
}

inline Word subword(const Word& s, std::uint32_t mask) {
  std::vector<int> out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (mask & (std::uint32_t{1} << k)) out.push_back(s[k]);
  }
  return Word(out);
}

// u <= v iff some subword of a reduced word for v multiplies to u as a
// reduced word.
inline bool subword_bruhat_leq(const RootSystem& rs, const WeylElement& u, const Word& reduced_v) {
  const std::uint32_t n = static_cast<std::uint32_t>(reduced_v.size());
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    const Word q = subword(reduced_v, m);
    if (static_cast<int>(q.size()) != u.length()) continue;
    if (word_to_element(rs, q) == u) return true;
  }
  return false;
}

// Number of c >= 0 with sum c_i g_i = target, by exhaustive search.
inline long long count_cone_solutions(const std::vector<LatticeVector>& gens, const LatticeVector& target) {
  long long count = 0;
  std::function<void(std::size_t, LatticeVector)> rec = [&](std::size_t k, LatticeVector rest) {
    if (k == gens.size()) {
      count += rest.is_zero();
      return;
    }
    for (LatticeVector r = rest; r.is_nonnegative(); r -= gens[k]) rec(k + 1, r);
  };
  if (target.is_nonnegative()) rec(0, target);
  return count;
}

}  // namespace kltan::oracle
