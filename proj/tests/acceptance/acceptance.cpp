// Exhaustive small-rank acceptance checks. One PASS/FAIL line per criterion;
// the exit status is nonzero if any criterion fails or overruns its time cap.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kltan/error.hpp"
#include "kltan/hecke.hpp"
#include "kltan/rt_ring.hpp"
#include "kltan/subword.hpp"
#include "kltan/tangent.hpp"
#include "kltan/weyl.hpp"

namespace {

using namespace kltan;

struct Tally {
  long long cases = 0;
  long long failures = 0;
  std::string first_failure;

  void check(bool ok, const std::function<std::string()>& describe) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = describe();
  }
};

RootSystem rs_of(const char* label) { return RootSystem(CartanType::parse(label)); }

std::string paren(const Word& w) { return "(" + w.to_string() + ")"; }

std::string describe(const char* label, const Word& s, const RootSystem& rs, const WeylElement& w, int j = 0) {
  std::ostringstream o;
  o << label << " s=" << paren(s) << " w=" << paren(canonical_reduced_word(rs, w));
  if (j > 0) o << " j=" << j;
  return o.str();
}

// Every x, every reduced word s of x, every w <= x.
template <class F>
void for_each_triple(const RootSystem& rs, F&& f) {
  const auto group = enumerate_weyl_group(rs);
  for (const auto& x : group) {
    std::vector<WeylElement> below;
    for (const auto& w : group) {
      if (bruhat_leq(rs, w, x)) below.push_back(w);
    }
    for (const auto& s : all_reduced_words(rs, x)) {
      for (const auto& w : below) f(x, w, s);
    }
  }
}

Tally euler_identity() {
  Tally t;
  for (const char* label : {"A3", "B3"}) {
    const auto rs = rs_of(label);
    for_each_triple(rs, [&](const WeylElement&, const WeylElement& w, const Word& s) {
      const long long got = euler_signed_sum(rs, w, s);
      t.check(got == 1, [&] { return describe(label, s, rs, w) + " sum=" + std::to_string(got); });
    });
  }
  return t;
}

Tally ball_sphere() {
  Tally t;
  for (const char* label : {"A3", "B3"}) {
    const auto rs = rs_of(label);
    for_each_triple(rs, [&](const WeylElement&, const WeylElement& w, const Word& s) {
      const auto c = build_complex(rs, w, s);
      const long long expected = (static_cast<int>(s.size()) - w.length() - 1) % 2 == 0 ? 1 : -1;
      const auto chi = euler_characteristics(c);
      const bool pure = std::all_of(c.facets.begin(), c.facets.end(), [&](const IndexSequence& f) {
        return static_cast<int>(f.size()) == c.dimension() + 1;
      });
      t.check(chi.interior == expected && pure, [&] {
        return describe(label, s, rs, w) + " interior=" + std::to_string(chi.interior) + (pure ? "" : " impure");
      });
    });
  }
  return t;
}

Tally gw_well_defined() {
  Tally t;
  const auto rs = rs_of("A3");
  const auto group = enumerate_weyl_group(rs);
  for (const auto& x : group) {
    const auto words = all_reduced_words(rs, x);
    for (const auto& w : group) {
      if (!bruhat_leq(rs, w, x)) continue;
      const auto ref = graham_willems_class(rs, w, words.front());
      for (std::size_t k = 1; k < words.size(); ++k) {
        t.check(graham_willems_class(rs, w, words[k]) == ref, [&] {
          return describe("A3", words[k], rs, w) + " differs from " + paren(words.front());
        });
      }
      if (words.size() == 1) t.check(true, {});
    }
  }
  return t;
}

Tally cone_mechanism() {
  Tally t;
  const auto rs = rs_of("A3");
  for_each_triple(rs, [&](const WeylElement&, const WeylElement& w, const Word& s) {
    const auto gamma = gamma_sequence(rs, s).gammas;
    for (int j = 1; j <= static_cast<int>(s.size()); ++j) {
      const Root& g = gamma[j - 1];
      if (!is_integrally_indecomposable(g, gamma)) continue;
      const BigInt c = tangent_cone_coefficient(rs, -g, w, s);
      const bool factor = is_explicit_factor(rs, j, w, s);
      t.check((c == 0 || c == 1) && ((c == 0) == factor), [&] {
        return describe("A3", s, rs, w, j) + " coefficient=" + c.str() + " explicit=" + (factor ? "yes" : "no");
      });
    }
  });
  return t;
}

Tally type_a_agreement() {
  Tally t;
  for (const char* label : {"A2", "A3"}) {
    const auto rs = rs_of(label);
    for_each_triple(rs, [&](const WeylElement&, const WeylElement& w, const Word& s) {
      for (int j = 1; j <= static_cast<int>(s.size()); ++j) {
        const auto st = kl_tangent_membership(rs, j, w, s);
        if (!st.evidence.indecomposable) continue;
        const bool oracle = type_a_tangent_oracle(rs, j, w, s);
        t.check((st.verdict == Verdict::In) == oracle, [&] {
          return describe(label, s, rs, w, j) + " verdict=" + std::string(to_string(st.verdict)) +
                 " oracle=" + (oracle ? "in" : "out");
        });
      }
    });
  }
  return t;
}

Tally fixed_examples() {
  Tally t;
  const auto a2 = rs_of("A2");
  const auto s1 = simple_reflection(a2, 1);
  const Word s{1, 2, 1};

  LaurentPoly expected = LaurentPoly::constant(2, 1);
  expected.add_term(Root{-1, -1}, -1);
  const auto p = graham_willems_class(a2, s1, s);
  t.check(p == expected, [&] { return "P_{s1,(1 2 1)} = " + p.to_string(a2); });

  const auto plain = kl_tangent_membership(a2, 2, s1, s);
  const auto with_oracle = kl_tangent_membership(a2, 2, s1, s, {.type_a_oracle = true});
  t.check(plain.evidence.demazure_ok && !plain.evidence.ordinary_product_ok &&
              with_oracle.verdict == Verdict::Out,
          [] { return std::string("A2 j=2 evidence or oracle verdict"); });

  const auto d4 = rs_of("D4");
  const auto x = word_to_element(d4, {2, 1, 3, 4, 2});
  std::vector<Root> listed;
  for (std::vector<int> eps : {std::vector<int>{1, 0, -1, 0}, {1, 1, 0, 0}, {0, 1, -1, 0}, {0, 1, 0, -1}, {0, 1, 0, 1}}) {
    listed.push_back(d4.from_epsilon(eps));
  }
  std::sort(listed.begin(), listed.end());
  auto inv = inversion_set_of_inverse(d4, x);
  std::sort(inv.begin(), inv.end());
  t.check(inv == listed, [] { return std::string("D4 inversion set of s2s1s3s4s2"); });
  t.check(std::all_of(inv.begin(), inv.end(), [&](const Root& a) { return is_integrally_indecomposable(a, inv); }),
          [] { return std::string("D4 s2s1s3s4s2 has a decomposable inversion"); });
  t.check(!is_cominuscule_element(d4, x), [] { return std::string("D4 s2s1s3s4s2 reported cominuscule"); });
  return t;
}

Tally cominuscule_coherence() {
  Tally t;
  for (const char* label : {"A3", "A4"}) {
    const auto rs = rs_of(label);
    for (const auto& x : enumerate_weyl_group(rs)) {
      const bool got = is_cominuscule_element(rs, x);
      const bool avoids = type_a_cominuscule_oracle(rs, to_permutation(rs, x));
      t.check(got == avoids, [&] { return std::string(label) + " x=" + paren(canonical_reduced_word(rs, x)); });
    }
  }
  for (const char* label : {"A4", "B3", "D4"}) {
    const auto rs = rs_of(label);
    for (const auto& x : enumerate_weyl_group(rs)) {
      if (!is_cominuscule_element(rs, x)) continue;
      const auto inv = inversion_set_of_inverse(rs, x);
      const bool all = std::all_of(inv.begin(), inv.end(), [&](const Root& a) { return is_integrally_indecomposable(a, inv); });
      t.check(all, [&] { return std::string(label) + " cominuscule x=" + paren(canonical_reduced_word(rs, x)); });
    }
  }
  for (const char* label : {"A3", "D4"}) {
    const auto rs = rs_of(label);
    const auto group = enumerate_weyl_group(rs);
    for (int node : rs.cominuscule_nodes()) {
      std::vector<int> p;
      for (int i = 1; i <= rs.rank(); ++i) {
        if (i != node) p.push_back(i);
      }
      for (const auto& x : group) {
        if (!is_min_coset_rep(rs, x, p)) continue;
        t.check(is_cominuscule_element(rs, x), [&] {
          return std::string(label) + " node " + std::to_string(node) + " x=" + paren(canonical_reduced_word(rs, x));
        });
      }
    }
  }
  return t;
}

Tally simply_laced_products() {
  Tally t;
  for (const char* label : {"A3", "D4"}) {
    const auto rs = rs_of(label);
    for_each_triple(rs, [&](const WeylElement&, const WeylElement& w, const Word& s) {
      const auto gamma = gamma_sequence(rs, s).gammas;
      for (int j = 1; j <= static_cast<int>(s.size()); ++j) {
        if (!is_integrally_indecomposable(gamma[j - 1], gamma)) continue;
        const bool demazure = bruhat_leq(rs, w, demazure_product(rs, s.without(j)).delta);
        const bool ordinary = bruhat_leq(rs, w, word_to_element(rs, s.without(j)));
        t.check(demazure == ordinary, [&] { return describe(label, s, rs, w, j); });
      }
    });
  }
  return t;
}

Tally fast_path_soundness() {
  Tally t;
  const std::vector<const char*> labels{"A2", "A3", "A4", "B2", "B3", "B4", "C3", "D4", "D5", "G2", "F4", "E6"};
  std::vector<RootSystem> systems;
  for (const char* label : labels) systems.push_back(rs_of(label));
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> pick_type(0, systems.size() - 1);
  std::uniform_int_distribution<int> pick_length(1, 8);
  while (t.cases < 10000) {
    const std::size_t k = pick_type(rng);
    const auto& rs = systems[k];
    const int target = pick_length(rng);

    // Random walk up the weak order.
    WeylElement x = identity_element(rs);
    std::vector<int> letters;
    while (static_cast<int>(letters.size()) < target) {
      std::vector<int> ascents;
      for (int i = 1; i <= rs.rank(); ++i) {
        if (!x.has_right_descent(i)) ascents.push_back(i);
      }
      if (ascents.empty()) break;
      const int i = ascents[std::uniform_int_distribution<std::size_t>(0, ascents.size() - 1)(rng)];
      x = times_simple(rs, x, i);
      letters.push_back(i);
    }
    const Word s(std::move(letters));

    std::vector<int> sub;
    for (int letter : s.letters()) {
      if (rng() & 1) sub.push_back(letter);
    }
    const WeylElement w = demazure_product(rs, Word(std::move(sub))).delta;
    const int j = std::uniform_int_distribution<int>(1, static_cast<int>(s.size()))(rng);

    const bool fast = is_explicit_factor(rs, j, w, s, FactorTest::Demazure);
    const bool slow = is_explicit_factor(rs, j, w, s, FactorTest::Enumeration);
    t.check(fast == slow, [&] { return describe(labels[k], s, rs, w, j); });
  }
  return t;
}

Tally decomposable_guard() {
  Tally t;
  const auto a2 = rs_of("A2");
  const auto s1 = simple_reflection(a2, 1);
  const auto x = word_to_element(a2, {1, 2, 1});
  const auto plain = kl_tangent_report(a2, s1, x);
  const auto oracle = kl_tangent_report(a2, s1, x, {.type_a_oracle = true});
  t.check(plain.x_word == Word{1, 2, 1}, [] { return std::string("canonical word of s1s2s1"); });
  t.check(plain.statuses.at(1).verdict == Verdict::Undetermined && !plain.complete,
          [&] { return "without flag: " + std::string(to_string(plain.statuses.at(1).verdict)); });
  t.check(oracle.statuses.at(1).verdict == Verdict::Out && oracle.statuses.at(1).evidence.oracle_applied,
          [&] { return "with flag: " + std::string(to_string(oracle.statuses.at(1).verdict)); });
  return t;
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  Tally (*run)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "euler signed sum is 1 (A3, B3)", 60, euler_identity},
      {2, "interior Euler characteristic and facet purity (A3, B3)", 120, ball_sphere},
      {3, "Graham-Willems class independent of reduced word (A3)", 120, gw_well_defined},
      {4, "cone coefficient 0/1 matches explicit factor (A3)", 300, cone_mechanism},
      {5, "Demazure criterion matches type A oracle (A2, A3)", 300, type_a_agreement},
      {6, "fixed examples (A2 class and verdicts, D4 inversion set)", 60, fixed_examples},
      {7, "cominuscule coherence (A3, A4, B3, D4)", 300, cominuscule_coherence},
      {8, "simply-laced Demazure equals ordinary product (A3, D4)", 300, simply_laced_products},
      {9, "explicit factor fast path equals enumeration (10000 random cases)", 300, fast_path_soundness},
      {10, "decomposable weight stays Undetermined without the type A flag", 60, decomposable_guard},
  };

  bool all_ok = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    std::string error;
    try {
      t = c.run();
    } catch (const Error& e) {
      error = std::string(to_string(e.kind())) + ": " + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.limit_seconds;
    const bool ok = error.empty() && t.failures == 0 && t.cases > 0 && in_time;
    all_ok = all_ok && ok;
    std::printf("%s %2d %s: %lld cases, %lld failures, %.2f s (limit %.0f s)\n", ok ? "PASS" : "FAIL", c.number, c.name,
                t.cases, t.failures, seconds, c.limit_seconds);
    if (!error.empty()) std::printf("     threw %s\n", error.c_str());
    if (t.failures > 0) std::printf("     first failure: %s\n", t.first_failure.c_str());
    if (!in_time) std::printf("     exceeded the time limit\n");
    std::fflush(stdout);
  }
  return all_ok ? 0 : 1;
}
