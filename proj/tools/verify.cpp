#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <sstream>

#include "kltan/error.hpp"
#include "kltan/hecke.hpp"
#include "kltan/subword.hpp"
#include "kltan/tangent.hpp"
#include "kltan/weyl.hpp"

namespace kltan::verify {

namespace {

struct Case {
  WeylElement x;
  WeylElement w;
  std::vector<Word> words;  // reduced words of x; words[0] is canonical
};

class Recorder {
 public:
  Recorder(std::string suite, std::size_t cap) : cap_(cap) { out_.suite = std::move(suite); }

  void check(bool ok, const std::function<std::string()>& inputs, const std::string& expected,
             const std::string& got) {
    ++out_.cases;
    if (!ok && out_.failures.size() < cap_) out_.failures.push_back({inputs(), expected, got});
  }
  void check(bool ok, const std::function<std::string()>& inputs) { check(ok, inputs, "true", "false"); }

  VerifyOutcome finish(double seconds) {
    out_.seconds = seconds;
    return std::move(out_);
  }

 private:
  std::size_t cap_;
  VerifyOutcome out_;
};

std::string paren(const Word& w) { return "(" + w.to_string() + ")"; }

std::string describe(const RootSystem& rs, const Case& c, const Word& s) {
  return "x=" + paren(s) + " w=" + paren(canonical_reduced_word(rs, c.w));
}

std::string describe(const RootSystem& rs, const Case& c, const Word& s, int j) {
  return describe(rs, c, s) + " j=" + std::to_string(j);
}

std::vector<Root> sorted(std::vector<Root> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool is_simply_laced(const CartanType& t) {
  return t.family == Family::A || t.family == Family::D || t.family == Family::E;
}

Word subword(const Word& s, std::uint32_t mask) {
  std::vector<int> out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (mask & (std::uint32_t{1} << k)) out.push_back(s[k]);
  }
  return Word(std::move(out));
}

// A uniformly random walk up the right weak order, stopping early at w0.
// `allowed(x, i)` filters the steps.
Word random_reduced_word(const RootSystem& rs, int length, std::mt19937_64& rng,
                         const std::function<bool(const WeylElement&, int)>& allowed) {
  WeylElement x = identity_element(rs);
  std::vector<int> letters;
  for (int step = 0; step < length; ++step) {
    std::vector<int> ascents;
    for (int i = 1; i <= rs.rank(); ++i) {
      if (!x.has_right_descent(i) && allowed(x, i)) ascents.push_back(i);
    }
    if (ascents.empty()) break;
    const int i = ascents[std::uniform_int_distribution<std::size_t>(0, ascents.size() - 1)(rng)];
    x = times_simple(rs, x, i);
    letters.push_back(i);
  }
  return Word(std::move(letters));
}

std::vector<Case> build_cases(const RootSystem& rs, const VerifyOptions& opt) {
  std::vector<Case> cases;
  if (weyl_group_order(rs.cartan_type()) <= opt.exhaustive_order) {
    const auto group = enumerate_weyl_group(rs);
    for (const auto& x : group) {
      const auto words = all_reduced_words(rs, x);
      for (const auto& w : group) {
        if (bruhat_leq(rs, w, x)) cases.push_back({x, w, words});
      }
    }
    return cases;
  }
  std::mt19937_64 rng(opt.seed);
  const int top = std::min<int>(opt.max_sample_length, static_cast<int>(rs.positive_roots().size()));
  std::uniform_int_distribution<int> length(0, top);
  for (int k = 0; k < opt.samples; ++k) {
    const Word s = random_reduced_word(rs, length(rng), rng, [](const WeylElement&, int) { return true; });
    const auto x = word_to_element(rs, s);
    const std::uint32_t mask = s.empty() ? 0 : static_cast<std::uint32_t>(rng()) & ((1u << s.size()) - 1);
    const auto w = demazure_product(rs, subword(s, mask)).delta;
    Case c{x, w, {canonical_reduced_word(rs, x)}};
    if (s != c.words[0]) c.words.push_back(s);
    cases.push_back(std::move(c));
  }
  return cases;
}

using Suite = std::function<void(const RootSystem&, const std::vector<Case>&, const VerifyOptions&, Recorder&)>;

void suite_roots(const RootSystem& rs, const std::vector<Case>&, const VerifyOptions&, Recorder& rec) {
  const auto roots = rs.positive_roots();
  rec.check(static_cast<int>(roots.size()) == classical_positive_root_count(rs.cartan_type()),
            [] { return std::string("positive root count"); }, std::to_string(classical_positive_root_count(rs.cartan_type())),
            std::to_string(roots.size()));
  for (const auto& a : roots) {
    for (int i = 1; i <= rs.rank(); ++i) {
      const Root b = rs.reflect(i, a);
      rec.check(rs.is_root(b) && rs.reflect(i, b) == a && b.is_negative() == (a == rs.simple_root(i)),
                [&] { return "s" + std::to_string(i) + "(" + rs.format(a) + ")"; });
    }
  }
}

void suite_gamma(const RootSystem& rs, const std::vector<Case>& cases, const VerifyOptions&, Recorder& rec) {
  const WeylElement* last = nullptr;
  for (const auto& c : cases) {
    if (last != nullptr && *last == c.x) continue;
    last = &c.x;
    const auto inv = sorted(inversion_set_of_inverse(rs, c.x));
    for (const auto& s : c.words) {
      rec.check(sorted(gamma_sequence(rs, s).gammas) == inv, [&] { return "x=" + paren(s); });
    }
  }
}

void suite_bruhat(const RootSystem& rs, const std::vector<Case>& cases, const VerifyOptions& opt, Recorder& rec) {
  std::mt19937_64 rng(opt.seed + 1);
  const WeylElement* last = nullptr;
  for (const auto& c : cases) {
    if (last != nullptr && *last == c.x) continue;
    last = &c.x;
    const Word& s = c.words[0];
    if (s.size() > 12) continue;
    std::vector<WeylElement> below;
    for (std::uint32_t m = 0; m < (1u << s.size()); ++m) {
      const Word q = subword(s, m);
      if (!is_reduced(rs, q)) continue;
      auto u = word_to_element(rs, q);
      if (std::find(below.begin(), below.end(), u) == below.end()) below.push_back(std::move(u));
    }
    std::vector<WeylElement> probes = below;
    for (int k = 0; k < 8; ++k) {
      const int len = std::uniform_int_distribution<int>(0, static_cast<int>(s.size()) + 1)(rng);
      probes.push_back(word_to_element(rs, random_reduced_word(rs, len, rng, [](const WeylElement&, int) { return true; })));
    }
    for (const auto& u : probes) {
      const bool expected = std::find(below.begin(), below.end(), u) != below.end();
      const bool got = bruhat_leq(rs, u, c.x);
      rec.check(expected == got, [&] { return "u=" + paren(canonical_reduced_word(rs, u)) + " v=" + paren(s); },
                expected ? "true" : "false", got ? "true" : "false");
    }
  }
}

void suite_euler(const RootSystem& rs, const std::vector<Case>& cases, const VerifyOptions&, Recorder& rec) {
  for (const auto& c : cases) {
    for (const auto& s : c.words) {
      long long sum = 0;
      for (const auto& t : hecke_subwords(rs, c.w, s)) sum += t.excess % 2 == 0 ? 1 : -1;
      rec.check(sum == 1, [&] { return describe(rs, c, s); }, "1", std::to_string(sum));
    }
  }
}

void suite_ball_sphere(const RootSystem& rs, const std::vector<Case>& cases, const VerifyOptions&, Recorder& rec) {
  for (const auto& c : cases) {
    for (const auto& s : c.words) {
      if (s.size() > 12) continue;
      const auto cx = build_complex(rs, c.w, s);
      long long reduced = 0, bd = 0;
      for (const auto& f : cx.faces) reduced += f.size() % 2 == 0 ? -1 : 1;
      for (const auto& f : cx.boundary) bd += f.size() % 2 == 0 ? -1 : 1;
      const long long interior = reduced - bd;
      const long long expected = cx.dimension() % 2 == 0 ? 1 : -1;
      rec.check(interior == expected, [&] { return describe(rs, c, s); }, std::to_string(expected), std::to_string(interior));
      const bool pure = std::all_of(cx.facets.begin(), cx.facets.end(),
                                    [&](const IndexSequence& f) { return static_cast<int>(f.size()) == cx.dimension() + 1; });
      rec.check(pure, [&] { return describe(rs, c, s) + " facet purity"; });
    }
  }
}

void suite_gw(const RootSystem& rs, const std::vector<Case>& cases, const VerifyOptions&, Recorder& rec) {
  for (const auto& c : cases) {
    if (c.words.size() < 2) continue;
    const auto ref = graham_willems_class(rs, c.w, c.words[0]);
    for (std::size_t k = 1; k < c.words.size(); ++k) {
      const auto other = graham_willems_class(rs, c.w, c.words[k]);
      rec.check(other == ref, [&] { return describe(rs, c, c.words[k]); }, ref.to_string(rs), other.to_string(rs));
    }
  }
}

void suite_cone(const RootSystem& rs, const std::vector<Case>& cases, const VerifyOptions&, Recorder& rec) {
  for (const auto& c : cases) {
    const Word& s = c.words[0];
    const auto gammas = gamma_sequence(rs, s).gammas;
    std::vector<int> positions;
    int bound = 0;
    for (int j = 1; j <= static_cast<int>(s.size()); ++j) {
      const auto& g = gammas[static_cast<std::size_t>(j - 1)];
      if (!is_integrally_indecomposable(g, gammas)) continue;
      positions.push_back(j);
      bound = std::max(bound, g.height());
    }
    if (positions.empty()) continue;
    const auto series = char_series(graham_willems_class(rs, c.w, s), gammas, bound);
    for (int j : positions) {
      const BigInt coeff = coefficient(series, -gammas[static_cast<std::size_t>(j - 1)]);
      const BigInt expected = is_explicit_factor(rs, j, c.w, s) ? 0 : 1;
      rec.check(coeff == expected, [&] { return describe(rs, c, s, j); }, expected.str(), coeff.str());
    }
  }
}

void suite_fast_slow(const RootSystem& rs, const std::vector<Case>& cases, const VerifyOptions&, Recorder& rec) {
  for (const auto& c : cases) {
    const Word& s = c.words[0];
    for (int j = 1; j <= static_cast<int>(s.size()); ++j) {
      const bool fast = is_explicit_factor(rs, j, c.w, s, FactorTest::Demazure);
      const bool slow = is_explicit_factor(rs, j, c.w, s, FactorTest::Enumeration);
      rec.check(fast == slow, [&] { return describe(rs, c, s, j); }, slow ? "true" : "false", fast ? "true" : "false");
    }
  }
}

void suite_report(const RootSystem& rs, const std::vector<Case>& cases, const VerifyOptions&, Recorder& rec) {
  const TangentOptions opts{.type_a_oracle = false, .cone_coefficients = false};
  for (const auto& c : cases) {
    const auto r = kl_tangent_report(rs, c.w, c.x, opts);
    const Word& s = r.x_word;
    for (std::size_t k = 0; k < r.statuses.size(); ++k) {
      const auto& st = r.statuses[k];
      const bool ok = st.evidence.indecomposable ? (st.verdict == Verdict::In) == st.evidence.demazure_ok
                                                 : st.verdict == Verdict::Undetermined;
      rec.check(ok, [&] { return describe(rs, c, s, static_cast<int>(k + 1)) + " verdict/evidence"; });
    }
    bool disjoint = r.schubert_extra_weights.size() + static_cast<std::size_t>(c.x.length()) == rs.positive_roots().size();
    for (const auto& a : r.schubert_extra_weights) {
      disjoint = disjoint && a.is_negative() &&
                 std::find(r.kl_tangent_weights.begin(), r.kl_tangent_weights.end(), a) == r.kl_tangent_weights.end();
    }
    rec.check(disjoint, [&] { return describe(rs, c, s) + " schubert weights"; });
    if (is_cominuscule_element(rs, c.x)) {
      rec.check(r.complete, [&] { return describe(rs, c, s) + " cominuscule => complete"; });
    }
    const auto in_set = sorted(r.kl_tangent_weights);
    for (std::size_t k = 1; k < c.words.size(); ++k) {
      const auto& word = c.words[k];
      const auto gammas = gamma_sequence(rs, word).gammas;
      std::vector<Root> other;
      for (int j = 1; j <= static_cast<int>(word.size()); ++j) {
        if (kl_tangent_membership(rs, j, c.w, word, opts).verdict == Verdict::In) other.push_back(gammas[static_cast<std::size_t>(j - 1)]);
      }
      rec.check(sorted(other) == in_set, [&] { return describe(rs, c, word) + " word independence"; });
    }
  }
}

void suite_type_a(const RootSystem& rs, const std::vector<Case>& cases, const VerifyOptions&, Recorder& rec) {
  const TangentOptions opts{.type_a_oracle = false, .cone_coefficients = false};
  for (const auto& c : cases) {
    const Word& s = c.words[0];
    for (int j = 1; j <= static_cast<int>(s.size()); ++j) {
      const auto st = kl_tangent_membership(rs, j, c.w, s, opts);
      if (!st.evidence.indecomposable) continue;
      const bool oracle = type_a_tangent_oracle(rs, j, c.w, s);
      rec.check((st.verdict == Verdict::In) == oracle, [&] { return describe(rs, c, s, j); }, oracle ? "In" : "Out",
                std::string(to_string(st.verdict)));
    }
  }
}

void suite_simply_laced(const RootSystem& rs, const std::vector<Case>& cases, const VerifyOptions&, Recorder& rec) {
  const WeylElement* last = nullptr;
  for (const auto& c : cases) {
    if (last != nullptr && *last == c.x) continue;
    last = &c.x;
    for (const auto& s : c.words) {
      const auto gammas = gamma_sequence(rs, s).gammas;
      for (std::size_t j = 1; j <= s.size(); ++j) {
        if (!is_integrally_indecomposable(gammas[j - 1], gammas)) continue;
        const Word d = s.without(j);
        rec.check(demazure_product(rs, d).delta == word_to_element(rs, d),
                  [&] { return "x=" + paren(s) + " j=" + std::to_string(j); });
      }
    }
  }
}

void suite_cominuscule(const RootSystem& rs, const std::vector<Case>& cases, const VerifyOptions& opt, Recorder& rec) {
  const bool type_a = rs.cartan_type().family == Family::A;
  auto check_element = [&](const WeylElement& x) {
    const bool comin = is_cominuscule_element(rs, x);
    if (comin) {
      const auto inv = inversion_set_of_inverse(rs, x);
      const bool all = std::all_of(inv.begin(), inv.end(), [&](const Root& a) { return is_integrally_indecomposable(a, inv); });
      rec.check(all, [&] { return "x=" + paren(canonical_reduced_word(rs, x)) + " cominuscule => indecomposable"; });
    }
    if (type_a) {
      const bool avoids = type_a_cominuscule_oracle(rs, to_permutation(rs, x));
      rec.check(avoids == comin, [&] { return "x=" + paren(canonical_reduced_word(rs, x)) + " 321-avoidance"; },
                avoids ? "true" : "false", comin ? "true" : "false");
    }
  };
  const WeylElement* last = nullptr;
  for (const auto& c : cases) {
    if (last != nullptr && *last == c.x) continue;
    last = &c.x;
    check_element(c.x);
  }

  // Minimal coset representatives of cominuscule maximal parabolics.
  const bool enumerable = weyl_group_order(rs.cartan_type()) <= 50000;
  const std::vector<WeylElement> group = enumerable ? enumerate_weyl_group(rs) : std::vector<WeylElement>{};
  std::mt19937_64 rng(opt.seed + 2);
  for (int node : cominuscule_nodes(rs)) {
    std::vector<int> p;
    for (int i = 1; i <= rs.rank(); ++i) {
      if (i != node) p.push_back(i);
    }
    auto check_rep = [&](const WeylElement& x) {
      rec.check(is_cominuscule_element(rs, x), [&] {
        return "node " + std::to_string(node) + " x=" + paren(canonical_reduced_word(rs, x)) + " minimal coset rep";
      });
    };
    if (enumerable) {
      for (const auto& x : group) {
        if (is_min_coset_rep(rs, x, p)) check_rep(x);
      }
      continue;
    }
    const auto stays = [&](const WeylElement& x, int i) { return is_min_coset_rep(rs, times_simple(rs, x, i), p); };
    for (int k = 0; k < opt.samples / 5; ++k) {
      const int len = std::uniform_int_distribution<int>(0, static_cast<int>(rs.positive_roots().size()))(rng);
      check_rep(word_to_element(rs, random_reduced_word(rs, len, rng, stays)));
    }
  }
}

}  // namespace

std::vector<VerifyOutcome> run_battery(const RootSystem& rs, const VerifyOptions& options) {
  const auto cases = build_cases(rs, options);

  std::vector<std::pair<std::string, Suite>> suites{
      {"bruhat_subword", suite_bruhat},
      {"cominuscule", suite_cominuscule},
      {"cone_coefficient", suite_cone},
      {"euler_signed_sum", suite_euler},
      {"explicit_factor_fast_slow", suite_fast_slow},
      {"gamma_inversion_set", suite_gamma},
      {"gw_class_well_defined", suite_gw},
      {"interior_euler_characteristic", suite_ball_sphere},
      {"report_invariants", suite_report},
      {"root_system", suite_roots},
  };
  if (is_simply_laced(rs.cartan_type())) suites.emplace_back("simply_laced_product", suite_simply_laced);
  if (rs.cartan_type().family == Family::A) suites.emplace_back("type_a_oracle", suite_type_a);

  std::vector<std::future<VerifyOutcome>> running;
  for (const auto& [name, fn] : suites) {
    running.push_back(std::async(std::launch::async, [&rs, &cases, &options, name = name, fn = fn] {
      const auto start = std::chrono::steady_clock::now();
      Recorder rec(name, options.max_reported_failures);
      try {
        fn(rs, cases, options, rec);
      } catch (const Error& e) {
        rec.check(false, [&] { return std::string("suite aborted"); }, "no error",
                  std::string(to_string(e.kind())) + ": " + e.what());
      }
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      return rec.finish(elapsed.count());
    }));
  }
  std::vector<VerifyOutcome> out;
  for (auto& f : running) out.push_back(f.get());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.suite < b.suite; });
  return out;
}

}  // namespace kltan::verify
