#include "kltan/tangent.hpp"

#include <algorithm>

#include "kltan/error.hpp"
#include "kltan/hecke.hpp"
#include "linalg.hpp"

namespace kltan {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::In: return "In";
    case Verdict::Out: return "Out";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

namespace {

// Validated (w, s) pair with the gamma sequence of s.
struct Setup {
  WeylElement x;
  GammaSequence gamma;
};

Setup validate(const RootSystem& rs, const WeylElement& w, const Word& s) {
  if (w.rank() != rs.rank()) fail(ErrorKind::RankMismatch, "element rank does not match root system");
  Setup out;
  out.gamma = gamma_sequence(rs, s);  // throws NotReduced
  out.x = word_to_element(rs, s);
  if (!bruhat_leq(rs, w, out.x)) fail(ErrorKind::TargetNotBelow, "w is not below the element of (" + s.to_string() + ")");
  return out;
}

void check_position(int j, const Word& s) {
  if (j < 1 || static_cast<std::size_t>(j) > s.size()) {
    fail(ErrorKind::InvalidArgument, "position " + std::to_string(j) + " out of range for word of length " +
                                         std::to_string(s.size()));
  }
}

LaurentPoly gw_class_unchecked(const RootSystem& rs, const WeylElement& w, const Word& s, const std::vector<Root>& gammas) {
  LaurentPoly total(rs.rank());
  for (const auto& t : hecke_subwords(rs, w, s)) {
    LaurentPoly term = LaurentPoly::constant(rs.rank(), t.excess % 2 == 0 ? 1 : -1);
    for (int i : t.positions.positions()) {
      LaurentPoly factor = LaurentPoly::constant(rs.rank(), 1);
      factor.add_term(-gammas[static_cast<std::size_t>(i - 1)], -1);
      term *= factor;
    }
    total += term;
  }
  return total;
}

BigInt cone_coefficient_unchecked(const LaurentPoly& gw, const std::vector<Root>& gammas, const WeightVector& lambda) {
  const WeightVector mu = -lambda;
  return char_series(gw, gammas, mu.height()).coefficient(lambda);
}

WeightStatus membership(const RootSystem& rs, int j, const WeylElement& w, const Word& s, const std::vector<Root>& gammas,
                        const LaurentPoly* gw, const TangentOptions& options) {
  const Root& gamma_j = gammas[static_cast<std::size_t>(j - 1)];
  const Word deleted = s.without(static_cast<std::size_t>(j));

  WeightStatus st;
  auto& ev = st.evidence;
  ev.indecomposable = is_integrally_indecomposable(gamma_j, gammas);
  ev.demazure_ok = bruhat_leq(rs, w, demazure_product(rs, deleted).delta);
  ev.ordinary_product_ok = bruhat_leq(rs, w, word_to_element(rs, deleted));
  ev.explicit_factor = !ev.demazure_ok;
  if (gw != nullptr) ev.cone_coefficient = cone_coefficient_unchecked(*gw, gammas, -gamma_j);

  if (ev.indecomposable) {
    st.verdict = ev.demazure_ok ? Verdict::In : Verdict::Out;
  } else if (options.type_a_oracle && rs.cartan_type().family == Family::A) {
    st.verdict = ev.ordinary_product_ok ? Verdict::In : Verdict::Out;
    ev.oracle_applied = true;
  } else {
    st.verdict = Verdict::Undetermined;
  }
  return st;
}

bool wants_cone(const Word& s, const TangentOptions& options) {
  return options.cone_coefficients && s.size() <= static_cast<std::size_t>(kMaxEnumerationLength);
}

}  // namespace

LaurentPoly graham_willems_class(const RootSystem& rs, const WeylElement& w, const Word& s) {
  const Setup setup = validate(rs, w, s);
  return gw_class_unchecked(rs, w, s, setup.gamma.gammas);
}

bool is_explicit_factor(const RootSystem& rs, int j, const WeylElement& w, const Word& s, FactorTest method) {
  validate(rs, w, s);
  check_position(j, s);
  if (method == FactorTest::Demazure) {
    return !bruhat_leq(rs, w, demazure_product(rs, s.without(static_cast<std::size_t>(j))).delta);
  }
  const auto ts = hecke_subwords(rs, w, s);
  return std::all_of(ts.begin(), ts.end(), [j](const HeckeSubword& t) { return t.positions.contains(j); });
}

bool is_integrally_indecomposable(const Root& alpha, std::span<const Root> ambient) {
  if (std::find(ambient.begin(), ambient.end(), alpha) == ambient.end()) {
    fail(ErrorKind::NotMember, "weight is not in the ambient set");
  }
  std::vector<LatticeVector> others;
  for (const auto& b : ambient) {
    if (!b.is_positive()) fail(ErrorKind::InvalidArgument, "ambient weights must be positive roots");
    if (b != alpha) others.push_back(b);
  }
  return !in_integer_cone(others, alpha);
}

WeightStatus kl_tangent_membership(const RootSystem& rs, int j, const WeylElement& w, const Word& s,
                                   const TangentOptions& options) {
  const Setup setup = validate(rs, w, s);
  check_position(j, s);
  std::optional<LaurentPoly> gw;
  if (wants_cone(s, options)) gw = gw_class_unchecked(rs, w, s, setup.gamma.gammas);
  return membership(rs, j, w, s, setup.gamma.gammas, gw ? &*gw : nullptr, options);
}

TangentReport kl_tangent_report(const RootSystem& rs, const WeylElement& w, const WeylElement& x,
                                const TangentOptions& options) {
  if (w.rank() != rs.rank() || x.rank() != rs.rank()) fail(ErrorKind::RankMismatch, "element rank does not match root system");
  if (!bruhat_leq(rs, w, x)) fail(ErrorKind::NotBelow, "w is not below x in Bruhat order");

  TangentReport r;
  r.x_word = canonical_reduced_word(rs, x);
  r.x = x;
  r.w = w;
  r.gamma = gamma_sequence(rs, r.x_word);
  const auto& gammas = r.gamma.gammas;

  std::optional<LaurentPoly> gw;
  if (wants_cone(r.x_word, options)) gw = gw_class_unchecked(rs, w, r.x_word, gammas);

  r.complete = true;
  for (int j = 1; j <= static_cast<int>(r.x_word.size()); ++j) {
    r.statuses.push_back(membership(rs, j, w, r.x_word, gammas, gw ? &*gw : nullptr, options));
    const auto& st = r.statuses.back();
    if (st.verdict == Verdict::In) r.kl_tangent_weights.push_back(gammas[static_cast<std::size_t>(j - 1)]);
    if (st.verdict == Verdict::Undetermined) r.complete = false;
  }

  const auto inversions = inversion_set_of_inverse(rs, x);
  for (const auto& a : rs.positive_roots()) {
    if (std::find(inversions.begin(), inversions.end(), a) == inversions.end()) r.schubert_extra_weights.push_back(-a);
  }
  return r;
}

TangentReport gp_tangent_report(const RootSystem& rs, const WeylElement& w, const WeylElement& x,
                                std::span<const int> parabolic, const TangentOptions& options) {
  if (!is_min_coset_rep(rs, w, parabolic)) fail(ErrorKind::NotMinimalCosetRep, "w is not a minimal coset representative");
  if (!is_min_coset_rep(rs, x, parabolic)) fail(ErrorKind::NotMinimalCosetRep, "x is not a minimal coset representative");
  TangentReport r = kl_tangent_report(rs, w, x, options);
  std::vector<int> nodes(parabolic.begin(), parabolic.end());
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  r.parabolic = std::move(nodes);
  return r;
}

std::vector<Root> te_curve_weights(const RootSystem& rs, const WeylElement& w, const Word& s) {
  const Setup setup = validate(rs, w, s);
  std::vector<Root> out;
  for (std::size_t j = 1; j <= s.size(); ++j) {
    if (bruhat_leq(rs, w, word_to_element(rs, s.without(j)))) out.push_back(setup.gamma.gammas[j - 1]);
  }
  return out;
}

bool is_cominuscule_element(const RootSystem& rs, const WeylElement& x) {
  const auto inversions = inversion_set_of_inverse(rs, x);
  std::vector<std::vector<detail::Rational>> rows;
  std::vector<detail::Rational> rhs;
  for (const auto& a : inversions) {
    std::vector<detail::Rational> row;
    for (int c : a.coeffs()) row.emplace_back(c);
    rows.push_back(std::move(row));
    rhs.emplace_back(-1);
  }
  return detail::solve_exact(rows, rhs, rs.rank()).has_value();
}

bool type_a_cominuscule_oracle(const RootSystem& rs, std::span<const int> perm) {
  if (rs.cartan_type().family != Family::A) fail(ErrorKind::WrongType, "321-avoidance applies to type A only");
  from_permutation(rs, perm);  // validates the permutation
  const std::size_t n = perm.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (perm[a] <= perm[b]) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (perm[b] > perm[c]) return false;
      }
    }
  }
  return true;
}

BigInt tangent_cone_coefficient(const RootSystem& rs, const WeightVector& lambda, const WeylElement& w, const Word& s) {
  const Setup setup = validate(rs, w, s);
  const auto& gammas = setup.gamma.gammas;
  if (lambda.rank() != rs.rank()) fail(ErrorKind::RankMismatch, "weight rank does not match root system");
  if (!in_integer_cone(gammas, -lambda)) fail(ErrorKind::ExponentOutsideCone, "-lambda is not in the cone of the gamma weights");
  return cone_coefficient_unchecked(gw_class_unchecked(rs, w, s, gammas), gammas, lambda);
}

bool type_a_tangent_oracle(const RootSystem& rs, int j, const WeylElement& w, const Word& s) {
  if (rs.cartan_type().family != Family::A) fail(ErrorKind::WrongType, "the ordinary-product criterion is a type A result");
  validate(rs, w, s);
  check_position(j, s);
  return bruhat_leq(rs, w, word_to_element(rs, s.without(static_cast<std::size_t>(j))));
}

}  // namespace kltan
