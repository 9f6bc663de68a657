#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "kltan/rootsys.hpp"
#include "kltan/rt_ring.hpp"
#include "kltan/subword.hpp"
#include "kltan/weyl.hpp"

namespace kltan {

// Tangent-space weights of Kazhdan-Lusztig varieties Y_x^w and Schubert
// varieties X^w at the fixed point x.
//
// Conventions used throughout: s = (s_1, ..., s_l) is a reduced word for x,
// gamma_j = s_1 ... s_{j-1}(alpha_{s_j}), and positions j are 1-based. For
// gamma_j integrally indecomposable in I(x^{-1}), gamma_j is a tangent weight
// of Y_x^w iff the Demazure product of s with s_j deleted is >= w.

enum class Verdict { In, Out, Undetermined };

std::string_view to_string(Verdict v) noexcept;

struct WeightEvidence {
  bool indecomposable = false;
  bool demazure_ok = false;         // delta(s without s_j) >= w
  bool ordinary_product_ok = false; // s_1 ... (s_j omitted) ... s_l >= w
  bool explicit_factor = false;     // j lies in every t in T_{w,s}
  // Coefficient of e^{-gamma_j} in the tangent-cone character. Only carries
  // tangent-space meaning when gamma_j is indecomposable.
  std::optional<BigInt> cone_coefficient;
  // The verdict came from the type A ordinary-product criterion rather than
  // the Demazure criterion.
  bool oracle_applied = false;
};

struct WeightStatus {
  Verdict verdict = Verdict::Undetermined;
  WeightEvidence evidence;
};

struct TangentOptions {
  // In type A, resolve decomposable weights with the ordinary-product
  // criterion (a classical external result) instead of reporting Undetermined.
  bool type_a_oracle = false;
  // Fill cone_coefficient when l(x) <= kMaxEnumerationLength.
  bool cone_coefficients = true;
};

struct TangentReport {
  Word x_word;
  WeylElement x;
  WeylElement w;
  GammaSequence gamma;
  std::vector<WeightStatus> statuses;    // statuses[j-1] for gamma_j
  std::vector<Root> kl_tangent_weights;  // gamma_j with verdict In, in position order
  std::vector<Root> schubert_extra_weights;  // -(Phi^+ \ I(x^{-1}))
  bool complete = false;                 // no Undetermined entries
  std::optional<std::vector<int>> parabolic;
};

// P_{w,s} = sum over T_{w,s} of (-1)^{e(t)} prod_{i in t} (1 - e^{-gamma_i}).
// Throws NotReduced, TargetNotBelow.
LaurentPoly graham_willems_class(const RootSystem& rs, const WeylElement& w, const Word& s);

enum class FactorTest { Demazure, Enumeration };

// j lies in every t in T_{w,s}. The Demazure route tests
// NOT(delta(s without s_j) >= w); the enumeration route walks T_{w,s}.
bool is_explicit_factor(const RootSystem& rs, int j, const WeylElement& w, const Word& s,
                        FactorTest method = FactorTest::Demazure);

// alpha is not a nonnegative integer combination of ambient \ {alpha}.
// Throws NotMember if alpha is absent, InvalidArgument for non-positive
// ambient weights.
bool is_integrally_indecomposable(const Root& alpha, std::span<const Root> ambient);

WeightStatus kl_tangent_membership(const RootSystem& rs, int j, const WeylElement& w, const Word& s,
                                   const TangentOptions& options = {});

// Uses canonical_reduced_word(x). Throws NotBelow unless w <= x.
TangentReport kl_tangent_report(const RootSystem& rs, const WeylElement& w, const WeylElement& x,
                                const TangentOptions& options = {});

// Same verdicts as kl_tangent_report: Y_{x,P}^w is isomorphic to Y_x^w for
// w, x in W^P. Throws NotMinimalCosetRep, NotBelow.
TangentReport gp_tangent_report(const RootSystem& rs, const WeylElement& w, const WeylElement& x,
                                std::span<const int> parabolic, const TangentOptions& options = {});

// Weights of tangent lines to T-invariant curves:
// {gamma_j : s_1 ... (s_j omitted) ... s_l >= w}.
std::vector<Root> te_curve_weights(const RootSystem& rs, const WeylElement& w, const Word& s);

// Some v with alpha(v) = -1 for every alpha in I(x^{-1}). Values alpha(v) are
// taken with v in the fundamental-coweight basis, so the system reads
// sum_k alpha_k v_k = -1 row by row; it is solved exactly over Q.
bool is_cominuscule_element(const RootSystem& rs, const WeylElement& x);

// Type A_n: perm (one-line, letters 1..n+1) has no decreasing subsequence of
// length 3. Throws WrongType.
bool type_a_cominuscule_oracle(const RootSystem& rs, std::span<const int> perm);

// Coefficient of e^{lambda} in the character of the tangent-cone coordinate
// ring, P_{w,s} / prod_i (1 - e^{-gamma_i}), exact up to height(-lambda).
// Throws ExponentOutsideCone unless -lambda lies in Cone_Z(gamma).
BigInt tangent_cone_coefficient(const RootSystem& rs, const WeightVector& lambda, const WeylElement& w,
                                const Word& s);

// Type A only: s_1 ... (s_j omitted) ... s_l >= w. Throws WrongType.
bool type_a_tangent_oracle(const RootSystem& rs, int j, const WeylElement& w, const Word& s);

}  // namespace kltan
