#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kltan/rootsys.hpp"

namespace kltan {

using BigInt = boost::multiprecision::cpp_int;

// Exponent lambda of a character e^lambda, in simple-root coordinates.
using WeightVector = LatticeVector;

// Finite Z-combination of characters e^lambda with lambda in the root lattice.
// Zero coefficients are never stored.
class LaurentPoly {
 public:
  explicit LaurentPoly(int rank = 0) : rank_(rank) {}

  static LaurentPoly constant(int rank, const BigInt& c);
  static LaurentPoly monomial(const WeightVector& exponent, const BigInt& c = 1);

  int rank() const noexcept { return rank_; }
  const std::map<WeightVector, BigInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coefficient(const WeightVector& exponent) const;

  void add_term(const WeightVector& exponent, const BigInt& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  LaurentPoly scaled(const BigInt& c) const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // "1 - e^{-a1-a2}" style, terms in ascending exponent order.
  std::string to_string(const RootSystem& rs) const;

 private:
  void check_rank(int other) const;

  int rank_;
  std::map<WeightVector, BigInt> terms_;
};

LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly poly_scale(const LaurentPoly& p, const BigInt& c);

// prod over weights of (1 - e^{-alpha}).
LaurentPoly lambda_minus_one(int rank, std::span<const Root> weights);

// Power series in e^{-mu}, mu in the nonnegative root cone, truncated at
// height(mu) <= bound. Every stored coefficient is exact.
class TruncatedSeries {
 public:
  TruncatedSeries(int rank, int bound) : rank_(rank), bound_(bound) {}

  // Drops terms above the bound. Throws ExponentOutsideCone for an exponent
  // with a positive coordinate.
  static TruncatedSeries from_poly(const LaurentPoly& p, int bound);

  int rank() const noexcept { return rank_; }
  int bound() const noexcept { return bound_; }
  const std::map<WeightVector, BigInt>& terms() const noexcept { return terms_; }

  // Throws BeyondTruncation if height(-lambda) > bound.
  BigInt coefficient(const WeightVector& lambda) const;

  void add_term(const WeightVector& lambda, const BigInt& c);

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  // Truncated at the smaller of the two bounds.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  // Multiplies in place by 1 + e^{-beta} + e^{-2 beta} + ...
  void multiply_geometric(const Root& beta);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  int rank_;
  int bound_;
  std::map<WeightVector, BigInt> terms_;
};

// True iff target = sum c_i g_i with integers c_i >= 0. Generators must be
// nonzero and nonnegative, which bounds the search by height.
bool in_integer_cone(std::span<const LatticeVector> generators, const LatticeVector& target);

// numerator * prod_beta 1/(1 - e^{-beta}), truncated at height `bound`.
// Throws ExponentOutsideCone if a numerator exponent is not in
// -Cone_Z(weights), InvalidArgument if a weight is not positive.
TruncatedSeries char_series(const LaurentPoly& numerator, std::span<const Root> denominator_weights, int bound);

BigInt coefficient(const LaurentPoly& p, const WeightVector& lambda);
BigInt coefficient(const TruncatedSeries& s, const WeightVector& lambda);

}  // namespace kltan
