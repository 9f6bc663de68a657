#include "kltan/rt_ring.hpp"

#include <algorithm>
#include <set>

#include "kltan/error.hpp"

namespace kltan {

LaurentPoly LaurentPoly::constant(int rank, const BigInt& c) {
  LaurentPoly p(rank);
  p.add_term(WeightVector(rank), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const WeightVector& exponent, const BigInt& c) {
  LaurentPoly p(exponent.rank());
  p.add_term(exponent, c);
  return p;
}

void LaurentPoly::check_rank(int other) const {
  if (other != rank_) fail(ErrorKind::RankMismatch, "Laurent polynomial ranks differ");
}

BigInt LaurentPoly::coefficient(const WeightVector& exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(const WeightVector& exponent, const BigInt& c) {
  check_rank(exponent.rank());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_rank(o.rank_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_rank(o.rank_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_rank(b.rank_);
  LaurentPoly out(a.rank_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly LaurentPoly::scaled(const BigInt& c) const {
  LaurentPoly out(rank_);
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

std::string LaurentPoly::to_string(const RootSystem& rs) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<WeightVector, BigInt>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const int ha = a.first.height();
    const int hb = b.first.height();
    if (ha != hb) return ha > hb;
    return b.first < a.first;
  });
  std::string out;
  for (const auto& [e, c] : ordered) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (e.is_zero()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + " ";
      out += "e^{" + rs.format(e) + "}";
    }
  }
  return out;
}

LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
LaurentPoly poly_scale(const LaurentPoly& p, const BigInt& c) { return p.scaled(c); }

LaurentPoly lambda_minus_one(int rank, std::span<const Root> weights) {
  LaurentPoly out = LaurentPoly::constant(rank, 1);
  for (const auto& a : weights) {
    LaurentPoly factor = LaurentPoly::constant(rank, 1);
    factor.add_term(-a, -1);
    out *= factor;
  }
  return out;
}

TruncatedSeries TruncatedSeries::from_poly(const LaurentPoly& p, int bound) {
  TruncatedSeries s(p.rank(), bound);
  for (const auto& [e, c] : p.terms()) {
    const WeightVector mu = -e;
    if (!mu.is_nonnegative()) fail(ErrorKind::ExponentOutsideCone, "exponent has a positive coordinate");
    if (mu.height() <= bound) s.terms_.emplace(e, c);
  }
  return s;
}

BigInt TruncatedSeries::coefficient(const WeightVector& lambda) const {
  if (lambda.rank() != rank_) fail(ErrorKind::RankMismatch, "weight rank differs from series rank");
  if ((-lambda).height() > bound_) {
    fail(ErrorKind::BeyondTruncation, "height " + std::to_string((-lambda).height()) + " beyond truncation bound " +
                                          std::to_string(bound_));
  }
  const auto it = terms_.find(lambda);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void TruncatedSeries::add_term(const WeightVector& lambda, const BigInt& c) {
  if (lambda.rank() != rank_) fail(ErrorKind::RankMismatch, "weight rank differs from series rank");
  const WeightVector mu = -lambda;
  if (!mu.is_nonnegative()) fail(ErrorKind::ExponentOutsideCone, "exponent has a positive coordinate");
  if (mu.height() > bound_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.rank_ != rank_) fail(ErrorKind::RankMismatch, "series ranks differ");
  bound_ = std::min(bound_, o.bound_);
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = (-it->first).height() > bound_ ? terms_.erase(it) : std::next(it);
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.rank_ != b.rank_) fail(ErrorKind::RankMismatch, "series ranks differ");
  TruncatedSeries out(a.rank_, std::min(a.bound_, b.bound_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

void TruncatedSeries::multiply_geometric(const Root& beta) {
  if (!beta.is_positive()) fail(ErrorKind::InvalidArgument, "geometric series needs a positive weight");
  const int step = beta.height();
  std::map<WeightVector, BigInt> out;
  for (const auto& [e, c] : terms_) {
    WeightVector cur = e;
    for (int h = (-e).height(); h <= bound_; h += step) {
      auto [it, inserted] = out.try_emplace(cur, c);
      if (!inserted) it->second += c;
      cur -= beta;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  terms_ = std::move(out);
}

bool in_integer_cone(std::span<const LatticeVector> generators, const LatticeVector& target) {
  for (const auto& g : generators) {
    if (!g.is_positive()) fail(ErrorKind::InvalidArgument, "cone generators must be nonzero and nonnegative");
  }
  if (target.is_zero()) return true;
  // Depth-first search with a memo of targets already shown unreachable.
  std::set<LatticeVector> dead;
  auto reach = [&](auto&& self, const LatticeVector& t) -> bool {
    if (t.is_zero()) return true;
    if (dead.count(t)) return false;
    for (const auto& g : generators) {
      const LatticeVector rest = t - g;
      if (rest.is_nonnegative() && self(self, rest)) return true;
    }
    dead.insert(t);
    return false;
  };
  return target.is_nonnegative() && reach(reach, target);
}

TruncatedSeries char_series(const LaurentPoly& numerator, std::span<const Root> denominator_weights, int bound) {
  for (const auto& b : denominator_weights) {
    if (!b.is_positive()) fail(ErrorKind::InvalidArgument, "denominator weights must be positive");
  }
  for (const auto& [e, c] : numerator.terms()) {
    if (!in_integer_cone(denominator_weights, -e)) {
      fail(ErrorKind::ExponentOutsideCone, "numerator exponent outside the cone of the denominator weights");
    }
  }
  TruncatedSeries s = TruncatedSeries::from_poly(numerator, bound);
  for (const auto& b : denominator_weights) s.multiply_geometric(b);
  return s;
}

BigInt coefficient(const LaurentPoly& p, const WeightVector& lambda) { return p.coefficient(lambda); }

BigInt coefficient(const TruncatedSeries& s, const WeightVector& lambda) { return s.coefficient(lambda); }

}  // namespace kltan
