#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kltan {

inline constexpr int kMaxRank = 8;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  // Accepts "A3", "d4", "G2". Throws InvalidCartanType on malformed labels or
  // ranks outside the family's range (D3 is rejected; write A3).
  static CartanType parse(std::string_view label);
  static CartanType make(Family family, int rank);

  std::string to_string() const;
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

// An integer vector in the simple-root basis. Roots, weights of characters and
// cone points all share this representation; entries past rank() are zero.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(int rank);
  LatticeVector(std::initializer_list<int> coeffs);
  explicit LatticeVector(std::span<const int> coeffs);

  static LatticeVector unit(int rank, int node);  // node is 1-based

  int rank() const noexcept { return rank_; }
  int operator[](int k) const noexcept { return c_[k]; }
  int& operator[](int k) noexcept { return c_[k]; }
  std::span<const int> coeffs() const noexcept { return {c_.data(), static_cast<std::size_t>(rank_)}; }

  int height() const noexcept;
  bool is_zero() const noexcept;
  // All coordinates >= 0 and not all zero.
  bool is_positive() const noexcept;
  bool is_negative() const noexcept;
  // All coordinates >= 0 (zero allowed).
  bool is_nonnegative() const noexcept;

  LatticeVector& operator+=(const LatticeVector& o) noexcept;
  LatticeVector& operator-=(const LatticeVector& o) noexcept;
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) noexcept { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) noexcept { return a -= b; }
  friend LatticeVector operator*(int k, LatticeVector a) noexcept;
  LatticeVector operator-() const noexcept;

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

 private:
  std::array<int, kMaxRank> c_{};
  int rank_ = 0;
};

using Root = LatticeVector;

struct LatticeVectorHash {
  std::size_t operator()(const LatticeVector& v) const noexcept;
};

// Orders by height first, then lexicographically on coefficients.
bool height_lex_less(const LatticeVector& a, const LatticeVector& b) noexcept;

// Finite crystallographic root system with Bourbaki node numbering. Immutable
// after construction. Node indices in the public API are 1-based.
//
// G2 convention: alpha_1 is short, alpha_2 is long; the highest root is
// 3a1+2a2.
class RootSystem {
 public:
  explicit RootSystem(CartanType type);

  const CartanType& cartan_type() const noexcept { return type_; }
  int rank() const noexcept { return type_.rank; }

  // <alpha_j, alpha_i^vee>, so that s_i(v) = v - (sum_j cartan(i,j) v_j) alpha_i.
  int cartan(int i, int j) const { return cartan_[(i - 1) * kMaxRank + (j - 1)]; }

  // Sorted by (height, lexicographic coefficients).
  std::span<const Root> positive_roots() const noexcept { return positive_; }
  const Root& simple_root(int i) const { return simple_.at(static_cast<std::size_t>(i - 1)); }
  const Root& highest_root() const noexcept { return positive_.back(); }

  // Index into positive_roots(), or -1.
  int positive_root_index(const Root& v) const noexcept;
  bool is_root(const Root& v) const noexcept;

  // <v, alpha_i^vee>.
  int pairing(const LatticeVector& v, int i) const noexcept;
  Root reflect(int i, const Root& v) const;

  std::vector<int> cominuscule_nodes() const;

  std::string simple_root_name(int i) const;
  // e.g. "a1+2a2+a3", "-a1-a2", "0".
  std::string format(const LatticeVector& v) const;

  // Orthogonal epsilon coordinates for classical types A-D (A_n uses n+1
  // coordinates). Throws WrongType for E/F/G.
  bool has_epsilon_coordinates() const noexcept;
  std::vector<int> to_epsilon(const LatticeVector& v) const;
  // Inverse of to_epsilon; throws InvalidArgument if the vector is not in the
  // root lattice.
  LatticeVector from_epsilon(std::span<const int> eps) const;

 private:
  CartanType type_;
  std::array<int, kMaxRank * kMaxRank> cartan_{};
  std::vector<Root> simple_;
  std::vector<Root> positive_;
};

RootSystem build_root_system(CartanType type);

// s_i(v); total on lattice vectors.
Root reflect(const RootSystem& rs, int i, const Root& v);

std::vector<int> cominuscule_nodes(const RootSystem& rs);

// Number of positive roots for the type, from the classical formulas.
int classical_positive_root_count(CartanType type);

}  // namespace kltan
