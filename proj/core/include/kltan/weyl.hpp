#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kltan/rootsys.hpp"

namespace kltan {

// A finite sequence of simple-reflection indices (1-based). May be empty and
// may be non-reduced. Words multiply left to right.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters) : letters_(letters) {}
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}

  // Accepts "1 2 1", "s1 s2 s1", "1,2,1", "" and "e" (identity).
  static Word parse(std::string_view text);

  std::span<const int> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  // 0-based access.
  int operator[](std::size_t k) const noexcept { return letters_[k]; }

  // Copy with the letter at 1-based `position` removed.
  Word without(std::size_t position) const;
  Word concat(const Word& tail) const;

  // Space separated indices; "" for the empty word.
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
};

// A Weyl group element, stored as its integer action on the root lattice in
// the simple-root basis together with the inverse action and the cached
// length. Equality and hashing use the action matrix only.
class WeylElement {
 public:
  WeylElement() = default;

  int rank() const noexcept { return rank_; }
  int length() const noexcept { return length_; }
  bool is_identity() const noexcept { return length_ == 0; }

  // x(v) and x^{-1}(v).
  LatticeVector apply(const LatticeVector& v) const noexcept;
  LatticeVector apply_inverse(const LatticeVector& v) const noexcept;

  // x(alpha_i), i.e. column i of the action matrix.
  LatticeVector image_of_simple(int i) const noexcept;

  // l(x s_i) < l(x), equivalently x(alpha_i) is negative.
  bool has_right_descent(int i) const noexcept;
  // l(s_i x) < l(x), equivalently x^{-1}(alpha_i) is negative.
  bool has_left_descent(int i) const noexcept;

  WeylElement inverse() const noexcept;

  // Entry (row, col) of the action matrix, 0-based.
  int entry(int row, int col) const noexcept { return action_[row * kMaxRank + col]; }

  friend bool operator==(const WeylElement& a, const WeylElement& b) noexcept {
    return a.rank_ == b.rank_ && a.action_ == b.action_;
  }

 private:
  friend class WeylOps;
  using Matrix = std::array<std::int8_t, kMaxRank * kMaxRank>;

  Matrix action_{};
  Matrix inverse_{};
  int rank_ = 0;
  int length_ = 0;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& x) const noexcept;
};

struct GammaSequence {
  Word word;
  std::vector<Root> gammas;
};

WeylElement identity_element(const RootSystem& rs);
WeylElement simple_reflection(const RootSystem& rs, int i);
// x s_i and s_i x.
WeylElement times_simple(const RootSystem& rs, const WeylElement& x, int i);
WeylElement simple_times(const RootSystem& rs, int i, const WeylElement& x);
WeylElement multiply(const RootSystem& rs, const WeylElement& u, const WeylElement& v);
WeylElement longest_element(const RootSystem& rs);

// Product of the simple reflections of the word, left to right. Throws
// LetterOutOfRange.
WeylElement word_to_element(const RootSystem& rs, const Word& w);

bool is_reduced(const RootSystem& rs, const Word& w);

// Bruhat order, decided by descent recursion: for a left descent s of v,
// u <= v iff min(u, su) <= sv.
bool bruhat_leq(const RootSystem& rs, const WeylElement& u, const WeylElement& v);

// gamma_i = s_1 ... s_{i-1}(alpha_{s_i}) for a reduced word. Throws NotReduced.
//
// Some sources write the prefix as s_1 ... s_i; that variant sends gamma_1 to
// -alpha_{s_1} and does not enumerate the inversion set, so the shorter prefix
// is used here.
GammaSequence gamma_sequence(const RootSystem& rs, const Word& w);

// I(x^{-1}) = {alpha > 0 : x^{-1}(alpha) < 0}, in positive_roots() order.
std::vector<Root> inversion_set_of_inverse(const RootSystem& rs, const WeylElement& x);

// Lexicographically least reduced word, built by repeatedly stripping the
// smallest left descent.
Word canonical_reduced_word(const RootSystem& rs, const WeylElement& x);

inline constexpr int kDefaultReducedWordLengthBound = 16;

// Every reduced word of x in lexicographic order. Throws LengthBoundExceeded if
// l(x) > length_bound.
std::vector<Word> all_reduced_words(const RootSystem& rs, const WeylElement& x,
                                    int length_bound = kDefaultReducedWordLengthBound);

// x(alpha_i) > 0 for every i in parabolic (1-based nodes).
bool is_min_coset_rep(const RootSystem& rs, const WeylElement& x, std::span<const int> parabolic);

// |W| from the classical formulas.
std::uint64_t weyl_group_order(CartanType type);

inline constexpr std::uint64_t kDefaultGroupSizeGuard = 400000;

// All elements, breadth first from the identity (nondecreasing length).
// Throws GroupTooLarge if |W| exceeds the guard.
std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs,
                                              std::uint64_t size_guard = kDefaultGroupSizeGuard);

// Type A_n only: one-line notation of x as a permutation of 1..n+1, with s_i
// the transposition (i i+1) and x(k) = s_{i_1}(...s_{i_l}(k)). Throws WrongType.
std::vector<int> to_permutation(const RootSystem& rs, const WeylElement& x);
WeylElement from_permutation(const RootSystem& rs, std::span<const int> perm);

}  // namespace kltan
