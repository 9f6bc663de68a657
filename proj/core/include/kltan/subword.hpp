#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "kltan/rootsys.hpp"
#include "kltan/weyl.hpp"

namespace kltan {

// Words longer than this are refused by every operation that enumerates
// subsequences.
inline constexpr int kMaxEnumerationLength = 20;

// Strictly increasing 1-based positions into a word.
class IndexSequence {
 public:
  IndexSequence() = default;
  IndexSequence(std::initializer_list<int> positions);
  explicit IndexSequence(std::vector<int> positions);  // throws InvalidIndexSequence

  static IndexSequence from_mask(std::uint32_t mask);
  std::uint32_t mask() const noexcept;

  std::span<const int> positions() const noexcept { return positions_; }
  std::size_t size() const noexcept { return positions_.size(); }
  bool empty() const noexcept { return positions_.empty(); }
  bool contains(int position) const noexcept;

  friend bool operator==(const IndexSequence&, const IndexSequence&) = default;
  friend auto operator<=>(const IndexSequence&, const IndexSequence&) = default;

 private:
  std::vector<int> positions_;
};

// An element t of T_{w,s}: the subword at t has Demazure product w.
struct HeckeSubword {
  IndexSequence positions;
  int excess = 0;  // |t| - l(w)
};

// Calls visit(mask, delta) for every subsequence of s, where bit k of mask
// selects position k+1 and delta is the Demazure product of the selected
// letters. Throws LengthBoundExceeded past kMaxEnumerationLength.
void for_each_subword(const RootSystem& rs, const Word& s,
                      const std::function<void(std::uint32_t, const WeylElement&)>& visit);

// T_{w,s}, sorted lexicographically by positions.
std::vector<HeckeSubword> hecke_subwords(const RootSystem& rs, const WeylElement& w, const Word& s);

// RT_{w,s}: the members of T_{w,s} with excess zero.
std::vector<IndexSequence> reduced_subwords(const RootSystem& rs, const WeylElement& w, const Word& s);

// The subword complex Delta(s, w): position sets r whose complement s \ r
// still has Demazure product >= w.
struct SubwordComplex {
  Word word;
  WeylElement target;
  std::vector<IndexSequence> faces;     // lexicographic order
  std::vector<IndexSequence> facets;    // maximal faces
  std::vector<IndexSequence> boundary;  // faces with delta(s \ r) != w

  // l(s) - l(w) - 1; -1 for the irrelevant complex {empty}.
  int dimension() const noexcept { return static_cast<int>(word.size()) - target.length() - 1; }
};

// Throws TargetNotContained when s has no reduced subword for w.
SubwordComplex build_complex(const RootSystem& rs, const WeylElement& w, const Word& s);

std::vector<IndexSequence> boundary_faces(const SubwordComplex& c);

struct EulerCharacteristics {
  long long reduced = 0;   // sum over faces of (-1)^{dim F}, empty face -1
  long long interior = 0;  // reduced minus the boundary's reduced characteristic
};

// Throws InvariantViolation unless interior == (-1)^{dim}, which holds for
// every ball and sphere.
EulerCharacteristics euler_characteristics(const SubwordComplex& c);

// sum over T_{w,s} of (-1)^{e(t)}; always 1. Throws TargetNotContained, and
// InvariantViolation if the sum is not 1.
long long euler_signed_sum(const RootSystem& rs, const WeylElement& w, const Word& s);

}  // namespace kltan
