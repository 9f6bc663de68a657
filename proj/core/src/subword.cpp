#include "kltan/subword.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "kltan/error.hpp"
#include "kltan/hecke.hpp"

namespace kltan {

IndexSequence::IndexSequence(std::initializer_list<int> positions) : IndexSequence(std::vector<int>(positions)) {}

IndexSequence::IndexSequence(std::vector<int> positions) : positions_(std::move(positions)) {
  for (std::size_t k = 0; k < positions_.size(); ++k) {
    if (positions_[k] < 1 || (k > 0 && positions_[k] <= positions_[k - 1])) {
      fail(ErrorKind::InvalidIndexSequence, "index sequence must be strictly increasing and 1-based");
    }
  }
}

IndexSequence IndexSequence::from_mask(std::uint32_t mask) {
  std::vector<int> pos;
  for (int k = 0; mask != 0; ++k, mask >>= 1) {
    if (mask & 1u) pos.push_back(k + 1);
  }
  IndexSequence out;
  out.positions_ = std::move(pos);
  return out;
}

std::uint32_t IndexSequence::mask() const noexcept {
  std::uint32_t m = 0;
  for (int p : positions_) m |= std::uint32_t{1} << (p - 1);
  return m;
}

bool IndexSequence::contains(int position) const noexcept {
  return std::binary_search(positions_.begin(), positions_.end(), position);
}

namespace {

void check_length(const Word& s) {
  if (s.size() > static_cast<std::size_t>(kMaxEnumerationLength)) {
    fail(ErrorKind::LengthBoundExceeded, "word of length " + std::to_string(s.size()) +
                                             " exceeds the enumeration bound " + std::to_string(kMaxEnumerationLength));
  }
}

void subword_dfs(const RootSystem& rs, const Word& s, std::size_t k, std::uint32_t mask, const WeylElement& delta,
                 const std::function<void(std::uint32_t, const WeylElement&)>& visit) {
  if (k == s.size()) {
    visit(mask, delta);
    return;
  }
  subword_dfs(rs, s, k + 1, mask, delta, visit);
  subword_dfs(rs, s, k + 1, mask | (std::uint32_t{1} << k), hecke_mult(rs, delta, s[k]), visit);
}

bool lex_less(const IndexSequence& a, const IndexSequence& b) { return a < b; }

}  // namespace

void for_each_subword(const RootSystem& rs, const Word& s,
                      const std::function<void(std::uint32_t, const WeylElement&)>& visit) {
  check_length(s);
  for (int letter : s.letters()) {
    if (letter < 1 || letter > rs.rank()) fail(ErrorKind::LetterOutOfRange, "letter " + std::to_string(letter) + " out of range");
  }
  subword_dfs(rs, s, 0, 0, identity_element(rs), visit);
}

std::vector<HeckeSubword> hecke_subwords(const RootSystem& rs, const WeylElement& w, const Word& s) {
  std::vector<HeckeSubword> out;
  for_each_subword(rs, s, [&](std::uint32_t mask, const WeylElement& delta) {
    if (delta == w) {
      const int size = std::popcount(mask);
      out.push_back({IndexSequence::from_mask(mask), size - w.length()});
    }
  });
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.positions < b.positions; });
  return out;
}

std::vector<IndexSequence> reduced_subwords(const RootSystem& rs, const WeylElement& w, const Word& s) {
  std::vector<IndexSequence> out;
  for (auto& t : hecke_subwords(rs, w, s)) {
    if (t.excess == 0) out.push_back(std::move(t.positions));
  }
  return out;
}

SubwordComplex build_complex(const RootSystem& rs, const WeylElement& w, const Word& s) {
  check_length(s);
  if (!bruhat_leq(rs, w, demazure_product(rs, s).delta)) {
    fail(ErrorKind::TargetNotContained, "word (" + s.to_string() + ") contains no reduced word for the target");
  }
  SubwordComplex c{s, w, {}, {}, {}};
  const std::uint32_t full = s.size() == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << s.size()) - 1;
  std::unordered_set<std::uint32_t> face_masks;
  for_each_subword(rs, s, [&](std::uint32_t kept, const WeylElement& delta) {
    if (!bruhat_leq(rs, w, delta)) return;
    const std::uint32_t removed = full & ~kept;
    face_masks.insert(removed);
    c.faces.push_back(IndexSequence::from_mask(removed));
    if (!(delta == w)) c.boundary.push_back(IndexSequence::from_mask(removed));
  });
  for (const auto& f : c.faces) {
    const std::uint32_t m = f.mask();
    bool maximal = true;
    for (std::size_t k = 0; k < s.size() && maximal; ++k) {
      const std::uint32_t bit = std::uint32_t{1} << k;
      if (!(m & bit) && face_masks.count(m | bit)) maximal = false;
    }
    if (maximal) c.facets.push_back(f);
  }
  std::sort(c.faces.begin(), c.faces.end(), lex_less);
  std::sort(c.facets.begin(), c.facets.end(), lex_less);
  std::sort(c.boundary.begin(), c.boundary.end(), lex_less);
  return c;
}

std::vector<IndexSequence> boundary_faces(const SubwordComplex& c) { return c.boundary; }

EulerCharacteristics euler_characteristics(const SubwordComplex& c) {
  auto chi = [](const std::vector<IndexSequence>& faces) {
    long long sum = 0;
    for (const auto& f : faces) sum += (f.size() % 2 == 1) ? 1 : -1;  // (-1)^{|F|-1}
    return sum;
  };
  EulerCharacteristics e;
  e.reduced = chi(c.faces);
  e.interior = e.reduced - chi(c.boundary);
  const long long expected = (c.dimension() % 2 == 0) ? 1 : -1;
  if (e.interior != expected) {
    fail(ErrorKind::InvariantViolation, "interior Euler characteristic " + std::to_string(e.interior) +
                                            " differs from (-1)^dim = " + std::to_string(expected));
  }
  return e;
}

long long euler_signed_sum(const RootSystem& rs, const WeylElement& w, const Word& s) {
  check_length(s);
  if (!bruhat_leq(rs, w, demazure_product(rs, s).delta)) {
    fail(ErrorKind::TargetNotContained, "word (" + s.to_string() + ") contains no reduced word for the target");
  }
  long long sum = 0;
  for (const auto& t : hecke_subwords(rs, w, s)) sum += (t.excess % 2 == 0) ? 1 : -1;
  if (sum != 1) fail(ErrorKind::InvariantViolation, "signed Hecke subword sum is " + std::to_string(sum) + ", expected 1");
  return sum;
}

}  // namespace kltan
