#include "kltan/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <unordered_set>

#include "kltan/error.hpp"

namespace kltan {

// Mutating helpers with access to WeylElement internals.
class WeylOps {
 public:
  static WeylElement identity(int rank) {
    if (rank < 1 || rank > kMaxRank) fail(ErrorKind::InvalidArgument, "rank out of range");
    WeylElement x;
    x.rank_ = rank;
    for (int k = 0; k < rank; ++k) {
      x.action_[k * kMaxRank + k] = 1;
      x.inverse_[k * kMaxRank + k] = 1;
    }
    return x;
  }

  // M <- M S_i: column j becomes col_j - a_ij col_i.
  static void right_reflect(const RootSystem& rs, WeylElement::Matrix& m, int i) {
    const int n = rs.rank();
    const int ci = i - 1;
    std::array<int, kMaxRank> col{};
    for (int r = 0; r < n; ++r) col[r] = m[r * kMaxRank + ci];
    for (int j = 1; j <= n; ++j) {
      const int a = rs.cartan(i, j);
      if (a == 0) continue;
      for (int r = 0; r < n; ++r) m[r * kMaxRank + (j - 1)] = static_cast<std::int8_t>(m[r * kMaxRank + (j - 1)] - a * col[r]);
    }
  }

  // M <- S_i M: row i becomes row_i - sum_j a_ij row_j.
  static void left_reflect(const RootSystem& rs, WeylElement::Matrix& m, int i) {
    const int n = rs.rank();
    std::array<int, kMaxRank> row{};
    for (int c = 0; c < n; ++c) {
      int p = 0;
      for (int j = 1; j <= n; ++j) p += rs.cartan(i, j) * m[(j - 1) * kMaxRank + c];
      row[c] = m[(i - 1) * kMaxRank + c] - p;
    }
    for (int c = 0; c < n; ++c) m[(i - 1) * kMaxRank + c] = static_cast<std::int8_t>(row[c]);
  }

  static WeylElement times_simple(const RootSystem& rs, const WeylElement& x, int i) {
    check(rs, x, i);
    WeylElement y = x;
    y.length_ += x.has_right_descent(i) ? -1 : 1;
    right_reflect(rs, y.action_, i);
    left_reflect(rs, y.inverse_, i);
    return y;
  }

  static WeylElement simple_times(const RootSystem& rs, int i, const WeylElement& x) {
    check(rs, x, i);
    WeylElement y = x;
    y.length_ += x.has_left_descent(i) ? -1 : 1;
    left_reflect(rs, y.action_, i);
    right_reflect(rs, y.inverse_, i);
    return y;
  }

  static WeylElement multiply(const RootSystem& rs, const WeylElement& u, const WeylElement& v) {
    if (u.rank_ != rs.rank() || v.rank_ != rs.rank()) fail(ErrorKind::RankMismatch, "element rank does not match root system");
    const int n = rs.rank();
    WeylElement y;
    y.rank_ = n;
    auto mul = [n](const WeylElement::Matrix& a, const WeylElement::Matrix& b, WeylElement::Matrix& out) {
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          int s = 0;
          for (int k = 0; k < n; ++k) s += a[r * kMaxRank + k] * b[k * kMaxRank + c];
          out[r * kMaxRank + c] = static_cast<std::int8_t>(s);
        }
      }
    };
    mul(u.action_, v.action_, y.action_);
    mul(v.inverse_, u.inverse_, y.inverse_);
    int len = 0;
    for (const auto& a : rs.positive_roots()) {
      if (y.apply(a).is_negative()) ++len;
    }
    y.length_ = len;
    return y;
  }

  static void check(const RootSystem& rs, const WeylElement& x, int i) {
    if (x.rank_ != rs.rank()) fail(ErrorKind::RankMismatch, "element rank does not match root system");
    if (i < 1 || i > rs.rank()) {
      fail(ErrorKind::LetterOutOfRange, "letter " + std::to_string(i) + " out of range for rank " + std::to_string(rs.rank()));
    }
  }

  static std::size_t hash(const WeylElement& x) noexcept {
    std::size_t h = static_cast<std::size_t>(x.rank_);
    for (int r = 0; r < x.rank_; ++r) {
      for (int c = 0; c < x.rank_; ++c) h = h * 131u + static_cast<std::size_t>(x.action_[r * kMaxRank + c] + 64);
    }
    return h;
  }
};

Word Word::parse(std::string_view text) {
  std::vector<int> letters;
  std::size_t k = 0;
  auto is_sep = [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '(' || c == ')' || c == '[' || c == ']'; };
  while (k < text.size()) {
    while (k < text.size() && is_sep(text[k])) ++k;
    if (k == text.size()) break;
    std::size_t end = k;
    while (end < text.size() && !is_sep(text[end])) ++end;
    std::string_view tok = text.substr(k, end - k);
    k = end;
    if (tok == "e") continue;
    if (tok.front() == 's' || tok.front() == 'S') tok.remove_prefix(1);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || v < 1) {
      fail(ErrorKind::InvalidArgument, "cannot parse word '" + std::string(text) + "'");
    }
    letters.push_back(v);
  }
  return Word(std::move(letters));
}

Word Word::without(std::size_t position) const {
  if (position < 1 || position > letters_.size()) {
    fail(ErrorKind::InvalidArgument, "position " + std::to_string(position) + " out of range");
  }
  std::vector<int> out = letters_;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(position - 1));
  return Word(std::move(out));
}

Word Word::concat(const Word& tail) const {
  std::vector<int> out = letters_;
  out.insert(out.end(), tail.letters_.begin(), tail.letters_.end());
  return Word(std::move(out));
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(letters_[k]);
  }
  return out;
}

LatticeVector WeylElement::apply(const LatticeVector& v) const noexcept {
  LatticeVector out(rank_);
  for (int r = 0; r < rank_; ++r) {
    int s = 0;
    for (int c = 0; c < rank_; ++c) s += action_[r * kMaxRank + c] * v[c];
    out[r] = s;
  }
  return out;
}

LatticeVector WeylElement::apply_inverse(const LatticeVector& v) const noexcept {
  LatticeVector out(rank_);
  for (int r = 0; r < rank_; ++r) {
    int s = 0;
    for (int c = 0; c < rank_; ++c) s += inverse_[r * kMaxRank + c] * v[c];
    out[r] = s;
  }
  return out;
}

LatticeVector WeylElement::image_of_simple(int i) const noexcept {
  LatticeVector out(rank_);
  for (int r = 0; r < rank_; ++r) out[r] = action_[r * kMaxRank + (i - 1)];
  return out;
}

namespace {

// Sign of a root stored as a column: the first nonzero entry decides.
bool column_negative(const std::array<std::int8_t, kMaxRank * kMaxRank>& m, int rank, int col) {
  for (int r = 0; r < rank; ++r) {
    const int v = m[r * kMaxRank + col];
    if (v != 0) return v < 0;
  }
  return false;
}

}  // namespace

bool WeylElement::has_right_descent(int i) const noexcept { return column_negative(action_, rank_, i - 1); }

bool WeylElement::has_left_descent(int i) const noexcept { return column_negative(inverse_, rank_, i - 1); }

WeylElement WeylElement::inverse() const noexcept {
  WeylElement y = *this;
  std::swap(y.action_, y.inverse_);
  return y;
}

std::size_t WeylElementHash::operator()(const WeylElement& x) const noexcept { return WeylOps::hash(x); }

WeylElement identity_element(const RootSystem& rs) { return WeylOps::identity(rs.rank()); }

WeylElement simple_reflection(const RootSystem& rs, int i) { return WeylOps::times_simple(rs, identity_element(rs), i); }

WeylElement times_simple(const RootSystem& rs, const WeylElement& x, int i) { return WeylOps::times_simple(rs, x, i); }

WeylElement simple_times(const RootSystem& rs, int i, const WeylElement& x) { return WeylOps::simple_times(rs, i, x); }

WeylElement multiply(const RootSystem& rs, const WeylElement& u, const WeylElement& v) { return WeylOps::multiply(rs, u, v); }

WeylElement longest_element(const RootSystem& rs) {
  WeylElement x = identity_element(rs);
  for (;;) {
    int ascent = 0;
    for (int i = 1; i <= rs.rank(); ++i) {
      if (!x.has_right_descent(i)) {
        ascent = i;
        break;
      }
    }
    if (ascent == 0) return x;
    x = times_simple(rs, x, ascent);
  }
}

WeylElement word_to_element(const RootSystem& rs, const Word& w) {
  WeylElement x = identity_element(rs);
  for (int letter : w.letters()) x = times_simple(rs, x, letter);
  return x;
}

bool is_reduced(const RootSystem& rs, const Word& w) {
  return static_cast<std::size_t>(word_to_element(rs, w).length()) == w.size();
}

bool bruhat_leq(const RootSystem& rs, const WeylElement& u, const WeylElement& v) {
  if (u.rank() != rs.rank() || v.rank() != rs.rank()) fail(ErrorKind::RankMismatch, "element rank does not match root system");
  WeylElement a = u;
  WeylElement b = v;
  for (;;) {
    if (a.length() > b.length()) return false;
    if (a.is_identity()) return true;
    if (a.length() == b.length()) return a == b;
    int s = 1;
    while (!b.has_left_descent(s)) ++s;
    b = simple_times(rs, s, b);
    if (a.has_left_descent(s)) a = simple_times(rs, s, a);
  }
}

GammaSequence gamma_sequence(const RootSystem& rs, const Word& w) {
  GammaSequence out;
  out.word = w;
  WeylElement prefix = identity_element(rs);
  for (int letter : w.letters()) {
    WeylOps::check(rs, prefix, letter);
    if (prefix.has_right_descent(letter)) fail(ErrorKind::NotReduced, "word (" + w.to_string() + ") is not reduced");
    out.gammas.push_back(prefix.image_of_simple(letter));
    prefix = times_simple(rs, prefix, letter);
  }
  // Positive because the word is reduced; distinctness is checked outright.
  for (std::size_t a = 0; a < out.gammas.size(); ++a) {
    if (!out.gammas[a].is_positive()) fail(ErrorKind::InvariantViolation, "gamma is not a positive root");
    for (std::size_t b = 0; b < a; ++b) {
      if (out.gammas[a] == out.gammas[b]) fail(ErrorKind::InvariantViolation, "gamma sequence repeats a root");
    }
  }
  return out;
}

std::vector<Root> inversion_set_of_inverse(const RootSystem& rs, const WeylElement& x) {
  if (x.rank() != rs.rank()) fail(ErrorKind::RankMismatch, "element rank does not match root system");
  std::vector<Root> out;
  for (const auto& a : rs.positive_roots()) {
    if (x.apply_inverse(a).is_negative()) out.push_back(a);
  }
  return out;
}

Word canonical_reduced_word(const RootSystem& rs, const WeylElement& x) {
  std::vector<int> letters;
  WeylElement y = x;
  while (!y.is_identity()) {
    int s = 1;
    while (!y.has_left_descent(s)) ++s;
    letters.push_back(s);
    y = simple_times(rs, s, y);
  }
  return Word(std::move(letters));
}

namespace {

void reduced_words_dfs(const RootSystem& rs, const WeylElement& y, std::vector<int>& prefix, std::vector<Word>& out) {
  if (y.is_identity()) {
    out.emplace_back(prefix);
    return;
  }
  for (int s = 1; s <= rs.rank(); ++s) {
    if (!y.has_left_descent(s)) continue;
    prefix.push_back(s);
    reduced_words_dfs(rs, simple_times(rs, s, y), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Word> all_reduced_words(const RootSystem& rs, const WeylElement& x, int length_bound) {
  if (x.length() > length_bound) {
    fail(ErrorKind::LengthBoundExceeded,
         "length " + std::to_string(x.length()) + " exceeds reduced-word bound " + std::to_string(length_bound));
  }
  std::vector<Word> out;
  std::vector<int> prefix;
  reduced_words_dfs(rs, x, prefix, out);
  return out;
}

bool is_min_coset_rep(const RootSystem& rs, const WeylElement& x, std::span<const int> parabolic) {
  for (int i : parabolic) {
    if (i < 1 || i > rs.rank()) fail(ErrorKind::LetterOutOfRange, "parabolic node " + std::to_string(i) + " out of range");
    if (x.has_right_descent(i)) return false;
  }
  return true;
}

std::uint64_t weyl_group_order(CartanType t) {
  auto factorial = [](int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
  };
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << n) * factorial(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs, std::uint64_t size_guard) {
  const std::uint64_t order = weyl_group_order(rs.cartan_type());
  if (order > size_guard) {
    fail(ErrorKind::GroupTooLarge, "|W(" + rs.cartan_type().to_string() + ")| = " + std::to_string(order) +
                                       " exceeds guard " + std::to_string(size_guard));
  }
  std::vector<WeylElement> out{identity_element(rs)};
  std::unordered_set<WeylElement, WeylElementHash> seen{out.front()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i = 1; i <= rs.rank(); ++i) {
      if (out[head].has_right_descent(i)) continue;
      WeylElement y = times_simple(rs, out[head], i);
      if (seen.insert(y).second) out.push_back(y);
    }
  }
  return out;
}

namespace {

void require_type_a(const RootSystem& rs) {
  if (rs.cartan_type().family != Family::A) fail(ErrorKind::WrongType, "permutations require type A, got " + rs.cartan_type().to_string());
}

}  // namespace

std::vector<int> to_permutation(const RootSystem& rs, const WeylElement& x) {
  require_type_a(rs);
  std::vector<int> p(static_cast<std::size_t>(rs.rank() + 1));
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = static_cast<int>(k + 1);
  const Word word = canonical_reduced_word(rs, x);
  for (int s : word.letters()) {
    std::swap(p[static_cast<std::size_t>(s - 1)], p[static_cast<std::size_t>(s)]);
  }
  return p;
}

WeylElement from_permutation(const RootSystem& rs, std::span<const int> perm) {
  require_type_a(rs);
  const auto n = static_cast<std::size_t>(rs.rank() + 1);
  std::vector<int> p(perm.begin(), perm.end());
  std::vector<int> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  bool valid = p.size() == n;
  for (std::size_t k = 0; valid && k < n; ++k) valid = sorted[k] == static_cast<int>(k + 1);
  if (!valid) fail(ErrorKind::InvalidArgument, "expected a permutation of 1.." + std::to_string(n));

  // Bubble sort by right descents; the swaps read backwards form a reduced word.
  std::vector<int> letters;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (p[k] > p[k + 1]) {
        std::swap(p[k], p[k + 1]);
        letters.push_back(static_cast<int>(k + 1));
        changed = true;
      }
    }
  }
  std::reverse(letters.begin(), letters.end());
  return word_to_element(rs, Word(std::move(letters)));
}

}  // namespace kltan
