#include "kltan/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <functional>
#include <set>

#include "kltan/error.hpp"
#include "linalg.hpp"

namespace kltan {

namespace {

bool rank_allowed(Family f, int n) {
  switch (f) {
    case Family::A: return n >= 1 && n <= kMaxRank;
    case Family::B:
    case Family::C: return n >= 2 && n <= kMaxRank;
    case Family::D: return n >= 4 && n <= kMaxRank;
    case Family::E: return n >= 6 && n <= 8;
    case Family::F: return n == 4;
    case Family::G: return n == 2;
  }
  return false;
}

void connect(std::array<int, kMaxRank * kMaxRank>& a, int i, int j, int aij = -1, int aji = -1) {
  a[(i - 1) * kMaxRank + (j - 1)] = aij;
  a[(j - 1) * kMaxRank + (i - 1)] = aji;
}

// Bourbaki numbering. Entry (i, j) is <alpha_j, alpha_i^vee>.
std::array<int, kMaxRank * kMaxRank> cartan_matrix(CartanType t) {
  std::array<int, kMaxRank * kMaxRank> a{};
  const int n = t.rank;
  for (int i = 1; i <= n; ++i) a[(i - 1) * kMaxRank + (i - 1)] = 2;
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) connect(a, i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n - 1; ++i) connect(a, i, i + 1);
      connect(a, n - 1, n, -1, -2);  // alpha_n short
      break;
    case Family::C:
      for (int i = 1; i < n - 1; ++i) connect(a, i, i + 1);
      connect(a, n - 1, n, -2, -1);  // alpha_n long
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) connect(a, i, i + 1);
      connect(a, n - 2, n);
      break;
    case Family::E:
      connect(a, 1, 3);
      connect(a, 2, 4);
      for (int i = 3; i < n; ++i) connect(a, i, i + 1);
      break;
    case Family::F:
      connect(a, 1, 2);
      connect(a, 2, 3, -1, -2);  // alpha_3 short
      connect(a, 3, 4);
      break;
    case Family::G:
      connect(a, 1, 2, -3, -1);  // alpha_1 short
      break;
  }
  return a;
}

}  // namespace

CartanType CartanType::make(Family family, int rank) {
  if (!rank_allowed(family, rank)) {
    fail(ErrorKind::InvalidCartanType,
         std::string("rank ") + std::to_string(rank) + " not allowed for family " +
             static_cast<char>(family));
  }
  return CartanType{family, rank};
}

CartanType CartanType::parse(std::string_view label) {
  auto trimmed = label;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed.size() < 2) fail(ErrorKind::InvalidCartanType, "malformed Cartan type '" + std::string(label) + "'");

  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(trimmed.front())));
  if (letter < 'A' || letter > 'G') {
    fail(ErrorKind::InvalidCartanType, "unknown family in '" + std::string(label) + "'");
  }
  int rank = 0;
  const auto digits = trimmed.substr(1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    fail(ErrorKind::InvalidCartanType, "malformed rank in '" + std::string(label) + "'");
  }
  return make(static_cast<Family>(letter), rank);
}

std::string CartanType::to_string() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

LatticeVector::LatticeVector(int rank) : rank_(rank) {
  if (rank < 0 || rank > kMaxRank) fail(ErrorKind::InvalidArgument, "lattice rank out of range");
}

LatticeVector::LatticeVector(std::initializer_list<int> coeffs)
    : LatticeVector(std::span<const int>(coeffs.begin(), coeffs.size())) {}

LatticeVector::LatticeVector(std::span<const int> coeffs) : LatticeVector(static_cast<int>(coeffs.size())) {
  std::copy(coeffs.begin(), coeffs.end(), c_.begin());
}

LatticeVector LatticeVector::unit(int rank, int node) {
  LatticeVector v(rank);
  if (node < 1 || node > rank) fail(ErrorKind::LetterOutOfRange, "node " + std::to_string(node) + " out of range");
  v.c_[node - 1] = 1;
  return v;
}

int LatticeVector::height() const noexcept {
  int h = 0;
  for (int k = 0; k < rank_; ++k) h += c_[k];
  return h;
}

bool LatticeVector::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.begin() + rank_, [](int x) { return x == 0; });
}

bool LatticeVector::is_nonnegative() const noexcept {
  return std::all_of(c_.begin(), c_.begin() + rank_, [](int x) { return x >= 0; });
}

bool LatticeVector::is_positive() const noexcept { return is_nonnegative() && !is_zero(); }

bool LatticeVector::is_negative() const noexcept { return (-*this).is_positive(); }

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) noexcept {
  for (int k = 0; k < kMaxRank; ++k) c_[k] += o.c_[k];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) noexcept {
  for (int k = 0; k < kMaxRank; ++k) c_[k] -= o.c_[k];
  return *this;
}

LatticeVector operator*(int k, LatticeVector a) noexcept {
  for (auto& x : a.c_) x *= k;
  return a;
}

LatticeVector LatticeVector::operator-() const noexcept { return -1 * *this; }

std::size_t LatticeVectorHash::operator()(const LatticeVector& v) const noexcept {
  std::size_t h = static_cast<std::size_t>(v.rank());
  for (int x : v.coeffs()) h = h * 1000003u ^ std::hash<int>{}(x);
  return h;
}

bool height_lex_less(const LatticeVector& a, const LatticeVector& b) noexcept {
  const int ha = a.height();
  const int hb = b.height();
  if (ha != hb) return ha < hb;
  return a < b;
}

RootSystem::RootSystem(CartanType type) : type_(CartanType::make(type.family, type.rank)) {
  cartan_ = cartan_matrix(type_);
  const int n = type_.rank;

  // Breadth-first closure of the simple roots under simple reflections,
  // keeping positive images only.
  std::set<Root> seen;
  std::deque<Root> queue;
  for (int i = 1; i <= n; ++i) {
    auto a = Root::unit(n, i);
    simple_.push_back(a);
    seen.insert(a);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    const Root r = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      Root s = reflect(i, r);
      if (s.is_positive() && seen.insert(s).second) queue.push_back(s);
    }
  }
  positive_.assign(seen.begin(), seen.end());
  std::sort(positive_.begin(), positive_.end(), height_lex_less);
}

int RootSystem::positive_root_index(const Root& v) const noexcept {
  if (v.rank() != rank()) return -1;
  const auto it = std::lower_bound(positive_.begin(), positive_.end(), v, height_lex_less);
  if (it == positive_.end() || *it != v) return -1;
  return static_cast<int>(it - positive_.begin());
}

bool RootSystem::is_root(const Root& v) const noexcept {
  return positive_root_index(v) >= 0 || positive_root_index(-v) >= 0;
}

int RootSystem::pairing(const LatticeVector& v, int i) const noexcept {
  int p = 0;
  for (int j = 1; j <= rank(); ++j) p += cartan(i, j) * v[j - 1];
  return p;
}

Root RootSystem::reflect(int i, const Root& v) const {
  if (i < 1 || i > rank()) fail(ErrorKind::LetterOutOfRange, "simple index " + std::to_string(i) + " out of range");
  Root out = v;
  out[i - 1] -= pairing(v, i);
  return out;
}

std::vector<int> RootSystem::cominuscule_nodes() const {
  std::vector<int> nodes;
  const Root& top = highest_root();
  for (int i = 1; i <= rank(); ++i) {
    if (top[i - 1] == 1) nodes.push_back(i);
  }
  return nodes;
}

std::string RootSystem::simple_root_name(int i) const { return "a" + std::to_string(i); }

std::string RootSystem::format(const LatticeVector& v) const {
  std::string out;
  for (int k = 0; k < v.rank(); ++k) {
    const int c = v[k];
    if (c == 0) continue;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const int mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag);
    out += simple_root_name(k + 1);
  }
  return out.empty() ? "0" : out;
}

bool RootSystem::has_epsilon_coordinates() const noexcept {
  switch (type_.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::D: return true;
    default: return false;
  }
}

namespace {

// Columns are the simple roots written in epsilon coordinates.
std::vector<std::vector<int>> epsilon_basis(CartanType t) {
  const int n = t.rank;
  const int dim = t.family == Family::A ? n + 1 : n;
  std::vector<std::vector<int>> cols(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(dim), 0));
  for (int i = 0; i < n; ++i) {
    auto& col = cols[static_cast<std::size_t>(i)];
    if (i + 1 < dim) {
      col[static_cast<std::size_t>(i)] = 1;
      col[static_cast<std::size_t>(i + 1)] = -1;
    }
  }
  auto& last = cols[static_cast<std::size_t>(n - 1)];
  switch (t.family) {
    case Family::B:
      std::fill(last.begin(), last.end(), 0);
      last[static_cast<std::size_t>(n - 1)] = 1;
      break;
    case Family::C:
      std::fill(last.begin(), last.end(), 0);
      last[static_cast<std::size_t>(n - 1)] = 2;
      break;
    case Family::D:
      std::fill(last.begin(), last.end(), 0);
      last[static_cast<std::size_t>(n - 2)] = 1;
      last[static_cast<std::size_t>(n - 1)] = 1;
      break;
    default: break;
  }
  return cols;
}

}  // namespace

std::vector<int> RootSystem::to_epsilon(const LatticeVector& v) const {
  if (!has_epsilon_coordinates()) fail(ErrorKind::WrongType, "no epsilon coordinates for type " + type_.to_string());
  const auto cols = epsilon_basis(type_);
  std::vector<int> eps(cols.front().size(), 0);
  for (int i = 0; i < rank(); ++i) {
    for (std::size_t k = 0; k < eps.size(); ++k) eps[k] += v[i] * cols[static_cast<std::size_t>(i)][k];
  }
  return eps;
}

LatticeVector RootSystem::from_epsilon(std::span<const int> eps) const {
  if (!has_epsilon_coordinates()) fail(ErrorKind::WrongType, "no epsilon coordinates for type " + type_.to_string());
  const auto cols = epsilon_basis(type_);
  const std::size_t dim = cols.front().size();
  if (eps.size() != dim) fail(ErrorKind::InvalidArgument, "expected " + std::to_string(dim) + " epsilon coordinates");

  std::vector<std::vector<detail::Rational>> rows(dim, std::vector<detail::Rational>(static_cast<std::size_t>(rank())));
  std::vector<detail::Rational> rhs(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    for (int i = 0; i < rank(); ++i) rows[k][static_cast<std::size_t>(i)] = cols[static_cast<std::size_t>(i)][k];
    rhs[k] = eps[k];
  }
  const auto sol = detail::solve_exact(rows, rhs, rank());
  if (!sol) fail(ErrorKind::InvalidArgument, "epsilon vector is not in the span of the roots");
  LatticeVector v(rank());
  for (int i = 0; i < rank(); ++i) {
    const auto& q = (*sol)[static_cast<std::size_t>(i)];
    if (q.denominator() != 1) fail(ErrorKind::InvalidArgument, "epsilon vector is not in the root lattice");
    v[i] = static_cast<int>(q.numerator());
  }
  return v;
}

RootSystem build_root_system(CartanType type) { return RootSystem(type); }

Root reflect(const RootSystem& rs, int i, const Root& v) { return rs.reflect(i, v); }

std::vector<int> cominuscule_nodes(const RootSystem& rs) { return rs.cominuscule_nodes(); }

int classical_positive_root_count(CartanType t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

}  // namespace kltan
