#include "kltan/hecke.hpp"

#include "kltan/error.hpp"

namespace kltan {

WeylElement hecke_mult(const RootSystem& rs, const WeylElement& u, int i) {
  if (i < 1 || i > rs.rank()) fail(ErrorKind::LetterOutOfRange, "letter " + std::to_string(i) + " out of range");
  if (u.has_right_descent(i)) return u;
  return times_simple(rs, u, i);
}

HeckeWordStats demazure_product(const RootSystem& rs, const Word& q) {
  HeckeWordStats out;
  out.delta = identity_element(rs);
  for (int letter : q.letters()) out.delta = hecke_mult(rs, out.delta, letter);
  out.length = static_cast<int>(q.size());
  out.excess = out.length - out.delta.length();
  return out;
}

}  // namespace kltan
