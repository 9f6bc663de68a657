#pragma once

#include "kltan/rootsys.hpp"
#include "kltan/weyl.hpp"

namespace kltan {

// The 0-Hecke monoid on basis elements H_w: H_u H_s = H_{us} if l(us) > l(u),
// and H_u otherwise. Only basis-element products are represented.

struct HeckeWordStats {
  WeylElement delta;  // Demazure product
  int length = 0;     // word length
  int excess = 0;     // length - l(delta); zero iff the word is reduced
};

WeylElement hecke_mult(const RootSystem& rs, const WeylElement& u, int i);

HeckeWordStats demazure_product(const RootSystem& rs, const Word& q);

}  // namespace kltan
