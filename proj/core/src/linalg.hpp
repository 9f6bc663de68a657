#pragma once

#include <optional>
#include <vector>

#include <boost/rational.hpp>

namespace kltan::detail {

using Rational = boost::rational<long long>;

// Solves rows * x = rhs exactly over Q by Gauss-Jordan elimination. Returns
// one solution (free variables set to zero) or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_exact(const std::vector<std::vector<Rational>>& rows,
                                                 const std::vector<Rational>& rhs,
                                                 int columns);

}  // namespace kltan::detail
