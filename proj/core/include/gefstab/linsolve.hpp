#pragma once

#include <optional>
#include <vector>

#include "gefstab/rational.hpp"

namespace gefstab {

// Dense exact solve of rows * x = rhs over Q by Gauss-Jordan elimination.
// Returns the solution with every free variable set to zero, or nullopt
// when the system is inconsistent.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> rows,
                                                  std::vector<Rational> rhs, std::size_t nunknowns);

}  // namespace gefstab

namespace gefstab {

// Rank of a dense rational matrix.
std::size_t rank(std::vector<std::vector<Rational>> rows);

}  // namespace gefstab
