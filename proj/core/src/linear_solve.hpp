#pragma once

#include <optional>
#include <vector>

#include "weave/rational.hpp"

namespace weave::detail {

/// Solves A c = b over Q by Gauss-Jordan elimination. Returns one solution
/// (free variables set to zero) or nullopt when the system is inconsistent.
/// `rank_out`, when given, receives the rank of A.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b,
                                                  std::size_t* rank_out = nullptr);

}  // namespace weave::detail
