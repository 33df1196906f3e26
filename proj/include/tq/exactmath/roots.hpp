#pragma once

#include "tq/exactmath/unipoly.hpp"

#include <vector>

namespace tq {

/// Distinct rational roots of a nonzero polynomial, ascending. Found by
/// lifting simple roots modulo a prime and rational reconstruction, then
/// confirmed by exact evaluation.
std::vector<Rational> rational_roots(const UniPoly& p);

}  // namespace tq
