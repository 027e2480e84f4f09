/**
 * @file oracle.hpp
 * @brief Brute-force reference implementations used for cross-checking.
 *
 * Everything here is written as a literal double loop over the input with
 * no shortcuts, no sorting and no shared code with the optimized paths,
 * so it can serve as an independent reference in tests and behind the
 * CLI's --oracle flag. Quadratic; intended for small inputs only.
 */

#ifndef SKYPAR_ORACLE_HPP
#define SKYPAR_ORACLE_HPP

#include <optional>

#include "skypar/core.hpp"

namespace skypar {

/// Skyline by literal all-pairs check: keeps t iff no s dominates t.
Relation skyline_bruteforce(const Relation& r);

/// Grid resistance of skyline tuple t in r, straight from the definition:
/// the smallest 1/g, over g in [2, g_max], for which t's grid projection is
/// dominated inside the projected relation; 1 if that never happens.
/// g_max is floor(1 / min-gap) recomputed here by an all-pairs scan,
/// clamped by cap when given. Returns the denominator: 1, or g in [2, g_max].
int grid_resistance_bruteforce(const Tuple& t, const Relation& r,
                               std::optional<int> cap);

} // namespace skypar

#endif // SKYPAR_ORACLE_HPP
