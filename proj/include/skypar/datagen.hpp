/**
 * @file datagen.hpp
 * @brief Seedable synthetic datasets in [0,1)^d.
 *
 * Two shapes are provided: independently uniform values (UNI) and values
 * anti-correlated across dimensions (ANT), where tuples cluster around the
 * hyperplane sum(values) = d/2 so that being good in one dimension means
 * being bad in others. ANT relations have far larger skylines than UNI at
 * the same size.
 *
 * Determinism: all randomness comes from std::mt19937_64, whose output
 * sequence is fixed by the standard, mapped to doubles with explicit
 * arithmetic only (no distribution classes, whose streams are
 * implementation-defined). The same spec therefore yields the same bytes
 * on any conforming platform. The exact recipes are spelled out in the
 * README.
 */

#ifndef SKYPAR_DATAGEN_HPP
#define SKYPAR_DATAGEN_HPP

#include "skypar/core.hpp"

namespace skypar {

enum class Distribution { Uniform, Anticorrelated };

const char* distribution_name(Distribution d);
Distribution distribution_from_name(const std::string& name);

struct GenSpec {
    std::size_t count = 0;
    int dims = 1;
    Distribution dist = Distribution::Uniform;
    std::uint64_t seed = 0;
};

/// Coordinates independently uniform in [0,1).
Relation gen_uniform(const GenSpec& spec);

/// Tuples near the hyperplane sum = d/2: a normal plane offset is split
/// into equal shares, then mass is repeatedly transferred between random
/// coordinate pairs, preserving the sum; pairwise correlations come out
/// negative. Values clamped to [0,1).
Relation gen_anticorrelated(const GenSpec& spec);

/// Dispatches on spec.dist.
Relation generate(const GenSpec& spec);

} // namespace skypar

#endif // SKYPAR_DATAGEN_HPP
