#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "iyb/polysolve/system.hpp"

namespace iyb::polysolve {

inline constexpr std::uint64_t kSolveSmallLimit = 10'000'000;

/// Every point of F_p^n (n = number of system variables) where all
/// polynomials vanish, in lexicographic order of coordinates. Throws
/// BudgetExceeded when p^n > kSolveSmallLimit.
std::vector<std::vector<std::uint64_t>> solve_small(const PolySystem<PrimeField>& system, bool parallel = true);

/// Random system for oracle comparisons: `count` polynomials in `nvars`
/// variables of total degree <= max_degree, each with 1..max_terms terms.
/// Draws from std::mt19937_64 with plain modular reduction so the corpus is
/// identical on every platform.
PolySystem<PrimeField> random_system(std::mt19937_64& rng, const PrimeField& field, std::size_t nvars,
                                     std::size_t count, unsigned max_degree, std::size_t max_terms);

}  // namespace iyb::polysolve
