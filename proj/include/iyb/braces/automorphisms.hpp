#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "iyb/braces/abelian_group.hpp"
#include "iyb/exactalg/rings.hpp"

namespace iyb::braces {

Perm identity_perm(std::size_t n);
/// (a ∘ b)(x) = a(b(x)).
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
/// Least common multiple of the cycle lengths.
std::uint64_t perm_order(const Perm& a);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

/// True if `perm` is a bijective additive map of `group`.
bool is_automorphism(const FiniteAbelian& group, const Perm& perm);

/// |Aut(A)| from the cyclic decomposition, without enumeration (product over
/// primary parts of the closed-form count for abelian p-groups).
exactalg::Integer automorphism_count(const AbelianGroup& group);

/// All automorphisms, found by searching images of the coordinate generators
/// and pruning as soon as the partial images fail to span a subgroup of the
/// right order. Sorted lexicographically (identity first). Throws
/// BudgetExceeded when |Aut(A)| exceeds `limit`.
std::vector<Perm> automorphisms(const AbelianGroup& group, std::size_t limit = 2'000'000);

/// For a p-group A: the automorphisms that are unitriangular modulo p with
/// respect to the coordinate generators ordered by ascending cyclic order.
/// They form a Sylow p-subgroup of Aut(A); enumerated directly from the
/// matrix parametrization, so Aut(A) itself is never listed. Sorted.
std::vector<Perm> sylow_automorphisms(const AbelianGroup& group, std::size_t limit = 2'000'000);

/// Isomorphism from an elementary abelian group given by its table onto
/// `coords` (same order, all cyclic orders p). iso[x] is the image of x.
/// Basis vectors are picked greedily in element order. Throws DomainError if
/// the groups are not both elementary abelian of the same order.
Perm isomorphism_to(const FiniteAbelian& group, const AbelianGroup& coords);

/// p-part of |Aut(A)| for a p-group A.
exactalg::Integer sylow_order(const AbelianGroup& group);

}  // namespace iyb::braces
