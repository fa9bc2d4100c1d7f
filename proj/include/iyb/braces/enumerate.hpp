#pragma once

#include <cstddef>
#include <vector>

#include "iyb/braces/holomorph.hpp"

namespace iyb::braces {

enum class EnumerationStrategy {
  /// DFS directly in Hol(A) over automorphisms whose order divides |A|.
  Direct,
  /// For p-groups: DFS in A ⋊ S for a Sylow p-subgroup S of Aut(A), then
  /// conjugate the results by coset representatives of S and deduplicate.
  SylowConjugates,
  /// SylowConjugates when A is a p-group with more than a few thousand
  /// candidate automorphisms, Direct otherwise.
  Auto,
};

struct EnumerationOptions {
  /// Refuse when |Hol(A)| exceeds this.
  std::size_t hol_bound = 100'000;
  EnumerationStrategy strategy = EnumerationStrategy::Auto;
  /// Fan the top-level DFS branches out over OpenMP threads.
  bool parallel = true;
};

/// All regular subgroups of Hol(A), sorted. Each is found exactly once: the
/// search always extends the subgroup by the smallest translation it does
/// not yet contain, so the branch leading to a given subgroup is unique.
std::vector<RegularSubgroup> enumerate_regular_subgroups(const AbelianGroup& group,
                                                         const EnumerationOptions& options = {});

/// Orbits under conjugation by (0, φ), φ ∈ Aut(A). orbit_of[i] is the orbit
/// index of subgroups[i]; orbits are numbered by their lexicographically
/// least member, and representatives[k] is that member.
struct OrbitClassification {
  std::vector<std::size_t> orbit_of;
  std::vector<RegularSubgroup> representatives;
  std::size_t orbit_count() const { return representatives.size(); }
};

/// `subgroups` must be closed under the Aut(A)-action (as the full output of
/// enumerate_regular_subgroups is); throws DomainError otherwise.
OrbitClassification classify_up_to_aut(const AbelianGroup& group, const std::vector<RegularSubgroup>& subgroups);

/// (0, φ) H (0, φ)^{-1}.
RegularSubgroup conjugate(const FiniteAbelian& group, const RegularSubgroup& subgroup, const Perm& phi);

}  // namespace iyb::braces
