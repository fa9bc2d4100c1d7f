#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iyb/braces/abelian_group.hpp"
#include "iyb/braces/brace.hpp"
#include "iyb/exactalg/matrix.hpp"
#include "iyb/exactalg/prime_field.hpp"

namespace iyb::braces {

struct OrderEqualityReport {
  std::uint64_t prime = 0;
  /// Cyclic exponents of (B,+): B ≅ Z/p^α_1 × ... × Z/p^α_m.
  std::vector<unsigned> additive_exponents;
  std::vector<std::uint64_t> additive_orders;
  std::vector<std::uint64_t> multiplicative_orders;
  bool orders_equal = true;
  /// First element whose two orders differ.
  std::optional<Element> first_mismatch;
  /// m + 2 <= p, the hypothesis under which the orders must agree.
  bool hypothesis_holds = false;
  bool multiplicative_abelian = false;
  /// Only when (B,·) is abelian: whether its invariant factors match (B,+).
  std::optional<bool> isomorphic_groups;
};

/// Throws DomainError if |B| is not a prime power.
OrderEqualityReport check_order_equality(const Brace& brace);

std::uint64_t multiplicative_order(const Brace& brace, Element x);

/// U^p = Id for a unipotent upper triangular U over F_p.
bool unipotent_power_is_identity(const exactalg::Matrix<exactalg::PrimeField>& u);

/// Random element of U_n(F_p).
template <class Rng>
exactalg::Matrix<exactalg::PrimeField> random_unipotent(const exactalg::PrimeField& field, std::size_t n, Rng& rng) {
  auto u = exactalg::Matrix<exactalg::PrimeField>::identity(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) u.set(i, j, static_cast<std::uint64_t>(rng() % field.p()));
  }
  return u;
}

/// (M - Id)^m(A) ⊆ pA, with m the rank of the p-group A.
bool automorphism_is_p_nilpotent(const AbelianGroup& group, const Perm& m);

struct PNilpotenceReport {
  /// "all automorphisms" when Aut(A) was listed and filtered to p-power
  /// order, "sylow subgroup" when the unitriangular Sylow subgroup was
  /// checked instead (enough, since the property is invariant under
  /// conjugation in Aut(A) and every p-element is conjugate into it).
  std::string method;
  std::size_t checked = 0;
  std::vector<Perm> failures;
};

/// Checks every p-power-order automorphism of the p-group A, switching to
/// the Sylow route when |Aut(A)| exceeds `brute_force_limit`.
PNilpotenceReport check_p_nilpotence(const AbelianGroup& group, std::size_t brute_force_limit = 200'000);

/// All p-groups of order p^k, k >= 1, with |A| <= max_order, as lists of
/// cyclic orders in ascending order.
std::vector<AbelianGroup> abelian_p_groups_up_to(std::size_t max_order);

/// All abelian groups of order <= max_order (order >= 2) in invariant-factor
/// form d_1 | d_2 | ... .
std::vector<AbelianGroup> abelian_groups_up_to(std::size_t max_order);

}  // namespace iyb::braces
