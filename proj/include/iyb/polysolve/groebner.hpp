#pragma once

#include <cstddef>
#include <vector>

#include "iyb/polysolve/system.hpp"

namespace iyb::polysolve {

enum class MonomialOrder { Grevlex, Lex };

struct GroebnerOptions {
  MonomialOrder order = MonomialOrder::Grevlex;
  /// Refuse up front when (number of variables) x (maximum input degree)
  /// exceeds this.
  std::size_t max_complexity = 256;
  /// Abort with BudgetExceeded after this many S-polynomial reductions.
  std::size_t max_reductions = 20'000;
  /// Reduce batches of S-polynomials concurrently. The reduced basis is
  /// unique, so the output does not depend on this flag.
  bool parallel = true;
};

struct GroebnerResult {
  /// Reduced, monic, sorted by increasing leading monomial.
  std::vector<Polynomial<PrimeField>> basis;
  /// 1 lies in the ideal, i.e. basis = {1}.
  bool inconsistent = false;
  std::size_t reductions = 0;
  std::size_t pairs_skipped = 0;
};

/// Buchberger's algorithm with normal selection and the Gebauer-Möller
/// pair criteria. Variable 0 is the largest variable.
GroebnerResult buchberger(const PolySystem<PrimeField>& system, const GroebnerOptions& options = {});

/// Appends x^p - x for every variable.
PolySystem<PrimeField> with_field_equations(const PolySystem<PrimeField>& system);

/// Remainder of f under full reduction by `divisors` (in the given order).
Polynomial<PrimeField> normal_form(const Polynomial<PrimeField>& f, const std::vector<Polynomial<PrimeField>>& divisors,
                                   MonomialOrder order);

/// Every S-polynomial of the set reduces to zero modulo the set.
bool is_groebner_basis(const std::vector<Polynomial<PrimeField>>& basis, MonomialOrder order);

}  // namespace iyb::polysolve
