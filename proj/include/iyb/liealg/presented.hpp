#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "iyb/errors.hpp"
#include "iyb/liealg/lie_algebra.hpp"

namespace iyb::liealg {

/// e_target := [e_left, e_right].
struct DerivationRule {
  std::size_t target;
  std::size_t left;
  std::size_t right;
  friend bool operator==(const DerivationRule&, const DerivationRule&) = default;
};

/// A Lie algebra together with a generating set and rules that produce every
/// other basis vector as a bracket of earlier ones. A representation is then
/// fixed by the images of the generators.
template <class R>
class PresentedLieAlgebra {
 public:
  /// Validates that generators and rule targets partition the basis, that
  /// every rule agrees with the bracket table, and that rules are acyclic.
  /// The stored rule order is a valid evaluation order.
  PresentedLieAlgebra(LieAlgebra<R> base, std::vector<std::size_t> generators, std::vector<DerivationRule> rules)
      : base_(std::move(base)), generators_(std::move(generators)) {
    const std::size_t n = base_.dim();
    std::vector<int> owner(n, 0);
    for (auto g : generators_) {
      if (g >= n) throw DomainError("generator index out of range");
      if (owner[g]++ != 0) throw DomainError("basis vector e_" + std::to_string(g) + " listed twice");
    }
    for (const auto& r : rules) {
      if (r.target >= n || r.left >= n || r.right >= n) throw DomainError("rule index out of range");
      if (owner[r.target]++ != 0) {
        throw DomainError("basis vector e_" + std::to_string(r.target) + " is produced more than once");
      }
      auto v = base_.basis_bracket(r.left, r.right);
      for (std::size_t k = 0; k < n; ++k) {
        bool want_one = k == r.target;
        const auto& ring = base_.ring();
        if (!ring.equal(v[k], want_one ? ring.one() : ring.zero())) {
          throw DomainError("rule e_" + std::to_string(r.target) + " = [e_" + std::to_string(r.left) + ", e_" +
                            std::to_string(r.right) + "] disagrees with the bracket table");
        }
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (owner[k] == 0) throw DomainError("basis vector e_" + std::to_string(k) + " is neither generator nor derived");
    }
    // Topological order: repeatedly take rules whose operands are available.
    std::vector<bool> known(n, false);
    for (auto g : generators_) known[g] = true;
    std::vector<DerivationRule> pending = std::move(rules);
    while (!pending.empty()) {
      std::vector<DerivationRule> rest;
      for (const auto& r : pending) {
        if (known[r.left] && known[r.right]) {
          rules_.push_back(r);
          known[r.target] = true;
        } else {
          rest.push_back(r);
        }
      }
      if (rest.size() == pending.size()) throw DomainError("derivation rules contain a cycle");
      pending = std::move(rest);
    }
  }

  const LieAlgebra<R>& base() const { return base_; }
  const std::vector<std::size_t>& generators() const { return generators_; }
  const std::vector<DerivationRule>& rules() const { return rules_; }

  /// True if (i, j) (in either order) is the bracket some rule is built from.
  bool is_rule_pair(std::size_t i, std::size_t j) const {
    for (const auto& r : rules_) {
      if ((r.left == i && r.right == j) || (r.left == j && r.right == i)) return true;
    }
    return false;
  }

  /// All pairs i < j whose bracket relation is not implied by a rule; these
  /// are the constraints a representation must satisfy.
  std::vector<std::pair<std::size_t, std::size_t>> relation_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < base_.dim(); ++i) {
      for (std::size_t j = i + 1; j < base_.dim(); ++j) {
        if (!is_rule_pair(i, j)) out.emplace_back(i, j);
      }
    }
    return out;
  }

 private:
  LieAlgebra<R> base_;
  std::vector<std::size_t> generators_;
  std::vector<DerivationRule> rules_;
};

template <class To, class From>
PresentedLieAlgebra<To> change_ring(const PresentedLieAlgebra<From>& p, const To& ring) {
  return PresentedLieAlgebra<To>(change_ring(p.base(), ring), p.generators(), p.rules());
}

}  // namespace iyb::liealg
