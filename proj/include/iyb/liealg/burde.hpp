#pragma once

#include <array>
#include <string>

#include "iyb/errors.hpp"
#include "iyb/liealg/lie_algebra.hpp"
#include "iyb/liealg/presented.hpp"

namespace iyb::liealg {

/// Which admissibility condition on the thirteen parameters failed.
enum class BurdeConstraint {
  LambdaOneNonzero,     // lambda1 != 0
  LambdaSeven,          // lambda7 = -lambda1
  LambdaEleven,         // lambda11 = 3 lambda1
  LambdaTwelve,         // lambda1 lambda12 = -lambda1 (9 lambda2 + 16 lambda8) + lambda13 (2 lambda3 + lambda9)
  ThreeLambdaTwoPlusEight,  // 3 lambda2 + lambda8 != 0
};

std::string constraint_name(BurdeConstraint c);

class BurdeConstraintError : public DomainError {
 public:
  explicit BurdeConstraintError(BurdeConstraint c)
      : DomainError("parameter constraint violated: " + constraint_name(c)), constraint_(c) {}
  BurdeConstraint constraint() const { return constraint_; }

 private:
  BurdeConstraint constraint_;
};

/// lambda1..lambda13, stored 0-based (lambda[0] is lambda1).
template <class R>
struct LambdaParams {
  std::array<typename R::value_type, 13> lambda;

  static LambdaParams from_ints(const R& ring, const std::array<long long, 13>& values) {
    LambdaParams out;
    for (std::size_t i = 0; i < 13; ++i) out.lambda[i] = ring.from_int(values[i]);
    return out;
  }
  const typename R::value_type& operator()(int one_based) const { return lambda[static_cast<std::size_t>(one_based - 1)]; }
};

/// The parameters that give the concrete 10-dimensional algebra used
/// throughout: lambda1 = lambda2 = 1, lambda7 = -1, lambda8 = -2,
/// lambda9 = -25, lambda11 = 3, lambda12 = -2, lambda13 = 1, rest 0.
inline constexpr std::array<long long, 13> kPaperLambdas = {1, 1, 0, 0, 0, 0, -1, -2, -25, 0, 3, -2, 1};

/// Check every admissibility condition; throws BurdeConstraintError naming
/// the first violated one. The lambda12 condition is checked with the
/// denominator lambda1 cleared.
template <class R>
void check_lambda_constraints(const R& ring, const LambdaParams<R>& l) {
  auto c = [&](long long v) { return ring.from_int(v); };
  if (ring.is_zero(l(1))) throw BurdeConstraintError(BurdeConstraint::LambdaOneNonzero);
  if (!ring.equal(l(7), ring.neg(l(1)))) throw BurdeConstraintError(BurdeConstraint::LambdaSeven);
  if (!ring.equal(l(11), ring.mul(c(3), l(1)))) throw BurdeConstraintError(BurdeConstraint::LambdaEleven);
  auto lhs = ring.mul(l(1), l(12));
  auto rhs = ring.add(ring.neg(ring.mul(l(1), ring.add(ring.mul(c(9), l(2)), ring.mul(c(16), l(8))))),
                      ring.mul(l(13), ring.add(ring.mul(c(2), l(3)), l(9))));
  if (!ring.equal(lhs, rhs)) throw BurdeConstraintError(BurdeConstraint::LambdaTwelve);
  if (ring.is_zero(ring.add(ring.mul(c(3), l(2)), l(8)))) {
    throw BurdeConstraintError(BurdeConstraint::ThreeLambdaTwoPlusEight);
  }
}

/// Build the 10-dimensional lambda-parametrized bracket table without checking
/// the parameter constraints (the result need not satisfy Jacobi).
template <class R>
LieAlgebra<R> burde_brackets_unchecked(const R& ring, const LambdaParams<R>& l) {
  LieAlgebra<R> lie(ring, 10);
  using V = typename LieAlgebra<R>::vector_type;
  auto c = [&](long long v) { return ring.from_int(v); };
  auto lin = [&](std::initializer_list<std::pair<int, typename R::value_type>> terms) {
    V v(10, ring.zero());
    for (const auto& [k, x] : terms) v[static_cast<std::size_t>(k)] = ring.add(v[static_cast<std::size_t>(k)], x);
    return v;
  };
  auto sub = [&](const auto& a, const auto& b) { return ring.sub(a, b); };
  auto mul = [&](long long k, const auto& a) { return ring.mul(c(k), a); };

  for (std::size_t i = 1; i <= 8; ++i) lie.set_bracket(0, i, lie.basis_vector(i + 1));
  // [e1,e2] = l1 e4 + ... + l6 e9 ; [e1,e3] = l1 e5 + ... + l5 e9
  lie.set_bracket(1, 2, lin({{4, l(1)}, {5, l(2)}, {6, l(3)}, {7, l(4)}, {8, l(5)}, {9, l(6)}}));
  lie.set_bracket(1, 3, lin({{5, l(1)}, {6, l(2)}, {7, l(3)}, {8, l(4)}, {9, l(5)}}));
  lie.set_bracket(1, 4, lin({{6, sub(l(1), l(7))}, {7, sub(l(2), l(8))}, {8, sub(l(3), l(9))}, {9, sub(l(4), l(10))}}));
  lie.set_bracket(1, 5, lin({{7, sub(l(1), mul(2, l(7)))}, {8, sub(l(2), mul(2, l(8)))}, {9, sub(l(3), mul(2, l(9)))}}));
  lie.set_bracket(1, 6, lin({{8, ring.add(sub(l(1), mul(3, l(7))), l(11))}, {9, ring.add(sub(l(2), mul(3, l(8))), l(12))}}));
  lie.set_bracket(1, 7, lin({{9, ring.add(sub(l(1), mul(4, l(7))), mul(3, l(11)))}}));
  lie.set_bracket(1, 8, lin({{9, ring.neg(l(13))}}));
  lie.set_bracket(2, 3, lin({{6, l(7)}, {7, l(8)}, {8, l(9)}, {9, l(10)}}));
  lie.set_bracket(2, 4, lin({{7, l(7)}, {8, l(8)}, {9, l(9)}}));
  lie.set_bracket(2, 5, lin({{8, sub(l(7), l(11))}, {9, sub(l(8), l(12))}}));
  lie.set_bracket(2, 6, lin({{9, sub(l(7), mul(2, l(11)))}}));
  lie.set_bracket(2, 7, lin({{9, l(13)}}));
  lie.set_bracket(3, 4, lin({{8, l(11)}, {9, l(12)}}));
  lie.set_bracket(3, 5, lin({{9, l(11)}}));
  lie.set_bracket(3, 6, lin({{9, ring.neg(l(13))}}));
  lie.set_bracket(4, 5, lin({{9, l(13)}}));
  return lie;
}

/// Member of the family after checking the admissibility conditions.
template <class R>
LieAlgebra<R> burde_family(const R& ring, const LambdaParams<R>& l) {
  check_lambda_constraints(ring, l);
  return burde_brackets_unchecked(ring, l);
}

/// The concrete algebra L, generated by e_0 and e_1 with e_{i+1} = [e_0, e_i].
template <class R>
PresentedLieAlgebra<R> paper_L(const R& ring) {
  auto lie = burde_family(ring, LambdaParams<R>::from_ints(ring, kPaperLambdas));
  std::vector<DerivationRule> rules;
  for (std::size_t i = 1; i <= 8; ++i) rules.push_back({i + 1, 0, i});
  return PresentedLieAlgebra<R>(std::move(lie), {0, 1}, std::move(rules));
}

/// Three-dimensional Heisenberg algebra [e_0, e_1] = e_2, presented by e_0, e_1.
template <class R>
PresentedLieAlgebra<R> heisenberg(const R& ring) {
  LieAlgebra<R> lie(ring, 3);
  lie.set_bracket(0, 1, lie.basis_vector(2));
  return PresentedLieAlgebra<R>(std::move(lie), {0, 1}, {{2, 0, 1}});
}

/// Four-dimensional filiform algebra [e_0, e_1] = e_2, [e_0, e_2] = e_3
/// (class 3); it is the quotient of L by the fourth lower-central term.
template <class R>
PresentedLieAlgebra<R> filiform4(const R& ring) {
  LieAlgebra<R> lie(ring, 4);
  lie.set_bracket(0, 1, lie.basis_vector(2));
  lie.set_bracket(0, 2, lie.basis_vector(3));
  return PresentedLieAlgebra<R>(std::move(lie), {0, 1}, {{2, 0, 1}, {3, 0, 2}});
}

}  // namespace iyb::liealg
