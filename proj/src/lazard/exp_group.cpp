#include "iyb/lazard/exp_group.hpp"

#include <algorithm>
#include <unordered_map>

namespace iyb::lazard {

ExpGroup::ExpGroup(LieAlgebra<PrimeField> lie) : lie_(std::move(lie)) {
  const auto cls = liealg::nilpotency_class(lie_);
  const std::uint64_t p = lie_.ring().p();
  if (!cls) throw DomainError("Lie algebra is not nilpotent; no exp group");
  if (*cls >= p) {
    throw DomainError("nilpotency class " + std::to_string(*cls) + " is not below p = " + std::to_string(p));
  }
  if (*cls > kMaxBchDegree) throw DomainError("nilpotency class above the supported BCH degree");
  class_ = static_cast<unsigned>(*cls);
  if (class_ == 0) return;  // zero algebra
  const auto& f = lie_.ring();
  for (const auto& t : bch_symbolic(class_).terms) {
    auto num = f.from_integer(t.coeff.get_num());
    auto den = f.from_integer(t.coeff.get_den());
    terms_.push_back({t.word, f.mul(num, f.inv(den))});
  }
}

ExpGroup::Vec ExpGroup::product(const Vec& x, const Vec& y) const {
  const auto& f = lie_.ring();
  if (x.size() != lie_.dim() || y.size() != lie_.dim()) throw DimensionMismatch("vector length differs from algebra dimension");
  // Each Lyndon monomial is evaluated once; its standard factors are
  // themselves Lyndon words and come out of the same memo.
  std::unordered_map<std::string, Vec> memo{{"x", x}, {"y", y}};
  auto eval = [&](auto&& self, const std::string& w) -> const Vec& {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    auto [u, v] = standard_factorization(w);
    Vec a = self(self, u);
    Vec b = self(self, v);
    return memo.emplace(w, lie_.bracket(a, b)).first->second;
  };
  Vec out = lie_.zero_vector();
  for (const auto& t : terms_) {
    if (t.coeff == 0) continue;
    const Vec& m = eval(eval, t.word);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = f.add(out[k], f.mul(t.coeff, m[k]));
  }
  if (class_ == 0) {
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = f.add(x[k], y[k]);
  }
  return out;
}

ExpGroup::Vec ExpGroup::inverse(const Vec& x) const {
  Vec out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = lie_.ring().neg(x[k]);
  return out;
}

ExpGroup::Vec ExpGroup::power(const Vec& x, std::uint64_t k) const {
  Vec result = lie_.zero_vector();
  Vec base = x;
  for (; k > 0; k >>= 1U) {
    if (k & 1U) result = product(result, base);
    base = product(base, base);
  }
  return result;
}

std::uint64_t ExpGroup::order(const Vec& x) const {
  const Vec zero = lie_.zero_vector();
  std::uint64_t k = 1;
  for (Vec y = x; y != zero; y = product(y, x)) ++k;
  return k;
}

ExpGroup::Vec exp_product(const LieAlgebra<PrimeField>& lie, const ExpGroup::Vec& x, const ExpGroup::Vec& y) {
  return ExpGroup(lie).product(x, y);
}

std::uint64_t group_element_order(const LieAlgebra<PrimeField>& lie, const ExpGroup::Vec& x) {
  return ExpGroup(lie).order(x);
}

std::uint64_t additive_order(const PrimeField& field, const ExpGroup::Vec& x) {
  return std::all_of(x.begin(), x.end(), [](auto v) { return v == 0; }) ? 1 : field.p();
}

}  // namespace iyb::lazard
