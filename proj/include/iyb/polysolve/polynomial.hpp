#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "iyb/errors.hpp"
#include "iyb/exactalg/prime_field.hpp"
#include "iyb/exactalg/rings.hpp"

namespace iyb::polysolve {

using exactalg::Integer;
using exactalg::IntegerRing;
using exactalg::PrimeField;

/// Sparse monomial: (variable, exponent) pairs with strictly increasing
/// variables and positive exponents. The empty monomial is 1.
class Monomial {
 public:
  using Factor = std::pair<std::uint32_t, std::uint32_t>;

  Monomial() = default;
  /// Sorts, merges repeated variables and drops zero exponents.
  explicit Monomial(std::vector<Factor> factors);
  static Monomial variable(std::uint32_t var, std::uint32_t exp = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t exponent(std::uint32_t var) const;
  /// One past the largest variable index used (0 for the constant).
  std::uint32_t var_bound() const { return factors_.empty() ? 0 : factors_.back().first + 1; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Storage order only (lexicographic on the factor list); the solver
  /// uses its own term orders.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<Factor> factors_;
};

template <class R>
class Polynomial {
 public:
  using coeff_type = typename R::value_type;
  using Terms = std::map<Monomial, coeff_type>;

  explicit Polynomial(R ring) : ring_(std::move(ring)) {}
  Polynomial(R ring, Terms terms) : ring_(std::move(ring)) {
    for (auto& [m, c] : terms) add_term(m, c);
  }
  static Polynomial constant(const R& ring, const coeff_type& c) {
    Polynomial p(ring);
    p.add_term(Monomial(), c);
    return p;
  }
  static Polynomial variable(const R& ring, std::uint32_t var) {
    Polynomial p(ring);
    p.add_term(Monomial::variable(var), ring.one());
    return p;
  }

  const R& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// 0 for constants; -1 is never returned, the zero polynomial has degree 0.
  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }
  std::uint32_t var_bound() const {
    std::uint32_t b = 0;
    for (const auto& [m, c] : terms_) b = std::max(b, m.var_bound());
    return b;
  }
  /// Constant term, zero if absent.
  coeff_type constant_term() const {
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? ring_.zero() : it->second;
  }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

  void add_term(const Monomial& m, const coeff_type& c) {
    if (ring_.is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second = ring_.add(it->second, c);
      if (ring_.is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial operator+(const Polynomial& o) const {
    check(o);
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
  }
  Polynomial operator-(const Polynomial& o) const {
    check(o);
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, ring_.neg(c));
    return out;
  }
  Polynomial operator-() const {
    Polynomial out(ring_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, ring_.neg(c));
    return out;
  }
  Polynomial operator*(const Polynomial& o) const {
    check(o);
    Polynomial out(ring_);
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ring_.mul(ca, cb));
    }
    return out;
  }
  Polynomial scaled(const coeff_type& k) const {
    Polynomial out(ring_);
    for (const auto& [m, c] : terms_) out.add_term(m, ring_.mul(k, c));
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!(a.ring_ == b.ring_) || a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [m, c] : a.terms_) {
      if (!(m == it->first) || !a.ring_.equal(c, it->second)) return false;
      ++it;
    }
    return true;
  }

  /// Value at a point (one coordinate per variable index).
  coeff_type evaluate(const std::vector<coeff_type>& point) const {
    coeff_type acc = ring_.zero();
    for (const auto& [m, c] : terms_) {
      coeff_type t = c;
      for (const auto& [v, e] : m.factors()) {
        if (v >= point.size()) throw DimensionMismatch("point has fewer coordinates than the polynomial's variables");
        for (std::uint32_t k = 0; k < e; ++k) t = ring_.mul(t, point[v]);
      }
      acc = ring_.add(acc, t);
    }
    return acc;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      const auto& [m, c] = *it;
      if (m.is_one()) {
        out += ring_.to_string(c);
      } else if (ring_.equal(c, ring_.one())) {
        out += m.to_string(names);
      } else {
        out += ring_.to_string(c) + "*" + m.to_string(names);
      }
    }
    return out;
  }

 private:
  void check(const Polynomial& o) const {
    if (!(ring_ == o.ring_)) throw RingMismatch("polynomials over " + ring_.name() + " and " + o.ring_.name());
  }

  R ring_;
  Terms terms_;
};

/// Coefficient-wise reduction Z -> F_p.
inline Polynomial<PrimeField> reduce_mod_p(const Polynomial<IntegerRing>& f, const PrimeField& field) {
  Polynomial<PrimeField> out(field);
  for (const auto& [m, c] : f.terms()) out.add_term(m, field.from_integer(c));
  return out;
}

/// Ring of polynomials over R, in the interface Matrix<R> expects, so that
/// matrices with polynomial entries can be multiplied directly.
template <class R>
class PolynomialRing {
 public:
  using value_type = Polynomial<R>;
  static constexpr bool is_field = false;

  explicit PolynomialRing(R base) : base_(std::move(base)) {}
  const R& base() const { return base_; }

  value_type zero() const { return value_type(base_); }
  value_type one() const { return value_type::constant(base_, base_.one()); }
  value_type from_int(long long v) const { return value_type::constant(base_, base_.from_int(v)); }
  value_type from_integer(const Integer& v) const { return value_type::constant(base_, base_.from_integer(v)); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string to_string(const value_type& a) const { return a.to_string({}); }
  std::string name() const { return base_.name() + "[y]"; }

  friend bool operator==(const PolynomialRing& a, const PolynomialRing& b) { return a.base_ == b.base_; }

 private:
  R base_;
};

}  // namespace iyb::polysolve
