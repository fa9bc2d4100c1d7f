#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iyb/errors.hpp"
#include "iyb/exactalg/linalg.hpp"
#include "iyb/exactalg/matrix.hpp"

namespace iyb::liealg {

using exactalg::IntegerRing;
using exactalg::PrimeField;
using exactalg::RationalRing;

/// One nonzero structure constant: coefficient of e_k.
template <class R>
struct SparseTerm {
  std::size_t index;
  typename R::value_type coeff;
};

/// Finite-dimensional Lie algebra given by structure constants on a fixed
/// basis e_0..e_{n-1}. Only [e_i, e_j] with i < j is stored; the rest follows
/// from antisymmetry.
template <class R>
class LieAlgebra {
 public:
  using value_type = typename R::value_type;
  using vector_type = std::vector<value_type>;

  /// The abelian algebra of the given dimension.
  LieAlgebra(R ring, std::size_t dim) : ring_(std::move(ring)), dim_(dim), table_(dim * (dim == 0 ? 0 : dim - 1) / 2) {}

  const R& ring() const { return ring_; }
  std::size_t dim() const { return dim_; }

  /// Define [e_i, e_j] = out (dense coefficient vector). Passing i > j stores
  /// the negated vector on (j, i).
  void set_bracket(std::size_t i, std::size_t j, const vector_type& out) {
    check_index(i);
    check_index(j);
    if (i == j) throw DomainError("[e_i, e_i] is always zero and cannot be assigned");
    if (out.size() != dim_) throw DimensionMismatch("bracket output has wrong length");
    std::vector<SparseTerm<R>> terms;
    for (std::size_t k = 0; k < dim_; ++k) {
      if (ring_.is_zero(out[k])) continue;
      terms.push_back({k, i < j ? out[k] : ring_.neg(out[k])});
    }
    table_[pair_index(std::min(i, j), std::max(i, j))] = std::move(terms);
  }

  /// Convenience: integer coefficients given as (k, c) pairs.
  void set_bracket(std::size_t i, std::size_t j, std::initializer_list<std::pair<std::size_t, long long>> out) {
    vector_type v(dim_, ring_.zero());
    for (auto [k, c] : out) {
      check_index(k);
      v[k] = ring_.add(v[k], ring_.from_int(c));
    }
    set_bracket(i, j, v);
  }

  /// Stored constants for i < j.
  const std::vector<SparseTerm<R>>& structure(std::size_t i, std::size_t j) const {
    return table_[pair_index(i, j)];
  }

  vector_type basis_vector(std::size_t i) const {
    check_index(i);
    vector_type v(dim_, ring_.zero());
    v[i] = ring_.one();
    return v;
  }

  vector_type zero_vector() const { return vector_type(dim_, ring_.zero()); }

  /// [e_i, e_j] as a dense vector.
  vector_type basis_bracket(std::size_t i, std::size_t j) const {
    vector_type out = zero_vector();
    if (i == j) return out;
    const auto& terms = table_[pair_index(std::min(i, j), std::max(i, j))];
    for (const auto& t : terms) out[t.index] = i < j ? t.coeff : ring_.neg(t.coeff);
    return out;
  }

  /// Bilinear antisymmetric extension of the table.
  vector_type bracket(const vector_type& x, const vector_type& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("bracket operand has wrong length");
    vector_type out = zero_vector();
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = i + 1; j < dim_; ++j) {
        const auto& terms = table_[pair_index(i, j)];
        if (terms.empty()) continue;
        bool xi = !ring_.is_zero(x[i]), xj = !ring_.is_zero(x[j]);
        bool yi = !ring_.is_zero(y[i]), yj = !ring_.is_zero(y[j]);
        if (!((xi && yj) || (xj && yi))) continue;
        value_type c = ring_.sub(ring_.mul(x[i], y[j]), ring_.mul(x[j], y[i]));
        if (ring_.is_zero(c)) continue;
        for (const auto& t : terms) out[t.index] = ring_.add(out[t.index], ring_.mul(c, t.coeff));
      }
    }
    return out;
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    if (!(a.ring_ == b.ring_) || a.dim_ != b.dim_) return false;
    for (std::size_t i = 0; i < a.dim_; ++i) {
      for (std::size_t j = i + 1; j < a.dim_; ++j) {
        auto va = a.basis_bracket(i, j);
        auto vb = b.basis_bracket(i, j);
        for (std::size_t k = 0; k < a.dim_; ++k) {
          if (!a.ring_.equal(va[k], vb[k])) return false;
        }
      }
    }
    return true;
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= dim_) throw DimensionMismatch("basis index " + std::to_string(i) + " out of range");
  }
  std::size_t pair_index(std::size_t i, std::size_t j) const {
    // Row-major over the strict upper triangle.
    return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
  }

  R ring_;
  std::size_t dim_;
  std::vector<std::vector<SparseTerm<R>>> table_;
};

/// Basis triples whose Jacobi sum is nonzero. Empty means the table defines a
/// Lie algebra (antisymmetry holds by construction).
struct JacobiReport {
  std::vector<std::array<std::size_t, 3>> failures;
  bool valid() const { return failures.empty(); }
};

template <class R>
JacobiReport validate(const LieAlgebra<R>& lie) {
  JacobiReport report;
  const auto& ring = lie.ring();
  const std::size_t n = lie.dim();
  std::vector<typename LieAlgebra<R>::vector_type> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(lie.basis_vector(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        auto a = lie.bracket(lie.basis_bracket(i, j), basis[k]);
        auto b = lie.bracket(lie.basis_bracket(j, k), basis[i]);
        auto c = lie.bracket(lie.basis_bracket(k, i), basis[j]);
        for (std::size_t t = 0; t < n; ++t) {
          if (!ring.is_zero(ring.add(ring.add(a[t], b[t]), c[t]))) {
            report.failures.push_back({i, j, k});
            break;
          }
        }
      }
    }
  }
  return report;
}

/// Coefficient-wise ring change (Z -> F_p, Z -> Q).
template <class To, class From>
LieAlgebra<To> change_ring(const LieAlgebra<From>& lie, const To& ring) {
  LieAlgebra<To> out(ring, lie.dim());
  for (std::size_t i = 0; i < lie.dim(); ++i) {
    for (std::size_t j = i + 1; j < lie.dim(); ++j) {
      std::vector<typename To::value_type> v(lie.dim(), ring.zero());
      for (const auto& t : lie.structure(i, j)) {
        if constexpr (std::is_same_v<From, IntegerRing>) {
          v[t.index] = ring.from_integer(t.coeff);
        } else {
          static_assert(std::is_same_v<From, To>, "unsupported ring change");
          v[t.index] = t.coeff;
        }
      }
      out.set_bracket(i, j, v);
    }
  }
  return out;
}

/// L/pL as an F_p-algebra. Throws NotPrime for composite p.
inline LieAlgebra<PrimeField> reduce_mod_p(const LieAlgebra<IntegerRing>& lie, std::uint64_t p) {
  return change_ring(lie, PrimeField(p));
}

namespace detail {

template <exactalg::Field R>
std::vector<std::size_t> lower_central_dims_field(const LieAlgebra<R>& lie) {
  const auto& ring = lie.ring();
  const std::size_t n = lie.dim();
  std::vector<std::vector<typename R::value_type>> current;
  for (std::size_t i = 0; i < n; ++i) current.push_back(lie.basis_vector(i));
  std::vector<std::size_t> dims{n};
  while (!current.empty()) {
    std::vector<std::vector<typename R::value_type>> products;
    for (std::size_t i = 0; i < n; ++i) {
      auto ei = lie.basis_vector(i);
      for (const auto& v : current) products.push_back(lie.bracket(ei, v));
    }
    auto next = exactalg::span_basis(ring, n, products);
    if (next.size() == current.size()) break;  // stabilized above zero
    dims.push_back(next.size());
    current = std::move(next);
  }
  return dims;
}

}  // namespace detail

/// Dimensions of L ⊇ [L,L] ⊇ [L,[L,L]] ⊇ ... . The list ends with 0 for a
/// nilpotent algebra, otherwise with the dimension at which it stabilizes.
/// Over Z the ranks are taken over Q (torsion is ignored).
template <class R>
std::vector<std::size_t> lower_central_series(const LieAlgebra<R>& lie) {
  if constexpr (std::is_same_v<R, IntegerRing>) {
    return detail::lower_central_dims_field(change_ring(lie, RationalRing{}));
  } else {
    return detail::lower_central_dims_field(lie);
  }
}

/// Number of strict steps of the lower central series down to 0, or nullopt
/// when the series stabilizes at a nonzero term (not nilpotent).
template <class R>
std::optional<std::size_t> nilpotency_class(const LieAlgebra<R>& lie) {
  auto dims = lower_central_series(lie);
  if (dims.back() != 0) return std::nullopt;
  return dims.size() - 1;
}

/// Basis of the center {x : [x, e_j] = 0 for all j}, computed as a kernel.
template <exactalg::Field R>
std::vector<typename LieAlgebra<R>::vector_type> center(const LieAlgebra<R>& lie) {
  const std::size_t n = lie.dim();
  exactalg::Matrix<R> ad(lie.ring(), n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto v = lie.basis_bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) ad.set(j * n + k, i, v[k]);
    }
  }
  return exactalg::kernel(ad);
}

}  // namespace iyb::liealg
