#pragma once

#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "iyb/errors.hpp"
#include "iyb/exactalg/prime_field.hpp"
#include "iyb/exactalg/rings.hpp"

namespace iyb::exactalg {

/// Dense row-major matrix over one of the scalar rings. Every dimension used
/// here is small (at most a dozen or so rows), so no sparse storage.
template <class R>
class Matrix {
 public:
  using ring_type = R;
  using value_type = typename R::value_type;

  Matrix(R ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, ring_.zero()) {}

  Matrix(R ring, std::size_t rows, std::size_t cols, std::vector<value_type> entries)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw DimensionMismatch("matrix entry count " + std::to_string(entries_.size()) + " != " +
                              std::to_string(rows_) + "x" + std::to_string(cols_));
    }
  }

  static Matrix identity(const R& ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, ring.one());
    return m;
  }

  /// Build from small integer literals, reduced into the ring.
  static Matrix from_ints(const R& ring, const std::vector<std::vector<long long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(ring, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw DimensionMismatch("ragged matrix literal");
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, ring.from_int(rows[i][j]));
    }
    return m;
  }

  const R& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<value_type>& entries() const { return entries_; }

  const value_type& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, value_type v) { entries_[i * cols_ + j] = std::move(v); }

  bool is_zero() const {
    for (const auto& e : entries_) {
      if (!ring_.is_zero(e)) return false;
    }
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (!(a.ring_ == b.ring_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
      if (!a.ring_.equal(a.entries_[k], b.entries_[k])) return false;
    }
    return true;
  }

 private:
  R ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> entries_;
};

namespace detail {

template <class R>
void require_same_ring(const Matrix<R>& a, const Matrix<R>& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch("matrices over " + a.ring().name() + " and " + b.ring().name());
}

template <class R>
void require_square(const Matrix<R>& a, const char* what) {
  if (!a.is_square()) {
    throw DimensionMismatch(std::string(what) + " needs a square matrix, got " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()));
  }
}

}  // namespace detail

template <class R>
Matrix<R> mat_mul(const Matrix<R>& a, const Matrix<R>& b) {
  detail::require_same_ring(a, b);
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  const R& ring = a.ring();
  Matrix<R> out(ring, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (ring.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const auto& bkj = b(k, j);
        if (ring.is_zero(bkj)) continue;
        out.set(i, j, ring.add(out(i, j), ring.mul(aik, bkj)));
      }
    }
  }
  return out;
}

template <class R>
Matrix<R> operator*(const Matrix<R>& a, const Matrix<R>& b) {
  return mat_mul(a, b);
}

template <class R>
Matrix<R> operator+(const Matrix<R>& a, const Matrix<R>& b) {
  detail::require_same_ring(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum shape mismatch");
  std::vector<typename R::value_type> e;
  e.reserve(a.entries().size());
  for (std::size_t k = 0; k < a.entries().size(); ++k) e.push_back(a.ring().add(a.entries()[k], b.entries()[k]));
  return Matrix<R>(a.ring(), a.rows(), a.cols(), std::move(e));
}

template <class R>
Matrix<R> operator-(const Matrix<R>& a, const Matrix<R>& b) {
  detail::require_same_ring(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix difference shape mismatch");
  std::vector<typename R::value_type> e;
  e.reserve(a.entries().size());
  for (std::size_t k = 0; k < a.entries().size(); ++k) e.push_back(a.ring().sub(a.entries()[k], b.entries()[k]));
  return Matrix<R>(a.ring(), a.rows(), a.cols(), std::move(e));
}

template <class R>
Matrix<R> scale(const typename R::value_type& c, const Matrix<R>& a) {
  std::vector<typename R::value_type> e;
  e.reserve(a.entries().size());
  for (const auto& x : a.entries()) e.push_back(a.ring().mul(c, x));
  return Matrix<R>(a.ring(), a.rows(), a.cols(), std::move(e));
}

/// ab - ba.
template <class R>
Matrix<R> commutator(const Matrix<R>& a, const Matrix<R>& b) {
  detail::require_square(a, "commutator");
  detail::require_square(b, "commutator");
  if (a.rows() != b.rows()) throw DimensionMismatch("commutator of different sizes");
  return mat_mul(a, b) - mat_mul(b, a);
}

/// Binary exponentiation; n = 0 gives the identity.
template <class R>
Matrix<R> mat_pow(const Matrix<R>& a, unsigned long long n) {
  detail::require_square(a, "mat_pow");
  Matrix<R> result = Matrix<R>::identity(a.ring(), a.rows());
  Matrix<R> base = a;
  while (n != 0) {
    if (n & 1ULL) result = mat_mul(result, base);
    n >>= 1ULL;
    if (n != 0) base = mat_mul(base, base);
  }
  return result;
}

template <class R>
bool is_strictly_upper(const Matrix<R>& a) {
  detail::require_square(a, "is_strictly_upper");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (!a.ring().is_zero(a(i, j))) return false;
    }
  }
  return true;
}

template <class R>
bool is_unipotent_upper(const Matrix<R>& a) {
  detail::require_square(a, "is_unipotent_upper");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!a.ring().equal(a(i, i), a.ring().one())) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (!a.ring().is_zero(a(i, j))) return false;
    }
  }
  return true;
}

/// Entry-wise ring change, e.g. Z -> F_p or Z -> Q.
template <class To, class From>
Matrix<To> change_ring(const Matrix<From>& a, const To& ring) {
  std::vector<typename To::value_type> e;
  e.reserve(a.entries().size());
  for (const auto& x : a.entries()) {
    if constexpr (std::is_same_v<From, IntegerRing>) {
      e.push_back(ring.from_integer(x));
    } else {
      static_assert(std::is_same_v<From, To>, "unsupported ring change");
      e.push_back(x);
    }
  }
  return Matrix<To>(ring, a.rows(), a.cols(), std::move(e));
}

}  // namespace iyb::exactalg
