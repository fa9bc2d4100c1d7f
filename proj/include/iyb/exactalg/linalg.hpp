#pragma once

#include <cstddef>
#include <vector>

#include "iyb/errors.hpp"
#include "iyb/exactalg/matrix.hpp"

namespace iyb::exactalg {

template <class R>
concept Field = R::is_field;

template <class R>
using Vector = std::vector<typename R::value_type>;

/// Reduced row echelon form with the pivot column of each nonzero row.
template <class R>
struct RowEchelon {
  Matrix<R> form;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

template <Field R>
RowEchelon<R> row_reduce(Matrix<R> m) {
  const R& ring = m.ring();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && ring.is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        auto tmp = m(row, j);
        m.set(row, j, m(pivot, j));
        m.set(pivot, j, std::move(tmp));
      }
    }
    auto inv = ring.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m.set(row, j, ring.mul(inv, m(row, j)));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || ring.is_zero(m(i, col))) continue;
      auto factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        m.set(i, j, ring.sub(m(i, j), ring.mul(factor, m(row, j))));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <Field R>
std::size_t rank(const Matrix<R>& m) {
  return row_reduce(m).rank();
}

/// Basis of {x : m x = 0}, one vector per free column, in the canonical
/// form read off the reduced echelon matrix.
template <Field R>
std::vector<Vector<R>> kernel(const Matrix<R>& m) {
  const R& ring = m.ring();
  auto ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<Vector<R>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector<R> v(m.cols(), ring.zero());
    v[free] = ring.one();
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = ring.neg(ech.form(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Reduced echelon basis of the span of the given vectors (all of length n).
template <Field R>
std::vector<Vector<R>> span_basis(const R& ring, std::size_t n, const std::vector<Vector<R>>& vectors) {
  std::vector<typename R::value_type> entries;
  entries.reserve(vectors.size() * n);
  for (const auto& v : vectors) {
    if (v.size() != n) throw DimensionMismatch("span_basis: vector length mismatch");
    entries.insert(entries.end(), v.begin(), v.end());
  }
  auto ech = row_reduce(Matrix<R>(ring, vectors.size(), n, std::move(entries)));
  std::vector<Vector<R>> basis;
  for (std::size_t r = 0; r < ech.rank(); ++r) {
    basis.emplace_back(ech.form.entries().begin() + static_cast<std::ptrdiff_t>(r * n),
                       ech.form.entries().begin() + static_cast<std::ptrdiff_t>((r + 1) * n));
  }
  return basis;
}

/// Gauss-Jordan inverse over F_p. Throws DomainError when singular.
inline Matrix<PrimeField> inverse(const Matrix<PrimeField>& m) {
  detail::require_square(m, "inverse");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  const PrimeField& f = m.ring();
  Matrix<PrimeField> aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m(i, j));
    aug.set(i, n + i, f.one());
  }
  auto ech = row_reduce(std::move(aug));
  if (ech.rank() < n || ech.pivots[n - 1] != n - 1) throw DomainError("matrix is singular");
  Matrix<PrimeField> out(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, ech.form(i, n + j));
  }
  return out;
}

}  // namespace iyb::exactalg
