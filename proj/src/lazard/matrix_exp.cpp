#include "iyb/lazard/matrix_exp.hpp"

#include <string>

namespace iyb::lazard {

namespace {

void require_small_size(const FpMatrix& a) {
  const std::size_t m = a.rows();
  if (m >= 2 && a.ring().p() <= m - 1) {
    throw DomainError("exp/log on " + std::to_string(m) + "x" + std::to_string(m) + " matrices needs p > " +
                      std::to_string(m - 1));
  }
}

}  // namespace

FpMatrix mat_exp(const FpMatrix& n) {
  if (!exactalg::is_strictly_upper(n)) throw DomainError("mat_exp needs a strictly upper triangular matrix");
  require_small_size(n);
  const auto& f = n.ring();
  const std::size_t m = n.rows();
  FpMatrix sum = FpMatrix::identity(f, m);
  FpMatrix term = sum;  // N^k / k!
  for (std::size_t k = 1; k < m; ++k) {
    term = exactalg::scale(f.inv(f.from_int(static_cast<long long>(k))), term * n);
    sum = sum + term;
  }
  return sum;
}

FpMatrix mat_log(const FpMatrix& u) {
  if (!exactalg::is_unipotent_upper(u)) throw DomainError("mat_log needs a unipotent upper triangular matrix");
  require_small_size(u);
  const auto& f = u.ring();
  const std::size_t m = u.rows();
  const FpMatrix n = u - FpMatrix::identity(f, m);
  FpMatrix sum(f, m, m);
  FpMatrix power = n;
  for (std::size_t k = 1; k < m; ++k) {
    auto c = f.inv(f.from_int(static_cast<long long>(k)));
    if (k % 2 == 0) c = f.neg(c);
    sum = sum + exactalg::scale(c, power);
    power = power * n;
  }
  return sum;
}

}  // namespace iyb::lazard
