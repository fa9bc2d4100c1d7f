#pragma once

#include "iyb/exactalg/matrix.hpp"
#include "iyb/exactalg/prime_field.hpp"

namespace iyb::lazard {

using FpMatrix = exactalg::Matrix<exactalg::PrimeField>;

/// Σ_{k<m} N^k / k! for strictly upper triangular N of size m. Needs p > m - 1.
FpMatrix mat_exp(const FpMatrix& n);

/// Σ_{1<=k<m} (-1)^{k+1} (U - Id)^k / k for unipotent upper triangular U.
FpMatrix mat_log(const FpMatrix& u);

}  // namespace iyb::lazard
