#include "iyb/liealg/burde.hpp"

namespace iyb::liealg {

std::string constraint_name(BurdeConstraint c) {
  switch (c) {
    case BurdeConstraint::LambdaOneNonzero:
      return "lambda1 != 0";
    case BurdeConstraint::LambdaSeven:
      return "lambda7 = -lambda1";
    case BurdeConstraint::LambdaEleven:
      return "lambda11 = 3*lambda1";
    case BurdeConstraint::LambdaTwelve:
      return "lambda1*lambda12 = -lambda1*(9*lambda2+16*lambda8) + lambda13*(2*lambda3+lambda9)";
    case BurdeConstraint::ThreeLambdaTwoPlusEight:
      return "3*lambda2+lambda8 != 0";
  }
  return "unknown constraint";
}

}  // namespace iyb::liealg
