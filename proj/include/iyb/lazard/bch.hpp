#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "iyb/exactalg/rings.hpp"

namespace iyb::lazard {

using exactalg::Integer;
using exactalg::Rational;

/// Element of the free associative algebra Q<x,y>: word over {'x','y'} to
/// coefficient. Words are ordered lexicographically with x < y.
using AssocPoly = std::map<std::string, Rational>;

/// One term of the series: coefficient times the Lie monomial attached to a
/// Lyndon word by its standard bracketing (e.g. "xxy" is [x,[x,y]] and
/// "xyy" is [[x,y],y]).
struct BchTerm {
  std::string word;
  Rational coeff;

  std::size_t degree() const { return word.size(); }
  std::string bracket() const;
};

/// log(e^x e^y) truncated at total degree max_degree, in the Lyndon basis
/// of the free Lie algebra on x, y. Terms sorted by degree, then word.
struct BchSeries {
  unsigned max_degree = 0;
  std::vector<BchTerm> terms;

  std::string to_string() const;
};

inline constexpr unsigned kMaxBchDegree = 12;

/// Computed once per degree and cached; safe to call from several threads.
/// Throws DomainError unless 1 <= degree <= kMaxBchDegree.
const BchSeries& bch_symbolic(unsigned degree);

/// Standard factorization w = uv of a Lyndon word of length >= 2, with v the
/// longest proper Lyndon suffix.
std::pair<std::string, std::string> standard_factorization(const std::string& lyndon);
bool is_lyndon(const std::string& word);

/// Expansion of a Lie bracket monomial in the free associative algebra.
AssocPoly expand_lyndon(const std::string& lyndon);
AssocPoly expand(const BchSeries& series);

}  // namespace iyb::lazard
