#include "iyb/lazard/bch.hpp"

#include <array>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "iyb/errors.hpp"

namespace iyb::lazard {

namespace {

using IntPoly = std::unordered_map<std::string, Integer>;

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer lcm_upto(unsigned n) {
  Integer l = 1;
  for (unsigned i = 2; i <= n; ++i) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), i);
  return l;
}

/// Dynkin coefficients of degree m, scaled by m·m!·lcm(1..m) so every
/// contribution is an integer: for a word x^r1 y^s1 ... x^rn y^sn the
/// contribution is (-1)^(n-1) / (n · m · Π r_i! s_i!).
class DynkinAccumulator {
 public:
  explicit DynkinAccumulator(unsigned m) : m_(m), m_fact_(factorial(m)), lcm_(lcm_upto(m)) {}

  Integer denominator() const { return Integer(m_) * m_fact_ * lcm_; }
  const IntPoly& words() const { return words_; }

  void run() {
    std::string word;
    recurse(word, 0, 1);
  }

 private:
  // Appends further (r, s) blocks; `blocks` so far, `fact_product` = Π r_i! s_i!.
  void recurse(std::string& word, unsigned blocks, const Integer& fact_product) {
    if (word.size() == m_) {
      if (blocks == 0) return;
      Integer c = (m_fact_ / fact_product) * (lcm_ / blocks);
      if (blocks % 2 == 0) c = -c;
      words_[word] += c;
      return;
    }
    const auto left = static_cast<unsigned>(m_ - word.size());
    for (unsigned r = 0; r <= left; ++r) {
      for (unsigned s = (r == 0 ? 1 : 0); r + s <= left; ++s) {
        const std::size_t mark = word.size();
        word.append(r, 'x');
        word.append(s, 'y');
        recurse(word, blocks + 1, fact_product * factorial(r) * factorial(s));
        word.resize(mark);
      }
    }
  }

  unsigned m_;
  Integer m_fact_;
  Integer lcm_;
  IntPoly words_;
};

/// Right-nested bracket [w1,[w2,...[w_{m-1},w_m]]] expanded into words,
/// accumulated with multiplier `c` into `out`.
void add_right_nested(const std::string& w, const Integer& c, IntPoly& out) {
  // Terms of [w_k, R] = w_k R - R w_k, built from the innermost letter out.
  std::vector<std::pair<std::string, int>> terms{{std::string(1, w.back()), 1}};
  for (std::size_t k = w.size() - 1; k-- > 0;) {
    std::vector<std::pair<std::string, int>> next;
    next.reserve(terms.size() * 2);
    for (const auto& [t, sign] : terms) {
      next.emplace_back(w[k] + t, sign);
      next.emplace_back(t + w[k], -sign);
    }
    terms = std::move(next);
  }
  for (const auto& [t, sign] : terms) {
    if (sign > 0) {
      out[t] += c;
    } else {
      out[t] -= c;
    }
  }
}

AssocPoly expand_cached(const std::string& lyndon, std::map<std::string, AssocPoly>& memo) {
  if (auto it = memo.find(lyndon); it != memo.end()) return it->second;
  AssocPoly out;
  if (lyndon.size() == 1) {
    out[lyndon] = 1;
  } else {
    auto [u, v] = standard_factorization(lyndon);
    AssocPoly a = expand_cached(u, memo);
    AssocPoly b = expand_cached(v, memo);
    for (const auto& [wa, ca] : a) {
      for (const auto& [wb, cb] : b) {
        out[wa + wb] += ca * cb;
        out[wb + wa] -= ca * cb;
      }
    }
    std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  }
  memo.emplace(lyndon, out);
  return out;
}

/// Writes the homogeneous Lie polynomial `poly` (scaled by `den`) in the
/// Lyndon basis. The least word of a Lie polynomial is always Lyndon and its
/// coefficient is that of the corresponding basis element, since every
/// other word in the expansion of a Lyndon monomial is larger.
std::vector<BchTerm> to_lyndon_basis(IntPoly poly, const Integer& den, std::map<std::string, AssocPoly>& memo) {
  std::map<std::string, Integer> ordered;
  for (auto& [w, c] : poly) {
    if (sgn(c) != 0) ordered.emplace(w, std::move(c));
  }
  std::vector<BchTerm> out;
  while (!ordered.empty()) {
    auto [word, c] = *ordered.begin();
    if (!is_lyndon(word)) throw std::logic_error("degree component is not a Lie polynomial");
    for (const auto& [w, e] : expand_cached(word, memo)) {
      // Expansion coefficients are integers.
      auto& slot = ordered[w];
      slot -= c * e.get_num();
      if (sgn(slot) == 0) ordered.erase(w);
    }
    out.push_back({word, exactalg::make_rational(c, den)});
  }
  return out;
}

bool only_small_primes(Integer d, unsigned bound) {
  for (unsigned q = 2; q <= bound; ++q) {
    while (mpz_divisible_ui_p(d.get_mpz_t(), q)) d /= q;
  }
  return d == 1;
}

BchSeries compute(unsigned degree) {
  BchSeries s;
  s.max_degree = degree;
  std::map<std::string, AssocPoly> memo;
  for (unsigned m = 1; m <= degree; ++m) {
    DynkinAccumulator acc(m);
    acc.run();
    IntPoly lie_part;
    for (const auto& [w, c] : acc.words()) {
      if (sgn(c) != 0) add_right_nested(w, c, lie_part);
    }
    // The Dynkin bracketing multiplies a degree-m Lie element by m; that
    // factor is already in the accumulator's denominator.
    for (auto& t : to_lyndon_basis(std::move(lie_part), acc.denominator(), memo)) {
      if (!only_small_primes(t.coeff.get_den(), degree)) {
        throw std::logic_error("BCH coefficient denominator has a prime factor above the degree");
      }
      s.terms.push_back(std::move(t));
    }
  }
  return s;
}

}  // namespace

bool is_lyndon(const std::string& word) {
  if (word.empty()) return false;
  for (std::size_t k = 1; k < word.size(); ++k) {
    if (word.substr(k) <= word) return false;
  }
  return true;
}

std::pair<std::string, std::string> standard_factorization(const std::string& lyndon) {
  if (lyndon.size() < 2 || !is_lyndon(lyndon)) throw DomainError("'" + lyndon + "' is not a Lyndon word of length >= 2");
  for (std::size_t k = 1; k < lyndon.size(); ++k) {
    std::string v = lyndon.substr(k);
    if (is_lyndon(v)) return {lyndon.substr(0, k), v};
  }
  throw std::logic_error("unreachable: the last letter is a Lyndon suffix");
}

std::string BchTerm::bracket() const {
  if (word.size() == 1) return word;
  auto [u, v] = standard_factorization(word);
  return "[" + BchTerm{u, 1}.bracket() + "," + BchTerm{v, 1}.bracket() + "]";
}

std::string BchSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    Rational c = t.coeff;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    if (c != 1) os << c.get_str() << "*";
    os << t.bracket();
  }
  return os.str();
}

AssocPoly expand_lyndon(const std::string& lyndon) {
  std::map<std::string, AssocPoly> memo;
  return expand_cached(lyndon, memo);
}

AssocPoly expand(const BchSeries& series) {
  AssocPoly out;
  std::map<std::string, AssocPoly> memo;
  for (const auto& t : series.terms) {
    for (const auto& [w, c] : expand_cached(t.word, memo)) out[w] += t.coeff * c;
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

const BchSeries& bch_symbolic(unsigned degree) {
  if (degree < 1 || degree > kMaxBchDegree) {
    throw DomainError("BCH degree must be in 1.." + std::to_string(kMaxBchDegree) + ", got " + std::to_string(degree));
  }
  static std::array<std::once_flag, kMaxBchDegree + 1> once;
  static std::array<std::unique_ptr<BchSeries>, kMaxBchDegree + 1> cache;
  std::call_once(once[degree], [degree] { cache[degree] = std::make_unique<BchSeries>(compute(degree)); });
  return *cache[degree];
}

}  // namespace iyb::lazard
