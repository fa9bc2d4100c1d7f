#include <doctest.h>

#include <random>

#include "iyb/lazard/bch.hpp"
#include "iyb/lazard/exp_group.hpp"
#include "iyb/lazard/matrix_exp.hpp"
#include "iyb/liealg/burde.hpp"

using namespace iyb;
using namespace iyb::lazard;
using exactalg::PrimeField;

namespace {

// Truncated power series in the free associative algebra on {x, y}, keyed by words.
using Series = std::map<std::string, Rational>;

Series mul_trunc(const Series& a, const Series& b, std::size_t d) {
  Series out;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b)
      if (u.size() + v.size() <= d) out[u + v] += cu * cv;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Series exp_letter(char c, std::size_t d) {
  Series out;
  Rational fact = 1;
  for (std::size_t k = 0; k <= d; ++k) {
    if (k > 0) fact *= static_cast<long>(k);
    out[std::string(k, c)] = 1 / fact;
  }
  return out;
}

// log(e^x e^y) expanded directly as a power series, without any bracket machinery.
Series log_exp_exp(std::size_t d) {
  Series z = mul_trunc(exp_letter('x', d), exp_letter('y', d), d);
  z.erase("");
  Series result, power = z;
  for (std::size_t k = 1; k <= d; ++k) {
    Rational c(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
    for (const auto& [w, v] : power) result[w] += c * v;
    power = mul_trunc(power, z, d);
  }
  std::erase_if(result, [](const auto& kv) { return kv.second == 0; });
  return result;
}

Series nonzero(AssocPoly p) {
  std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
  return p;
}

using Vec = ExpGroup::Vec;

Vec random_vec(std::size_t n, std::uint64_t p, std::mt19937_64& rng) {
  Vec v(n);
  for (auto& x : v) x = rng() % p;
  return v;
}

FpMatrix realize(const std::vector<FpMatrix>& images, const Vec& x) {
  const auto& f = images[0].ring();
  FpMatrix out(f, images[0].rows(), images[0].cols());
  for (std::size_t i = 0; i < images.size(); ++i) out = out + exactalg::scale(x[i], images[i]);
  return out;
}

FpMatrix unit(const PrimeField& f, std::size_t n, std::size_t r, std::size_t c) {
  FpMatrix m(f, n, n);
  m.set(r, c, 1);
  return m;
}

}  // namespace

TEST_CASE("low-degree BCH terms") {
  CHECK(bch_symbolic(1).to_string() == "x + y");
  CHECK(bch_symbolic(2).to_string() == "x + y + 1/2*[x,y]");
  CHECK(bch_symbolic(3).to_string() == "x + y + 1/2*[x,y] + 1/12*[x,[x,y]] + 1/12*[[x,y],y]");
  CHECK(bch_symbolic(4).to_string() ==
        "x + y + 1/2*[x,y] + 1/12*[x,[x,y]] + 1/12*[[x,y],y] + 1/24*[x,[[x,y],y]]");
  CHECK_THROWS_AS(bch_symbolic(0), DomainError);
  CHECK_THROWS_AS(bch_symbolic(13), DomainError);
}

TEST_CASE("BCH agrees with the power series log(e^x e^y)") {
  for (unsigned d = 1; d <= 8; ++d) {
    INFO("degree " << d);
    CHECK(nonzero(expand(bch_symbolic(d))) == log_exp_exp(d));
  }
}

TEST_CASE("BCH denominators only involve small primes") {
  for (unsigned d : {9u, 12u}) {
    for (const auto& t : bch_symbolic(d).terms) {
      CHECK(t.degree() <= d);
      Integer den = t.coeff.get_den();
      for (unsigned q = 2; q <= d; ++q)
        while (den % q == 0) den /= q;
      CHECK(den == 1);
    }
  }
}

TEST_CASE("Lyndon words") {
  CHECK(is_lyndon("x"));
  CHECK(is_lyndon("xy"));
  CHECK(is_lyndon("xxy"));
  CHECK(is_lyndon("xyy"));
  CHECK_FALSE(is_lyndon("yx"));
  CHECK_FALSE(is_lyndon("xyxy"));
  CHECK(standard_factorization("xxy") == std::pair<std::string, std::string>{"x", "xy"});
  CHECK(standard_factorization("xyy") == std::pair<std::string, std::string>{"xy", "y"});
  CHECK(expand_lyndon("xy") == AssocPoly{{"xy", 1}, {"yx", -1}});
  CHECK_THROWS_AS(standard_factorization("yx"), DomainError);
}

TEST_CASE("exp group identities") {
  PrimeField f(11);
  auto lie = liealg::paper_L(f).base();
  ExpGroup g(lie);
  CHECK(g.nilpotency_class() == 9);
  std::mt19937_64 rng(17);
  auto zero = lie.zero_vector();
  for (int k = 0; k < 50; ++k) {
    auto x = random_vec(10, 11, rng);
    auto y = random_vec(10, 11, rng);
    CHECK(g.product(x, zero) == x);
    CHECK(g.product(zero, x) == x);
    Vec twice(10), neg(10);
    for (std::size_t i = 0; i < 10; ++i) {
      twice[i] = f.add(x[i], x[i]);
      neg[i] = f.neg(x[i]);
    }
    CHECK(g.product(x, x) == twice);
    CHECK(g.product(neg, x) == zero);
    CHECK(g.inverse(x) == neg);
    // Degree-one truncation: modulo [L, L] = span(e_2, ..., e_9) the product is the sum.
    auto xy = g.product(x, y);
    CHECK(xy[0] == f.add(x[0], y[0]));
    CHECK(xy[1] == f.add(x[1], y[1]));
    CHECK(exp_product(lie, x, y) == xy);
  }
}

TEST_CASE("exp group products are associative") {
  for (std::uint64_t p : {11, 23}) {
    PrimeField f(p);
    ExpGroup g(liealg::paper_L(f).base());
    std::mt19937_64 rng(p);
    for (int k = 0; k < 200; ++k) {
      auto x = random_vec(10, p, rng), y = random_vec(10, p, rng), z = random_vec(10, p, rng);
      CHECK(g.product(g.product(x, y), z) == g.product(x, g.product(y, z)));
    }
  }
}

TEST_CASE("element orders") {
  PrimeField f(11);
  auto lie = liealg::paper_L(f).base();
  CHECK(group_element_order(lie, lie.zero_vector()) == 1);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 40; ++k) {
    auto x = random_vec(10, 11, rng);
    CHECK(group_element_order(lie, x) == additive_order(f, x));
  }
  CHECK(group_element_order(lie, lie.basis_vector(9)) == 11);

  SUBCASE("Heisenberg over F_5, every element") {
    PrimeField f5(5);
    auto h = liealg::heisenberg(f5).base();
    ExpGroup g(h);
    for (std::uint64_t a = 0; a < 5; ++a)
      for (std::uint64_t b = 0; b < 5; ++b)
        for (std::uint64_t c = 0; c < 5; ++c) {
          Vec x{a, b, c};
          CHECK(g.order(x) == (a == 0 && b == 0 && c == 0 ? 1u : 5u));
          CHECK(g.power(x, g.order(x)) == h.zero_vector());
        }
  }
}

TEST_CASE("class at least p is refused") {
  CHECK_THROWS_AS(ExpGroup(liealg::paper_L(PrimeField(7)).base()), DomainError);
  CHECK_THROWS_AS(ExpGroup(liealg::heisenberg(PrimeField(2)).base()), DomainError);
  CHECK_NOTHROW(ExpGroup(liealg::heisenberg(PrimeField(3)).base()));
  liealg::LieAlgebra<PrimeField> sl2(PrimeField(11), 3);
  sl2.set_bracket(0, 1, {{1, 2}});
  sl2.set_bracket(0, 2, {{2, -2}});
  sl2.set_bracket(1, 2, {{0, 1}});
  CHECK_THROWS_AS(ExpGroup{sl2}, DomainError);
}

TEST_CASE("products match the matrix group for Heisenberg") {
  for (std::uint64_t p : {5, 7}) {
    PrimeField f(p);
    auto h = liealg::heisenberg(f).base();
    ExpGroup g(h);
    std::vector<FpMatrix> rho{unit(f, 3, 0, 1), unit(f, 3, 1, 2), unit(f, 3, 0, 2)};
    REQUIRE(exactalg::commutator(rho[0], rho[1]) == rho[2]);
    std::vector<Vec> all;
    for (std::uint64_t a = 0; a < p; ++a)
      for (std::uint64_t b = 0; b < p; ++b)
        for (std::uint64_t c = 0; c < p; ++c) all.push_back({a, b, c});
    std::size_t checked = 0;
    for (std::size_t i = 0; i < all.size(); i += (p == 5 ? 1 : 7))
      for (std::size_t j = 0; j < all.size(); j += (p == 5 ? 1 : 5)) {
        auto lhs = mat_exp(realize(rho, g.product(all[i], all[j])));
        auto rhs = mat_exp(realize(rho, all[i])) * mat_exp(realize(rho, all[j]));
        if (!(lhs == rhs)) FAIL_CHECK("mismatch at " << i << ", " << j);
        ++checked;
      }
    if (p == 5) CHECK(checked == 15625);
  }
}

TEST_CASE("products match the matrix group for a class-3 algebra in u_4") {
  for (std::uint64_t p : {5, 7, 11}) {
    PrimeField f(p);
    auto lie = liealg::filiform4(f).base();
    ExpGroup g(lie);
    CHECK(g.nilpotency_class() == 3);
    auto e0 = unit(f, 4, 0, 1) + unit(f, 4, 1, 2) + unit(f, 4, 2, 3);
    auto e1 = unit(f, 4, 2, 3);
    auto e2 = exactalg::commutator(e0, e1);
    auto e3 = exactalg::commutator(e0, e2);
    std::vector<FpMatrix> rho{e0, e1, e2, e3};
    CHECK(exactalg::commutator(e1, e2).is_zero());
    CHECK(exactalg::commutator(e1, e3).is_zero());
    CHECK_FALSE(e3.is_zero());
    std::mt19937_64 rng(p);
    for (int k = 0; k < 500; ++k) {
      auto x = random_vec(4, p, rng), y = random_vec(4, p, rng);
      CHECK(mat_exp(realize(rho, g.product(x, y))) == mat_exp(realize(rho, x)) * mat_exp(realize(rho, y)));
    }
  }
}

TEST_CASE("matrix exp and log") {
  PrimeField f(23);
  CHECK(mat_exp(FpMatrix(f, 5, 5)) == FpMatrix::identity(f, 5));
  auto n = unit(f, 5, 1, 3);
  CHECK(mat_exp(n) == FpMatrix::identity(f, 5) + n);
  CHECK(mat_log(FpMatrix::identity(f, 5) + n) == n);

  std::mt19937_64 rng(23);
  for (int k = 0; k < 200; ++k) {
    FpMatrix m(f, 11, 11);
    for (std::size_t i = 0; i < 11; ++i)
      for (std::size_t j = i + 1; j < 11; ++j) m.set(i, j, rng() % 23);
    CHECK(mat_log(mat_exp(m)) == m);
  }
  CHECK_THROWS_AS(mat_exp(FpMatrix(PrimeField(7), 11, 11)), DomainError);
  CHECK_THROWS_AS(mat_exp(FpMatrix::identity(f, 3)), DomainError);
  CHECK_THROWS_AS(mat_log(FpMatrix(f, 3, 3)), DomainError);
}
