#include <doctest.h>

#include <random>

#include "iyb/io/json_io.hpp"
#include "iyb/liealg/burde.hpp"
#include "iyb/polysolve/certificate.hpp"
#include "iyb/polysolve/groebner.hpp"
#include "iyb/polysolve/solve_small.hpp"
#include "iyb/polysolve/system.hpp"

using namespace iyb;
using namespace iyb::polysolve;
using FpMatrix = exactalg::Matrix<PrimeField>;
using Point = std::vector<std::uint64_t>;

namespace {

using Term = std::pair<long long, std::vector<Monomial::Factor>>;

template <class R>
Polynomial<R> poly(const R& ring, std::initializer_list<Term> terms) {
  Polynomial<R> out(ring);
  for (const auto& [c, f] : terms) out.add_term(Monomial(f), ring.from_int(c));
  return out;
}

template <class R>
PolySystem<R> system_of(const R& ring, std::vector<std::string> vars, std::vector<Polynomial<R>> polys) {
  PolySystem<R> s{ring, std::move(vars), 0, std::move(polys), {}};
  s.matrix_vars = s.vars.size();
  return s;
}

FpMatrix unit(const PrimeField& f, std::size_t n, std::size_t r, std::size_t c) {
  FpMatrix m(f, n, n);
  m.set(r, c, 1);
  return m;
}

Witness paper_witness() { return io::parse_witness(io::load_json(IYB_DATA_DIR "/witness_p11.json")); }

}  // namespace

TEST_CASE("polynomial arithmetic") {
  IntegerRing z;
  auto x = Polynomial<IntegerRing>::variable(z, 0);
  auto y = Polynomial<IntegerRing>::variable(z, 1);
  auto one = Polynomial<IntegerRing>::constant(z, 1);
  auto sq = (x + y) * (x + y);
  CHECK(sq == x * x + y * x + x * y + y * y);
  CHECK(sq.total_degree() == 2);
  CHECK(sq.size() == 3);
  CHECK((sq - sq).is_zero());
  CHECK((x - x + one).is_constant());
  CHECK(sq.evaluate({2, 3}) == 25);
  CHECK(sq.to_string({"x", "y"}) == "y^2 + x^2 + 2*x*y");
  auto r = reduce_mod_p(sq, PrimeField(2));
  CHECK(r.size() == 2);
  CHECK(Monomial::variable(2, 3) * Monomial::variable(0) == Monomial({{0, 1}, {2, 3}}));
  CHECK(Monomial({{1, 2}, {0, 1}}).degree() == 3);
  CHECK_THROWS_AS(Polynomial<PrimeField>::variable(PrimeField(5), 0) + Polynomial<PrimeField>::variable(PrimeField(3), 0),
                  RingMismatch);
}

TEST_CASE("Groebner basis examples") {
  SUBCASE("linear system") {
    PrimeField f(7);
    auto s = system_of(f, {"x", "y"}, {poly(f, {{1, {{0, 1}}}, {-1, {}}}), poly(f, {{1, {{1, 1}}}, {-2, {}}})});
    auto r = buchberger(s);
    CHECK_FALSE(r.inconsistent);
    REQUIRE(r.basis.size() == 2);
    CHECK(r.basis == std::vector{s.polys[1], s.polys[0]});
    CHECK(is_groebner_basis(r.basis, MonomialOrder::Grevlex));
  }
  SUBCASE("x and x + 1") {
    PrimeField f(5);
    auto s = system_of(f, {"x"}, {poly(f, {{1, {{0, 1}}}}), poly(f, {{1, {{0, 1}}}, {1, {}}})});
    auto r = buchberger(s);
    CHECK(r.inconsistent);
    REQUIRE(r.basis.size() == 1);
    CHECK(r.basis[0] == Polynomial<PrimeField>::constant(f, 1));
  }
  SUBCASE("xy - 1 and x^2") {
    PrimeField f(5);
    auto s = system_of(f, {"x", "y"}, {poly(f, {{1, {{0, 1}, {1, 1}}}, {-1, {}}}), poly(f, {{1, {{0, 2}}}})});
    for (auto order : {MonomialOrder::Grevlex, MonomialOrder::Lex}) {
      auto r = buchberger(s, {.order = order});
      CHECK(r.inconsistent);
    }
  }
  SUBCASE("x^2 + 1 over F_3: consistent ideal, no rational points") {
    PrimeField f(3);
    auto s = system_of(f, {"x"}, {poly(f, {{1, {{0, 2}}}, {1, {}}})});
    auto r = buchberger(s);
    CHECK_FALSE(r.inconsistent);
    CHECK(solve_small(s).empty());
    CHECK(buchberger(with_field_equations(s)).inconsistent);
  }
  SUBCASE("budget") {
    PrimeField f(5);
    auto s = system_of(f, {"x", "y"}, {poly(f, {{1, {{0, 200}}}, {1, {{1, 100}}}})});
    CHECK_THROWS_AS(buchberger(s), BudgetExceeded);
  }
}

TEST_CASE("Groebner output is a reduced basis of the same ideal") {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 40; ++k) {
    PrimeField f(k % 2 == 0 ? 5 : 7);
    auto s = random_system(rng, f, 3, 3, 3, 3);
    for (auto order : {MonomialOrder::Grevlex, MonomialOrder::Lex}) {
      auto serial = buchberger(s, {.order = order, .parallel = false});
      auto parallel = buchberger(s, {.order = order, .parallel = true});
      CHECK(serial.basis == parallel.basis);
      CHECK(is_groebner_basis(serial.basis, order));
      for (const auto& g : s.polys) CHECK(normal_form(g, serial.basis, order).is_zero());
      // Same ideal, hence the same rational points.
      auto b = system_of(f, s.vars, serial.basis);
      CHECK(solve_small(b) == solve_small(s));
      for (const auto& g : serial.basis) CHECK(g.terms().rbegin()->second != 0);
    }
  }
}

TEST_CASE("Groebner verdicts agree with exhaustive search") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 60; ++k) {
    PrimeField f(k % 3 == 0 ? 2 : (k % 3 == 1 ? 3 : 5));
    auto s = random_system(rng, f, 1 + k % 4, 1 + k % 3, 3, 4);
    bool empty = solve_small(s).empty();
    auto plain = buchberger(s);
    if (plain.inconsistent) CHECK(empty);
    CHECK(buchberger(with_field_equations(s)).inconsistent == empty);
  }
}

TEST_CASE("exhaustive solver") {
  PrimeField f3(3), f5(5);
  CHECK(solve_small(system_of(f3, {"x"}, {poly(f3, {{1, {{0, 2}}}, {1, {}}})})).empty());
  CHECK(solve_small(system_of(f5, {"x"}, {poly(f5, {{1, {{0, 2}}}, {1, {}}})})) == std::vector<Point>{{2}, {3}});
  CHECK(solve_small(system_of<PrimeField>(f3, {"x"}, {})) == std::vector<Point>{{0}, {1}, {2}});
  auto two = system_of(f3, {"x", "y"}, {poly(f3, {{1, {{0, 1}}}, {-1, {{1, 1}}}})});
  CHECK(solve_small(two) == std::vector<Point>{{0, 0}, {1, 1}, {2, 2}});
  CHECK(solve_small(two, false) == solve_small(two, true));
  std::vector<std::string> many(15, "v");
  CHECK_THROWS_AS(solve_small(system_of<PrimeField>(f3, many, {})), BudgetExceeded);
}

TEST_CASE("certificates") {
  IntegerRing z;
  auto y = [&](long long c) { return Term{c, {{0, 1}}}; };
  SUBCASE("y and 1 - y") {
    auto s = system_of(z, {"y"}, {poly(z, {y(1)}), poly(z, {{1, {}}, y(-1)})});
    Certificate c{1, {poly(z, {{1, {}}}), poly(z, {{1, {}}})}};
    for (std::uint64_t p : {2, 3, 5, 23}) {
      auto v = verify_certificate(s, c, p);
      CHECK(v.certified);
      CHECK(v.message == "certified unsolvable over F_" + std::to_string(p));
      CHECK(solve_small(reduce_mod_p(s, PrimeField(p))).empty());
    }
  }
  SUBCASE("2y with k = 2") {
    auto s = system_of(z, {"y"}, {poly(z, {y(2)})});
    Certificate c{2, {poly(z, {{1, {}}})}};
    // 2y = 2 is not an identity, so this certificate fails; the k-divisibility case needs a true identity.
    CHECK_FALSE(verify_certificate(s, c, 3).identity_holds);
    auto s2 = system_of(z, {"y"}, {poly(z, {y(2)}), poly(z, {{1, {}}, y(-1)})});
    Certificate c2{2, {poly(z, {{1, {}}}), poly(z, {{2, {}}})}};
    auto at2 = verify_certificate(s2, c2, 2);
    CHECK(at2.identity_holds);
    CHECK_FALSE(at2.k_coprime_to_p);
    CHECK_FALSE(at2.certified);
    CHECK(at2.message == "identity holds but k = 2 is divisible by p = 2");
    CHECK(verify_certificate(s2, c2, 3).certified);
    CHECK_FALSE(solve_small(reduce_mod_p(s2, PrimeField(2))).empty());
  }
  SUBCASE("y^2 and y + 1") {
    auto s = system_of(z, {"y"}, {poly(z, {{1, {{0, 2}}}}), poly(z, {y(1), {1, {}}})});
    auto v = verify_certificate(s, {1, {poly(z, {{1, {}}}), poly(z, {{1, {}}})}}, 5);
    CHECK_FALSE(v.identity_holds);
    CHECK_FALSE(v.certified);
    CHECK(v.message == "identity check failed");
  }
  SUBCASE("malformed certificates") {
    auto s = system_of(z, {"y"}, {poly(z, {y(1)})});
    CHECK_THROWS_AS(verify_certificate(s, {1, {}}, 5), DimensionMismatch);
    CHECK_THROWS_AS(verify_certificate(s, {0, {poly(z, {{1, {}}})}}, 5), DomainError);
    CHECK_THROWS_AS(verify_certificate(s, {1, {poly(z, {{1, {}}})}}, 6), NotPrime);
  }
}

TEST_CASE("system generation counts") {
  IntegerRing z;
  auto pl = liealg::paper_L(z);
  auto s = generate_system(pl, 11, false);
  CHECK(s.matrix_vars == 110);
  CHECK(s.vars.size() == 110);
  CHECK(strict_upper_slots(11).size() == 55);
  // 37 relations, 55 entries each; entries that vanish identically are dropped.
  CHECK(s.polys.size() <= 37 * 55);
  CHECK(s.polys.size() == s.labels.size());
  for (const auto& f : s.polys) CHECK_FALSE(f.is_zero());
  auto r = generate_system(pl, 11, true);
  CHECK(r.vars.size() == 165);
  CHECK(r.aux_vars() == 55);
  CHECK(r.polys.size() == s.polys.size() + 1);
  CHECK(r.labels.back() == "image of e9 is nonzero");
  CHECK_THROWS_AS(generate_system(pl, 1, false), DomainError);
}

TEST_CASE("Heisenberg system") {
  IntegerRing z;
  auto h = liealg::heisenberg(z);
  auto s = generate_system(h, 3, true);
  CHECK(s.matrix_vars == 6);
  PrimeField f(5);
  Witness w{5, 3, {unit(f, 3, 0, 1), unit(f, 3, 1, 2)}};
  auto report = substitute_witness(h, w);
  CHECK(report.morphism);
  CHECK(report.injective);
  auto point = witness_point(w);
  for (std::size_t i = 0; i + 1 < s.polys.size(); ++i) CHECK(reduce_mod_p(s.polys[i], f).evaluate(point) == 0);
  // The exhaustive solver finds the witness among the solutions of the reduced system over F_2.
  auto s2 = reduce_mod_p(generate_system(h, 3, false), PrimeField(2));
  auto sols = solve_small(s2);
  CHECK(std::find(sols.begin(), sols.end(), Point{1, 0, 0, 0, 0, 1}) != sols.end());
}

TEST_CASE("paper witness") {
  auto w = paper_witness();
  REQUIRE(w.p == 11);
  REQUIRE(w.images.size() == 2);
  for (const auto& e : w.images) CHECK(exactalg::is_strictly_upper(e));
  IntegerRing z;
  auto pl = liealg::paper_L(z);
  auto report = substitute_witness(pl, w);
  CHECK(report.relations.size() == 37);
  CHECK(report.relations_failed() == 0);
  CHECK(report.morphism);
  CHECK(report.injective);
  CHECK(report.central_images_independent);

  auto images = witness_images(liealg::paper_L(PrimeField(11)), w);
  CHECK(images[2] == exactalg::commutator(w.images[0], w.images[1]));
  CHECK(images[2] == w.images[0] * w.images[1] - w.images[1] * w.images[0]);
  CHECK_FALSE(images[9].is_zero());

  SUBCASE("the same entries at p = 23") {
    PrimeField f23(23);
    Witness w23{23, 11, {}};
    for (const auto& e : w.images) {
      FpMatrix m(f23, 11, 11);
      for (std::size_t i = 0; i < 11; ++i)
        for (std::size_t j = 0; j < 11; ++j) m.set(i, j, e(i, j));
      w23.images.push_back(m);
    }
    auto r = substitute_witness(pl, w23);
    CHECK_FALSE(r.morphism);
    CHECK(r.relations_failed() > 0);
  }
  SUBCASE("zero map") {
    PrimeField f(11);
    Witness zero{11, 11, {FpMatrix(f, 11, 11), FpMatrix(f, 11, 11)}};
    auto r = substitute_witness(pl, zero);
    CHECK(r.morphism);
    CHECK_FALSE(r.injective);
    auto s = generate_system(pl, 11, false);
    auto pt = witness_point(zero);
    for (const auto& g : s.polys) CHECK(reduce_mod_p(g, f).evaluate(pt) == 0);
  }
  SUBCASE("not strictly upper") {
    Witness bad = w;
    bad.images[0].set(3, 3, 1);
    CHECK_THROWS_AS(substitute_witness(pl, bad), DomainError);
  }
}

TEST_CASE("residuals agree with polynomial evaluation") {
  IntegerRing z;
  auto check = [&](const PresentedLieAlgebra<IntegerRing>& p, const Witness& w, std::size_t stride) {
    auto s = generate_system(p, w.images[0].rows(), false);
    auto report = substitute_witness(p, w);
    auto pt = witness_point(w);
    PrimeField f(w.p);
    std::map<std::string, std::size_t> nonzero;
    for (std::size_t i = 0; i < s.polys.size(); i += stride) {
      if (reduce_mod_p(s.polys[i], f).evaluate(pt) == 0) continue;
      auto label = s.labels[i];
      ++nonzero[label.substr(0, label.find(' '))];
    }
    for (const auto& rel : report.relations) {
      auto key = "[e" + std::to_string(rel.i) + ",e" + std::to_string(rel.j) + "]";
      if (stride == 1) CHECK(nonzero[key] == rel.nonzero_entries);
      if (rel.satisfied) CHECK(nonzero[key] == 0);
    }
  };
  PrimeField f5(5);
  check(liealg::heisenberg(z), Witness{5, 3, {unit(f5, 3, 0, 1), unit(f5, 3, 1, 2)}}, 1);
  check(liealg::heisenberg(z), Witness{5, 3, {unit(f5, 3, 0, 1) + unit(f5, 3, 0, 2), unit(f5, 3, 0, 1)}}, 1);
  auto w = paper_witness();
  check(liealg::paper_L(z), w, 1);
  Witness w23{23, 11, {}};
  PrimeField f23(23);
  for (const auto& e : w.images) {
    FpMatrix m(f23, 11, 11);
    for (std::size_t i = 0; i < 11; ++i)
      for (std::size_t j = 0; j < 11; ++j) m.set(i, j, e(i, j));
    w23.images.push_back(m);
  }
  check(liealg::paper_L(z), w23, 1);
}

TEST_CASE("generation over Z then reduction equals generation over F_p") {
  IntegerRing z;
  for (std::uint64_t p : {5, 11, 23}) {
    PrimeField f(p);
    for (bool rab : {false, true}) {
      auto viaz = reduce_mod_p(generate_system(liealg::paper_L(z), 6, rab), f);
      auto direct = generate_system(liealg::paper_L(f), 6, rab);
      CHECK(viaz.vars == direct.vars);
      CHECK(viaz.labels == direct.labels);
      CHECK(viaz.polys == direct.polys);
    }
  }
  auto hz = reduce_mod_p(generate_system(liealg::heisenberg(z), 4, true), PrimeField(3));
  auto hf = generate_system(liealg::heisenberg(PrimeField(3)), 4, true);
  CHECK(hz.polys == hf.polys);
}
