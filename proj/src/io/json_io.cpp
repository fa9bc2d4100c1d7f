#include "iyb/io/json_io.hpp"

#include "iyb/braces/order_checks.hpp"

#include <fstream>
#include <sstream>

namespace iyb::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, "missing field \"" + key + "\"");
  return *it;
}

long long as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<long long>();
}

std::size_t as_index(const json& j, const std::string& where) {
  long long v = as_int(j, where);
  if (v < 0) fail(where, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

/// Decimal string (or plain integer, accepted for convenience).
exactalg::Integer as_bigint(const json& j, const std::string& where) {
  if (j.is_number_integer()) return exactalg::Integer(j.get<long>());
  if (!j.is_string()) fail(where, "expected a decimal string");
  exactalg::Integer v;
  const auto& s = j.get_ref<const std::string&>();
  if (s.empty() || v.set_str(s, 10) != 0) fail(where, "\"" + s + "\" is not a decimal integer");
  return v;
}

const json& array_field(const json& j, const std::string& key, const std::string& where) {
  const json& a = field(j, key, where);
  if (!a.is_array()) fail(where + "." + key, "expected an array");
  return a;
}

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

template <class R>
typename R::value_type scalar(const R& ring, const json& j, const std::string& where) {
  if constexpr (std::is_same_v<R, PrimeField>) {
    if (j.is_string()) return ring.from_integer(as_bigint(j, where));
    long long v = as_int(j, where);
    if (v < 0 || static_cast<std::uint64_t>(v) >= ring.p()) fail(where, "entry must lie in [0, p)");
    return static_cast<std::uint64_t>(v);
  } else {
    return as_bigint(j, where);
  }
}

json scalar_json(const IntegerRing&, const exactalg::Integer& v) { return v.get_str(); }
json scalar_json(const PrimeField&, std::uint64_t v) { return v; }

template <class R>
exactalg::Matrix<R> parse_matrix_over(const R& ring, const json& rows_json, std::size_t rows, std::size_t cols,
                                      const std::string& where) {
  if (!rows_json.is_array() || rows_json.size() != rows) fail(where, "expected " + std::to_string(rows) + " rows");
  exactalg::Matrix<R> m(ring, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = rows_json[r];
    if (!row.is_array() || row.size() != cols) fail(at(where, r), "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, scalar(ring, row[c], at(at(where, r), c)));
  }
  return m;
}

template <class R>
json matrix_rows(const exactalg::Matrix<R>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m.ring(), m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class R>
json matrix_json(const exactalg::Matrix<R>& m) {
  return json{{"ring", ring_to_json(m.ring())}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", matrix_rows(m)}};
}

template <class R>
LieFile<R> parse_lie_over(const R& ring, const json& j) {
  const std::size_t dim = as_index(field(j, "dim", "lie"), "lie.dim");
  liealg::LieAlgebra<R> lie(ring, dim);
  const json& brackets = array_field(j, "brackets", "lie");
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    const std::string w = at("lie.brackets", b);
    const std::size_t i = as_index(field(brackets[b], "i", w), w + ".i");
    const std::size_t k = as_index(field(brackets[b], "j", w), w + ".j");
    if (i >= k || k >= dim) fail(w, "need i < j < dim");
    auto out = lie.zero_vector();
    const json& terms = array_field(brackets[b], "out", w);
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string wt = at(w + ".out", t);
      if (!terms[t].is_array() || terms[t].size() != 2) fail(wt, "expected [index, coeff]");
      const std::size_t idx = as_index(terms[t][0], wt);
      if (idx >= dim) fail(wt, "basis index out of range");
      out[idx] = ring.add(out[idx], ring.from_integer(as_bigint(terms[t][1], wt)));
    }
    lie.set_bracket(i, k, out);
  }
  LieFile<R> file{std::move(lie), {}, {}};
  if (j.contains("generators")) {
    const json& g = array_field(j, "generators", "lie");
    for (std::size_t k = 0; k < g.size(); ++k) file.generators.push_back(as_index(g[k], at("lie.generators", k)));
  }
  if (j.contains("rules")) {
    const json& rules = array_field(j, "rules", "lie");
    for (std::size_t k = 0; k < rules.size(); ++k) {
      const std::string w = at("lie.rules", k);
      file.rules.push_back({as_index(field(rules[k], "target", w), w + ".target"),
                            as_index(field(rules[k], "left", w), w + ".left"),
                            as_index(field(rules[k], "right", w), w + ".right")});
    }
  }
  if (file.presented()) {
    try {
      (void)file.presentation();
    } catch (const DomainError& e) {
      fail("lie.rules", e.what());
    }
  }
  return file;
}

template <class R>
json lie_json(const liealg::LieAlgebra<R>& lie, const std::vector<std::size_t>& generators,
              const std::vector<liealg::DerivationRule>& rules) {
  json brackets = json::array();
  for (std::size_t i = 0; i < lie.dim(); ++i) {
    for (std::size_t k = i + 1; k < lie.dim(); ++k) {
      const auto& terms = lie.structure(i, k);
      if (terms.empty()) continue;
      json out = json::array();
      for (const auto& t : terms) out.push_back(json::array({t.index, lie.ring().to_string(t.coeff)}));
      brackets.push_back(json{{"i", i}, {"j", k}, {"out", std::move(out)}});
    }
  }
  json j{{"dim", lie.dim()}, {"ring", ring_to_json(lie.ring())}, {"brackets", std::move(brackets)}};
  if (!generators.empty()) {
    j["generators"] = generators;
    json rs = json::array();
    for (const auto& r : rules) rs.push_back(json{{"target", r.target}, {"left", r.left}, {"right", r.right}});
    j["rules"] = std::move(rs);
  }
  return j;
}

template <class R>
polysolve::Polynomial<R> parse_poly(const R& ring, const json& j, const std::string& where, std::size_t nvars) {
  if (!j.is_array()) fail(where, "expected a list of terms");
  polysolve::Polynomial<R> p(ring);
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string w = at(where, t);
    auto c = ring.from_integer(as_bigint(field(j[t], "coeff", w), w + ".coeff"));
    const json& exps = array_field(j[t], "exps", w);
    std::vector<polysolve::Monomial::Factor> fs;
    for (std::size_t e = 0; e < exps.size(); ++e) {
      const std::string we = at(w + ".exps", e);
      if (!exps[e].is_array() || exps[e].size() != 2) fail(we, "expected [varIdx, exponent]");
      const std::size_t v = as_index(exps[e][0], we);
      if (v >= nvars) fail(we, "variable index out of range");
      fs.emplace_back(static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(as_index(exps[e][1], we)));
    }
    p.add_term(polysolve::Monomial(std::move(fs)), c);
  }
  return p;
}

template <class R>
json poly_json(const polysolve::Polynomial<R>& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json exps = json::array();
    for (const auto& [v, e] : m.factors()) exps.push_back(json::array({v, e}));
    terms.push_back(json{{"coeff", p.ring().to_string(c)}, {"exps", std::move(exps)}});
  }
  return terms;
}

template <class R>
polysolve::PolySystem<R> parse_system_over(const R& ring, const json& j) {
  polysolve::PolySystem<R> s{ring, {}, 0, {}, {}};
  const json& vars = array_field(j, "vars", "system");
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (!vars[k].is_string()) fail(at("system.vars", k), "expected a name");
    s.vars.push_back(vars[k].get<std::string>());
    if (s.vars.back().rfind("z", 0) != 0) s.matrix_vars = k + 1;
  }
  const json& polys = array_field(j, "polys", "system");
  for (std::size_t k = 0; k < polys.size(); ++k) s.polys.push_back(parse_poly(ring, polys[k], at("system.polys", k), s.vars.size()));
  if (j.contains("labels")) {
    const json& labels = array_field(j, "labels", "system");
    for (const auto& l : labels) s.labels.push_back(l.is_string() ? l.get<std::string>() : "");
  }
  return s;
}

template <class R>
json system_json(const polysolve::PolySystem<R>& s) {
  json polys = json::array();
  for (const auto& p : s.polys) polys.push_back(poly_json(p));
  json j{{"ring", ring_to_json(s.ring)}, {"vars", s.vars}, {"polys", std::move(polys)}};
  if (!s.labels.empty()) j["labels"] = s.labels;
  return j;
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) line += text[k] == '\n' ? 1 : 0;
  return line;
}

}  // namespace

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": line " + std::to_string(line_of(text, e.byte)) + ": malformed JSON");
  }
}

void save_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError(path.string() + ": cannot write file");
  out << text;
}

AnyRing parse_ring(const json& j, const std::string& where) {
  if (j.is_string() && j.get<std::string>() == "Z") return IntegerRing{};
  if (j.is_object() && j.contains("Fp")) {
    long long p = as_int(j["Fp"], where + ".Fp");
    if (p < 2 || !exactalg::is_prime(static_cast<std::uint64_t>(p))) fail(where + ".Fp", "modulus is not prime");
    return PrimeField(static_cast<std::uint64_t>(p));
  }
  fail(where, "expected \"Z\" or {\"Fp\": p}");
}

json ring_to_json(const IntegerRing&) { return "Z"; }
json ring_to_json(const PrimeField& f) { return json{{"Fp", f.p()}}; }

AnyMatrix parse_matrix(const json& j) {
  AnyRing ring = parse_ring(field(j, "ring", "matrix"), "matrix.ring");
  const std::size_t rows = as_index(field(j, "rows", "matrix"), "matrix.rows");
  const std::size_t cols = as_index(field(j, "cols", "matrix"), "matrix.cols");
  const json& entries = field(j, "entries", "matrix");
  return std::visit([&](const auto& r) -> AnyMatrix { return parse_matrix_over(r, entries, rows, cols, "matrix.entries"); },
                    ring);
}

json matrix_to_json(const exactalg::Matrix<IntegerRing>& m) { return matrix_json(m); }
json matrix_to_json(const exactalg::Matrix<PrimeField>& m) { return matrix_json(m); }

AnyLieFile parse_lie(const json& j) {
  AnyRing ring = parse_ring(field(j, "ring", "lie"), "lie.ring");
  return std::visit([&](const auto& r) -> AnyLieFile { return parse_lie_over(r, j); }, ring);
}

json lie_to_json(const liealg::LieAlgebra<IntegerRing>& lie, const std::vector<std::size_t>& generators,
                 const std::vector<liealg::DerivationRule>& rules) {
  return lie_json(lie, generators, rules);
}
json lie_to_json(const liealg::LieAlgebra<PrimeField>& lie, const std::vector<std::size_t>& generators,
                 const std::vector<liealg::DerivationRule>& rules) {
  return lie_json(lie, generators, rules);
}

braces::Brace parse_brace(const json& j) {
  const std::size_t n = as_index(field(j, "order", "brace"), "brace.order");
  auto table = [&](const std::string& key) {
    const json& t = array_field(j, key, "brace");
    if (t.size() != n) fail("brace." + key, "expected " + std::to_string(n) + " rows");
    std::vector<std::vector<braces::Element>> out(n);
    for (std::size_t a = 0; a < n; ++a) {
      const std::string w = at("brace." + key, a);
      if (!t[a].is_array() || t[a].size() != n) fail(w, "expected " + std::to_string(n) + " entries");
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t v = as_index(t[a][b], at(w, b));
        if (v >= n) fail(at(w, b), "element out of range");
        out[a].push_back(static_cast<braces::Element>(v));
      }
    }
    return out;
  };
  return braces::validate_brace(table("add"), table("mul"));
}

json brace_to_json(const braces::Brace& b) {
  const std::size_t n = b.order();
  json add = json::array(), mul = json::array();
  for (braces::Element x = 0; x < n; ++x) {
    json ra = json::array(), rm = json::array();
    for (braces::Element y = 0; y < n; ++y) {
      ra.push_back(b.add(x, y));
      rm.push_back(b.mul(x, y));
    }
    add.push_back(std::move(ra));
    mul.push_back(std::move(rm));
  }
  return json{{"order", n}, {"add", std::move(add)}, {"mul", std::move(mul)}};
}

json enumeration_report(const braces::AbelianGroup& group, const std::vector<braces::RegularSubgroup>& subgroups,
                        const braces::OrbitClassification& orbits) {
  json out = json::array();
  const auto type = braces::abelian_type(group.table()).invariant_factors();
  for (std::size_t k = 0; k < subgroups.size(); ++k) {
    json elems = json::array();
    for (braces::Element a = 0; a < subgroups[k].size(); ++a) elems.push_back(json::array({a, subgroups[k].lambdas()[a]}));
    auto brace = braces::brace_from_regular(group.table(), subgroups[k]);
    bool abelian = true;
    for (braces::Element a = 0; a < brace.order() && abelian; ++a) {
      for (braces::Element b = 0; b < brace.order(); ++b) {
        if (brace.mul(a, b) != brace.mul(b, a)) {
          abelian = false;
          break;
        }
      }
    }
    bool equal = true;
    for (braces::Element x = 0; x < brace.order(); ++x) {
      if (group.table().order(x) != braces::multiplicative_order(brace, x)) {
        equal = false;
        break;
      }
    }
    out.push_back(json{{"subgroup", std::move(elems)},
                       {"orbit_id", orbits.orbit_of[k]},
                       {"additive_type", type},
                       {"multiplicative_abelian", abelian},
                       {"order_equality", equal}});
  }
  return out;
}

AnySystem parse_system(const json& j) {
  AnyRing ring = parse_ring(field(j, "ring", "system"), "system.ring");
  return std::visit([&](const auto& r) -> AnySystem { return parse_system_over(r, j); }, ring);
}

json system_to_json(const polysolve::PolySystem<IntegerRing>& s) { return system_json(s); }
json system_to_json(const polysolve::PolySystem<PrimeField>& s) { return system_json(s); }

polysolve::Witness parse_witness(const json& j) {
  polysolve::Witness w;
  long long p = as_int(field(j, "p", "witness"), "witness.p");
  if (p < 2 || !exactalg::is_prime(static_cast<std::uint64_t>(p))) fail("witness.p", "not a prime");
  w.p = static_cast<std::uint64_t>(p);
  w.n = as_index(field(j, "n", "witness"), "witness.n");
  PrimeField f(w.p);
  for (std::size_t g = 0;; ++g) {
    const std::string key = "E" + std::to_string(g);
    if (!j.contains(key)) break;
    auto m = parse_matrix_over(f, j[key], w.n, w.n, "witness." + key);
    if (!exactalg::is_strictly_upper(m)) fail("witness." + key, "matrix is not strictly upper triangular");
    w.images.push_back(std::move(m));
  }
  if (w.images.empty()) fail("witness", "missing field \"E0\"");
  return w;
}

json witness_to_json(const polysolve::Witness& w) {
  json j{{"p", w.p}, {"n", w.n}};
  for (std::size_t g = 0; g < w.images.size(); ++g) j["E" + std::to_string(g)] = matrix_rows(w.images[g]);
  return j;
}

std::string dump_witness(const polysolve::Witness& w) {
  std::ostringstream os;
  os << "{\n  \"p\": " << w.p << ",\n  \"n\": " << w.n;
  for (std::size_t g = 0; g < w.images.size(); ++g) {
    os << ",\n  \"E" << g << "\": [\n";
    for (std::size_t r = 0; r < w.n; ++r) {
      os << "    [";
      for (std::size_t c = 0; c < w.n; ++c) os << (c ? ", " : "") << w.images[g](r, c);
      os << "]" << (r + 1 < w.n ? ",\n" : "\n");
    }
    os << "  ]";
  }
  os << "\n}\n";
  return os.str();
}

polysolve::Certificate parse_certificate(const json& j) {
  polysolve::Certificate c;
  c.k = as_bigint(field(j, "k", "certificate"), "certificate.k");
  const json& cof = array_field(j, "cofactors", "certificate");
  IntegerRing z;
  for (std::size_t k = 0; k < cof.size(); ++k) {
    c.cofactors.push_back(parse_poly(z, cof[k], at("certificate.cofactors", k), static_cast<std::size_t>(-1)));
  }
  return c;
}

json certificate_to_json(const polysolve::Certificate& c) {
  json cof = json::array();
  for (const auto& p : c.cofactors) cof.push_back(poly_json(p));
  return json{{"k", c.k.get_str()}, {"cofactors", std::move(cof)}};
}

}  // namespace iyb::io
