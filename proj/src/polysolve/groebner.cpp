#include "iyb/polysolve/groebner.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include <omp.h>

namespace iyb::polysolve {

namespace {

using Exp = std::vector<std::uint16_t>;

struct Term {
  Exp exp;
  std::uint64_t coeff;
};

/// Dense polynomial with terms in strictly decreasing monomial order.
using DPoly = std::vector<Term>;

class Engine {
 public:
  Engine(const PrimeField& field, std::size_t nvars, MonomialOrder order) : f_(field), nvars_(nvars), order_(order) {}

  /// Sign of a - b in the monomial order.
  int cmp(const Exp& a, const Exp& b) const {
    if (order_ == MonomialOrder::Grevlex) {
      unsigned da = 0, db = 0;
      for (std::size_t i = 0; i < nvars_; ++i) {
        da += a[i];
        db += b[i];
      }
      if (da != db) return da < db ? -1 : 1;
      for (std::size_t i = nvars_; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  static bool divides(const Exp& a, const Exp& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] > b[i]) return false;
    }
    return true;
  }
  static Exp lcm(const Exp& a, const Exp& b) {
    Exp out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
  }
  static bool coprime(const Exp& a, const Exp& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != 0 && b[i] != 0) return false;
    }
    return true;
  }
  static unsigned degree(const Exp& a) {
    unsigned d = 0;
    for (auto e : a) d += e;
    return d;
  }

  DPoly from_sparse(const Polynomial<PrimeField>& p) const {
    DPoly out;
    for (const auto& [m, c] : p.terms()) {
      Exp e(nvars_, 0);
      for (const auto& [v, k] : m.factors()) {
        if (v >= nvars_) throw DimensionMismatch("polynomial uses a variable outside the system");
        e[v] = static_cast<std::uint16_t>(k);
      }
      out.push_back({std::move(e), c});
    }
    sort(out);
    return out;
  }

  Polynomial<PrimeField> to_sparse(const DPoly& p) const {
    Polynomial<PrimeField> out(f_);
    for (const auto& t : p) {
      std::vector<Monomial::Factor> fs;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (t.exp[i] != 0) fs.emplace_back(static_cast<std::uint32_t>(i), t.exp[i]);
      }
      out.add_term(Monomial(std::move(fs)), t.coeff);
    }
    return out;
  }

  void sort(DPoly& p) const {
    std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return cmp(a.exp, b.exp) > 0; });
  }

  void make_monic(DPoly& p) const {
    if (p.empty()) return;
    auto inv = f_.inv(p.front().coeff);
    for (auto& t : p) t.coeff = f_.mul(t.coeff, inv);
  }

  /// a - c·x^shift·b, merging the sorted term lists.
  DPoly sub_mul(const DPoly& a, std::uint64_t c, const Exp& shift, const DPoly& b) const {
    DPoly out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    auto shifted = [&](const Term& t) {
      Term s{t.exp, f_.neg(f_.mul(c, t.coeff))};
      for (std::size_t k = 0; k < nvars_; ++k) s.exp[k] = static_cast<std::uint16_t>(s.exp[k] + shift[k]);
      return s;
    };
    while (i < a.size() || j < b.size()) {
      if (j == b.size()) {
        out.push_back(a[i++]);
        continue;
      }
      Term sb = shifted(b[j]);
      if (i == a.size()) {
        out.push_back(std::move(sb));
        ++j;
        continue;
      }
      int s = cmp(a[i].exp, sb.exp);
      if (s > 0) {
        out.push_back(a[i++]);
      } else if (s < 0) {
        out.push_back(std::move(sb));
        ++j;
      } else {
        auto sum = f_.add(a[i].coeff, sb.coeff);
        if (sum != 0) out.push_back({a[i].exp, sum});
        ++i;
        ++j;
      }
    }
    return out;
  }

  Exp quotient(const Exp& a, const Exp& b) const {
    Exp out(nvars_);
    for (std::size_t k = 0; k < nvars_; ++k) out[k] = static_cast<std::uint16_t>(a[k] - b[k]);
    return out;
  }

  /// Full reduction of h by the (monic) divisors.
  DPoly reduce(DPoly h, const std::vector<const DPoly*>& divisors) const {
    DPoly rest;
    while (!h.empty()) {
      const Term& lead = h.front();
      const DPoly* by = nullptr;
      for (const DPoly* g : divisors) {
        if (divides(g->front().exp, lead.exp)) {
          by = g;
          break;
        }
      }
      if (by == nullptr) {
        rest.push_back(lead);
        h.erase(h.begin());
        continue;
      }
      h = sub_mul(h, lead.coeff, quotient(lead.exp, by->front().exp), *by);
    }
    return rest;
  }

  DPoly spoly(const DPoly& a, const DPoly& b) const {
    Exp l = lcm(a.front().exp, b.front().exp);
    // Both monic: x^(l-la)·a - x^(l-lb)·b.
    DPoly sa = sub_mul(DPoly{}, f_.neg(1), quotient(l, a.front().exp), a);
    return sub_mul(sa, 1, quotient(l, b.front().exp), b);
  }

  const PrimeField& field() const { return f_; }
  std::size_t nvars() const { return nvars_; }

 private:
  PrimeField f_;
  std::size_t nvars_;
  MonomialOrder order_;
};

struct Pair {
  std::size_t i, j;
  Exp lcm;
};

class Buchberger {
 public:
  Buchberger(const Engine& e, const GroebnerOptions& opt) : e_(e), opt_(opt) {}

  GroebnerResult run(std::vector<DPoly> inputs) {
    GroebnerResult result;
    for (auto& f : inputs) {
      f = e_.reduce(std::move(f), active_divisors());
      if (f.empty()) continue;
      e_.make_monic(f);
      insert(std::move(f));
    }
    while (!pairs_.empty()) {
      auto batch = select_batch();
      std::vector<DPoly> reduced(batch.size());
      const auto divisors = active_divisors();
      auto work = [&](std::ptrdiff_t k) {
        const auto& pr = batch[static_cast<std::size_t>(k)];
        reduced[static_cast<std::size_t>(k)] = e_.reduce(e_.spoly(polys_[pr.i], polys_[pr.j]), divisors);
      };
      const auto n = static_cast<std::ptrdiff_t>(batch.size());
      if (opt_.parallel && n > 1) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t k = 0; k < n; ++k) work(k);
      } else {
        for (std::ptrdiff_t k = 0; k < n; ++k) work(k);
      }
      for (auto& h : reduced) {
        if (++result.reductions > opt_.max_reductions) {
          throw BudgetExceeded("Groebner computation exceeded " + std::to_string(opt_.max_reductions) +
                               " S-polynomial reductions");
        }
        // Earlier members of the batch may have been added meanwhile.
        if (!h.empty() && batch.size() > 1) h = e_.reduce(std::move(h), active_divisors());
        if (h.empty()) continue;
        e_.make_monic(h);
        insert(std::move(h));
      }
    }
    result.pairs_skipped = skipped_;
    result.basis = reduced_basis();
    result.inconsistent = result.basis.size() == 1 && result.basis.front().is_constant();
    return result;
  }

 private:
  std::vector<const DPoly*> active_divisors() const {
    std::vector<const DPoly*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) out.push_back(&polys_[k]);
    }
    return out;
  }

  const Exp& lm(std::size_t k) const { return polys_[k].front().exp; }

  /// Pair update of Gebauer and Möller for a new element h.
  void insert(DPoly h) {
    const std::size_t t = polys_.size();
    polys_.push_back(std::move(h));
    active_.push_back(true);
    const Exp& lt = lm(t);

    std::vector<Pair> c;
    for (std::size_t i = 0; i < t; ++i) {
      if (active_[i]) c.push_back({i, t, Engine::lcm(lm(i), lt)});
    }
    // Keep a new pair unless another new pair has a strictly finer lcm
    // (coprime pairs are kept here and dropped just below).
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const auto& p = c[k];
      bool keep = Engine::coprime(lm(p.i), lt);
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < c.size() && keep; ++q) keep = !Engine::divides(c[q].lcm, p.lcm);
        for (const auto& q : d) {
          if (!keep) break;
          keep = !Engine::divides(q.lcm, p.lcm);
        }
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> e;
    for (auto& p : d) {
      if (Engine::coprime(lm(p.i), lt)) {
        ++skipped_;
      } else {
        e.push_back(std::move(p));
      }
    }
    std::vector<Pair> kept;
    for (auto& p : pairs_) {
      bool redundant = Engine::divides(lt, p.lcm) && Engine::lcm(lm(p.i), lt) != p.lcm && Engine::lcm(lm(p.j), lt) != p.lcm;
      if (redundant) {
        ++skipped_;
      } else {
        kept.push_back(std::move(p));
      }
    }
    pairs_ = std::move(kept);
    for (auto& p : e) pairs_.push_back(std::move(p));
    skipped_ += c.size() - d.size();

    for (std::size_t i = 0; i < t; ++i) {
      if (active_[i] && Engine::divides(lt, lm(i))) active_[i] = false;
    }
  }

  /// Normal selection: the pair with least lcm (ties by index). In parallel
  /// mode the batch also takes every other pair of the same lcm degree.
  std::vector<Pair> select_batch() {
    auto less = [&](const Pair& a, const Pair& b) {
      int s = e_.cmp(a.lcm, b.lcm);
      if (s != 0) return s < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    };
    std::sort(pairs_.begin(), pairs_.end(), less);
    std::size_t take = 1;
    if (opt_.parallel) {
      const unsigned deg = Engine::degree(pairs_.front().lcm);
      const auto cap = static_cast<std::size_t>(4 * omp_get_max_threads());
      while (take < pairs_.size() && take < cap && Engine::degree(pairs_[take].lcm) == deg) ++take;
    }
    std::vector<Pair> batch(pairs_.begin(), pairs_.begin() + static_cast<std::ptrdiff_t>(take));
    pairs_.erase(pairs_.begin(), pairs_.begin() + static_cast<std::ptrdiff_t>(take));
    return batch;
  }

  std::vector<Polynomial<PrimeField>> reduced_basis() const {
    std::vector<DPoly> minimal;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) minimal.push_back(polys_[k]);
    }
    std::vector<DPoly> out;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const DPoly*> others;
      for (std::size_t q = 0; q < minimal.size(); ++q) {
        if (q != k) others.push_back(&minimal[q]);
      }
      // Lead term is irreducible by minimality; reduce the tail only.
      DPoly tail(minimal[k].begin() + 1, minimal[k].end());
      DPoly r = e_.reduce(std::move(tail), others);
      r.insert(r.begin(), minimal[k].front());
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [&](const DPoly& a, const DPoly& b) { return e_.cmp(a.front().exp, b.front().exp) < 0; });
    std::vector<Polynomial<PrimeField>> sparse;
    for (const auto& p : out) sparse.push_back(e_.to_sparse(p));
    return sparse;
  }

  const Engine& e_;
  const GroebnerOptions& opt_;
  std::vector<DPoly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::size_t skipped_ = 0;
};

std::size_t var_bound(const std::vector<Polynomial<PrimeField>>& ps) {
  std::size_t n = 0;
  for (const auto& p : ps) n = std::max<std::size_t>(n, p.var_bound());
  return n;
}

}  // namespace

GroebnerResult buchberger(const PolySystem<PrimeField>& system, const GroebnerOptions& options) {
  const std::size_t nvars = std::max(system.vars.size(), var_bound(system.polys));
  std::size_t max_deg = 0;
  for (const auto& p : system.polys) max_deg = std::max<std::size_t>(max_deg, p.total_degree());
  if (nvars * max_deg > options.max_complexity) {
    throw BudgetExceeded("system with " + std::to_string(nvars) + " variables and degree " + std::to_string(max_deg) +
                         " exceeds the complexity budget " + std::to_string(options.max_complexity));
  }
  Engine e(system.ring, nvars, options.order);
  std::vector<DPoly> inputs;
  for (const auto& p : system.polys) {
    if (!p.is_zero()) inputs.push_back(e.from_sparse(p));
  }
  return Buchberger(e, options).run(std::move(inputs));
}

PolySystem<PrimeField> with_field_equations(const PolySystem<PrimeField>& system) {
  PolySystem<PrimeField> out = system;
  const auto& f = system.ring;
  for (std::uint32_t v = 0; v < system.vars.size(); ++v) {
    Polynomial<PrimeField> eq(f);
    eq.add_term(Monomial::variable(v, static_cast<std::uint32_t>(f.p())), 1);
    eq.add_term(Monomial::variable(v), f.neg(1));
    out.polys.push_back(std::move(eq));
    out.labels.push_back(system.vars[v] + "^p - " + system.vars[v]);
  }
  return out;
}

Polynomial<PrimeField> normal_form(const Polynomial<PrimeField>& f, const std::vector<Polynomial<PrimeField>>& divisors,
                                   MonomialOrder order) {
  std::vector<Polynomial<PrimeField>> all = divisors;
  all.push_back(f);
  Engine e(f.ring(), var_bound(all), order);
  std::vector<DPoly> ds;
  for (const auto& d : divisors) {
    if (d.is_zero()) continue;
    ds.push_back(e.from_sparse(d));
    e.make_monic(ds.back());
  }
  std::vector<const DPoly*> ptrs;
  for (const auto& d : ds) ptrs.push_back(&d);
  return e.to_sparse(e.reduce(e.from_sparse(f), ptrs));
}

bool is_groebner_basis(const std::vector<Polynomial<PrimeField>>& basis, MonomialOrder order) {
  if (basis.empty()) return true;
  Engine e(basis.front().ring(), var_bound(basis), order);
  std::vector<DPoly> ds;
  for (const auto& b : basis) {
    if (b.is_zero()) continue;
    ds.push_back(e.from_sparse(b));
    e.make_monic(ds.back());
  }
  std::vector<const DPoly*> ptrs;
  for (const auto& d : ds) ptrs.push_back(&d);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = i + 1; j < ds.size(); ++j) {
      if (!e.reduce(e.spoly(ds[i], ds[j]), ptrs).empty()) return false;
    }
  }
  return true;
}

}  // namespace iyb::polysolve
