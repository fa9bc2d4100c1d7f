#include <memory>
#include <sstream>

#include "common.hpp"
#include "iyb/polysolve/groebner.hpp"

namespace iyb::cli {

namespace {

Report repr_gen(const LieSource& src, std::size_t target, bool rabinowitsch, const std::string& out) {
  json j;
  std::size_t nvars = 0, mvars = 0, npolys = 0;
  std::visit(
      [&](const auto& f) {
        if (!f.presented()) throw InputError("the algebra needs generators and rules");
        auto sys = polysolve::generate_system(f.presentation(), target, rabinowitsch);
        nvars = sys.vars.size();
        mvars = sys.matrix_vars;
        npolys = sys.polys.size();
        j = io::system_to_json(sys);
      },
      src.load());
  std::ostringstream os;
  os << "variables: " << nvars << " (" << mvars << " matrix unknowns, " << nvars - mvars << " auxiliary)\n"
     << "polynomials: " << npolys;
  Report r{kOk, os.str(), json{{"variables", nvars}, {"matrix_unknowns", mvars}, {"polynomials", npolys}}};
  if (!out.empty()) {
    io::save_text(out, j.dump() + "\n");
    r.text += "\nwritten to " + out;
  } else {
    r.data["system"] = std::move(j);
  }
  return r;
}

Report repr_verify(const LieSource& src, const std::string& witness_file) {
  auto w = io::parse_witness(io::load_json(witness_file));
  auto lf = src.load_mod_p(w.p);
  if (!lf.presented()) throw InputError("the algebra needs generators and rules");
  polysolve::WitnessReport rep;
  try {
    rep = polysolve::substitute_witness(lf.presentation(), w);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("witness does not fit the algebra: ") + e.what());
  }
  json rels = json::array();
  std::ostringstream os;
  for (const auto& rr : rep.relations) {
    rels.push_back(json{{"i", rr.i}, {"j", rr.j}, {"satisfied", rr.satisfied}, {"nonzero_entries", rr.nonzero_entries}});
    if (!rr.satisfied) os << "relation [e" << rr.i << ",e" << rr.j << "] fails in " << rr.nonzero_entries << " entries\n";
  }
  os << "relations satisfied: " << rep.relations.size() - rep.relations_failed() << " of " << rep.relations.size() << "\n";
  os << "central images nonzero and independent: " << (rep.central_images_independent ? "yes" : "no") << "\n";
  os << "morphism: " << (rep.morphism ? "yes" : "no") << "; injective: " << (rep.injective ? "yes" : "no");
  Report r{rep.injective ? kOk : kRefuted, os.str(),
           json{{"p", w.p},
                {"n", w.n},
                {"relations", rels},
                {"relations_failed", rep.relations_failed()},
                {"morphism", rep.morphism},
                {"central_images_independent", rep.central_images_independent},
                {"injective", rep.injective}}};
  return r;
}

template <class R>
polysolve::PolySystem<exactalg::PrimeField> to_field(const polysolve::PolySystem<R>& s, std::uint64_t p) {
  if constexpr (std::is_same_v<R, exactalg::IntegerRing>) {
    if (p == 0) throw InputError("system is over Z; give --p");
    return polysolve::reduce_mod_p(s, exactalg::PrimeField(p));
  } else {
    if (p != 0 && p != s.ring.p()) throw InputError("--p differs from the system's field");
    return s;
  }
}

struct SolveArgs {
  std::string system, order = "grevlex";
  bool field_equations = false;
  std::uint64_t p = 0;
  std::size_t max_complexity = 256;
};

Report gb_solve(const SolveArgs& a, const Globals& g) {
  auto sys = std::visit([&](const auto& s) { return to_field(s, a.p); }, io::parse_system(io::load_json(a.system)));
  if (a.field_equations) sys = polysolve::with_field_equations(sys);
  polysolve::GroebnerOptions opt;
  if (a.order == "lex") {
    opt.order = polysolve::MonomialOrder::Lex;
  } else if (a.order != "grevlex") {
    throw InputError("--order: expected grevlex or lex");
  }
  opt.max_reductions = g.budget;
  opt.max_complexity = a.max_complexity;
  auto res = polysolve::buchberger(sys, opt);
  json basis = json::array();
  std::ostringstream os;
  for (const auto& b : res.basis) {
    basis.push_back(b.to_string(sys.vars));
    os << b.to_string(sys.vars) << "\n";
  }
  os << (res.inconsistent ? "1 is in the ideal: no solutions over any extension of F_p"
                          : "1 is not in the ideal") << " (" << res.basis.size() << " basis elements, "
     << res.reductions << " reductions)";
  // Exit 1 reports that the system was refuted as inconsistent.
  return Report{res.inconsistent ? kRefuted : kOk, os.str(),
                json{{"basis", basis}, {"inconsistent", res.inconsistent}, {"reductions", res.reductions}}};
}

Report cert_verify(const std::string& system, const std::string& cert, std::uint64_t p) {
  auto any = io::parse_system(io::load_json(system));
  auto* sys = std::get_if<polysolve::PolySystem<exactalg::IntegerRing>>(&any);
  if (sys == nullptr) throw InputError(system + ": certificates are checked over Z; the system must have ring \"Z\"");
  auto c = io::parse_certificate(io::load_json(cert));
  polysolve::CertificateVerdict v;
  try {
    v = polysolve::verify_certificate(*sys, c, p);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return Report{v.certified ? kOk : kRefuted, v.message,
                json{{"identity_holds", v.identity_holds},
                     {"k_coprime_to_p", v.k_coprime_to_p},
                     {"certified", v.certified},
                     {"message", v.message}}};
}

}  // namespace

void register_repr(CLI::App& app, const Globals& g, Runner& run) {
  auto* repr = app.add_subcommand("repr", "Faithful representations by strictly upper matrices");
  repr->require_subcommand(1);

  struct GenArgs {
    LieSource src;
    std::size_t target = 0;
    bool rabinowitsch = false;
    std::string out;
  };
  auto ga = std::make_shared<GenArgs>();
  auto* gen = repr->add_subcommand("gen", "Generate the polynomial system for representations of size n");
  ga->src.add_options(gen);
  gen->add_option("--target", ga->target, "Matrix size n")->required();
  gen->add_flag("--rabinowitsch", ga->rabinowitsch, "Add the auxiliary equation forcing a faithful image");
  gen->add_option("-o,--output", ga->out, "System JSON file");
  gen->callback([ga, &run] { run = [ga] { return repr_gen(ga->src, ga->target, ga->rabinowitsch, ga->out); }; });

  struct VerifyArgs {
    LieSource src;
    std::string witness;
  };
  auto va = std::make_shared<VerifyArgs>();
  auto* ver = repr->add_subcommand("verify", "Check a witness pair of matrices");
  va->src.add_options(ver);
  ver->add_option("--witness", va->witness, "Witness JSON file")->required();
  ver->callback([va, &run] { run = [va] { return repr_verify(va->src, va->witness); }; });

  auto* gb = app.add_subcommand("gb", "Groebner bases over F_p");
  gb->require_subcommand(1);
  auto sa = std::make_shared<SolveArgs>();
  auto* solve = gb->add_subcommand("solve", "Reduced Groebner basis and consistency verdict");
  solve->add_option("--system", sa->system, "System JSON file")->required();
  solve->add_option("--order", sa->order, "grevlex or lex")->capture_default_str();
  solve->add_flag("--field-equations", sa->field_equations, "Append x^p - x for every variable");
  solve->add_option("--p", sa->p, "Reduce a system over Z modulo p");
  solve->add_option("--max-complexity", sa->max_complexity, "Refuse when variables x degree exceeds this")
      ->capture_default_str();
  solve->callback([sa, &g, &run] { run = [sa, &g] { return gb_solve(*sa, g); }; });

  auto* cert = app.add_subcommand("cert", "Nullstellensatz certificates");
  cert->require_subcommand(1);
  struct CertArgs {
    std::string system, cert;
    std::uint64_t p = 0;
  };
  auto ca = std::make_shared<CertArgs>();
  auto* cv = cert->add_subcommand("verify", "Check sum f_i g_i = k over Z and gcd(k, p) = 1");
  cv->add_option("--system", ca->system, "System JSON file over Z")->required();
  cv->add_option("--cert", ca->cert, "Certificate JSON file")->required();
  cv->add_option("--p", ca->p, "Prime")->required();
  cv->callback([ca, &run] { run = [ca] { return cert_verify(ca->system, ca->cert, ca->p); }; });
}

}  // namespace iyb::cli
