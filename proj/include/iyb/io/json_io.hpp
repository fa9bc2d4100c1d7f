#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "iyb/braces/brace.hpp"
#include "iyb/braces/enumerate.hpp"
#include "iyb/exactalg/matrix.hpp"
#include "iyb/liealg/presented.hpp"
#include "iyb/polysolve/certificate.hpp"
#include "iyb/polysolve/system.hpp"

namespace iyb::io {

using json = nlohmann::ordered_json;
using exactalg::IntegerRing;
using exactalg::PrimeField;

/// Reads and parses a JSON file; InputError names the file and the line of
/// a syntax error.
json load_json(const std::filesystem::path& path);
void save_text(const std::filesystem::path& path, const std::string& text);

// Every parse_* below throws InputError naming the offending field path.

/// "Z" or {"Fp": p}.
using AnyRing = std::variant<IntegerRing, PrimeField>;
AnyRing parse_ring(const json& j, const std::string& where = "ring");
json ring_to_json(const IntegerRing&);
json ring_to_json(const PrimeField& f);

using AnyMatrix = std::variant<exactalg::Matrix<IntegerRing>, exactalg::Matrix<PrimeField>>;
AnyMatrix parse_matrix(const json& j);
json matrix_to_json(const exactalg::Matrix<IntegerRing>& m);
json matrix_to_json(const exactalg::Matrix<PrimeField>& m);

/// Lie algebra file; generators and rules are optional (both empty means a
/// bare structure-constant table).
template <class R>
struct LieFile {
  liealg::LieAlgebra<R> algebra;
  std::vector<std::size_t> generators;
  std::vector<liealg::DerivationRule> rules;

  bool presented() const { return !generators.empty(); }
  liealg::PresentedLieAlgebra<R> presentation() const { return {algebra, generators, rules}; }
};
using AnyLieFile = std::variant<LieFile<IntegerRing>, LieFile<PrimeField>>;
AnyLieFile parse_lie(const json& j);
json lie_to_json(const liealg::LieAlgebra<IntegerRing>& lie, const std::vector<std::size_t>& generators = {},
                 const std::vector<liealg::DerivationRule>& rules = {});
json lie_to_json(const liealg::LieAlgebra<PrimeField>& lie, const std::vector<std::size_t>& generators = {},
                 const std::vector<liealg::DerivationRule>& rules = {});

/// Validates the axioms; a violation surfaces as BraceAxiomError.
braces::Brace parse_brace(const json& j);
json brace_to_json(const braces::Brace& b);

/// One entry per subgroup in list order.
json enumeration_report(const braces::AbelianGroup& group, const std::vector<braces::RegularSubgroup>& subgroups,
                        const braces::OrbitClassification& orbits);

using AnySystem = std::variant<polysolve::PolySystem<IntegerRing>, polysolve::PolySystem<PrimeField>>;
AnySystem parse_system(const json& j);
json system_to_json(const polysolve::PolySystem<IntegerRing>& s);
json system_to_json(const polysolve::PolySystem<PrimeField>& s);

polysolve::Witness parse_witness(const json& j);
json witness_to_json(const polysolve::Witness& w);
/// Canonical text form: one matrix row per line. Parsing this text and
/// writing it again reproduces it byte for byte.
std::string dump_witness(const polysolve::Witness& w);

polysolve::Certificate parse_certificate(const json& j);
json certificate_to_json(const polysolve::Certificate& c);

}  // namespace iyb::io
