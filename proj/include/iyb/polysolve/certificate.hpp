#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iyb/polysolve/system.hpp"

namespace iyb::polysolve {

/// Cofactors g_i and a constant k claimed to satisfy Σ f_i g_i = k in Z[vars].
struct Certificate {
  Integer k;
  std::vector<Polynomial<IntegerRing>> cofactors;
};

struct CertificateVerdict {
  bool identity_holds = false;
  bool k_coprime_to_p = false;
  bool certified = false;
  std::string message;
};

/// Certified only when the identity holds exactly over Z and gcd(k, p) = 1,
/// in which case the system has no solution over any field of
/// characteristic p. Throws DimensionMismatch on an arity mismatch and
/// DomainError when k = 0.
CertificateVerdict verify_certificate(const PolySystem<IntegerRing>& system, const Certificate& cert, std::uint64_t p);

}  // namespace iyb::polysolve
