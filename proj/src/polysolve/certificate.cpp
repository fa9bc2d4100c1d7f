#include "iyb/polysolve/certificate.hpp"

namespace iyb::polysolve {

CertificateVerdict verify_certificate(const PolySystem<IntegerRing>& system, const Certificate& cert, std::uint64_t p) {
  if (cert.cofactors.size() != system.polys.size()) {
    throw DimensionMismatch("certificate has " + std::to_string(cert.cofactors.size()) + " cofactors for " +
                            std::to_string(system.polys.size()) + " polynomials");
  }
  if (sgn(cert.k) == 0) throw DomainError("certificate constant k must be nonzero");
  if (!exactalg::is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");

  IntegerRing z;
  Polynomial<IntegerRing> sum(z);
  for (std::size_t i = 0; i < cert.cofactors.size(); ++i) sum = sum + system.polys[i] * cert.cofactors[i];

  CertificateVerdict v;
  v.identity_holds = sum == Polynomial<IntegerRing>::constant(z, cert.k);
  Integer g;
  mpz_gcd_ui(g.get_mpz_t(), cert.k.get_mpz_t(), p);
  v.k_coprime_to_p = g == 1;
  v.certified = v.identity_holds && v.k_coprime_to_p;
  if (!v.identity_holds) {
    v.message = "identity check failed";
  } else if (!v.k_coprime_to_p) {
    v.message = "identity holds but k = " + cert.k.get_str() + " is divisible by p = " + std::to_string(p);
  } else {
    v.message = "certified unsolvable over F_" + std::to_string(p);
  }
  return v;
}

}  // namespace iyb::polysolve
