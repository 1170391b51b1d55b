#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "gring/group.hpp"
#include "gring/polynomial.hpp"

namespace gring {

// Element of the integral group ring Z[G], stored as a dense exact-integer
// coefficient vector indexed by the group's canonical enumeration.
class RingElement {
public:
  RingElement(GroupPtr group, std::vector<mpz_class> coeffs);

  static RingElement zero(GroupPtr group);
  static RingElement unit(GroupPtr group);
  static RingElement monomial(GroupPtr group, const GroupElement& g);  // the basis element g
  static RingElement all_ones(GroupPtr group);                         // sum of all of G

  const GroupPtr& group_ptr() const { return group_; }
  const AbelianGroup& group() const { return *group_; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  const mpz_class& coeff(std::int64_t index) const { return coeffs_[index]; }
  bool is_zero() const;

  RingElement operator-() const;
  friend RingElement operator+(const RingElement&, const RingElement&);
  friend RingElement operator-(const RingElement&, const RingElement&);
  friend RingElement operator*(const RingElement&, const RingElement&);  // convolution
  friend RingElement operator*(const mpz_class&, const RingElement&);
  bool operator==(const RingElement& other) const;

  RingElement pow(unsigned k) const;

private:
  GroupPtr group_;
  std::vector<mpz_class> coeffs_;
};

// Sum of coefficients; the ring homomorphism Z[G] -> Z.
mpz_class augmentation(const RingElement& a);

// Adams operation psi^m: sends each group element g to g^m. Ring
// endomorphism; psi^1 = id and psi^a . psi^b = psi^{ab}.
RingElement adams(std::int64_t m, const RingElement& a);

// Fundamental lambda-operation theta^ell = (a^ell - psi^ell(a)) / ell for
// prime ell. The division is always exact in Z[G]; a non-exact division
// indicates an internal arithmetic bug and throws.
RingElement theta(std::int64_t ell, const RingElement& a);

// Evaluates f at the group element y: sum_j f_j * y^j in Z[G].
RingElement eval_poly(const IntPolynomial& f, const GroupPtr& group, const GroupElement& y);

std::string to_string(const RingElement& a);

}  // namespace gring
