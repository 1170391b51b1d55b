#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace gring {

// Univariate polynomial with exact integer coefficients, ascending degree,
// trailing zeros trimmed.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);

  static IntPolynomial constant(mpz_class c);
  static IntPolynomial monomial(mpz_class c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  mpz_class coeff(std::size_t i) const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial&, const IntPolynomial&);
  friend IntPolynomial operator-(const IntPolynomial&, const IntPolynomial&);
  friend IntPolynomial operator*(const IntPolynomial&, const IntPolynomial&);
  friend IntPolynomial operator*(const mpz_class&, const IntPolynomial&);
  bool operator==(const IntPolynomial&) const = default;

  IntPolynomial pow(unsigned k) const;

  // Long division over Z; every quotient step must divide exactly, so the
  // divisor's leading coefficient must be +-1 for general numerators.
  static std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& num,
                                                        const IntPolynomial& den);
  // divmod with a zero-remainder assertion.
  static IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den);
  // Coefficientwise exact division by a scalar.
  IntPolynomial divide_exact_scalar(const mpz_class& s) const;

private:
  std::vector<mpz_class> coeffs_;
  void trim();
};

// f_q(t) = (1 - t^q) / (1 - t), the degree q-1 geometric sum.
IntPolynomial poly_f(std::int64_t q);
// g_q(t) = ((1 - t)^{q-1} - f_q(t)) / q, integral for prime q.
IntPolynomial poly_g(std::int64_t q);
// h(t) = (p - f_p(t)) / (1 - t), degree p-2.
IntPolynomial poly_h(std::int64_t p);

}  // namespace gring
