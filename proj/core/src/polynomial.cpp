#include "gring/polynomial.hpp"

#include <stdexcept>

namespace gring {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(mpz_class c) {
  return IntPolynomial(std::vector<mpz_class>{std::move(c)});
}

IntPolynomial IntPolynomial::monomial(mpz_class c, std::size_t degree) {
  std::vector<mpz_class> v(degree + 1, 0);
  v[degree] = std::move(c);
  return IntPolynomial(std::move(v));
}

mpz_class IntPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<mpz_class> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  return a + (-b);
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const mpz_class& s, const IntPolynomial& a) {
  std::vector<mpz_class> v(a.coeffs_.size());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = s * a.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::pow(unsigned k) const {
  IntPolynomial out = constant(1);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod(const IntPolynomial& num,
                                                              const IntPolynomial& den) {
  if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<mpz_class> rem = num.coeffs_;
  const auto& d = den.coeffs_;
  const mpz_class& lead = d.back();
  if (static_cast<int>(rem.size()) < static_cast<int>(d.size()))
    return {IntPolynomial{}, num};
  std::vector<mpz_class> quot(rem.size() - d.size() + 1, 0);
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    const mpz_class& top = rem[k + d.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw std::domain_error("polynomial division step not exact over Z");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    quot[k] = q;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= q * d[j];
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& num, const IntPolynomial& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw std::domain_error("polynomial division left a remainder");
  return q;
}

IntPolynomial IntPolynomial::divide_exact_scalar(const mpz_class& s) const {
  std::vector<mpz_class> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!mpz_divisible_p(coeffs_[i].get_mpz_t(), s.get_mpz_t()))
      throw std::domain_error("scalar division of polynomial not exact");
    mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), s.get_mpz_t());
  }
  return IntPolynomial(std::move(v));
}

namespace {

IntPolynomial one_minus_t_pow(std::int64_t q) {
  // 1 - t^q
  std::vector<mpz_class> v(q + 1, 0);
  v[0] = 1;
  v[q] = -1;
  return IntPolynomial(std::move(v));
}

}  // namespace

IntPolynomial poly_f(std::int64_t q) {
  return IntPolynomial::divide_exact(one_minus_t_pow(q), one_minus_t_pow(1));
}

IntPolynomial poly_g(std::int64_t q) {
  IntPolynomial num = one_minus_t_pow(1).pow(static_cast<unsigned>(q - 1)) - poly_f(q);
  return num.divide_exact_scalar(mpz_class(q));
}

IntPolynomial poly_h(std::int64_t p) {
  IntPolynomial num = IntPolynomial::constant(p) - poly_f(p);
  return IntPolynomial::divide_exact(num, one_minus_t_pow(1));
}

}  // namespace gring
