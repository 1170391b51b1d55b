#include "gring/ring.hpp"

#include <sstream>
#include <stdexcept>

namespace gring {

namespace {

void require_same_group(const RingElement& a, const RingElement& b) {
  if (!a.group().same_as(b.group()))
    throw std::invalid_argument("ring elements over different groups");
}

}  // namespace

RingElement::RingElement(GroupPtr group, std::vector<mpz_class> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  if (static_cast<std::int64_t>(coeffs_.size()) != group_->order())
    throw std::invalid_argument("coefficient vector length must equal group order");
}

RingElement RingElement::zero(GroupPtr group) {
  auto n = group->order();
  return RingElement(std::move(group), std::vector<mpz_class>(n, 0));
}

RingElement RingElement::unit(GroupPtr group) {
  auto out = zero(std::move(group));
  out.coeffs_[0] = 1;
  return out;
}

RingElement RingElement::monomial(GroupPtr group, const GroupElement& g) {
  auto idx = group->index_of(g);
  auto out = zero(std::move(group));
  out.coeffs_[idx] = 1;
  return out;
}

RingElement RingElement::all_ones(GroupPtr group) {
  auto n = group->order();
  return RingElement(std::move(group), std::vector<mpz_class>(n, 1));
}

bool RingElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

RingElement RingElement::operator-() const {
  std::vector<mpz_class> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
  return RingElement(group_, std::move(v));
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  require_same_group(a, b);
  std::vector<mpz_class> v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeffs_[i] + b.coeffs_[i];
  return RingElement(a.group_, std::move(v));
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  require_same_group(a, b);
  std::vector<mpz_class> v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeffs_[i] - b.coeffs_[i];
  return RingElement(a.group_, std::move(v));
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same_group(a, b);
  const auto& g = a.group();
  std::int64_t n = g.order();
  std::vector<mpz_class> v(n, 0);
  for (std::int64_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::int64_t j = 0; j < n; ++j) {
      if (b.coeffs_[j] == 0) continue;
      v[g.mul_index(i, j)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return RingElement(a.group_, std::move(v));
}

RingElement operator*(const mpz_class& s, const RingElement& a) {
  std::vector<mpz_class> v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = s * a.coeffs_[i];
  return RingElement(a.group_, std::move(v));
}

bool RingElement::operator==(const RingElement& other) const {
  return group_->same_as(*other.group_) && coeffs_ == other.coeffs_;
}

RingElement RingElement::pow(unsigned k) const {
  RingElement out = unit(group_);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

mpz_class augmentation(const RingElement& a) {
  mpz_class s = 0;
  for (const auto& c : a.coeffs()) s += c;
  return s;
}

RingElement adams(std::int64_t m, const RingElement& a) {
  if (m < 1) throw std::invalid_argument("adams operation needs m >= 1");
  const auto& g = a.group();
  std::vector<mpz_class> v(g.order(), 0);
  for (std::int64_t i = 0; i < g.order(); ++i) {
    if (a.coeff(i) == 0) continue;
    v[g.pow_index(i, m)] += a.coeff(i);
  }
  return RingElement(a.group_ptr(), std::move(v));
}

RingElement theta(std::int64_t ell, const RingElement& a) {
  if (!is_prime(ell)) throw std::invalid_argument("theta is defined for prime ell only");
  RingElement num = a.pow(static_cast<unsigned>(ell)) - adams(ell, a);
  mpz_class l(ell);
  std::vector<mpz_class> v(num.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const mpz_class& c = num.coeffs()[i];
    if (!mpz_divisible_p(c.get_mpz_t(), l.get_mpz_t()))
      throw std::logic_error("theta: a^ell - psi^ell(a) not divisible by ell");
    mpz_divexact(v[i].get_mpz_t(), c.get_mpz_t(), l.get_mpz_t());
  }
  return RingElement(a.group_ptr(), std::move(v));
}

RingElement eval_poly(const IntPolynomial& f, const GroupPtr& group, const GroupElement& y) {
  std::vector<mpz_class> v(group->order(), 0);
  std::int64_t yi = group->index_of(y);
  std::int64_t acc = 0;  // index of y^j
  for (std::size_t j = 0; j < f.coeffs().size(); ++j) {
    v[acc] += f.coeffs()[j];
    acc = group->mul_index(acc, yi);
  }
  return RingElement(group, std::move(v));
}

std::string to_string(const RingElement& a) {
  std::ostringstream os;
  bool first = true;
  for (std::int64_t i = 0; i < a.group().order(); ++i) {
    const mpz_class& c = a.coeff(i);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    mpz_class mag = abs(c);
    GroupElement g = a.group().at(i);
    if (g.is_identity()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      bool firstvar = true;
      for (std::size_t j = 0; j < g.exps.size(); ++j) {
        if (g.exps[j] == 0) continue;
        if (!firstvar) os << "*";
        os << "g" << j;
        if (g.exps[j] != 1) os << "^" << g.exps[j];
        firstvar = false;
      }
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

}  // namespace gring
