#include "gring/group.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gring {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool GroupElement::is_identity() const {
  for (auto e : exps)
    if (e != 0) return false;
  return true;
}

std::string to_string(const GroupElement& g) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < g.exps.size(); ++i) {
    if (i) os << ',';
    os << g.exps[i];
  }
  os << ')';
  return os.str();
}

AbelianGroup::AbelianGroup(Exponents orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw std::invalid_argument("group needs at least one cyclic factor");
  n_ = 1;
  for (auto c : orders_) {
    if (c < 1) throw std::invalid_argument("cyclic order must be positive");
    n_ *= c;
  }
  strides_.assign(orders_.size(), 1);
  for (int i = static_cast<int>(orders_.size()) - 2; i >= 0; --i)
    strides_[i] = strides_[i + 1] * orders_[i + 1];
  mul_table_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (std::int64_t a = 0; a < n_; ++a) {
    for (std::int64_t b = 0; b < n_; ++b) {
      std::int64_t idx = 0;
      for (std::size_t i = 0; i < orders_.size(); ++i) {
        std::int64_t ai = (a / strides_[i]) % orders_[i];
        std::int64_t bi = (b / strides_[i]) % orders_[i];
        idx += ((ai + bi) % orders_[i]) * strides_[i];
      }
      mul_table_[static_cast<std::size_t>(a) * n_ + b] = idx;
    }
  }
}

GroupPtr AbelianGroup::create(Exponents orders) {
  return GroupPtr(new AbelianGroup(std::move(orders)));
}

GroupElement AbelianGroup::identity() const {
  return GroupElement{Exponents(orders_.size(), 0)};
}

GroupElement AbelianGroup::make(Exponents exps) const {
  if (exps.size() != orders_.size())
    throw std::invalid_argument("exponent tuple has wrong length");
  for (std::size_t i = 0; i < exps.size(); ++i) {
    exps[i] %= orders_[i];
    if (exps[i] < 0) exps[i] += orders_[i];
  }
  return GroupElement{std::move(exps)};
}

std::int64_t AbelianGroup::index_of(const GroupElement& g) const {
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) idx += g.exps[i] * strides_[i];
  return idx;
}

GroupElement AbelianGroup::at(std::int64_t index) const {
  Exponents exps(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i)
    exps[i] = (index / strides_[i]) % orders_[i];
  return GroupElement{std::move(exps)};
}

std::vector<GroupElement> AbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(n_);
  for (std::int64_t i = 0; i < n_; ++i) out.push_back(at(i));
  return out;
}

GroupElement AbelianGroup::mul(const GroupElement& a, const GroupElement& b) const {
  return at(mul_index(index_of(a), index_of(b)));
}

GroupElement AbelianGroup::inverse(const GroupElement& g) const {
  Exponents exps(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i)
    exps[i] = (orders_[i] - g.exps[i]) % orders_[i];
  return GroupElement{std::move(exps)};
}

GroupElement AbelianGroup::pow(const GroupElement& g, std::int64_t m) const {
  Exponents exps(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    std::int64_t v = (g.exps[i] * (m % orders_[i])) % orders_[i];
    if (v < 0) v += orders_[i];
    exps[i] = v;
  }
  return GroupElement{std::move(exps)};
}

std::int64_t AbelianGroup::mul_index(std::int64_t a, std::int64_t b) const {
  return mul_table_[static_cast<std::size_t>(a) * n_ + b];
}

std::int64_t AbelianGroup::pow_index(std::int64_t a, std::int64_t m) const {
  return index_of(pow(at(a), m));
}

namespace {

bool is_power_of(std::int64_t value, std::int64_t p) {
  while (value % p == 0) value /= p;
  return value == 1;
}

}  // namespace

PrimaryGroup::PrimaryGroup(std::int64_t p, Exponents orders) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  e_ = 0;
  for (auto c : orders) {
    if (c < p || !is_power_of(c, p))
      throw std::invalid_argument("each cyclic order must be a power of p, at least p");
    for (std::int64_t v = c; v > 1; v /= p) ++e_;
  }
  group_ = AbelianGroup::create(std::move(orders));
}

std::string PrimaryGroup::spec() const {
  std::ostringstream os;
  os << p_ << ':';
  const auto& orders = group_->orders();
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) os << ',';
    os << orders[i];
  }
  return os.str();
}

ProductGroup::ProductGroup(PrimaryGroup g1, PrimaryGroup g2)
    : g1_(std::move(g1)), g2_(std::move(g2)) {
  if (g1_.prime() == g2_.prime())
    throw std::invalid_argument("product factors must have distinct primes");
  Exponents combined = g1_.group().orders();
  const auto& o2 = g2_.group().orders();
  combined.insert(combined.end(), o2.begin(), o2.end());
  combined_ = AbelianGroup::create(std::move(combined));
}

}  // namespace gring
