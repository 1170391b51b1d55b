#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace gring {

using Exponents = std::vector<std::int64_t>;

bool is_prime(std::int64_t n);

// Element of a finite abelian group, written additively as an exponent
// tuple (a_1,...,a_r) with 0 <= a_i < c_i.
struct GroupElement {
  Exponents exps;

  bool is_identity() const;
  bool operator==(const GroupElement&) const = default;
  auto operator<=>(const GroupElement&) const = default;
};

std::string to_string(const GroupElement& g);

class AbelianGroup;
using GroupPtr = std::shared_ptr<const AbelianGroup>;

// Finite abelian group presented as a direct product of cyclic groups of
// orders (c_1,...,c_r). The canonical element enumeration is mixed-radix
// lexicographic with the last coordinate moving fastest and the identity
// first; this order is the indexing contract for all coefficient vectors
// and lattice coordinates built on top of the group.
//
// Immutable after construction.
class AbelianGroup {
public:
  static GroupPtr create(Exponents orders);

  std::int64_t order() const { return n_; }
  int rank() const { return static_cast<int>(orders_.size()); }
  const Exponents& orders() const { return orders_; }

  GroupElement identity() const;
  // Reduces the given exponents componentwise mod c_i.
  GroupElement make(Exponents exps) const;

  std::int64_t index_of(const GroupElement& g) const;
  GroupElement at(std::int64_t index) const;
  std::vector<GroupElement> elements() const;

  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& g) const;
  GroupElement pow(const GroupElement& g, std::int64_t m) const;

  // Index-level arithmetic used by the convolution product.
  std::int64_t mul_index(std::int64_t a, std::int64_t b) const;
  std::int64_t pow_index(std::int64_t a, std::int64_t m) const;

  bool same_as(const AbelianGroup& other) const { return orders_ == other.orders_; }

private:
  explicit AbelianGroup(Exponents orders);

  Exponents orders_;
  std::vector<std::int64_t> strides_;
  std::int64_t n_;
  std::vector<std::int64_t> mul_table_;  // n*n, row-major
};

// Abelian group of prime-power order n = p^e, the orders list consisting of
// powers of the single prime p.
class PrimaryGroup {
public:
  PrimaryGroup(std::int64_t p, Exponents orders);

  std::int64_t prime() const { return p_; }
  int exponent() const { return e_; }  // n = p^e
  int rank() const { return group_->rank(); }
  std::int64_t order() const { return group_->order(); }
  const AbelianGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }

  // "p:c1,c2,..." spec string for this group.
  std::string spec() const;

private:
  std::int64_t p_;
  int e_;
  GroupPtr group_;
};

// Direct product of two primary groups of coprime order. Elements are
// indexed with the first factor major, so coefficient vectors over the
// product are Kronecker products of coefficient vectors over the factors.
class ProductGroup {
public:
  ProductGroup(PrimaryGroup g1, PrimaryGroup g2);

  const PrimaryGroup& factor1() const { return g1_; }
  const PrimaryGroup& factor2() const { return g2_; }
  std::int64_t order() const { return combined_->order(); }
  const AbelianGroup& group() const { return *combined_; }
  const GroupPtr& group_ptr() const { return combined_; }

private:
  PrimaryGroup g1_, g2_;
  GroupPtr combined_;
};

}  // namespace gring
