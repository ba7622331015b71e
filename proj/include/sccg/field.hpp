#pragma once

#include <cstdint>
#include <vector>

namespace sccg {

// GF(p^k) with elements 0..q-1. An element encodes the coefficient vector of
// a polynomial over GF(p) in base p, so 0 is zero, 1 is one and 0..p-1 is the
// prime subfield. Arithmetic is by lookup table.
class FieldTable {
 public:
  // q must be a prime power with q <= 1024.
  static FieldTable make(unsigned q);

  unsigned size() const { return q_; }
  unsigned characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  // Coefficients of the monic modulus, constant term first.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
  // Throws InputError for zero.
  unsigned inv(unsigned a) const;

  // Exhaustive check of the field axioms.
  bool satisfies_axioms() const;

 private:
  unsigned q_ = 0, p_ = 0, k_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<unsigned> add_, mul_, neg_, inv_;
};

// Returns (p, k) with q = p^k, or (0, 0) if q is not a prime power.
std::pair<unsigned, unsigned> prime_power_decomposition(unsigned q);

}  // namespace sccg
