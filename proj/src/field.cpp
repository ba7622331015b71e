#include "sccg/field.hpp"

#include <string>

#include "sccg/errors.hpp"

namespace sccg {

namespace {

using Poly = std::vector<unsigned>;  // coefficients mod p, constant term first

Poly decode(unsigned value, unsigned p, unsigned k) {
  Poly c(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    c[i] = value % p;
    value /= p;
  }
  return c;
}

unsigned encode(const Poly& c, unsigned p) {
  unsigned value = 0;
  for (std::size_t i = c.size(); i-- > 0;) value = value * p + c[i];
  return value;
}

// Remainder of a by monic m over GF(p).
Poly poly_mod(Poly a, const Poly& m, unsigned p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    if (lead != 0) {
      for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    }
    a.pop_back();
  }
  return a;
}

bool divides(const Poly& d, const Poly& a, unsigned p) {
  Poly r = poly_mod(a, d, p);
  for (unsigned c : r) {
    if (c != 0) return false;
  }
  return true;
}

// Monic polynomial of degree deg from the index of its lower coefficients.
Poly monic(unsigned lower, unsigned deg, unsigned p) {
  Poly c = decode(lower, p, deg);
  c.push_back(1);
  return c;
}

unsigned ipow(unsigned b, unsigned e) {
  unsigned r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Poly find_irreducible(unsigned p, unsigned k) {
  for (unsigned lower = 0; lower < ipow(p, k); ++lower) {
    Poly f = monic(lower, k, p);
    if (k > 1 && f[0] == 0) continue;
    bool irreducible = true;
    for (unsigned d = 1; irreducible && 2 * d <= k; ++d) {
      for (unsigned low = 0; low < ipow(p, d); ++low) {
        if (divides(monic(low, d, p), f, p)) {
          irreducible = false;
          break;
        }
      }
    }
    if (irreducible) return f;
  }
  throw InputError("no irreducible polynomial found");
}

}  // namespace

std::pair<unsigned, unsigned> prime_power_decomposition(unsigned q) {
  if (q < 2) return {0, 0};
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return {0, 0};
  return {p, k};
}

FieldTable FieldTable::make(unsigned q) {
  auto [p, k] = prime_power_decomposition(q);
  if (p == 0) throw InputError(std::to_string(q) + " is not a prime power");
  if (q > 1024) throw BudgetError("field size " + std::to_string(q) + " exceeds 1024");
  FieldTable f;
  f.q_ = q;
  f.p_ = p;
  f.k_ = k;
  f.modulus_ = find_irreducible(p, k);
  f.add_.resize(q * q);
  f.mul_.resize(q * q);
  f.neg_.resize(q);
  f.inv_.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    const Poly pa = decode(a, p, k);
    Poly na(k);
    for (unsigned i = 0; i < k; ++i) na[i] = (p - pa[i]) % p;
    f.neg_[a] = encode(na, p);
    for (unsigned b = 0; b < q; ++b) {
      const Poly pb = decode(b, p, k);
      Poly s(k);
      for (unsigned i = 0; i < k; ++i) s[i] = (pa[i] + pb[i]) % p;
      f.add_[a * q + b] = encode(s, p);
      Poly prod(2 * k - 1, 0);
      for (unsigned i = 0; i < k; ++i) {
        for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      }
      Poly r = poly_mod(prod, f.modulus_, p);
      r.resize(k, 0);
      f.mul_[a * q + b] = encode(r, p);
    }
  }
  for (unsigned a = 1; a < q; ++a) {
    for (unsigned b = 1; b < q; ++b) {
      if (f.mul(a, b) == 1) {
        f.inv_[a] = b;
        break;
      }
    }
  }
  if (q <= 64 && !f.satisfies_axioms()) throw InputError("field table for q = " + std::to_string(q) + " is not a field");
  return f;
}

unsigned FieldTable::inv(unsigned a) const {
  if (a == 0 || a >= q_) throw InputError("no inverse for field element " + std::to_string(a));
  return inv_[a];
}

bool FieldTable::satisfies_axioms() const {
  const unsigned q = q_;
  for (unsigned a = 0; a < q; ++a) {
    if (add(a, 0) != a || mul(a, 1) != a || add(a, neg(a)) != 0) return false;
    if (a != 0 && mul(a, inv(a)) != 1) return false;
    for (unsigned b = 0; b < q; ++b) {
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) return false;
      for (unsigned c = 0; c < q; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) return false;
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return false;
      }
    }
  }
  return true;
}

}  // namespace sccg
