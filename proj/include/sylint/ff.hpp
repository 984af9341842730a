#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sylint::gf {

/// Arithmetic in GF(p^k) for small q, table-driven. Elements are encoded
/// as 0..q-1, reading base-p digits as polynomial coefficients over the
/// lexicographically least irreducible monic polynomial of degree k.
class FF {
 public:
  explicit FF(unsigned long q);

  unsigned long q() const { return q_; }
  unsigned long p() const { return p_; }
  unsigned k() const { return k_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned sub(unsigned a, unsigned b) const { return add_[a * q_ + neg_[b]]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned inv(unsigned a) const {
    if (a == 0) throw std::domain_error("FF::inv(0)");
    return inv_[a];
  }
  unsigned pow(unsigned a, long e) const;
  /// x -> x^p (field Frobenius).
  unsigned frobenius(unsigned a) const { return pow(a, static_cast<long>(p_)); }
  /// x -> x^s; with s = sqrt(q) this is the unitary conjugation.
  unsigned power_map(unsigned a, unsigned long s) const {
    return pow(a, static_cast<long>(s));
  }
  unsigned generator() const { return gen_; }
  unsigned element_order(unsigned a) const;
  const std::vector<unsigned>& modulus() const { return modulus_; }

 private:
  unsigned long q_, p_;
  unsigned k_;
  unsigned gen_;
  std::vector<unsigned> modulus_;  // monic irreducible, degree k, coeffs low->high
  std::vector<unsigned> add_, mul_, neg_, inv_;
};

}  // namespace sylint::gf
