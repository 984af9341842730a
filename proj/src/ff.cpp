#include "sylint/ff.hpp"

#include "sylint/arith.hpp"

namespace sylint::gf {

namespace {

// dense polynomials over F_p, coefficients low -> high
using Poly = std::vector<unsigned>;

Poly poly_mod(Poly a, const Poly& m, unsigned long p) {
  while (a.size() >= m.size()) {
    unsigned lead = a.back();
    if (lead != 0) {
      size_t shift = a.size() - m.size();
      for (size_t i = 0; i < m.size(); ++i) {
        unsigned long sub = (static_cast<unsigned long>(lead) * m[i]) % p;
        a[shift + i] = static_cast<unsigned>((a[shift + i] + p - sub) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, unsigned long p) {
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<unsigned>(
          (c[i + j] + static_cast<unsigned long>(a[i]) * b[j]) % p);
  return poly_mod(std::move(c), m, p);
}

bool poly_is_zero(const Poly& a) {
  for (unsigned c : a)
    if (c) return false;
  return true;
}

// irreducibility over F_p by trial division with all monic polys of
// degree <= deg/2 (fields here are tiny)
bool is_irreducible(const Poly& m, unsigned long p) {
  unsigned deg = static_cast<unsigned>(m.size()) - 1;
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    unsigned long count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned long code = 0; code < count; ++code) {
      Poly div(d + 1, 0);
      unsigned long c = code;
      for (unsigned i = 0; i < d; ++i) {
        div[i] = static_cast<unsigned>(c % p);
        c /= p;
      }
      div[d] = 1;
      Poly rem = poly_mod(m, div, p);
      if (poly_is_zero(rem)) return false;
    }
  }
  return true;
}

}  // namespace

FF::FF(unsigned long q) : q_(q) {
  unsigned long base;
  unsigned exp;
  if (!arith::is_prime_power(q, &base, &exp) || q < 2)
    throw std::domain_error("FF: q must be a prime power >= 2");
  if (q > 4096) throw std::domain_error("FF: table arithmetic supports q <= 4096");
  p_ = base;
  k_ = exp;

  if (k_ == 1) {
    modulus_ = {0, 1};  // unused
  } else {
    // lexicographically least irreducible monic polynomial of degree k
    unsigned long count = 1;
    for (unsigned i = 0; i < k_; ++i) count *= p_;
    bool found = false;
    for (unsigned long code = 0; code < count && !found; ++code) {
      Poly m(k_ + 1, 0);
      unsigned long c = code;
      for (unsigned i = 0; i < k_; ++i) {
        m[i] = static_cast<unsigned>(c % p_);
        c /= p_;
      }
      m[k_] = 1;
      if (is_irreducible(m, p_)) {
        modulus_ = m;
        found = true;
      }
    }
    if (!found) throw std::logic_error("FF: no irreducible polynomial found");
  }

  auto decode = [&](unsigned a) {
    Poly v(k_, 0);
    for (unsigned i = 0; i < k_; ++i) {
      v[i] = static_cast<unsigned>(a % p_);
      a = static_cast<unsigned>(a / p_);
    }
    return v;
  };
  auto encode = [&](const Poly& v) {
    unsigned a = 0;
    for (unsigned i = k_; i-- > 0;)
      a = static_cast<unsigned>(a * p_ + (i < v.size() ? v[i] : 0));
    return a;
  };

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (unsigned a = 0; a < q_; ++a) {
    Poly va = decode(a);
    Poly negv(k_, 0);
    for (unsigned i = 0; i < k_; ++i)
      negv[i] = static_cast<unsigned>((p_ - va[i]) % p_);
    neg_[a] = encode(negv);
    for (unsigned b = 0; b < q_; ++b) {
      Poly vb = decode(b);
      Poly s(k_, 0);
      for (unsigned i = 0; i < k_; ++i)
        s[i] = static_cast<unsigned>((va[i] + vb[i]) % p_);
      add_[a * q_ + b] = encode(s);
      if (k_ == 1) {
        mul_[a * q_ + b] =
            static_cast<unsigned>((static_cast<unsigned long>(a) * b) % p_);
      } else {
        Poly prod = poly_mulmod(va, vb, modulus_, p_);
        mul_[a * q_ + b] = encode(prod);
      }
    }
  }
  for (unsigned a = 1; a < q_; ++a)
    for (unsigned b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }
  gen_ = 0;
  if (q_ == 2) {
    gen_ = 1;
  } else {
    for (unsigned a = 2; a < q_; ++a)
      if (element_order(a) == q_ - 1) {
        gen_ = a;
        break;
      }
  }
  if (gen_ == 0) throw std::logic_error("FF: no multiplicative generator");
}

unsigned FF::pow(unsigned a, long e) const {
  if (a == 0) {
    if (e <= 0) throw std::domain_error("FF::pow(0, e<=0)");
    return 0;
  }
  long m = static_cast<long>(q_) - 1;
  long r = (m == 0) ? 0 : e % m;
  if (r < 0) r += m;
  unsigned out = 1, base = a;
  while (r > 0) {
    if (r & 1) out = mul(out, base);
    base = mul(base, base);
    r >>= 1;
  }
  return out;
}

unsigned FF::element_order(unsigned a) const {
  if (a == 0) throw std::domain_error("FF::element_order(0)");
  unsigned ord = 1;
  unsigned x = a;
  while (x != 1) {
    x = mul(x, a);
    ++ord;
    if (ord > q_) throw std::logic_error("FF::element_order runaway");
  }
  return ord;
}

}  // namespace sylint::gf
