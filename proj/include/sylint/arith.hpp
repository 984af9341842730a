#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sylint::arith {

using Int = mpz_class;
using Rat = mpq_class;

// b^e for non-negative integer exponents.
Int ipow(const Int& b, unsigned long e);
Rat rpow(const Rat& b, long e);

Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);

/// Canonicalized rational n/d (mpq_class constructors do not reduce).
inline Rat make_rat(const Int& n, const Int& d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string rat_string(const Rat& x);            // "num/den"
std::string rat_decimal(const Rat& x, int digits = 6);

/// A positive integer together with its full prime factorization.
/// Invariants: value = prod p^e, primes strictly increasing, e >= 1.
struct FactoredInteger {
  Int value = 1;
  std::vector<std::pair<Int, unsigned>> factors;

  bool consistent() const;
};

/// Deterministic Miller-Rabin, valid for n < 3.317e24.
bool is_prime(const Int& n);

/// Trial division to 10^6 followed by deterministic primality testing.
/// Throws std::domain_error for m = 0 or when the cofactor cannot be
/// certified (beyond the deterministic Miller-Rabin range).
FactoredInteger factorize(const Int& m);

/// Largest power of p dividing m (1 if p does not divide m).
Int p_part(const FactoredInteger& m, const Int& p);
Int int_p_part(const Int& m, const Int& p);   // direct division loop
unsigned p_exponent(const Int& m, const Int& p);

/// (t^d - eps)_p via the branch table of Lemma 2.1; requires p | t - eps.
Int cyclotomic_p_part(const Int& t, unsigned d, int eps, const Int& p);
/// Companion branch: (t^d + eps)_p under the same precondition.
Int cyclotomic_p_part_plus(const Int& t, unsigned d, int eps, const Int& p);

/// (m!)_p by Legendre summation.
Int factorial_p_part(unsigned long m, const Int& p);

/// Multiplicative order of q modulo p (odd prime p, p coprime to q).
unsigned ppd_order(const Int& q, const Int& p);

/// Distinct odd prime divisors of d+1: the exact count and the
/// log2(d) cap used by the closed-form bounds.
struct OddDivisorBound {
  unsigned exact_count;
  Rat log_cap;       // rational over-approximation of log2(d), 0 for d = 1
};
OddDivisorBound odd_divisor_count_bound(const Int& d);

/// Rational r with log2(x) <= r < log2(x) + 1e-7 (x > 0).
Rat log2_upper(const Rat& x);
/// Rational r with log2(x) - 1e-7 < r <= log2(x).
Rat log2_lower(const Rat& x);

/// Sound over-approximation of log2 of a positive integer.
struct LogUpperBound {
  Int base2_log_of;
  Rat rational_over_approx;
};
LogUpperBound log2_bound_of(const Int& t);

/// Rational r >= x^(num/den) with relative slack < 2^-60 (x >= 1, num,den >= 1).
Rat pow_frac_upper(const Rat& x, unsigned long num, unsigned long den);

/// All prime powers in [lo, hi], ascending.
std::vector<unsigned long> prime_powers(unsigned long lo, unsigned long hi);
bool is_prime_power(unsigned long q, unsigned long* base = nullptr,
                    unsigned* exp = nullptr);

/// Factorization of q^m - 1 through its cyclotomic-polynomial pieces,
/// keeping every piece small enough for trial division.
FactoredInteger factor_qm_minus_1(const Int& q, unsigned m);
/// Likewise for q^m + 1.
FactoredInteger factor_qm_plus_1(const Int& q, unsigned m);

/// Phi_d(q), the d-th cyclotomic polynomial evaluated at q.
Int cyclotomic_value(unsigned d, const Int& q);

/// Merge factored integers (multiply).
FactoredInteger fi_mul(const FactoredInteger& a, const FactoredInteger& b);
/// Exact division (throws if not divisible exponent-wise).
FactoredInteger fi_div(const FactoredInteger& a, const FactoredInteger& b);
FactoredInteger fi_pow(const FactoredInteger& a, unsigned e);
FactoredInteger fi_one();
FactoredInteger fi_from_prime_power(const Int& p, unsigned e);

}  // namespace sylint::arith
