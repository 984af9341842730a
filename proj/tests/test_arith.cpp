#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sylint/arith.hpp"

using namespace sylint::arith;

TEST_CASE("factorize basics") {
  auto f = factorize(18);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == std::make_pair(Int(2), 1u));
  CHECK(f.factors[1] == std::make_pair(Int(3), 2u));
  CHECK(f.consistent());

  auto one = factorize(1);
  CHECK(one.factors.empty());
  CHECK(one.value == 1);

  CHECK_THROWS_AS(factorize(0), std::domain_error);
}

TEST_CASE("factorize order of POmega8+(2)") {
  // 174182400 = 2^12 3^5 5^2 7, cross-checked by independent division
  auto f = factorize(174182400);
  REQUIRE(f.factors.size() == 4);
  CHECK(f.factors[0] == std::make_pair(Int(2), 12u));
  CHECK(f.factors[1] == std::make_pair(Int(3), 5u));
  CHECK(f.factors[2] == std::make_pair(Int(5), 2u));
  CHECK(f.factors[3] == std::make_pair(Int(7), 1u));
  Int check = 174182400;
  for (const auto& [p, e] : f.factors)
    for (unsigned i = 0; i < e; ++i) {
      REQUIRE(check % p == 0);
      check /= p;
    }
  CHECK(check == 1);
}

TEST_CASE("factorize large factorial has only small primes") {
  Int f500 = factorial(500);
  auto f = factorize(f500);
  CHECK(f.consistent());
  CHECK(f.factors.back().first <= 500);
}

TEST_CASE("is_prime spot checks") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(!is_prime(1));
  CHECK(!is_prime(561));            // Carmichael
  CHECK(is_prime(Int("2305843009213693951")));   // 2^61 - 1
  CHECK(!is_prime(Int("2305843009213693953")));
}

TEST_CASE("p_part") {
  CHECK(p_part(factorize(18), 3) == 9);
  CHECK(p_part(factorize(18), 5) == 1);
  CHECK(p_part(factorize(720), 2) == 16);
  CHECK(int_p_part(720, 2) == 16);
}

TEST_CASE("p_part is completely multiplicative") {
  for (unsigned long a = 1; a <= 60; ++a)
    for (unsigned long b = 1; b <= 60; ++b)
      for (unsigned long p : {2ul, 3ul, 5ul, 7ul})
        CHECK(int_p_part(Int(a * b), p) == int_p_part(Int(a), p) * int_p_part(Int(b), p));
}

TEST_CASE("cyclotomic p-part examples") {
  CHECK(cyclotomic_p_part(3, 2, 1, 2) == 8);
  CHECK(cyclotomic_p_part(3, 1, 1, 2) == 2);
  // (2^6 - (-1))_3 = (65)_3 = 1: even d with eps = -1 branch
  CHECK(cyclotomic_p_part(2, 6, -1, 3) == 1);
  // companion branch: (2^6 + (-1))_3 = (63)_3 = 9 = (t+1)_3 (d)_3
  CHECK(cyclotomic_p_part_plus(2, 6, -1, 3) == 9);
  CHECK_THROWS_AS(cyclotomic_p_part(3, 2, 1, 5), std::domain_error);
}

TEST_CASE("cyclotomic p-part brute-force oracle grid") {
  // all prime powers t <= 100, d <= 12, eps = +-1, primes p <= 50 with p | t - eps
  auto ts = prime_powers(2, 100);
  std::vector<unsigned long> ps = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (unsigned long t : ts) {
    for (int eps : {1, -1}) {
      for (unsigned long pu : ps) {
        Int p(pu), tt(t);
        if ((tt - eps) % p != 0) continue;
        if (tt - eps == 0) continue;
        for (unsigned d = 1; d <= 12; ++d) {
          Int minus = ipow(tt, d) - eps;
          Int plus = ipow(tt, d) + eps;
          CAPTURE(t);
          CAPTURE(d);
          CAPTURE(eps);
          CAPTURE(pu);
          CHECK(cyclotomic_p_part(tt, d, eps, p) == int_p_part(minus, p));
          if (plus != 0)
            CHECK(cyclotomic_p_part_plus(tt, d, eps, p) == int_p_part(plus, p));
        }
      }
    }
  }
}

TEST_CASE("factorial p-part") {
  CHECK(factorial_p_part(6, 3) == 9);
  CHECK(factorial_p_part(0, 5) == 1);
  // Lemma identity ((2m)!)_2 = 2^m (m!)_2 and the strict bound (m!)_p < p^(m/(p-1))
  for (unsigned long m = 1; m <= 200; ++m)
    CHECK(factorial_p_part(2 * m, 2) == ipow(2, m) * factorial_p_part(m, 2));
  for (unsigned long m = 0; m <= 500; ++m) {
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul}) {
      Int fp = factorial_p_part(m, p);
      CHECK(fp == int_p_part(factorial(m), p));
      // fp < p^(m/(p-1))  <=>  fp^(p-1) < p^m  (m >= 1)
      if (m >= 1) CHECK(ipow(fp, p - 1) < ipow(p, m));
    }
  }
}

TEST_CASE("ppd order") {
  CHECK(ppd_order(2, 7) == 3);
  CHECK(ppd_order(4, 5) == 2);
  CHECK(ppd_order(8, 7) == 1);     // 7 | 8 - 1
  CHECK_THROWS_AS(ppd_order(14, 7), std::domain_error);
  // p in P_m exactly when the order is m
  for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul, 31ul}) {
    unsigned m = ppd_order(2, p);
    CHECK((ipow(2, m) - 1) % p == 0);
    for (unsigned i = 1; i < m; ++i) CHECK((ipow(2, i) - 1) % p != 0);
  }
}

TEST_CASE("odd divisor count bound") {
  auto b8 = odd_divisor_count_bound(8);
  CHECK(b8.exact_count == 1);             // 9 = 3^2
  CHECK(b8.log_cap >= 3);
  CHECK(b8.log_cap < Rat(3000001, 1000000));

  auto b2 = odd_divisor_count_bound(2);
  CHECK(b2.exact_count == 1);             // 3
  CHECK(b2.log_cap >= 1);

  auto b104 = odd_divisor_count_bound(104);   // 105 = 3*5*7
  CHECK(b104.exact_count == 3);
  CHECK(b104.log_cap >= log2_lower(Rat(104)));
}

TEST_CASE("log2 bounds are sound and tight") {
  // exact powers of two
  for (int k = 0; k <= 40; ++k) {
    Rat x = rpow(Rat(2), k);
    Rat up = log2_upper(x), lo = log2_lower(x);
    CHECK(lo <= k);
    CHECK(up >= k);
    CHECK(up - lo < Rat(1, 1000000));
  }
  // bracketing of log2(3): known digits 1.584962500721156...
  Rat up3 = log2_upper(Rat(3)), lo3 = log2_lower(Rat(3));
  CHECK(lo3 <= up3);
  CHECK(up3 >= Rat(Int("1584962500721156"), Int("1000000000000000")));
  CHECK(lo3 <= Rat(Int("1584962500721157"), Int("1000000000000000")));
  CHECK(up3 - lo3 < Rat(1, 1000000));
  // sound on rationals < 1 as well
  CHECK(log2_upper(Rat(1, 2)) >= -1);
  CHECK(log2_lower(Rat(1, 2)) <= -1);
  // LogUpperBound invariant: r * 10^6 >= ceil(10^6 log2 t), checked via the
  // certified lower bound
  for (unsigned long t : {2ul, 3ul, 7ul, 63ul, 1000003ul}) {
    auto b = log2_bound_of(Int(t));
    CHECK(b.rational_over_approx >= log2_lower(Rat(t)));
    CHECK(b.rational_over_approx - log2_lower(Rat(t)) < Rat(1, 1000000));
  }
}

TEST_CASE("fractional power upper bounds") {
  // x^(3/2) for x = 4: exactly 8
  Rat u = pow_frac_upper(Rat(4), 3, 2);
  CHECK(u >= 8);
  CHECK(u < Rat(8) + Rat(1, 1000000));
  // soundness: u^den >= x^num
  for (unsigned long num : {1ul, 3ul, 5ul, 15ul}) {
    for (unsigned long den : {2ul, 4ul, 8ul}) {
      Rat x(17, 3);
      Rat up = pow_frac_upper(x, num, den);
      CHECK(rpow(up, den) >= rpow(x, num));
    }
  }
}

TEST_CASE("cyclotomic value and q^m +- 1 splits") {
  CHECK(cyclotomic_value(1, 2) == 1);
  CHECK(cyclotomic_value(6, 2) == 3);
  CHECK(cyclotomic_value(12, 2) == 13);
  for (unsigned long q : {2ul, 3ul, 9ul}) {
    for (unsigned m = 1; m <= 14; ++m) {
      auto fm = factor_qm_minus_1(q, m);
      CHECK(fm.consistent());
      CHECK(fm.value == ipow(q, m) - 1);
      auto fp = factor_qm_plus_1(q, m);
      CHECK(fp.consistent());
      CHECK(fp.value == ipow(q, m) + 1);
    }
  }
  // big split: 3^60 - 1 factors without hitting the range guard
  auto big = factor_qm_minus_1(3, 60);
  CHECK(big.consistent());
}

TEST_CASE("prime powers enumeration") {
  auto pp = prime_powers(5, 32);
  std::vector<unsigned long> expect = {5, 7, 8, 9, 11, 13, 16, 17, 19,
                                       23, 25, 27, 29, 31, 32};
  CHECK(pp == expect);
}

TEST_CASE("rational rendering") {
  CHECK(rat_string(Rat(13, 21)) == "13/21");
  CHECK(rat_string(Rat(4)) == "4");
  CHECK(rat_decimal(Rat(1, 8), 4) == "0.1250");
}
