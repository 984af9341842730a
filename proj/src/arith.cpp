#include "sylint/arith.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace sylint::arith {

namespace {

constexpr unsigned long kTrialLimit = 1000000;

// Deterministic Miller-Rabin witness set, valid below 3.317e24.
const unsigned long kMrWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

const std::vector<uint32_t>& small_primes() {
  static const std::vector<uint32_t> primes = [] {
    std::vector<bool> sieve(kTrialLimit + 1, true);
    std::vector<uint32_t> out;
    for (uint64_t i = 2; i <= kTrialLimit; ++i) {
      if (!sieve[i]) continue;
      out.push_back(static_cast<uint32_t>(i));
      for (uint64_t j = i * i; j <= kTrialLimit; j += i) sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

Int mr_limit() {
  static const Int limit("3317044064679887385961980");  // 3.317e24
  return limit;
}

bool miller_rabin_round(const Int& n, const Int& d, unsigned r, const Int& a) {
  Int x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

Int ipow(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Rat rpow(const Rat& b, long e) {
  if (e < 0) {
    if (b == 0) throw std::domain_error("rpow: 0 to negative power");
    return 1 / rpow(b, -e);
  }
  Rat r = 1, base = b;
  long k = e;
  while (k > 0) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::string rat_string(const Rat& x) {
  std::ostringstream os;
  os << x.get_num();
  if (x.get_den() != 1) os << "/" << x.get_den();
  return os.str();
}

std::string rat_decimal(const Rat& x, int digits) {
  bool neg = x < 0;
  Rat a = neg ? Rat(-x) : x;
  Int scale = ipow(10, digits);
  Int scaled = (a.get_num() * scale) / a.get_den();
  Int ip = scaled / scale, fp = scaled % scale;
  std::string frac = fp.get_str();
  frac.insert(frac.begin(), digits - frac.size(), '0');
  std::string s = (neg ? "-" : "") + ip.get_str() + "." + frac;
  return s;
}

bool FactoredInteger::consistent() const {
  Int prod = 1;
  Int last = 1;
  for (const auto& [p, e] : factors) {
    if (p <= last || e == 0) return false;
    last = p;
    prod *= ipow(p, e);
  }
  return prod == value && value >= 1;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (mpz_even_p(n.get_mpz_t())) return false;
  if (n >= mr_limit())
    throw std::domain_error("is_prime: beyond deterministic Miller-Rabin range");
  Int d = n - 1;
  unsigned r = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++r;
  }
  for (unsigned long w : kMrWitnesses) {
    Int a(w);
    if (a >= n) continue;
    if (!miller_rabin_round(n, d, r, a)) return false;
  }
  return true;
}

FactoredInteger factorize(const Int& m) {
  if (m < 1) throw std::domain_error("factorize: input must be >= 1");
  FactoredInteger out;
  out.value = m;
  Int rest = m;
  for (uint32_t p : small_primes()) {
    if (rest == 1) break;
    if (Int(p) * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        rest /= p;
        ++e;
      }
      out.factors.emplace_back(Int(p), e);
    }
  }
  if (rest > 1) {
    if (rest < Int(kTrialLimit) * kTrialLimit || is_prime(rest)) {
      // below the square of the trial bound the cofactor must be prime
      out.factors.emplace_back(rest, 1);
    } else {
      throw std::domain_error("factorize: composite cofactor " + rest.get_str() +
                              " beyond supported range");
    }
  }
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

Int p_part(const FactoredInteger& m, const Int& p) {
  for (const auto& [q, e] : m.factors)
    if (q == p) return ipow(p, e);
  return 1;
}

Int int_p_part(const Int& m, const Int& p) {
  if (m == 0) throw std::domain_error("int_p_part: zero");
  Int part = 1, rest = m < 0 ? Int(-m) : m;
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
    rest /= p;
    part *= p;
  }
  return part;
}

unsigned p_exponent(const Int& m, const Int& p) {
  Int rest = m;
  unsigned e = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
    rest /= p;
    ++e;
  }
  return e;
}

Int cyclotomic_p_part(const Int& t, unsigned d, int eps, const Int& p) {
  if (eps != 1 && eps != -1) throw std::domain_error("eps must be +-1");
  Int base = t - eps;
  if (!mpz_divisible_p(base.get_mpz_t(), p.get_mpz_t()))
    throw std::domain_error("cyclotomic_p_part: p does not divide t - eps");
  if (d == 0) throw std::domain_error("cyclotomic_p_part: d must be >= 1");
  bool even = (d % 2 == 0);
  if (p == 2) {
    if (!even) return int_p_part(base, p);
    if (eps == 1) return int_p_part(t * t - 1, 2) * int_p_part(Int(d / 2), 2);
    return 2;
  }
  if (even && eps == -1) return 1;
  return int_p_part(base, p) * int_p_part(Int(d), p);
}

Int cyclotomic_p_part_plus(const Int& t, unsigned d, int eps, const Int& p) {
  if (eps != 1 && eps != -1) throw std::domain_error("eps must be +-1");
  Int base = t - eps;
  if (!mpz_divisible_p(base.get_mpz_t(), p.get_mpz_t()))
    throw std::domain_error("cyclotomic_p_part_plus: p does not divide t - eps");
  if (p == 2) {
    // (t^d + eps)_2 directly; only used for odd p in the bound ledgers
    return int_p_part(ipow(t, d) + eps, 2);
  }
  if (d % 2 == 0 && eps == -1) return int_p_part(base, p) * int_p_part(Int(d), p);
  return 1;
}

Int factorial_p_part(unsigned long m, const Int& p) {
  Int e = 0;
  Int pk = p;
  while (pk <= m) {
    e += Int(m) / pk;
    pk *= p;
  }
  return ipow(p, e.get_ui());
}

unsigned ppd_order(const Int& q, const Int& p) {
  if (p < 3 || !is_prime(p)) throw std::domain_error("ppd_order: p must be an odd prime");
  Int g;
  mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  if (g != 1) throw std::domain_error("ppd_order: p divides q");
  // order divides p-1; peel prime factors of p-1 off the full exponent
  FactoredInteger pm1 = factorize(p - 1);
  Int ord = p - 1;
  for (const auto& [r, e] : pm1.factors) {
    for (unsigned i = 0; i < e; ++i) {
      Int cand = ord / r;
      Int x;
      mpz_powm(x.get_mpz_t(), q.get_mpz_t(), cand.get_mpz_t(), p.get_mpz_t());
      if (x == 1)
        ord = cand;
      else
        break;
    }
  }
  return static_cast<unsigned>(ord.get_ui());
}

OddDivisorBound odd_divisor_count_bound(const Int& d) {
  if (d < 1) throw std::domain_error("odd_divisor_count_bound: d >= 1");
  FactoredInteger f = factorize(d + 1);
  unsigned count = 0;
  for (const auto& [p, e] : f.factors)
    if (p != 2) ++count;
  OddDivisorBound out;
  out.exact_count = count;
  out.log_cap = (d == 1) ? Rat(0) : log2_upper(Rat(d));
  return out;
}

namespace {

// Binary-digit extraction of log2 with directed rounding. round_up chooses
// whether the tracked value stays >= (upper) or <= (lower) the true one.
Rat log2_directed(const Rat& x, bool round_up) {
  if (x <= 0) throw std::domain_error("log2: argument must be positive");
  Int a = x.get_num(), b = x.get_den();
  long e = 0;
  while (a >= 2 * b) {
    b <<= 1;
    ++e;
  }
  while (a < b) {
    a <<= 1;
    --e;
  }
  const int kFrac = 48, kPrec = 256;
  Int f = 0;
  for (int i = 0; i < kFrac; ++i) {
    a *= a;
    b *= b;
    size_t bits = mpz_sizeinbase(b.get_mpz_t(), 2);
    if (bits > kPrec) {
      unsigned long s = bits - kPrec;
      if (round_up) {
        mpz_cdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), s);
        mpz_fdiv_q_2exp(b.get_mpz_t(), b.get_mpz_t(), s);
      } else {
        mpz_fdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), s);
        mpz_cdiv_q_2exp(b.get_mpz_t(), b.get_mpz_t(), s);
      }
    }
    f <<= 1;
    if (a >= 2 * b) {
      f |= 1;
      b <<= 1;
    }
  }
  Int den = Int(1) << kFrac;
  Rat frac = round_up ? Rat(f + 1, den) : Rat(f, den);
  frac.canonicalize();
  return Rat(e) + frac;
}

}  // namespace

Rat log2_upper(const Rat& x) { return log2_directed(x, true); }
Rat log2_lower(const Rat& x) { return log2_directed(x, false); }

LogUpperBound log2_bound_of(const Int& t) {
  if (t < 1) throw std::domain_error("log2_bound_of: t >= 1");
  return {t, log2_upper(Rat(t))};
}

Rat pow_frac_upper(const Rat& x, unsigned long num, unsigned long den) {
  if (x < 1) throw std::domain_error("pow_frac_upper: x >= 1 required");
  if (den == 0) throw std::domain_error("pow_frac_upper: den >= 1");
  unsigned long g = std::gcd(num, den);
  num /= g;
  den /= g;
  Rat y = rpow(x, static_cast<long>(num));
  if (den == 1) return y;
  // U/S >= (A/B)^(1/den) with S = 2^64
  Int s = Int(1) << 64;
  Int t = y.get_num() * ipow(s, den);
  mpz_cdiv_q(t.get_mpz_t(), t.get_mpz_t(), y.get_den().get_mpz_t());
  Int root;
  mpz_root(root.get_mpz_t(), t.get_mpz_t(), den);
  Rat out(root + 1, s);
  out.canonicalize();
  return out;
}

bool is_prime_power(unsigned long q, unsigned long* base, unsigned* exp) {
  if (q < 2) return false;
  for (uint32_t p : small_primes()) {
    if (static_cast<unsigned long>(p) * p > q) break;
    if (q % p == 0) {
      unsigned long rest = q;
      unsigned e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      if (rest != 1) return false;
      if (base) *base = p;
      if (exp) *exp = e;
      return true;
    }
  }
  // q itself prime
  if (base) *base = q;
  if (exp) *exp = 1;
  return true;
}

std::vector<unsigned long> prime_powers(unsigned long lo, unsigned long hi) {
  std::vector<unsigned long> out;
  for (unsigned long q = std::max<unsigned long>(lo, 2); q <= hi; ++q)
    if (is_prime_power(q)) out.push_back(q);
  return out;
}

Int cyclotomic_value(unsigned d, const Int& q) {
  // Phi_d(q) = prod_{e | d} (q^e - 1)^{mu(d/e)}
  Int num = 1, den = 1;
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    unsigned m = d / e;
    // Moebius mu(m)
    int mu = 1;
    unsigned mm = m;
    for (unsigned p = 2; p * p <= mm; ++p) {
      if (mm % p == 0) {
        mm /= p;
        if (mm % p == 0) {
          mu = 0;
          break;
        }
        mu = -mu;
      }
    }
    if (mu != 0 && mm > 1) mu = -mu;
    if (mu == 1)
      num *= ipow(q, e) - 1;
    else if (mu == -1)
      den *= ipow(q, e) - 1;
  }
  if (num % den != 0) throw std::logic_error("cyclotomic_value: non-integral");
  return num / den;
}

FactoredInteger fi_one() {
  FactoredInteger f;
  f.value = 1;
  return f;
}

FactoredInteger fi_from_prime_power(const Int& p, unsigned e) {
  FactoredInteger f;
  if (e == 0) return fi_one();
  f.value = ipow(p, e);
  f.factors.emplace_back(p, e);
  return f;
}

FactoredInteger fi_mul(const FactoredInteger& a, const FactoredInteger& b) {
  FactoredInteger out;
  out.value = a.value * b.value;
  std::map<Int, unsigned> acc;
  for (const auto& [p, e] : a.factors) acc[p] += e;
  for (const auto& [p, e] : b.factors) acc[p] += e;
  out.factors.assign(acc.begin(), acc.end());
  return out;
}

FactoredInteger fi_div(const FactoredInteger& a, const FactoredInteger& b) {
  FactoredInteger out;
  std::map<Int, unsigned> acc;
  for (const auto& [p, e] : a.factors) acc[p] += e;
  for (const auto& [p, e] : b.factors) {
    auto it = acc.find(p);
    if (it == acc.end() || it->second < e)
      throw std::domain_error("fi_div: not divisible");
    it->second -= e;
    if (it->second == 0) acc.erase(it);
  }
  out.factors.assign(acc.begin(), acc.end());
  out.value = 1;
  for (const auto& [p, e] : out.factors) out.value *= ipow(p, e);
  return out;
}

FactoredInteger fi_pow(const FactoredInteger& a, unsigned e) {
  FactoredInteger out;
  if (e == 0) return fi_one();
  out.value = ipow(a.value, e);
  for (const auto& [p, k] : a.factors) out.factors.emplace_back(p, k * e);
  return out;
}

namespace {

std::map<std::pair<std::string, unsigned>, FactoredInteger>& qm_cache() {
  static std::map<std::pair<std::string, unsigned>, FactoredInteger> cache;
  return cache;
}
std::mutex qm_mutex;

}  // namespace

FactoredInteger factor_qm_minus_1(const Int& q, unsigned m) {
  auto key = std::make_pair("-" + q.get_str(), m);
  {
    std::lock_guard<std::mutex> lock(qm_mutex);
    auto it = qm_cache().find(key);
    if (it != qm_cache().end()) return it->second;
  }
  FactoredInteger out = fi_one();
  for (unsigned d = 1; d <= m; ++d)
    if (m % d == 0) out = fi_mul(out, factorize(cyclotomic_value(d, q)));
  if (out.value != ipow(q, m) - 1)
    throw std::logic_error("factor_qm_minus_1: cyclotomic split mismatch");
  std::lock_guard<std::mutex> lock(qm_mutex);
  qm_cache()[key] = out;
  return out;
}

FactoredInteger factor_qm_plus_1(const Int& q, unsigned m) {
  auto key = std::make_pair("+" + q.get_str(), m);
  {
    std::lock_guard<std::mutex> lock(qm_mutex);
    auto it = qm_cache().find(key);
    if (it != qm_cache().end()) return it->second;
  }
  // q^m + 1 = prod over d | 2m, d not dividing m
  FactoredInteger out = fi_one();
  for (unsigned d = 1; d <= 2 * m; ++d)
    if ((2 * m) % d == 0 && m % d != 0)
      out = fi_mul(out, factorize(cyclotomic_value(d, q)));
  if (out.value != ipow(q, m) + 1)
    throw std::logic_error("factor_qm_plus_1: cyclotomic split mismatch");
  std::lock_guard<std::mutex> lock(qm_mutex);
  qm_cache()[key] = out;
  return out;
}

}  // namespace sylint::arith
