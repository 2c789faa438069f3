#include "lie/numeric.h"

#include <ostream>
#include <stdexcept>

namespace lie {

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.v.get_str(); }
std::ostream& operator<<(std::ostream& os, const Fp& f) { return os << f.x << " mod " << f.p; }

Fp Fp::from_rat(const Rat& r, std::uint64_t mod) {
  mpz_class num = r.v.get_num();
  mpz_class den = r.v.get_den();
  mpz_class m(static_cast<unsigned long>(mod));
  mpz_class nr = num % m;
  if (nr < 0) nr += m;
  mpz_class dr = den % m;
  if (dr == 0) throw std::domain_error("denominator divisible by modulus");
  Fp n(nr.get_ui(), mod);
  Fp d(dr.get_ui(), mod);
  return n * d.inv();
}

Fp Fp::inv() const {
  if (x == 0) throw std::domain_error("inverse of zero in F_p");
  // extended Euclid
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(p), newr = static_cast<long long>(x);
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += static_cast<long long>(p);
  return Fp(static_cast<std::uint64_t>(t), p);
}

RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = Rat(v(i));
  return r;
}

FpMat to_fp(const RatMat& m, std::uint64_t p) {
  FpMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Fp::from_rat(m(i, j), p);
  return r;
}

static bool is_prime_u64(std::uint64_t n) {
  if (n < 4) return n > 1;
  if (n % 2 == 0) return false;
  // deterministic Miller-Rabin for 64-bit
  auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (a % n == 0) continue;
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime_above_1e9(Rng& rng) {
  for (;;) {
    std::uint64_t c = 1000000007ULL + (rng.next() % 1000000000ULL);
    c |= 1;
    while (!is_prime_u64(c)) c += 2;
    return c;
  }
}

}  // namespace lie
