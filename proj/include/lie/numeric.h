#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace lie {

using BigInt = mpz_class;

// Exact rational scalar for Eigen matrices. Wraps mpq_class eagerly so that
// Eigen expressions never capture gmpxx expression templates by reference.
struct Rat {
  mpq_class v;

  Rat() : v(0) {}
  Rat(int n) : v(n) {}
  Rat(long n) : v(n) {}
  Rat(long num, long den) : v(num, den) { v.canonicalize(); }
  explicit Rat(const mpq_class& q) : v(q) {}
  explicit Rat(const mpz_class& z) : v(z) {}

  bool is_zero() const { return sgn(v) == 0; }
  bool is_integer() const { return v.get_den() == 1; }
  BigInt num() const { return v.get_num(); }
  BigInt den() const { return v.get_den(); }
  int sign() const { return sgn(v); }
  long to_long() const { return mpz_get_si(v.get_num().get_mpz_t()); }
  std::string str() const { return v.get_str(); }

  Rat operator-() const { return Rat(mpq_class(-v)); }
  Rat& operator+=(const Rat& o) { v += o.v; return *this; }
  Rat& operator-=(const Rat& o) { v -= o.v; return *this; }
  Rat& operator*=(const Rat& o) { v *= o.v; return *this; }
  Rat& operator/=(const Rat& o) { v /= o.v; return *this; }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v + b.v)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v - b.v)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v * b.v)); }
  friend Rat operator/(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v / b.v)); }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v == b.v; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v != b.v; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v < b.v; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v <= b.v; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v > b.v; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v >= b.v; }
};

inline Rat abs(const Rat& a) { return Rat(mpq_class(::abs(a.v))); }
std::ostream& operator<<(std::ostream& os, const Rat& r);

// Prime field element with runtime modulus. A default-constructed value has
// modulus 0 and acts as an untyped zero; binary ops adopt the nonzero modulus.
struct Fp {
  std::uint64_t x = 0;
  std::uint64_t p = 0;

  Fp() = default;
  Fp(std::uint64_t val, std::uint64_t mod) : x(val % mod), p(mod) {}
  static Fp from_int(long long n, std::uint64_t mod) {
    long long r = n % static_cast<long long>(mod);
    if (r < 0) r += static_cast<long long>(mod);
    return Fp(static_cast<std::uint64_t>(r), mod);
  }
  static Fp from_rat(const Rat& r, std::uint64_t mod);

  bool is_zero() const { return x == 0; }
  std::uint64_t mod(const Fp& o) const { return p ? p : o.p; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    std::uint64_t m = a.mod(b);
    std::uint64_t s = a.x + b.x;
    if (s >= m) s -= m;
    return Fp(s, m);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    std::uint64_t m = a.mod(b);
    return Fp(a.x >= b.x ? a.x - b.x : a.x + m - b.x, m);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::uint64_t m = a.mod(b);
    return Fp(static_cast<std::uint64_t>((static_cast<unsigned __int128>(a.x) * b.x) % m), m);
  }
  Fp inv() const;
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }
  Fp operator-() const { return Fp(x == 0 ? 0 : p - x, p); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.x == b.x; }
  friend bool operator!=(const Fp& a, const Fp& b) { return a.x != b.x; }
};

inline Fp abs(const Fp& a) { return a; }
std::ostream& operator<<(std::ostream& os, const Fp& f);

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMat = Mat<Rat>;
using RatVec = Vec<Rat>;
using IntMat = Mat<long>;
using IntVec = Vec<long>;
using FpMat = Mat<Fp>;
using FpVec = Vec<Fp>;

RatMat to_rat(const IntMat& m);
RatVec to_rat(const IntVec& v);
FpMat to_fp(const RatMat& m, std::uint64_t p);

// Deterministic 64-bit stream (splitmix64). Used everywhere randomness is
// needed so that runs are reproducible given --seed.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [lo, hi]
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  static Rng derive(std::uint64_t seed, std::uint64_t stream) {
    Rng r(seed ^ (0xd1342543de82ef95ULL * (stream + 1)));
    r.next();
    return r;
  }
};

// Primes above 1e9 for the modular compute field.
std::uint64_t random_prime_above_1e9(Rng& rng);

}  // namespace lie

namespace Eigen {

template <>
struct NumTraits<lie::Rat> {
  using Real = lie::Rat;
  using NonInteger = lie::Rat;
  using Nested = lie::Rat;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 30
  };
  static lie::Rat epsilon() { return lie::Rat(0); }
  static lie::Rat dummy_precision() { return lie::Rat(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<lie::Fp> {
  using Real = lie::Fp;
  using NonInteger = lie::Fp;
  using Nested = lie::Fp;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static lie::Fp epsilon() { return lie::Fp(); }
  static lie::Fp dummy_precision() { return lie::Fp(); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
