// padic.hpp — exact truncated p-adic arithmetic: residues mod p^N, tails in
// Q_p/Z_p, fractional parts, unit characters, and the quadratic Gauss factor.
#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace pnilrep {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------
enum class ErrorKind {
  InsufficientPrecision,
  NotInvertible,
  ZeroArgument,
  NonGeneratorDirection,
  NotInDual,
  UnsupportedLaw,
  ResourceCap,
  DimensionMismatch,
  IndexOutOfRange,
  Usage,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) {
  throw Error(k, msg);
}

// ---------------------------------------------------------------------------
// Small integer helpers
// ---------------------------------------------------------------------------
using i64 = long long;
using i128 = __int128;

inline i64 ipow(i64 base, int exp) {
  i64 r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<i64>::max() / base)
      fail(ErrorKind::ResourceCap, "integer power overflow");
    r *= base;
  }
  return r;
}

inline i64 floor_mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

// modular inverse via extended Euclid; throws NotInvertible.
inline i64 mod_inverse(i64 a, i64 m) {
  a = floor_mod(a, m);
  i64 old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    i64 q = old_r / r;
    i64 t = old_r - q * r; old_r = r; r = t;
    t = old_s - q * s; old_s = s; s = t;
  }
  if (old_r != 1) fail(ErrorKind::NotInvertible, "element not invertible");
  return floor_mod(old_s, m);
}

// p-adic valuation of a nonzero integer.
inline int int_valuation(i64 a, int p) {
  if (a == 0) fail(ErrorKind::ZeroArgument, "valuation of integer 0");
  if (a < 0) a = -a;
  int v = 0;
  while (a % p == 0) { a /= p; ++v; }
  return v;
}

// ---------------------------------------------------------------------------
// Rat — exact rational on 64-bit with 128-bit intermediates.
// Internal engine number type; all phases stay exact until one complex exp.
// ---------------------------------------------------------------------------
struct Rat {
  i64 num = 0;
  i64 den = 1;

  Rat() = default;
  Rat(i64 n) : num(n), den(1) {}
  Rat(i64 n, i64 d) { assign(n, d); }

  static Rat from128(i128 n, i128 d) {
    if (d == 0) fail(ErrorKind::ZeroArgument, "rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i128 a = n < 0 ? -n : n, b = d;
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    if (a != 0) { n /= a; d /= a; }
    if (n > std::numeric_limits<i64>::max() || n < std::numeric_limits<i64>::min() ||
        d > std::numeric_limits<i64>::max())
      fail(ErrorKind::ResourceCap, "rational overflow");
    Rat r;
    r.num = static_cast<i64>(n);
    r.den = static_cast<i64>(d);
    return r;
  }

  void assign(i64 n, i64 d) { *this = from128(n, d); }

  bool is_zero() const { return num == 0; }
  Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return from128(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den);
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return from128(i128(a.num) * b.num, i128(a.den) * b.den);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) fail(ErrorKind::ZeroArgument, "division by zero rational");
    return from128(i128(a.num) * b.den, i128(a.den) * b.num);
  }
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

  double to_double() const { return double(num) / double(den); }
};

// p-adic valuation of a nonzero rational; 0 -> sentinel +infinity.
constexpr int VAL_INFINITY = std::numeric_limits<int>::max();

inline int rat_valuation(const Rat& q, int p) {
  if (q.num == 0) return VAL_INFINITY;
  return int_valuation(q.num, p) - int_valuation(q.den, p);
}

// |q|_p as a double (trivial/zero -> 0 is mathematical |0|; callers wanting the
// Q_p/Z_p class norm should use class_norm below).
inline double rat_abs_p(const Rat& q, int p) {
  int v = rat_valuation(q, p);
  if (v == VAL_INFINITY) return 0.0;
  double r = 1.0;
  for (int i = 0; i < (v < 0 ? -v : v); ++i) r *= p;
  return v < 0 ? r : 1.0 / r;
}

// Norm of the class of q in Q_p/Z_p: p^k where k = max(0, -valuation).
inline i64 class_norm(const Rat& q, int p) {
  int v = rat_valuation(q, p);
  if (v == VAL_INFINITY || v >= 0) return 1;
  return ipow(p, -v);
}

// p-part exponent of the denominator of the class of q (0 when p-integral).
inline int class_denom_exp(const Rat& q, int p) {
  int v = rat_valuation(q, p);
  if (v == VAL_INFINITY || v >= 0) return 0;
  return -v;
}

// {q}_p: the p-adic fractional part, an exact rational in [0,1) with p-power
// denominator. A p-coprime denominator contributes nothing.
inline Rat frac_p(const Rat& q, int p) {
  int k = class_denom_exp(q, p);
  if (k == 0) return Rat(0);
  i64 pk = ipow(p, k);
  // q = a / (m p^k) with p !| m:  {q}_p = (a m^{-1} mod p^k) / p^k.
  i64 den = q.den;
  int dv = int_valuation(den, p);
  i64 m = den / ipow(p, dv);
  // valuation of numerator may be >0 when den has extra p-power; k already
  // accounts for it: k = dv - v_p(num).
  i64 a = q.num;
  int nv = (a == 0) ? 0 : int_valuation(a, p);
  a /= ipow(p, nv);
  (void)dv;
  i64 am = floor_mod(i64(i128(floor_mod(a, pk)) * mod_inverse(m, pk) % pk), pk);
  return Rat(am, pk);
}

// Reduce a p-integral rational into [0, modulus): (num * den^{-1}) mod modulus.
// This is genuine p-adic reduction, never a real-number truncation.
inline i64 zred(const Rat& q, i64 modulus, int p) {
  (void)p;
  if (modulus == 1) return 0;
  i64 den = q.den;
  i64 inv = mod_inverse(floor_mod(den, modulus), modulus);
  return floor_mod(i64(i128(floor_mod(q.num, modulus)) * inv % modulus), modulus);
}

// ---------------------------------------------------------------------------
// PhaseRational — numer/p^k reduced mod 1
// ---------------------------------------------------------------------------
struct PhaseRational {
  i64 numer = 0;
  int denom_exp = 0;
  int prime = 0;

  static PhaseRational from_rat(const Rat& q, int p) {
    Rat f = frac_p(q, p);
    PhaseRational r;
    r.prime = p;
    if (f.is_zero()) return r;
    r.denom_exp = class_denom_exp(f, p);
    r.numer = floor_mod(i64(i128(f.num) * (ipow(p, r.denom_exp) / f.den)), ipow(p, r.denom_exp));
    return r;
  }

  Rat to_rat() const {
    if (denom_exp == 0) return Rat(0);
    return Rat(numer, ipow(prime, denom_exp));
  }

  friend PhaseRational operator+(const PhaseRational& a, const PhaseRational& b) {
    int p = a.prime ? a.prime : b.prime;
    return from_rat(a.to_rat() + b.to_rat(), p);
  }
  friend bool operator==(const PhaseRational& a, const PhaseRational& b) {
    return a.numer == b.numer && a.denom_exp == b.denom_exp;
  }
};

// e^{2 pi i q} for an exact rational phase; the single place where phases hit
// floating point.
inline std::complex<double> unit_phase(const Rat& q) {
  static const double TWO_PI = 6.283185307179586476925286766559;
  double t = TWO_PI * q.to_double();
  return {std::cos(t), std::sin(t)};
}

// ---------------------------------------------------------------------------
// PadicInt — residue arithmetic mod p^N
// ---------------------------------------------------------------------------
struct PadicInt {
  int prime = 3;
  int precision = 1;  // N >= 1
  i64 residue = 0;    // in [0, p^N)

  PadicInt() = default;
  PadicInt(int p, int N, i64 value) : prime(p), precision(N) {
    if (N < 1) fail(ErrorKind::Usage, "precision must be >= 1");
    residue = floor_mod(value, ipow(p, N));
  }

  i64 modulus() const { return ipow(prime, precision); }

  static void check_compat(const PadicInt& a, const PadicInt& b) {
    if (a.prime != b.prime)
      fail(ErrorKind::Usage, "mixing different primes is rejected");
    if (a.precision != b.precision)
      fail(ErrorKind::Usage, "mixing different precisions is rejected");
  }

  friend PadicInt operator+(const PadicInt& a, const PadicInt& b) {
    check_compat(a, b);
    return PadicInt(a.prime, a.precision, a.residue + b.residue);
  }
  friend PadicInt operator-(const PadicInt& a, const PadicInt& b) {
    check_compat(a, b);
    return PadicInt(a.prime, a.precision, a.residue - b.residue);
  }
  friend PadicInt operator*(const PadicInt& a, const PadicInt& b) {
    check_compat(a, b);
    i64 m = a.modulus();
    return PadicInt(a.prime, a.precision, i64(i128(a.residue) * b.residue % m));
  }
  friend bool operator==(const PadicInt& a, const PadicInt& b) {
    return a.prime == b.prime && a.precision == b.precision && a.residue == b.residue;
  }
};

// valuation of a PadicInt; residue 0 means ">= N" (flagged, not fabricated).
struct PadicValuation {
  int value;        // meaningful when !at_least_precision
  bool at_least_precision;
};

inline PadicValuation valuation(const PadicInt& x) {
  if (x.residue == 0) return {x.precision, true};
  return {int_valuation(x.residue, x.prime), false};
}

// y with k*y == x mod p^N, gcd(k,p)=1.
inline PadicInt div_exact(const PadicInt& x, i64 k) {
  if (floor_mod(k, x.prime) == 0)
    fail(ErrorKind::NotInvertible, "div_exact divisor shares the prime");
  i64 m = x.modulus();
  i64 inv = mod_inverse(k, m);
  return PadicInt(x.prime, x.precision, i64(i128(x.residue) * inv % m));
}

// ---------------------------------------------------------------------------
// DualElem / DualPoint — tails in Q_p/Z_p
// ---------------------------------------------------------------------------
struct DualElem {
  int prime = 3;
  int denom_exp = 0;  // k >= 0; k=0 is the trivial character "1"
  i64 numer = 0;      // in [0,p^k), p !| numer when k>=1

  DualElem() = default;
  DualElem(int p, int k, i64 c) : prime(p) { canonicalize(k, c); }

  void canonicalize(int k, i64 c) {
    i64 pk = ipow(prime, k);
    c = floor_mod(c, pk);
    while (k > 0 && c % prime == 0) {
      c /= prime;
      --k;
      pk /= prime;
    }
    if (c == 0) k = 0;
    denom_exp = k;
    numer = c;
  }

  bool is_trivial() const { return denom_exp == 0; }
  Rat to_rat() const {
    if (denom_exp == 0) return Rat(0);
    return Rat(numer, ipow(prime, denom_exp));
  }
  static DualElem from_rat(const Rat& q, int p) {
    Rat f = frac_p(q, p);
    int k = class_denom_exp(f, p);
    if (k == 0) return DualElem(p, 0, 0);
    return DualElem(p, k, f.num * (ipow(p, k) / f.den));
  }

  // norm |xi|_p = p^k (trivial -> 1)
  i64 norm() const { return ipow(prime, denom_exp); }
  // valuation; trivial is the sentinel +infinity
  int val() const { return denom_exp == 0 ? VAL_INFINITY : -denom_exp; }

  std::string to_string() const {
    if (denom_exp == 0) return "1";
    return std::to_string(numer) + "/" + std::to_string(ipow(prime, denom_exp));
  }

  static DualElem parse(const std::string& s, int p) {
    if (s == "1" || s == "0") return DualElem(p, 0, 0);
    auto slash = s.find('/');
    if (slash == std::string::npos)
      fail(ErrorKind::Usage, "dual element must be '1' or 'c/p^k': " + s);
    i64 c = std::stoll(s.substr(0, slash));
    i64 d = std::stoll(s.substr(slash + 1));
    if (d <= 0) fail(ErrorKind::Usage, "bad denominator in " + s);
    int k = 0;
    i64 dd = d;
    while (dd % p == 0) { dd /= p; ++k; }
    if (dd != 1) fail(ErrorKind::Usage, "denominator must be a power of " +
                                        std::to_string(p) + ": " + s);
    return DualElem(p, k, c);
  }

  friend bool operator==(const DualElem& a, const DualElem& b) {
    return a.prime == b.prime && a.denom_exp == b.denom_exp && a.numer == b.numer;
  }
};

struct DualPoint {
  std::vector<DualElem> components;

  int level() const {
    int l = 0;
    for (const auto& c : components) l = std::max(l, c.denom_exp);
    return l;
  }
  i64 sup_norm() const {
    i64 m = 1;
    for (const auto& c : components) m = std::max(m, c.norm());
    return m;
  }
  std::string to_string() const {
    std::string s;
    for (size_t i = 0; i < components.size(); ++i) {
      if (i) s += ",";
      s += components[i].to_string();
    }
    return s;
  }
};

// {xi * x}_p for a DualElem and a PadicInt
inline PhaseRational fractional_part(const DualElem& xi, const PadicInt& x) {
  if (xi.prime != x.prime) fail(ErrorKind::Usage, "prime mismatch");
  if (x.precision < xi.denom_exp)
    fail(ErrorKind::InsufficientPrecision,
         "precision " + std::to_string(x.precision) + " < denom_exp " +
             std::to_string(xi.denom_exp));
  return PhaseRational::from_rat(xi.to_rat() * Rat(x.residue), x.prime);
}

// e^{2 pi i {xi . x}_p}
inline std::complex<double> character_eval(const DualPoint& xi,
                                           const std::vector<PadicInt>& x) {
  if (xi.components.size() != x.size())
    fail(ErrorKind::DimensionMismatch, "character_eval dimension mismatch");
  Rat phase(0);
  for (size_t i = 0; i < x.size(); ++i)
    phase = phase + fractional_part(xi.components[i], x[i]).to_rat();
  return unit_phase(frac_p(phase, xi.components.empty() ? 3 : xi.components[0].prime));
}

// ---------------------------------------------------------------------------
// Legendre symbol and lambda_p
// ---------------------------------------------------------------------------
inline int legendre(i64 a, int p) {
  a = floor_mod(a, p);
  if (a == 0) return 0;
  i64 r = 1, base = a;
  i64 e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = i64(i128(r) * base % p);
    base = i64(i128(base) * base % p);
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

// lambda_p(a): 1 for even valuation; Legendre(a0,p) for odd valuation and
// p = 1 mod 4; i*Legendre(a0,p) for odd valuation and p = 3 mod 4.
inline std::complex<double> lambda_p(const Rat& a, int p) {
  if (a.is_zero()) fail(ErrorKind::ZeroArgument, "lambda_p of zero");
  int v = rat_valuation(a, p);
  if (floor_mod(v, 2) == 0) return {1.0, 0.0};
  // leading digit a0: a * p^{-v} is a p-adic unit; take it mod p.
  i64 n = a.num, d = a.den;
  int nv = int_valuation(n, p);
  int dv = int_valuation(d, p);
  n /= ipow(p, nv);
  d /= ipow(p, dv);
  i64 a0 = i64(i128(floor_mod(n, p)) * mod_inverse(d, p) % p);
  int ls = legendre(a0, p);
  if (p % 4 == 1) return {double(ls), 0.0};
  return {0.0, double(ls)};
}

}  // namespace pnilrep
