// group.hpp — the polynomial group laws on Z_p^d, inverses, one-parameter
// subgroups, and enumeration of the finite quotients G/G(p^n Z_p).
#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <vector>

#include "padic.hpp"

namespace pnilrep {

enum class LawId { abelian, h1, h2, b4, g52, g53, g54, g55, g56 };

struct GroupLaw {
  LawId id;
  int dim;        // d
  int nclass;     // nilpotency class
  int min_prime;  // smallest admissible p (p > nclass, odd)
  int kappa;      // dim of the generating stratum g/[g,g]
  std::string name;

  static GroupLaw make(const std::string& name, int abelian_dim = 1) {
    if (name == "zp") return {LawId::abelian, abelian_dim, 1, 3, abelian_dim, "zp"};
    if (name == "h1") return {LawId::h1, 3, 2, 3, 2, "h1"};
    if (name == "h2") return {LawId::h2, 5, 2, 3, 4, "h2"};
    if (name == "b4") return {LawId::b4, 4, 3, 3, 2, "b4"};
    if (name == "g52") return {LawId::g52, 5, 2, 3, 3, "g52"};
    if (name == "g53") return {LawId::g53, 5, 3, 5, 3, "g53"};
    if (name == "g54") return {LawId::g54, 5, 3, 5, 2, "g54"};
    if (name == "g55") return {LawId::g55, 5, 4, 5, 2, "g55"};
    if (name == "g56") return {LawId::g56, 5, 4, 5, 2, "g56"};
    fail(ErrorKind::Usage, "unknown group law: " + name);
  }

  bool admits_prime(int p) const { return p >= min_prime; }

  // Generating-stratum coordinate indices (0-based).
  std::vector<int> generator_indices() const {
    switch (id) {
      case LawId::abelian: {
        std::vector<int> v(dim);
        for (int i = 0; i < dim; ++i) v[i] = i;
        return v;
      }
      case LawId::h1: return {0, 1};
      case LawId::h2: return {0, 1, 2, 3};
      case LawId::b4: return {0, 1};
      case LawId::g52: return {0, 1, 2};
      case LawId::g53: return {0, 1, 2};
      case LawId::g54: return {0, 1};
      case LawId::g55: return {0, 1};
      case LawId::g56: return {0, 1};
    }
    fail(ErrorKind::Internal, "unreachable");
  }
};

// ---------------------------------------------------------------------------
// Exact star product on rational coordinate vectors.
// ---------------------------------------------------------------------------
inline std::vector<Rat> star_rat(const GroupLaw& law, const std::vector<Rat>& a,
                                 const std::vector<Rat>& b) {
  const Rat H(1, 2), S6(1, 6);
  std::vector<Rat> r(law.dim);
  for (int i = 0; i < law.dim; ++i) r[i] = a[i] + b[i];
  switch (law.id) {
    case LawId::abelian:
      break;
    case LawId::h1:
      r[2] = r[2] + a[0] * b[1];
      break;
    case LawId::h2:
      r[4] = r[4] + a[0] * b[1] + a[2] * b[3];
      break;
    case LawId::b4:
      r[2] = r[2] + a[0] * b[1];
      r[3] = r[3] + H * a[0] * a[0] * b[1] + a[0] * b[2];
      break;
    case LawId::g52:
      r[3] = r[3] + a[0] * b[1];
      r[4] = r[4] + a[0] * b[2];
      break;
    case LawId::g53:
      r[3] = r[3] + a[0] * b[1];
      r[4] = r[4] + a[1] * b[2] + a[0] * b[3] + H * a[0] * a[0] * b[1];
      break;
    case LawId::g54:
      r[2] = r[2] + a[0] * b[1];
      r[3] = r[3] + H * a[0] * a[0] * b[1] + a[0] * b[2];
      r[4] = r[4] + H * a[0] * b[1] * b[1] + a[1] * b[2] + a[0] * a[1] * b[1];
      break;
    case LawId::g55:
      r[2] = r[2] + a[0] * b[1];
      r[3] = r[3] + H * a[0] * a[0] * b[1] + a[0] * b[2];
      r[4] = r[4] + S6 * a[0] * a[0] * a[0] * b[1] + H * a[0] * a[0] * b[2] +
             a[0] * b[3];
      break;
    case LawId::g56:
      r[2] = r[2] + a[0] * b[1];
      r[3] = r[3] + H * a[0] * a[0] * b[1] + a[0] * b[2];
      r[4] = r[4] + S6 * a[0] * a[0] * a[0] * b[1] + H * a[0] * a[0] * b[2] +
             a[0] * b[3] + H * a[0] * b[1] * b[1] + a[1] * b[2] +
             a[0] * a[1] * b[1];
      break;
  }
  return r;
}

// Exact inverse: solve x * y = 0 coordinatewise (the cocycles are triangular).
inline std::vector<Rat> inverse_rat(const GroupLaw& law,
                                    const std::vector<Rat>& x) {
  std::vector<Rat> y(law.dim, Rat(0));
  for (int i = 0; i < law.dim; ++i) {
    std::vector<Rat> probe = star_rat(law, x, y);
    y[i] = y[i] - probe[i];
  }
  return y;
}

// ---------------------------------------------------------------------------
// GroupElement — coordinates mod p^N
// ---------------------------------------------------------------------------
struct GroupElement {
  GroupLaw law;
  int prime;
  int precision;
  std::vector<i64> coords;  // each in [0, p^N)

  GroupElement(const GroupLaw& l, int p, int N, std::vector<i64> c)
      : law(l), prime(p), precision(N), coords(std::move(c)) {
    if (!l.admits_prime(p))
      fail(ErrorKind::Usage, "prime " + std::to_string(p) +
                                 " below min_prime for " + l.name);
    if (int(coords.size()) != l.dim)
      fail(ErrorKind::DimensionMismatch, "coordinate count != dimension");
    i64 m = ipow(p, N);
    for (auto& v : coords) v = floor_mod(v, m);
  }

  static GroupElement identity(const GroupLaw& l, int p, int N) {
    return GroupElement(l, p, N, std::vector<i64>(l.dim, 0));
  }

  std::vector<Rat> to_rat() const {
    std::vector<Rat> r(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) r[i] = Rat(coords[i]);
    return r;
  }

  std::string to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < coords.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(coords[i]);
    }
    s += ") mod " + std::to_string(prime) + "^" + std::to_string(precision);
    return s;
  }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.coords == b.coords;
  }
};

inline void check_same_frame(const GroupElement& x, const GroupElement& y) {
  if (x.law.id != y.law.id || x.law.dim != y.law.dim)
    fail(ErrorKind::Usage, "mixing group laws");
  if (x.prime != y.prime || x.precision != y.precision)
    fail(ErrorKind::Usage, "mixing primes or precisions");
}

inline GroupElement star(const GroupElement& x, const GroupElement& y) {
  check_same_frame(x, y);
  std::vector<Rat> r = star_rat(x.law, x.to_rat(), y.to_rat());
  i64 m = ipow(x.prime, x.precision);
  std::vector<i64> c(r.size());
  for (size_t i = 0; i < r.size(); ++i) c[i] = zred(r[i], m, x.prime);
  return GroupElement(x.law, x.prime, x.precision, std::move(c));
}

inline GroupElement inverse(const GroupElement& x) {
  std::vector<Rat> r = inverse_rat(x.law, x.to_rat());
  i64 m = ipow(x.prime, x.precision);
  std::vector<i64> c(r.size());
  for (size_t i = 0; i < r.size(); ++i) c[i] = zred(r[i], m, x.prime);
  return GroupElement(x.law, x.prime, x.precision, std::move(c));
}

// ---------------------------------------------------------------------------
// One-parameter subgroups gamma_W(t), exact closed forms.
// w has kappa components (coordinates in the generating stratum).
// ---------------------------------------------------------------------------
inline std::vector<Rat> one_param_rat(const GroupLaw& law,
                                      const std::vector<Rat>& w, const Rat& t) {
  if (int(w.size()) != law.kappa)
    fail(ErrorKind::NonGeneratorDirection,
         "direction must have kappa=" + std::to_string(law.kappa) +
             " components");
  const Rat H(1, 2), S6(1, 6);
  std::vector<Rat> g(law.dim, Rat(0));
  switch (law.id) {
    case LawId::abelian:
      for (int i = 0; i < law.dim; ++i) g[i] = t * w[i];
      return g;
    case LawId::h1:
      g[0] = t * w[0];
      g[1] = t * w[1];
      g[2] = H * t * t * w[0] * w[1];
      return g;
    case LawId::h2:
      for (int i = 0; i < 4; ++i) g[i] = t * w[i];
      g[4] = H * t * t * (w[0] * w[1] + w[2] * w[3]);
      return g;
    case LawId::g52:
      for (int i = 0; i < 3; ++i) g[i] = t * w[i];
      g[3] = H * t * t * w[0] * w[1];
      g[4] = H * t * t * w[0] * w[2];
      return g;
    case LawId::g53:
      for (int i = 0; i < 3; ++i) g[i] = t * w[i];
      g[3] = H * t * t * w[0] * w[1];
      g[4] = H * t * t * w[1] * w[2] + S6 * t * t * t * w[0] * w[0] * w[1];
      return g;
    case LawId::b4:
    case LawId::g54:
    case LawId::g55:
    case LawId::g56: {
      // only canonical e_1, e_2 (or scalar multiples of one of them)
      bool w0 = !w[0].is_zero(), w1 = !w[1].is_zero();
      if (w0 && w1)
        fail(ErrorKind::NonGeneratorDirection,
             law.name + " supports one-parameter subgroups only along e1/e2");
      g[0] = t * w[0];
      g[1] = t * w[1];
      return g;
    }
  }
  fail(ErrorKind::Internal, "unreachable");
}

inline GroupElement one_param(const GroupLaw& law, int p, int N,
                              const std::vector<Rat>& w, const Rat& t) {
  std::vector<Rat> g = one_param_rat(law, w, t);
  i64 m = ipow(p, N);
  std::vector<i64> c(g.size());
  for (size_t i = 0; i < g.size(); ++i) c[i] = zred(g[i], m, p);
  return GroupElement(law, p, N, std::move(c));
}

// gamma(t) along a canonical basis direction e_j (0-based j), any law: t*e_j.
inline GroupElement one_param_basis(const GroupLaw& law, int p, int N, int j,
                                    i64 t) {
  if (j < 0 || j >= law.dim) fail(ErrorKind::IndexOutOfRange, "bad direction");
  std::vector<i64> c(law.dim, 0);
  c[j] = floor_mod(t, ipow(p, N));
  return GroupElement(law, p, N, std::move(c));
}

// ---------------------------------------------------------------------------
// Finite quotient enumeration, lexicographic digit order (first coordinate
// most significant).
// ---------------------------------------------------------------------------
constexpr i64 DEFAULT_QUOTIENT_CAP = 10'000'000;

inline i64 quotient_size(const GroupLaw& law, int p, int n) {
  i64 s = 1;
  for (int i = 0; i < law.dim * n; ++i) {
    if (s > DEFAULT_QUOTIENT_CAP) fail(ErrorKind::ResourceCap, "quotient too large");
    s *= p;
  }
  return s;
}

// index <-> coordinates for the quotient table (n digits per coordinate)
inline std::vector<i64> quotient_coords(const GroupLaw& law, int p, int n,
                                        i64 index) {
  i64 pn = ipow(p, n);
  std::vector<i64> c(law.dim);
  for (int i = law.dim - 1; i >= 0; --i) {
    c[i] = index % pn;
    index /= pn;
  }
  return c;
}

inline i64 quotient_index(const GroupLaw& law, int p, int n,
                          const std::vector<i64>& coords) {
  i64 pn = ipow(p, n);
  i64 idx = 0;
  for (int i = 0; i < law.dim; ++i) idx = idx * pn + floor_mod(coords[i], pn);
  return idx;
}

inline std::vector<GroupElement> enumerate_quotient(const GroupLaw& law, int p,
                                                    int n, i64 cap = DEFAULT_QUOTIENT_CAP) {
  i64 total = 1;
  for (int i = 0; i < law.dim * n; ++i) {
    total *= p;
    if (total > cap) fail(ErrorKind::ResourceCap, "quotient exceeds cap");
  }
  int N = std::max(1, n);
  std::vector<GroupElement> out;
  out.reserve(total);
  for (i64 idx = 0; idx < total; ++idx)
    out.emplace_back(law, p, N, quotient_coords(law, p, n, idx));
  return out;
}

}  // namespace pnilrep
