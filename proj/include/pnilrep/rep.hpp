// rep.hpp — monomial realizations of every irreducible representation:
// matrix coefficients, representation matrices, characters, the group Fourier
// transform on finite quotients, and Fourier synthesis.
#pragma once

#include <complex>
#include <vector>

#include "dual.hpp"

namespace pnilrep {

using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// MonomialRep — every irreducible here acts by  e(P(x,u)) . delta_{u -> u+s(x)}
// on an index set I = Z/T (or Z/T x Z/T); entries are exact rational phases.
// ---------------------------------------------------------------------------
class MonomialRep {
 public:
  struct Entry {
    i64 row, col;  // row = source index u, col = target u + s(x)
    Rat phase;     // in [0,1), p-power denominator
  };

  explicit MonomialRep(const RepLabel& label) : label_(label) {
    p_ = label.xi.components.empty() ? 3 : label.xi.components[0].prime;
    for (const auto& c : label.xi.components) xi_.push_back(c.to_rat());
    for (int e : label.index_moduli_exp) moduli_.push_back(ipow(p_, e));
    i64 d = 1;
    for (i64 t : moduli_) d *= t;
    if (d != label.dim)
      fail(ErrorKind::Internal, "index set size disagrees with dimension");
    if (label.law.id == LawId::g53 && label.branch == "A4") {
      int k4 = label.xi.components[3].denom_exp;
      int k5 = label.xi.components[4].denom_exp;
      if (k4 < 2 * k5)
        fail(ErrorKind::UnsupportedLaw,
             "unsupported label regime for this realization");
    }
    carry_ = (label.law.id == LawId::g56 && label.branch == "A4");
    if (carry_) init_carry();
  }

  const RepLabel& label() const { return label_; }
  i64 dim() const { return label_.dim; }
  int prime() const { return p_; }

  // Sparse matrix of pi(x); x given as integer coordinates (any precision
  // >= level works; entries depend only on x mod p^level).
  std::vector<Entry> sparse(const std::vector<i64>& x) const {
    if (int(x.size()) != label_.law.dim)
      fail(ErrorKind::DimensionMismatch, "bad coordinate count");
    if (carry_) return sparse_carry(x);
    std::vector<Rat> xr(x.size());
    for (size_t i = 0; i < x.size(); ++i) xr[i] = Rat(x[i]);
    std::vector<Entry> out;
    if (moduli_.empty()) {
      out.push_back({0, 0, frac_p(P(xr, Rat(0), Rat(0)), p_)});
      return out;
    }
    std::vector<Rat> s = shift(xr);
    if (moduli_.size() == 1) {
      i64 T = moduli_[0];
      i64 sr = zred(s[0], T, p_);
      out.reserve(T);
      for (i64 u = 0; u < T; ++u)
        out.push_back({u, (u + sr) % T, frac_p(P(xr, Rat(u), Rat(0)), p_)});
    } else {
      i64 T1 = moduli_[0], T2 = moduli_[1];
      i64 s1 = zred(s[0], T1, p_), s2 = zred(s[1], T2, p_);
      out.reserve(T1 * T2);
      for (i64 u1 = 0; u1 < T1; ++u1)
        for (i64 u2 = 0; u2 < T2; ++u2)
          out.push_back({u1 * T2 + u2, ((u1 + s1) % T1) * T2 + (u2 + s2) % T2,
                         frac_p(P(xr, Rat(u1), Rat(u2)), p_)});
    }
    return out;
  }

  // The phase polynomial P(x,u) of the realization (exact rational, not yet
  // reduced mod 1).
  Rat P(const std::vector<Rat>& x, const Rat& u1, const Rat& u2) const {
    const Rat H(1, 2), S6(1, 6);
    const auto& xi = xi_;
    Rat base(0);
    for (size_t i = 0; i < xi.size(); ++i) base = base + xi[i] * x[i];
    switch (label_.law.id) {
      case LawId::abelian:
        return base;
      case LawId::h1:
        if (moduli_.empty()) return base;
        return base + xi[2] * u1 * x[1];
      case LawId::h2:
        if (moduli_.empty()) return base;
        return base + xi[4] * (u1 * x[1] + u2 * x[3]);
      case LawId::b4:
        if (moduli_.empty()) return base;
        return base + xi[2] * u1 * x[1] +
               xi[3] * (u1 * x[2] + H * u1 * u1 * x[1]);
      case LawId::g52:
        if (moduli_.empty()) return base;
        return base + (xi[3] * x[1] + xi[4] * x[2]) * u1;
      case LawId::g53: {
        if (moduli_.empty()) return base;
        if (label_.branch == "A2") return base + xi[3] * u1 * x[1];
        if (label_.branch == "A3")
          return base + xi[3] * u1 * x[1] +
                 xi[4] * (x[3] * u1 + H * x[1] * u1 * u1 + x[2] * u2);
        // A4 (tilted polarization)
        Rat c = xi[4] / xi[3];
        return base + H * u1 * u1 * x[1] * xi[4] + u1 * x[1] * xi[3] +
               u1 * x[3] * xi[4] - u1 * x[1] * x[2] * xi[4] * c -
               x[1] * x[2] * xi[4] - x[2] * x[3] * xi[4] * c;
      }
      case LawId::g54: {
        if (moduli_.empty()) return base;
        if (label_.branch == "A2") return base + xi[2] * u1 * x[1];
        if (label_.branch == "A3")
          return base + xi[2] * u1 * x[1] +
                 xi[3] * (u1 * x[2] + H * u1 * u1 * x[1]);
        if (label_.branch == "A4")
          return base - H * xi[4] * u1 * u1 * x[0] -
                 H * xi[3] * u1 * x[0] * x[0] - xi[4] * u1 * x[0] * x[1] -
                 xi[2] * u1 * x[0] + xi[4] * u1 * x[2] -
                 xi[3] * xi[3] / (Rat(6) * xi[4]) * x[0] * x[0] * x[0] -
                 H * xi[3] * x[0] * x[0] * x[1] -
                 xi[2] * xi[3] / (Rat(2) * xi[4]) * x[0] * x[0] -
                 H * xi[4] * x[0] * x[1] * x[1] - xi[2] * x[0] * x[1] -
                 xi[1] * xi[3] / xi[4] * x[0];
        // A5
        return base + H * xi[3] * u1 * u1 * x[1] +
               H * xi[4] * u1 * x[1] * x[1] + xi[2] * u1 * x[1] +
               xi[3] * u1 * x[2] +
               xi[4] * xi[4] / (Rat(6) * xi[3]) * x[1] * x[1] * x[1] +
               xi[2] * xi[4] / (Rat(2) * xi[3]) * x[1] * x[1] +
               xi[0] * xi[4] / xi[3] * x[1];
      }
      case LawId::g55:
        if (moduli_.empty()) return base;
        return base + xi[2] * x[1] * u1 +
               xi[3] * (H * x[1] * u1 * u1 + x[2] * u1) +
               xi[4] * (x[3] * u1 + H * x[2] * u1 * u1 +
                        S6 * x[1] * u1 * u1 * u1);
      case LawId::g56:
        if (moduli_.empty()) return base;
        // b4-type sector through the quotient by the last coordinate
        return base + xi[2] * u1 * x[1] +
               xi[3] * (u1 * x[2] + H * u1 * u1 * x[1]);
    }
    fail(ErrorKind::Internal, "unreachable");
  }

  // The index shift s(x) per index factor (exact rational, p-integral).
  std::vector<Rat> shift(const std::vector<Rat>& x) const {
    switch (label_.law.id) {
      case LawId::abelian:
        return {};
      case LawId::h1:
      case LawId::b4:
      case LawId::g52:
      case LawId::g55:
      case LawId::g56:
        return {x[0]};
      case LawId::h2:
        return {x[0], x[2]};
      case LawId::g53:
        if (label_.branch == "A2") return {x[0]};
        if (label_.branch == "A3") return {x[0], x[1]};
        return {x[0] - (xi_[4] / xi_[3]) * x[2]};  // A4
      case LawId::g54:
        if (label_.branch == "A2" || label_.branch == "A3") return {x[0]};
        if (label_.branch == "A4") return {x[1] + (xi_[3] / xi_[4]) * x[0]};
        return {x[0] + (xi_[4] / xi_[3]) * x[1]};  // A5
    }
    fail(ErrorKind::Internal, "unreachable");
  }

  bool is_carry() const { return carry_; }
  // carry-model internals used by the character routines
  i64 carry_T() const { return T_; }

  std::vector<Entry> sparse_carry(const std::vector<i64>& x) const {
    const Rat H(1, 2), S6(1, 6);
    const GroupLaw& law = label_.law;
    std::vector<Rat> xr(x.size());
    for (size_t i = 0; i < x.size(); ++i) xr[i] = Rat(x[i]);
    std::vector<Entry> out;
    out.reserve(T_ * T_);
    for (i64 a = 0; a < T_; ++a) {
      i64 w = a + x[0];
      i64 abar = floor_mod(w, T_);
      Rat delta(w - abar);
      i64 m = floor_mod((w - abar) / T_, M_);
      std::vector<Rat> ga{Rat(a), Rat(0), Rat(0), Rat(0), Rat(0)};
      std::vector<Rat> gb{Rat(abar), Rat(0), Rat(0), Rat(0), Rat(0)};
      std::vector<Rat> kk = star_rat(law, star_rat(law, ga, xr), inverse_rat(law, gb));
      std::vector<Rat> gd{delta, Rat(0), Rat(0), Rat(0), Rat(0)};
      std::vector<Rat> nn = star_rat(law, inverse_rat(law, gd), kk);
      if (!nn[0].is_zero())
        fail(ErrorKind::Internal, "carry model: nonzero first component");
      Rat base = xi_[0] * delta + rho_[m] + xi_[1] * nn[1] + xi_[2] * nn[2] +
                 xi_[3] * nn[3] + xi_[4] * nn[4];
      Rat add = ad(delta);
      Rat w2d = w2(delta), w1d = w1(delta);
      for (i64 b = 0; b < T_; ++b) {
        Rat u2(b);
        Rat theta = base + w2d * u2 * u2 + w1d * u2 +
                    xi_[4] * (u2 + add) * nn[2];
        i64 v2 = zred(u2 + add + nn[1], T_, p_);
        out.push_back({a * T_ + b, abar * T_ + v2, frac_p(theta, p_)});
      }
    }
    return out;
  }

 private:
  void init_carry() {
    T_ = moduli_[0];
    i64 plevel = ipow(p_, label_.level);
    M_ = plevel / T_;
    Rat S(0);
    for (i64 m = 0; m < M_; ++m)
      S = S + frac_p(K(Rat(m * T_), Rat(T_)), p_);
    Rat alpha = frac_p(Rat(0) - S / Rat(M_), p_);
    rho_.assign(M_, Rat(0));
    for (i64 m = 0; m + 1 < M_; ++m)
      rho_[m + 1] = frac_p(rho_[m] + alpha + K(Rat(m * T_), Rat(T_)), p_);
    Rat wrap = frac_p(rho_[M_ - 1] + alpha + K(Rat((M_ - 1) * T_), Rat(T_)), p_);
    if (!wrap.is_zero())
      fail(ErrorKind::Internal, "carry model: cocycle table does not close");
  }

  Rat ad(const Rat& d) const { return d * d * Rat(1, 2) + d * xi_[3] / xi_[4]; }
  Rat w2(const Rat& d) const { return Rat(0) - d * xi_[4] * Rat(1, 2); }
  Rat w1(const Rat& d) const {
    return Rat(0) - (d * xi_[2] + d * d * xi_[3] * Rat(1, 2) +
                     d * d * d * xi_[4] * Rat(1, 6));
  }
  Rat K(const Rat& d, const Rat& e) const {
    Rat a = ad(d);
    return w2(e) * a * a + w1(e) * a;
  }

  RepLabel label_;
  int p_;
  std::vector<Rat> xi_;
  std::vector<i64> moduli_;
  bool carry_ = false;
  i64 T_ = 1, M_ = 1;
  std::vector<Rat> rho_;
};

// ---------------------------------------------------------------------------
// Dense matrices and matrix coefficients
// ---------------------------------------------------------------------------
struct RepMatrix {
  RepLabel label;
  i64 d;
  std::vector<cplx> entries;  // row-major d x d
  cplx& at(i64 r, i64 c) { return entries[r * d + c]; }
  cplx at(i64 r, i64 c) const { return entries[r * d + c]; }
};

inline RepMatrix rep_matrix(const MonomialRep& rep,
                            const std::vector<i64>& x) {
  RepMatrix m{rep.label(), rep.dim(),
              std::vector<cplx>(rep.dim() * rep.dim(), cplx(0, 0))};
  for (const auto& e : rep.sparse(x)) m.at(e.row, e.col) = unit_phase(e.phase);
  return m;
}

inline RepMatrix rep_matrix(const RepLabel& label, const GroupElement& x) {
  if (x.precision < label.level)
    fail(ErrorKind::InsufficientPrecision, "element precision below rep level");
  MonomialRep rep(label);
  return rep_matrix(rep, x.coords);
}

inline cplx matrix_coefficient(const MonomialRep& rep, i64 h, i64 hp,
                               const std::vector<i64>& x) {
  if (h < 0 || h >= rep.dim() || hp < 0 || hp >= rep.dim())
    fail(ErrorKind::IndexOutOfRange, "matrix coefficient index out of range");
  for (const auto& e : rep.sparse(x))
    if (e.row == h && e.col == hp) return unit_phase(e.phase);
  return {0.0, 0.0};
}

inline cplx matrix_coefficient(const RepLabel& label, i64 h, i64 hp,
                               const GroupElement& x) {
  if (x.precision < label.level)
    fail(ErrorKind::InsufficientPrecision, "element precision below rep level");
  MonomialRep rep(label);
  return matrix_coefficient(rep, h, hp, x.coords);
}

// ---------------------------------------------------------------------------
// Characters
// ---------------------------------------------------------------------------
// Closed-form character: indicator on the shift condition times an exact
// phase sum over the index set (never assembles the dense matrix).
inline cplx character_closed_form(const MonomialRep& rep,
                                  const std::vector<i64>& x) {
  int p = rep.prime();
  if (rep.is_carry()) {
    cplx tr(0, 0);
    for (const auto& e : rep.sparse(x))
      if (e.row == e.col) tr += unit_phase(e.phase);
    return tr;
  }
  const auto& lab = rep.label();
  std::vector<Rat> xr(x.size());
  for (size_t i = 0; i < x.size(); ++i) xr[i] = Rat(x[i]);
  if (lab.index_moduli_exp.empty())
    return unit_phase(frac_p(rep.P(xr, Rat(0), Rat(0)), p));
  std::vector<Rat> s = rep.shift(xr);
  std::vector<i64> moduli;
  for (int e : lab.index_moduli_exp) moduli.push_back(ipow(p, e));
  for (size_t i = 0; i < moduli.size(); ++i)
    if (zred(s[i], moduli[i], p) != 0) return {0.0, 0.0};
  cplx sum(0, 0);
  if (moduli.size() == 1) {
    for (i64 u = 0; u < moduli[0]; ++u)
      sum += unit_phase(frac_p(rep.P(xr, Rat(u), Rat(0)), p));
  } else {
    for (i64 u1 = 0; u1 < moduli[0]; ++u1)
      for (i64 u2 = 0; u2 < moduli[1]; ++u2)
        sum += unit_phase(frac_p(rep.P(xr, Rat(u1), Rat(u2)), p));
  }
  return sum;
}

inline cplx character_closed_form(const RepLabel& label,
                                  const GroupElement& x) {
  MonomialRep rep(label);
  return character_closed_form(rep, x.coords);
}

// Exact coset average of |chi|^2 over G/G(p^m), m = level.
inline double character_l2_norm(const RepLabel& label,
                                i64 cap = DEFAULT_QUOTIENT_CAP) {
  if (label.index_moduli_exp.empty()) return 1.0;  // |phase|^2 == 1 pointwise
  MonomialRep rep(label);
  const GroupLaw& law = label.law;
  int p = rep.prime();
  int m = std::max(1, label.level);
  i64 pm = ipow(p, m);
  i64 total = 1;
  for (int i = 0; i < law.dim * m; ++i) {
    total *= p;
    if (total > cap) fail(ErrorKind::ResourceCap, "character integral too large");
  }
  std::vector<i64> x(law.dim, 0);
  double acc = 0.0;
  for (i64 idx = 0;; ++idx) {
    cplx tr = character_closed_form(rep, x);
    acc += std::norm(tr);
    // odometer (last coordinate fastest = lexicographic order)
    int i = law.dim - 1;
    while (i >= 0) {
      if (++x[i] < pm) break;
      x[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return acc / double(total);
}

// ---------------------------------------------------------------------------
// Test functions and the group Fourier transform
// ---------------------------------------------------------------------------
struct TestFunction {
  GroupLaw law;
  int prime;
  int m;  // constancy index
  std::vector<cplx> values;  // indexed by quotient_index over G/G(p^m)

  static TestFunction zeros(const GroupLaw& law, int p, int m) {
    return {law, p, m, std::vector<cplx>(quotient_size(law, p, m), cplx(0, 0))};
  }
  cplx at(const std::vector<i64>& coords) const {
    return values[quotient_index(law, prime, m, coords)];
  }
};

struct FourierCoefficient {
  RepLabel label;
  i64 d;
  std::vector<cplx> matrix;  // row-major d x d
};

// f_hat(xi) = integral over G of f(x) pi(x)^* dx (exact coset average).
inline FourierCoefficient fourier_transform(const TestFunction& f,
                                            const RepLabel& label) {
  MonomialRep rep(label);
  int p = f.prime;
  int m = std::max(std::max(f.m, label.level), 1);
  i64 total = quotient_size(f.law, p, m);
  i64 d = rep.dim();
  std::vector<cplx> acc(d * d, cplx(0, 0));
  std::vector<i64> x(f.law.dim, 0);
  i64 pm = ipow(p, m);
  i64 pf = ipow(p, f.m);
  for (i64 idx = 0;; ++idx) {
    std::vector<i64> xf(x.size());
    for (size_t i = 0; i < x.size(); ++i) xf[i] = x[i] % pf;
    cplx fv = f.m == 0 ? f.values[0] : f.at(xf);
    if (fv != cplx(0, 0)) {
      for (const auto& e : rep.sparse(x)) {
        // (pi^*)_{col,row} = conj(phase); accumulate f * pi^*
        acc[e.col * d + e.row] += fv * std::conj(unit_phase(e.phase));
      }
    }
    int i = f.law.dim - 1;
    while (i >= 0) {
      if (++x[i] < pm) break;
      x[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  for (auto& v : acc) v /= double(total);
  return {label, d, std::move(acc)};
}

// f(x) = sum over labels of d_xi * Tr(pi(x) f_hat(xi))
inline TestFunction synthesize(const std::vector<FourierCoefficient>& coeffs,
                               int p, int m) {
  if (coeffs.empty()) fail(ErrorKind::Usage, "empty coefficient set");
  const GroupLaw& law = coeffs[0].label.law;
  TestFunction f = TestFunction::zeros(law, p, m);
  i64 pm = ipow(p, m);
  std::vector<i64> x(law.dim, 0);
  for (i64 idx = 0;; ++idx) {
    cplx val(0, 0);
    for (const auto& fc : coeffs) {
      MonomialRep rep(fc.label);
      cplx tr(0, 0);
      i64 d = fc.d;
      for (const auto& e : rep.sparse(x))
        tr += unit_phase(e.phase) * fc.matrix[e.col * d + e.row];
      val += double(d) * tr;
    }
    f.values[quotient_index(law, p, m, x)] = val;
    int i = law.dim - 1;
    while (i >= 0) {
      if (++x[i] < pm) break;
      x[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return f;
}

}  // namespace pnilrep
