// oscillatory.hpp — closed-form p-adic Gaussian integrals over disks, an
// independent Riemann-sum oracle, and the auxiliary L^2-norm identities.
#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "padic.hpp"

namespace pnilrep {

// ---------------------------------------------------------------------------
// PhasePolynomial — a polynomial phase in one or two unit variables, with
// rational (p-power tail) coefficients; degree at most 3 per variable.
// Monomial key: (i, j) meaning u1^i u2^j.
// ---------------------------------------------------------------------------
struct PhasePolynomial {
  int prime;
  std::map<std::pair<int, int>, Rat> coefficients;

  static PhasePolynomial quadratic(int p, const Rat& a, const Rat& b) {
    PhasePolynomial P{p, {}};
    if (!a.is_zero()) P.coefficients[{2, 0}] = a;
    if (!b.is_zero()) P.coefficients[{1, 0}] = b;
    return P;
  }

  Rat eval(const Rat& u1, const Rat& u2 = Rat(0)) const {
    Rat acc(0);
    for (const auto& [key, c] : coefficients) {
      Rat term = c;
      for (int i = 0; i < key.first; ++i) term = term * u1;
      for (int j = 0; j < key.second; ++j) term = term * u2;
      acc = acc + term;
    }
    return acc;
  }

  int nvars() const {
    for (const auto& [key, c] : coefficients)
      if (key.second > 0) return 2;
    return 1;
  }

  // Smallest r such that the phase is constant mod 1 on cosets u + p^r Z_p
  // (for unit-ball variables). deg <= 3 and p > 3 unit denominators mean the
  // worst monomial needs r >= -v(coefficient).
  int constancy_index() const {
    int r = 0;
    for (const auto& [key, c] : coefficients) {
      int v = rat_valuation(c, prime);
      if (v != VAL_INFINITY) r = std::max(r, -v);
    }
    return r;
  }
};

// ---------------------------------------------------------------------------
// Closed-form Gaussian integral over the disk p^gamma Z_p:
//   I(a,b,gamma) = integral of e^{2 pi i {a u^2 + b u}_p} du.
// ---------------------------------------------------------------------------
inline std::complex<double> gaussian_disk_integral(int p, const Rat& a,
                                                   const Rat& b, int gamma) {
  if (p == 2) fail(ErrorKind::Usage, "p must be odd");
  double scale = std::pow(double(p), -double(gamma));
  int va = rat_valuation(a, p);
  if (va == VAL_INFINITY || va >= -2 * gamma) {
    // |a|_p <= p^{2 gamma}: pure character integral.
    int vb = rat_valuation(b, p);
    if (vb == VAL_INFINITY || vb >= -gamma) return {scale, 0.0};
    return {0.0, 0.0};
  }
  // |a|_p > p^{2 gamma}: stationary phase.  Nonzero iff b/a in p^gamma Z_p.
  Rat boa = b / a;
  int vboa = rat_valuation(boa, p);
  if (!(vboa == VAL_INFINITY || vboa >= gamma)) return {0.0, 0.0};
  std::complex<double> lam = lambda_p(a, p);
  double mag = std::pow(double(p), double(va) / 2.0);  // |a|_p^{-1/2}
  Rat inv4 = Rat(1, 4);
  Rat arg = Rat(0) - b * b * inv4 / a;
  return lam * mag * unit_phase(frac_p(arg, p));
}

// ---------------------------------------------------------------------------
// Riemann-sum oracle over the disk p^gamma Z_p (per variable), resolution r:
// substitutes u = p^gamma (v + p^r Z_p) and averages exactly.  A doubling
// check at r+1 guards against an insufficient resolution.
// ---------------------------------------------------------------------------
namespace detail {
inline std::complex<double> riemann_sum_once(const PhasePolynomial& P,
                                             int gamma, int r,
                                             i64 cap) {
  int p = P.prime;
  int nv = P.nvars();
  i64 pr = ipow(p, r);
  i64 total = 1;
  for (int i = 0; i < nv; ++i) {
    total *= pr;
    if (total > cap) fail(ErrorKind::ResourceCap, "oracle sum too large");
  }
  Rat pg = gamma >= 0 ? Rat(ipow(p, gamma)) : Rat(1, ipow(p, -gamma));
  std::complex<double> acc(0, 0);
  for (i64 v1 = 0; v1 < pr; ++v1) {
    Rat u1 = pg * Rat(v1);
    if (nv == 1) {
      acc += unit_phase(frac_p(P.eval(u1), p));
    } else {
      for (i64 v2 = 0; v2 < pr; ++v2)
        acc += unit_phase(frac_p(P.eval(u1, pg * Rat(v2)), p));
    }
  }
  double meas = std::pow(double(p), -double(gamma) * nv);
  return acc * (meas / double(total));
}
}  // namespace detail

inline std::complex<double> riemann_oscillatory_oracle(
    const PhasePolynomial& P, int gamma, int r = -1,
    i64 cap = 100'000'000) {
  int base = P.constancy_index();
  // constancy index of the substituted phase in v: shifted by gamma per power
  int need = 0;
  for (const auto& [key, c] : P.coefficients) {
    int v = rat_valuation(c, P.prime);
    if (v == VAL_INFINITY) continue;
    int deg = key.first + key.second;
    need = std::max(need, -(v + deg * gamma));
  }
  (void)base;
  if (r < 0) r = need + 1;
  if (r < need) fail(ErrorKind::Usage, "resolution below constancy index");
  std::complex<double> a = detail::riemann_sum_once(P, gamma, r, cap);
  std::complex<double> b = detail::riemann_sum_once(P, gamma, r + 1, cap);
  if (std::abs(a - b) > 1e-12)
    fail(ErrorKind::Internal, "oracle doubling check failed");
  return a;
}

// ---------------------------------------------------------------------------
// Auxiliary L^2 lemmas.  Each computes
//   lhs = integral over Z_p^k of |inner oscillatory integral|^2
// by exact nested sums and compares with the closed form rhs = norm^{-1}.
// ---------------------------------------------------------------------------
struct AuxLemmaReport {
  std::string which;
  double lhs, rhs;
  bool pass;
};

inline AuxLemmaReport verify_aux_lemma(const std::string& which,
                                       const std::vector<DualElem>& xi,
                                       i64 cap = 100'000'000) {
  if (xi.empty()) fail(ErrorKind::Usage, "need parameters");
  int p = xi[0].prime;
  std::vector<Rat> q;
  int m = 0;
  for (const auto& e : xi) {
    q.push_back(e.to_rat());
    m = std::max(m, e.denom_exp);
  }
  const Rat H(1, 2);
  int nx;         // outer integration variables
  double rhs;
  // inner phase as a function of (x..., u)
  auto norm_of = [&](const std::vector<Rat>& v) {
    double n = 1.0;
    for (const auto& t : v) {
      int val = rat_valuation(t, p);
      if (val != VAL_INFINITY && val < 0)
        n = std::max(n, std::pow(double(p), -double(val)));
    }
    return n;
  };
  std::function<Rat(const std::vector<i64>&, i64)> phase;
  if (which == "lemaaux") {
    if (xi.size() != 2) fail(ErrorKind::Usage, "lemaaux takes (xi3, xi4)");
    nx = 2;
    rhs = 1.0 / norm_of({q[0], q[1]});
    phase = [&, q](const std::vector<i64>& x, i64 u) {
      Rat ur(u);
      return (q[0] * Rat(x[0]) + q[1] * Rat(x[1])) * ur +
             q[1] * Rat(x[0]) * ur * ur * H;
    };
  } else if (which == "lemaauxG53") {
    if (xi.size() != 2) fail(ErrorKind::Usage, "lemaauxG53 takes (xi4, xi5)");
    nx = 2;
    rhs = 1.0 / norm_of({q[0], q[1]});
    phase = [&, q](const std::vector<i64>& x, i64 u) {
      return (q[0] * Rat(x[0]) + q[1] * Rat(x[1])) * Rat(u);
    };
  } else if (which == "lemaauxG54") {
    if (xi.size() != 3) fail(ErrorKind::Usage, "lemaauxG54 takes (xi1..xi3)");
    nx = 2;
    rhs = 1.0 / norm_of({q[0], q[1], q[2]});
    phase = [&, q](const std::vector<i64>& x, i64 u) {
      Rat ur(u);
      return q[0] * Rat(x[0]) * ur * ur +
             (q[1] * Rat(x[0]) + q[2] * Rat(x[1])) * ur;
    };
  } else if (which == "lemaauxG56") {
    if (xi.size() != 3) fail(ErrorKind::Usage, "lemaauxG56 takes (xi3..xi5)");
    nx = 3;
    rhs = 1.0 / norm_of({q[0], q[1], q[2]});
    phase = [&, q](const std::vector<i64>& x, i64 u) {
      Rat ur(u);
      return (q[0] * Rat(x[0]) + q[1] * Rat(x[1]) + q[2] * Rat(x[2])) * ur +
             q[1] * Rat(x[0]) * ur * ur * H;
    };
  } else {
    fail(ErrorKind::Usage, "unknown lemma id");
  }

  i64 pm = ipow(p, m);
  i64 total = 1;
  for (int i = 0; i < nx; ++i) {
    total *= pm;
    if (total * pm > cap) fail(ErrorKind::ResourceCap, "lemma sum too large");
  }
  std::vector<i64> x(nx, 0);
  double acc = 0.0;
  for (i64 idx = 0;; ++idx) {
    std::complex<double> inner(0, 0);
    for (i64 u = 0; u < pm; ++u) inner += unit_phase(frac_p(phase(x, u), p));
    inner /= double(pm);
    acc += std::norm(inner);
    int i = nx - 1;
    while (i >= 0) {
      if (++x[i] < pm) break;
      x[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  double lhs = acc / double(total);
  return {which, lhs, rhs, std::abs(lhs - rhs) < 1e-9};
}

}  // namespace pnilrep
