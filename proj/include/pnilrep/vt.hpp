// vt.hpp — Vladimirov–Taibleson operators (full and directional), invariant
// operator symbols, closed-form sub-Laplacian spectra, and the global
// hypoellipticity margin.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "rep.hpp"

namespace pnilrep {

// ---------------------------------------------------------------------------
// Scalar helpers
// ---------------------------------------------------------------------------
// C_{alpha,d} = (1 - p^alpha) / (1 - p^{-(alpha+d)})
inline double vt_front_constant(int p, double alpha, int d) {
  return (1.0 - std::pow(double(p), alpha)) /
         (1.0 - std::pow(double(p), -(alpha + double(d))));
}

// c1 = (1 - p^{-1}) / (1 - p^{-(alpha+1)}) : the directional eigenvalue shift
inline double vt_c1(int p, double alpha) {
  return (1.0 - 1.0 / double(p)) /
         (1.0 - std::pow(double(p), -(alpha + 1.0)));
}

// One direction's spectral contribution: |v|^alpha - c1 if the class of v in
// Q_p/Z_p is nontrivial, else 0 (the two-case convention).
inline double vt_contrib(const Rat& v, int p, double alpha) {
  int val = rat_valuation(v, p);
  if (val == VAL_INFINITY || val >= 0) return 0.0;
  return std::pow(double(p), -double(val) * alpha) - vt_c1(p, alpha);
}

// ---------------------------------------------------------------------------
// Exact Haar integration of a locally constant function on Z_p^m
// ---------------------------------------------------------------------------
inline cplx integrate_locally_constant(
    int p, int nvars, int r,
    const std::function<cplx(const std::vector<i64>&)>& f,
    i64 cap = DEFAULT_QUOTIENT_CAP, bool doubling_check = true) {
  if (r < 0) fail(ErrorKind::Usage, "negative resolution");
  auto once = [&](int rr) {
    i64 pr = ipow(p, rr);
    i64 total = 1;
    for (int i = 0; i < nvars; ++i) {
      total *= pr;
      if (total > cap) fail(ErrorKind::ResourceCap, "integration too large");
    }
    std::vector<i64> x(nvars, 0);
    cplx acc(0, 0);
    for (i64 idx = 0;; ++idx) {
      acc += f(x);
      int i = nvars - 1;
      while (i >= 0) {
        if (++x[i] < pr) break;
        x[i] = 0;
        --i;
      }
      if (i < 0) break;
    }
    return acc / double(total);
  };
  cplx a = once(r);
  if (doubling_check) {
    cplx b = once(r + 1);
    if (std::abs(a - b) > 1e-12)
      fail(ErrorKind::Internal, "integration doubling check failed");
  }
  return a;
}

// ---------------------------------------------------------------------------
// Full VT operator on a locally constant test function
// ---------------------------------------------------------------------------
inline cplx vt_apply(const TestFunction& f, double alpha,
                     const std::vector<i64>& x,
                     i64 cap = DEFAULT_QUOTIENT_CAP) {
  if (alpha <= 0) fail(ErrorKind::Usage, "alpha must be positive");
  const GroupLaw& law = f.law;
  int p = f.prime;
  int d = law.dim;
  int m = std::max(f.m, 1);
  i64 pm = ipow(p, m);
  i64 total = quotient_size(law, p, m);
  if (total > cap) fail(ErrorKind::ResourceCap, "VT sum too large");
  double C = vt_front_constant(p, alpha, d);
  i64 pf = ipow(p, std::max(f.m, 0));
  std::vector<i64> xfm(x.size());
  for (size_t i = 0; i < x.size(); ++i) xfm[i] = floor_mod(x[i], std::max<i64>(pf, 1));
  cplx fx = f.m == 0 ? f.values[0] : f.at(xfm);
  std::vector<Rat> xr(x.size());
  for (size_t i = 0; i < x.size(); ++i) xr[i] = Rat(x[i]);
  std::vector<i64> y(d, 0);
  cplx acc(0, 0);
  for (i64 idx = 0;; ++idx) {
    int k = -1;  // valuation of ||y||: min coordinate valuation, capped at m
    for (int i = 0; i < d; ++i) {
      if (y[i] != 0) {
        int v = int_valuation(y[i], p);
        if (k < 0 || v < k) k = v;
      }
    }
    if (k >= 0 && k < m) {
      std::vector<Rat> yr(d);
      for (int i = 0; i < d; ++i) yr[i] = Rat(y[i]);
      std::vector<Rat> z = star_rat(law, xr, inverse_rat(law, yr));
      std::vector<i64> zi(d);
      for (int i = 0; i < d; ++i)
        zi[i] = pf <= 1 ? 0 : zred(z[i], pf, p);
      cplx fz = f.m == 0 ? f.values[0] : f.at(zi);
      double w = std::pow(double(p), double(k) * (alpha + d)) / double(total);
      acc += w * (fz - fx);
    }
    int i = d - 1;
    while (i >= 0) {
      if (++y[i] < pm) break;
      y[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return C * acc;
}

// ---------------------------------------------------------------------------
// Directional VT operator along a one-parameter subgroup
// ---------------------------------------------------------------------------
// Core form: f is any locally constant function (constancy index m) given on
// integer coordinate representatives.
inline cplx directional_vt_apply(
    const GroupLaw& law, int p, const std::vector<Rat>& w, double alpha,
    int m, const std::function<cplx(const std::vector<i64>&)>& f,
    const std::vector<i64>& x) {
  if (alpha <= 0) fail(ErrorKind::Usage, "alpha must be positive");
  m = std::max(m, 1);
  i64 pm = ipow(p, m);
  double C = vt_front_constant(p, alpha, 1);
  std::vector<Rat> xr(x.size());
  for (size_t i = 0; i < x.size(); ++i) xr[i] = Rat(x[i]);
  cplx fx = f(x);
  cplx acc(0, 0);
  for (i64 t = 1; t < pm; ++t) {
    int v = int_valuation(t, p);
    std::vector<Rat> g = one_param_rat(law, w, Rat(-t));  // gamma_w(t)^{-1}
    std::vector<Rat> z = star_rat(law, xr, g);
    std::vector<i64> zi(z.size());
    for (size_t i = 0; i < z.size(); ++i) zi[i] = zred(z[i], pm, p);
    double weight = std::pow(double(p), double(v) * (alpha + 1.0)) / double(pm);
    acc += weight * (f(zi) - fx);
  }
  return C * acc;
}

// Basis-direction convenience (direction e_j; valid for every law).
inline cplx directional_vt_apply_basis(
    const GroupLaw& law, int p, int j, double alpha, int m,
    const std::function<cplx(const std::vector<i64>&)>& f,
    const std::vector<i64>& x) {
  if (alpha <= 0) fail(ErrorKind::Usage, "alpha must be positive");
  m = std::max(m, 1);
  i64 pm = ipow(p, m);
  double C = vt_front_constant(p, alpha, 1);
  std::vector<Rat> xr(x.size());
  for (size_t i = 0; i < x.size(); ++i) xr[i] = Rat(x[i]);
  cplx fx = f(x);
  cplx acc(0, 0);
  for (i64 t = 1; t < pm; ++t) {
    int v = int_valuation(t, p);
    std::vector<Rat> g(law.dim, Rat(0));
    g[j] = Rat(-t);
    std::vector<Rat> z = star_rat(law, xr, g);
    std::vector<i64> zi(z.size());
    for (size_t i = 0; i < z.size(); ++i) zi[i] = zred(z[i], pm, p);
    double weight = std::pow(double(p), double(v) * (alpha + 1.0)) / double(pm);
    acc += weight * (f(zi) - fx);
  }
  return C * acc;
}

inline cplx directional_vt_apply(const GroupLaw& law, int p,
                                 const std::vector<Rat>& w, double alpha,
                                 const TestFunction& f,
                                 const std::vector<i64>& x) {
  int m = std::max(f.m, 1);
  i64 pf = ipow(p, std::max(f.m, 0));
  auto g = [&](const std::vector<i64>& y) {
    if (f.m == 0) return f.values[0];
    std::vector<i64> ym(y.size());
    for (size_t i = 0; i < y.size(); ++i) ym[i] = floor_mod(y[i], pf);
    return f.at(ym);
  };
  return directional_vt_apply(law, p, w, alpha, m, g, x);
}

// ---------------------------------------------------------------------------
// Sub-Laplacian symbol
// ---------------------------------------------------------------------------
struct SymbolMatrix {
  RepLabel label;
  i64 d;
  std::vector<cplx> entries;  // row-major d x d, Hermitian
  cplx at(i64 r, i64 c) const { return entries[r * d + c]; }
};

inline SymbolMatrix sublaplacian_symbol(const RepLabel& label,
                                        const std::vector<int>& directions,
                                        double alpha) {
  int p = label.xi.components.empty() ? 3 : label.xi.components[0].prime;
  int m = label.level;
  if (m == 0)  // trivial character: sub-Laplacian kills constants
    return {label, 1, {cplx(0, 0)}};
  MonomialRep rep(label);
  i64 d = rep.dim();
  i64 pm = ipow(p, m);
  double C = vt_front_constant(p, alpha, 1);
  std::vector<cplx> M(d * d, cplx(0, 0));
  for (int j : directions) {
    for (i64 t = 1; t < pm; ++t) {
      int v = int_valuation(t, p);
      double w = C * std::pow(double(p), double(v) * (alpha + 1.0)) /
                 double(pm);
      std::vector<i64> g(label.law.dim, 0);
      g[j] = floor_mod(-t, pm);
      for (const auto& e : rep.sparse(g))
        M[e.row * d + e.col] += w * unit_phase(e.phase);
      for (i64 i = 0; i < d; ++i) M[i * d + i] -= w;
    }
  }
  // exact Hermitian symmetrization (t <-> -t pairing makes this a no-op up
  // to rounding)
  for (i64 r = 0; r < d; ++r)
    for (i64 c = 0; c < r; ++c) {
      cplx h = 0.5 * (M[r * d + c] + std::conj(M[c * d + r]));
      M[r * d + c] = h;
      M[c * d + r] = std::conj(h);
    }
  for (i64 r = 0; r < d; ++r) M[r * d + r] = cplx(M[r * d + r].real(), 0.0);
  return {label, d, std::move(M)};
}

inline std::vector<double> symbol_eigenvalues(const SymbolMatrix& S) {
  Eigen::MatrixXcd M(S.d, S.d);
  for (i64 r = 0; r < S.d; ++r)
    for (i64 c = 0; c < S.d; ++c) M(r, c) = S.at(r, c);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
  if (es.info() != Eigen::Success)
    fail(ErrorKind::Internal, "eigensolver failed");
  std::vector<double> out(S.d);
  for (i64 i = 0; i < S.d; ++i) out[i] = es.eigenvalues()(i);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Closed-form spectra
// ---------------------------------------------------------------------------
struct SpectrumRow {
  std::string tau, h_prime;
  double closed_form;
};

namespace detail {
inline std::string frac_str(i64 num, i64 den) {
  if (den == 1 || num == 0) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}
}  // namespace detail

inline std::vector<SpectrumRow> closed_form_spectrum_rows(
    const RepLabel& label, double alpha) {
  const GroupLaw& law = label.law;
  if (law.id == LawId::g56)
    fail(ErrorKind::UnsupportedLaw,
         "no closed-form spectrum for this law; use the symbol");
  int p = label.xi.components.empty() ? 3 : label.xi.components[0].prime;
  std::vector<Rat> xi;
  std::vector<int> k;
  for (const auto& c : label.xi.components) {
    xi.push_back(c.to_rat());
    k.push_back(c.denom_exp);
  }
  auto cb = [&](const Rat& v) { return vt_contrib(v, p, alpha); };
  const Rat H(1, 2), S6(1, 6);
  std::vector<SpectrumRow> rows;
  switch (law.id) {
    case LawId::abelian: {
      double s = 0;
      for (const auto& v : xi) s += cb(v);
      rows.push_back({"0", "0", s});
      break;
    }
    case LawId::h1: {
      i64 T = ipow(p, k[2]);
      for (i64 t = 0; t < T; ++t)
        for (i64 h = 0; h < T; ++h)
          rows.push_back({detail::frac_str(t, T), std::to_string(h),
                          cb(xi[0] + Rat(t, T)) + cb(xi[1] + xi[2] * Rat(h))});
      break;
    }
    case LawId::h2: {
      i64 T = ipow(p, k[4]);
      for (i64 t1 = 0; t1 < T; ++t1)
        for (i64 t2 = 0; t2 < T; ++t2)
          for (i64 h1 = 0; h1 < T; ++h1)
            for (i64 h2 = 0; h2 < T; ++h2)
              rows.push_back(
                  {"(" + detail::frac_str(t1, T) + "," +
                       detail::frac_str(t2, T) + ")",
                   "(" + std::to_string(h1) + "," + std::to_string(h2) + ")",
                   cb(xi[0] + Rat(t1, T)) + cb(xi[2] + Rat(t2, T)) +
                       cb(xi[1] + xi[4] * Rat(h1)) +
                       cb(xi[3] + xi[4] * Rat(h2))});
      break;
    }
    case LawId::b4: {
      i64 T = ipow(p, std::max(k[2], k[3]));
      for (i64 t = 0; t < T; ++t)
        for (i64 h = 0; h < T; ++h) {
          Rat hr(h);
          rows.push_back(
              {detail::frac_str(t, T), std::to_string(h),
               cb(xi[0] + Rat(t, T)) +
                   cb(xi[1] + xi[2] * hr + xi[3] * hr * hr * H)});
        }
      break;
    }
    case LawId::g52: {
      i64 T = ipow(p, std::max(k[3], k[4]));
      for (i64 t = 0; t < T; ++t)
        for (i64 h = 0; h < T; ++h) {
          Rat hr(h);
          rows.push_back({detail::frac_str(t, T), std::to_string(h),
                          cb(xi[0] + Rat(t, T)) + cb(xi[1] + xi[3] * hr) +
                              cb(xi[2] + xi[4] * hr)});
        }
      break;
    }
    case LawId::g53: {
      i64 T1 = ipow(p, std::max(k[3], k[4]));
      i64 T2 = ipow(p, k[4]);
      for (i64 t1 = 0; t1 < T1; ++t1)
        for (i64 t2 = 0; t2 < T2; ++t2)
          for (i64 h1 = 0; h1 < T1; ++h1)
            for (i64 h2 = 0; h2 < T2; ++h2) {
              Rat hr(h1);
              rows.push_back(
                  {"(" + detail::frac_str(t1, T1) + "," +
                       detail::frac_str(t2, T2) + ")",
                   "(" + std::to_string(h1) + "," + std::to_string(h2) + ")",
                   cb(xi[0] + Rat(t1, T1)) +
                       cb(xi[1] + Rat(t2, T2) + xi[3] * hr +
                          xi[4] * hr * hr * H) +
                       cb(xi[2] + xi[4] * Rat(h2))});
            }
      break;
    }
    case LawId::g54: {
      i64 T = ipow(p, std::max(k[2], k[3]));
      if (k[4] == 0) {
        // the last coordinate acts trivially: B4-type formula in xi1..xi4
        for (i64 t = 0; t < T; ++t)
          for (i64 h = 0; h < T; ++h) {
            Rat hr(h);
            rows.push_back(
                {detail::frac_str(t, T), std::to_string(h),
                 cb(xi[0] + Rat(t, T)) +
                     cb(xi[1] + xi[2] * hr + xi[3] * hr * hr * H)});
          }
      } else {
        Rat div = (k[3] == 0) ? Rat(1) : xi[3];
        for (i64 t = 0; t < T; ++t)
          for (i64 h = 0; h < T; ++h) {
            Rat hr(h);
            rows.push_back(
                {detail::frac_str(t, T), std::to_string(h),
                 cb(xi[0] + Rat(t, T) + xi[4] * hr * hr * H) +
                     cb(xi[1] + Rat(t, T) + xi[2] * xi[4] / div * hr)});
          }
      }
      break;
    }
    case LawId::g55: {
      i64 T = ipow(p, std::max(std::max(k[2], k[3]), k[4]));
      for (i64 t = 0; t < T; ++t)
        for (i64 h = 0; h < T; ++h) {
          Rat hr(h);
          rows.push_back(
              {detail::frac_str(t, T), std::to_string(h),
               cb(xi[0] + Rat(t, T)) +
                   cb(xi[1] + xi[2] * hr + xi[3] * hr * hr * H +
                      xi[4] * hr * hr * hr * S6)});
        }
      break;
    }
    case LawId::g56:
      break;  // unreachable
  }
  return rows;
}

inline std::vector<double> closed_form_spectrum(const RepLabel& label,
                                                double alpha) {
  std::vector<double> out;
  for (const auto& r : closed_form_spectrum_rows(label, alpha))
    out.push_back(r.closed_form);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Spectrum report: numeric symbol eigenvalues vs the closed form.
// The closed multiset runs over (tau, h'); both lists are replicated to a
// common length (lcm of sizes) before the sorted elementwise comparison.
// ---------------------------------------------------------------------------
struct SpectrumReport {
  RepLabel label;
  std::vector<double> eigenvalues_numeric;
  std::vector<double> eigenvalues_closed_form;
  double max_abs_diff;
};

inline std::vector<double> replicate_sorted(std::vector<double> v, i64 len) {
  std::vector<double> out;
  out.reserve(len);
  i64 rep = len / i64(v.size());
  std::sort(v.begin(), v.end());
  for (double x : v)
    for (i64 i = 0; i < rep; ++i) out.push_back(x);
  return out;
}

inline SpectrumReport spectrum_report(const RepLabel& label, double alpha) {
  SymbolMatrix S =
      sublaplacian_symbol(label, label.law.generator_indices(), alpha);
  std::vector<double> num = symbol_eigenvalues(S);
  std::vector<double> closed = closed_form_spectrum(label, alpha);
  i64 g = std::gcd(i64(num.size()), i64(closed.size()));
  i64 len = i64(num.size()) / g * i64(closed.size());
  std::vector<double> a = replicate_sorted(num, len);
  std::vector<double> b = replicate_sorted(closed, len);
  double md = 0;
  for (i64 i = 0; i < len; ++i) md = std::max(md, std::abs(a[i] - b[i]));
  return {label, std::move(a), std::move(b), md};
}

// ---------------------------------------------------------------------------
// Global hypoellipticity margin
// ---------------------------------------------------------------------------
struct MarginReport {
  double c_star;
  std::string minimizing_label;
  bool pass;  // c_star > 0 over all nontrivial labels
  i64 labels_checked;
  std::vector<std::pair<std::string, double>> inf_norms;  // label -> inf norm
};

inline double generator_norm(const RepLabel& label) {
  double n = 1.0;
  for (int i : label.law.generator_indices())
    n = std::max(n, double(label.xi.components[i].norm()));
  return n;
}

inline MarginReport hypoellipticity_margin(const GroupLaw& law, int p,
                                           double alpha, int n,
                                           i64 cap = DEFAULT_DUAL_CAP) {
  if (n < 1) fail(ErrorKind::Usage, "need n >= 1");
  MarginReport rep{0.0, "", true, 0, {}};
  bool first = true;
  for (const auto& label : enumerate_dual_ball(law, p, n, cap)) {
    if (label.level == 0) continue;  // trivial label excluded
    bool nontrivial = false;
    for (const auto& c : label.xi.components)
      if (c.denom_exp > 0) nontrivial = true;
    if (!nontrivial) continue;
    SymbolMatrix S =
        sublaplacian_symbol(label, law.generator_indices(), alpha);
    std::vector<double> ev = symbol_eigenvalues(S);
    double inf_norm = std::abs(ev[0]);
    for (double e : ev) inf_norm = std::min(inf_norm, std::abs(e));
    rep.inf_norms.push_back({label.xi.to_string(), inf_norm});
    double ratio = inf_norm / std::pow(generator_norm(label), alpha);
    if (first || ratio < rep.c_star) {
      rep.c_star = ratio;
      rep.minimizing_label = label.xi.to_string();
      first = false;
    }
    ++rep.labels_checked;
  }
  rep.pass = !first && rep.c_star > 0;
  return rep;
}

}  // namespace pnilrep
