// dual.hpp — enumeration of the unitary dual balls B(n), membership of labels
// in their branch sets, dimensions, index sets, and the counting identity
// sum of d^2 over B(n) = p^{dn}.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "group.hpp"

namespace pnilrep {

struct RepLabel {
  GroupLaw law;
  DualPoint xi;
  i64 dim = 1;
  std::string branch = "A1";
  int level = 0;                      // max denominator exponent
  std::vector<int> index_moduli_exp;  // exponents of the index-set factors
};

// A DualElem is a class representative "wrt m" (i.e. canonical in
// Q_p / p^{-m} Z_p) iff trivial or denom_exp > m with numer < p^{denom_exp-m}.
inline bool is_class_rep_wrt(const DualElem& e, int m) {
  if (e.is_trivial()) return true;
  if (e.denom_exp <= m) return false;
  return e.numer < ipow(e.prime, e.denom_exp - m);
}

struct MembershipInfo {
  std::string branch;
  i64 dim;
  std::vector<int> index_moduli_exp;
};

// -------------------------------------------------------------------------
// membership: does the canonical DualPoint lie in the group's transversal?
// Returns the branch tag and the theorem's dimension when it does.
// -------------------------------------------------------------------------
inline std::optional<MembershipInfo> membership(const GroupLaw& law,
                                                const DualPoint& xi) {
  if (int(xi.components.size()) != law.dim)
    fail(ErrorKind::DimensionMismatch, "label has wrong number of components");
  const auto& c = xi.components;
  int p = c.empty() ? 3 : c[0].prime;
  auto k = [&](int i) { return c[i].denom_exp; };
  auto D = [&](int e) { return ipow(p, e); };

  switch (law.id) {
    case LawId::abelian:
      return MembershipInfo{"A1", 1, {}};

    case LawId::h1: {
      int k3 = k(2);
      if (k3 == 0) return MembershipInfo{"A1", 1, {}};
      if (is_class_rep_wrt(c[0], k3) && is_class_rep_wrt(c[1], k3))
        return MembershipInfo{"A2", D(k3), {k3}};
      return std::nullopt;
    }

    case LawId::h2: {
      int k5 = k(4);
      if (k5 == 0) return MembershipInfo{"A1", 1, {}};
      for (int i = 0; i < 4; ++i)
        if (!is_class_rep_wrt(c[i], k5)) return std::nullopt;
      return MembershipInfo{"A2", D(2 * k5), {k5, k5}};
    }

    case LawId::b4: {
      int k3 = k(2), k4 = k(3);
      if (k3 == 0 && k4 == 0) return MembershipInfo{"A1", 1, {}};
      if (k3 >= 1) {
        if (k4 >= k3) return std::nullopt;
        if (is_class_rep_wrt(c[0], k3) && is_class_rep_wrt(c[1], k3))
          return MembershipInfo{"A2", D(k3), {k3}};
        return std::nullopt;
      }
      // k3 = 0, k4 >= 1
      if (is_class_rep_wrt(c[0], k4))
        return MembershipInfo{"A3", D(k4), {k4}};
      return std::nullopt;
    }

    case LawId::g52: {
      int k4 = k(3), k5 = k(4);
      if (k4 == 0 && k5 == 0) return MembershipInfo{"A1", 1, {}};
      int m = std::max(k4, k5);
      if (!is_class_rep_wrt(c[0], m)) return std::nullopt;
      if (k4 >= k5) {
        if (is_class_rep_wrt(c[1], k4))
          return MembershipInfo{"A2", D(m), {m}};
        return std::nullopt;
      }
      if (is_class_rep_wrt(c[2], k5))
        return MembershipInfo{"A3", D(m), {m}};
      return std::nullopt;
    }

    case LawId::g53: {
      int k4 = k(3), k5 = k(4);
      if (k4 == 0 && k5 == 0) return MembershipInfo{"A1", 1, {}};
      if (k5 == 0) {  // k4 >= 1
        if (is_class_rep_wrt(c[0], k4) && is_class_rep_wrt(c[1], k4))
          return MembershipInfo{"A2", D(k4), {k4}};
        return std::nullopt;
      }
      if (c[3].is_trivial()) {
        if (is_class_rep_wrt(c[0], k5) && is_class_rep_wrt(c[1], k5) &&
            is_class_rep_wrt(c[2], k5))
          return MembershipInfo{"A3", D(2 * k5), {k5, k5}};
        return std::nullopt;
      }
      // A4: xi4 a nontrivial class rep wrt k5, exponent k4 > k5
      if (k4 <= k5 || !is_class_rep_wrt(c[3], k5)) return std::nullopt;
      if (is_class_rep_wrt(c[0], k4) &&
          is_class_rep_wrt(c[1], std::max(k4 - k5, k5)) &&
          is_class_rep_wrt(c[2], std::max(2 * k5 - k4, 0)))
        return MembershipInfo{"A4", D(std::max(k4, 2 * k5)),
                              {std::max(k4, 2 * k5)}};
      return std::nullopt;
    }

    case LawId::g54: {
      int k3 = k(2), k4 = k(3), k5 = k(4);
      if (k3 == 0 && k4 == 0 && k5 == 0) return MembershipInfo{"A1", 1, {}};
      if (k5 == 0) {
        if (k4 == 0) {  // A2: only xi3 nontrivial in the center part
          if (is_class_rep_wrt(c[0], k3) && is_class_rep_wrt(c[1], k3))
            return MembershipInfo{"A2", D(k3), {k3}};
          return std::nullopt;
        }
        // A3: k4 >= 1
        if (k3 == 0) {
          if (is_class_rep_wrt(c[0], k4))
            return MembershipInfo{"A3", D(k4), {k4}};
          return std::nullopt;
        }
        if (k3 > k4 && is_class_rep_wrt(c[0], k3) && is_class_rep_wrt(c[1], k3))
          return MembershipInfo{"A3", D(k3), {k3}};
        return std::nullopt;
      }
      if (k4 <= k5) {  // A4 (xi4 trivial or full exponent <= k5)
        if (c[2].is_trivial()) {
          if (is_class_rep_wrt(c[1], k5))
            return MembershipInfo{"A4", D(k5), {k5}};
          return std::nullopt;
        }
        if (k3 > k5 && is_class_rep_wrt(c[2], k5) &&
            is_class_rep_wrt(c[0], k3 - k5) && is_class_rep_wrt(c[1], k3))
          return MembershipInfo{"A4", D(k3), {k3}};
        return std::nullopt;
      }
      // A5: k4 > k5 >= 1
      if (c[2].is_trivial()) {
        if (is_class_rep_wrt(c[0], k4))
          return MembershipInfo{"A5", D(k4), {k4}};
        return std::nullopt;
      }
      if (k3 > k4 && is_class_rep_wrt(c[2], k4) &&
          is_class_rep_wrt(c[0], k3) && is_class_rep_wrt(c[1], k3 - k4))
        return MembershipInfo{"A5", D(k3), {k3}};
      return std::nullopt;
    }

    case LawId::g55: {
      int k3 = k(2), k4 = k(3), k5 = k(4);
      if (k5 == 0) {  // b4-type sector through the quotient by X5
        if (k3 == 0 && k4 == 0) return MembershipInfo{"A1", 1, {}};
        if (k3 >= 1) {
          if (k4 >= k3) return std::nullopt;
          if (is_class_rep_wrt(c[0], k3) && is_class_rep_wrt(c[1], k3))
            return MembershipInfo{"A2", D(k3), {k3}};
          return std::nullopt;
        }
        if (is_class_rep_wrt(c[0], k4))
          return MembershipInfo{"A3", D(k4), {k4}};
        return std::nullopt;
      }
      if (c[3].is_trivial()) {  // A4: xi3 free with its exact exponent
        int m = std::max(k3, k5);
        if (is_class_rep_wrt(c[0], m) &&
            is_class_rep_wrt(c[1], std::max(k3 - k5, 0)))
          return MembershipInfo{"A4", D(m), {m}};
        return std::nullopt;
      }
      // A5: xi4 nontrivial class rep wrt k5, exponent k4 > k5
      if (k4 <= k5 || !is_class_rep_wrt(c[3], k5)) return std::nullopt;
      if (!is_class_rep_wrt(c[2], k5)) return std::nullopt;
      int m = std::max(k3, k4);
      if (is_class_rep_wrt(c[0], m) &&
          is_class_rep_wrt(c[1], std::max(k3 - k4, 0)))
        return MembershipInfo{"A5", D(m), {m}};
      return std::nullopt;
    }

    case LawId::g56: {
      int k3 = k(2), k4 = k(3), k5 = k(4);
      if (k5 == 0) {  // b4-type sector, same shape as g55
        if (k3 == 0 && k4 == 0) return MembershipInfo{"A1", 1, {}};
        if (k3 >= 1) {
          if (k4 >= k3) return std::nullopt;
          if (is_class_rep_wrt(c[0], k3) && is_class_rep_wrt(c[1], k3))
            return MembershipInfo{"A2", D(k3), {k3}};
          return std::nullopt;
        }
        if (is_class_rep_wrt(c[0], k4))
          return MembershipInfo{"A3", D(k4), {k4}};
        return std::nullopt;
      }
      for (int i = 0; i < 4; ++i)
        if (!is_class_rep_wrt(c[i], k5)) return std::nullopt;
      int m = std::max({k3, k4, k5});
      return MembershipInfo{"A4", D(std::max(m, 2 * k5)), {k5, k5}};
    }
  }
  fail(ErrorKind::Internal, "unreachable");
}

inline i64 rep_dimension(const GroupLaw& law, const DualPoint& xi) {
  auto m = membership(law, xi);
  if (!m) fail(ErrorKind::NotInDual, "label is not in the dual transversal");
  return m->dim;
}

inline RepLabel make_label(const GroupLaw& law, const DualPoint& xi) {
  auto m = membership(law, xi);
  if (!m) fail(ErrorKind::NotInDual, "label is not in the dual transversal");
  RepLabel lab{law, xi, m->dim, m->branch, xi.level(), m->index_moduli_exp};
  return lab;
}

// -------------------------------------------------------------------------
// Enumeration of B(n)
// -------------------------------------------------------------------------
namespace detail {

// Elements with exact exponent j >= 1 as DualElem (numer coprime to p).
inline std::vector<DualElem> full_elems(int p, int j) {
  std::vector<DualElem> out;
  for (i64 a = 1; a < ipow(p, j); ++a)
    if (a % p != 0) out.emplace_back(p, j, a);
  return out;
}

// Class representatives wrt m inside B(n): c/p^n with c in [0, p^{n-m}).
inline std::vector<DualElem> class_reps(int p, int n, int m) {
  std::vector<DualElem> out;
  for (i64 cc = 0; cc < ipow(p, std::max(n - m, 0)); ++cc)
    out.emplace_back(p, n, cc);
  return out;
}

// Nontrivial class reps wrt m with exact exponent j (m < j <= n).
inline std::vector<DualElem> class_reps_exp(int p, int n, int m, int j) {
  std::vector<DualElem> out;
  for (const auto& e : class_reps(p, n, m))
    if (e.denom_exp == j) out.push_back(e);
  return out;
}

// All of B(n) for one coordinate: c/p^n, c in [0, p^n).
inline std::vector<DualElem> ball(int p, int n) { return class_reps(p, n, 0); }

}  // namespace detail

constexpr i64 DEFAULT_DUAL_CAP = 10'000'000;  // cap on sum of d^2

inline std::vector<RepLabel> enumerate_dual_ball(const GroupLaw& law, int p,
                                                 int n,
                                                 i64 cap = DEFAULT_DUAL_CAP) {
  using namespace detail;
  if (!law.admits_prime(p))
    fail(ErrorKind::Usage, "prime below min_prime for " + law.name);
  if (n < 0) fail(ErrorKind::Usage, "level must be >= 0");
  std::vector<RepLabel> out;
  i64 budget = 0;
  auto push = [&](std::vector<DualElem> comps) {
    DualPoint xi{std::move(comps)};
    RepLabel lab = make_label(law, xi);
    budget += lab.dim * lab.dim;
    if (budget > cap) fail(ErrorKind::ResourceCap, "dual ball exceeds cap");
    out.push_back(std::move(lab));
  };
  const DualElem T0(p, 0, 0);

  switch (law.id) {
    case LawId::abelian: {
      std::vector<i64> idx(law.dim, 0);
      i64 pn = ipow(p, n);
      std::vector<DualElem> comps(law.dim, T0);
      std::function<void(int)> rec = [&](int i) {
        if (i == law.dim) { push(comps); return; }
        for (i64 cc = 0; cc < pn; ++cc) {
          comps[i] = DualElem(p, n, cc);
          rec(i + 1);
        }
      };
      rec(0);
      break;
    }
    case LawId::h1: {
      for (const auto& c1 : ball(p, n))
        for (const auto& c2 : ball(p, n)) push({c1, c2, T0});
      for (int k3 = 1; k3 <= n; ++k3)
        for (const auto& c3 : full_elems(p, k3))
          for (const auto& c1 : class_reps(p, n, k3))
            for (const auto& c2 : class_reps(p, n, k3)) push({c1, c2, c3});
      break;
    }
    case LawId::h2: {
      for (const auto& c1 : ball(p, n))
        for (const auto& c2 : ball(p, n))
          for (const auto& c3 : ball(p, n))
            for (const auto& c4 : ball(p, n)) push({c1, c2, c3, c4, T0});
      for (int k5 = 1; k5 <= n; ++k5)
        for (const auto& c5 : full_elems(p, k5))
          for (const auto& c1 : class_reps(p, n, k5))
            for (const auto& c2 : class_reps(p, n, k5))
              for (const auto& c3 : class_reps(p, n, k5))
                for (const auto& c4 : class_reps(p, n, k5))
                  push({c1, c2, c3, c4, c5});
      break;
    }
    case LawId::b4: {
      for (const auto& c1 : ball(p, n))
        for (const auto& c2 : ball(p, n)) push({c1, c2, T0, T0});
      for (int k3 = 1; k3 <= n; ++k3)
        for (const auto& c3 : full_elems(p, k3))
          for (int k4 = 0; k4 < k3; ++k4) {
            std::vector<DualElem> c4s =
                k4 == 0 ? std::vector<DualElem>{T0} : full_elems(p, k4);
            for (const auto& c4 : c4s)
              for (const auto& c1 : class_reps(p, n, k3))
                for (const auto& c2 : class_reps(p, n, k3))
                  push({c1, c2, c3, c4});
          }
      for (int k4 = 1; k4 <= n; ++k4)
        for (const auto& c4 : full_elems(p, k4))
          for (const auto& c1 : class_reps(p, n, k4))
            for (const auto& c2 : ball(p, n)) push({c1, c2, T0, c4});
      break;
    }
    case LawId::g52: {
      for (const auto& c1 : ball(p, n))
        for (const auto& c2 : ball(p, n))
          for (const auto& c3 : ball(p, n)) push({c1, c2, c3, T0, T0});
      for (int k4 = 0; k4 <= n; ++k4)
        for (int k5 = 0; k5 <= n; ++k5) {
          if (k4 == 0 && k5 == 0) continue;
          int m = std::max(k4, k5);
          std::vector<DualElem> c4s =
              k4 == 0 ? std::vector<DualElem>{T0} : full_elems(p, k4);
          std::vector<DualElem> c5s =
              k5 == 0 ? std::vector<DualElem>{T0} : full_elems(p, k5);
          for (const auto& c4 : c4s)
            for (const auto& c5 : c5s)
              for (const auto& c1 : class_reps(p, n, m)) {
                if (k4 >= k5) {
                  for (const auto& c2 : class_reps(p, n, k4))
                    for (const auto& c3 : ball(p, n))
                      push({c1, c2, c3, c4, c5});
                } else {
                  for (const auto& c2 : ball(p, n))
                    for (const auto& c3 : class_reps(p, n, k5))
                      push({c1, c2, c3, c4, c5});
                }
              }
        }
      break;
    }
    case LawId::g53: {
      for (const auto& c1 : ball(p, n))
        for (const auto& c2 : ball(p, n))
          for (const auto& c3 : ball(p, n)) push({c1, c2, c3, T0, T0});
      for (int k4 = 1; k4 <= n; ++k4)
        for (const auto& c4 : full_elems(p, k4))
          for (const auto& c3 : ball(p, n))
            for (const auto& c1 : class_reps(p, n, k4))
              for (const auto& c2 : class_reps(p, n, k4))
                push({c1, c2, c3, c4, T0});
      for (int k5 = 1; k5 <= n; ++k5)
        for (const auto& c5 : full_elems(p, k5)) {
          for (const auto& c1 : class_reps(p, n, k5))
            for (const auto& c2 : class_reps(p, n, k5))
              for (const auto& c3 : class_reps(p, n, k5))
                push({c1, c2, c3, T0, c5});
          for (int k4 = k5 + 1; k4 <= n; ++k4)
            for (const auto& c4 : class_reps_exp(p, n, k5, k4))
              for (const auto& c1 : class_reps(p, n, k4))
                for (const auto& c2 : class_reps(p, n, std::max(k4 - k5, k5)))
                  for (const auto& c3 :
                       class_reps(p, n, std::max(2 * k5 - k4, 0)))
                    push({c1, c2, c3, c4, c5});
        }
      break;
    }
    case LawId::g54: {
      for (const auto& c1 : ball(p, n))
        for (const auto& c2 : ball(p, n)) push({c1, c2, T0, T0, T0});
      for (int k3 = 1; k3 <= n; ++k3)
        for (const auto& c3 : full_elems(p, k3))
          for (const auto& c1 : class_reps(p, n, k3))
            for (const auto& c2 : class_reps(p, n, k3))
              push({c1, c2, c3, T0, T0});
      for (int k4 = 1; k4 <= n; ++k4)
        for (const auto& c4 : full_elems(p, k4)) {
          for (const auto& c1 : class_reps(p, n, k4))
            for (const auto& c2 : ball(p, n)) push({c1, c2, T0, c4, T0});
          for (int k3 = k4 + 1; k3 <= n; ++k3)
            for (const auto& c3 : full_elems(p, k3))
              for (const auto& c1 : class_reps(p, n, k3))
                for (const auto& c2 : class_reps(p, n, k3))
                  push({c1, c2, c3, c4, T0});
        }
      for (int k5 = 1; k5 <= n; ++k5)
        for (const auto& c5 : full_elems(p, k5)) {
          std::vector<DualElem> c4s{T0};
          for (int k4 = 1; k4 <= k5; ++k4)
            for (const auto& e : full_elems(p, k4)) c4s.push_back(e);
          for (const auto& c4 : c4s) {
            for (const auto& c1 : ball(p, n))
              for (const auto& c2 : class_reps(p, n, k5))
                push({c1, c2, T0, c4, c5});
            for (int k3 = k5 + 1; k3 <= n; ++k3)
              for (const auto& c3 : class_reps_exp(p, n, k5, k3))
                for (const auto& c1 : class_reps(p, n, k3 - k5))
                  for (const auto& c2 : class_reps(p, n, k3))
                    push({c1, c2, c3, c4, c5});
          }
        }
      for (int k4 = 2; k4 <= n; ++k4)
        for (const auto& c4 : full_elems(p, k4))
          for (int k5 = 1; k5 < k4; ++k5)
            for (const auto& c5 : full_elems(p, k5)) {
              for (const auto& c1 : class_reps(p, n, k4))
                for (const auto& c2 : ball(p, n)) push({c1, c2, T0, c4, c5});
              for (int k3 = k4 + 1; k3 <= n; ++k3)
                for (const auto& c3 : class_reps_exp(p, n, k4, k3))
                  for (const auto& c1 : class_reps(p, n, k3))
                    for (const auto& c2 : class_reps(p, n, k3 - k4))
                      push({c1, c2, c3, c4, c5});
            }
      break;
    }
    case LawId::g55:
    case LawId::g56: {
      // shared b4-type sector (xi5 trivial)
      for (const auto& c1 : ball(p, n))
        for (const auto& c2 : ball(p, n)) push({c1, c2, T0, T0, T0});
      for (int k3 = 1; k3 <= n; ++k3)
        for (const auto& c3 : full_elems(p, k3))
          for (int k4 = 0; k4 < k3; ++k4) {
            std::vector<DualElem> c4s =
                k4 == 0 ? std::vector<DualElem>{T0} : full_elems(p, k4);
            for (const auto& c4 : c4s)
              for (const auto& c1 : class_reps(p, n, k3))
                for (const auto& c2 : class_reps(p, n, k3))
                  push({c1, c2, c3, c4, T0});
          }
      for (int k4 = 1; k4 <= n; ++k4)
        for (const auto& c4 : full_elems(p, k4))
          for (const auto& c1 : class_reps(p, n, k4))
            for (const auto& c2 : ball(p, n)) push({c1, c2, T0, c4, T0});
      if (law.id == LawId::g55) {
        for (int k5 = 1; k5 <= n; ++k5)
          for (const auto& c5 : full_elems(p, k5)) {
            for (const auto& c3 : ball(p, n)) {
              int k3 = c3.denom_exp;
              int m = std::max(k3, k5);
              for (const auto& c1 : class_reps(p, n, m))
                for (const auto& c2 : class_reps(p, n, std::max(k3 - k5, 0)))
                  push({c1, c2, c3, T0, c5});
            }
            for (int k4 = k5 + 1; k4 <= n; ++k4)
              for (const auto& c4 : class_reps_exp(p, n, k5, k4))
                for (const auto& c3 : class_reps(p, n, k5)) {
                  int k3 = c3.denom_exp;
                  int m = std::max(k3, k4);
                  for (const auto& c1 : class_reps(p, n, m))
                    for (const auto& c2 :
                         class_reps(p, n, std::max(k3 - k4, 0)))
                      push({c1, c2, c3, c4, c5});
                }
          }
      } else {
        for (int k5 = 1; k5 <= n; ++k5)
          for (const auto& c5 : full_elems(p, k5))
            for (const auto& c3 : class_reps(p, n, k5))
              for (const auto& c4 : class_reps(p, n, k5))
                for (const auto& c1 : class_reps(p, n, k5))
                  for (const auto& c2 : class_reps(p, n, k5))
                    push({c1, c2, c3, c4, c5});
      }
      break;
    }
  }
  return out;
}

struct PeterWeylReport {
  i64 sum_d_squared = 0;
  i64 expected = 0;
  bool pass = false;
  i64 label_count = 0;
};

inline PeterWeylReport peter_weyl_check(const GroupLaw& law, int p, int n,
                                        i64 cap = DEFAULT_DUAL_CAP) {
  auto labels = enumerate_dual_ball(law, p, n, cap);
  PeterWeylReport r;
  r.label_count = i64(labels.size());
  for (const auto& l : labels) r.sum_d_squared += l.dim * l.dim;
  r.expected = 1;
  for (int i = 0; i < law.dim * n; ++i) r.expected *= p;
  r.pass = (r.sum_d_squared == r.expected);
  return r;
}

}  // namespace pnilrep
