#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

#include "pnilrep/dual.hpp"

using namespace pnilrep;

static DualPoint pt(int p, std::initializer_list<const char*> comps) {
  DualPoint xi;
  for (const char* s : comps) xi.components.push_back(DualElem::parse(s, p));
  return xi;
}

TEST_CASE("membership: fixed examples") {
  auto h1 = GroupLaw::make("h1");
  // (1/9, 1, 1/3): xi1 is a class representative wrt |xi3| -> member
  CHECK(membership(h1, pt(3, {"1/9", "1", "1/3"})).has_value());
  // (1/3, 1, 1/3): xi1 not canonical wrt the central modulus -> not a member
  CHECK_FALSE(membership(h1, pt(3, {"1/3", "1", "1/3"})).has_value());
  // characters are always members
  CHECK(membership(h1, pt(3, {"1/3", "2/9", "1"}))->dim == 1);
  CHECK_THROWS_AS(membership(h1, pt(3, {"1", "1"})), Error);
}

TEST_CASE("rep_dimension: fixed values") {
  auto h1 = GroupLaw::make("h1");
  CHECK(rep_dimension(h1, pt(3, {"1", "1", "1/9"})) == 9);
  CHECK(rep_dimension(h1, pt(3, {"1", "1", "1/3"})) == 3);
  auto b4 = GroupLaw::make("b4");
  CHECK(rep_dimension(b4, pt(3, {"1", "1", "1/3", "1"})) == 3);
  auto h2 = GroupLaw::make("h2");
  CHECK(rep_dimension(h2, pt(3, {"1", "1", "1", "1", "1/3"})) == 9);
  auto g53 = GroupLaw::make("g53");
  // orbit-verified value: d = ||(xi4, xi5)|| when |xi4| >= |xi5|^2
  CHECK(rep_dimension(g53, pt(5, {"1", "1", "1", "1/25", "1/5"})) == 25);
  CHECK_THROWS_AS(rep_dimension(h1, pt(3, {"1/3", "1", "1/3"})), Error);
}

TEST_CASE("dual ball counts: fixed values") {
  auto h1 = GroupLaw::make("h1");
  auto labels = enumerate_dual_ball(h1, 3, 1);
  CHECK(labels.size() == 11);
  int chars = 0, dim3 = 0;
  for (const auto& l : labels) {
    if (l.dim == 1) ++chars;
    if (l.dim == 3) ++dim3;
  }
  CHECK(chars == 9);
  CHECK(dim3 == 2);

  auto g52 = GroupLaw::make("g52");
  auto gl = enumerate_dual_ball(g52, 3, 1);
  CHECK(gl.size() == 51);
  i64 sum = 0;
  std::map<std::string, int> by_branch;
  for (const auto& l : gl) {
    sum += l.dim * l.dim;
    by_branch[l.branch]++;
  }
  CHECK(sum == 243);
  CHECK(by_branch["A1"] == 27);
  CHECK(by_branch["A2"] + by_branch["A3"] == 24);

  CHECK(peter_weyl_check(GroupLaw::make("h2"), 3, 1).sum_d_squared == 243);
  // level 0: only the trivial label
  CHECK(enumerate_dual_ball(h1, 3, 0).size() == 1);
}

TEST_CASE("Peter-Weyl identity at (min_prime, 1) for every group") {
  for (const char* name :
       {"zp", "h1", "h2", "b4", "g52", "g53", "g54", "g55", "g56"}) {
    auto law = GroupLaw::make(name, 2);
    auto r = peter_weyl_check(law, law.min_prime, 1);
    INFO(name << ": sum " << r.sum_d_squared << " expected " << r.expected);
    CHECK(r.pass);
  }
}

TEST_CASE("Peter-Weyl identity at n = 2 for the smaller groups") {
  for (const char* name : {"zp", "h1", "b4", "g52", "h2"}) {
    auto law = GroupLaw::make(name, 2);
    auto r = peter_weyl_check(law, 3, 2);
    INFO(name << ": sum " << r.sum_d_squared << " expected " << r.expected);
    CHECK(r.pass);
  }
}

TEST_CASE("balls are nested: B(1) inside B(2)") {
  for (const char* name : {"h1", "b4", "g52", "h2", "g54", "g56"}) {
    auto law = GroupLaw::make(name, 2);
    int p = law.min_prime;
    std::set<std::string> big;
    for (const auto& l : enumerate_dual_ball(law, p, 2))
      big.insert(l.xi.to_string());
    for (const auto& l : enumerate_dual_ball(law, p, 1)) {
      INFO(name << " label " << l.xi.to_string());
      CHECK(big.count(l.xi.to_string()) == 1);
    }
  }
}

TEST_CASE("labels are internally consistent") {
  for (const char* name : {"h1", "h2", "b4", "g52", "g53", "g54", "g55",
                           "g56"}) {
    auto law = GroupLaw::make(name);
    int p = law.min_prime;
    std::set<std::string> seen;
    for (const auto& l : enumerate_dual_ball(law, p, 1)) {
      CHECK(seen.insert(l.xi.to_string()).second);  // no duplicates
      CHECK(l.level == l.xi.level());
      auto m = membership(law, l.xi);
      REQUIRE(m.has_value());
      CHECK(m->dim == l.dim);
      CHECK(m->branch == l.branch);
      i64 prod = 1;
      for (int e : l.index_moduli_exp) prod *= ipow(p, e);
      CHECK(prod == l.dim);
    }
  }
}

// ---------------------------------------------------------------------------
// Independent oracle: coadjoint-orbit BFS.  For every label the orbit of the
// corresponding point of (Z/p^n)^dim under the integral coadjoint flows has
// size exactly d^2.
// ---------------------------------------------------------------------------
namespace {
using Flow = std::function<std::vector<i64>(const std::vector<i64>&, i64, i64,
                                            i64, i64)>;

std::vector<Flow> flows_for(LawId id) {
  auto M = [](i64 v, i64 pn) { return floor_mod(v, pn); };
  switch (id) {
    case LawId::h1:
      return {
          [M](const std::vector<i64>& c, i64 t, i64 pn, i64, i64) {
            return std::vector<i64>{c[0], M(c[1] + t * c[2], pn), c[2]};
          },
          [M](const std::vector<i64>& c, i64 t, i64 pn, i64, i64) {
            return std::vector<i64>{M(c[0] - t * c[2], pn), c[1], c[2]};
          }};
    case LawId::b4:
      return {
          [M](const std::vector<i64>& c, i64 t, i64 pn, i64 i2, i64) {
            return std::vector<i64>{c[0],
                                    M(c[1] + t * c[2] + (t * t % pn) * i2 % pn * c[3], pn),
                                    M(c[2] + t * c[3], pn), c[3]};
          },
          [M](const std::vector<i64>& c, i64 t, i64 pn, i64, i64) {
            return std::vector<i64>{M(c[0] - t * c[2], pn), c[1], c[2], c[3]};
          },
          [M](const std::vector<i64>& c, i64 t, i64 pn, i64, i64) {
            return std::vector<i64>{M(c[0] - t * c[3], pn), c[1], c[2], c[3]};
          }};
    case LawId::h2:
      return {
          [M](const std::vector<i64>& c, i64 t, i64 pn, i64, i64) {
            return std::vector<i64>{c[0], c[1], M(c[2] + t * c[4], pn), c[3], c[4]};
          },
          [M](const std::vector<i64>& c, i64 t, i64 pn, i64, i64) {
            return std::vector<i64>{M(c[0] - t * c[4], pn), c[1], c[2], c[3], c[4]};
          },
          [M](const std::vector<i64>& c, i64 t, i64 pn, i64, i64) {
            return std::vector<i64>{c[0], c[1], c[2], M(c[3] + t * c[4], pn), c[4]};
          },
          [M](const std::vector<i64>& c, i64 t, i64 pn, i64, i64) {
            return std::vector<i64>{c[0], M(c[1] - t * c[4], pn), c[2], c[3], c[4]};
          }};
    case LawId::g52:
      return {
          [M](const std::vector<i64>& c, i64 t, i64 pn, i64, i64) {
            return std::vector<i64>{c[0], M(c[1] + t * c[3], pn),
                                    M(c[2] + t * c[4], pn), c[3], c[4]};
          },
          [M](const std::vector<i64>& c, i64 t, i64 pn, i64, i64) {
            return std::vector<i64>{M(c[0] - t * c[3], pn), c[1], c[2], c[3], c[4]};
          },
          [M](const std::vector<i64>& c, i64 t, i64 pn, i64, i64) {
            return std::vector<i64>{M(c[0] - t * c[4], pn), c[1], c[2], c[3], c[4]};
          }};
    case LawId::g53:
      return {
          [M](const std::vector<i64>& c, i64 t, i64 pn, i64 i2, i64) {
            return std::vector<i64>{
                c[0], M(c[1] + t * c[3] + (t * t % pn) * i2 % pn * c[4], pn),
                c[2], M(c[3] + t * c[4], pn), c[4]};
          },
          [M](const std::vector<i64>& c, i64 t, i64 pn, i64, i64) {
            return std::vector<i64>{M(c[0] - t * c[3], pn), c[1],
                                    M(c[2] + t * c[4], pn), c[3], c[4]};
          },
          [M](const std::vector<i64>& c, i64 t, i64 pn, i64, i64) {
            return std::vector<i64>{c[0], M(c[1] - t * c[4], pn), c[2], c[3], c[4]};
          },
          [M](const std::vector<i64>& c, i64 t, i64 pn, i64, i64) {
            return std::vector<i64>{M(c[0] - t * c[4], pn), c[1], c[2], c[3], c[4]};
          }};
    case LawId::g54:
      return {
          [M](const std::vector<i64>& c, i64 t, i64 pn, i64 i2, i64) {
            return std::vector<i64>{
                c[0], M(c[1] + t * c[2] + (t * t % pn) * i2 % pn * c[3], pn),
                M(c[2] + t * c[3], pn), c[3], c[4]};
          },
          [M](const std::vector<i64>& c, i64 t, i64 pn, i64 i2, i64) {
            return std::vector<i64>{
                M(c[0] + t * c[2] - (t * t % pn) * i2 % pn * c[4], pn), c[1],
                M(c[2] - t * c[4], pn), c[3], c[4]};
          },
          [M](const std::vector<i64>& c, i64 t, i64 pn, i64, i64) {
            return std::vector<i64>{M(c[0] - t * c[3], pn),
                                    M(c[1] - t * c[4], pn), c[2], c[3], c[4]};
          }};
    case LawId::g55:
      return {
          [M](const std::vector<i64>& c, i64 t, i64 pn, i64 i2, i64 i6) {
            return std::vector<i64>{
                c[0],
                M(c[1] + t * c[2] + (t * t % pn) * i2 % pn * c[3] +
                      (t * t % pn) * t % pn * i6 % pn * c[4],
                  pn),
                M(c[2] + t * c[3] + (t * t % pn) * i2 % pn * c[4], pn),
                M(c[3] + t * c[4], pn), c[4]};
          },
          [M](const std::vector<i64>& c, i64 t, i64 pn, i64, i64) {
            return std::vector<i64>{M(c[0] - t * c[2], pn), c[1], c[2], c[3], c[4]};
          },
          [M](const std::vector<i64>& c, i64 t, i64 pn, i64, i64) {
            return std::vector<i64>{M(c[0] - t * c[3], pn), c[1], c[2], c[3], c[4]};
          },
          [M](const std::vector<i64>& c, i64 t, i64 pn, i64, i64) {
            return std::vector<i64>{M(c[0] - t * c[4], pn), c[1], c[2], c[3], c[4]};
          }};
    case LawId::g56:
      return {
          [M](const std::vector<i64>& c, i64 t, i64 pn, i64 i2, i64 i6) {
            return std::vector<i64>{
                c[0],
                M(c[1] + t * c[2] + (t * t % pn) * i2 % pn * c[3] +
                      (t * t % pn) * t % pn * i6 % pn * c[4],
                  pn),
                M(c[2] + t * c[3] + (t * t % pn) * i2 % pn * c[4], pn),
                M(c[3] + t * c[4], pn), c[4]};
          },
          [M](const std::vector<i64>& c, i64 t, i64 pn, i64 i2, i64) {
            return std::vector<i64>{
                M(c[0] - t * c[2] - (t * t % pn) * i2 % pn * c[4], pn), c[1],
                M(c[2] + t * c[4], pn), c[3], c[4]};
          },
          [M](const std::vector<i64>& c, i64 t, i64 pn, i64, i64) {
            return std::vector<i64>{M(c[0] - t * c[3], pn),
                                    M(c[1] - t * c[4], pn), c[2], c[3], c[4]};
          },
          [M](const std::vector<i64>& c, i64 t, i64 pn, i64, i64) {
            return std::vector<i64>{M(c[0] - t * c[4], pn), c[1], c[2], c[3], c[4]};
          }};
    default:
      return {};
  }
}

i64 orbit_size(const GroupLaw& law, int p, int n, const DualPoint& xi) {
  i64 pn = ipow(p, n);
  i64 i2 = mod_inverse(2, pn);
  i64 i6 = (pn % 3 == 0) ? 0 : mod_inverse(6, pn);  // only used when p >= 5
  std::vector<i64> start(law.dim);
  for (int i = 0; i < law.dim; ++i) {
    const auto& c = xi.components[i];
    start[i] = c.is_trivial() ? 0 : c.numer * ipow(p, n - c.denom_exp) % pn;
  }
  auto key = [&](const std::vector<i64>& v) {
    std::string s;
    for (i64 x : v) s += std::to_string(x) + ",";
    return s;
  };
  auto flows = flows_for(law.id);
  std::unordered_set<std::string> seen{key(start)};
  std::vector<std::vector<i64>> stack{start};
  while (!stack.empty()) {
    auto cur = stack.back();
    stack.pop_back();
    for (const auto& fl : flows) {
      for (i64 t : {i64(1), pn - 1}) {
        auto nxt = fl(cur, t, pn, i2, i6);
        if (seen.insert(key(nxt)).second) stack.push_back(nxt);
      }
    }
  }
  return i64(seen.size());
}
}  // namespace

TEST_CASE("oracle: coadjoint orbit size equals dim^2 for all B(1) labels") {
  for (const char* name : {"h1", "h2", "b4", "g52", "g53", "g54", "g55",
                           "g56"}) {
    auto law = GroupLaw::make(name);
    int p = law.min_prime;
    for (const auto& l : enumerate_dual_ball(law, p, 1)) {
      INFO(name << " label " << l.xi.to_string() << " dim " << l.dim);
      CHECK(orbit_size(law, p, 1, l.xi) == l.dim * l.dim);
    }
  }
}

TEST_CASE("oracle: orbit sizes at n = 2 on sampled labels") {
  std::mt19937_64 rng(2024);
  for (const char* name : {"h1", "b4", "g52"}) {
    auto law = GroupLaw::make(name);
    auto labels = enumerate_dual_ball(law, 3, 2);
    for (int s = 0; s < 12; ++s) {
      const auto& l = labels[rng() % labels.size()];
      INFO(name << " label " << l.xi.to_string() << " dim " << l.dim);
      CHECK(orbit_size(law, 3, 2, l.xi) == l.dim * l.dim);
    }
  }
  // the two five-dimensional step-3+ groups at p=5, n=2: a few fixed labels
  auto g53 = GroupLaw::make("g53");
  CHECK(orbit_size(g53, 5, 2,
                   pt(5, {"1", "1", "1", "1/25", "1/5"})) == 25 * 25);
  auto g56 = GroupLaw::make("g56");
  CHECK(orbit_size(g56, 5, 2,
                   pt(5, {"1", "1", "1", "1", "1/5"})) == 25 * 25);
}

TEST_CASE("resource cap on enumeration") {
  CHECK_THROWS_AS(enumerate_dual_ball(GroupLaw::make("g52"), 3, 1, 100), Error);
}
