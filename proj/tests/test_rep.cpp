#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "pnilrep/rep.hpp"

using namespace pnilrep;

namespace {

DualPoint pt(int p, std::initializer_list<const char*> comps) {
  DualPoint xi;
  for (const char* s : comps) xi.components.push_back(DualElem::parse(s, p));
  return xi;
}

std::vector<i64> rand_coords(std::mt19937_64& rng, int dim, i64 pm) {
  std::vector<i64> c(dim);
  for (auto& v : c) v = i64(rng() % pm);
  return c;
}

std::vector<cplx> mat_mul(const std::vector<cplx>& A, const std::vector<cplx>& B,
                          i64 d) {
  std::vector<cplx> C(d * d, cplx(0, 0));
  for (i64 i = 0; i < d; ++i)
    for (i64 k = 0; k < d; ++k) {
      cplx a = A[i * d + k];
      if (a == cplx(0, 0)) continue;
      for (i64 j = 0; j < d; ++j) C[i * d + j] += a * B[k * d + j];
    }
  return C;
}

double mat_diff(const std::vector<cplx>& A, const std::vector<cplx>& B) {
  double m = 0;
  for (size_t i = 0; i < A.size(); ++i) m = std::max(m, std::abs(A[i] - B[i]));
  return m;
}

}  // namespace

TEST_CASE("fixed example: the 3-point cyclic shift") {
  auto h1 = GroupLaw::make("h1");
  auto label = make_label(h1, pt(3, {"1", "1", "1/3"}));
  REQUIRE(label.dim == 3);
  MonomialRep rep(label);
  auto M = rep_matrix(rep, {1, 0, 0});
  // pi(1,0,0) maps basis vector u to u+1 (a pure cyclic shift, no phases)
  for (i64 u = 0; u < 3; ++u)
    for (i64 v = 0; v < 3; ++v) {
      cplx want = (v == (u + 1) % 3) ? cplx(1, 0) : cplx(0, 0);
      CHECK(std::abs(M.at(u, v) - want) < 1e-12);
    }
  // pi(0,0,z) is the scalar e^{2 pi i z/3}
  auto Z = rep_matrix(rep, {0, 0, 1});
  for (i64 u = 0; u < 3; ++u)
    CHECK(std::abs(Z.at(u, u) - unit_phase(Rat(1, 3))) < 1e-12);
}

TEST_CASE("homomorphism + unitarity on every B(1) label, all groups") {
  std::mt19937_64 rng(555);
  for (const char* name : {"zp", "h1", "h2", "b4", "g52", "g53", "g54", "g55",
                           "g56"}) {
    auto law = GroupLaw::make(name, 2);
    int p = law.min_prime;
    for (const auto& label : enumerate_dual_ball(law, p, 1)) {
      MonomialRep rep(label);
      i64 d = rep.dim();
      int N = 2;  // work above the rep level to exercise reduction
      i64 pm = ipow(p, N);
      int pairs = d == 1 ? 4 : 12;
      for (int t = 0; t < pairs; ++t) {
        auto xc = rand_coords(rng, law.dim, pm);
        auto yc = rand_coords(rng, law.dim, pm);
        auto xy_rat = star_rat(law, [&] {
          std::vector<Rat> r(xc.size());
          for (size_t i = 0; i < xc.size(); ++i) r[i] = Rat(xc[i]);
          return r;
        }(), [&] {
          std::vector<Rat> r(yc.size());
          for (size_t i = 0; i < yc.size(); ++i) r[i] = Rat(yc[i]);
          return r;
        }());
        std::vector<i64> xy(xy_rat.size());
        for (size_t i = 0; i < xy_rat.size(); ++i)
          xy[i] = zred(xy_rat[i], pm, p);
        auto A = rep_matrix(rep, xc), B = rep_matrix(rep, yc);
        auto AB = mat_mul(A.entries, B.entries, d);
        auto C = rep_matrix(rep, xy);
        INFO(name << " " << label.xi.to_string());
        CHECK(mat_diff(AB, C.entries) < 1e-9);
        // unitarity: A A^* = I
        std::vector<cplx> Ah(d * d);
        for (i64 r = 0; r < d; ++r)
          for (i64 c = 0; c < d; ++c) Ah[r * d + c] = std::conj(A.at(c, r));
        auto I = mat_mul(A.entries, Ah, d);
        double err = 0;
        for (i64 r = 0; r < d; ++r)
          for (i64 c = 0; c < d; ++c)
            err = std::max(err,
                           std::abs(I[r * d + c] - (r == c ? 1.0 : 0.0)));
        CHECK(err < 1e-9);
      }
      // kernel: exactly trivial on G(p^level)
      int lvl = std::max(label.level, 1);
      std::vector<i64> deep(law.dim);
      for (auto& v : deep) v = ipow(p, lvl) * i64(rng() % p);
      auto K = rep_matrix(rep, deep);
      double err = 0;
      for (i64 r = 0; r < d; ++r)
        for (i64 c = 0; c < d; ++c)
          err = std::max(err, std::abs(K.at(r, c) - (r == c ? 1.0 : 0.0)));
      CHECK(err < 1e-12);
    }
  }
}

TEST_CASE("homomorphism for deeper labels incl. the carry model at n=2") {
  std::mt19937_64 rng(77);
  // pick level-2 labels from the enumerated B(2) of each group: the largest
  // dimension up to 25 per branch, which covers every realization model
  // including the carry model of the last law
  std::vector<RepLabel> cases;
  for (const char* name : {"h1", "h2", "b4", "g52", "g53", "g54", "g55",
                           "g56"}) {
    auto law = GroupLaw::make(name);
    int p = law.min_prime;
    std::map<std::string, RepLabel> by_branch;
    for (const auto& l : enumerate_dual_ball(law, p, 2)) {
      if (l.level != 2 || l.dim <= 1 || l.dim > 25) continue;
      auto it = by_branch.find(l.branch);
      if (it == by_branch.end() || l.dim > it->second.dim)
        by_branch.insert_or_assign(l.branch, l);
    }
    REQUIRE(!by_branch.empty());
    for (auto& [br, l] : by_branch) cases.push_back(l);
  }
  bool saw_carry = false;
  for (const auto& label : cases) {
    const auto& law = label.law;
    const char* name = law.name.c_str();
    int p = label.xi.components[0].prime;
    MonomialRep rep(label);
    if (rep.is_carry()) saw_carry = true;
    i64 d = rep.dim();
    int N = label.level + 1;
    i64 pm = ipow(p, N);
    for (int t = 0; t < 4; ++t) {
      auto xc = rand_coords(rng, law.dim, pm);
      auto yc = rand_coords(rng, law.dim, pm);
      std::vector<Rat> xr(xc.begin(), xc.end()), yr(yc.begin(), yc.end());
      auto xy_rat = star_rat(law, xr, yr);
      std::vector<i64> xy(xy_rat.size());
      for (size_t i = 0; i < xy_rat.size(); ++i) xy[i] = zred(xy_rat[i], pm, p);
      auto A = rep_matrix(rep, xc), B = rep_matrix(rep, yc);
      auto AB = mat_mul(A.entries, B.entries, d);
      auto C = rep_matrix(rep, xy);
      INFO(name << " " << label.xi.to_string() << " dim " << d);
      CHECK(mat_diff(AB, C.entries) < 1e-9);
    }
  }
  CHECK(saw_carry);  // the two-stage model must have been exercised
}

TEST_CASE("the tilted-polarization guard rejects the unsupported regime") {
  auto g53 = GroupLaw::make("g53");
  // |xi4| = p^3, |xi5| = p^2: member of the dual, but k5 < k4 < 2 k5
  auto xi = pt(5, {"1", "1", "1", "1/125", "1/25"});
  auto label = make_label(g53, xi);
  CHECK_THROWS_AS(MonomialRep(label), Error);
}

TEST_CASE("precision below level is rejected") {
  auto h1 = GroupLaw::make("h1");
  auto label = make_label(h1, pt(3, {"1", "1", "1/9"}));
  GroupElement x(h1, 3, 1, {1, 0, 0});
  CHECK_THROWS_AS(rep_matrix(label, x), Error);
  CHECK_THROWS_AS(matrix_coefficient(label, 0, 0, x), Error);
}

TEST_CASE("matrix coefficients match the dense matrix") {
  std::mt19937_64 rng(11);
  auto law = GroupLaw::make("b4");
  auto label = make_label(law, pt(3, {"1", "1", "1/3", "1"}));
  MonomialRep rep(label);
  for (int t = 0; t < 10; ++t) {
    auto xc = rand_coords(rng, law.dim, 9);
    auto M = rep_matrix(rep, xc);
    for (i64 h = 0; h < rep.dim(); ++h)
      for (i64 hp = 0; hp < rep.dim(); ++hp)
        CHECK(std::abs(matrix_coefficient(rep, h, hp, xc) - M.at(h, hp)) <
              1e-12);
  }
  CHECK_THROWS_AS(matrix_coefficient(rep, 0, 99, {0, 0, 0, 0}), Error);
}

TEST_CASE("characters: trace identity, conjugation invariance, norms") {
  std::mt19937_64 rng(31337);
  for (const char* name : {"h1", "b4", "g52", "g53", "g54", "g55", "g56"}) {
    auto law = GroupLaw::make(name);
    int p = law.min_prime;
    auto labels = enumerate_dual_ball(law, p, 1);
    for (const auto& label : labels) {
      MonomialRep rep(label);
      i64 pm = ipow(p, std::max(label.level, 1));
      for (int t = 0; t < 6; ++t) {
        auto xc = rand_coords(rng, law.dim, pm);
        // closed form vs dense trace
        auto M = rep_matrix(rep, xc);
        cplx tr(0, 0);
        for (i64 u = 0; u < rep.dim(); ++u) tr += M.at(u, u);
        cplx cf = character_closed_form(rep, xc);
        CHECK(std::abs(tr - cf) < 1e-9);
        // conjugation invariance
        auto yc = rand_coords(rng, law.dim, pm);
        std::vector<Rat> xr(xc.begin(), xc.end()), yr(yc.begin(), yc.end());
        auto conj_rat =
            star_rat(law, star_rat(law, yr, xr), inverse_rat(law, yr));
        std::vector<i64> cc(conj_rat.size());
        for (size_t i = 0; i < conj_rat.size(); ++i)
          cc[i] = zred(conj_rat[i], pm, p);
        CHECK(std::abs(cf - character_closed_form(rep, cc)) < 1e-9);
      }
    }
    // L2 norm 1 for a handful of labels (cheap sizes here; the full sweep is
    // in the acceptance run)
    for (int s = 0; s < 5 && s < int(labels.size()); ++s) {
      const auto& label = labels[(s * 7919) % labels.size()];
      INFO(name << " " << label.xi.to_string());
      CHECK(std::abs(character_l2_norm(label) - 1.0) < 1e-9);
    }
  }
}

TEST_CASE("character orthogonality between distinct labels") {
  auto law = GroupLaw::make("h1");
  auto labels = enumerate_dual_ball(law, 3, 1);
  int m = 1;
  i64 total = quotient_size(law, 3, m);
  for (size_t a = 0; a < labels.size(); ++a)
    for (size_t b = a + 1; b < labels.size(); ++b) {
      MonomialRep ra(labels[a]), rb(labels[b]);
      cplx acc(0, 0);
      for (i64 idx = 0; idx < total; ++idx) {
        auto xc = quotient_coords(law, 3, m, idx);
        acc += character_closed_form(ra, xc) *
               std::conj(character_closed_form(rb, xc));
      }
      CHECK(std::abs(acc / double(total)) < 1e-9);
    }
}

TEST_CASE("synthetic reducible example: a sum of two characters") {
  // chi = chi_a + chi_b has L2 norm^2 = 2, and |chi(e)|^2 = 4
  auto law = GroupLaw::make("h1");
  MonomialRep a(make_label(law, pt(3, {"1/3", "1", "1"})));
  MonomialRep b(make_label(law, pt(3, {"1", "1/3", "1"})));
  i64 total = quotient_size(law, 3, 1);
  double acc = 0;
  for (i64 idx = 0; idx < total; ++idx) {
    auto xc = quotient_coords(law, 3, 1, idx);
    acc += std::norm(character_closed_form(a, xc) +
                     character_closed_form(b, xc));
  }
  CHECK(std::abs(acc / double(total) - 2.0) < 1e-9);
  cplx at_e = character_closed_form(a, {0, 0, 0}) +
              character_closed_form(b, {0, 0, 0});
  CHECK(std::abs(std::norm(at_e) - 4.0) < 1e-12);
}

TEST_CASE("Fourier transform: Schur orthogonality of matrix coefficients") {
  std::mt19937_64 rng(42);
  for (const char* name : {"h1", "b4"}) {
    auto law = GroupLaw::make(name);
    auto labels = enumerate_dual_ball(law, 3, 1);
    // pick a non-character label
    const RepLabel* big = nullptr;
    for (const auto& l : labels)
      if (l.dim > 1) big = &l;
    REQUIRE(big != nullptr);
    MonomialRep rep(*big);
    i64 d = rep.dim();
    i64 h = i64(rng() % d), hp = i64(rng() % d);
    TestFunction f = TestFunction::zeros(law, 3, 1);
    for (i64 idx = 0; idx < i64(f.values.size()); ++idx)
      f.values[idx] =
          matrix_coefficient(rep, h, hp, quotient_coords(law, 3, 1, idx));
    // f_hat at the same label: single entry of modulus 1/d at (hp, h)
    auto fh = fourier_transform(f, *big);
    for (i64 r = 0; r < d; ++r)
      for (i64 c = 0; c < d; ++c) {
        double want = (r == hp && c == h) ? 1.0 / double(d) : 0.0;
        CHECK(std::abs(std::abs(fh.matrix[r * d + c]) - want) < 1e-9);
      }
    // f_hat at every other label: zero
    for (const auto& l : labels) {
      if (&l == big) continue;
      if (l.xi.to_string() == big->xi.to_string()) continue;
      auto z = fourier_transform(f, l);
      for (const auto& v : z.matrix) CHECK(std::abs(v) < 1e-9);
    }
  }
}

TEST_CASE("Plancherel and Fourier inversion on random functions") {
  std::mt19937_64 rng(4242);
  for (const char* name : {"zp", "h1", "b4", "g52"}) {
    auto law = GroupLaw::make(name, 2);
    int p = 3;
    auto labels = enumerate_dual_ball(law, p, 1);
    TestFunction f = TestFunction::zeros(law, p, 1);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (auto& v : f.values) v = cplx(gauss(rng), gauss(rng));
    double l2 = 0;
    for (const auto& v : f.values) l2 += std::norm(v);
    l2 /= double(f.values.size());
    std::vector<FourierCoefficient> coeffs;
    double plancherel = 0;
    for (const auto& l : labels) {
      coeffs.push_back(fourier_transform(f, l));
      double hs = 0;
      for (const auto& v : coeffs.back().matrix) hs += std::norm(v);
      plancherel += double(l.dim) * hs;
    }
    INFO(name);
    CHECK(std::abs(plancherel - l2) < 1e-9);
    TestFunction g = synthesize(coeffs, p, 1);
    double err = 0;
    for (size_t i = 0; i < f.values.size(); ++i)
      err = std::max(err, std::abs(f.values[i] - g.values[i]));
    CHECK(err < 1e-9);
  }
}
