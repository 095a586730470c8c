// pnilrep command-line front end.
//
// Subcommands: dual, verify, spectrum, gaussian, plancherel, rep.
// Exit codes: 0 = pass, 1 = property failure, 2 = usage error.
#include <algorithm>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pnilrep/oscillatory.hpp"
#include "pnilrep/vt.hpp"

using namespace pnilrep;
using ojson = nlohmann::ordered_json;

namespace {

struct RunConfig {
  std::string group;
  int prime = 3;
  int level = 1;
  double alpha = 1.0;
  unsigned long long seed = 0;
  std::string format = "json";
  long long cap = DEFAULT_DUAL_CAP;
  int threads = 1;
  int samples = 20;
};

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

GroupLaw resolve_law(const RunConfig& cfg) {
  if (cfg.group.empty()) fail(ErrorKind::Usage, "missing --group");
  GroupLaw law = GroupLaw::make(cfg.group);
  if (!is_prime(cfg.prime)) fail(ErrorKind::Usage, "--prime must be prime");
  if (!law.admits_prime(cfg.prime))
    fail(ErrorKind::Usage, "group " + cfg.group + " requires p >= " +
                               std::to_string(law.min_prime));
  if (cfg.level < 0) fail(ErrorKind::Usage, "--level must be >= 0");
  if (cfg.alpha <= 0) fail(ErrorKind::Usage, "--alpha must be positive");
  return law;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

ojson provenance_block() {
  return ojson{
      {"g53_g54_sets",
       "non-strict inequality variant selected by the counting and "
       "character-norm checks"},
      {"interior_dimension",
       "p^max(v4, 2*v5) from the orbit count, where v_i is the denominator "
       "exponent of xi_i"},
      {"trivial_constraint", "vacuous (all of the unit ball)"},
  };
}

ojson label_json(const RepLabel& lab) {
  ojson xi = ojson::array();
  for (const auto& c : lab.xi.components) xi.push_back(c.to_string());
  return ojson{{"xi", xi},
               {"dim", lab.dim},
               {"branch", lab.branch},
               {"level", lab.level}};
}

ojson report_head(const char* command, const RunConfig& cfg, bool with_group) {
  ojson r{{"schema", "pnilrep/1"}, {"command", command}};
  if (with_group) r["group"] = cfg.group;
  r["prime"] = cfg.prime;
  return r;
}

void emit(const ojson& r) { std::cout << r.dump(2) << "\n"; }

Rat parse_rat(const std::string& s) {
  auto bad = [&] { fail(ErrorKind::Usage, "cannot parse rational: " + s); };
  long long num = 0, den = 1;
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
  if (i >= s.size() || !std::isdigit((unsigned char)s[i])) bad();
  while (i < s.size() && std::isdigit((unsigned char)s[i]))
    num = num * 10 + (s[i++] - '0');
  if (i < s.size()) {
    if (s[i] != '/') bad();
    ++i;
    den = 0;
    if (i >= s.size()) bad();
    while (i < s.size() && std::isdigit((unsigned char)s[i]))
      den = den * 10 + (s[i++] - '0');
    if (i != s.size() || den == 0) bad();
  }
  return Rat(neg ? -num : num, den);
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

DualPoint parse_xi(const GroupLaw& law, int p, const std::string& s) {
  auto parts = split_csv(s);
  if ((int)parts.size() != law.dim)
    fail(ErrorKind::Usage, "--xi needs " + std::to_string(law.dim) +
                               " comma-separated components");
  DualPoint xi;
  for (const auto& t : parts) xi.components.push_back(DualElem::parse(t, p));
  return xi;
}

// ---------------------------------------------------------------------------
// dual
// ---------------------------------------------------------------------------
int cmd_dual(const RunConfig& cfg) {
  GroupLaw law = resolve_law(cfg);
  auto labels = enumerate_dual_ball(law, cfg.prime, cfg.level, cfg.cap);
  auto pw = peter_weyl_check(law, cfg.prime, cfg.level, cfg.cap);
  if (cfg.format == "csv") {
    std::cout << "xi,dim,branch,level\n";
    for (const auto& lab : labels)
      std::cout << "\"" << lab.xi.to_string() << "\"," << lab.dim << ","
                << lab.branch << "," << lab.level << "\n";
    std::cout << "# labels=" << pw.label_count
              << " sum_d_squared=" << pw.sum_d_squared
              << " expected=" << pw.expected
              << " pass=" << (pw.pass ? "true" : "false") << "\n";
  } else {
    ojson r = report_head("dual", cfg, true);
    r["level"] = cfg.level;
    ojson arr = ojson::array();
    for (const auto& lab : labels) arr.push_back(label_json(lab));
    r["labels"] = arr;
    r["label_count"] = pw.label_count;
    r["sum_d_squared"] = pw.sum_d_squared;
    r["expected"] = pw.expected;
    r["pass"] = pw.pass;
    r["provenance"] = provenance_block();
    emit(r);
  }
  return pw.pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// rep
// ---------------------------------------------------------------------------
int cmd_rep(const RunConfig& cfg, const std::string& xi_s,
            const std::string& x_s) {
  GroupLaw law = resolve_law(cfg);
  DualPoint xi = parse_xi(law, cfg.prime, xi_s);
  RepLabel lab = make_label(law, xi);
  auto xp = split_csv(x_s);
  if ((int)xp.size() != law.dim)
    fail(ErrorKind::Usage, "--x needs " + std::to_string(law.dim) +
                               " comma-separated integers");
  std::vector<i64> x;
  for (const auto& t : xp) x.push_back(std::stoll(t));
  MonomialRep rep(lab);
  RepMatrix M = rep_matrix(rep, x);
  if (cfg.format == "csv") {
    for (i64 r = 0; r < M.d; ++r) {
      for (i64 c = 0; c < M.d; ++c) {
        if (c) std::cout << ",";
        std::cout << fmt_double(M.at(r, c).real()) << ":"
                  << fmt_double(M.at(r, c).imag());
      }
      std::cout << "\n";
    }
  } else {
    ojson r = report_head("rep", cfg, true);
    r["label"] = label_json(lab);
    ojson xs = ojson::array();
    for (i64 v : x) xs.push_back(v);
    r["x"] = xs;
    ojson rows = ojson::array();
    for (i64 i = 0; i < M.d; ++i) {
      ojson row = ojson::array();
      for (i64 j = 0; j < M.d; ++j)
        row.push_back(ojson::array(
            {M.at(i, j).real(), M.at(i, j).imag()}));
      rows.push_back(row);
    }
    r["matrix"] = rows;
    r["provenance"] = provenance_block();
    emit(r);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// gaussian
// ---------------------------------------------------------------------------
int cmd_gaussian(const RunConfig& cfg, const std::string& a_s,
                 const std::string& b_s, int gamma, bool with_oracle) {
  if (!is_prime(cfg.prime)) fail(ErrorKind::Usage, "--prime must be prime");
  Rat a = parse_rat(a_s), b = parse_rat(b_s);
  cplx closed = gaussian_disk_integral(cfg.prime, a, b, gamma);
  ojson r = report_head("gaussian", cfg, false);
  r["a"] = a_s;
  r["b"] = b_s;
  r["gamma"] = gamma;
  r["closed_form"] = ojson::array({closed.real(), closed.imag()});
  int rc = 0;
  if (with_oracle) {
    cplx orc = riemann_oscillatory_oracle(
        PhasePolynomial::quadratic(cfg.prime, a, b), gamma);
    double diff = std::abs(closed - orc);
    r["oracle"] = ojson::array({orc.real(), orc.imag()});
    r["abs_diff"] = diff;
    if (diff > 1e-9) rc = 1;
  }
  if (cfg.format == "csv") {
    std::cout << "a,b,gamma,closed_re,closed_im";
    if (with_oracle) std::cout << ",oracle_re,oracle_im,abs_diff";
    std::cout << "\n" << a_s << "," << b_s << "," << gamma << ","
              << fmt_double(closed.real()) << "," << fmt_double(closed.imag());
    if (with_oracle) {
      double orr = r["oracle"][0], ori = r["oracle"][1];
      std::cout << "," << fmt_double(orr) << "," << fmt_double(ori) << ","
                << fmt_double(r["abs_diff"]);
    }
    std::cout << "\n";
  } else {
    emit(r);
  }
  return rc;
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------
struct SpectrumTable {
  ojson labels = ojson::array();
  bool bound_pass = true;
  std::vector<std::string> csv_rows;
};

void spectrum_for_label(const RepLabel& lab, double alpha, double c_star,
                        SpectrumTable& out) {
  const GroupLaw& law = lab.law;
  SymbolMatrix S = sublaplacian_symbol(lab, law.generator_indices(), alpha);
  std::vector<double> num = symbol_eigenvalues(S);
  ojson lj{{"label", label_json(lab)}};
  ojson rows = ojson::array();
  std::string name = "\"" + lab.xi.to_string() + "\"";
  if (law.id == LawId::g56) {
    // no closed form: numeric eigenvalues with the lower-bound check
    double inf = std::abs(num[0]);
    for (double e : num) inf = std::min(inf, std::abs(e));
    double gn = generator_norm(lab);
    bool ok = lab.level == 0 || inf >= 0.999999 * c_star * std::pow(gn, alpha);
    if (!ok) out.bound_pass = false;
    for (double e : num) {
      rows.push_back(ojson{{"numeric", e}, {"bound_ok", ok}});
      out.csv_rows.push_back(name + ",,,," + fmt_double(e) + ",," +
                             (ok ? "true" : "false"));
    }
    lj["bound_ok"] = ok;
    lj["max_abs_diff"] = nullptr;
  } else {
    auto crows = closed_form_spectrum_rows(lab, alpha);
    std::vector<size_t> order(crows.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      if (crows[a].closed_form != crows[b].closed_form)
        return crows[a].closed_form < crows[b].closed_form;
      return a < b;
    });
    i64 g = std::gcd(i64(num.size()), i64(crows.size()));
    i64 len = i64(num.size()) / g * i64(crows.size());
    std::vector<double> nrep = replicate_sorted(num, len);
    i64 crep = len / i64(crows.size());
    double md = 0;
    for (i64 i = 0; i < len; ++i) {
      const SpectrumRow& cr = crows[order[size_t(i / crep)]];
      double diff = std::abs(cr.closed_form - nrep[i]);
      md = std::max(md, diff);
      rows.push_back(ojson{{"tau", cr.tau},
                           {"h_prime", cr.h_prime},
                           {"closed_form", cr.closed_form},
                           {"numeric", nrep[i]},
                           {"diff", diff}});
      out.csv_rows.push_back(name + ",\"" + cr.tau + "\",\"" + cr.h_prime +
                             "\"," + fmt_double(cr.closed_form) + "," +
                             fmt_double(nrep[i]) + "," + fmt_double(diff) +
                             ",");
    }
    lj["max_abs_diff"] = md;
  }
  lj["rows"] = rows;
  out.labels.push_back(lj);
}

int cmd_spectrum(const RunConfig& cfg, const std::string& xi_s) {
  GroupLaw law = resolve_law(cfg);
  double c_star = 0.0;
  if (law.id == LawId::g56)
    c_star =
        hypoellipticity_margin(law, cfg.prime, cfg.alpha, std::max(cfg.level, 1),
                               cfg.cap)
            .c_star;
  SpectrumTable table;
  if (!xi_s.empty()) {
    RepLabel lab = make_label(law, parse_xi(law, cfg.prime, xi_s));
    spectrum_for_label(lab, cfg.alpha, c_star, table);
  } else {
    for (const auto& lab :
         enumerate_dual_ball(law, cfg.prime, cfg.level, cfg.cap))
      spectrum_for_label(lab, cfg.alpha, c_star, table);
  }
  if (cfg.format == "csv") {
    std::cout << "label,tau,h_prime,closed_form,numeric,diff,bound_ok\n";
    for (const auto& row : table.csv_rows) std::cout << row << "\n";
  } else {
    ojson r = report_head("spectrum", cfg, true);
    r["level"] = cfg.level;
    r["alpha"] = cfg.alpha;
    if (law.id == LawId::g56) r["c_star"] = c_star;
    r["labels"] = table.labels;
    r["provenance"] = provenance_block();
    emit(r);
  }
  return table.bound_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify suites
// ---------------------------------------------------------------------------
struct SuiteResult {
  std::string suite, property;
  bool pass;
  std::string detail;
};

TestFunction random_test_function(const GroupLaw& law, int p, int m,
                                  std::mt19937_64& rng) {
  TestFunction f = TestFunction::zeros(law, p, m);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (auto& v : f.values) v = cplx(U(rng), U(rng));
  return f;
}

void suite_reps(const RunConfig& cfg, std::mt19937_64& rng,
                std::vector<SuiteResult>& out) {
  GroupLaw law = resolve_law(cfg);
  int p = cfg.prime;
  double worst = 0;
  for (const auto& lab :
       enumerate_dual_ball(law, p, cfg.level, cfg.cap)) {
    MonomialRep rep(lab);
    int N = std::max(lab.level, 1);
    i64 pm = ipow(p, N);
    for (int t = 0; t < cfg.samples; ++t) {
      std::vector<i64> xc(law.dim), yc(law.dim);
      for (auto& v : xc) v = i64(rng() % pm);
      for (auto& v : yc) v = i64(rng() % pm);
      GroupElement x(law, p, N, xc), y(law, p, N, yc);
      RepMatrix A = rep_matrix(rep, x.coords), B = rep_matrix(rep, y.coords);
      RepMatrix AB = rep_matrix(rep, star(x, y).coords);
      double hom = 0, uni = 0;
      for (i64 r = 0; r < A.d; ++r)
        for (i64 c = 0; c < A.d; ++c) {
          cplx s(0, 0), u(0, 0);
          for (i64 k = 0; k < A.d; ++k) {
            s += A.at(r, k) * B.at(k, c);
            u += A.at(r, k) * std::conj(A.at(c, k));
          }
          hom += std::norm(s - AB.at(r, c));
          uni += std::norm(u - (r == c ? cplx(1, 0) : cplx(0, 0)));
        }
      worst = std::max(worst, std::sqrt(hom));
      worst = std::max(worst, std::sqrt(uni));
    }
  }
  out.push_back({"reps", "homomorphism+unitarity", worst < 1e-9,
                 "max_frobenius_residual=" + fmt_double(worst)});
}

void suite_characters(const RunConfig& cfg, std::vector<SuiteResult>& out) {
  GroupLaw law = resolve_law(cfg);
  double worst = 0;
  for (const auto& lab :
       enumerate_dual_ball(law, cfg.prime, cfg.level, cfg.cap)) {
    double n = character_l2_norm(lab);
    worst = std::max(worst, std::abs(n - 1.0));
  }
  out.push_back({"characters", "l2_norm_one", worst < 1e-9,
                 "max_abs_dev=" + fmt_double(worst)});
}

void suite_gaussians(const RunConfig& cfg, std::mt19937_64& rng,
                     std::vector<SuiteResult>& out) {
  if (!is_prime(cfg.prime)) fail(ErrorKind::Usage, "--prime must be prime");
  int p = cfg.prime;
  double worst = 0;
  int done = 0;
  while (done < cfg.samples) {
    int ka = int(rng() % 4);
    int kb = int(rng() % 3);
    int gamma = int(rng() % 5) - 2;
    if (p >= 5 && ka - 2 * std::min(gamma, 0) > 6) continue;
    i64 na = i64(rng() % 200) - 100;
    i64 nb = i64(rng() % 200) - 100;
    Rat a(na, ipow(p, ka)), b(nb, ipow(p, kb));
    cplx closed = gaussian_disk_integral(p, a, b, gamma);
    cplx orc = riemann_oscillatory_oracle(
        PhasePolynomial::quadratic(p, a, b), gamma);
    worst = std::max(worst, std::abs(closed - orc));
    ++done;
  }
  out.push_back({"gaussians", "closed_vs_oracle", worst < 1e-9,
                 "samples=" + std::to_string(done) +
                     " max_abs_diff=" + fmt_double(worst)});
  // pinned quadratic sum value
  cplx v = gaussian_disk_integral(5, Rat(1, 25), Rat(0), 0);
  bool fixed = std::abs(v - cplx(0.2, 0)) < 1e-12;
  out.push_back({"gaussians", "fixed_gauss_sum_one_fifth", fixed,
                 "value=" + fmt_double(v.real())});
}

void suite_plancherel(const RunConfig& cfg, std::mt19937_64& rng,
                      std::vector<SuiteResult>& out) {
  GroupLaw law = resolve_law(cfg);
  int p = cfg.prime;
  int m = std::max(cfg.level, 1);
  TestFunction f = random_test_function(law, p, m, rng);
  auto labels = enumerate_dual_ball(law, p, m, cfg.cap);
  std::vector<FourierCoefficient> coeffs;
  double sum_hat = 0;
  for (const auto& lab : labels) {
    coeffs.push_back(fourier_transform(f, lab));
    const auto& C = coeffs.back();
    double fr = 0;
    for (const auto& e : C.matrix) fr += std::norm(e);
    sum_hat += double(C.d) * fr;
  }
  double norm2 = 0;
  for (const auto& v : f.values) norm2 += std::norm(v);
  norm2 /= double(f.values.size());
  double planch = std::abs(norm2 - sum_hat);
  out.push_back({"plancherel", "norm_identity", planch < 1e-9,
                 "abs_residual=" + fmt_double(planch)});
  TestFunction g = synthesize(coeffs, p, m);
  double rt = 0;
  for (size_t i = 0; i < f.values.size(); ++i)
    rt = std::max(rt, std::abs(f.values[i] - g.values[i]));
  out.push_back({"plancherel", "inversion_round_trip", rt < 1e-9,
                 "max_pointwise=" + fmt_double(rt)});
}

void suite_spectrum(const RunConfig& cfg, std::vector<SuiteResult>& out) {
  GroupLaw law = resolve_law(cfg);
  double worst = 0;
  bool all_bounds = true;
  i64 agree = 0, total = 0;
  double c_star = 0;
  if (law.id == LawId::g56)
    c_star = hypoellipticity_margin(law, cfg.prime, cfg.alpha,
                                    std::max(cfg.level, 1), cfg.cap)
                 .c_star;
  for (const auto& lab :
       enumerate_dual_ball(law, cfg.prime, cfg.level, cfg.cap)) {
    if (law.id == LawId::g56) {
      SymbolMatrix S =
          sublaplacian_symbol(lab, law.generator_indices(), cfg.alpha);
      auto ev = symbol_eigenvalues(S);
      double inf = std::abs(ev[0]);
      for (double e : ev) inf = std::min(inf, std::abs(e));
      if (inf < 0.999999 * c_star * std::pow(generator_norm(lab), cfg.alpha))
        all_bounds = false;
      continue;
    }
    auto r = spectrum_report(lab, cfg.alpha);
    worst = std::max(worst, r.max_abs_diff);
    ++total;
    if (r.max_abs_diff < 1e-9) ++agree;
  }
  if (law.id == LawId::g56)
    out.push_back({"spectrum", "g56_lower_bound", all_bounds,
                   "c_star=" + fmt_double(c_star)});
  out.push_back({"spectrum", "closed_form_vs_symbol", worst < 1e-9,
                 "labels_agreeing=" + std::to_string(agree) + "/" +
                     std::to_string(total) +
                     " max_abs_diff=" + fmt_double(worst)});
}

void suite_hypoelliptic(const RunConfig& cfg, std::vector<SuiteResult>& out) {
  GroupLaw law = resolve_law(cfg);
  auto m = hypoellipticity_margin(law, cfg.prime, cfg.alpha,
                                  std::max(cfg.level, 1), cfg.cap);
  out.push_back({"hypoelliptic", "positive_margin", m.pass,
                 "c_star=" + fmt_double(m.c_star) + " at \"" +
                     m.minimizing_label + "\" labels=" +
                     std::to_string(m.labels_checked)});
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
  std::mt19937_64 rng(cfg.seed);
  std::vector<SuiteResult> results;
  bool known = false;
  auto want = [&](const char* s) {
    bool w = suite == s || suite == "all";
    known = known || suite == s;
    return w;
  };
  if (want("reps")) suite_reps(cfg, rng, results);
  if (want("characters")) suite_characters(cfg, results);
  if (want("gaussians")) suite_gaussians(cfg, rng, results);
  if (want("plancherel")) suite_plancherel(cfg, rng, results);
  if (want("spectrum")) suite_spectrum(cfg, results);
  if (want("hypoelliptic")) suite_hypoelliptic(cfg, results);
  if (!known && suite != "all")
    fail(ErrorKind::Usage, "unknown suite: " + suite);
  bool pass = true;
  for (const auto& r : results) pass = pass && r.pass;
  if (cfg.format == "csv") {
    std::cout << "suite,property,pass,detail\n";
    for (const auto& r : results)
      std::cout << r.suite << "," << r.property << ","
                << (r.pass ? "true" : "false") << ",\"" << r.detail << "\"\n";
  } else {
    ojson rep = report_head("verify", cfg, true);
    rep["suite"] = suite;
    rep["level"] = cfg.level;
    rep["alpha"] = cfg.alpha;
    rep["seed"] = cfg.seed;
    ojson arr = ojson::array();
    for (const auto& r : results)
      arr.push_back(ojson{{"suite", r.suite},
                          {"property", r.property},
                          {"pass", r.pass},
                          {"detail", r.detail}});
    rep["results"] = arr;
    rep["pass"] = pass;
    rep["provenance"] = provenance_block();
    emit(rep);
  }
  return pass ? 0 : 1;
}

int cmd_plancherel(const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::vector<SuiteResult> results;
  suite_plancherel(cfg, rng, results);
  bool pass = true;
  for (const auto& r : results) pass = pass && r.pass;
  if (cfg.format == "csv") {
    std::cout << "suite,property,pass,detail\n";
    for (const auto& r : results)
      std::cout << r.suite << "," << r.property << ","
                << (r.pass ? "true" : "false") << ",\"" << r.detail << "\"\n";
  } else {
    ojson rep = report_head("plancherel", cfg, true);
    rep["level"] = cfg.level;
    rep["seed"] = cfg.seed;
    ojson arr = ojson::array();
    for (const auto& r : results)
      arr.push_back(ojson{{"property", r.property},
                          {"pass", r.pass},
                          {"detail", r.detail}});
    rep["results"] = arr;
    rep["pass"] = pass;
    rep["provenance"] = provenance_block();
    emit(rep);
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pnilrep: duals, representations and Vladimirov sub-Laplacian "
               "spectra of compact p-adic nilpotent groups"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string suite = "all", xi_s, x_s, a_s, b_s;
  int gamma = 0;
  bool with_oracle = false;

  auto add_common = [&](CLI::App* sub, bool needs_group) {
    if (needs_group) sub->add_option("--group", cfg.group, "group law id");
    sub->add_option("--prime", cfg.prime, "prime p");
    sub->add_option("--level", cfg.level, "ball level n");
    sub->add_option("--alpha", cfg.alpha, "VT exponent");
    sub->add_option("--seed", cfg.seed, "RNG seed");
    sub->add_option("--samples", cfg.samples, "random samples per property");
    sub->add_option("--format", cfg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--cap", cfg.cap, "enumeration budget (sum of d^2)");
    sub->add_option("--threads", cfg.threads, "worker threads")
        ->envname("PNILREP_THREADS");
  };

  CLI::App* dual = app.add_subcommand("dual", "enumerate a dual ball");
  add_common(dual, true);
  CLI::App* verify = app.add_subcommand("verify", "run a property suite");
  add_common(verify, true);
  verify->add_option("--suite", suite,
                     "reps|characters|gaussians|plancherel|spectrum|"
                     "hypoelliptic|all");
  CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalue tables");
  add_common(spectrum, true);
  spectrum->add_option("--xi", xi_s, "restrict to one label (comma list)");
  CLI::App* gaussian =
      app.add_subcommand("gaussian", "quadratic oscillatory disk integral");
  add_common(gaussian, false);
  gaussian->add_option("--a", a_s, "quadratic coefficient")->required();
  gaussian->add_option("--b", b_s, "linear coefficient")->required();
  gaussian->add_option("--gamma", gamma, "domain radius exponent");
  gaussian->add_flag("--oracle", with_oracle, "also run the Riemann oracle");
  CLI::App* planch =
      app.add_subcommand("plancherel", "Plancherel and inversion check");
  add_common(planch, true);
  CLI::App* rep = app.add_subcommand("rep", "print one representation matrix");
  add_common(rep, true);
  rep->add_option("--xi", xi_s, "label components (comma list)")->required();
  rep->add_option("--x", x_s, "group element coordinates (comma list)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (dual->parsed()) return cmd_dual(cfg);
    if (verify->parsed()) return cmd_verify(cfg, suite);
    if (spectrum->parsed()) return cmd_spectrum(cfg, xi_s);
    if (gaussian->parsed())
      return cmd_gaussian(cfg, a_s, b_s, gamma, with_oracle);
    if (planch->parsed()) return cmd_plancherel(cfg);
    if (rep->parsed()) return cmd_rep(cfg, xi_s, x_s);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Usage:
      case ErrorKind::UnsupportedLaw:
      case ErrorKind::NotInDual:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
