#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

std::string binary() {
  const char* b = std::getenv("PNILREP_BIN");
  REQUIRE(b != nullptr);
  return b;
}

RunResult run(const std::string& args) {
  std::string cmd = binary() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("dual --group g54 --prime 3").exit_code == 2);
  CHECK(run("dual --group nope --prime 3").exit_code == 2);
  CHECK(run("dual --group h1 --prime 4").exit_code == 2);
  CHECK(run("dual").exit_code == 2);
  CHECK(run("verify --suite bogus --group h1 --prime 3").exit_code == 2);
  CHECK(run("rep --group h1 --prime 3 --xi 1/3,1,1/3 --x 0,0,0").exit_code ==
        2);  // not in the dual transversal
  CHECK(run("gaussian --a x --b 0").exit_code == 2);
  CHECK(run("--no-such-flag").exit_code == 2);
}

TEST_CASE("dual: counting report") {
  auto r = run("dual --group g52 --prime 3 --level 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"schema\": \"pnilrep/1\""));
  CHECK(contains(r.out, "\"label_count\": 51"));
  CHECK(contains(r.out, "\"sum_d_squared\": 243"));
  CHECK(contains(r.out, "\"pass\": true"));
  CHECK(contains(r.out, "\"provenance\""));

  auto r0 = run("dual --group h1 --prime 3 --level 0");
  CHECK(r0.exit_code == 0);
  CHECK(contains(r0.out, "\"label_count\": 1"));

  auto rc = run("dual --group h1 --prime 3 --level 1 --format csv");
  CHECK(rc.exit_code == 0);
  CHECK(contains(rc.out, "xi,dim,branch,level"));
  CHECK(contains(rc.out, "\"1,1,1/3\",3,"));
}

TEST_CASE("rep: the cyclic shift matrix") {
  auto r = run("rep --group h1 --prime 3 --xi 1,1,1/3 --x 1,0,0 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "0:0,1:0,0:0\n"
        "0:0,0:0,1:0\n"
        "1:0,0:0,0:0\n");
}

TEST_CASE("gaussian: fixed quadratic sum with oracle") {
  auto r = run("gaussian --prime 5 --a 1/25 --b 0 --gamma 0 --oracle");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"closed_form\""));
  CHECK(contains(r.out, "0.2"));
  CHECK(contains(r.out, "\"abs_diff\""));
}

TEST_CASE("spectrum: h1 table includes the 4.5 eigenvalue") {
  auto r = run("spectrum --group h1 --prime 3 --level 1 --alpha 1 "
               "--format csv");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "label,tau,h_prime,closed_form,numeric,diff,bound_ok"));
  CHECK(contains(r.out, ",4.5,4.5,0,"));
  // the trivial label contributes a zero row
  CHECK(contains(r.out, "\"1,1,1\",\"0\",\"0\",0,0,0,"));
}

TEST_CASE("spectrum: g56 rows carry the bound verdict") {
  auto r = run("spectrum --group g56 --prime 5 --level 1 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, ",true"));
  CHECK_FALSE(contains(r.out, ",false"));
}

TEST_CASE("verify: plancherel passes and is deterministic") {
  std::string cmd = "verify --suite plancherel --group b4 --prime 3 "
                    "--level 1 --seed 42";
  auto r1 = run(cmd);
  auto r2 = run(cmd);
  CHECK(r1.exit_code == 0);
  CHECK(contains(r1.out, "\"pass\": true"));
  CHECK(r1.out == r2.out);  // byte-identical
  auto r3 = run("verify --suite plancherel --group b4 --prime 3 "
                "--level 1 --seed 43");
  CHECK(r3.exit_code == 0);
}

TEST_CASE("verify: reps and characters suites pass") {
  auto r = run("verify --suite reps --group h1 --prime 3 --level 1 --seed 1 "
               "--samples 5");
  CHECK(r.exit_code == 0);
  auto c = run("verify --suite characters --group g52 --prime 3 --level 1");
  CHECK(c.exit_code == 0);
}

TEST_CASE("verify: spectrum suite reports the closed-form discrepancy") {
  // The pairwise-sum display disagrees with the computed symbol on the
  // non-commuting representations; the suite must exit 1 and still emit
  // per-property results.
  auto r = run("verify --suite spectrum --group h1 --prime 3 --level 1 "
               "--alpha 1");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "labels_agreeing=9/11"));
  CHECK(contains(r.out, "\"pass\": false"));
}

TEST_CASE("verify: hypoelliptic suite") {
  auto r = run("verify --suite hypoelliptic --group h1 --prime 3 --level 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "c_star=0.75"));
}

TEST_CASE("plancherel subcommand") {
  auto r = run("plancherel --group g52 --prime 3 --level 1 --seed 9");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "inversion_round_trip"));
}
