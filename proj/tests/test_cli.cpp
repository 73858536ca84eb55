#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#ifndef ALTSUM_CLI_PATH
#error "ALTSUM_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_data = "") {
  std::string cmd = std::string(ALTSUM_CLI_PATH) + " " + args + " 2>/dev/null";
  if (!stdin_data.empty()) {
    // feed stdin through a temp file to keep popen simple
    std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                      "/altsum_cli_stdin.txt";
    std::FILE* f = std::fopen(tmp.c_str(), "w");
    REQUIRE(f != nullptr);
    std::fwrite(stdin_data.data(), 1, stdin_data.size(), f);
    std::fclose(f);
    cmd += " < " + tmp;
  }
  std::FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("dist emits the exact rows plus a verified summary") {
  auto r = run("dist --n 4 --out -");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "n,a,count\n4,0,2\n4,2,2\n4,4,1\n4,sum,5\n");

  auto r0 = run("dist --n 0 --out -");
  CHECK(r0.exit_code == 0);
  CHECK(r0.out == "n,a,count\n0,0,1\n0,sum,1\n");
}

TEST_CASE("dist output is byte-stable across runs") {
  auto a = run("dist --n 40 --out -");
  auto b = run("dist --n 40 --out -");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("dist guards expensive builds behind --max-order") {
  auto r = run("dist --n 600 --out -");
  CHECK(r.exit_code == 2);
  auto ok = run("dist --n 600 --max-order 600 --out -");
  CHECK(ok.exit_code == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("dist --bogus 1").exit_code == 2);
  CHECK(run("nosuchcommand").exit_code == 2);
  CHECK(run("moments --n 4 --m-list 0").exit_code == 2);
}

TEST_CASE("moments CSV carries exact strings") {
  auto r = run("moments --n 4 --m-list 1,2 --format csv --out -");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n,m,A_m,p_n,E_m_exact,E_m_float,asym,ratio\n") == 0);
  CHECK(r.out.find("4,1,8,5,8/5,1.5999999999999999,") != std::string::npos);
  CHECK(r.out.find("4,2,24,5,24/5,4.7999999999999998,") != std::string::npos);
}

TEST_CASE("moments JSON") {
  auto r = run("moments --n 1 --m-list 1 --format json --out -");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0]["n"] == 1);
  CHECK(j[0]["A_m"] == "1");
  CHECK(j[0]["E_m_exact"] == "1");
  CHECK(j[0]["ratio"].is_number());

  auto r2 = run("moments --n 2 --m-list 2 --format json --out -");
  auto j2 = nlohmann::json::parse(r2.out);
  CHECK(j2[0]["E_m_exact"] == "2");  // 4/2 reduces
}

TEST_CASE("erfc-fit emits one KS row per n") {
  auto r = run("erfc-fit --n-list 50,100 --out -");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n,ks\n") == 0);
  CHECK(r.out.find("\n50,") != std::string::npos);
  CHECK(r.out.find("\n100,") != std::string::npos);
  // ks values are probabilities
  double ks50 = -1, ks100 = -1;
  std::sscanf(r.out.c_str(), "n,ks\n50,%lf\n100,%lf", &ks50, &ks100);
  CHECK(ks50 > 0);
  CHECK(ks50 <= 1);
  CHECK(ks100 < ks50);

  CHECK(run("erfc-fit --n-list 600").exit_code == 2);  // over max-order
}

TEST_CASE("omega golden pipelines") {
  auto r = run("omega --stdin --eliminate l1,l2,l3",
               "1/((1 - x1*l1)(1 - x2*l2*l1^-1)(1 - x3*l3*l2^-1))");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1/((1-x1)(1-x1*x2)(1-x1*x2*x3))\n");

  auto s = run("omega --stdin --eliminate all",
               "l1^-1*l2^-1 * 1/((1 - x1*l1)(1 - x2*l2*l1^-1))");
  CHECK(s.exit_code == 0);
  CHECK(s.out == "x1^2*x2/((1-x1)(1-x1*x2))\n");
}

TEST_CASE("omega substitution and expansion agree with dist") {
  std::string crude = "1/(";
  for (int i = 1; i <= 12; ++i) {
    crude += "(1 - x" + std::to_string(i) + "*l" + std::to_string(i);
    if (i > 1) crude += "*l" + std::to_string(i - 1) + "^-1";
    crude += ")";
  }
  crude += ")";
  auto r = run("omega --stdin --eliminate all --substitute odd=z*q,even=q*z^-1 --expand 12 --out -",
               crude);
  CHECK(r.exit_code == 0);
  // first line is the product form in z and q
  CHECK(r.out.find("1/((1-z*q)(1-q^2)") == 0);
  // a few known coefficients: every (n,a<=n) row of dist at 12
  CHECK(r.out.find("\n4,0,2\n4,2,2\n4,4,1\n") != std::string::npos);
  CHECK(r.out.find("\n12,0,") != std::string::npos);
}

TEST_CASE("omega error paths") {
  auto bad = run("omega --stdin --eliminate l1", "1/((1 - w1*l1))");
  CHECK(bad.exit_code == 2);
  auto tmpl = run("omega --stdin --eliminate l1", "1/((1 - x1*l1)(1 - x2*l1))");
  CHECK(tmpl.exit_code == 2);
  auto neither = run("omega --eliminate l1");
  CHECK(neither.exit_code == 2);
}

TEST_CASE("moments ratio approaches 1 from above at moderate n") {
  auto r = run("moments --n 500 --m-list 1 --format json --out -");
  CHECK(r.exit_code == 0);
  const double ratio = nlohmann::json::parse(r.out)[0]["ratio"].get<double>();
  CHECK(ratio > 0.5);
  CHECK(ratio < 1.5);
}

TEST_CASE("plot script emission") {
  const std::string csv = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                          "/altsum_plot_test.csv";
  auto r = run("dist --n 10 --out " + csv + " --plot-script");
  CHECK(r.exit_code == 0);
  std::FILE* gp = std::fopen((csv + ".gp").c_str(), "r");
  REQUIRE(gp != nullptr);
  char head[16] = {0};
  REQUIRE(std::fread(head, 1, 15, gp) == 15);
  std::fclose(gp);
  CHECK(std::string(head) == "set datafile se");
  std::remove(csv.c_str());
  std::remove((csv + ".gp").c_str());
}

TEST_CASE("verify suites produce machine-readable reports") {
  auto r = run("verify --suite dilog --out -");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["suite"] == "dilog");
  CHECK(j["pass"] == true);
  for (const auto& c : j["checks"]) {
    CHECK(c["pass"] == true);
    CHECK(c["measured"].get<double>() < c["tolerance"].get<double>());
  }

  auto em = run("verify --suite em --out -");
  CHECK(em.exit_code == 0);
  CHECK(nlohmann::json::parse(em.out)["pass"] == true);

  auto minor = run("verify --suite minor --n 500 --samples 120 --out -");
  CHECK(minor.exit_code == 0);
  auto mj = nlohmann::json::parse(minor.out);
  CHECK(mj["checks"][0]["measured"].get<double>() > 0);

  auto saddle = run("verify --suite saddle --n 10000 --out -");
  CHECK(saddle.exit_code == 0);
  CHECK(nlohmann::json::parse(saddle.out)["pass"] == true);

  auto cir = run("verify --suite circle --n 500 --m 1 --out -");
  CHECK(cir.exit_code == 0);
  CHECK(nlohmann::json::parse(cir.out)["pass"] == true);
}
