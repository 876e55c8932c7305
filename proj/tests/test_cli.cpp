#include "doctest.h"
#include "levy/cli.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace levy::cli;

namespace {

const char* kVg1 =
    "model = VG\nsigma = 0.4344\nnu = 0.1083\ntheta = -0.3726\neta = 0.0051\n";

RunConfig cfg_from(const std::string& text, const std::string& command) {
  std::istringstream in(text);
  return parse_config(in, command);
}

// Data line of the CSV starting with `prefix`.
std::string line_with(const std::string& csv, const std::string& prefix) {
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(prefix, 0) == 0) return line;
  }
  return {};
}

std::string without_comments(const std::string& csv) {
  std::istringstream in(csv);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') out << line << "\n";
  }
  return out.str();
}

int run_binary(const std::string& args) {
  const int status = std::system((std::string(LEVY_SMILE_BINARY) + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = std::string(LEVY_TEST_TMPDIR) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("numbers, fractions and ranges") {
  CHECK(parse_number("5/252") == 5.0 / 252.0);
  CHECK(parse_number("0.25") == 0.25);
  CHECK(parse_number(" -1e-3 ") == -1e-3);
  CHECK_THROWS_AS(parse_number("1/0"), ConfigError);
  CHECK_THROWS_AS(parse_number("abc"), ConfigError);

  const auto r = parse_grid("0.05:0.01:0.20");
  REQUIRE(r.size() == 16);
  CHECK(r.front().value == 0.05);
  CHECK(r.back().value == doctest::Approx(0.20).epsilon(1e-14));
  const auto l = parse_grid("1/252, 5/252");
  REQUIRE(l.size() == 2);
  CHECK(l[1].label == "5/252");
  CHECK(l[1].value == 5.0 / 252.0);
  CHECK_THROWS_AS(parse_grid("0.2:0.01:0.1"), ConfigError);
  CHECK_THROWS_AS(parse_grid("1,,2"), ConfigError);
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(cfg_from(std::string(kVg1) + "k = 0.1\nt = \n", "table"), ConfigError);
  CHECK_THROWS_AS(cfg_from(std::string(kVg1) + "k = 0.1\nt = 1/252\nfoo = 1\n", "table"), ConfigError);
  CHECK_THROWS_AS(cfg_from("model = VG\nsigma = 0.4\nnu = 0.1\nk = 0.1\nt = 1/252\n", "table"), ConfigError);
  CHECK_THROWS_AS(cfg_from(std::string(kVg1) + "k = 0.1\nt = 1/252\n", "frobnicate"), ConfigError);
  CHECK_THROWS_AS(cfg_from(std::string(kVg1) + "k = 0.1\nt = 1/252\norder = 3\n", "table"), ConfigError);
  // CIR with kappa theta / sigma^2 = 0.5.
  CHECK_THROWS_AS(cfg_from(std::string(kVg1) +
                               "k = 0.1\nt = 1/252\ncir_kappa = 1\ncir_theta = 0.5\ncir_sigma = 1\ncir_y0 = 1\n",
                           "timechange"),
                  ConfigError);
  CHECK_THROWS_AS(cfg_from(std::string(kVg1) + "k = 0.1\nt = 1/252\ncolumns = second\norder = 1\n", "table"),
                  ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/levy.cfg", "table"), ConfigError);
  CHECK(run_binary("table --config /nonexistent/levy.cfg") == 1);
}

TEST_CASE("table command reproduces paper cells") {
  const RunConfig vg = cfg_from(std::string(kVg1) + "k = 0.05\nt = 1/252\n", "table");
  const CommandResult r = run_command(vg, 1);
  CHECK(r.exit_code() == 0);
  CHECK(r.output.find("# levy-smile 1.0.0 table") == 0);
  CHECK(line_with(r.output, "0.05,") == "0.05,234.6977,239.4463,239.2843");

  // Table 3, k = 0.2, t = 20/252 oracle column. (The printed expansion columns
  // of Table 3 differ; see the decisions ledger.)
  const RunConfig cgmy = cfg_from(
      "model = CGMY\nC = 1.1\nG = 5.09\nM = 8.6\nY = 0.4456\nk = 0.2\nt = 20/252\ncolumns = ift\n", "table");
  CHECK(line_with(run_command(cgmy, 1).output, "0.2,") == "0.2,20.3280");
}

TEST_CASE("output does not depend on the thread count") {
  const RunConfig c = cfg_from(std::string(kVg1) + "k = 0.05:0.05:0.2\nt = 1/252, 10/252\n", "smile");
  CHECK(run_command(c, 1).output == run_command(c, 4).output);
}

TEST_CASE("failed cells print ERR and give exit code 2") {
  const RunConfig c = cfg_from(std::string(kVg1) + "k = 0.1, 8\nt = 1/252\ncolumns = iv-exact\n", "smile");
  const CommandResult r = run_command(c, 2);
  CHECK(r.failed_cells == 1);
  CHECK(r.exit_code() == 2);
  REQUIRE(r.messages.size() == 1);
  CHECK(r.messages[0].find("k=8") != std::string::npos);
  CHECK(line_with(r.output, "1/252,8,") == "1/252,8,ERR");
  CHECK(line_with(r.output, "1/252,0.1,") != "1/252,0.1,ERR");

  const std::string path = write_temp("levy_err.cfg", std::string(kVg1) + "k = 0.1, 8\nt = 1/252\ncolumns = iv-exact\n");
  CHECK(run_binary("smile --config " + path) == 2);
  const std::string ok = write_temp("levy_ok.cfg", std::string(kVg1) + "k = 0.1\nt = 1/252\n");
  CHECK(run_binary("table --config " + ok + " --threads 2") == 0);
  CHECK(run_binary("table --config " + ok + " --order 3") == 1);
  std::remove(path.c_str());
  std::remove(ok.c_str());
}

TEST_CASE("varcall, timechange and iv-errors outputs") {
  const RunConfig v = cfg_from(
      "model = CGMY\nC = 1.1\nG = 5.09\nM = 8.6\nY = 0.4456\nK = 0.04, 100\nt = 1/252\n", "varcall");
  const CommandResult vr = run_command(v, 1);
  CHECK(vr.exit_code() == 0);
  CHECK(line_with(vr.output, "0.04,1/252,").rfind("0.04,1/252,1.424527e-04,1.424527e-04,", 0) == 0);
  // K = 100 is far beyond any daily quadratic variation: prices vanish.
  const std::string far = line_with(vr.output, "100,1/252,");
  REQUIRE_FALSE(far.empty());
  CHECK(std::stod(far.substr(10)) < 1e-20);

  // Unit clock: first/second equal the pure-Levy table cells.
  const RunConfig tc = cfg_from(std::string(kVg1) + "k = 0.05\nt = 1/252\ney0 = 1\nrho = 1\ngamma = 0\n",
                                "timechange");
  const std::string row = line_with(run_command(tc, 1).output, "0.05,1/252,");
  CHECK(row.rfind("0.05,1/252,234.6977,239.4463,", 0) == 0);

  const RunConfig iv = cfg_from(std::string(kVg1) + "k = 0.2\nt = 1/252, 5/252\n", "iv-errors");
  const std::string out = run_command(iv, 1).output;
  CHECK(out.find("summary,0.2,sigma_tilde_1,") != std::string::npos);
  CHECK(out.find("summary,0.2,sigma_tilde_2,") != std::string::npos);
}

TEST_CASE("order 1 drops the second-order column") {
  RunConfig c = cfg_from(std::string(kVg1) + "k = 0.05\nt = 1/252\norder = 1\n", "table");
  const std::string out = without_comments(run_command(c, 1).output);
  CHECK(out.find("second") == std::string::npos);
  CHECK(out.find("first") != std::string::npos);
  CHECK(out.find("ift[t=1/252]") != std::string::npos);
}
