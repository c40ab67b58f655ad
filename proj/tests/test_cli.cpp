#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

using Catch::Approx;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QHD_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
  const int status = pclose(f);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

std::vector<std::vector<double>> data_rows(const std::string& s) {
  std::vector<std::vector<double>> rows;
  for (const std::string& l : lines(s)) {
    if (l.empty() || l[0] == '#' || !(std::isdigit(l[0]) || l[0] == '-')) continue;
    std::vector<double> row;
    std::istringstream is(l);
    for (std::string c; std::getline(is, c, ',');) row.push_back(std::stod(c));
    rows.push_back(row);
  }
  return rows;
}

std::string tmp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("qhd_cli_test_" + name)).string();
}

}  // namespace

TEST_CASE("sweep: figure one preset") {
  Run r = run("sweep-dispersion --figure 1 --steps 200");
  REQUIRE(r.code == 0);
  std::vector<std::string> ls = lines(r.out);
  CHECK(ls[0].rfind("# qhd_cli sweep-dispersion", 0) == 0);
  CHECK(ls[1] == "grid_value,var_x_mus,var_p_mus,var_x_def,var_p_def,product_def,srur_bound,validity_flag");
  CHECK(data_rows(r.out).size() == 200);

  // an odd grid puts phi = pi/2 on a node
  auto rows = data_rows(run("sweep-dispersion --figure 1 --steps 201").out);
  REQUIRE(rows.size() == 201);
  CHECK(rows[100][0] == Approx(M_PI / 2));
  CHECK(std::abs(rows[100][1] - 0.8333) < 1e-3);
  CHECK(std::abs(rows[100][2] - 0.8333) < 1e-3);
  for (const auto& row : rows) {
    CHECK(row[5] == Approx(row[3] * row[4]).epsilon(1e-12));
    CHECK(row[7] == 1);
  }
}

TEST_CASE("sweep: minimal grid and determinism") {
  Run a = run("sweep-dispersion --steps 2 --z 0.001");
  REQUIRE(a.code == 0);
  CHECK(lines(a.out).size() == 4);
  CHECK(data_rows(a.out).size() == 2);
  CHECK(run("sweep-dispersion --steps 2 --z 0.001").out == a.out);
  Run j1 = run("sweep-dispersion --figure 3 --steps 7 --format json");
  CHECK(run("sweep-dispersion --figure 3 --steps 7 --format json").out == j1.out);
}

TEST_CASE("sweep: figure two files decrease with p") {
  std::vector<std::vector<std::vector<double>>> per_p;
  for (const char* p : {"0", "0.06", "0.11"}) {
    const std::string path = tmp_path(std::string("fig2_") + p + ".csv");
    REQUIRE(run(std::string("sweep-dispersion --figure 2 --p ") + p + " --out " + path).code == 0);
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    per_p.push_back(data_rows(ss.str()));
    std::filesystem::remove(path);
  }
  REQUIRE(per_p[0].size() == 73);
  for (std::size_t i = 0; i < per_p[0].size(); ++i) {
    INFO("phi = " << per_p[0][i][0]);
    CHECK(per_p[1][i][5] < per_p[0][i][5]);
    CHECK(per_p[2][i][5] < per_p[1][i][5]);
  }
}

TEST_CASE("sweep: json mirrors csv") {
  Run c = run("sweep-dispersion --figure 3 --steps 5");
  Run j = run("sweep-dispersion --figure 3 --steps 5 --format json");
  REQUIRE(c.code == 0);
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  auto rows = data_rows(c.out);
  REQUIRE(doc["rows"].size() == rows.size());
  const std::vector<std::string> cols = doc["columns"];
  CHECK(cols.size() == 8);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < cols.size(); ++k) CHECK(doc["rows"][i][cols[k]].get<double>() == rows[i][k]);
  CHECK(doc["meta"]["z"].get<double>() == 0.0025);
  CHECK(doc["meta"]["var"] == "delta");
}

TEST_CASE("sweep: all-order method") {
  auto first = data_rows(run("sweep-dispersion --steps 3 --z 0.001").out);
  Run r = run("sweep-dispersion --steps 3 --z 0.001 --method all-order --dim 128 --tol 1e-12");
  REQUIRE(r.code == 0);
  auto all = data_rows(r.out);
  REQUIRE(all.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(all[i][3] - first[i][3]) < 1e-3);
  CHECK(run("sweep-dispersion --steps 3 --z 0.001 --p 0.1 --method all-order").code == 2);
}

TEST_CASE("state: coefficients and diagnostics") {
  Run r = run("state --delta 0 --beta 1 --theta 0 --z 0 --dim 32");
  REQUIRE(r.code == 0);
  auto rows = data_rows(r.out);
  REQUIRE(rows.size() == 32);
  double sum = 0, fact = 1;
  for (std::size_t n = 0; n < rows.size(); ++n) {
    if (n > 0) fact *= double(n);
    CHECK(rows[n][3] == Approx(std::exp(-1.0) / fact).epsilon(1e-12));
    sum += rows[n][3];
  }
  CHECK(std::abs(sum - 1) < 1e-10);
  CHECK(r.out.find("# C0 = ") != std::string::npos);
  CHECK(r.out.find("# tail_estimate = ") != std::string::npos);

  for (const char* z : {"0.01", "0.05"}) {
    auto c = data_rows(run(std::string("state --delta 0.3 --phi 0.4 --beta 1.5 --theta -0.7 --z ") + z).out);
    const std::complex<double> ratio = std::complex<double>(c[1][1], c[1][2]) / std::complex<double>(c[0][1], c[0][2]);
    CHECK(std::abs(ratio - std::polar(1.5, -0.7)) < 1e-12);
    double s = 0;
    for (const auto& row : c) s += row[3];
    CHECK(std::abs(s - 1) < 1e-10);
  }
}

TEST_CASE("verify: suites and exit codes") {
  Run ok = run("verify");
  CHECK(ok.code == 0);
  auto doc = nlohmann::json::parse(ok.out);
  CHECK(doc["passed"] == true);
  CHECK(doc["checks"].size() >= 12);

  Run small = run("verify --dim 8");
  CHECK(small.code == 1);
  auto sd = nlohmann::json::parse(small.out);
  bool tail_reported = false;
  for (const auto& c : sd["checks"])
    if (c.contains("error") && c["error"].get<std::string>().find("TailTooHeavy") != std::string::npos)
      tail_reported = true;
  CHECK(tail_reported);

  Run pg = run("verify --suite paragrassmann");
  CHECK(pg.code == 0);
  for (const auto& c : nlohmann::json::parse(pg.out)["checks"]) CHECK(c["suite"] == "paragrassmann");
  CHECK(run("verify --suite nonsense").code == 2);
}

TEST_CASE("spectrum") {
  auto rows_of = [](const std::string& out, const std::string& op) {
    std::vector<std::vector<double>> v;
    for (const std::string& l : lines(out))
      if (l.rfind(op + ",", 0) == 0) {
        std::vector<double> row;
        std::istringstream is(l.substr(op.size() + 1));
        for (std::string c; std::getline(is, c, ',');) row.push_back(std::stod(c));
        v.push_back(row);
      }
    return v;
  };
  Run zero = run("spectrum --delta 0 --z 0 --dim 48");
  REQUIRE(zero.code == 0);
  for (const auto& row : rows_of(zero.out, "H")) CHECK(row[1] == row[0]);
  for (const auto& row : rows_of(zero.out, "H_tilde")) CHECK(row[3] == 0);

  Run r = run("spectrum --delta 0.2 --phi 0 --z 0.02 --dim 48");
  REQUIRE(r.code == 0);
  auto h = rows_of(r.out, "H"), ht = rows_of(r.out, "H_tilde");
  CHECK(h.size() == 48);
  CHECK(ht.size() == 36);
  for (const auto& row : h) CHECK(row[3] < 1e-6);
  for (const auto& row : ht) CHECK(row[3] < 1e-5);
  CHECK(r.out.find("# eta_condition = ") != std::string::npos);

  CHECK(run("spectrum --delta 0.2 --z 0.02 --dim 48 --max-cond 100").code == 4);
}

TEST_CASE("usage and convergence errors") {
  CHECK(run("").code == 2);
  CHECK(run("sweep-dispersion --bogus 1").code == 2);
  CHECK(run("sweep-dispersion --steps 1").code == 2);
  CHECK(run("sweep-dispersion --min 1 --max 0").code == 2);
  CHECK(run("sweep-dispersion --format xml").code == 2);
  CHECK(run("state --dim 4").code == 2);
  CHECK(run("sweep-dispersion --delta 1.5 --var phi").code == 2);

  const std::string path = tmp_path("no_partial.csv");
  std::filesystem::remove(path);
  CHECK(run("state --delta 0 --beta 1 --z 0 --dim 16 --out " + path).code == 3);
  CHECK_FALSE(std::filesystem::exists(path));
  CHECK(run("sweep-dispersion --method all-order --z 0.2 --steps 3 --dim 16 --out " + path).code == 3);
  CHECK_FALSE(std::filesystem::exists(path));
}
