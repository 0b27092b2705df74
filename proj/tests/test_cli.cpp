#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "figures.hpp"
#include "selfcheck.hpp"

using namespace frechet::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path temp_csv(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("frechet_cli_" + name + ".csv");
}

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string* header) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  if (header) *header = line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("laplace subcommand") {
  const auto r = call({"laplace", "--l", "1", "--k", "1", "--p", "1"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("method: meijerg") != std::string::npos);
  CHECK(r.out.find("value: 0.2797317636330") != std::string::npos);
  CHECK(r.out.find("converged: true") != std::string::npos);

  const auto both = call({"laplace", "--l", "2", "--k", "3", "--p", "1", "--method", "both"});
  CHECK(both.code == kOk);
  CHECK(both.out.find("method: quadrature") != std::string::npos);
  CHECK(both.out.find("relative_difference: ") != std::string::npos);

  const auto q = call({"laplace", "--l", "1", "--k", "2", "--p", "0.8", "--method", "quad"});
  CHECK(q.code == kOk);
  CHECK(q.out.find("value: 0.32701322221564") != std::string::npos);

  const auto tiny = call({"laplace", "--l", "1", "--k", "2", "--p", "1e-9"});
  CHECK(tiny.out.find("method: quadrature") != std::string::npos);
}

TEST_CASE("laplace subcommand rejects bad input") {
  CHECK(call({"laplace", "--l", "1", "--k", "1", "--p", "0"}).code == kUsage);
  CHECK(call({"laplace", "--l", "1", "--k", "1", "--p", "-2"}).code == kUsage);
  CHECK(call({"laplace", "--l", "0", "--k", "1", "--p", "1"}).code == kUsage);
  CHECK(call({"laplace", "--l", "1", "--k", "-3", "--p", "1"}).code == kUsage);
  CHECK(call({"laplace", "--l", "1", "--k", "1", "--p", "abc"}).code == kUsage);
  CHECK(call({"laplace", "--l", "1", "--k", "1", "--p", "1", "--method", "x"}).code == kUsage);
  CHECK(call({"laplace", "--l", "1", "--p", "1"}).code == kUsage);
  CHECK(call({}).code == kUsage);
  CHECK(call({"bogus"}).code == kUsage);
  const auto zero = call({"laplace", "--l", "1", "--k", "1", "--p", "0"});
  CHECK(zero.err.find("p must be positive") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  const auto r = call({"--help"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("laplace") != std::string::npos);
}

TEST_CASE("moment subcommand") {
  const auto r = call({"moment", "frechet", "--gamma", "2", "--mu", "1"});
  CHECK(r.code == kOk);
  CHECK(std::stod(r.out) == doctest::Approx(1.7724538509055159).epsilon(1e-14));
  const auto bad = call({"moment", "frechet", "--gamma", "1", "--mu", "1"});
  CHECK(bad.code == kUsage);
  CHECK(bad.err.find("valid range: -inf < mu < gamma") != std::string::npos);
  const auto levy = call({"moment", "levy", "--alpha", "0.5", "--mu", "0.6"});
  CHECK(levy.code == kUsage);
  CHECK(levy.err.find("mu < alpha") != std::string::npos);
  CHECK(call({"moment", "gauss", "--gamma", "1", "--mu", "0.5"}).code == kUsage);
}

TEST_CASE("transform subcommand") {
  const auto r = call({"transform", "levy", "--gamma", "1", "--alpha", "0.5", "--x", "1"});
  CHECK(r.code == kOk);
  CHECK(std::stod(r.out) == doctest::Approx(0.18393972058572117).epsilon(1e-15));
  const auto h = call({"transform", "frechet-half", "--gamma", "1", "--x", "1"});
  CHECK(h.code == kOk);
  CHECK(h.out.find("value: 0.1500459645051") != std::string::npos);
  const auto k = call({"transform", "kernel", "--gamma", "1", "--x", "1", "--t", "1"});
  CHECK(std::stod(k.out) == doctest::Approx(0.36787944117144233).epsilon(1e-15));
  CHECK(call({"transform", "levy", "--gamma", "1", "--alpha", "1.5", "--x", "1"}).code == kUsage);
  CHECK(call({"transform", "nope", "--gamma", "1", "--x", "1"}).code == kUsage);
}

TEST_CASE("figure subcommand writes deterministic CSV") {
  for (const std::string id : {"fig1", "fig2", "fig3", "fig4"}) {
    const auto a = temp_csv(id + "_a"), b = temp_csv(id + "_b");
    CHECK(call({"figure", "--id", id, "--output", a.string(), "--points", "40"}).code == kOk);
    CHECK(call({"figure", "--id", id, "--output", b.string(), "--points", "40"}).code == kOk);
    const std::string ta = slurp(a);
    CHECK(ta == slurp(b));
    CHECK(ta.find('\r') == std::string::npos);
    const auto rows = parse_csv(ta, nullptr);
    CHECK(rows.size() == 40);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
  }
  CHECK(call({"figure", "--id", "fig9", "--output", temp_csv("x").string()}).code == kUsage);
  CHECK(call({"figure", "--id", "fig1", "--output", temp_csv("x").string(), "--points", "1"})
            .code == kUsage);
  CHECK(call({"figure", "--id", "fig1", "--output", "/nonexistent-dir/out.csv", "--points", "5"})
            .code == kIoError);
}

namespace {

std::vector<std::vector<double>> fig1_rows(std::string* header) {
  const auto p = temp_csv("fig1");
  call({"figure", "--id", "fig1", "--output", p.string(), "--points", "50"});
  auto rows = parse_csv(slurp(p), header);
  std::filesystem::remove(p);
  return rows;
}

}  // namespace

TEST_CASE("fig1 grid, ordering and monotone columns") {
  std::string header;
  const auto rows = fig1_rows(&header);
  CHECK(header == "p,L_l1_k4,L_l2_k4,L_l3_k4,L_l4_k4");
  REQUIRE(rows.size() == 50);
  CHECK(rows.front()[0] == doctest::Approx(0.01));
  CHECK(rows.back()[0] == doctest::Approx(10.0));
  // Heavier tails (smaller l) leave 1 faster: 1 - L ~ Gamma(1 - l/4) p^{l/4}.
  for (std::size_t c = 2; c < rows.front().size(); ++c) CHECK(rows.front()[c] > rows.front()[c - 1]);
  for (std::size_t c = 1; c < rows.front().size(); ++c) {
    for (const auto& row : rows) {
      CHECK(row[c] > 0.0);
      CHECK(row[c] <= 1.0);
    }
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][c] < rows[i - 1][c]);
  }
}

TEST_CASE("fig1 first row within 0.2 of 1") {
  const auto rows = fig1_rows(nullptr);
  REQUIRE_FALSE(rows.empty());
  for (std::size_t c = 1; c < rows.front().size(); ++c) {
    CAPTURE(c);
    CHECK(std::abs(rows.front()[c] - 1.0) < 0.2);
  }
}

TEST_CASE("fig3 has a single interior maximum") {
  const auto data = make_figure(FigureId::Fig3, 200);
  std::size_t peak = 0;
  for (std::size_t i = 0; i < data.rows.size(); ++i)
    if (data.rows[i][1] > data.rows[peak][1]) peak = i;
  CHECK(peak > 0);
  CHECK(peak + 1 < data.rows.size());
  for (std::size_t i = 1; i <= peak; ++i) CHECK(data.rows[i][1] > data.rows[i - 1][1]);
  for (std::size_t i = peak + 1; i < data.rows.size(); ++i)
    CHECK(data.rows[i][1] < data.rows[i - 1][1]);
}

TEST_CASE("fig4 reduced curves peak at 1 and gamma = 1/3 tracks its asymptote closer") {
  const auto data = make_figure(FigureId::Fig4, 300);
  REQUIRE(data.header.size() == 5);
  double gap1 = 0.0, gap3 = 0.0;
  for (const auto& row : data.rows) {
    for (std::size_t c = 1; c < 5; ++c) {
      CHECK(row[c] >= 0.0);
      CHECK(row[c] <= 1.0 + 1e-9);
    }
    gap1 = std::max(gap1, std::abs(row[1] - row[2]));
    gap3 = std::max(gap3, std::abs(row[3] - row[4]));
  }
  CHECK(gap3 < gap1);
}

TEST_CASE("selfcheck subcommand") {
  const auto list = call({"selfcheck", "--list"});
  CHECK(list.code == kOk);
  std::size_t lines = 0;
  for (char c : list.out) lines += c == '\n';
  CHECK(lines == selfcheck_suite().size());
  CHECK(lines >= 12);

  const auto strict = call({"selfcheck", "--profile", "strict"});
  CHECK(strict.code == kOk);
  CHECK(strict.out.find("profile strict") != std::string::npos);
  CHECK(strict.out.find("FAIL") == std::string::npos);

  setenv("FRECHET_LAPLACE_PROFILE", "strict", 1);
  CHECK(call({"selfcheck"}).out.find("profile strict") != std::string::npos);
  CHECK(call({"selfcheck", "--profile", "default"}).out.find("profile default") !=
        std::string::npos);
  setenv("FRECHET_LAPLACE_PROFILE", "bogus", 1);
  CHECK(call({"selfcheck"}).code == kUsage);
  unsetenv("FRECHET_LAPLACE_PROFILE");
  CHECK(call({"selfcheck", "--profile", "loose"}).code == kUsage);

  CHECK(find_profile("default")->cross_path_tol == 1e-8);
  CHECK(find_profile("strict")->cross_path_tol == 1e-9);
  CHECK_FALSE(find_profile("other"));
}

TEST_CASE("format_real round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 2.718281828459045, 1e-300, 6.02e23}) {
    CHECK(std::stod(format_real(v)) == v);
  }
}
