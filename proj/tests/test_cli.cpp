#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <locale>
#include <sstream>

#include "ramified/cli.hpp"
#include "support.hpp"

using ramified::testing::rel_err;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = ramified::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text, bool keep_comments = false) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!keep_comments && !line.empty() && line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("zeta command", "[cli]") {
  const auto r = invoke({"zeta", "--l", "3", "--s", "1"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0][0] == "l");
  CHECK(rows[1][3] == "0.666666666667");
  CHECK(invoke({"zeta", "--l", "3", "--s", "0.8154648767857287"}).code == 2);
  CHECK(invoke({"zeta", "--l", "3", "--s", "0.8154648767857287"}).out.empty());
}

TEST_CASE("poles command", "[cli]") {
  const auto r = invoke({"poles", "--l", "3", "--n-max", "3"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[2][1] == "1");
  CHECK(rows[2][3].rfind("2.859600867", 0) == 0);
  CHECK(rows[1][4] == "2");
  CHECK(rows[1][5] == "0");
}

TEST_CASE("scan command", "[cli]") {
  const auto r = invoke({"scan", "--l-min", "3", "--l-max", "1000", "--log-steps", "40"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 41);
  CHECK(rows[1][0] == "3");
  CHECK(rows[40][0] == "1000");
  for (std::size_t i = 2; i < rows.size(); ++i) {
    CHECK(std::stoi(rows[i][0]) > std::stoi(rows[i - 1][0]));
    CHECK(std::stod(rows[i][2]) > std::stod(rows[i - 1][2]));
  }
  CHECK(r.out.find("# asymptote,1.27855519045\n") != std::string::npos);

  const auto bad = invoke({"scan", "--l-min", "2"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("l >= 3") != std::string::npos);
  CHECK(invoke({"scan", "--l-min", "3", "--l-max", "5", "--log-steps", "10"}).code == 2);
  CHECK(invoke({"scan", "--l-max", "200000000"}).code == 2);
}

TEST_CASE("scan log grid is dense at the bottom", "[cli]") {
  const auto rows = parse_csv(invoke({"scan", "--l-min", "3", "--l-max", "10", "--log-steps", "8"}).out);
  REQUIRE(rows.size() == 9);
  for (int i = 1; i <= 8; ++i) CHECK(rows[i][0] == std::to_string(i + 2));
}

TEST_CASE("corrections command", "[cli]") {
  const auto r = invoke({"corrections", "--l-min", "3", "--l-max", "200", "--n", "1,2,3,4"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 1 + 198 * 4);
  double peak_c[5] = {}, peak_s[5] = {};
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const int n = std::stoi(rows[i][1]);
    peak_c[n] = std::max(peak_c[n], std::fabs(std::stod(rows[i][2])));
    peak_s[n] = std::max(peak_s[n], std::fabs(std::stod(rows[i][3])));
  }
  for (int n = 1; n < 4; ++n) {
    CHECK(peak_c[n + 1] < peak_c[n]);
    CHECK(peak_s[n + 1] < peak_s[n]);
  }
  CHECK(invoke({"corrections", "--n", "0"}).code == 2);
  CHECK(invoke({"corrections", "--n", "1,-2"}).code == 2);
}

TEST_CASE("corrections verify columns", "[cli]") {
  const auto r = invoke({"corrections", "--l-min", "3", "--l-max", "12", "--n", "1", "--verify"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows[0].size() == 6);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rel_err(std::stod(rows[i][4]), std::stod(rows[i][2])) < 1e-6);
    CHECK(rel_err(std::stod(rows[i][5]), std::stod(rows[i][3])) < 1e-6);
  }
}

TEST_CASE("heat command", "[cli]") {
  const auto r = invoke({"heat", "--l", "3", "--t-min", "1e-5", "--t-max", "1e-2", "--points", "16"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 17);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::stod(rows[i][3]) <= 1e-6);

  const auto tiny = parse_csv(invoke({"heat", "--l", "3", "--t-min", "1e-12", "--points", "4"}).out);
  CHECK(tiny[1][1] == "refused");
  CHECK(std::stod(tiny[1][2]) > 0.0);

  const auto dec = invoke({"heat", "--l", "3", "--t-min", "1e-3", "--t-max", "1", "--check-decimation"});
  REQUIRE(dec.code == 0);
  for (const auto& row : parse_csv(dec.out)) {
    if (row[0] == "t") continue;
    CHECK(std::stod(row[5]) <= 1e-12);
  }
  CHECK(invoke({"heat", "--t-min", "-1"}).code == 2);
  CHECK(invoke({"heat", "--format", "svg"}).code == 2);
}

TEST_CASE("entropy command", "[cli]") {
  const auto r = invoke({"entropy", "--l", "3", "--epsilon", "0.1", "--n-max", "4", "--convention", "paper"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 2);
  const double leading = std::stod(rows[1][4]);
  const double sum = std::stod(rows[1][6]);
  const double total = std::stod(rows[1][7]);
  CHECK(rel_err(leading, 4.6677572027337936) < 1e-11);
  CHECK(std::fabs(total - leading) <= std::fabs(sum) * leading * (1 + 1e-9));

  const auto replica = parse_csv(invoke({"entropy", "--convention", "replica"}).out);
  CHECK(rel_err(6.0 * std::stod(replica[1][4]), leading) < 1e-11);

  const auto detail = parse_csv(invoke({"entropy", "--l", "3,5", "--epsilon", "0.1,0.05", "--detail"}).out);
  CHECK(detail.size() == 1 + 2 * 2 * 4);
  CHECK(invoke({"entropy", "--convention", "other"}).code == 2);
  CHECK(invoke({"entropy", "--epsilon", "0"}).code == 2);
}

TEST_CASE("svg output", "[cli]") {
  const auto scan = invoke({"scan", "--l-max", "50", "--format", "svg"});
  REQUIRE(scan.code == 0);
  CHECK(scan.out.find("<svg") != std::string::npos);
  CHECK(scan.out.find("stroke-dasharray") != std::string::npos);
  const auto corr = invoke({"corrections", "--l-max", "30", "--format", "svg"});
  REQUIRE(corr.code == 0);
  for (int n = 1; n <= 4; ++n) CHECK(corr.out.find(">n=" + std::to_string(n) + "<") != std::string::npos);
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"bogus"}).code == 2);
  CHECK(invoke({"scan", "--unknown"}).code == 2);
  CHECK(invoke({"scan", "--l-min", "abc"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"corrections", "--l-max", "3", "--n", "1", "--verify", "--epsilon", "1e-300"}).code == 1);
}

TEST_CASE("output file", "[cli]") {
  const std::string path = "cli_output_test.csv";
  const auto r = invoke({"poles", "--l", "4", "--output", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == invoke({"poles", "--l", "4"}).out);
  std::remove(path.c_str());
  CHECK(invoke({"poles", "--output", "/nonexistent-dir/x.csv"}).code == 2);
}

TEST_CASE("byte-identical output", "[cli]") {
  const std::vector<std::vector<std::string>> commands = {
      {"scan", "--l-max", "300"},
      {"corrections", "--l-max", "60"},
      {"heat", "--l", "5", "--check-decimation"},
      {"entropy", "--l", "3,4,5", "--epsilon", "0.1,0.02"},
      {"poles", "--l", "3,7"},
      {"zeta", "--l", "3", "--s", "0.25,0.5,1.5", "--s-im", "0.5"},
  };
  for (const auto& c : commands) {
    const auto a = invoke(c);
    const auto b = invoke(c);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find('\r') == std::string::npos);
  }
  // a comma-decimal global locale must not leak into the tables
  try {
    const std::locale previous = std::locale::global(std::locale("de_DE.UTF-8"));
    const auto localized = invoke(commands[3]);
    std::locale::global(previous);
    CHECK(localized.out == invoke(commands[3]).out);
  } catch (const std::runtime_error&) {
    SUCCEED("de_DE locale not installed");
  }
}
