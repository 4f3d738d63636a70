#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "locoh/builtins.hpp"
#include "locoh/parse.hpp"
#include "locoh/presentation.hpp"

using namespace locoh;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args, const std::string& env = "") {
  const std::string err_path = "cli_test_stderr.txt";
  const std::string cmd = env + " " + LOCOH_CLI + " " + args + " 2>" + err_path;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return Run{WEXITSTATUS(status), out, slurp(err_path)};
}

std::vector<std::string> csv_column(const std::string& csv, std::size_t col) {
  std::vector<std::string> out;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::istringstream cells(line);
    std::string cell;
    for (std::size_t i = 0; i <= col; ++i) std::getline(cells, cell, ',');
    out.push_back(cell);
  }
  return out;
}

}  // namespace

TEST_CASE("present prints the tridiagonal matrix") {
  const auto r = run("present --s 2 --d 3 --ideal \"2*X^2*V^2+2*X*Y*U*V+Y^2*U^2\" --format json");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["entries"] == json::parse(R"([["2*X^2","2*X*Y","Y^2","0"],["0","2*X^2","2*X*Y","Y^2"]])"));
  CHECK(j["rowBasis"] == json::parse("[[-1,-2],[-2,-1]]"));
  CHECK(j["s"] == 2);
  CHECK(j["d"] == 3);
  CHECK(r.out.rfind("{\n  \"columnBlocks\"", 0) == 0);  // keys sorted
}

TEST_CASE("present on the linear form and on degrees below s") {
  const auto r = run("present --s 3 --d 3 --ideal \"X*U+Y*V+Z*W\" --format json");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["entries"] == json::parse(R"([["Z","Y","X"]])"));
  const auto low = run("present --s 3 --d 2 --ideal \"X*U+Y*V+Z*W\"");
  CHECK(low.code == 2);
  CHECK(low.err.find("component is zero above end -s") != std::string::npos);
}

TEST_CASE("built-in examples reproduce their presentations") {
  for (const auto& [name, ideal, s] : std::vector<std::tuple<std::string, std::string, int>>{
           {"singh", "X*U+Y*V+Z*W", 3}, {"section3", "2*X^2*V^2+2*X*Y*U*V+Y^2*U^2", 2}}) {
    const auto a = run("present --builtin " + name + " --d 3 --format json");
    const auto b = run("present --ideal \"" + ideal + "\" --s " + std::to_string(s) + " --d 3 --format json");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  const json singh = json::parse(run("present --builtin singh --d 3 --format json").out);
  CHECK(singh == json::parse(R"({"columnBlocks":[{"basis":[[-1,-1,-2],[-1,-2,-1],[-2,-1,-1]],"generator":0,
      "generatorDegree":1}],"d":3,"entries":[["Z","Y","X"]],"rowBasis":[[-1,-1,-1]],"s":3})"));
  const json sec3 = json::parse(run("present --builtin section3 --d 3 --format json").out);
  CHECK(sec3 == json::parse(R"({"columnBlocks":[{"basis":[[-1,-4],[-2,-3],[-3,-2],[-4,-1]],"generator":0,
      "generatorDegree":2}],"d":3,"entries":[["2*X^2","2*X*Y","Y^2","0"],["0","2*X^2","2*X*Y","Y^2"]],
      "rowBasis":[[-1,-2],[-2,-1]],"s":2})"));
}

TEST_CASE("hilbert tables on the command line") {
  const auto singh = run("hilbert --builtin singh --field q --dmin 3 --dmax 6 --format csv");
  REQUIRE(singh.code == 0);
  CHECK(singh.out.rfind("d,value,stabilized_at,notes\n", 0) == 0);
  CHECK(csv_column(singh.out, 1) == std::vector<std::string>{"1", "6", "20", "50"});
  const auto sec3 = run("hilbert --builtin section3 --field q --dmin 2 --dmax 6 --format csv");
  CHECK(csv_column(sec3.out, 1) == std::vector<std::string>{"3", "8", "16", "24", "35"});
  const auto table = run("hilbert --builtin singh --dmin 3 --dmax 4");
  CHECK(table.out.find("d  value  stabilized_at  notes") != std::string::npos);
  const auto f2 = run("hilbert --builtin singh --field p --p 2 --d 4 --format json");
  CHECK(json::parse(f2.out)["rows"][0]["value"] == 7);
}

TEST_CASE("fit, compare, tridiag, vanish, content") {
  const auto refute = run("fit --builtin section3 --dmin 2 --dmax 20");
  CHECK(refute.code == 0);
  CHECK(refute.out.find("NOT reverse polynomial type") != std::string::npos);
  const auto poly = run("fit --builtin singh --dmin 3 --dmax 10 --window 6 --format json");
  CHECK(json::parse(poly.out)["degree"] == 4);
  CHECK(json::parse(poly.out)["polynomial"] == "1/12*r^4 + 1/3*r^3 + 5/12*r^2 + 1/6*r");
  const auto cmp = json::parse(run("compare --p 2 --format json").out);
  CHECK(cmp["rows"].size() == 6);
  CHECK(cmp["rows"][1]["hp"] == 7);
  const auto tri = json::parse(run("tridiag --n 8 --format json").out);
  CHECK(tri["rows"][2]["delta"] == 0);
  CHECK(tri["rows"][4]["delta"] == -8);
  const auto van = json::parse(run("vanish --ideal \"U^2\" --field q --dmin 1 --dmax 3 --format json").out);
  CHECK(van["gapFree"] == "AllVanish");
  const auto content = json::parse(run("content --builtin remark16 --format json").out);
  CHECK(content["generators"] == json::parse(R"(["X","Y"])"));
  CHECK(content["isUnit"] == false);
  CHECK(content["isCofinite"] == true);
  CHECK(run("hilbert --builtin remark16 --d 2").code == 2);
}

TEST_CASE("exit codes") {
  const auto parse = run("present --s 1 --d 1 --ideal \"X*+U\"");
  CHECK(parse.code == 2);
  CHECK(parse.err.find("line 1, column") != std::string::npos);
  CHECK(run("hilbert --ideal \"X*U\" --m 2 --s 1 --dmin 1 --dmax 2").code == 3);
  CHECK(run("hilbert --builtin singh --d 3 --format xml").code == 2);
  CHECK(run("hilbert --builtin nope --d 3").code == 2);
  CHECK(run("hilbert --builtin singh --field p --d 3").code == 2);
  CHECK(run("hilbert --builtin singh --field p --p 6 --d 3").code == 2);
  CHECK(run("hilbert --builtin singh --dmin 2 --dmax 4").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("--help").code == 0);
  const auto capped = run("hilbert --builtin section3 --d 4", "LOCOH_MAX_DEGREE=2");
  CHECK(capped.code == 3);
  CHECK(capped.out.find("not certified") != std::string::npos);
  CHECK(run("hilbert --builtin section3 --d 4", "LOCOH_MAX_DEGREE=x").code == 2);
}

TEST_CASE("output to a file") {
  const std::string path = "cli_test_output.json";
  std::remove(path.c_str());
  const auto r = run("tridiag --n 3 --format json --output " + path);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(json::parse(slurp(path))["rows"].size() == 3);
}

TEST_CASE("printed polynomials re-parse to equal values") {
  const auto ideal = builtin_ideal("section3");
  for (int d = 2; d <= 5; ++d) {
    const json j = json::parse(run("present --builtin section3 --d " + std::to_string(d) + " --format json").out);
    const auto pm = presentation_matrix(ideal, d);
    for (std::size_t r = 0; r < pm.entries.rows(); ++r)
      for (std::size_t c = 0; c < pm.entries.cols(); ++c)
        CHECK(parse_coefficient(j["entries"][r][c].get<std::string>(), ideal.ring()) == pm.entries(r, c));
  }
  const auto content = json::parse(run("content --ideal \"1/2*X*U+3*Y^2*V-X*Y*U\" --format json").out);
  const CoefficientRing ring{ScalarDomain::rationals(), 2};
  const auto expected = parse_polynomial("1/2*X*U+3*Y^2*V-X*Y*U", ring, 2).content();
  REQUIRE(content["generators"].size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(parse_coefficient(content["generators"][i].get<std::string>(), ring) == expected[i]);
}
