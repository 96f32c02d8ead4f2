#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "doctest.h"
#include "expmde/errors.hpp"
#include "json.hpp"
#include "mmio.hpp"

using namespace expmde;
using namespace expmde::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("expmde_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

struct RunResult {
  int code;
  std::string out, err;
};

RunResult invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "expmde");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string first_line(const std::string& path) {
  std::ifstream f(path);
  std::string line;
  std::getline(f, line);
  return line;
}

std::size_t line_count(const std::string& path) {
  const auto s = slurp(path);
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

ComplexMatrix read_text(const std::string& text) {
  std::istringstream in(text);
  return read_matrix_market(in, "mem");
}

}  // namespace

TEST_CASE("Matrix Market array round trip is exact") {
  const auto m = ComplexMatrix::from_column_major(
      2, 3, {cplx(0.1, -1e-300), cplx(1.0 / 3.0, 2.0), cplx(-7, 0), cplx(1e308, 5e-324), cplx(0.0, 0.0),
             cplx(std::nextafter(1.0, 2.0), -0.0)});
  std::ostringstream out;
  write_matrix_market_array(out, m);
  CHECK(out.str().rfind("%%MatrixMarket matrix array complex general", 0) == 0);
  CHECK(read_text(out.str()) == m);
}

TEST_CASE("coordinate writer uses the real field when possible") {
  auto m = ComplexMatrix(3, 3);
  m(0, 0) = 2.5;
  m(2, 1) = -1.0;
  std::ostringstream out;
  write_matrix_market_coordinate(out, m);
  CHECK(out.str().rfind("%%MatrixMarket matrix coordinate real general", 0) == 0);
  CHECK(read_text(out.str()) == m);

  m(1, 2) = cplx(0, 1);
  std::ostringstream out2;
  write_matrix_market_coordinate(out2, m);
  CHECK(out2.str().find("complex") != std::string::npos);
  CHECK(read_text(out2.str()) == m);
}

TEST_CASE("reader expands symmetric storage") {
  const auto sym = read_text(
      "%%MatrixMarket matrix coordinate real symmetric\n% comment\n3 3 2\n1 1 4\n3 1 -2\n");
  CHECK(sym(0, 2) == cplx(-2.0));
  CHECK(sym(2, 0) == cplx(-2.0));
  CHECK(sym(1, 1) == cplx(0.0));

  const auto herm = read_text("%%MatrixMarket matrix coordinate complex hermitian\n2 2 2\n1 1 1 0\n2 1 3 4\n");
  CHECK(herm(1, 0) == cplx(3, 4));
  CHECK(herm(0, 1) == cplx(3, -4));

  const auto skew = read_text("%%MatrixMarket matrix array real skew-symmetric\n2 2\n5\n");
  CHECK(skew(1, 0) == cplx(5.0));
  CHECK(skew(0, 1) == cplx(-5.0));

  const auto integer = read_text("%%MatrixMarket matrix array integer general\n1 2\n3\n-4\n");
  CHECK(integer(0, 1) == cplx(-4.0));
}

TEST_CASE("malformed input reports the line") {
  auto message = [](const std::string& text) {
    try {
      read_text(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("%%MatrixMarket vector array real general\n").find("mem:1:") == 0);
  CHECK(message("%%MatrixMarket matrix array real general\n2 2\n1\n2\nx\n4\n").find("mem:5:") == 0);
  CHECK(message("%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1.0\n").find("mem:3:") == 0);
  CHECK(message("%%MatrixMarket matrix array real general\n2 2\n1\n2\n").find("mem:") == 0);
  CHECK(message("").find("mem:") == 0);
}

TEST_CASE("real list parsing") {
  CHECK(parse_real_list("1,2.5,-3") == std::vector<double>{1, 2.5, -3});
  const auto r = parse_real_list("-1:1:0.5");
  REQUIRE(r.size() == 5);
  CHECK(r.back() == doctest::Approx(1.0));
  CHECK(parse_real_list("1e-4,1e-6").size() == 2);
  CHECK_THROWS(parse_real_list(""));
  CHECK_THROWS(parse_real_list("1,x"));
  CHECK_THROWS(parse_real_list("0:1:0"));
}

TEST_CASE("expm subcommand") {
  TempDir dir;
  {
    std::ofstream f(dir / "a.mtx");
    f << "%%MatrixMarket matrix array real general\n2 2\n-1\n-10\n10\n-1\n";
  }
  auto r = invoke({"expm", dir / "a.mtx", "--h", "0.0125", "--out", dir / "x.mtx"});
  REQUIRE(r.code == kExitOk);
  const auto x = read_matrix_market_file(dir / "x.mtx");
  CHECK(std::abs(x(0, 0) - std::cos(10.0) * std::exp(-1.0)) <= 1e-12);
  CHECK(fs::exists(dir / "x.mtx.manifest.json"));
  const auto meta = nlohmann::json::parse(first_line(dir / "x.mtx.meta.jsonl"));
  CHECK(meta["command"] == "expm");
  CHECK(meta.contains("nodes"));

  r = invoke({"expm", dir / "a.mtx", "--auto", "--eps", "1e-8", "--out", dir / "y.mtx"});
  CHECK(r.code == kExitOk);
  CHECK(nlohmann::json::parse(first_line(dir / "y.mtx.meta.jsonl")).contains("auto"));

  CHECK(invoke({"expm", dir / "missing.mtx", "--out", dir / "z.mtx"}).code == kExitInput);
  CHECK(invoke({"expm", dir / "a.mtx", "--h", "-1", "--out", dir / "z.mtx"}).code == kExitInput);
  CHECK(invoke({"expm", dir / "a.mtx", "--mode", "sideways", "--out", dir / "z.mtx"}).code == kExitInput);

  {
    std::ofstream f(dir / "big.mtx");
    f << "%%MatrixMarket matrix array real general\n2 2\n800\n0\n0\n799\n";
  }
  // Shifting to σ and rescaling by e^{800+2.5} overflows double.
  r = invoke({"expm", dir / "big.mtx", "--out", dir / "big_x.mtx"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("warning") != std::string::npos);

  {
    std::ofstream f(dir / "sing.mtx");
    f << "%%MatrixMarket matrix array real general\n1 1\n0\n";
  }
  CHECK(invoke({"expm", dir / "sing.mtx", "--out", dir / "s.mtx", "--sigma", "1"}).code == kExitInput);
}

TEST_CASE("generators and experiment subcommands") {
  TempDir dir;
  REQUIRE(invoke({"gen-matrix", "--kind", "convdiff", "--grid-n", "20", "--out", dir / "cd.mtx"}).code == kExitOk);
  CHECK(first_line(dir / "cd.mtx") == "%%MatrixMarket matrix coordinate real general");
  const auto cd = read_matrix_market_file(dir / "cd.mtx");
  CHECK(cd.rows() == 400);
  CHECK(invoke({"gen-matrix", "--kind", "a1", "--n", "6", "--out", dir / "a1.mtx"}).code == kExitOk);
  CHECK(read_matrix_market_file(dir / "a1.mtx").rows() == 6);
  CHECK(invoke({"gen-matrix", "--kind", "bogus", "--out", dir / "b.mtx"}).code == kExitInput);

  const std::vector<std::string> map_args = {"scalar-map", "--h", "0.1", "--re-range=-10,-1", "--im-range=-5,5",
                                             "--grid", "5,5", "--out"};
  auto args = map_args;
  args.push_back(dir / "map.csv");
  REQUIRE(invoke(args).code == kExitOk);
  CHECK(first_line(dir / "map.csv") == "re,im,h,abs_error");
  CHECK(line_count(dir / "map.csv") == 26);
  args.back() = dir / "map2.csv";
  REQUIRE(invoke(args).code == kExitOk);
  CHECK(slurp(dir / "map.csv") == slurp(dir / "map2.csv"));

  REQUIRE(invoke({"shift-sweep", "--matrix", "a1", "--n", "8", "--sigmas", "-3,-1", "--out", dir / "sw.csv"}).code ==
          kExitOk);
  CHECK(first_line(dir / "sw.csv") == "sigma,rel_error_2norm");
  CHECK(line_count(dir / "sw.csv") == 3);

  REQUIRE(invoke({"autoquad", "--matrix", "a1", "--n", "8", "--eps-list", "1e-6", "--out", dir / "aq.csv"}).code ==
          kExitOk);
  CHECK(first_line(dir / "aq.csv") == "eps_target,eps_measured,final_h,rounds");
  CHECK(first_line(dir / "aq.csv.trace.csv") == "eps_target,h,inv_h,err_measured,err_predicted");

  REQUIRE(invoke({"compare", "--grid-n", "4", "--methods", "de", "--h", "0.1", "--out", dir / "cmp.csv"}).code ==
          kExitOk);
  const auto cmp = slurp(dir / "cmp.csv");
  CHECK(cmp.rfind("method,nodes,rel_error\n", 0) == 0);
  CHECK(cmp.find("talbot") == std::string::npos);
  CHECK(cmp.find("de,") != std::string::npos);
  CHECK(fs::exists(dir / "cmp.csv.manifest.json"));
  CHECK(invoke({"compare", "--methods", "cheb", "--out", dir / "c2.csv"}).code == kExitInput);
  CHECK(invoke({"no-such-command"}).code == kExitInput);
}
