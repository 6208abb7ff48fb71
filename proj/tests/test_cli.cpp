#include "doctest.h"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "exactpot/commands.hpp"
#include "exactpot/table_io.hpp"

using namespace exactpot;
namespace fs = std::filesystem;

namespace {

RunConfig acceptance_config(Command command) {
  RunConfig c;
  c.command = command;
  c.case_id = CaseId::case3;
  c.params = {-1.0, 4.5, 1.5, 2.0, 0.0};
  c.grid = {0.05, 10.0, 500};
  return c;
}

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run_captured(const RunConfig& c) {
  std::ostringstream out, err;
  const int status = run(c, out, err);
  return {status, out.str(), err.str()};
}

nlohmann::json run_json(RunConfig c) {
  c.format = OutputFormat::json;
  const Outcome o = run_captured(c);
  return nlohmann::json::parse(o.out);
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("exactpot-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Runs the installed binary; returns (exit status, stdout).
std::pair<int, std::string> shell(const std::string& args) {
  const std::string command = std::string(EXACTPOT_BINARY) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer{};
  while (const std::size_t n = std::fread(buffer.data(), 1, buffer.size(), pipe.get())) out.append(buffer.data(), n);
  const int raw = pclose(pipe.release());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

struct EnvGuard {
  explicit EnvGuard(const std::string& value) { setenv(kOutputDirEnv, value.c_str(), 1); }
  ~EnvGuard() { unsetenv(kOutputDirEnv); }
};

}  // namespace

TEST_CASE("complex literals") {
  CHECK(parse_complex("1.5") == Complex(1.5, 0));
  CHECK(parse_complex("-2") == Complex(-2, 0));
  CHECK(parse_complex("i") == Complex(0, 1));
  CHECK(parse_complex("-i") == Complex(0, -1));
  CHECK(parse_complex("2i") == Complex(0, 2));
  CHECK(parse_complex("0.5-1.5i") == Complex(0.5, -1.5));
  CHECK(parse_complex("1e-3+2e-1i") == Complex(1e-3, 0.2));
  CHECK(parse_complex(" 3+i ") == Complex(3, 1));
  CHECK_THROWS_AS(parse_complex(""), ValidationError);
  CHECK_THROWS_AS(parse_complex("abc"), ValidationError);
  CHECK_THROWS_AS(parse_complex("1+2j"), ValidationError);
}

TEST_CASE("number formatting round-trips") {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 5e-324}) {
    CHECK(std::strtod(format_number(x).c_str(), nullptr) == x);
  }
  CHECK(format_number(std::nan("")) == "nan");
}

TEST_CASE("verify on the acceptance model") {
  const Outcome o = run_captured(acceptance_config(Command::verify));
  CHECK(o.status == kExitOk);
  const nlohmann::json j = run_json(acceptance_config(Command::verify));
  bool saw_residual = false;
  for (const auto& row : j["rows"]) {
    if (row[0] == "residual") {
      saw_residual = true;
      CHECK(row[1].get<double>() <= 1e-10);
    }
    if (row[3] != "info") CHECK(row[3] == "pass");
  }
  CHECK(saw_residual);
}

TEST_CASE("verify flags a wrong table") {
  RunConfig c = acceptance_config(Command::verify);
  c.case_id = CaseId::case4;
  c.params = {0.4, 1.1, 0.7, 1.0, 0.5};
  c.grid = {-3.0, -1.0, 200};
  c.coefficients = CoefficientChoice::printed;
  CHECK(run_captured(c).status == kExitThreshold);
  c.coefficients = CoefficientChoice::corrected;
  CHECK(run_captured(c).status == kExitOk);
}

TEST_CASE("potential and wavefunction tables") {
  RunConfig c = acceptance_config(Command::potential);
  c.grid = {0.5, 2.0, 16};
  const nlohmann::json pot = run_json(c);
  CHECK(pot["columns"] == nlohmann::json({"r", "re_V", "im_V", "E"}));
  REQUIRE(pot["rows"].size() == 16);
  const auto& row = pot["rows"][3];
  const double r = row[0].get<double>();
  CHECK(row[1].get<double>() == doctest::Approx(-30.0 / std::pow(std::cosh(r), 2)).epsilon(1e-12));
  CHECK(row[3].get<double>() == doctest::Approx(-4.0));

  c.command = Command::wavefunction;
  const nlohmann::json wf = run_json(c);
  CHECK(wf["columns"] == nlohmann::json({"r", "re_psi", "im_psi", "residual"}));
  for (const auto& w : wf["rows"]) CHECK(w[3].get<double>() <= 1e-10);
}

TEST_CASE("spectrum contains E") {
  RunConfig c = acceptance_config(Command::spectrum);
  c.grid = {0.0, 12.0, 6000};
  c.count = 3;
  c.tolerance = 1e-3;
  const Outcome o = run_captured(c);
  CHECK(o.status == kExitOk);
  const nlohmann::json j = run_json(c);
  CHECK(j["meta"]["min_distance"].get<double>() <= 4e-3);
  CHECK(j["meta"]["nearest_interior_nodes"] == 1);

  c.tolerance = 1e-9;
  CHECK(run_captured(c).status == kExitThreshold);
}

TEST_CASE("audit adjudicates case 6") {
  RunConfig c;
  c.command = Command::audit;
  c.case_id = CaseId::case6;
  c.draws = 100;
  const nlohmann::json j = run_json(c);
  CHECK(j["meta"]["case 6"]["consistent_reading"] == "c2 without 1/4");
  CHECK(run_captured(c).status == kExitOk);
  c.case_id = CaseId::case4;
  c.draws = 10;
  CHECK(run_captured(c).status == kExitThreshold);
}

TEST_CASE("pt-check") {
  RunConfig c;
  c.command = Command::pt_check;
  c.case_id = CaseId::case2;
  c.params = {1.0, 2.0, 1.0, Complex(0, 1), 1.5707963267948966};
  const nlohmann::json j = run_json(c);
  CHECK(j["meta"]["max_scaled_defect"].get<double>() <= 1e-12);
  CHECK(j["meta"]["max_residual"].get<double>() <= 1e-10);
  CHECK(run_captured(c).status == kExitOk);

  c.params.c2 = 0.0;  // z stays on the cut
  CHECK(run_captured(c).status == kExitThreshold);
  c.params.c1 = 1.0;
  CHECK(run_captured(c).status == kExitValidation);
}

TEST_CASE("validation failures exit 2") {
  RunConfig c = acceptance_config(Command::potential);
  c.grid = {-1.0, 1.0, 100};  // crosses the singular point at 0
  const Outcome o = run_captured(c);
  CHECK(o.status == kExitValidation);
  CHECK(o.out.empty());
  CHECK(!o.err.empty());
  c.grid = {0.1, 1.0, 8};
  CHECK(run_captured(c).status == kExitValidation);
  c = acceptance_config(Command::verify);
  c.case_id.reset();
  CHECK(run_captured(c).status == kExitValidation);
  c = acceptance_config(Command::convert);
  c.input_path = "/nonexistent/table.json";
  CHECK(run_captured(c).status == kExitValidation);
}

TEST_CASE("json round trip is bit-exact") {
  const fs::path dir = scratch_dir("roundtrip");
  RunConfig c = acceptance_config(Command::wavefunction);
  c.format = OutputFormat::json;
  c.output_path = (dir / "wf.json").string();
  REQUIRE(run_captured(c).status == kExitOk);

  RunConfig back;
  back.command = Command::convert;
  back.input_path = *c.output_path;
  back.format = OutputFormat::json;
  back.output_path = (dir / "again.json").string();
  REQUIRE(run_captured(back).status == kExitOk);
  CHECK(slurp(dir / "wf.json") == slurp(dir / "again.json"));

  std::ifstream a(dir / "wf.json");
  const Table t = read_json(a);
  const nlohmann::json raw = nlohmann::json::parse(slurp(dir / "wf.json"));
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    for (std::size_t k = 0; k < t.rows[i].size(); ++k) {
      CHECK(std::get<double>(t.rows[i][k]) == raw["rows"][i][k].get<double>());
    }
  }

  // CSV from the re-read table matches CSV produced directly.
  back.format = OutputFormat::csv;
  back.output_path = (dir / "from-json.csv").string();
  c.format = OutputFormat::csv;
  c.output_path = (dir / "direct.csv").string();
  REQUIRE(run_captured(back).status == kExitOk);
  REQUIRE(run_captured(c).status == kExitOk);
  CHECK(slurp(dir / "from-json.csv") == slurp(dir / "direct.csv"));
}

TEST_CASE("identical configs give identical bytes") {
  RunConfig c;
  c.command = Command::audit;
  c.draws = 5;
  c.seed = 99;
  const Outcome a = run_captured(c);
  const Outcome b = run_captured(c);
  CHECK(a.out == b.out);
  c.seed = 100;
  CHECK(run_captured(c).out != a.out);
}

TEST_CASE("output directory from the environment") {
  const fs::path dir = scratch_dir("env");
  const EnvGuard guard(dir.string());
  RunConfig c = acceptance_config(Command::potential);
  const Outcome o = run_captured(c);
  REQUIRE(o.status == kExitOk);
  CHECK(o.out.empty());
  CHECK(fs::exists(dir / "potential-case3.csv"));
  c.output_path = "named.csv";
  run_captured(c);
  CHECK(fs::exists(dir / "named.csv"));
  c.output_path = "-";
  CHECK(!run_captured(c).out.empty());
  CHECK(resolve_output_path(std::string("/abs/x.csv"), "d.csv") == std::optional<std::string>("/abs/x.csv"));
}

TEST_CASE("the binary") {
  const auto [status, out] =
      shell("verify --case 3 --alpha -1 --beta 4.5 --gamma 1.5 --c1 2 --c2 0 --rmin 0.05 --rmax 10 --n 500");
  CHECK(status == 0);
  CHECK(out.find("residual") != std::string::npos);
  CHECK(shell("potential --case 3 --alpha -1 --beta 4.5 --gamma 1.5 --c1 2 --c2 0 --rmin -1 --rmax 1").first == 2);
  CHECK(shell("potential --case 9").first == 2);
  CHECK(shell("no-such-command").first == 2);
  const auto [pt_status, pt_out] = shell("pt-check --case 2 --alpha 1 --beta 2 --gamma 1 --c1 i --c2 1.5707963267948966 "
                                         "--format json");
  CHECK(pt_status == 0);
  CHECK(nlohmann::json::parse(pt_out)["meta"]["max_scaled_defect"].get<double>() <= 1e-12);
  const auto [spec_status, spec_out] =
      shell("spectrum --case 3 --alpha -1 --beta 4.5 --gamma 1.5 --c1 2 --c2 0 --rmin 0 --rmax 12 --n 6000 --tol 1e-3");
  CHECK(spec_status == 0);
  CHECK(spec_out.find("distance_to_E") != std::string::npos);
}
