#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "clhopf/cli/config.hpp"
#include "clhopf/cli/emit.hpp"
#include "clhopf/cli/expr.hpp"
#include "clhopf/cli/run.hpp"
#include "doctest.h"
#include "generators.hpp"
#include <json.hpp>

using namespace clhopf;
using namespace clhopf::cli;

namespace {

const std::set<std::string> kFamily{"r", "s", "t", "u", "v", "z"};

MultiPoly var(const char* name) { return MultiPoly::variable(name); }

std::size_t error_column(const std::string& text, const std::set<std::string>& symbols = kFamily) {
  try {
    (void)parse_expr(text, symbols);
  } catch (const ParseError& e) {
    return e.column;
  }
  return 0;
}

struct Process {
  int status = -1;
  std::string out;
};

Process run_cli(const std::string& args) {
  const std::string cmd = std::string(CLHOPF_CLI_PATH) + " " + args + " 2>/dev/null";
  Process p;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) p.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  p.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return p;
}

std::string config_path(const char* name) { return std::string(CLHOPF_CONFIG_DIR) + "/" + name; }

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("clhopf_test_" + name);
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("expression precedence") {
  CHECK(parse_expr("r^2", kFamily) == var("r") * var("r"));
  CHECK(parse_expr("-t", kFamily) == parse_expr("0 - t", kFamily));
  CHECK(parse_expr("-r^2", kFamily) == -(var("r") * var("r")));
  CHECK(parse_expr("1 + 2*3", kFamily) == MultiPoly(7));
  CHECK(parse_expr("2*-3", kFamily) == MultiPoly(-6));
  CHECK(parse_expr("(1 + r)^2", kFamily) == (var("r") + 1) * (var("r") + 1));
  CHECK(parse_expr("r - s - t", kFamily) == var("r") - var("s") - var("t"));
  CHECK(parse_expr("3/4*r", kFamily) == var("r").scaled(Rational(3, 4)));
  CHECK(parse_expr("0.5", kFamily) == MultiPoly(Rational(1, 2)));
  CHECK(parse_expr("0.25*r", kFamily) == var("r").scaled(Rational(1, 4)));
  CHECK(parse_expr("\xE2\x88\x92z", kFamily) == -var("z"));
  CHECK(parse_expr(" r\t*  s ", kFamily) == var("r") * var("s"));
}

TEST_CASE("expression for the (0, 0) entry of xi o eta") {
  const auto [eta, xi] = parametrized_forms();
  CHECK(parse_expr("u^2*r^2 - z*t", kFamily) == (xi.matrix() * eta.matrix())(0, 0));
}

TEST_CASE("expression errors carry columns") {
  CHECK(error_column("r/2") == 2);
  CHECK(error_column("q + 1") == 1);
  CHECK(error_column("r^2^3") == 4);
  CHECK(error_column("(r + 1") == 7);
  CHECK(error_column("r + ") == 5);
  CHECK(error_column("2 @ 3") == 3);
  CHECK(error_column("r^x") == 3);
  CHECK(error_column("") == 1);
  try {
    (void)parse_expr("r/2", kFamily);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("column 2") == 0);
  }
}

TEST_CASE("parse, render, parse round-trips") {
  SeededRng rng(51);
  const std::vector<std::string> vars(kFamily.begin(), kFamily.end());
  for (int k = 0; k < 200; ++k) {
    const auto p = gen::poly(rng, vars) * gen::poly(rng, vars);
    const auto once = parse_expr(p.to_string(), kFamily);
    CHECK(once == p);
    CHECK(parse_expr(once.to_string(), kFamily).to_string() == p.to_string());
  }
}

TEST_CASE("text and JSON configs are equivalent") {
  const std::string text =
      "# comment\n"
      "dim = 2\n"
      "mode = symbolic\n"
      "symbols = r, t\n"
      "specialize = r=1, t=1/2\n"
      "specialize = r=2, t=0\n"
      "commands = antipode, main-theorem\n"
      "seed = 5\n"
      "count = 10\n"
      "format = text\n"
      "eta:\n"
      "  [r^2, t]\n"
      "  [-t, 0]\n"
      "\n"
      "xi:\n"
      "  1, 0\n"
      "  0, 1\n";
  const std::string json = R"({
    "dim": 2, "mode": "symbolic", "symbols": ["r", "t"],
    "specialize": [{"r": "1", "t": "1/2"}, {"r": 2, "t": 0}],
    "commands": ["antipode", "main-theorem"], "seed": 5, "count": 10, "format": "text",
    "eta": [["r^2", "t"], ["-t", "0"]], "xi": [["1", "0"], ["0", "1"]]
  })";
  const auto a = parse_config(text), b = parse_config(json);
  CHECK(a.dim == b.dim);
  CHECK(a.mode == b.mode);
  CHECK(a.symbols == b.symbols);
  CHECK(a.specializations == b.specializations);
  CHECK(a.commands == b.commands);
  CHECK(a.seed == b.seed);
  CHECK(a.count == b.count);
  CHECK(a.format == b.format);
  CHECK(a.eta == b.eta);
  CHECK(a.xi == b.xi);
  CHECK(a.eta == std::optional<TextMatrix>(TextMatrix{{"r^2", "t"}, {"-t", "0"}}));
  CHECK_NOTHROW(validate(a));
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(parse_config("dim = 2\ndim = 3\n"), InputError);
  CHECK_THROWS_AS(parse_config("colour = red\n"), InputError);
  CHECK_THROWS_AS(parse_config("mode = real\n"), InputError);
  CHECK_THROWS_AS(parse_config("{\"dim\": [1]}"), InputError);
  CHECK_THROWS_AS(parse_config("{not json"), InputError);
  CHECK_THROWS_AS(validate(parse_config("dim = 2\ncommands = nonsense\n")), InputError);
  CHECK_THROWS_AS(validate(parse_config("dim = 2\ncommands = tables\neta:\n  1, 0\n  0, 1\n")), InputError);
  CHECK_THROWS_AS(validate(parse_config("dim = 2\ncommands = tables\neta:\n  1, 0\nxi:\n  1, 0\n")), InputError);
  CHECK_THROWS_AS(validate(parse_config("dim = 2\nsymbols = r\nspecialize = q=1\ncommands = tables\n")), InputError);
  CHECK_THROWS_AS(parse_specialization("r"), InputError);
  CHECK(parse_specialization("r=1, s=3/2") == Assignment{{"r", Rational(1)}, {"s", Rational(3, 2)}});
  CHECK(std::find(known_commands().begin(), known_commands().end(), "crossing") != known_commands().end());
}

TEST_CASE("library run: Grassmann antipode report") {
  auto config = load_config(config_path("grassmann_zero.cfg"));
  config.commands = {"antipode"};
  const auto result = run(config);
  CHECK(result.exit_code == 0);
  REQUIRE(result.reports.size() == 1);
  const auto j = report_json(result.reports.front());
  bool found = false;
  for (const auto& m : j["maps"])
    if (m["name"] == "S") {
      found = true;
      std::vector<std::string> texts;
      for (const auto& img : m["images"]) texts.push_back(img["text"]);
      CHECK(texts == std::vector<std::string>{"1", "-e1", "-e2", "e12"});
    }
  CHECK(found);
}

TEST_CASE("library run: exit codes") {
  JobConfig bad;
  bad.dim = 2;
  bad.commands = {"bogus"};
  CHECK(run(bad).exit_code == 1);

  auto case_ii = load_config(config_path("case_ii.cfg"));
  case_ii.commands = {"antipode"};
  CHECK(run(case_ii).exit_code == 0);

  auto anti = load_config(config_path("antisymmetric.cfg"));
  anti.commands = {"splitting"};
  CHECK(run(anti).exit_code == 2);

  auto symbolic = load_config(config_path("eq_eta_points.cfg"));
  symbolic.mode = CoefficientMode::Rational;
  symbolic.specializations.clear();
  CHECK(run(symbolic).exit_code == 1);  // symbols left unspecialized
}

TEST_CASE("JSON report layout") {
  auto config = load_config(config_path("dim1.cfg"));
  const auto result = run(config);
  const auto j = nlohmann::json::parse(render_json(result));
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["exit_code"] == result.exit_code);
  REQUIRE(j["reports"].is_array());
  for (const auto& r : j["reports"]) {
    CHECK(r.contains("theorem"));
    CHECK(r["context"]["dim"] == 1);
    for (const auto& c : r["checks"]) {
      CHECK(c["anchor"] == claim_anchor(c["id"]));
      const std::string s = c["status"];
      CHECK((s == "pass" || s == "fail" || s == "not-applicable"));
    }
  }
  const std::string text = render_text(result);
  CHECK(text.find("PASS") != std::string::npos);
}

TEST_CASE("binary: exit codes and byte-identical reports") {
  const auto ok = run_cli("--config " + config_path("grassmann_zero.cfg"));
  CHECK(ok.status == 0);
  const auto again = run_cli("--config " + config_path("grassmann_zero.cfg"));
  CHECK(again.out == ok.out);
  CHECK_FALSE(ok.out.empty());

  const auto sweep_a = run_cli("--command sweep,splitting --count 40 --seed 9");
  const auto sweep_b = run_cli("--command sweep,splitting --count 40 --seed 9");
  CHECK(sweep_a.status == 2);
  CHECK(sweep_a.out == sweep_b.out);
  const auto other_seed = run_cli("--command sweep --count 40 --seed 10");
  CHECK(other_seed.out != run_cli("--command sweep --count 40 --seed 9").out);

  CHECK(run_cli("--command bogus").status == 1);
  CHECK(run_cli("--config /nonexistent/file.cfg").status == 1);
  CHECK(run_cli("--format yaml --command gl").status == 1);
  CHECK(run_cli("--config " + config_path("eq_eta_points.cfg") + " --specialize q=1").status == 1);

  const auto path = temp_file("bad_expr.cfg", "dim = 1\ncommands = tables\neta:\n  1/\nxi:\n  0\n");
  CHECK(run_cli("--config " + path.string()).status == 1);
  std::filesystem::remove(path);

  const auto version = run_cli("--version");
  CHECK(version.status == 0);
  CHECK(version.out.find("clhopf") != std::string::npos);
}

TEST_CASE("binary: text format and output file") {
  const auto out = std::filesystem::temp_directory_path() / "clhopf_test_report.txt";
  const auto p = run_cli("--config " + config_path("grassmann_zero.cfg") + " --format text --out " + out.string());
  CHECK(p.status == 0);
  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().find("PASS") != std::string::npos);
  std::filesystem::remove(out);
}
