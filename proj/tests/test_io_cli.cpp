#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sympow/cli.hpp"
#include "sympow/errors.hpp"
#include "sympow/variety_io.hpp"

using namespace sympow;

namespace {

template <class F>
ParseError parse_error_of(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no ParseError");
  return ParseError("", 0, 0);
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path.string();
}

}  // namespace

TEST_CASE("variety stanzas") {
  const auto v = io::parse_varieties(
      "# two varieties\n"
      "label=circle; q=3; vars=x,y\n"
      "eqs: x^2 + y^2 - 1\n"
      "\n"
      "label=plane; q=5; vars=u,v; eqs:\n");
  REQUIRE(v.size() == 2);
  CHECK(v[0].label == "circle");
  CHECK(v[0].q == 3);
  CHECK(v[0].nvars() == 2);
  CHECK(v[0].equations.size() == 1);
  CHECK(v[1].equations.empty());
  CHECK(v[1].q == 5);
  CHECK(io::parse_varieties("label=a; q=4; vars=x; eqs: x^2 + x; x").at(0).equations.size() == 2);
}

TEST_CASE("variety parse errors carry positions") {
  auto e = parse_error_of([] { io::parse_varieties("label=a; q=2; vars=x\neqs: x + y"); });
  CHECK(e.line() == 2);
  CHECK(e.column() == 10);
  e = parse_error_of([] { io::parse_varieties("label=a; q=2; colour=red; vars=x; eqs:"); });
  CHECK(e.line() == 1);
  e = parse_error_of([] { io::parse_varieties("q=2; vars=x; eqs:"); });
  CHECK(e.line() == 1);
  e = parse_error_of([] { io::parse_varieties("label=a; q=2; vars=x; eqs:\n\nlabel=b; q=6; vars=x; eqs:"); });
  CHECK(e.line() == 3);
  CHECK_THROWS_AS(io::parse_varieties("label=a; q=2; q=3; vars=x; eqs:"), ParseError);
}

TEST_CASE("extension files") {
  const auto l = io::parse_extension("q=4; r=2\nmodulus=t^2 + t + 2\n");
  CHECK(l.modulus_str() == "t^2 + t + 2");
  CHECK(io::parse_extension("q=3; r=2").modulus_str() == "t^2 + 1");
  CHECK(io::parse_extension("q=3; r=2; modulus=t^2 + 4").modulus_str() == "t^2 + 1");
  CHECK_THROWS_AS(io::parse_extension("q=2; r=2; modulus=t^2 + 1"), ParseError);
  CHECK_THROWS_AS(io::parse_extension("q=2; r=3; modulus=t^2 + t + 1"), ParseError);
  CHECK_THROWS_AS(io::parse_extension("q=4; r=2; modulus=t^2 + t + 7"), ParseError);
  CHECK_THROWS_AS(io::parse_extension("r=2"), ParseError);
  CHECK_THROWS_AS(io::read_file("/nonexistent/sympow/input.txt"), InvalidInput);
}

TEST_CASE("caps specifications") {
  const auto caps = cli::parse_caps("max_vars=5,max_points=100");
  CHECK(caps.max_vars == 5);
  CHECK(caps.max_points == 100);
  CHECK(cli::parse_caps("").max_vars == Caps{}.max_vars);
  CHECK_THROWS_AS(cli::parse_caps("max_vars"), InvalidInput);
  CHECK_THROWS_AS(cli::parse_caps("max_vars=x"), InvalidInput);
  CHECK_THROWS_AS(cli::parse_caps("colour=3"), InvalidInput);
}

TEST_CASE("cli exit codes") {
  std::ostringstream out, err;
  cli::RunConfig ok;
  ok.command = "sym-count";
  ok.q = 3;
  ok.n = 2;
  CHECK(cli::run(ok, out, err) == 0);
  const auto j = reports::Json::parse(out.str());
  CHECK(j["ok"] == true);
  CHECK(j["reports"][0]["count"] == 9);

  cli::RunConfig unknown;
  unknown.command = "frobnicate";
  std::ostringstream out2;
  CHECK(cli::run(unknown, out2, err) == 2);
  CHECK(reports::Json::parse(out2.str())["error"]["kind"] == "invalid-input");

  cli::RunConfig capped;
  capped.command = "transfer";
  capped.d = 4;
  capped.n = 4;
  capped.caps.max_module_dim = 16;
  std::ostringstream out3;
  CHECK(cli::run(capped, out3, err) == 2);
  CHECK(reports::Json::parse(out3.str())["error"]["kind"] == "cap");

  cli::RunConfig bad;
  bad.command = "kunneth";
  bad.input_path = temp_file("sympow_bad.txt", "label=a; q=2; vars=x\neqs: x +\n");
  std::ostringstream out4;
  CHECK(cli::run(bad, out4, err) == 2);
  const auto e = reports::Json::parse(out4.str())["error"];
  CHECK(e["kind"] == "parse");
  CHECK(e["line"] == 2);
}

TEST_CASE("cli output is deterministic") {
  for (const auto& command : cli::commands()) {
    if (command == "suite") continue;
    cli::RunConfig c;
    c.command = command;
    std::ostringstream a, b, err;
    const int ra = cli::run(c, a, err);
    const int rb = cli::run(c, b, err);
    CHECK_MESSAGE(ra == 0, command);
    CHECK(ra == rb);
    CHECK(a.str() == b.str());
  }
}

TEST_CASE("output file") {
  cli::RunConfig c;
  c.command = "prop81";
  c.output_path = (std::filesystem::temp_directory_path() / "sympow_out.json").string();
  std::ostringstream out, err;
  CHECK(cli::run(c, out, err) == 0);
  CHECK(out.str().empty());
  const auto j = reports::Json::parse(io::read_file(*c.output_path));
  CHECK(j["command"] == "prop81");
}
