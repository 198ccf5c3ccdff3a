#include "commands.hpp"
#include "doctest.h"
#include "llv/errors.hpp"
#include "llv/report.hpp"

using namespace llv;

TEST_CASE("report records and rendering") {
  Report r;
  r.command = "validate";
  r.subject = "demo";
  r.add("a", "first statement", Verdict::pass, {}, {{"dims", {1, 2, 1}}});
  r.add("b", "second statement", Verdict::skip, "nothing to check");
  CHECK(r.exit_code() == 0);
  CHECK_THROWS_AS(r.add("c", "third", Verdict::fail), ValidationError);
  r.add("c", "third", Verdict::fail, "broken");
  CHECK(r.exit_code() == 1);
  CHECK(r.count(Verdict::pass) == 1);
  auto text = r.to_text();
  CHECK(text.find("[FAIL] c (third)") != std::string::npos);
  CHECK(text.find("summary: 1 pass, 1 fail, 1 skip") != std::string::npos);
  auto back = Report::from_json(r.to_json());
  CHECK(back.to_json() == r.to_json());
  CHECK(back.to_text() == text);
  CHECK_THROWS_AS(Report::from_json("{\"command\": 1}"), ParseError);
}

TEST_CASE("command reports replay identically") {
  cli::RunConfig c;
  c.command = "pw";
  c.fixture = "bogomolov";
  auto a = cli::run(c).to_json();
  CHECK(a == cli::run(c).to_json());
  CHECK(Report::from_json(a).to_json() == a);
}

TEST_CASE("command configuration errors") {
  cli::RunConfig c;
  c.command = "llv";
  CHECK_THROWS_AS(cli::run(c), cli::UsageError);
  c.fixture = "k3";
  c.beta = "1,0";
  CHECK_THROWS_AS(cli::run(c), cli::UsageError);
  c.beta.clear();
  c.command = "nope";
  CHECK_THROWS_AS(cli::run(c), cli::UsageError);
  c.command = "kuga";
  c.fixture.clear();
  c.q = "diag:1,1,-1";
  c.dim = 4;
  CHECK_THROWS_AS(cli::run(c), cli::UsageError);
}
