#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "llv/fixtures.hpp"
#include "llv/ring_io.hpp"

using namespace llv;
using Q = Rational;

namespace {

// degree-2 ring on one class x with x^2 = 2 pt, written by hand
const char* kTiny = R"({
  "top_degree": 2,
  "dims": [1, 0, 1],
  "basis": [["1"], [], ["x"]],
  "products": [
    {"i": 0, "j": 0, "k": 0, "coeff": "1"},
    {"i": 0, "j": 1, "k": 1, "coeff": "1"},
    {"i": 1, "j": 0, "k": 1, "coeff": "1"}
  ],
  "integration": ["1/2"]
})";

std::string replace(std::string s, const std::string& from, const std::string& to) {
  auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("hand-written ring parses and validates") {
  auto d = parse_ring<Q>(kTiny);
  CHECK(d.ring.size() == 2);
  CHECK(d.ring.label(1) == "x");
  CHECK(d.ring.integration() == Vec<Q>{Q(1, 2)});
  CHECK(validate(d.ring).ok);
  CHECK_FALSE(d.bigrading);
}

TEST_CASE("K3 fixture round trip") {
  auto q = k3_form();
  auto r = k3_ring(q);
  auto text = dump_ring(describe(r, std::optional<QuadraticForm>(q)));
  auto back = parse_ring<Q>(text);
  CHECK(back.ring == r);
  CHECK(back.ring.labels() == r.labels());
  REQUIRE(back.quadratic_form);
  CHECK(back.quadratic_form->gram() == q.gram());
  CHECK(dump_ring(back) == text);

  auto path = (std::filesystem::temp_directory_path() / "llv_k3_roundtrip.json").string();
  save_ring(back, path);
  CHECK(load_ring<Q>(path).ring == r);
  std::remove(path.c_str());
}

TEST_CASE("bigraded round trip over both fields") {
  auto t = torus_bigraded(2);
  auto d = describe(t);
  auto back = bigraded(parse_ring<Q>(dump_ring(d)));
  CHECK(back.ring == t.ring);
  CHECK(back.pq == t.pq);
  CHECK(back.sigma == t.sigma);
  CHECK(validate_bigrading(back).ok);

  auto g = t.cast<Gaussian>();
  auto gb = bigraded(parse_ring<Gaussian>(dump_ring(describe(g))));
  CHECK(gb.ring == g.ring);
}

TEST_CASE("gaussian coefficients") {
  auto text = replace(kTiny, "\"integration\": [\"1/2\"]", "\"integration\": [\"1/2+3/4 i\"]");
  auto d = parse_ring<Gaussian>(text);
  CHECK(d.ring.integration()[0] == Gaussian(Q(1, 2), Q(3, 4)));
  CHECK_THROWS_WITH_AS(parse_ring<Q>(text), doctest::Contains("gaussian"), ParseError);
}

TEST_CASE("missing symmetry partner is a commutativity failure") {
  auto text = replace(kTiny, ",\n    {\"i\": 1, \"j\": 0, \"k\": 1, \"coeff\": \"1\"}", "");
  auto d = parse_ring<Q>(text);
  auto rep = validate(d.ring);
  CHECK_FALSE(rep.ok);
  bool found = false;
  for (const auto& s : rep.issues) found = found || s.find("graded-commutativity") != std::string::npos;
  CHECK(found);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_ring<Q>("{ \"top_degree\": 2, "), ParseError);
  try {
    parse_ring<Q>(replace(kTiny, "\"1/2\"", "0.5"));
    FAIL("float accepted");
  } catch (const ParseError& e) {
    CHECK(e.field() == "integration[0]");
    CHECK(e.line() == 10);
  }
  CHECK_THROWS_AS(parse_ring<Q>(replace(kTiny, "\"coeff\": \"1\"}", "\"coeff\": \"1/0\"}")), ParseError);
  CHECK_THROWS_AS(parse_ring<Q>(replace(kTiny, "\"top_degree\": 2,", "")), ParseError);
  CHECK_THROWS_AS(parse_ring<Q>(replace(kTiny, "\"dims\": [1, 0, 1]", "\"dims\": [1, 1]")), DimensionError);
  CHECK_THROWS_AS(parse_ring<Q>(replace(kTiny, "[[\"1\"], [], [\"x\"]]", "[[\"1\"], [\"y\"], [\"x\"]]")),
                  DimensionError);
  CHECK_THROWS_AS(parse_ring<Q>(replace(kTiny, "\"k\": 0", "\"k\": 7")), DimensionError);
  CHECK_THROWS_AS(parse_ring<Q>(replace(kTiny, "\"j\": 0, \"k\": 0", "\"j\": 0, \"k\": 1")), ValidationError);
  CHECK_THROWS_AS(parse_ring<Q>(replace(kTiny, "[\"1/2\"]", "[\"1/2\", \"1\"]")), DimensionError);
}

TEST_CASE("bigrading must add up to the degree") {
  auto good = replace(kTiny, "\"integration\"", "\"bigrading\": [[0, 0], [1, 1]],\n  \"integration\"");
  CHECK(parse_ring<Q>(good).bigrading->at(1) == std::pair{1, 1});
  auto bad = replace(kTiny, "\"integration\"", "\"bigrading\": [[0, 0], [2, 1]],\n  \"integration\"");
  CHECK_THROWS_WITH_AS(parse_ring<Q>(bad), doctest::Contains("does not add up"), ParseError);
  auto short_list = replace(kTiny, "\"integration\"", "\"bigrading\": [[0, 0]],\n  \"integration\"");
  CHECK_THROWS_AS(parse_ring<Q>(short_list), DimensionError);
  // no (2,0) element to serve as sigma
  CHECK_THROWS_AS(bigraded(parse_ring<Q>(good)), ValidationError);
}

TEST_CASE("quadratic form field") {
  auto text = replace(kTiny, "\"integration\"", "\"quadratic_form\": [[\"2\"]],\n  \"integration\"");
  auto d = parse_ring<Q>(text);
  REQUIRE(d.quadratic_form);
  CHECK(d.quadratic_form->gram()(0, 0) == Q(2));
  auto bad = replace(kTiny, "\"integration\"", "\"quadratic_form\": [[\"2\", \"1\"]],\n  \"integration\"");
  CHECK_THROWS_AS(parse_ring<Q>(bad), DimensionError);
}
