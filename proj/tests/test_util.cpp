#include <doctest.h>

#include <cstdlib>
#include <string>

#include "gramburst/rng.hpp"
#include "gramburst/util.hpp"

using namespace gramburst;

TEST_CASE("fnv1a64 reference vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(fnv1a64_hex("a") != fnv1a64_hex("b"));
}

TEST_CASE("csv_escape quotes only when needed") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("with,comma") == "\"with,comma\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_escape("line\nbreak") == "\"line\nbreak\"");
}

TEST_CASE("format_double") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(7.0) == "7");
  CHECK(format_double(240.0) == "240");     // no exponent for integral values
  CHECK(format_double(-1200.0) == "-1200");
  CHECK(format_double(2.5) == "2.5");
  CHECK(format_double(0.1) == "0.1");

  SUBCASE("always round-trips") {
    SplitMix64 rng(61);
    for (int trial = 0; trial < 500; ++trial) {
      const double v = (rng.unit() - 0.5) * 1e6;
      const std::string s = format_double(v);
      CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
  }
}
